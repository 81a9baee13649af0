import math
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np

from fsweval.common.config import MetricParams
from fsweval.fsw.categories import category_index
from fsweval.fsw.symbol import MAX_FILL, ROTATIONS_PER_PLANE, Sign, Symbol
from fsweval.metrics.assignment import solve_assignment
from fsweval.metrics.base import SignMetric, clamp_unit


SAME_CATEGORY_SHAPE_DISTANCE = 0.5
MIRROR_DISTANCE = 0.5

# feature columns
_BASE, _CATEGORY, _FILL, _ROTATION, _X, _Y = range(6)


@lru_cache(maxsize=65536)
def _features(symbols: Tuple[Symbol, ...]) -> np.ndarray:
    features = np.array(
        [(s.key.base, category_index(s.key.base), s.key.fill, s.key.rotation, s.x, s.y) for s in symbols],
        dtype=np.float64,
    ).reshape(len(symbols), 6)
    features.setflags(write=False)
    return features


def symbol_distance_matrix(hypothesis: Sequence[Symbol],
                           reference: Sequence[Symbol],
                           params: MetricParams) -> np.ndarray:
    """Raw attribute-weighted distances, shape (len(hypothesis), len(reference)), values in [0, 1]."""
    a = _features(tuple(hypothesis))
    b = _features(tuple(reference))

    same_base = a[:, None, _BASE] == b[None, :, _BASE]
    same_category = a[:, None, _CATEGORY] == b[None, :, _CATEGORY]
    shape = np.where(same_base, 0.0, np.where(same_category, SAME_CATEGORY_SHAPE_DISTANCE, 1.0))

    fill = np.abs(a[:, None, _FILL] - b[None, :, _FILL]) / MAX_FILL

    # circular distance on the 8-step wheel; crossing mirror planes adds a flat penalty
    half = ROTATIONS_PER_PLANE / 2
    steps = np.abs(np.mod(a[:, None, _ROTATION], ROTATIONS_PER_PLANE)
                   - np.mod(b[None, :, _ROTATION], ROTATIONS_PER_PLANE))
    wheel = np.minimum(steps, ROTATIONS_PER_PLANE - steps) / half
    mirrored = (a[:, None, _ROTATION] >= ROTATIONS_PER_PLANE) != (b[None, :, _ROTATION] >= ROTATIONS_PER_PLANE)
    rotation = np.where(mirrored, np.minimum(wheel + MIRROR_DISTANCE, 1.0), wheel)

    euclidean = np.hypot(a[:, None, _X] - b[None, :, _X], a[:, None, _Y] - b[None, :, _Y])
    position = np.minimum(euclidean / params.position_scale, 1.0)

    distance = (params.shape_weight * shape
                + params.fill_weight * fill
                + params.rotation_weight * rotation
                + params.position_weight * position)
    return np.clip(distance, 0.0, 1.0)


def symbol_distance(a: Symbol, b: Symbol, params: Optional[MetricParams] = None) -> float:
    return float(symbol_distance_matrix((a,), (b,), params or MetricParams())[0, 0])


def normalize_distance(d: float, alpha: float) -> float:
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"distance must be in [0, 1], got {d}")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return d ** alpha


def length_penalty(n_hyp: int, n_ref: int, beta: float) -> float:
    """|n_hyp - n_ref| / (max(n_hyp, n_ref) + 1), raised to beta. Always in [0, 1)."""
    if n_hyp < 0 or n_ref < 0:
        raise ValueError(f"symbol counts must be non-negative, got {n_hyp} and {n_ref}")
    if n_hyp == 0 and n_ref == 0:
        raise ValueError("length penalty is undefined when both counts are zero")
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return (abs(n_hyp - n_ref) / (max(n_hyp, n_ref) + 1)) ** beta


def mean_matched_distance(hypothesis: Sign, reference: Sign, params: MetricParams) -> float:
    """Mean normalized distance over optimally matched symbol pairs; 0 when nothing can be matched."""
    if hypothesis.is_empty() or reference.is_empty():
        return 0.0
    cost = np.power(symbol_distance_matrix(hypothesis.symbols, reference.symbols, params), params.alpha)
    result = solve_assignment(cost)
    # fsum is exactly rounded, so the mean does not depend on pair order
    return math.fsum(float(cost[i, j]) for i, j in result.pairs) / len(result.pairs)


def symbol_distance_score(hypothesis: Sign, reference: Sign, params: Optional[MetricParams] = None) -> float:
    params = params or MetricParams()
    n_hyp, n_ref = hypothesis.num_symbols, reference.num_symbols
    if n_hyp == 0 and n_ref == 0:
        return 1.0
    penalty = length_penalty(n_hyp, n_ref, params.beta)
    mean_distance = mean_matched_distance(hypothesis, reference, params)
    return clamp_unit(((1.0 - mean_distance) * (1.0 - penalty)) ** params.gamma)


class SymbolDistanceMetric(SignMetric):
    name = "symbol_distance"
    symmetric = True

    def score(self, hypothesis: Sign, reference: Sign) -> float:
        return symbol_distance_score(hypothesis, reference, self.params)
