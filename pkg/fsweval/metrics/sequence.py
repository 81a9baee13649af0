import math
from typing import Callable, Optional, Sequence, Union

import numpy as np

from fsweval.common.config import MetricParams
from fsweval.fsw.symbol import Sign
from fsweval.metrics.assignment import solve_assignment
from fsweval.metrics.base import SignMetric, clamp_unit
from fsweval.metrics.symbol_distance import length_penalty


PairScorer = Callable[[Sign, Sign], float]


def sequence_score(hypothesis: Sequence[Sign],
                   reference: Sequence[Sign],
                   base_metric: Union[SignMetric, PairScorer],
                   params: Optional[MetricParams] = None) -> float:
    """Score continuous signing by matching the two sign sequences as sets.

    Signs are paired by an optimal assignment on ``1 - similarity``; the mean
    matched similarity is discounted by the length penalty on sign counts.
    """
    if not hypothesis or not reference:
        raise ValueError("sequence scoring needs at least one sign on each side")
    if params is None:
        params = base_metric.params if isinstance(base_metric, SignMetric) else MetricParams()

    similarity = np.array([[base_metric(h, r) for r in reference] for h in hypothesis], dtype=np.float64)
    result = solve_assignment(1.0 - similarity)
    mean_similarity = math.fsum(float(similarity[i, j]) for i, j in result.pairs) / len(result.pairs)
    penalty = length_penalty(len(hypothesis), len(reference), params.beta)
    return clamp_unit(mean_similarity * (1.0 - penalty))
