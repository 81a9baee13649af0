from typing import Optional

from fsweval.common.config import METRIC_NAMES, MetricParams
from fsweval.common.exceptions import InvalidConfigError
from fsweval.metrics.assignment import AssignmentResult, solve_assignment
from fsweval.metrics.base import ScoreReport, SignMetric
from fsweval.metrics.bleu import BleuMetric, bleu_score
from fsweval.metrics.chrf import ChrfMetric, chrf_score
from fsweval.metrics.clip import CosineMetric, Embedding, EmbeddingTable, cosine_score
from fsweval.metrics.matrix import score_against, score_matrix
from fsweval.metrics.sequence import sequence_score
from fsweval.metrics.symbol_distance import (SymbolDistanceMetric, length_penalty, normalize_distance,
                                             symbol_distance, symbol_distance_matrix, symbol_distance_score)


def get_metric(name: str,
               params: Optional[MetricParams] = None,
               embeddings: Optional[EmbeddingTable] = None) -> SignMetric:
    if name == "bleu":
        return BleuMetric(params)
    if name == "chrf":
        return ChrfMetric(params)
    if name == "symbol_distance":
        return SymbolDistanceMetric(params)
    if name == "cosine":
        if embeddings is None:
            raise InvalidConfigError("metric cosine requires an embedding table")
        return CosineMetric(embeddings, params)
    raise InvalidConfigError(f"unknown metric {name!r}, expected one of {', '.join(METRIC_NAMES)}")


__all__ = [
    "AssignmentResult", "solve_assignment",
    "ScoreReport", "SignMetric", "get_metric",
    "BleuMetric", "bleu_score",
    "ChrfMetric", "chrf_score",
    "CosineMetric", "Embedding", "EmbeddingTable", "cosine_score",
    "score_against", "score_matrix",
    "sequence_score",
    "SymbolDistanceMetric", "length_penalty", "normalize_distance", "symbol_distance",
    "symbol_distance_matrix", "symbol_distance_score",
]
