import multiprocessing as mp
from typing import List, Optional, Sequence, Union

import numpy as np

from fsweval.common.config import MetricParams
from fsweval.common.debug import debug_timing, fsweval_logger
from fsweval.fsw.symbol import Sign
from fsweval.metrics.base import SignMetric


logger = fsweval_logger

# per-process state for pool workers
_WORKER_METRIC: Optional[SignMetric] = None
_WORKER_SIGNS: Sequence[Sign] = ()
_WORKER_LABELS: Sequence[Optional[str]] = ()


def _init_worker(metric: SignMetric, signs: Sequence[Sign], labels: Sequence[Optional[str]]) -> None:
    global _WORKER_METRIC, _WORKER_SIGNS, _WORKER_LABELS
    _WORKER_METRIC = metric
    _WORKER_SIGNS = signs
    _WORKER_LABELS = labels


def _score_cells(metric: SignMetric,
                 signs: Sequence[Sign],
                 labels: Sequence[Optional[str]],
                 row: int,
                 columns: Sequence[int]) -> List[float]:
    return [metric.score_labeled(signs[row], signs[j], labels[row], labels[j]) for j in columns]


def _row_columns(row: int, n: int, symmetric: bool) -> range:
    return range(row, n) if symmetric else range(n)


def _worker_row(task: tuple) -> List[float]:
    row, symmetric = task
    assert _WORKER_METRIC is not None
    return _score_cells(_WORKER_METRIC, _WORKER_SIGNS, _WORKER_LABELS, row,
                        _row_columns(row, len(_WORKER_SIGNS), symmetric))


def resolve_metric(metric: Union[str, SignMetric], params: Optional[MetricParams]) -> SignMetric:
    if isinstance(metric, SignMetric):
        return metric
    from fsweval.metrics import get_metric
    return get_metric(metric, params)


@debug_timing("score_matrix")
def score_matrix(signs: Sequence[Sign],
                 metric: Union[str, SignMetric],
                 params: Optional[MetricParams] = None,
                 labels: Optional[Sequence[Optional[str]]] = None,
                 num_workers: int = 1) -> np.ndarray:
    """M[i][j] = metric(signs[i], signs[j]).

    Symmetric metrics score the upper triangle and mirror it. Rows may be
    fanned out over a process pool; results are placed by index, so the
    matrix does not depend on the worker count.
    """
    if len(signs) < 2:
        raise ValueError(f"score_matrix needs at least 2 signs, got {len(signs)}")
    scorer = resolve_metric(metric, params)
    labels = list(labels) if labels is not None else [None] * len(signs)
    if len(labels) != len(signs):
        raise ValueError("labels must match signs one to one")

    n = len(signs)
    symmetric = scorer.symmetric
    tasks = [(row, symmetric) for row in range(n)]
    if num_workers > 1:
        logger.debug(f"scoring {n}x{n} {scorer.name} matrix on {num_workers} workers")
        ctx = mp.get_context("spawn")
        with ctx.Pool(num_workers, initializer=_init_worker, initargs=(scorer, list(signs), labels)) as pool:
            rows = pool.map(_worker_row, tasks, chunksize=max(1, n // (num_workers * 4)))
    else:
        rows = [_score_cells(scorer, signs, labels, row, _row_columns(row, n, symmetric))
                for row, _ in tasks]

    matrix = np.empty((n, n), dtype=np.float64)
    for row, values in enumerate(rows):
        columns = _row_columns(row, n, symmetric)
        matrix[row, columns.start:columns.stop] = values
        if symmetric:
            matrix[columns.start:columns.stop, row] = values
    return matrix


def _worker_query(task: tuple) -> float:
    query, query_label, index = task
    assert _WORKER_METRIC is not None
    return _WORKER_METRIC.score_labeled(query, _WORKER_SIGNS[index], query_label, _WORKER_LABELS[index])


def score_against(query: Sign,
                  signs: Sequence[Sign],
                  metric: SignMetric,
                  query_label: Optional[str] = None,
                  labels: Optional[Sequence[Optional[str]]] = None,
                  num_workers: int = 1) -> List[float]:
    """metric(query, signs[i]) for every i, in input order."""
    labels = list(labels) if labels is not None else [None] * len(signs)
    if num_workers > 1 and len(signs) > 1:
        ctx = mp.get_context("spawn")
        tasks = [(query, query_label, i) for i in range(len(signs))]
        with ctx.Pool(num_workers, initializer=_init_worker, initargs=(metric, list(signs), labels)) as pool:
            return pool.map(_worker_query, tasks, chunksize=max(1, len(signs) // (num_workers * 4)))
    return [metric.score_labeled(query, sign, query_label, label) for sign, label in zip(signs, labels)]
