import csv
import io
import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from fsweval.common.config import MetricParams
from fsweval.common.debug import debug_timing, fsweval_logger
from fsweval.corpus.loader import CorpusEntry
from fsweval.fsw.parser import serialize_sign
from fsweval.fsw.symbol import Sign
from fsweval.metrics.base import SignMetric
from fsweval.metrics.matrix import resolve_metric, score_against, score_matrix


logger = fsweval_logger

DEFAULT_BINS = 50
DEFAULT_K = 10


@dataclass(frozen=True)
class Histogram:
    bin_edges: Tuple[float, ...]
    counts: Tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        assert len(self.bin_edges) == len(self.counts) + 1
        assert sum(self.counts) == self.total
        assert self.bin_edges[0] == 0.0 and self.bin_edges[-1] == 1.0
        assert all(a < b for a, b in zip(self.bin_edges, self.bin_edges[1:]))

    @property
    def num_bins(self) -> int:
        return len(self.counts)

    @classmethod
    def from_scores(cls, scores: Sequence[float], bins: int = DEFAULT_BINS) -> "Histogram":
        if bins < 2:
            raise ValueError(f"bins must be at least 2, got {bins}")
        edges = np.linspace(0.0, 1.0, bins + 1)
        # equal-width bins, the last one closed on the right
        counts, _ = np.histogram(np.asarray(scores, dtype=np.float64), bins=edges)
        return cls(bin_edges=tuple(float(e) for e in edges),
                   counts=tuple(int(c) for c in counts),
                   total=int(counts.sum()))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["bin_start", "bin_end", "count"])
        for start, end, count in zip(self.bin_edges, self.bin_edges[1:], self.counts):
            writer.writerow([f"{start:.6f}", f"{end:.6f}", count])
        return buffer.getvalue()


@dataclass(frozen=True)
class NeighborList:
    query_id: str
    entries: Tuple[Tuple[str, float], ...]
    k: int

    def __post_init__(self) -> None:
        scores = [score for _, score in self.entries]
        assert all(a >= b for a, b in zip(scores, scores[1:])), "neighbors must be sorted by score"
        assert len(self.entries) <= self.k

    @property
    def ids(self) -> List[str]:
        return [entry_id for entry_id, _ in self.entries]

    def to_json(self) -> str:
        # scores at exactly 6 decimals
        if not self.entries:
            return "[]\n"
        rows = [f'  {{"id": {json.dumps(entry_id)}, "score": {score:.6f}}}' for entry_id, score in self.entries]
        return "[\n" + ",\n".join(rows) + "\n]\n"


def pair_scores(sample: Sequence[CorpusEntry],
                metric: Union[str, SignMetric],
                params: Optional[MetricParams] = None,
                num_workers: int = 1) -> np.ndarray:
    """Scores of every ordered pair (i, j), i != j, in row-major order."""
    if len(sample) < 2:
        raise ValueError(f"need at least 2 signs, got {len(sample)}")
    matrix = score_matrix([entry.sign for entry in sample], metric, params,
                          labels=[entry.id for entry in sample], num_workers=num_workers)
    off_diagonal = ~np.eye(len(sample), dtype=bool)
    return matrix[off_diagonal]


@debug_timing("score_distribution")
def score_distribution(sample: Sequence[CorpusEntry],
                       metric: Union[str, SignMetric],
                       params: Optional[MetricParams] = None,
                       bins: int = DEFAULT_BINS,
                       num_workers: int = 1) -> Histogram:
    if bins < 2:
        raise ValueError(f"bins must be at least 2, got {bins}")
    return Histogram.from_scores(pair_scores(sample, metric, params, num_workers), bins)


@debug_timing("nearest_neighbors")
def nearest_neighbors(query: Sign,
                      corpus: Sequence[CorpusEntry],
                      metric: Union[str, SignMetric],
                      params: Optional[MetricParams] = None,
                      k: int = DEFAULT_K,
                      query_id: Optional[str] = None,
                      num_workers: int = 1) -> NeighborList:
    """Exhaustive top-k scan. Entries that serialize to the query itself are skipped."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not corpus:
        raise ValueError("corpus is empty")
    scorer = resolve_metric(metric, params)
    query_key = serialize_sign(query)
    candidates = [entry for entry in corpus if serialize_sign(entry.sign) != query_key]
    logger.debug(f"nearest_neighbors: {len(corpus) - len(candidates)} entries equal the query")

    scores = score_against(query, [entry.sign for entry in candidates], scorer,
                           query_label=query_id, labels=[entry.id for entry in candidates],
                           num_workers=num_workers)
    # ordering applied after scoring: descending score, then ascending id
    ranked = sorted(zip(scores, (entry.id for entry in candidates)), key=lambda item: (-item[0], item[1]))
    return NeighborList(query_id=query_id if query_id is not None else query_key,
                        entries=tuple((entry_id, float(score)) for score, entry_id in ranked[:k]),
                        k=k)
