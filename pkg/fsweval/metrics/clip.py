"""Cosine scoring over externally computed image embeddings.

Embeddings are produced outside this package (for example by rendering each
sign and running an image encoder) and arrive as a text file, one record per
line: ``id<TAB>v1,v2,...,vn``.
"""
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional

import numpy as np

from fsweval.common.debug import fsweval_logger
from fsweval.common.exceptions import (CorpusError, DimensionMismatch, DuplicateId, UnknownEmbedding,
                                       ZeroVector)
from fsweval.fsw.parser import serialize_sign
from fsweval.fsw.symbol import Sign
from fsweval.metrics.base import SignMetric, clamp_unit


logger = fsweval_logger


@dataclass(frozen=True)
class Embedding:
    id: str
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise ValueError(f"embedding {self.id!r} must be a non-empty vector")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"embedding {self.id!r} has non-finite components")
        object.__setattr__(self, "values", values)

    @property
    def dimension(self) -> int:
        return int(self.values.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))


def cosine_score(a: Embedding, b: Embedding) -> float:
    if a.dimension != b.dimension:
        raise DimensionMismatch(f"cannot compare {a.id!r} with {b.id!r}",
                                expected=a.dimension, actual=b.dimension)
    norm_a, norm_b = a.norm, b.norm
    if norm_a == 0.0:
        raise ZeroVector(f"embedding {a.id!r} is all zeros")
    if norm_b == 0.0:
        raise ZeroVector(f"embedding {b.id!r} is all zeros")
    cos = float(np.dot(a.values, b.values)) / (norm_a * norm_b)
    cos = min(max(cos, -1.0), 1.0)
    return clamp_unit((1.0 + cos) / 2.0)


class EmbeddingTable:
    def __init__(self, embeddings: Iterable[Embedding]):
        self._by_id: Dict[str, Embedding] = {}
        self.dimension: Optional[int] = None
        for embedding in embeddings:
            self.add(embedding)

    def add(self, embedding: Embedding) -> None:
        if embedding.id in self._by_id:
            raise DuplicateId(f"embedding id {embedding.id!r} appears twice")
        if self.dimension is None:
            self.dimension = embedding.dimension
        elif embedding.dimension != self.dimension:
            raise DimensionMismatch(f"embedding {embedding.id!r} has a different dimension",
                                    expected=self.dimension, actual=embedding.dimension)
        self._by_id[embedding.id] = embedding

    def __len__(self) -> int:
        return len(self._by_id)

    def __contains__(self, key: str) -> bool:
        return key in self._by_id

    def get(self, key: str) -> Embedding:
        try:
            return self._by_id[key]
        except KeyError:
            raise UnknownEmbedding(f"no embedding for {key!r}") from None

    def resolve(self, *keys: Optional[str]) -> Embedding:
        """First embedding found among ``keys``."""
        candidates = [key for key in keys if key is not None]
        for key in candidates:
            if key in self._by_id:
                return self._by_id[key]
        raise UnknownEmbedding(f"no embedding for any of {candidates}")

    @classmethod
    def load(cls, path: str) -> "EmbeddingTable":
        table = cls([])
        try:
            with open(path, "r", encoding="utf-8") as f:
                for line_no, line in enumerate(f, start=1):
                    line = line.rstrip("\r\n")
                    if not line.strip():
                        continue
                    table.add(_parse_record(line, line_no, path))
        except (OSError, UnicodeDecodeError) as e:
            raise CorpusError(f"cannot read embeddings: {e}", path=path) from e
        logger.info(f"loaded {len(table)} embeddings of dimension {table.dimension} from {path}")
        return table


def _parse_record(line: str, line_no: int, path: str) -> Embedding:
    if "\t" not in line:
        raise CorpusError(f"line {line_no}: expected id<TAB>values", path=path)
    key, raw_values = line.split("\t", 1)
    try:
        values = [float(v) for v in raw_values.split(",")]
    except ValueError:
        raise CorpusError(f"line {line_no}: embedding values must be decimal reals", path=path) from None
    if not all(math.isfinite(v) for v in values):
        raise CorpusError(f"line {line_no}: embedding values must be finite", path=path)
    return Embedding(key, np.array(values, dtype=np.float64))


def _sign_keys(sign: Sign) -> List[str]:
    keys = [serialize_sign(sign)]
    if sign.sequence is not None:
        keys.append(serialize_sign(replace(sign, sequence=None)))
    return keys


class CosineMetric(SignMetric):
    """Signs are resolved to embeddings by corpus id first, then by FSW serialization."""

    name = "cosine"
    symmetric = True

    def __init__(self, table: EmbeddingTable, params=None):
        super().__init__(params)
        self.table = table

    def embedding_for(self, sign: Sign, label: Optional[str] = None) -> Embedding:
        return self.table.resolve(label, *_sign_keys(sign))

    def score(self, hypothesis: Sign, reference: Sign) -> float:
        return cosine_score(self.embedding_for(hypothesis), self.embedding_for(reference))

    def score_labeled(self,
                      hypothesis: Sign,
                      reference: Sign,
                      hypothesis_id: Optional[str] = None,
                      reference_id: Optional[str] = None) -> float:
        return cosine_score(self.embedding_for(hypothesis, hypothesis_id),
                            self.embedding_for(reference, reference_id))

    def score_keys(self, hypothesis_key: str, reference_key: str) -> float:
        return cosine_score(self.table.get(hypothesis_key), self.table.get(reference_key))
