from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from fsweval.common.config import MetricParams
from fsweval.fsw.symbol import Sign


def clamp_unit(value: float) -> float:
    return min(max(value, 0.0), 1.0)


@dataclass(frozen=True)
class ScoreReport:
    metric: str
    score: float
    hypothesis_id: str
    reference_id: str

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score must be in [0, 1], got {self.score}")

    def to_line(self) -> str:
        return f"{self.metric}\t{self.score:.6f}"


class SignMetric(ABC):
    name: str = ""
    # score(a, b) == score(b, a) for every pair
    symmetric: bool = False

    def __init__(self, params: Optional[MetricParams] = None):
        self.params = params if params is not None else MetricParams()

    @abstractmethod
    def score(self, hypothesis: Sign, reference: Sign) -> float:
        raise NotImplementedError

    def score_labeled(self,
                      hypothesis: Sign,
                      reference: Sign,
                      hypothesis_id: Optional[str] = None,
                      reference_id: Optional[str] = None) -> float:
        """Like ``score``, for metrics that resolve external data by corpus id."""
        return self.score(hypothesis, reference)

    def score_report(self,
                     hypothesis: Sign,
                     reference: Sign,
                     hypothesis_id: str = "hypothesis",
                     reference_id: str = "reference") -> ScoreReport:
        value = self.score_labeled(hypothesis, reference, hypothesis_id, reference_id)
        return ScoreReport(self.name, value, hypothesis_id, reference_id)

    def __call__(self, hypothesis: Sign, reference: Sign) -> float:
        return self.score(hypothesis, reference)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(params={self.params})"
