import json
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from fsweval.common.debug import fsweval_logger


logger = fsweval_logger

DEFAULT_TAIL_THRESHOLD = 0.8


@dataclass(frozen=True)
class ScoreSummary:
    metric: str
    count: int
    mean: float
    median: float
    q1: float
    q3: float
    min: float
    max: float
    tail_threshold: float
    tail_fraction: float

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1

    @classmethod
    def from_scores(cls,
                    metric: str,
                    scores: Sequence[float],
                    tail_threshold: float = DEFAULT_TAIL_THRESHOLD) -> "ScoreSummary":
        values = np.asarray(scores, dtype=np.float64)
        if values.size == 0:
            raise ValueError("cannot summarize an empty score list")
        q1, median, q3 = np.quantile(values, [0.25, 0.5, 0.75])
        return cls(
            metric=metric,
            count=int(values.size),
            mean=float(values.mean()),
            median=float(median),
            q1=float(q1),
            q3=float(q3),
            min=float(values.min()),
            max=float(values.max()),
            tail_threshold=tail_threshold,
            tail_fraction=float(np.count_nonzero(values > tail_threshold)) / values.size,
        )

    def to_json(self) -> str:
        data = asdict(self)
        data["iqr"] = self.iqr
        rounded = {key: round(value, 6) if isinstance(value, float) else value for key, value in data.items()}
        return json.dumps(rounded, indent=2, sort_keys=True)

    def log(self) -> None:
        logger.info(
            f"Score distribution of {self.metric} over {self.count} pairs: "
            f"mean {self.mean:.4f}, median {self.median:.4f}, "
            f"IQR [{self.q1:.4f}, {self.q3:.4f}], "
            f"range [{self.min:.4f}, {self.max:.4f}], "
            f"above {self.tail_threshold}: {self.tail_fraction * 100:.2f}%.")
