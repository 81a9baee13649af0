import math
import os
from dataclasses import dataclass, field, fields, replace
from typing import Dict, Optional

from fsweval.common.exceptions import InvalidConfigError


# params file key -> MetricParams field
PARAM_KEYS: Dict[str, str] = {
    "alpha": "alpha",
    "beta": "beta",
    "gamma": "gamma",
    "position_scale": "position_scale",
    "weights.shape": "shape_weight",
    "weights.fill": "fill_weight",
    "weights.rotation": "rotation_weight",
    "weights.position": "position_weight",
}

METRIC_NAMES = ("bleu", "chrf", "cosine", "symbol_distance")
CORPUS_FORMATS = ("lines", "tsv")


@dataclass(frozen=True)
class MetricParams:
    # distance normalization curve exponent
    alpha: float = 0.5
    # length penalty severity
    beta: float = 2.0
    # final score normalization exponent
    gamma: float = 1.0
    # sign-space units at which position distance saturates
    position_scale: float = 250.0

    shape_weight: float = 0.5
    fill_weight: float = 0.15
    rotation_weight: float = 0.15
    position_weight: float = 0.2

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "position_scale"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise InvalidConfigError(f"{name} must be a positive finite number, got {value}")
        for name in ("shape_weight", "fill_weight", "rotation_weight", "position_weight"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidConfigError(f"{name} must be non-negative, got {value}")
        total = sum(self.weights)
        if abs(total - 1.0) > 1e-9:
            raise InvalidConfigError(f"attribute weights must sum to 1, got {total!r}")

    @property
    def weights(self) -> tuple:
        return (self.shape_weight, self.fill_weight, self.rotation_weight, self.position_weight)

    def with_overrides(self, **overrides: float) -> "MetricParams":
        return replace(self, **overrides)

    @classmethod
    def from_text(cls, text: str, source: str = "<params>") -> "MetricParams":
        """Parse flat ``key=value`` text. Missing keys keep their defaults."""
        values: Dict[str, float] = {}
        for line_no, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidConfigError(f"{source}:{line_no}: expected key=value, got {raw_line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in PARAM_KEYS:
                raise InvalidConfigError(f"{source}:{line_no}: unknown key {key!r}")
            field_name = PARAM_KEYS[key]
            if field_name in values:
                raise InvalidConfigError(f"{source}:{line_no}: duplicate key {key!r}")
            try:
                values[field_name] = float(value)
            except ValueError:
                raise InvalidConfigError(f"{source}:{line_no}: {key} is not a number: {value!r}") from None
        return cls(**values)

    @classmethod
    def from_file(cls, path: str) -> "MetricParams":
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise InvalidConfigError(f"cannot read params file {path}: {e.strerror}") from e
        return cls.from_text(text, source=path)

    def to_text(self) -> str:
        return "".join(f"{key}={getattr(self, name)!r}\n" for key, name in PARAM_KEYS.items())


def default_num_workers() -> int:
    value = os.getenv("FSWEVAL_NUM_WORKERS", "1")
    try:
        return max(int(value), 1)
    except ValueError:
        raise InvalidConfigError(f"FSWEVAL_NUM_WORKERS must be an integer, got {value!r}") from None


@dataclass
class ExperimentConfig:
    metric: str = "symbol_distance"
    params_path: Optional[str] = None
    seed: int = 42
    output_path: Optional[str] = None  # None means stdout

    # experiment shape
    sample: Optional[int] = None
    bins: int = 50
    k: int = 10

    # inputs
    embeddings_path: Optional[str] = None
    corpus_format: str = "lines"
    strict: bool = True

    num_workers: int = field(default_factory=default_num_workers)

    params: MetricParams = field(init=False, default_factory=MetricParams)

    def __post_init__(self) -> None:
        if self.metric not in METRIC_NAMES:
            raise InvalidConfigError(f"unknown metric {self.metric!r}, expected one of {', '.join(METRIC_NAMES)}")
        if self.corpus_format not in CORPUS_FORMATS:
            raise InvalidConfigError(f"unknown corpus format {self.corpus_format!r}")
        if self.bins < 2:
            raise InvalidConfigError(f"bins must be at least 2, got {self.bins}")
        if self.k < 1:
            raise InvalidConfigError(f"k must be at least 1, got {self.k}")
        if self.sample is not None and self.sample < 2:
            raise InvalidConfigError(f"sample must be at least 2, got {self.sample}")
        if self.num_workers < 1:
            raise InvalidConfigError(f"workers must be at least 1, got {self.num_workers}")
        if self.metric == "cosine" and self.embeddings_path is None:
            raise InvalidConfigError("metric cosine requires --embeddings")
        if self.params_path is not None:
            self.params = MetricParams.from_file(self.params_path)

    @classmethod
    def from_args(cls, args: object) -> "ExperimentConfig":
        names = {f.name for f in fields(cls) if f.init}
        values = {name: getattr(args, name, None) for name in names}
        return cls(**{name: value for name, value in values.items() if value is not None})
