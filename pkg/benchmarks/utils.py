import json
from dataclasses import asdict, dataclass
from typing import List, Tuple

from fsweval.common.config import MetricParams
from fsweval.corpus.loader import CorpusEntry
from fsweval.corpus.synthetic import generate_corpus


@dataclass
class CorpusConfig:
    num_families: int = 200
    variants_per_family: int = 5
    min_symbols: int = 1
    max_symbols: int = 8
    seed: int = 1234


def generate_signbank_like(config: CorpusConfig) -> List[CorpusEntry]:
    return generate_corpus(**asdict(config))


def load_config(config_path: str) -> Tuple[MetricParams, CorpusConfig]:
    with open(config_path) as f:
        config = json.load(f)
        if "MetricParams" not in config:
            print("MetricParams not found in config, using default values")
            config["MetricParams"] = {}
        if "CorpusConfig" not in config:
            print("CorpusConfig not found in config, using default values")
            config["CorpusConfig"] = {}
        return MetricParams(**config["MetricParams"]), CorpusConfig(**config["CorpusConfig"])
