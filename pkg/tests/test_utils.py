import math
import random
from typing import Sequence

import pytest
from hypothesis import strategies as st

from fsweval.common.config import MetricParams
from fsweval.corpus.loader import CorpusEntry
from fsweval.corpus.synthetic import generate_corpus, perturb_sign, random_key, random_sign, random_symbol  # noqa: F401
from fsweval.fsw.symbol import Sign, Symbol, SymbolKey


# Default configurations
DEFAULT_METRIC_PARAMS = {
    'alpha': 0.5,
    'beta': 2.0,
    'gamma': 1.0,
    'position_scale': 250.0,
    'shape_weight': 0.5,
    'fill_weight': 0.15,
    'rotation_weight': 0.15,
    'position_weight': 0.2,
}

EQUAL_WEIGHTS = {
    'shape_weight': 0.25,
    'fill_weight': 0.25,
    'rotation_weight': 0.25,
    'position_weight': 0.25,
}

DEFAULT_CORPUS_CONFIG = {
    'num_families': 200,
    'variants_per_family': 5,
    'min_symbols': 1,
    'max_symbols': 8,
    'seed': 1234,
}

# Fixtures
@pytest.fixture
def metric_params(request: pytest.FixtureRequest):
    """Create metric parameters with optional override"""
    param = request.param if hasattr(request, 'param') else {}
    cfg = dict(DEFAULT_METRIC_PARAMS, **param)
    return MetricParams(**cfg)

@pytest.fixture
def corpus_config(request: pytest.FixtureRequest):
    """Create synthetic corpus configuration with optional override"""
    param = request.param if hasattr(request, 'param') else {}
    return dict(DEFAULT_CORPUS_CONFIG, **param)

@pytest.fixture
def rng(request: pytest.FixtureRequest):
    seed = request.param if hasattr(request, 'param') else 0
    return random.Random(seed)

# Utility functions
def write_corpus(path, entries: Sequence[CorpusEntry], corpus_format: str = "tsv") -> str:
    with open(path, "w", encoding="utf-8") as f:
        for entry in entries:
            if corpus_format == "tsv":
                f.write(f"{entry.id}\t{entry.raw}\n")
            else:
                f.write(f"{entry.raw}\n")
    return str(path)

def write_embeddings(path, ids: Sequence[str], dimension: int = 8, seed: int = 0) -> str:
    rng = random.Random(seed)
    with open(path, "w", encoding="utf-8") as f:
        for entry_id in ids:
            values = [rng.uniform(0.1, 1.0) for _ in range(dimension)]
            f.write(entry_id + "\t" + ",".join(f"{v:.6f}" for v in values) + "\n")
    return str(path)

def brute_force_assignment(cost: Sequence[Sequence[float]]) -> float:
    """Minimum over all injective matchings of size min(m, n), each total an exact fsum."""
    from itertools import permutations
    m, n = len(cost), len(cost[0])
    if m <= n:
        totals = (math.fsum(cost[i][j] for i, j in enumerate(columns)) for columns in permutations(range(n), m))
    else:
        totals = (math.fsum(cost[i][j] for j, i in enumerate(rows)) for rows in permutations(range(m), n))
    return min(totals)

# Hypothesis strategies
HEX = "0123456789abcdef"

@st.composite
def symbol_key_texts(draw, uppercase: bool = False):
    base = draw(st.integers(min_value=0x100, max_value=0x38b))
    fill = draw(st.integers(min_value=0, max_value=5))
    rotation = draw(st.integers(min_value=0, max_value=15))
    hex_part = f"{base:03x}{fill}{rotation:x}"
    if uppercase:
        hex_part = "".join(c.upper() if draw(st.booleans()) else c for c in hex_part)
    return "S" + hex_part

def coordinate_texts():
    return st.tuples(st.integers(250, 749), st.integers(250, 749)).map(lambda xy: f"{xy[0]:03d}x{xy[1]:03d}")

@st.composite
def fsw_texts(draw, uppercase: bool = False, max_symbols: int = 8):
    prefix = ""
    if draw(st.booleans()):
        prefix = "A" + "".join(draw(st.lists(symbol_key_texts(uppercase), min_size=1, max_size=4)))
    box = draw(st.sampled_from("BLMR"))
    body = "".join(draw(symbol_key_texts(uppercase)) + draw(coordinate_texts())
                   for _ in range(draw(st.integers(0, max_symbols))))
    return prefix + box + draw(coordinate_texts()) + body

@st.composite
def symbols(draw, low: int = 250, high: int = 749):
    key = SymbolKey(draw(st.integers(0x100, 0x38b)), draw(st.integers(0, 5)), draw(st.integers(0, 15)))
    return Symbol(key, draw(st.integers(low, high)), draw(st.integers(low, high)))

@st.composite
def signs(draw, min_symbols: int = 0, max_symbols: int = 6):
    body = draw(st.lists(symbols(), min_size=min_symbols, max_size=max_symbols))
    return Sign("M", 500, 500, tuple(body))
