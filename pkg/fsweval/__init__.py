from fsweval.common.config import MetricParams
from fsweval.common.exceptions import FswEvalError
from fsweval.fsw import Sign, Symbol, SymbolCategory, SymbolKey, parse_sign, serialize_sign
from fsweval.metrics import get_metric


__version__ = "0.1.0"

__all__ = [
    "MetricParams", "FswEvalError",
    "Sign", "Symbol", "SymbolCategory", "SymbolKey", "parse_sign", "serialize_sign",
    "get_metric",
]
