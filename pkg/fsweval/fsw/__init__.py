from fsweval.fsw.symbol import Sign, Symbol, SymbolCategory, SymbolKey
from fsweval.fsw.categories import category_of
from fsweval.fsw.parser import (parse_sign, parse_signs, parse_symbol_key, serialize_sign,
                                serialize_signs, tokenize_for_bleu)

__all__ = [
    "Sign", "Symbol", "SymbolCategory", "SymbolKey",
    "category_of",
    "parse_sign", "parse_signs", "parse_symbol_key", "serialize_sign", "serialize_signs",
    "tokenize_for_bleu",
]
