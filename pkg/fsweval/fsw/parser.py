import re
from typing import List, Optional, Tuple

from fsweval.common.exceptions import (CoordinateOutOfRange, FswSyntaxError, MalformedFsw,
                                       SymbolOutOfRange)
from fsweval.fsw.symbol import (BOX_MARKERS, MAX_BASE, MAX_COORD, MAX_FILL, MIN_BASE, MIN_COORD,
                                Sign, Symbol, SymbolKey)


# (A(<key>)+)? [BLMR]<coord> (<key><coord>)*
#   <key>   = S[0-9a-f]{3}[0-5][0-9a-f]   (hex digits case-insensitive on input)
#   <coord> = [0-9]{3}x[0-9]{3}
_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")
_DEC_DIGITS = frozenset("0123456789")
_SIGN_SPLIT = re.compile(r"\S+")

SYMBOL_KEY_LENGTH = 6


class _FswScanner:
    """Single-pass reader over one FSW sign. Error offsets are UTF-8 byte offsets."""

    def __init__(self, text: str, base_offset: int = 0):
        self.text = text
        self.pos = 0
        self.base_offset = base_offset

    def offset(self, pos: Optional[int] = None) -> int:
        pos = self.pos if pos is None else pos
        return self.base_offset + len(self.text[:pos].encode("utf-8"))

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _describe(self) -> str:
        return "end of input" if self.at_end() else repr(self.peek())

    def expect(self, choices: str, what: str) -> str:
        char = self.peek()
        if not char or char not in choices:
            raise MalformedFsw(f"expected {what}, found {self._describe()}", offset=self.offset())
        self.pos += 1
        return char

    def read_digits(self, count: int, digits: frozenset, what: str) -> str:
        start = self.pos
        for _ in range(count):
            char = self.peek()
            if not char or char not in digits:
                raise MalformedFsw(f"expected {what}, found {self._describe()}", offset=self.offset())
            self.pos += 1
        return self.text[start:self.pos]

    def read_symbol_key(self) -> SymbolKey:
        start = self.pos
        self.expect("S", "symbol key 'S'")
        base = int(self.read_digits(3, _HEX_DIGITS, "hex digit of symbol base"), 16)
        fill_pos = self.pos
        fill = int(self.read_digits(1, _HEX_DIGITS, "fill digit"), 16)
        rotation = int(self.read_digits(1, _HEX_DIGITS, "rotation digit"), 16)
        if not MIN_BASE <= base <= MAX_BASE:
            raise SymbolOutOfRange(f"symbol base {base:03x} outside [{MIN_BASE:03x}, {MAX_BASE:03x}]",
                                   offset=self.offset(start + 1))
        if fill > MAX_FILL:
            raise SymbolOutOfRange(f"fill {fill:x} outside [0, {MAX_FILL}]", offset=self.offset(fill_pos))
        return SymbolKey(base, fill, rotation)

    def read_number(self) -> int:
        start = self.pos
        value = int(self.read_digits(3, _DEC_DIGITS, "3-digit coordinate"))
        if not MIN_COORD <= value <= MAX_COORD:
            raise CoordinateOutOfRange(f"coordinate {value} outside [{MIN_COORD}, {MAX_COORD}]",
                                       offset=self.offset(start))
        return value

    def read_coordinate(self) -> Tuple[int, int]:
        x = self.read_number()
        self.expect("x", "coordinate separator 'x'")
        y = self.read_number()
        return x, y

    def read_sign(self) -> Sign:
        if self.at_end():
            raise MalformedFsw("empty sign", offset=self.offset())

        sequence: Optional[List[SymbolKey]] = None
        if self.peek() == "A":
            self.pos += 1
            sequence = [self.read_symbol_key()]
            while self.peek() == "S":
                sequence.append(self.read_symbol_key())

        box = self.expect("".join(BOX_MARKERS), "box marker B, L, M or R")
        box_x, box_y = self.read_coordinate()

        symbols = []
        while not self.at_end():
            key = self.read_symbol_key()
            x, y = self.read_coordinate()
            symbols.append(Symbol(key, x, y))

        return Sign(box=box, box_x=box_x, box_y=box_y, symbols=tuple(symbols),
                    sequence=tuple(sequence) if sequence is not None else None)


def parse_sign(text: str) -> Sign:
    return _FswScanner(text).read_sign()


def parse_signs(text: str) -> List[Sign]:
    """Parse whitespace-separated signs (continuous signing)."""
    signs = []
    for match in _SIGN_SPLIT.finditer(text):
        base_offset = len(text[:match.start()].encode("utf-8"))
        signs.append(_FswScanner(match.group(), base_offset).read_sign())
    if not signs:
        raise MalformedFsw("no signs found", offset=0)
    return signs


def parse_symbol_key(text: str) -> SymbolKey:
    scanner = _FswScanner(text)
    key = scanner.read_symbol_key()
    if not scanner.at_end():
        raise MalformedFsw(f"trailing characters after symbol key: {text[scanner.pos:]!r}",
                           offset=scanner.offset())
    return key


def serialize_sign(sign: Sign) -> str:
    prefix = ""
    if sign.sequence is not None:
        prefix = "A" + "".join(str(key) for key in sign.sequence)
    return (f"{prefix}{sign.box}{sign.box_x:03d}x{sign.box_y:03d}"
            + "".join(str(symbol) for symbol in sign.symbols))


def serialize_signs(signs: List[Sign]) -> str:
    return " ".join(serialize_sign(sign) for sign in signs)


def tokenize_for_bleu(sign: Sign) -> List[str]:
    """Box with its coordinate, then one token per symbol. The temporal prefix is dropped."""
    return [f"{sign.box}{sign.box_x:03d}x{sign.box_y:03d}"] + [str(symbol) for symbol in sign.symbols]


def is_valid_fsw(text: str) -> bool:
    try:
        parse_sign(text)
    except FswSyntaxError:
        return False
    return True
