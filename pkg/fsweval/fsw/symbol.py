from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional, Tuple

from fsweval.common.exceptions import CoordinateOutOfRange, SymbolOutOfRange


MIN_BASE = 0x100
MAX_BASE = 0x38b
MAX_FILL = 5
MAX_ROTATION = 15
# rotations 8..15 are the mirrored plane
ROTATIONS_PER_PLANE = 8

MIN_COORD = 250
MAX_COORD = 749

BOX_MARKERS = ("B", "L", "M", "R")


class SymbolCategory(Enum):
    HANDS = "Hands"
    MOVEMENT = "Movement"
    DYNAMICS = "Dynamics"
    HEAD_FACE = "HeadFace"
    BODY = "Body"
    LOCATION = "Location"
    PUNCTUATION = "Punctuation"


def check_coordinate(value: int, offset: Optional[int] = None) -> None:
    if not MIN_COORD <= value <= MAX_COORD:
        raise CoordinateOutOfRange(f"coordinate {value} outside [{MIN_COORD}, {MAX_COORD}]", offset=offset)


@dataclass(frozen=True, order=True)
class SymbolKey:
    base: int
    fill: int
    rotation: int

    def __post_init__(self) -> None:
        if not MIN_BASE <= self.base <= MAX_BASE:
            raise SymbolOutOfRange(f"base {self.base:#x} outside [{MIN_BASE:#x}, {MAX_BASE:#x}]")
        if not 0 <= self.fill <= MAX_FILL:
            raise SymbolOutOfRange(f"fill {self.fill} outside [0, {MAX_FILL}]")
        if not 0 <= self.rotation <= MAX_ROTATION:
            raise SymbolOutOfRange(f"rotation {self.rotation} outside [0, {MAX_ROTATION}]")

    @property
    def mirrored(self) -> bool:
        return self.rotation >= ROTATIONS_PER_PLANE

    def __str__(self) -> str:
        return f"S{self.base:03x}{self.fill:d}{self.rotation:x}"


@dataclass(frozen=True)
class Symbol:
    key: SymbolKey
    x: int
    y: int

    def __post_init__(self) -> None:
        check_coordinate(self.x)
        check_coordinate(self.y)

    def moved(self, dx: int, dy: int) -> "Symbol":
        return Symbol(self.key, self.x + dx, self.y + dy)

    def __str__(self) -> str:
        return f"{self.key}{self.x:03d}x{self.y:03d}"


@dataclass(frozen=True)
class Sign:
    box: str
    box_x: int
    box_y: int
    symbols: Tuple[Symbol, ...] = ()
    # temporal prefix; carried through serialization, ignored by every metric
    sequence: Optional[Tuple[SymbolKey, ...]] = None

    def __post_init__(self) -> None:
        if self.box not in BOX_MARKERS:
            raise ValueError(f"box marker must be one of {BOX_MARKERS}, got {self.box!r}")
        check_coordinate(self.box_x)
        check_coordinate(self.box_y)
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.sequence is not None:
            if not isinstance(self.sequence, tuple):
                object.__setattr__(self, "sequence", tuple(self.sequence))
            if len(self.sequence) == 0:
                raise ValueError("a temporal sequence, when present, must be non-empty")

    @property
    def num_symbols(self) -> int:
        return len(self.symbols)

    def is_empty(self) -> bool:
        return len(self.symbols) == 0

    def with_symbols(self, symbols: Iterable[Symbol]) -> "Sign":
        return replace(self, symbols=tuple(symbols))

    def shifted(self, dx: int, dy: int, index: Optional[int] = None) -> "Sign":
        """Move every symbol (or only ``symbols[index]``) by (dx, dy)."""
        symbols = tuple(
            symbol.moved(dx, dy) if index is None or i == index else symbol
            for i, symbol in enumerate(self.symbols)
        )
        return replace(self, symbols=symbols)
