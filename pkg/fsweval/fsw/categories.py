import bisect
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import List, Optional, Sequence, Tuple

from fsweval.common.exceptions import InvalidConfigError
from fsweval.fsw.symbol import MAX_BASE, MIN_BASE, SymbolCategory, SymbolKey


@dataclass(frozen=True)
class CategoryTable:
    starts: Tuple[int, ...]
    ends: Tuple[int, ...]
    categories: Tuple[SymbolCategory, ...]

    def __post_init__(self) -> None:
        if not self.starts:
            raise InvalidConfigError("category table is empty")
        if self.starts[0] != MIN_BASE or self.ends[-1] != MAX_BASE:
            raise InvalidConfigError(f"category table must span [{MIN_BASE:#x}, {MAX_BASE:#x}]")
        for i, (start, end) in enumerate(zip(self.starts, self.ends)):
            if start > end:
                raise InvalidConfigError(f"category range {start:#x}-{end:#x} is reversed")
            if i > 0 and start != self.ends[i - 1] + 1:
                raise InvalidConfigError(f"category ranges overlap or leave a gap at {start:#x}")

    @classmethod
    def from_ranges(cls, ranges: Sequence[Tuple[SymbolCategory, int, int]]) -> "CategoryTable":
        ordered = sorted(ranges, key=lambda r: r[1])
        return cls(starts=tuple(r[1] for r in ordered),
                   ends=tuple(r[2] for r in ordered),
                   categories=tuple(r[0] for r in ordered))

    @classmethod
    def from_json(cls, text: str) -> "CategoryTable":
        try:
            data = json.loads(text)
            ranges = [(SymbolCategory(r["category"]), int(r["start"], 16), int(r["end"], 16))
                      for r in data["ranges"]]
        except (ValueError, KeyError, TypeError) as e:
            raise InvalidConfigError(f"bad category table: {e}") from e
        return cls.from_ranges(ranges)

    def lookup(self, base: int) -> SymbolCategory:
        i = bisect.bisect_right(self.starts, base) - 1
        if i < 0 or base > self.ends[i]:
            raise ValueError(f"base {base:#x} is not covered by the category table")
        return self.categories[i]


@lru_cache(maxsize=1)
def default_category_table() -> CategoryTable:
    text = resources.files("fsweval.fsw").joinpath("data/categories.json").read_text(encoding="utf-8")
    return CategoryTable.from_json(text)


def category_of(key: SymbolKey, table: Optional[CategoryTable] = None) -> SymbolCategory:
    return (table or default_category_table()).lookup(key.base)


_CATEGORY_ORDER = {category: i for i, category in enumerate(SymbolCategory)}


@lru_cache(maxsize=None)
def category_index(base: int) -> int:
    """Position of the base's category in ``SymbolCategory``, from the default table."""
    return _CATEGORY_ORDER[default_category_table().lookup(base)]
