import random
from typing import List

from fsweval.corpus.loader import CorpusEntry
from fsweval.fsw.parser import serialize_sign
from fsweval.fsw.symbol import MAX_FILL, MAX_ROTATION, Sign, Symbol, SymbolKey


# hand shapes dominate real dictionaries
BASE_RANGES = [
    ((0x100, 0x204), 0.6),
    ((0x205, 0x2f6), 0.25),
    ((0x2ff, 0x36c), 0.1),
    ((0x36d, 0x38b), 0.05),
]


def random_key(rng: random.Random) -> SymbolKey:
    (low, high), = rng.choices([r for r, _ in BASE_RANGES], weights=[w for _, w in BASE_RANGES])
    return SymbolKey(rng.randint(low, high), rng.randint(0, MAX_FILL), rng.randint(0, MAX_ROTATION))


def random_symbol(rng: random.Random, low: int = 430, high: int = 570) -> Symbol:
    return Symbol(random_key(rng), rng.randint(low, high), rng.randint(low, high))


def random_sign(rng: random.Random, min_symbols: int = 1, max_symbols: int = 8,
                low: int = 430, high: int = 570) -> Sign:
    """SignBank-like sign: a centered box and a handful of symbols near the center."""
    num_symbols = rng.randint(min_symbols, max_symbols)
    symbols = tuple(random_symbol(rng, low, high) for _ in range(num_symbols))
    return Sign("M", rng.randint(500, 560), rng.randint(500, 560), symbols)


def perturb_sign(rng: random.Random, sign: Sign, max_shift: int = 10) -> Sign:
    """Variant of ``sign``: one symbol nudged and, sometimes, one fill changed."""
    index = rng.randrange(sign.num_symbols)
    dx = rng.choice([-1, 1]) * rng.randint(1, max_shift)
    variant = sign.shifted(dx, 0, index=index)
    if rng.random() < 0.5:
        symbols = list(variant.symbols)
        target = symbols[rng.randrange(len(symbols))]
        fill = (target.key.fill + 1) % (MAX_FILL + 1)
        symbols[symbols.index(target)] = Symbol(SymbolKey(target.key.base, fill, target.key.rotation),
                                                target.x, target.y)
        variant = variant.with_symbols(symbols)
    return variant


def generate_corpus(num_families: int, variants_per_family: int, min_symbols: int = 1,
                    max_symbols: int = 8, seed: int = 0) -> List[CorpusEntry]:
    """Families of near-duplicate signs, like the many spellings of one gloss in SignBank.

    Entry ids are ``f<family>v<variant>``; ``v0`` is the family prototype.
    """
    rng = random.Random(seed)
    entries = []
    for family in range(num_families):
        prototype = random_sign(rng, min_symbols, max_symbols)
        members = [prototype] + [perturb_sign(rng, prototype) for _ in range(variants_per_family - 1)]
        for variant, sign in enumerate(members):
            entries.append(CorpusEntry(f"f{family}v{variant}", sign, serialize_sign(sign)))
    return entries
