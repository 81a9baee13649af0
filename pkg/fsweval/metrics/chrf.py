from dataclasses import replace
from functools import lru_cache

from sacrebleu.metrics import CHRF

from fsweval.fsw.parser import serialize_sign
from fsweval.fsw.symbol import Sign
from fsweval.metrics.base import SignMetric, clamp_unit


CHAR_ORDER = 6
WORD_ORDER = 0
CHRF_BETA = 2


@lru_cache(maxsize=1)
def _backend() -> CHRF:
    return CHRF(char_order=CHAR_ORDER, word_order=WORD_ORDER, beta=CHRF_BETA)


def chrf_score(hypothesis: str, reference: str) -> float:
    if not hypothesis or not reference:
        raise ValueError("chrF needs non-empty hypothesis and reference strings")
    if hypothesis == reference:
        return 1.0
    return clamp_unit(_backend().sentence_score(hypothesis, [reference]).score / 100.0)


class ChrfMetric(SignMetric):
    """chrF over the FSW string itself, without the temporal prefix."""

    name = "chrf"
    symmetric = False

    def score(self, hypothesis: Sign, reference: Sign) -> float:
        return chrf_score(serialize_sign(replace(hypothesis, sequence=None)),
                          serialize_sign(replace(reference, sequence=None)))
