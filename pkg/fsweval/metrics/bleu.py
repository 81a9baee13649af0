from functools import lru_cache

from sacrebleu.metrics import BLEU

from fsweval.fsw.parser import tokenize_for_bleu
from fsweval.fsw.symbol import Sign
from fsweval.metrics.base import SignMetric, clamp_unit


MAX_NGRAM_ORDER = 4
# additive floor on zero n-gram matches; single signs are far too short for unsmoothed BLEU
SMOOTH_FLOOR = 0.1


@lru_cache(maxsize=1)
def _backend() -> BLEU:
    # effective_order drops orders longer than the hypothesis from the geometric mean
    return BLEU(tokenize="none",
                smooth_method="floor",
                smooth_value=SMOOTH_FLOOR,
                effective_order=True,
                max_ngram_order=MAX_NGRAM_ORDER)


def bleu_tokens_score(hypothesis: list, reference: list) -> float:
    if hypothesis == reference:
        return 1.0
    result = _backend().sentence_score(" ".join(hypothesis), [" ".join(reference)])
    return clamp_unit(result.score / 100.0)


def bleu_score(hypothesis: Sign, reference: Sign) -> float:
    return bleu_tokens_score(tokenize_for_bleu(hypothesis), tokenize_for_bleu(reference))


class BleuMetric(SignMetric):
    name = "bleu"
    symmetric = False

    def score(self, hypothesis: Sign, reference: Sign) -> float:
        return bleu_score(hypothesis, reference)
