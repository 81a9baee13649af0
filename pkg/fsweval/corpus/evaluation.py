from typing import List, Optional, Union

from fsweval.common.config import MetricParams
from fsweval.common.debug import fsweval_logger
from fsweval.common.exceptions import CorpusError, FswSyntaxError
from fsweval.fsw.parser import parse_signs
from fsweval.fsw.symbol import Sign
from fsweval.metrics.base import SignMetric
from fsweval.metrics.matrix import resolve_metric
from fsweval.metrics.sequence import sequence_score


logger = fsweval_logger


def _read_sequences(path: str) -> List[List[Sign]]:
    sequences = []
    try:
        with open(path, "r", encoding="utf-8") as f:
            for line_no, line in enumerate(f, start=1):
                try:
                    sequences.append(parse_signs(line))
                except FswSyntaxError as e:
                    raise e.at_line(line_no) from None
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusError(f"cannot read {path}: {e}", path=path) from e
    return sequences


def evaluate_files(hypothesis_path: str,
                   reference_path: str,
                   metric: Union[str, SignMetric],
                   params: Optional[MetricParams] = None) -> float:
    """Mean sequence score over parallel hypothesis/reference files.

    Each line holds one space-separated sign sequence.
    """
    hypotheses = _read_sequences(hypothesis_path)
    references = _read_sequences(reference_path)
    if len(hypotheses) != len(references):
        raise CorpusError(f"{len(hypotheses)} hypotheses but {len(references)} references",
                          path=hypothesis_path)
    if not hypotheses:
        raise CorpusError("nothing to evaluate", path=hypothesis_path)
    scorer = resolve_metric(metric, params)
    scores = [sequence_score(h, r, scorer) for h, r in zip(hypotheses, references)]
    logger.info(f"evaluated {len(scores)} line pairs with {scorer.name}")
    return sum(scores) / len(scores)
