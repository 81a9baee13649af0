import argparse
import sys
from typing import Callable, Dict, List, Optional

from fsweval.common.config import METRIC_NAMES, ExperimentConfig
from fsweval.common.debug import fsweval_logger
from fsweval.common.exceptions import FswEvalError, FswSyntaxError, InvalidConfigError
from fsweval.corpus.evaluation import evaluate_files
from fsweval.corpus.experiments import DEFAULT_BINS, DEFAULT_K, Histogram, nearest_neighbors, pair_scores
from fsweval.corpus.loader import load_corpus
from fsweval.corpus.sampling import sample_signs
from fsweval.corpus.stats import ScoreSummary
from fsweval.fsw.parser import parse_sign, parse_signs, serialize_sign
from fsweval.fsw.symbol import Sign
from fsweval.metrics import get_metric
from fsweval.metrics.base import ScoreReport, SignMetric
from fsweval.metrics.clip import CosineMetric, EmbeddingTable
from fsweval.metrics.sequence import sequence_score


logger = fsweval_logger

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_CONFIG_ERROR = 3


class ArgumentInputError(FswEvalError):
    def __init__(self, argument: str, cause: FswEvalError):
        self.argument = argument
        self.cause = cause
        super().__init__(f"argument {argument}: {cause}", "Invalid input")


def _parse_argument(text: str, argument: str) -> Sign:
    try:
        return parse_sign(text)
    except FswSyntaxError as e:
        raise ArgumentInputError(argument, e) from e


def _parse_sequence_argument(text: str, argument: str) -> List[Sign]:
    try:
        return parse_signs(text)
    except FswSyntaxError as e:
        raise ArgumentInputError(argument, e) from e


def _cosine_key(table: EmbeddingTable, text: str) -> str:
    """Cosine arguments are embedding ids, or FSW strings whose normalized form is an id."""
    if text in table:
        return text
    try:
        normalized = serialize_sign(parse_sign(text))
    except FswSyntaxError:
        return text
    return normalized if normalized in table else text


def cmd_score(args: argparse.Namespace, config: ExperimentConfig, metric: SignMetric) -> str:
    if isinstance(metric, CosineMetric):
        value = metric.score_keys(_cosine_key(metric.table, args.hypothesis),
                                  _cosine_key(metric.table, args.reference))
        report = ScoreReport(metric.name, value, args.hypothesis, args.reference)
    else:
        hypothesis = _parse_argument(args.hypothesis, "hypothesis")
        reference = _parse_argument(args.reference, "reference")
        report = metric.score_report(hypothesis, reference, args.hypothesis, args.reference)
    return report.to_line() + "\n"


def cmd_sequence_score(args: argparse.Namespace, config: ExperimentConfig, metric: SignMetric) -> str:
    hypothesis = _parse_sequence_argument(args.hypothesis, "hypothesis")
    reference = _parse_sequence_argument(args.reference, "reference")
    value = sequence_score(hypothesis, reference, metric, config.params)
    return ScoreReport(metric.name, value, args.hypothesis, args.reference).to_line() + "\n"


def cmd_distribution(args: argparse.Namespace, config: ExperimentConfig, metric: SignMetric) -> str:
    entries = load_corpus(args.corpus, config.corpus_format, config.strict)
    sample = entries if config.sample is None else sample_signs(entries, config.sample, config.seed)
    scores = pair_scores(sample, metric, num_workers=config.num_workers)
    summary = ScoreSummary.from_scores(metric.name, scores)
    summary.log()
    if args.summary is not None:
        _emit(summary.to_json() + "\n", args.summary)
    return Histogram.from_scores(scores, config.bins).to_csv()


def cmd_nearest(args: argparse.Namespace, config: ExperimentConfig, metric: SignMetric) -> str:
    query = _parse_argument(args.query, "query")
    entries = load_corpus(args.corpus, config.corpus_format, config.strict)
    neighbors = nearest_neighbors(query, entries, metric, k=config.k, num_workers=config.num_workers)
    return neighbors.to_json()


def cmd_evaluate(args: argparse.Namespace, config: ExperimentConfig, metric: SignMetric) -> str:
    value = evaluate_files(args.hypothesis_file, args.reference_file, metric)
    return f"{metric.name}\t{value:.6f}\n"


def _emit(text: str, output_path: Optional[str]) -> None:
    if output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(output_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--metric", default="symbol_distance",
                        help=f"one of {', '.join(METRIC_NAMES)} (default: symbol_distance)")
    parser.add_argument("--params", dest="params_path", default=None, metavar="FILE",
                        help="key=value metric parameter file")
    parser.add_argument("--embeddings", dest="embeddings_path", default=None, metavar="FILE",
                        help="id<TAB>v1,...,vn embedding file, required by --metric cosine")
    parser.add_argument("--output", dest="output_path", default=None, metavar="FILE",
                        help="write results here instead of stdout")
    parser.add_argument("--workers", dest="num_workers", type=int, default=None, metavar="N",
                        help="worker processes for corpus scans (default: $FSWEVAL_NUM_WORKERS or 1)")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "OFF"])


def _add_corpus_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("corpus", help="corpus file")
    parser.add_argument("--format", dest="corpus_format", default="lines", help="lines or tsv (default: lines)")
    strictness = parser.add_mutually_exclusive_group()
    strictness.add_argument("--strict", dest="strict", action="store_true", default=None,
                            help="abort on the first malformed line (default)")
    strictness.add_argument("--lenient", dest="strict", action="store_false",
                            help="skip malformed lines with a warning")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fsweval",
                                     description="Similarity metrics for Formal SignWriting signs.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    score = subparsers.add_parser("score", help="score one hypothesis sign against one reference sign")
    score.add_argument("hypothesis")
    score.add_argument("reference")
    _add_common_options(score)
    score.set_defaults(handler=cmd_score)

    sequence = subparsers.add_parser("sequence-score", help="score space-separated sign sequences as sets")
    sequence.add_argument("hypothesis")
    sequence.add_argument("reference")
    _add_common_options(sequence)
    sequence.set_defaults(handler=cmd_sequence_score)

    distribution = subparsers.add_parser("distribution", help="histogram of any-to-any scores as CSV")
    _add_corpus_options(distribution)
    distribution.add_argument("--sample", type=int, default=None, metavar="N",
                              help="score a seeded random sample of N signs (default: whole corpus)")
    distribution.add_argument("--seed", type=int, default=42)
    distribution.add_argument("--bins", type=int, default=DEFAULT_BINS)
    distribution.add_argument("--summary", default=None, metavar="FILE",
                              help="also write summary statistics as JSON")
    _add_common_options(distribution)
    distribution.set_defaults(handler=cmd_distribution)

    nearest = subparsers.add_parser("nearest", help="top-k nearest neighbors of a query sign as JSON")
    nearest.add_argument("query")
    _add_corpus_options(nearest)
    nearest.add_argument("--k", type=int, default=DEFAULT_K)
    _add_common_options(nearest)
    nearest.set_defaults(handler=cmd_nearest)

    evaluate = subparsers.add_parser("evaluate", help="mean sequence score over parallel files")
    evaluate.add_argument("hypothesis_file")
    evaluate.add_argument("reference_file")
    _add_common_options(evaluate)
    evaluate.set_defaults(handler=cmd_evaluate)

    return parser


def _build_metric(config: ExperimentConfig) -> SignMetric:
    embeddings = EmbeddingTable.load(config.embeddings_path) if config.embeddings_path else None
    return get_metric(config.metric, config.params, embeddings)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level is not None:
        fsweval_logger.set_level(args.log_level)

    try:
        config = ExperimentConfig.from_args(args)
    except InvalidConfigError as e:
        print(f"fsweval: error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    handler: Callable[[argparse.Namespace, ExperimentConfig, SignMetric], str] = args.handler
    try:
        metric = _build_metric(config)
        output = handler(args, config, metric)
    except InvalidConfigError as e:
        print(f"fsweval: error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except FswEvalError as e:
        print(f"fsweval: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as e:
        print(f"fsweval: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        _emit(output, config.output_path)
    except OSError as e:
        print(f"fsweval: error: cannot write output: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_OK
