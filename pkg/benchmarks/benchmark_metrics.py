import argparse
import time
from dataclasses import dataclass

from tqdm import tqdm

from fsweval.common.debug import fsweval_logger
from fsweval.corpus import ScoreSummary, pair_scores, sample_signs
from fsweval.metrics import get_metric
from utils import generate_signbank_like, load_config


fsweval_logger.set_level("INFO")


@dataclass
class BenchmarkConfig:
    metric: str = "symbol_distance"
    sample: int = 200
    seed: int = 42
    num_workers: int = 1
    warmup_round: int = 1
    benchmark_round: int = 3


def bench_metric(args: argparse.Namespace) -> None:
    params, corpus_config = load_config(args.config)
    bench_config = BenchmarkConfig(metric=args.metric,
                                   sample=args.sample,
                                   seed=args.seed,
                                   num_workers=args.workers,
                                   warmup_round=args.warmup_round,
                                   benchmark_round=args.benchmark_round)
    print(f"{params = }")
    print(f"{corpus_config = }")
    print(f"{bench_config = }")

    corpus = generate_signbank_like(corpus_config)
    sample = sample_signs(corpus, bench_config.sample, bench_config.seed)
    metric = get_metric(bench_config.metric, params)
    num_pairs = len(sample) * (len(sample) - 1)

    for _ in range(bench_config.warmup_round):
        pair_scores(sample[:20], metric, num_workers=1)

    elapsed = []
    scores = None
    for _ in tqdm(range(bench_config.benchmark_round), desc="Benchmarking"):
        start_time = time.time()
        scores = pair_scores(sample, metric, num_workers=bench_config.num_workers)
        elapsed.append(time.time() - start_time)

    avg_time = sum(elapsed) / len(elapsed)
    print(f"{metric.name}: {num_pairs} ordered pairs, avg time {avg_time:.3f}s, "
          f"{num_pairs / avg_time:.0f} pairs/s, min {min(elapsed):.3f}s")
    ScoreSummary.from_scores(metric.name, scores).log()


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser()
    parser.add_argument("--config", type=str, default="benchmarks/example_config.json")
    parser.add_argument("--metric", type=str, default="symbol_distance",
                        choices=["bleu", "chrf", "symbol_distance"])
    parser.add_argument("--sample", type=int, default=200)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--warmup-round", type=int, default=1)
    parser.add_argument("--benchmark-round", type=int, default=3)
    return parser.parse_args()


if __name__ == "__main__":
    bench_metric(parse_args())
