import argparse
import random
import time

from tqdm import tqdm

from fsweval.common.debug import fsweval_logger
from fsweval.corpus import nearest_neighbors
from fsweval.metrics import get_metric
from utils import generate_signbank_like, load_config


# fsweval_logger.set_level("DEBUG")


def bench_nearest(args: argparse.Namespace) -> None:
    params, corpus_config = load_config(args.config)
    corpus = generate_signbank_like(corpus_config)
    metric = get_metric(args.metric, params)
    rng = random.Random(args.seed)
    queries = [rng.choice(corpus) for _ in range(args.num_queries)]
    print(f"corpus: {len(corpus)} signs, {args.num_queries} queries, k={args.k}, workers={args.workers}")

    # a variant of the same family should come back first
    same_family = 0
    start_time = time.time()
    for query in tqdm(queries, desc="Querying"):
        neighbors = nearest_neighbors(query.sign, corpus, metric, k=args.k,
                                      query_id=query.id, num_workers=args.workers)
        if neighbors.entries and neighbors.ids[0].split("v")[0] == query.id.split("v")[0]:
            same_family += 1
    elapsed = time.time() - start_time
    fsweval_logger.info(f"{metric.name}: {elapsed / len(queries) * 1000:.2f}ms per query")
    print(f"{metric.name}: avg {elapsed / len(queries) * 1000:.2f}ms per query, "
          f"family hit rate {same_family * 100 / len(queries):.1f}%")


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser()
    parser.add_argument("--config", type=str, default="benchmarks/example_config.json")
    parser.add_argument("--metric", type=str, default="symbol_distance",
                        choices=["bleu", "chrf", "symbol_distance"])
    parser.add_argument("--num-queries", type=int, default=20)
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    return parser.parse_args()


if __name__ == "__main__":
    bench_nearest(parse_args())
