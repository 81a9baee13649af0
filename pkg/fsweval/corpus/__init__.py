from fsweval.corpus.evaluation import evaluate_files
from fsweval.corpus.experiments import (DEFAULT_BINS, DEFAULT_K, Histogram, NeighborList, nearest_neighbors,
                                        pair_scores, score_distribution)
from fsweval.corpus.loader import CorpusEntry, load_corpus
from fsweval.corpus.sampling import XorShift64Star, sample_signs
from fsweval.corpus.stats import ScoreSummary

__all__ = [
    "evaluate_files",
    "DEFAULT_BINS", "DEFAULT_K", "Histogram", "NeighborList", "nearest_neighbors", "pair_scores",
    "score_distribution",
    "CorpusEntry", "load_corpus",
    "XorShift64Star", "sample_signs",
    "ScoreSummary",
]
