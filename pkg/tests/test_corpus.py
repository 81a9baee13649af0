import json
import random

import numpy as np
import pytest

from fsweval.common.config import MetricParams
from fsweval.common.exceptions import CorpusError, DuplicateId, MalformedFsw, SampleTooLarge
from fsweval.corpus import (CorpusEntry, Histogram, NeighborList, ScoreSummary, XorShift64Star,
                            evaluate_files, load_corpus, nearest_neighbors, pair_scores, sample_signs,
                            score_distribution)
from fsweval.corpus.sampling import splitmix64
from fsweval.fsw import parse_sign, serialize_sign
from fsweval.metrics import SymbolDistanceMetric, get_metric

from test_utils import generate_corpus, perturb_sign, random_sign, write_corpus


HELLO = "M518x529S14c20481x471S27106503x489"
HELLO_HEX_UPPER = "M518x529S14C20481x471S27106503x489"

def entries_from(signs, prefix="e"):
    return [CorpusEntry(f"{prefix}{i:03d}", sign, serialize_sign(sign)) for i, sign in enumerate(signs)]

# loading

def test_load_lines(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("M500x500\n\nM518x529S14c20481x471\n", encoding="utf-8")
    corpus = load_corpus(str(path))
    assert [entry.id for entry in corpus] == ["L1", "L3"]
    assert corpus[1].sign == parse_sign("M518x529S14c20481x471")

def test_load_two_lines(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text(f"{HELLO}\nM500x500\n", encoding="utf-8")
    assert [entry.id for entry in load_corpus(str(path))] == ["L1", "L2"]

def test_load_tsv(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("hello1\tM518x529S14c20481x471\n", encoding="utf-8")
    corpus = load_corpus(str(path), corpus_format="tsv")
    assert len(corpus) == 1
    assert corpus[0].id == "hello1"
    assert corpus[0].raw == "M518x529S14c20481x471"

def test_raw_reparses_to_sign(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("upper\tM518x529S14C20481x471\n", encoding="utf-8")
    entry = load_corpus(str(path), corpus_format="tsv")[0]
    assert parse_sign(entry.raw) == entry.sign

def test_duplicate_id(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("a\tM500x500\nb\tM510x510\na\tM520x520\n", encoding="utf-8")
    with pytest.raises(DuplicateId) as excinfo:
        load_corpus(str(path), corpus_format="tsv")
    assert excinfo.value.line == 3

def test_strict_reports_line_number(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("M500x500\nM500x500S1000\nM510x510\n", encoding="utf-8")
    with pytest.raises(MalformedFsw) as excinfo:
        load_corpus(str(path))
    assert excinfo.value.line == 2

def test_lenient_skips_bad_lines(tmp_path):
    path = tmp_path / "corpus.tsv"
    path.write_text("a\tM500x500\nno tab here\nb\tX500x500\nc\tM800x500\na\tM510x510\nd\tM520x520\n",
                    encoding="utf-8")
    corpus = load_corpus(str(path), corpus_format="tsv", strict=False)
    assert [entry.id for entry in corpus] == ["a", "d"]

def test_missing_file(tmp_path):
    with pytest.raises(CorpusError):
        load_corpus(str(tmp_path / "missing.txt"))

def test_not_utf8(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_bytes(b"M500x500\n\xff\xfe\n")
    with pytest.raises(CorpusError):
        load_corpus(str(path))

def test_written_corpus_loads_back(tmp_path, corpus_config):
    corpus = generate_corpus(10, 3, seed=corpus_config['seed'])
    loaded = load_corpus(write_corpus(tmp_path / "c.tsv", corpus), corpus_format="tsv")
    assert loaded == corpus

def test_synthetic_families(corpus_config):
    corpus = generate_corpus(**corpus_config)
    assert len(corpus) == corpus_config['num_families'] * corpus_config['variants_per_family']
    assert corpus == generate_corpus(**corpus_config)
    by_id = {entry.id: entry for entry in corpus}
    for family in range(corpus_config['num_families']):
        prototype = by_id[f"f{family}v0"]
        for variant in range(1, corpus_config['variants_per_family']):
            member = by_id[f"f{family}v{variant}"]
            assert member.raw != prototype.raw
            assert member.sign.num_symbols == prototype.sign.num_symbols

def test_corpus_format_is_validated(tmp_path):
    with pytest.raises(ValueError):
        load_corpus(write_corpus(tmp_path / "c.tsv", []), corpus_format="csv")

# sampling

def test_splitmix64_reference_value():
    assert splitmix64(0) == 0xE220A8397B1DCDAF

def test_generator_is_deterministic():
    a, b = XorShift64Star(42), XorShift64Star(42)
    assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]
    c = XorShift64Star(43)
    assert [XorShift64Star(42).next_u64() for _ in range(3)] != [c.next_u64() for _ in range(3)]

def test_below_bounds():
    rng = XorShift64Star(7)
    draws = [rng.below(6) for _ in range(6000)]
    assert set(draws) == set(range(6))
    assert all(600 < draws.count(v) < 1400 for v in range(6))
    with pytest.raises(ValueError):
        rng.below(0)

def test_sample_full_corpus_is_permutation():
    corpus = list(range(50))
    sample = sample_signs(corpus, 50, seed=3)
    assert sorted(sample) == corpus

def test_sample_same_seed():
    corpus = list(range(1000))
    assert sample_signs(corpus, 100, seed=42) == sample_signs(corpus, 100, seed=42)

def test_sample_different_seeds():
    corpus = list(range(1000))
    for seed in range(10):
        first = sample_signs(corpus, 100, seed=seed)
        second = sample_signs(corpus, 100, seed=seed + 1000)
        assert first != second
        assert len(set(first)) == 100

def test_sample_too_large():
    with pytest.raises(SampleTooLarge) as excinfo:
        sample_signs(list(range(5)), 6, seed=0)
    assert excinfo.value.required == 6
    assert excinfo.value.available == 5

def test_sample_does_not_mutate_input():
    corpus = list(range(20))
    sample_signs(corpus, 10, seed=1)
    assert corpus == list(range(20))

# distribution

def test_distribution_identical_pair():
    hello = parse_sign(HELLO)
    histogram = score_distribution(entries_from([hello, hello]), "symbol_distance")
    assert histogram.total == 2
    assert histogram.counts[-1] == 2
    assert sum(histogram.counts[:-1]) == 0

@pytest.mark.parametrize("metric", ["bleu", "chrf", "symbol_distance"])
def test_distribution_conservation(metric: str):
    rng = random.Random(9)
    sample = entries_from([random_sign(rng) for _ in range(12)])
    histogram = score_distribution(sample, metric, bins=10)
    assert histogram.total == 12 * 11
    assert sum(histogram.counts) == histogram.total
    assert histogram.num_bins == 10

def test_pair_scores_order():
    rng = random.Random(4)
    sample = entries_from([random_sign(rng) for _ in range(4)])
    metric = get_metric("bleu")
    expected = [metric(a.sign, b.sign) for a in sample for b in sample if a is not b]
    assert list(pair_scores(sample, metric)) == expected

def test_histogram_edges_and_csv():
    histogram = Histogram.from_scores([0.0, 0.5, 1.0, 1.0], bins=4)
    assert histogram.bin_edges == (0.0, 0.25, 0.5, 0.75, 1.0)
    assert histogram.counts == (1, 0, 1, 2)
    assert histogram.to_csv() == ("bin_start,bin_end,count\n"
                                  "0.000000,0.250000,1\n"
                                  "0.250000,0.500000,0\n"
                                  "0.500000,0.750000,1\n"
                                  "0.750000,1.000000,2\n")

def test_histogram_rejects_one_bin():
    with pytest.raises(ValueError):
        Histogram.from_scores([0.5], bins=1)

def test_bleu_mass_near_zero_for_unrelated_signs():
    rng = random.Random(12)
    sample = entries_from([random_sign(rng, 2, 6) for _ in range(30)])
    histogram = score_distribution(sample, "bleu", bins=10)
    assert histogram.counts[0] > histogram.total / 2

def test_distribution_parallel_is_identical():
    rng = random.Random(31)
    sample = entries_from([random_sign(rng) for _ in range(10)])
    serial = score_distribution(sample, "symbol_distance")
    parallel = score_distribution(sample, "symbol_distance", num_workers=2)
    assert serial == parallel
    assert serial.to_csv() == parallel.to_csv()

def test_score_summary():
    summary = ScoreSummary.from_scores("bleu", [0.0, 0.1, 0.2, 0.9, 1.0])
    assert summary.count == 5
    assert summary.median == pytest.approx(0.2)
    assert summary.q1 == pytest.approx(0.1)
    assert summary.q3 == pytest.approx(0.9)
    assert summary.iqr == pytest.approx(0.8)
    assert summary.tail_fraction == pytest.approx(0.4)
    data = json.loads(summary.to_json())
    assert data["metric"] == "bleu"
    assert data["iqr"] == pytest.approx(0.8)
    with pytest.raises(ValueError):
        ScoreSummary.from_scores("bleu", [])

# nearest neighbors

def test_reordered_copy_ranks_first():
    hello = parse_sign(HELLO)
    copy = hello.with_symbols(reversed(hello.symbols))
    rng = random.Random(1)
    corpus = entries_from([random_sign(rng) for _ in range(20)]) + [CorpusEntry("copy", copy, serialize_sign(copy))]
    neighbors = nearest_neighbors(hello, corpus, "symbol_distance")
    assert neighbors.entries[0] == ("copy", 1.0)

def test_equal_serialization_is_excluded():
    hello = parse_sign(HELLO)
    corpus = [CorpusEntry("self", hello, HELLO),
              CorpusEntry("upper", parse_sign(HELLO_HEX_UPPER), HELLO_HEX_UPPER),
              CorpusEntry("moved", hello.shifted(3, 0), serialize_sign(hello.shifted(3, 0)))]
    neighbors = nearest_neighbors(hello, corpus, "symbol_distance", query_id="q")
    assert neighbors.ids == ["moved"]
    assert neighbors.query_id == "q"

def test_shifted_copy_beats_random_signs():
    rng = random.Random(77)
    query = random_sign(rng, 3, 6)
    shifted = query.shifted(6, 0, index=0)
    corpus = entries_from([random_sign(rng) for _ in range(50)])
    corpus.append(CorpusEntry("shifted", shifted, serialize_sign(shifted)))
    neighbors = nearest_neighbors(query, corpus, "symbol_distance")
    assert neighbors.ids[0] == "shifted"
    assert len(neighbors.entries) == 10

def test_k_larger_than_corpus():
    rng = random.Random(5)
    corpus = entries_from([random_sign(rng) for _ in range(4)])
    neighbors = nearest_neighbors(parse_sign(HELLO), corpus, "chrf", k=10)
    assert sorted(neighbors.ids) == [entry.id for entry in corpus]
    scores = [score for _, score in neighbors.entries]
    assert scores == sorted(scores, reverse=True)

def test_ties_break_by_id():
    hello = parse_sign(HELLO)
    other = hello.shifted(20, 0)
    corpus = [CorpusEntry(name, other, serialize_sign(other)) for name in ("b", "c", "a")]
    assert nearest_neighbors(hello, corpus, "symbol_distance").ids == ["a", "b", "c"]

def test_neighbor_scores_are_sound():
    rng = random.Random(13)
    corpus = entries_from([random_sign(rng) for _ in range(25)])
    query = random_sign(rng)
    metric = SymbolDistanceMetric()
    by_id = {entry.id: entry for entry in corpus}
    for entry_id, score in nearest_neighbors(query, corpus, metric, k=25).entries:
        assert score == metric(query, by_id[entry_id].sign)

def test_neighbor_ranking_ignores_gamma():
    rng = random.Random(23)
    corpus = entries_from([perturb_sign(rng, random_sign(rng, 2, 6)) for _ in range(60)])
    for _ in range(5):
        query = random_sign(rng, 2, 6)
        low = nearest_neighbors(query, corpus, "symbol_distance", MetricParams(gamma=1.0), k=20)
        high = nearest_neighbors(query, corpus, "symbol_distance", MetricParams(gamma=2.0), k=20)
        assert low.ids == high.ids

def test_neighbors_parallel_is_identical():
    rng = random.Random(29)
    corpus = entries_from([random_sign(rng) for _ in range(15)])
    query = random_sign(rng)
    serial = nearest_neighbors(query, corpus, "bleu", k=5)
    parallel = nearest_neighbors(query, corpus, "bleu", k=5, num_workers=2)
    assert serial.to_json() == parallel.to_json()

def test_neighbor_json():
    neighbors = NeighborList("q", (("a", 0.5), ("b", 0.25)), k=10)
    assert json.loads(neighbors.to_json()) == [{"id": "a", "score": 0.5}, {"id": "b", "score": 0.25}]
    assert '"score": 0.500000' in neighbors.to_json()
    assert NeighborList("q", (), k=1).to_json() == "[]\n"

def test_nearest_rejects_bad_arguments():
    corpus = entries_from([parse_sign(HELLO)])
    with pytest.raises(ValueError):
        nearest_neighbors(parse_sign("M500x500"), corpus, "bleu", k=0)
    with pytest.raises(ValueError):
        nearest_neighbors(parse_sign("M500x500"), [], "bleu")

# evaluation files

def test_evaluate_files(tmp_path):
    hyp = tmp_path / "hyp.txt"
    ref = tmp_path / "ref.txt"
    hyp.write_text(f"{HELLO} M500x500\n{HELLO}\n", encoding="utf-8")
    ref.write_text(f"M500x500 {HELLO}\n{HELLO}\n", encoding="utf-8")
    assert evaluate_files(str(hyp), str(ref), "symbol_distance") == 1.0

def test_evaluate_files_length_mismatch(tmp_path):
    hyp = tmp_path / "hyp.txt"
    ref = tmp_path / "ref.txt"
    hyp.write_text(f"{HELLO}\n{HELLO}\n", encoding="utf-8")
    ref.write_text(f"{HELLO}\n", encoding="utf-8")
    with pytest.raises(CorpusError):
        evaluate_files(str(hyp), str(ref), "bleu")

def test_evaluate_files_reports_line(tmp_path):
    hyp = tmp_path / "hyp.txt"
    ref = tmp_path / "ref.txt"
    hyp.write_text(f"{HELLO}\nM500x500 Q\n", encoding="utf-8")
    ref.write_text(f"{HELLO}\n{HELLO}\n", encoding="utf-8")
    with pytest.raises(MalformedFsw) as excinfo:
        evaluate_files(str(hyp), str(ref), "bleu")
    assert excinfo.value.line == 2
