import math

import numpy as np
import pytest

from services.corpus import Dataset, IdfModel, SentencePair, build_idf
from services.embeddings import EmbeddingTable
from services.features import (
    FEATURE_COUNT,
    FEATURE_NAMES,
    HISTOGRAM_GROUPS,
    NETWORK_BINS,
    SALIENCY_BINS,
    FeatureDumpMeta,
    FeaturesService,
    PairFeatures,
    dimension_bins,
    extract_features,
    extract_tokens,
    mean_vector_distances,
    meta_path,
    read_feature_dump,
    saliency_weighted_histogram,
    unweighted_all_pairs_histogram,
    unweighted_max_histogram,
    write_feature_dump,
)
from utils import exceptions


def _cos(a: list[float], b: list[float]) -> float:
    na = math.sqrt(math.fsum(x * x for x in a))
    nb = math.sqrt(math.fsum(y * y for y in b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return min(1.0, max(-1.0, math.fsum(x * y for x, y in zip(a, b)) / (na * nb)))


def _bin(value: float, edges: tuple[float, ...]) -> int:
    index = 0
    for k, edge in enumerate(edges):
        if value >= edge:
            index = k
    return index


def _directional(src, src_weights, dst, edges):
    hist = [0.0] * len(edges)
    for v, w in zip(src, src_weights):
        hist[_bin(max(_cos(v, u) for u in dst), edges)] += w
    total = math.fsum(src_weights)
    return [h / total for h in hist]


def _mean(vectors: list[list[float]], dim: int) -> list[float]:
    if not vectors:
        return [0.0] * dim
    return [math.fsum(v[k] for v in vectors) / len(vectors) for k in range(dim)]


def brute_force_features(tokens_1, tokens_2, emb: EmbeddingTable, idf: IdfModel) -> list[float]:
    """The 15 features, computed term by term with plain Python arithmetic."""
    v1 = [emb.lookup(t).tolist() for t in tokens_1 if t in emb]
    v2 = [emb.lookup(t).tolist() for t in tokens_2 if t in emb]
    w1 = [idf.idf(t) for t in tokens_1 if t in emb]
    w2 = [idf.idf(t) for t in tokens_2 if t in emb]

    if v1 and v2:
        s12 = _directional(v1, w1, v2, SALIENCY_BINS.edges)
        s21 = _directional(v2, w2, v1, SALIENCY_BINS.edges)
        saliency = [(a + b) / 2 for a, b in zip(s12, s21)]
        all_pairs = [0.0, 0.0, 0.0]
        for a in v1:
            for b in v2:
                all_pairs[_bin(_cos(a, b), NETWORK_BINS.edges)] += 1.0
        all_pairs = [c / (len(v1) * len(v2)) for c in all_pairs]
        m12 = _directional(v1, [1.0] * len(v1), v2, NETWORK_BINS.edges)
        m21 = _directional(v2, [1.0] * len(v2), v1, NETWORK_BINS.edges)
        max_sim = [(a + b) / 2 for a, b in zip(m12, m21)]
    else:
        saliency, all_pairs, max_sim = [0.0] * 3, [0.0] * 3, [0.0] * 3

    mean_1, mean_2 = _mean(v1, emb.dim), _mean(v2, emb.dim)
    euclid = math.sqrt(math.fsum((a - b) ** 2 for a, b in zip(mean_1, mean_2)))
    dims = [0.0] * 4
    for a, b in zip(mean_1, mean_2):
        d = abs(a - b)
        dims[0 if d < 0.001 else 1 if d < 0.01 else 2 if d < 0.02 else 3] += 1.0 / emb.dim
    return saliency + all_pairs + max_sim + [_cos(mean_1, mean_2), euclid] + dims


@pytest.fixture
def plane_table(rng) -> EmbeddingTable:
    """A 2-dimensional table of 12 random (nonzero) vectors."""
    return EmbeddingTable([f"w{i}" for i in range(12)], rng.normal(size=(12, 2)))


def _random_sentence(rng, max_len=6) -> list[str]:
    # 'oov*' tokens are never in the table
    vocab = [f"w{i}" for i in range(12)] + ["oov1", "oov2", "oov3"]
    return [vocab[i] for i in rng.integers(0, len(vocab), size=rng.integers(0, max_len + 1))]


class TestExtractTokens:
    def test_matches_brute_force(self, rng, plane_table):
        sentences = [_random_sentence(rng) for _ in range(400)]
        idf = build_idf(sentences)
        for _ in range(1000):
            t1, t2 = _random_sentence(rng), _random_sentence(rng)
            got = extract_tokens(t1, t2, plane_table, idf)
            assert got.shape == (FEATURE_COUNT,)
            assert np.all(np.isfinite(got))
            np.testing.assert_allclose(got, brute_force_features(t1, t2, plane_table, idf), rtol=0, atol=1e-12)

    def test_value_ranges(self, rng, plane_table, flat_idf):
        for _ in range(300):
            got = extract_tokens(_random_sentence(rng), _random_sentence(rng), plane_table, flat_idf)
            for group in HISTOGRAM_GROUPS:
                assert np.all((got[group] >= 0) & (got[group] <= 1))
                assert got[group].sum() == pytest.approx(1.0, abs=1e-12) or not got[group].any()
            assert -1.0 <= got[9] <= 1.0
            assert got[10] >= 0.0

    def test_group_functions_agree(self, rng, plane_table, flat_idf):
        for _ in range(50):
            t1, t2 = _random_sentence(rng), _random_sentence(rng)
            got = extract_tokens(t1, t2, plane_table, flat_idf)
            np.testing.assert_allclose(got[0:3], saliency_weighted_histogram(t1, t2, plane_table, flat_idf))
            np.testing.assert_allclose(got[3:6], unweighted_all_pairs_histogram(t1, t2, plane_table))
            np.testing.assert_allclose(got[6:9], unweighted_max_histogram(t1, t2, plane_table))
            np.testing.assert_allclose(got[9:11], mean_vector_distances(t1, t2, plane_table))
            np.testing.assert_allclose(got[11:15], dimension_bins(t1, t2, plane_table))

    def test_swapping_the_sentences(self, rng, plane_table):
        idf = build_idf([_random_sentence(rng) for _ in range(200)])
        for _ in range(500):
            t1, t2 = _random_sentence(rng), _random_sentence(rng)
            np.testing.assert_allclose(
                extract_tokens(t1, t2, plane_table, idf), extract_tokens(t2, t1, plane_table, idf), rtol=0, atol=1e-12
            )

    @pytest.mark.parametrize("scale", [0.25, 8.0, 1024.0])
    def test_scaling_the_embeddings(self, rng, plane_table, scale):
        # powers of two keep the float32 storage exact
        scaled = EmbeddingTable(list(plane_table), plane_table.vectors * scale)
        idf = build_idf([_random_sentence(rng) for _ in range(200)])
        for _ in range(300):
            t1, t2 = _random_sentence(rng), _random_sentence(rng)
            got = extract_tokens(t1, t2, scaled, idf)
            expected = extract_tokens(t1, t2, plane_table, idf)
            # every cosine-based feature is unchanged, the mean-vector distance scales along
            np.testing.assert_allclose(got[0:10], expected[0:10], rtol=0, atol=1e-12)
            assert got[10] == pytest.approx(scale * expected[10], rel=1e-12, abs=1e-12)

    def test_identical_sentences(self, tiny_table, flat_idf):
        tokens = ["o", "gato", "come", "peixe"]
        got = extract_tokens(tokens, tokens, tiny_table, flat_idf)
        assert got[9] == pytest.approx(1.0, abs=1e-12)
        assert got[10] == 0.0
        np.testing.assert_array_equal(got[11:15], [1.0, 0.0, 0.0, 0.0])
        # every term finds itself
        np.testing.assert_allclose(got[0:3], [0.0, 0.0, 1.0])
        np.testing.assert_allclose(got[6:9], [0.0, 0.0, 1.0])

    def test_sentence_without_known_tokens(self, tiny_table, flat_idf):
        got = extract_tokens(["nada", "disso"], ["o", "gato"], tiny_table, flat_idf)
        np.testing.assert_array_equal(got[0:9], np.zeros(9))
        assert got[9] == 0.0
        mean, _ = tiny_table.mean_vector(["o", "gato"])
        assert got[10] == pytest.approx(float(np.linalg.norm(mean)))

    def test_saliency_weights_rare_terms(self, tiny_table, flat_idf):
        # 'gato' is rare and matched exactly, 'come' is in every document and matches nothing
        idf = IdfModel(doc_count=100, doc_freq={"come": 100, "gato": 1})
        got = saliency_weighted_histogram(["come", "gato"], ["gato", "peixe"], tiny_table, idf)
        flat = saliency_weighted_histogram(["come", "gato"], ["gato", "peixe"], tiny_table, flat_idf)
        assert got[2] > flat[2]

    def test_negative_similarity_falls_in_first_saliency_bin(self, flat_idf):
        table = EmbeddingTable(["a", "b"], [[1.0, 0.0], [-1.0, 0.0]])
        np.testing.assert_allclose(saliency_weighted_histogram(["a"], ["b"], table, flat_idf), [1.0, 0.0, 0.0])
        np.testing.assert_allclose(unweighted_all_pairs_histogram(["a"], ["b"], table), [1.0, 0.0, 0.0])


class TestExtractFeatures:
    def test_tokenizes_the_pair(self, tiny_table, flat_idf):
        pair = SentencePair(id="1", text_t="O gato come peixe.", text_h="O cão bebe água!")
        feats = extract_features(pair, tiny_table, flat_idf)
        assert isinstance(feats, PairFeatures)
        assert len(feats) == FEATURE_COUNT == len(FEATURE_NAMES)
        np.testing.assert_array_equal(
            feats.as_array(),
            extract_tokens(["o", "gato", "come", "peixe"], ["o", "cão", "bebe", "água"], tiny_table, flat_idf),
        )

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            PairFeatures(values=(0.0,) * 14)


def _dataset(n: int, rng) -> Dataset:
    words = ["o", "gato", "cão", "come", "bebe", "peixe", "água", "rato"]
    pairs = []
    for i in range(n):
        t = " ".join(rng.choice(words, size=rng.integers(1, 6)))
        h = " ".join(rng.choice(words, size=rng.integers(1, 6)))
        pairs.append(SentencePair(id=f"p{i}", text_t=t, text_h=h, similarity=float(rng.uniform(1, 5))))
    return Dataset.from_pairs(pairs)


class TestFeaturesService:
    def test_parallel_matches_serial(self, rng, tiny_table, flat_idf):
        ds = _dataset(40, rng)
        serial = FeaturesService.extract_many(ds.pairs, tiny_table, flat_idf, workers=1)
        parallel = FeaturesService.extract_many(ds.pairs, tiny_table, flat_idf, workers=2)
        np.testing.assert_array_equal(serial, parallel)
        assert serial.shape == (40, FEATURE_COUNT)


class TestFeatureDump:
    def test_round_trip(self, tmp_path, rng, tiny_table, flat_idf):
        ds = _dataset(5, rng)
        X = FeaturesService.extract_many(ds.pairs, tiny_table, flat_idf)
        write_feature_dump(ds, X, tmp_path / "f.csv", flat_idf, tiny_table.dim)
        header = (tmp_path / "f.csv").read_text(encoding="utf-8").splitlines()[0].split(",")
        assert header == ["id", *FEATURE_NAMES, "similarity", "entailment"]
        dump = read_feature_dump(tmp_path / "f.csv")
        assert dump.ids == ds.ids
        np.testing.assert_array_equal(dump.X, X)
        assert dump.similarity == [p.similarity for p in ds.pairs]
        assert dump.entailment == [None] * 5
        assert dump.meta == FeatureDumpMeta(embeddings_dim=3, idf=flat_idf)

    def test_one_record_per_pair(self, tmp_path, tiny_table, flat_idf):
        ds = Dataset.from_pairs([SentencePair(id="só", text_t="o gato", text_h="o cão")])
        X = FeaturesService.extract_many(ds.pairs, tiny_table, flat_idf)
        write_feature_dump(ds, X, tmp_path / "f.csv", flat_idf, tiny_table.dim)
        assert len((tmp_path / "f.csv").read_text(encoding="utf-8").splitlines()) == 2

    def test_wrong_header(self, write_raw):
        with pytest.raises(exceptions.ModelFileError):
            read_feature_dump(write_raw("f.csv", "id,x\n1,2\n"))

    def test_requires_its_description(self, tmp_path, tiny_table, flat_idf):
        ds = Dataset.from_pairs([SentencePair(id="1", text_t="o gato", text_h="o cão")])
        X = FeaturesService.extract_many(ds.pairs, tiny_table, flat_idf)
        write_feature_dump(ds, X, tmp_path / "f.csv", flat_idf, tiny_table.dim)
        meta_path(tmp_path / "f.csv").unlink()
        with pytest.raises(exceptions.ModelFileError, match="meta.json"):
            read_feature_dump(tmp_path / "f.csv")
