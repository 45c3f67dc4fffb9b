"""The semantic-network, mean-vector and dimension-bin features of a sentence pair.

Every term occurrence counts: a token repeated in a sentence contributes once per occurrence.
Out-of-vocabulary tokens are ignored, a side left without in-vocabulary tokens yields the degenerate
(all-zero) histograms.
"""

from collections.abc import Sequence

import numpy as np

from services.corpus import IdfModel, SentencePair, tokenize
from services.embeddings import EmbeddingTable, cosine_matrix, cosine_similarity, euclidean_distance

from .bins import DIMENSION_BINS, NETWORK_BINS, SALIENCY_BINS, BinSpec
from .models import FEATURE_COUNT, PairFeatures


Tokens = Sequence[str]


def _normalized(hist: np.ndarray) -> np.ndarray:
    total = hist.sum()
    return hist / total if total > 0.0 else np.zeros_like(hist)


def _directional_max(cos: np.ndarray, bins: BinSpec, weights: np.ndarray | None) -> np.ndarray:
    # rows are the source terms, columns the target terms
    if cos.shape[0] == 0 or cos.shape[1] == 0:
        return np.zeros(bins.size)
    return _normalized(bins.histogram(cos.max(axis=1), weights))


def _both_directions(cos: np.ndarray, bins: BinSpec, weights_1=None, weights_2=None) -> np.ndarray:
    return (_directional_max(cos, bins, weights_1) + _directional_max(cos.T, bins, weights_2)) / 2.0


def _all_pairs(cos: np.ndarray) -> np.ndarray:
    if cos.size == 0:
        return np.zeros(NETWORK_BINS.size)
    return _normalized(NETWORK_BINS.histogram(cos))


def _idf_weights(tokens: Tokens, emb: EmbeddingTable, idf: IdfModel) -> np.ndarray:
    return np.asarray([idf.idf(t) for t in tokens if t in emb], dtype=np.float64)


def saliency_weighted_histogram(tokens_1: Tokens, tokens_2: Tokens, emb: EmbeddingTable, idf: IdfModel) -> np.ndarray:
    """Histogram of the best cosine match of every term on the other side, weighted by the term's IDF.

    Each direction is normalized by its IDF mass, the two directions are averaged.
    Bins: [0, .15), [.15, .4), [.4, inf), negative similarities fall in the first one.
    """
    cos = cosine_matrix(emb.rows(tokens_1), emb.rows(tokens_2))
    return _both_directions(cos, SALIENCY_BINS, _idf_weights(tokens_1, emb, idf), _idf_weights(tokens_2, emb, idf))


def unweighted_all_pairs_histogram(tokens_1: Tokens, tokens_2: Tokens, emb: EmbeddingTable) -> np.ndarray:
    """Histogram of the cosine of every (s1 term, s2 term) pair, normalized by the pair count.

    Bins: [-1, .45), [.45, .8), [.8, inf).
    """
    return _all_pairs(cosine_matrix(emb.rows(tokens_1), emb.rows(tokens_2)))


def unweighted_max_histogram(tokens_1: Tokens, tokens_2: Tokens, emb: EmbeddingTable) -> np.ndarray:
    """Like `saliency_weighted_histogram()` with unit weights and the bins of `unweighted_all_pairs_histogram()`."""
    return _both_directions(cosine_matrix(emb.rows(tokens_1), emb.rows(tokens_2)), NETWORK_BINS)


def mean_vector_distances(tokens_1: Tokens, tokens_2: Tokens, emb: EmbeddingTable) -> tuple[float, float]:
    """:return tuple[2]: cosine similarity and Euclidean distance of the two mean vectors."""
    mean_1, _ = emb.mean_vector(tokens_1)
    mean_2, _ = emb.mean_vector(tokens_2)
    return cosine_similarity(mean_1, mean_2), euclidean_distance(mean_1, mean_2)


def dimension_bins(tokens_1: Tokens, tokens_2: Tokens, emb: EmbeddingTable) -> np.ndarray:
    """Share of the dimensions whose absolute mean-vector difference falls in each of
    (-inf, .001), [.001, .01), [.01, .02), [.02, inf).
    """
    mean_1, _ = emb.mean_vector(tokens_1)
    mean_2, _ = emb.mean_vector(tokens_2)
    return DIMENSION_BINS.histogram(np.abs(mean_1 - mean_2)) / emb.dim


def extract_tokens(tokens_1: Tokens, tokens_2: Tokens, emb: EmbeddingTable, idf: IdfModel) -> np.ndarray:
    """All 15 features of two tokenized sentences, as a vector."""
    cos = cosine_matrix(emb.rows(tokens_1), emb.rows(tokens_2))
    mean_1, _ = emb.mean_vector(tokens_1)
    mean_2, _ = emb.mean_vector(tokens_2)

    out = np.empty(FEATURE_COUNT, dtype=np.float64)
    out[0:3] = _both_directions(
        cos, SALIENCY_BINS, _idf_weights(tokens_1, emb, idf), _idf_weights(tokens_2, emb, idf)
    )
    out[3:6] = _all_pairs(cos)
    out[6:9] = _both_directions(cos, NETWORK_BINS)
    out[9] = cosine_similarity(mean_1, mean_2)
    out[10] = euclidean_distance(mean_1, mean_2)
    out[11:15] = DIMENSION_BINS.histogram(np.abs(mean_1 - mean_2)) / emb.dim
    return out


def extract_features(pair: SentencePair, emb: EmbeddingTable, idf: IdfModel) -> PairFeatures:
    """Tokenize both sentences of `pair` and compute their 15 features."""
    return PairFeatures.from_array(extract_tokens(tokenize(pair.text_t), tokenize(pair.text_h), emb, idf))
