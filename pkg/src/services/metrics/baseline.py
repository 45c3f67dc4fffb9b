"""Bag-of-words baseline: cosine of the term-frequency vectors of the two sentences."""

import math
from collections import Counter

import numpy as np
import numpy.typing as npt

from services.corpus import Dataset, tokenize
from utils import exceptions, validators


def tf_cosine(tokens_1: list[str], tokens_2: list[str]) -> float:
    """0 when either side has no token."""
    c1, c2 = Counter(tokens_1), Counter(tokens_2)
    if not c1 or not c2:
        return 0.0
    small, large = (c1, c2) if len(c1) <= len(c2) else (c2, c1)
    dot = sum(n * large[t] for t, n in small.items() if t in large)
    norm = math.sqrt(sum(n * n for n in c1.values())) * math.sqrt(sum(n * n for n in c2.values()))
    return min(1.0, dot / norm)


def bow_baseline_similarity(pairs: Dataset) -> npt.NDArray[np.float64]:
    """The term-frequency cosine of every pair, in order."""
    return np.asarray([tf_cosine(tokenize(p.text_t), tokenize(p.text_h)) for p in pairs.pairs], dtype=np.float64)


def fit_affine(scores: npt.ArrayLike, gold: npt.ArrayLike) -> tuple[float, float]:
    """Least-squares (slope, intercept) mapping `scores` onto `gold`.

    :raise TooFewSamplesError:
        For fewer than 2 scores.
    """
    x = validators.finite_vector(scores, "scores")
    y = validators.finite_vector(gold, "gold")
    if x.shape[0] < 2:
        raise exceptions.TooFewSamplesError(2, x.shape[0], "scores")
    if x.shape != y.shape:
        raise exceptions.DimensionMismatchError(x.shape[0], y.shape[0], what="gold length")
    A = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(A, y, rcond=None)
    return float(slope), float(intercept)


def apply_affine(scores: npt.ArrayLike, slope: float, intercept: float) -> npt.NDArray[np.float64]:
    """Map `scores` and clamp the result to [1, 5]."""
    return np.clip(slope * np.asarray(scores, dtype=np.float64) + intercept, 1.0, 5.0)
