"""Vector arithmetic shared by the feature extractor.

Inputs may be stored as 32-bit floats, every reduction runs in 64 bits.
"""

import math

import numpy as np
import numpy.typing as npt

from utils import exceptions

from .types import DenseMatrix


def _pair(a: npt.ArrayLike, b: npt.ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    va = np.asarray(a, dtype=np.float64).reshape(-1)
    vb = np.asarray(b, dtype=np.float64).reshape(-1)
    if va.shape != vb.shape:
        raise exceptions.DimensionMismatchError(va.shape[0], vb.shape[0])
    return va, vb


def cosine_similarity(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """dot(a, b) / (|a| |b|), clamped to [-1, 1].

    A zero vector on either side has cosine 0 with anything.

    :raise DimensionMismatchError:
        When `a` and `b` don't have the same length.
    """
    va, vb = _pair(a, b)
    norm_a = math.sqrt(float(np.dot(va, va)))
    norm_b = math.sqrt(float(np.dot(vb, vb)))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return min(1.0, max(-1.0, float(np.dot(va, vb)) / (norm_a * norm_b)))


def euclidean_distance(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """|a - b|_2.

    :raise DimensionMismatchError:
        When `a` and `b` don't have the same length.
    """
    va, vb = _pair(a, b)
    diff = va - vb
    return math.sqrt(float(np.dot(diff, diff)))


def cosine_matrix(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    """All-pairs cosine similarity between the rows of `A` and the rows of `B`.

    Same zero-vector and clamping rules as `cosine_similarity()`.
    """
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    if A.shape[1] != B.shape[1]:
        raise exceptions.DimensionMismatchError(A.shape[1], B.shape[1])
    norm_a = np.sqrt(np.einsum("ij,ij->i", A, A))
    norm_b = np.sqrt(np.einsum("ij,ij->i", B, B))
    denom = np.outer(norm_a, norm_b)
    dots = A @ B.T
    with np.errstate(divide="ignore", invalid="ignore"):
        cos = np.where(denom > 0.0, dots / np.where(denom > 0.0, denom, 1.0), 0.0)
    return np.clip(cos, -1.0, 1.0)
