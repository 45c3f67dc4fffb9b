import math

import numpy as np
import numpy.typing as npt

from utils import exceptions


def rbf_kernel(a: npt.ArrayLike, b: npt.ArrayLike, gamma: float) -> float:
    """exp(-gamma * |a - b|^2).

    :raise DimensionMismatchError:
        When `a` and `b` don't have the same length.
    """
    va = np.asarray(a, dtype=np.float64).reshape(-1)
    vb = np.asarray(b, dtype=np.float64).reshape(-1)
    if va.shape != vb.shape:
        raise exceptions.DimensionMismatchError(va.shape[0], vb.shape[0])
    diff = va - vb
    return math.exp(-gamma * float(np.dot(diff, diff)))


def rbf_matrix(A: npt.ArrayLike, B: npt.ArrayLike, gamma: float, chunk_rows: int = 1024) -> npt.NDArray[np.float64]:
    """The Gaussian kernel between every row of `A` and every row of `B`, `chunk_rows` rows of `A` at a time."""
    A = np.atleast_2d(np.asarray(A, dtype=np.float64))
    B = np.atleast_2d(np.asarray(B, dtype=np.float64))
    if A.shape[1] != B.shape[1]:
        raise exceptions.DimensionMismatchError(B.shape[1], A.shape[1])
    out = np.empty((A.shape[0], B.shape[0]), dtype=np.float64)
    b_sq = np.einsum("ij,ij->i", B, B)
    for start in range(0, A.shape[0], chunk_rows):
        block = A[start : start + chunk_rows]
        a_sq = np.einsum("ij,ij->i", block, block)
        sq = a_sq[:, None] + b_sq[None, :] - 2.0 * (block @ B.T)
        np.maximum(sq, 0.0, out=sq)
        out[start : start + chunk_rows] = np.exp(-gamma * sq)
    return out
