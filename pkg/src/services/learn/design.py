"""Design matrices: two-way interaction expansion and column standardization."""

import numpy as np
import numpy.typing as npt

from utils import exceptions, validators


def interaction_count(k: int) -> int:
    """Columns of the expanded design of `k` base features: k + k(k - 1)/2."""
    return k + k * (k - 1) // 2


def expand_interactions(X: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Append all pairwise products x_l * x_k (l < k, row-major order) to the base features.

    Accepts a single row or a matrix of rows.
    """
    arr = np.asarray(X, dtype=np.float64)
    single = arr.ndim == 1
    M = arr.reshape(1, -1) if single else arr
    left, right = np.triu_indices(M.shape[1], k=1)
    out = np.hstack([M, M[:, left] * M[:, right]])
    return out[0] if single else out


def standardize_fit(X: npt.ArrayLike) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Column means and population standard deviations of `X`.

    A zero-variance column gets scale 1, so it is only centered.

    :raise TooFewSamplesError:
        For fewer than 2 rows.
    :raise NonFiniteInputError:
        For NaN or infinite entries.
    """
    M = validators.finite_matrix(X)
    if M.shape[0] < 2:
        raise exceptions.TooFewSamplesError(2, M.shape[0])
    means = M.mean(axis=0)
    scales = M.std(axis=0)
    constant = np.ptp(M, axis=0) == 0.0
    # an exactly constant column standardizes to exact zeros
    means[constant] = M[0, constant]
    scales[constant | (scales == 0.0)] = 1.0
    return means, scales


def standardize_apply(X: npt.ArrayLike, means: npt.ArrayLike, scales: npt.ArrayLike) -> npt.NDArray[np.float64]:
    M = np.asarray(X, dtype=np.float64)
    means = np.asarray(means, dtype=np.float64)
    if M.shape[-1] != means.shape[0]:
        raise exceptions.DimensionMismatchError(means.shape[0], M.shape[-1], what="design")
    return (M - means) / np.asarray(scales, dtype=np.float64)
