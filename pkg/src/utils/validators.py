import numpy as np
import numpy.typing as npt

from utils import exceptions


def finite_matrix(X: npt.ArrayLike, what: str = "X") -> npt.NDArray[np.float64]:
    """Validate `X` is a 2-D matrix of finite reals and return it as a float64 array."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise exceptions.DimensionMismatchError(2, arr.ndim, what=f"{what} rank")
    if not np.all(np.isfinite(arr)):
        raise exceptions.NonFiniteInputError(what)
    return arr


def finite_vector(y: npt.ArrayLike, what: str = "y") -> npt.NDArray[np.float64]:
    """Validate `y` is a 1-D vector of finite reals and return it as a float64 array."""
    arr = np.asarray(y, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise exceptions.NonFiniteInputError(what)
    return arr


def same_rows(X: npt.NDArray, y: npt.NDArray) -> None:
    """Validate the design matrix `X` has one row per target in `y`."""
    if X.shape[0] != y.shape[0]:
        raise exceptions.DimensionMismatchError(X.shape[0], y.shape[0], what="target length")


def similarity_in_range(v: float | None, pair_id: str | None = None) -> float | None:
    """Validate a similarity label lies in [1, 5]."""
    if v is not None and not (1.0 <= v <= 5.0):
        raise exceptions.LabelRangeError(v, pair_id)
    return v
