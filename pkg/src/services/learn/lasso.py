"""L1-penalized least squares by cyclic coordinate descent.

All problems are solved on the standardized design Z with an unpenalized intercept (the mean of y):

    minimize  (1/2n) |y - b0 - Z w|^2 + lambda |w|_1
"""

import numpy as np
import numpy.typing as npt

from utils import exceptions, logging, validators

from .design import expand_interactions, standardize_apply, standardize_fit
from .models import LassoModel


log = logging.getLogger("learn")


def _soft_threshold(rho: float, lam: float) -> float:
    if rho > lam:
        return rho - lam
    if rho < -lam:
        return rho + lam
    return 0.0


def lasso_objective(Z: npt.ArrayLike, y: npt.ArrayLike, intercept: float, weights: npt.ArrayLike, lam: float) -> float:
    """(1/2n) |y - b0 - Z w|^2 + lambda |w|_1 on an already standardized `Z`."""
    Z = np.asarray(Z, dtype=np.float64)
    w = np.asarray(weights, dtype=np.float64)
    r = np.asarray(y, dtype=np.float64) - intercept - Z @ w
    return float(np.dot(r, r)) / (2 * Z.shape[0]) + lam * float(np.abs(w).sum())


def lambda_max(Z: npt.ArrayLike, y: npt.ArrayLike) -> float:
    """The smallest lambda for which all weights are 0: max_k |Z_k . (y - mean(y))| / n."""
    Z = np.asarray(Z, dtype=np.float64)
    yc = np.asarray(y, dtype=np.float64) - float(np.mean(y))
    if Z.shape[1] == 0:
        return 0.0
    # same per-column dot products as the descent, so lambda_max itself yields all-zero weights
    return max(abs(float(np.dot(Z[:, k], yc))) for k in range(Z.shape[1])) / Z.shape[0]


def lambda_ladder(lam_max: float, count: int = 20, ratio: float = 1e-4) -> list[float]:
    """`count` log-spaced values from `lam_max` down to `lam_max * ratio`.

    `[0.0]` when `lam_max` is 0, i.e. when no column correlates with the target.
    """
    if lam_max <= 0.0:
        return [0.0]
    if count == 1:
        return [lam_max]
    return [float(v) for v in np.geomspace(lam_max, lam_max * ratio, count)]


def coordinate_descent(
    Z: npt.NDArray[np.float64],
    y: npt.NDArray[np.float64],
    lam: float,
    tol: float,
    max_sweeps: int,
    trace: list[float] | None = None,
) -> tuple[float, npt.NDArray[np.float64], int]:
    """Solve the penalized problem on a standardized `Z`.

    Sweeps stop once the largest weight change of a sweep is below `tol`.

    :param trace:
        When provided, the objective after every sweep is appended to it.

    :return tuple[3]:
    - the intercept.
    - the weights.
    - the number of sweeps run.
    """
    n, p = Z.shape
    intercept = float(np.mean(y))
    w = np.zeros(p, dtype=np.float64)
    r = y - intercept
    # columns left constant by the standardization are all zeros and keep weight 0
    sq_norms = np.einsum("ij,ij->j", Z, Z) / n
    active = np.flatnonzero(sq_norms > 0.0)

    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        max_change = 0.0
        for k in active:
            old = w[k]
            z_k = Z[:, k]
            rho = float(np.dot(z_k, r)) / n + sq_norms[k] * old
            new = _soft_threshold(rho, lam) / sq_norms[k]
            if new != old:
                r -= z_k * (new - old)
                w[k] = new
                max_change = max(max_change, abs(new - old))
        if trace is not None:
            trace.append(float(np.dot(r, r)) / (2 * n) + lam * float(np.abs(w).sum()))
        if max_change < tol:
            break
    else:
        log.warning(f"coordinate descent stopped after {max_sweeps} sweeps (lambda={lam:.6g})")
    return intercept, w, sweeps


def lasso_fit(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    lam: float,
    tol: float = 1e-6,
    max_sweeps: int = 10_000,
    interactions: bool = False,
    trace: list[float] | None = None,
) -> LassoModel:
    """Fit a `LassoModel` to feature rows `X` and targets `y`.

    :param interactions:
        Expand `X` with all pairwise products of its columns before standardizing.
    :param trace:
        See `coordinate_descent()`.

    :raise NonFiniteInputError:
        For NaN or infinite inputs.
    :raise DimensionMismatchError:
        When `X` and `y` don't have the same number of rows.
    :raise TooFewSamplesError:
        For fewer than 2 rows.
    """
    if lam < 0.0 or not np.isfinite(lam):
        raise exceptions.NonFiniteInputError("lambda (must be a finite non-negative number)")
    base = validators.finite_matrix(X)
    target = validators.finite_vector(y)
    validators.same_rows(base, target)
    design = expand_interactions(base) if interactions else base
    means, scales = standardize_fit(design)
    Z = standardize_apply(design, means, scales)

    intercept, w, sweeps = coordinate_descent(Z, target, lam, tol, max_sweeps, trace)
    log.debug(f"lasso fit: lambda={lam:.6g}, {np.count_nonzero(w)}/{w.shape[0]} non-zero weights, {sweeps} sweeps")
    return LassoModel(
        intercept=intercept,
        weights=w.tolist(),
        lambda_=lam,
        column_means=means.tolist(),
        column_scales=scales.tolist(),
        interactions=interactions,
        n_features=base.shape[1],
    )


def lasso_predict(model: LassoModel, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
    return model.predict(X)
