"""Sequential minimal optimization for the Gaussian-kernel SVM and epsilon-SVR duals.

Both duals are solved in the common form

    minimize  1/2 a^T Q a + p^T a    subject to  s^T a = 0,  0 <= a_t <= C

where `s` holds the +1/-1 sign of every variable and Q_tu = s_t s_u K(t, u).
For the classifier the variables are the n samples, p = -1 and s = the labels.
For the regressor there are 2n variables (a, a*), p = [eps - y; eps + y], s = [+1; -1] and
the coefficient of sample i is a_i - a*_i.
Working pairs are chosen with second-order information, the decision function is
f(x) = sum_t s_t a_t K(t, x) - rho.
"""

import collections
import dataclasses

import numpy as np
import numpy.typing as npt

from utils import exceptions, logging, validators

from .kernels import rbf_matrix
from .models import KernelModel


log = logging.getLogger("learn")

TAU = 1e-12


@dataclasses.dataclass(frozen=True, slots=True)
class SmoSolution:
    alpha: npt.NDArray[np.float64]
    gradient: npt.NDArray[np.float64]
    rho: float
    steps: int
    violation: float
    """Maximal KKT violation (the gap of the most violating pair) at termination."""


class _KernelRows:
    """Rows of the sample kernel matrix, computed on demand and kept in a bounded LRU cache."""

    __slots__ = ("_X", "_gamma", "_capacity", "_rows", "diagonal")

    def __init__(self, X: npt.NDArray[np.float64], gamma: float, capacity: int):
        self._X = X
        self._gamma = gamma
        self._capacity = max(2, capacity)
        self._rows: collections.OrderedDict[int, npt.NDArray[np.float64]] = collections.OrderedDict()
        self.diagonal = np.ones(X.shape[0], dtype=np.float64)

    def __getitem__(self, i: int) -> npt.NDArray[np.float64]:
        row = self._rows.get(i)
        if row is None:
            row = rbf_matrix(self._X[i : i + 1], self._X, self._gamma)[0]
            row[i] = 1.0
            self._rows[i] = row
            if len(self._rows) > self._capacity:
                self._rows.popitem(last=False)
        else:
            self._rows.move_to_end(i)
        return row


class _DenseRows:
    __slots__ = ("_K", "diagonal")

    def __init__(self, K: npt.NDArray[np.float64]):
        self._K = K
        self.diagonal = np.diag(K).copy()

    def __getitem__(self, i: int) -> npt.NDArray[np.float64]:
        return self._K[i]


def _working_sets(s: np.ndarray, alpha: np.ndarray, C: float) -> tuple[np.ndarray, np.ndarray]:
    up = ((s > 0) & (alpha < C)) | ((s < 0) & (alpha > 0))
    low = ((s > 0) & (alpha > 0)) | ((s < 0) & (alpha < C))
    return up, low


def kkt_violation(G: npt.ArrayLike, s: npt.ArrayLike, alpha: npt.ArrayLike, C: float) -> float:
    """max over I_up of -s_t G_t minus min over I_low of -s_t G_t (0 when either set is empty).

    The dual is optimal iff this is <= 0, SMO stops once it is below its tolerance.
    """
    G, s, alpha = (np.asarray(a, dtype=np.float64) for a in (G, s, alpha))
    up, low = _working_sets(s, alpha, C)
    if not up.any() or not low.any():
        return 0.0
    return max(0.0, float(np.max(-s[up] * G[up])) + float(np.max(s[low] * G[low])))


def dual_objective(Q: npt.ArrayLike, p: npt.ArrayLike, alpha: npt.ArrayLike) -> float:
    """1/2 a^T Q a + p^T a."""
    Q, p, alpha = (np.asarray(a, dtype=np.float64) for a in (Q, p, alpha))
    return 0.5 * float(alpha @ Q @ alpha) + float(p @ alpha)


def svm_problem(K: npt.ArrayLike, labels: npt.ArrayLike) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The dense (Q, p, s) of the classifier dual, `labels` being +1/-1."""
    K = np.asarray(K, dtype=np.float64)
    s = np.asarray(labels, dtype=np.float64)
    return np.outer(s, s) * K, -np.ones_like(s), s


def svr_problem(K: npt.ArrayLike, y: npt.ArrayLike, epsilon: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The dense (Q, p, s) of the regressor dual over the variables (a, a*)."""
    K = np.asarray(K, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    s = np.concatenate([np.ones_like(y), -np.ones_like(y)])
    return np.outer(s, s) * np.tile(K, (2, 2)), np.concatenate([epsilon - y, epsilon + y]), s


def _rho(G: np.ndarray, s: np.ndarray, alpha: np.ndarray, C: float) -> float:
    sG = s * G
    at_upper = alpha >= C
    at_lower = alpha <= 0
    free = ~(at_upper | at_lower)
    if free.any():
        return float(sG[free].mean())
    ub = np.min(sG[(at_upper & (s < 0)) | (at_lower & (s > 0))], initial=np.inf)
    lb = np.max(sG[(at_upper & (s > 0)) | (at_lower & (s < 0))], initial=-np.inf)
    if not np.isfinite(ub):
        return float(lb)
    if not np.isfinite(lb):
        return float(ub)
    return float((ub + lb) / 2)


def solve(
    kernel: _KernelRows | _DenseRows,
    p: npt.NDArray[np.float64],
    s: npt.NDArray[np.float64],
    C: float,
    tol: float,
    max_steps: int,
) -> SmoSolution:
    """Run SMO on a problem whose variable `t` belongs to sample `t mod n` of `kernel`.

    :raise ConvergenceError:
        When the KKT violation is still above `tol` after `max_steps` pair updates.
    """
    m = p.shape[0]
    n = kernel.diagonal.shape[0]
    sample = np.arange(m) % n
    QD = kernel.diagonal[sample]
    alpha = np.zeros(m, dtype=np.float64)
    G = p.astype(np.float64).copy()

    def q_row(t: int) -> np.ndarray:
        return s[t] * s * kernel[int(sample[t])][sample]

    steps = 0
    gap = np.inf
    while True:
        up, low = _working_sets(s, alpha, C)
        if not up.any() or not low.any():
            gap = 0.0
            break
        minus_sG = -s * G
        i = int(np.flatnonzero(up)[np.argmax(minus_sG[up])])
        g_max = float(minus_sG[i])
        g_max2 = float(np.max(-minus_sG[low]))
        gap = g_max + g_max2
        if gap < tol:
            break
        if steps >= max_steps:
            raise exceptions.ConvergenceError("SMO", max_steps, gap, tol)

        Q_i = q_row(i)
        # second-order choice of j among the violating members of I_low
        b = g_max - minus_sG
        candidates = low & (b > 0)
        a = QD[i] + QD - 2.0 * s[i] * s * Q_i
        a = np.where(a > 0, a, TAU)
        gains = np.full(m, np.inf)
        gains[candidates] = -(b[candidates] ** 2) / a[candidates]
        j = int(np.argmin(gains))
        Q_j = q_row(j)

        old_i, old_j = alpha[i], alpha[j]
        if s[i] != s[j]:
            quad = QD[i] + QD[j] + 2.0 * Q_i[j]
            delta = (-G[i] - G[j]) / max(quad, TAU)
            diff = old_i - old_j
            ai, aj = old_i + delta, old_j + delta
            if diff > 0:
                if aj < 0:
                    aj, ai = 0.0, diff
            elif ai < 0:
                ai, aj = 0.0, -diff
            if diff > 0:
                if ai > C:
                    ai, aj = C, C - diff
            elif aj > C:
                aj, ai = C, C + diff
        else:
            quad = QD[i] + QD[j] - 2.0 * Q_i[j]
            delta = (G[i] - G[j]) / max(quad, TAU)
            total = old_i + old_j
            ai, aj = old_i - delta, old_j + delta
            if total > C:
                if ai > C:
                    ai, aj = C, total - C
            elif aj < 0:
                aj, ai = 0.0, total
            if total > C:
                if aj > C:
                    aj, ai = C, total - C
            elif ai < 0:
                ai, aj = 0.0, total

        alpha[i], alpha[j] = ai, aj
        G += Q_i * (ai - old_i) + Q_j * (aj - old_j)
        steps += 1

    return SmoSolution(alpha=alpha, gradient=G, rho=_rho(G, s, alpha, C), steps=steps, violation=max(gap, 0.0))


def _kernel(X: np.ndarray, gamma: float, cache_rows: int) -> _KernelRows | _DenseRows:
    if X.shape[0] <= cache_rows:
        K = rbf_matrix(X, X, gamma)
        np.fill_diagonal(K, 1.0)
        return _DenseRows(K)
    return _KernelRows(X, gamma, cache_rows)


def _support(X: np.ndarray, coefs: np.ndarray) -> tuple[list[list[float]], list[float]]:
    keep = np.flatnonzero(coefs != 0.0)
    return X[keep].tolist(), coefs[keep].tolist()


def svr_fit(
    X: npt.ArrayLike,
    y: npt.ArrayLike,
    C: float,
    epsilon: float,
    gamma: float,
    tol: float = 1e-3,
    max_steps: int = 10_000_000,
    cache_rows: int = 4096,
) -> KernelModel:
    """Fit an epsilon-SVR with the Gaussian kernel.

    :raise NonFiniteInputError:
        For NaN or infinite inputs.
    :raise TooFewSamplesError:
        For fewer than 2 rows.
    :raise ConvergenceError:
        See `solve()`.
    """
    M = validators.finite_matrix(X)
    target = validators.finite_vector(y)
    validators.same_rows(M, target)
    if M.shape[0] < 2:
        raise exceptions.TooFewSamplesError(2, M.shape[0])
    n = M.shape[0]
    s = np.concatenate([np.ones(n), -np.ones(n)])
    p = np.concatenate([epsilon - target, epsilon + target])
    sol = solve(_kernel(M, gamma, cache_rows), p, s, C, tol, max_steps)
    log.debug(f"SVR fit: C={C:g}, gamma={gamma:g}, epsilon={epsilon:g}, {sol.steps} steps")

    svs, coefs = _support(M, sol.alpha[:n] - sol.alpha[n:])
    return KernelModel(
        kind="svr",
        support_vectors=svs,
        dual_coefs=coefs,
        bias=-sol.rho,
        gamma=gamma,
        C=C,
        epsilon=epsilon,
        n_features=M.shape[1],
    )


def svm_fit_binary(
    X: npt.ArrayLike,
    labels: npt.ArrayLike,
    C: float,
    gamma: float,
    tol: float = 1e-3,
    max_steps: int = 10_000_000,
    cache_rows: int = 4096,
) -> KernelModel:
    """Fit a two-class Gaussian-kernel SVM, `labels` being +1/-1.

    :raise SingleClassError:
        When only one of the two labels is present.
    """
    M = validators.finite_matrix(X)
    s = validators.finite_vector(labels)
    validators.same_rows(M, s)
    present = set(np.unique(s).tolist())
    if not present <= {1.0, -1.0}:
        raise exceptions.NonFiniteInputError("labels (must be +1 or -1)")
    if len(present) < 2:
        raise exceptions.SingleClassError(present)
    sol = solve(_kernel(M, gamma, cache_rows), -np.ones_like(s), s, C, tol, max_steps)
    log.debug(f"SVM fit: C={C:g}, gamma={gamma:g}, {sol.steps} steps")

    svs, coefs = _support(M, s * sol.alpha)
    return KernelModel(
        kind="svm-binary",
        support_vectors=svs,
        dual_coefs=coefs,
        bias=-sol.rho,
        gamma=gamma,
        C=C,
        n_features=M.shape[1],
    )


def constant_binary(value: float, gamma: float, C: float, n_features: int) -> KernelModel:
    """A machine without support vectors whose decision is always `value`."""
    return KernelModel(
        kind="svm-binary", support_vectors=[], dual_coefs=[], bias=value, gamma=gamma, C=C, n_features=n_features
    )
