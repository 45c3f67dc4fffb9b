import itertools
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from utils import exceptions, logging, validators

from .models import MulticlassSvm, PairMachine
from .smo import constant_binary, svm_fit_binary


log = logging.getLogger("learn")


def svm_fit_multiclass(
    X: npt.ArrayLike,
    labels: Sequence[str],
    C: float,
    gamma: float,
    tol: float = 1e-3,
    max_steps: int = 10_000_000,
    cache_rows: int = 4096,
    classes: Sequence[str] | None = None,
) -> MulticlassSvm:
    """Train one binary machine per unordered pair of `classes` (one-vs-one).

    The machine of the pair (a, b), a earlier in `classes`, sees the rows of a as +1 and those of b as -1.
    A pair with only one class in `labels` gets a constant machine voting for the present class
    (for `a` when neither is present).

    :param classes:
        The ordered class list, the distinct `labels` in first-seen order when **None**.

    :raise SingleClassError:
        When fewer than 2 of the `classes` occur in `labels`.
    """
    M = validators.finite_matrix(X)
    labels = [str(label) for label in labels]
    if len(labels) != M.shape[0]:
        raise exceptions.DimensionMismatchError(M.shape[0], len(labels), what="label count")
    classes = list(dict.fromkeys(labels)) if classes is None else [str(c) for c in classes]
    unknown = set(labels) - set(classes)
    if unknown:
        raise exceptions.LabelValueError(sorted(unknown)[0])
    present = [c for c in classes if c in set(labels)]
    if len(present) < 2:
        raise exceptions.SingleClassError(present)

    y = np.asarray(labels, dtype=object)
    machines = []
    for a, b in itertools.combinations(classes, 2):
        rows = np.flatnonzero((y == a) | (y == b))
        has_a, has_b = bool(np.any(y[rows] == a)), bool(np.any(y[rows] == b))
        if has_a and has_b:
            s = np.where(y[rows] == a, 1.0, -1.0)
            machine = svm_fit_binary(M[rows], s, C, gamma, tol, max_steps, cache_rows)
        else:
            log.warning(f"no training rows of class '{b if has_a else a}' for the '{a}' vs '{b}' machine")
            machine = constant_binary(1.0 if has_a or not has_b else -1.0, gamma, C, M.shape[1])
        machines.append(PairMachine(positive=a, negative=b, machine=machine))
    return MulticlassSvm(classes=classes, machines=machines, n_features=M.shape[1])
