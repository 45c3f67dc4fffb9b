"""The evaluation measures of both tasks."""

import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from utils import exceptions


def _reals(pred: npt.ArrayLike, gold: npt.ArrayLike, minimum: int) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(pred, dtype=np.float64).reshape(-1)
    g = np.asarray(gold, dtype=np.float64).reshape(-1)
    if p.shape != g.shape or p.shape[0] < minimum:
        raise exceptions.LengthMismatchError(p.shape[0], g.shape[0], minimum)
    return p, g


def _labels(pred: Sequence, gold: Sequence, minimum: int) -> tuple[list[str], list[str]]:
    if len(pred) != len(gold) or len(pred) < minimum:
        raise exceptions.LengthMismatchError(len(pred), len(gold), minimum)
    return [str(x) for x in pred], [str(x) for x in gold]


def pearson(pred: npt.ArrayLike, gold: npt.ArrayLike) -> float:
    """Sample Pearson correlation coefficient.

    :raise LengthMismatchError:
        When the lengths differ or are below 2.
    :raise UndefinedCorrelationError:
        When either vector is constant.
    """
    p, g = _reals(pred, gold, 2)
    dp = p - p.mean()
    dg = g - g.mean()
    if np.all(p == p[0]):
        raise exceptions.UndefinedCorrelationError("the prediction")
    if np.all(g == g[0]):
        raise exceptions.UndefinedCorrelationError("the gold")
    r = float(np.dot(dp, dg)) / math.sqrt(float(np.dot(dp, dp)) * float(np.dot(dg, dg)))
    return min(1.0, max(-1.0, r))


def mse(pred: npt.ArrayLike, gold: npt.ArrayLike) -> float:
    """Mean squared error.

    :raise LengthMismatchError:
        When the lengths differ or are 0.
    """
    p, g = _reals(pred, gold, 1)
    d = p - g
    return float(np.dot(d, d)) / d.shape[0]


def accuracy(pred: Sequence, gold: Sequence) -> float:
    """Fraction of exact matches.

    :raise LengthMismatchError:
        When the lengths differ or are 0.
    """
    p, g = _labels(pred, gold, 1)
    return sum(a == b for a, b in zip(p, g)) / len(p)


def f1(pred: Sequence, gold: Sequence, classes: Sequence[str]) -> tuple[list[float], float]:
    """Per-class F1 = 2PR / (P + R), 0 when P + R = 0, and their unweighted mean.

    :return tuple[2]:
    - the F1 of every class, in the order of `classes`.
    - the macro average.

    :raise LengthMismatchError:
        When the lengths differ.
    """
    p, g = _labels(pred, gold, 0)
    per_class = []
    for c in map(str, classes):
        tp = sum(a == c and b == c for a, b in zip(p, g))
        predicted = sum(a == c for a in p)
        actual = sum(b == c for b in g)
        precision = tp / predicted if predicted else 0.0
        recall = tp / actual if actual else 0.0
        per_class.append(2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0)
    return per_class, sum(per_class) / len(per_class) if per_class else 0.0


def confusion_matrix(pred: Sequence, gold: Sequence, classes: Sequence[str]) -> npt.NDArray[np.int64]:
    """Counts with gold classes as rows and predicted classes as columns."""
    p, g = _labels(pred, gold, 0)
    index = {str(c): i for i, c in enumerate(classes)}
    M = np.zeros((len(index), len(index)), dtype=np.int64)
    for a, b in zip(p, g):
        M[index[b], index[a]] += 1
    return M
