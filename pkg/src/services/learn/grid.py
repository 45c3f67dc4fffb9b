"""Grid search with k-fold cross validation."""

import concurrent.futures
import itertools
import typing
from collections.abc import Mapping, Sequence

import numpy as np
import numpy.typing as npt

from utils import exceptions, logging

from .models import GridSearchResult
from .providers import BaseLearner


log = logging.getLogger("learn")


def expand_grid(grid: Mapping[str, Sequence[float]], order: Sequence[str] | None = None) -> list[dict[str, float]]:
    """Every combination of the `grid` lists, the last parameter of `order` varying fastest.

    :raise EmptyGridError:
        When the grid has no parameter or one of its lists is empty.
    """
    names = list(order if order is not None else grid.keys())
    if not names or any(not grid.get(name) for name in names):
        raise exceptions.EmptyGridError()
    return [dict(zip(names, map(float, values))) for values in itertools.product(*(grid[n] for n in names))]


def kfold_indices(n: int, folds: int, seed: int) -> list[npt.NDArray[np.intp]]:
    """Shuffle `range(n)` once with `seed`, then cut it in `folds` contiguous, near-equal blocks.

    :raise TooFewSamplesError:
        When `n < folds`.
    """
    if n < folds:
        raise exceptions.TooFewSamplesError(folds, n)
    order = np.random.default_rng(seed).permutation(n)
    return [np.sort(block) for block in np.array_split(order, folds)]


# the shared read-only inputs of a worker process, set once by `_init_worker()`
_worker: dict[str, typing.Any] = {}


def _init_worker(learner: BaseLearner, X: np.ndarray, y: np.ndarray, splits: list[np.ndarray]) -> None:
    _worker.update(learner=learner, X=X, y=y, splits=splits)


def _fold_score(
    learner: BaseLearner,
    X: np.ndarray,
    y: np.ndarray,
    splits: list[np.ndarray],
    params: Mapping[str, float],
    fold: int,
) -> float:
    test = splits[fold]
    train = np.concatenate([s for i, s in enumerate(splits) if i != fold])
    model = learner.fit(X[train], y[train], params)
    return learner.score(y[test], learner.predict(model, X[test]))


def _worker_fold_score(params: Mapping[str, float], fold: int) -> float:
    return _fold_score(_worker["learner"], _worker["X"], _worker["y"], _worker["splits"], params, fold)


def grid_search_cv(
    learner: BaseLearner,
    grid: Mapping[str, Sequence[float]],
    X: npt.NDArray[np.float64],
    y: npt.NDArray,
    folds: int = 5,
    seed: int = 42,
    workers: int = 1,
) -> GridSearchResult:
    """Score every candidate of `grid` by its mean fold score, the first best candidate wins.

    Every candidate sees the same folds (see `kfold_indices()`).

    :param workers:
        With more than 1, the (candidate, fold) fits run on that many processes. The result does not depend on it.

    :raise EmptyGridError:
        See `expand_grid()`.
    :raise TooFewSamplesError:
        See `kfold_indices()`.
    """
    candidates = expand_grid(grid, learner.learner.hyperparameters)
    splits = kfold_indices(X.shape[0], folds, seed)
    jobs = [(c, f) for c in range(len(candidates)) for f in range(folds)]

    if workers <= 1:
        flat = [_fold_score(learner, X, y, splits, candidates[c], f) for c, f in jobs]
    else:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(learner, X, y, splits)
        ) as pool:
            flat = list(pool.map(_worker_fold_score, [candidates[c] for c, _ in jobs], [f for _, f in jobs]))

    fold_scores = [flat[c * folds : (c + 1) * folds] for c in range(len(candidates))]
    cv_scores = [float(np.mean(s)) for s in fold_scores]
    for params, score in zip(candidates, cv_scores):
        log.info(f"{learner.learner} {params}: mean {learner.metric} {score:.4f}")
    best = int(np.argmax(cv_scores))
    log.info(f"best {learner.learner} candidate: {candidates[best]} ({learner.metric} {cv_scores[best]:.4f})")
    return GridSearchResult(
        candidates=candidates,
        cv_scores=cv_scores,
        fold_scores=fold_scores,
        best_index=best,
        folds=folds,
        seed=seed,
        metric=learner.metric,
    )
