import typing
from collections.abc import Mapping, Sequence

import numpy as np
import numpy.typing as npt

from config.learn import Learner
from services.corpus import EntailmentClass
from utils import exceptions, logging, singleton, validators

from .grid import grid_search_cv
from .models import GridSearchResult, KernelModel, LassoModel, MulticlassSvm, TrainedModel
from .providers import BaseLearner
from .settings import SolverSettings


log = logging.getLogger("learn")

SIMILARITY_MIN: typing.Final = 1.0
SIMILARITY_MAX: typing.Final = 5.0


def learner_for(learner: Learner, settings: SolverSettings | None = None) -> BaseLearner:
    settings = settings or SolverSettings()
    match learner:
        case Learner.LASSO:
            from .providers.regression import LassoLearner

            return LassoLearner(settings)
        case Learner.SVR:
            from .providers.regression import SvrLearner

            return SvrLearner(settings)
        case Learner.SVM:
            from .providers.classification import SvmLearner

            return SvmLearner(settings)


# being a Singleton is just a precaution, everything should be using the 'LearnService' instance:
class _LearnService(singleton.Singleton):
    """Service for selecting, training and applying the learners."""

    __slots__ = ()

    def train(
        self,
        learner: Learner,
        X: npt.ArrayLike,
        y: Sequence[typing.Any],
        grid: Mapping[str, Sequence[float]] | None = None,
        folds: int = 5,
        seed: int = 42,
        workers: int = 1,
        settings: SolverSettings | None = None,
    ) -> tuple[TrainedModel, GridSearchResult]:
        """Grid-search the hyperparameters of `learner` by cross validation, then refit the best candidate on all rows.

        :param grid:
            Parameter lists overriding the learner's defaults, key by key.

        :raise ConfigError:
            When `grid` names a parameter the learner doesn't have.
        """
        impl = learner_for(learner, settings)
        M = validators.finite_matrix(X, "features")
        targets = impl.targets(y)
        validators.same_rows(M, targets)

        overrides = dict(grid or {})
        if unknown := set(overrides) - set(learner.hyperparameters):
            raise exceptions.ConfigError(
                f"unknown {learner} parameters {sorted(unknown)}, expected some of {list(learner.hyperparameters)}"
            )
        full_grid = {**impl.default_grid(M, targets), **overrides}

        log.info(f"searching {learner} over {M.shape[0]} rows, {folds} folds, seed {seed}")
        result = grid_search_cv(impl, full_grid, M, targets, folds=folds, seed=seed, workers=workers)
        model = impl.fit(M, targets, result.best_params)
        log.info(f"trained {learner} with {result.best_params}")
        return model, result

    def predict_similarity(self, model: TrainedModel | None, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Similarity scores clamped to [1, 5].

        :raise UntrainedModelError:
            When `model` is **None** or is not a regression model.
        """
        match model:
            case LassoModel():
                raw = model.predict(X)
            case KernelModel(kind="svr"):
                raw = model.decision(X)
            case _:
                raise exceptions.UntrainedModelError("similarity model")
        return np.clip(raw, SIMILARITY_MIN, SIMILARITY_MAX)

    def predict_entailment(self, model: TrainedModel | None, X: npt.ArrayLike) -> list[EntailmentClass]:
        """
        :raise UntrainedModelError:
            When `model` is **None** or is not an entailment classifier.
        """
        if not isinstance(model, MulticlassSvm):
            raise exceptions.UntrainedModelError("entailment model")
        return [EntailmentClass.parse(c) for c in model.predict(X)]


LearnService: typing.Final[_LearnService] = _LearnService()
"""Service for selecting, training and applying the learners."""
