import typing

import numpy as np
import numpy.typing as npt

from config.learn import Learner
from services.metrics import pearson
from utils import exceptions, logging, validators

from ..design import expand_interactions, standardize_apply, standardize_fit
from ..lasso import lambda_ladder, lambda_max, lasso_fit
from ..models import KernelModel, LassoModel
from ..smo import svr_fit
from .abstract import BaseLearner


log = logging.getLogger("learn")


class _RegressionLearner(BaseLearner):
    __slots__ = ()

    metric = "pearson"

    def targets(self, y: typing.Sequence[typing.Any]) -> npt.NDArray[np.float64]:
        return validators.finite_vector(np.asarray(y, dtype=np.float64), "targets")

    def score(self, y_true: npt.NDArray, y_pred: npt.NDArray) -> float:
        """Pearson correlation, 0 when it is undefined (a constant fold)."""
        try:
            return pearson(y_pred, y_true)
        except exceptions.UndefinedCorrelationError as err:
            log.warning(f"fold scored 0: {err}")
            return 0.0


class LassoLearner(_RegressionLearner):
    """L1-penalized linear regression over the features and all their pairwise products."""

    __slots__ = ()

    learner = Learner.LASSO

    def default_grid(self, X: npt.NDArray[np.float64], y: npt.NDArray) -> dict[str, list[float]]:
        design = expand_interactions(X)
        Z = standardize_apply(design, *standardize_fit(design))
        ladder = lambda_ladder(lambda_max(Z, y), self.settings.lambda_count, self.settings.lambda_ratio)
        return {"lambda": ladder}

    def fit(self, X: npt.NDArray[np.float64], y: npt.NDArray, params: typing.Mapping[str, float]) -> LassoModel:
        return lasso_fit(
            X,
            y,
            params["lambda"],
            tol=self.settings.lasso_tol,
            max_sweeps=self.settings.lasso_max_sweeps,
            interactions=True,
        )

    def predict(self, model: LassoModel, X: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:  # type: ignore
        return model.predict(X)


class SvrLearner(_RegressionLearner):
    """epsilon-SVR with the Gaussian kernel over the raw features."""

    __slots__ = ()

    learner = Learner.SVR

    def default_grid(self, X: npt.NDArray[np.float64], y: npt.NDArray) -> dict[str, list[float]]:
        return {
            "C": list(self.settings.grid_C),
            "gamma": list(self.settings.grid_gamma),
            "epsilon": list(self.settings.grid_epsilon),
        }

    def fit(self, X: npt.NDArray[np.float64], y: npt.NDArray, params: typing.Mapping[str, float]) -> KernelModel:
        return svr_fit(
            X,
            y,
            C=params["C"],
            epsilon=params["epsilon"],
            gamma=params["gamma"],
            tol=self.settings.smo_tol,
            max_steps=self.settings.smo_max_steps,
            cache_rows=self.settings.smo_cache_rows,
        )

    def predict(self, model: KernelModel, X: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:  # type: ignore
        return model.decision(X)
