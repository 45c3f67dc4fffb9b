import typing

import numpy as np
import numpy.typing as npt
import pydantic

from utils import exceptions, validators

from .design import expand_interactions, standardize_apply
from .kernels import rbf_matrix


FiniteFloat = typing.Annotated[float, pydantic.Field(allow_inf_nan=False)]


class _Model(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    def _rows(self, X: npt.ArrayLike, width: int) -> npt.NDArray[np.float64]:
        M = validators.finite_matrix(np.atleast_2d(np.asarray(X, dtype=np.float64)), "features")
        if M.shape[1] != width:
            raise exceptions.DimensionMismatchError(width, M.shape[1], what="feature")
        return M


class LassoModel(_Model):
    """A linear model fitted with an L1 penalty on standardized (optionally interaction-expanded) features.

    The penalized form min (1/2n)|y - b0 - Z w|^2 + lambda |w|_1 is equivalent to the constrained
    form |w|_1 <= t for some t decreasing in lambda.
    """

    kind: typing.Literal["lasso"] = "lasso"
    intercept: FiniteFloat
    weights: list[FiniteFloat]
    """One weight per (standardized) design column."""
    lambda_: pydantic.NonNegativeFloat = pydantic.Field(alias="lambda")
    column_means: list[FiniteFloat]
    column_scales: list[pydantic.PositiveFloat]
    interactions: bool = False
    """Whether the base features are expanded with their pairwise products before standardization."""
    n_features: pydantic.PositiveInt
    """Number of base features a row must have."""

    model_config = pydantic.ConfigDict(populate_by_name=True)

    @pydantic.model_validator(mode="after")
    def _validate_lengths(self) -> typing.Self:
        if not (len(self.weights) == len(self.column_means) == len(self.column_scales)):
            raise ValueError("weights, column_means and column_scales must have equal lengths")
        return self

    def design(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """The standardized design matrix of raw feature rows `X`."""
        M = self._rows(X, self.n_features)
        if self.interactions:
            M = expand_interactions(M)
        return standardize_apply(M, self.column_means, self.column_scales)

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return self.intercept + self.design(X) @ np.asarray(self.weights, dtype=np.float64)

    def raw_coefficients(self) -> tuple[float, npt.NDArray[np.float64]]:
        """Intercept and weights expressed on the unstandardized design columns."""
        w = np.asarray(self.weights) / np.asarray(self.column_scales)
        return self.intercept - float(np.dot(w, self.column_means)), w


class KernelModel(_Model):
    """A Gaussian-kernel machine: f(x) = sum_i coef_i k(sv_i, x) + bias.

    For 'svr' `f` is the regression output, for 'svm-binary' its sign is the class (+1 or -1).
    A machine without support vectors is constant.
    """

    kind: typing.Literal["svr", "svm-binary"]
    support_vectors: list[list[FiniteFloat]]
    dual_coefs: list[FiniteFloat]
    bias: FiniteFloat
    gamma: pydantic.PositiveFloat
    C: pydantic.PositiveFloat
    epsilon: pydantic.NonNegativeFloat = 0.0
    n_features: pydantic.PositiveInt

    @pydantic.model_validator(mode="after")
    def _validate_coefs(self) -> typing.Self:
        if len(self.support_vectors) != len(self.dual_coefs):
            raise ValueError("one dual coefficient per support vector is required")
        if any(len(sv) != self.n_features for sv in self.support_vectors):
            raise ValueError(f"every support vector must have {self.n_features} components")
        if any(abs(c) > self.C * (1 + 1e-12) for c in self.dual_coefs):
            raise ValueError(f"dual coefficients must lie in [-C, C] = [{-self.C}, {self.C}]")
        return self

    def decision(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        M = self._rows(X, self.n_features)
        if not self.dual_coefs:
            return np.full(M.shape[0], self.bias)
        K = rbf_matrix(M, np.asarray(self.support_vectors, dtype=np.float64), self.gamma)
        return K @ np.asarray(self.dual_coefs, dtype=np.float64) + self.bias


class PairMachine(pydantic.BaseModel):
    """A one-vs-one machine, a decision >= 0 is a vote for `positive`."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    positive: str
    negative: str
    machine: KernelModel


class MulticlassSvm(_Model):
    """One-vs-one Gaussian-kernel classifier: one `PairMachine` per unordered pair of `classes`."""

    kind: typing.Literal["svm"] = "svm"
    classes: list[str]
    machines: list[PairMachine]
    n_features: pydantic.PositiveInt

    @pydantic.model_validator(mode="after")
    def _validate_machines(self) -> typing.Self:
        k = len(self.classes)
        if k < 2 or len(set(self.classes)) != k:
            raise ValueError("at least 2 distinct classes are required")
        if len(self.machines) != k * (k - 1) // 2:
            raise ValueError(f"{k} classes require {k * (k - 1) // 2} machines, received {len(self.machines)}")
        return self

    def decisions(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Decision values, one column per machine."""
        M = self._rows(X, self.n_features)
        return np.column_stack([m.machine.decision(M) for m in self.machines])

    def predict(self, X: npt.ArrayLike) -> list[str]:
        D = self.decisions(X)
        return [resolve_votes(self.classes, self.machines, row) for row in D]


def resolve_votes(
    classes: typing.Sequence[str], machines: typing.Sequence[PairMachine], decisions: npt.ArrayLike
) -> str:
    """The winner of a one-vs-one vote.

    A decision >= 0 votes for the machine's `positive` class, otherwise for its `negative` one.
    Ties on votes are broken by the largest summed decision margin (`+d` for positive, `-d` for negative),
    then by the order of `classes`.
    """
    votes = dict.fromkeys(classes, 0)
    margins = dict.fromkeys(classes, 0.0)
    for m, d in zip(machines, np.asarray(decisions, dtype=np.float64).reshape(-1)):
        votes[m.positive if d >= 0.0 else m.negative] += 1
        margins[m.positive] += float(d)
        margins[m.negative] -= float(d)
    return max(classes, key=lambda c: (votes[c], margins[c], -classes.index(c)))


TrainedModel = typing.Annotated[LassoModel | KernelModel | MulticlassSvm, pydantic.Field(discriminator="kind")]


class GridSearchResult(pydantic.BaseModel):
    """Outcome of a cross-validated grid search."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    candidates: list[dict[str, float]]
    """Every parameter combination tried, in grid order."""
    cv_scores: list[float]
    """Mean fold score of each of the `candidates`."""
    fold_scores: list[list[float]]
    best_index: pydantic.NonNegativeInt
    folds: pydantic.PositiveInt
    seed: int
    metric: str

    @pydantic.model_validator(mode="after")
    def _validate_best(self) -> typing.Self:
        if not (len(self.candidates) == len(self.cv_scores) == len(self.fold_scores)) or not self.candidates:
            raise ValueError("one score per candidate and at least one candidate are required")
        if self.best_index >= len(self.candidates):
            raise ValueError("best_index out of range")
        return self

    @property
    def best_params(self) -> dict[str, float]:
        return self.candidates[self.best_index]

    @property
    def best_score(self) -> float:
        return self.cv_scores[self.best_index]
