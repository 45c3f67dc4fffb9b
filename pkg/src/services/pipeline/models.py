import typing

import pydantic

from config.learn import Learner, Task
from services.corpus import IdfModel
from services.learn import GridSearchResult, TrainedModel


MODEL_FORMAT_VERSION: typing.Final = 1

LASSO_NOTE: typing.Final = (
    "penalized form: minimize (1/2n)|y - b0 - Zw|^2 + lambda*|w|_1 over the standardized design Z; "
    "for every lambda there is a bound t with the same solution under the constraint |w|_1 <= t, "
    "t decreasing as lambda grows"
)


class ModelBundle(pydantic.BaseModel):
    """Everything needed to predict for new sentence pairs: the trained model, its IDF weights and its provenance."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    format_version: typing.Literal[1] = MODEL_FORMAT_VERSION
    task: Task
    learner: Learner
    embeddings_dim: pydantic.PositiveInt
    idf: IdfModel
    model: TrainedModel
    search: GridSearchResult
    note: str = ""

    @pydantic.model_validator(mode="after")
    def _validate_kind(self) -> typing.Self:
        expected = {Learner.LASSO: "lasso", Learner.SVR: "svr", Learner.SVM: "svm"}[self.learner]
        if self.model.kind != expected:
            raise ValueError(f"a '{self.learner}' bundle can't hold a '{self.model.kind}' model")
        if self.learner.task != self.task:
            raise ValueError(f"learner '{self.learner}' doesn't solve task '{self.task}'")
        return self
