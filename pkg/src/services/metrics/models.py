import typing
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
import pydantic

from services.corpus import EntailmentClass

from .measures import accuracy, f1, mse, pearson


class EvalReport(pydantic.BaseModel):
    """Evaluation of one split, serialized as a flat document.

    The similarity fields are **None** when only the entailment task was evaluated, and vice versa.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    pearson: float | None = pydantic.Field(None, ge=-1, le=1)
    mse: float | None = pydantic.Field(None, ge=0)
    accuracy: float | None = pydantic.Field(None, ge=0, le=1)
    f1_per_class: tuple[float, float, float] | None = None
    """F1 of None, Entailment and Paraphrase."""
    f1_macro: float | None = pydantic.Field(None, ge=0, le=1)
    n: pydantic.NonNegativeInt
    split: str | None = None

    @pydantic.model_serializer(mode="plain")
    def _flat(self) -> dict[str, typing.Any]:
        out: dict[str, typing.Any] = {}
        if self.split is not None:
            out["split"] = self.split
        out["pearson"] = self.pearson
        out["mse"] = self.mse
        out["accuracy_pct"] = None if self.accuracy is None else round(100 * self.accuracy, 2)
        per_class = self.f1_per_class or (None, None, None)
        for c, v in zip(EntailmentClass.ordered(), per_class):
            out[f"f1_{c.value.lower()}"] = v
        out["f1_macro"] = self.f1_macro
        out["n"] = self.n
        return out


def build_report(
    similarity: tuple[npt.ArrayLike, npt.ArrayLike] | None = None,
    entailment: tuple[Sequence[str], Sequence[str]] | None = None,
    split: str | None = None,
) -> EvalReport:
    """Assemble an `EvalReport` from (predicted, gold) similarity scores and/or (predicted, gold) classes."""
    fields: dict[str, typing.Any] = {"split": split}
    n = 0
    if similarity is not None:
        pred, gold = similarity
        fields["pearson"] = pearson(pred, gold)
        fields["mse"] = mse(pred, gold)
        n = len(np.asarray(gold).reshape(-1))
    if entailment is not None:
        pred_c, gold_c = entailment
        per_class, macro = f1(pred_c, gold_c, [c.value for c in EntailmentClass.ordered()])
        fields["accuracy"] = accuracy(pred_c, gold_c)
        fields["f1_per_class"] = tuple(per_class)
        fields["f1_macro"] = macro
        n = len(gold_c)
    return EvalReport(n=n, **fields)
