"""Prediction files: CSV with an `id` column and a `similarity` and/or an `entailment` column."""

import dataclasses
import io
import os
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
import pandas as pd

from services.corpus import EntailmentClass
from utils import exceptions, files


@dataclasses.dataclass(frozen=True, slots=True)
class Predictions:
    ids: list[str]
    similarity: dict[str, float] | None
    entailment: dict[str, EntailmentClass] | None


def write_predictions(
    path: str | os.PathLike,
    ids: Sequence[str],
    similarity: npt.ArrayLike | None = None,
    entailment: Sequence[EntailmentClass] | None = None,
) -> None:
    """Similarity scores are written with 4 decimals."""
    df = pd.DataFrame({"id": list(ids)})
    if similarity is not None:
        df["similarity"] = [f"{v:.4f}" for v in np.asarray(similarity, dtype=np.float64)]
    if entailment is not None:
        df["entailment"] = [c.value for c in entailment]
    buf = io.StringIO()
    df.to_csv(buf, index=False, lineterminator="\n")
    files.write_text(path, buf.getvalue())


def read_predictions(path: str | os.PathLike) -> Predictions:
    """
    :raise ModelFileError:
        When the file can't be read, has no `id` column or repeats an id.
    """
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as err:
        raise exceptions.ModelFileError(path, f"unreadable predictions: {err}") from None
    if "id" not in df.columns:
        raise exceptions.ModelFileError(path, "no 'id' column")
    ids = df["id"].tolist()
    if df["id"].duplicated().any():
        raise exceptions.ModelFileError(path, f"duplicate id '{df['id'][df['id'].duplicated()].iloc[0]}'")

    similarity = None
    if "similarity" in df.columns:
        try:
            similarity = {pid: float(v) for pid, v in zip(ids, df["similarity"])}
        except ValueError as err:
            raise exceptions.ModelFileError(path, f"non-numeric similarity: {err}") from None
    entailment = None
    if "entailment" in df.columns:
        entailment = {pid: EntailmentClass.parse(v, pid) for pid, v in zip(ids, df["entailment"])}
    return Predictions(ids=ids, similarity=similarity, entailment=entailment)
