"""Feature dumps: one CSV row per pair with its id, its 15 features and its gold labels (empty when absent).

Next to every dump, '<dump>.meta.json' records what its features were extracted with (the IDF statistics and
the embeddings dimension), so a model trained from the dump is applied with the same weights.
"""

import dataclasses
import io
import os
import pathlib
import typing

import numpy as np
import numpy.typing as npt
import pandas as pd
import pydantic

from services.corpus import Dataset, EntailmentClass, IdfModel
from utils import exceptions, files

from .models import FEATURE_COUNT, FEATURE_NAMES


ID_COLUMN: typing.Final = "id"
SIMILARITY_COLUMN: typing.Final = "similarity"
ENTAILMENT_COLUMN: typing.Final = "entailment"
COLUMNS: typing.Final = (ID_COLUMN, *FEATURE_NAMES, SIMILARITY_COLUMN, ENTAILMENT_COLUMN)


class FeatureDumpMeta(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    embeddings_dim: pydantic.PositiveInt
    idf: IdfModel


@dataclasses.dataclass(frozen=True, slots=True)
class FeatureDump:
    ids: list[str]
    X: npt.NDArray[np.float64]
    similarity: list[float | None]
    entailment: list[EntailmentClass | None]
    meta: FeatureDumpMeta

    def __len__(self) -> int:
        return len(self.ids)


def meta_path(path: str | os.PathLike) -> pathlib.Path:
    """Where the `FeatureDumpMeta` of the dump at `path` lives."""
    path = pathlib.Path(path)
    return path.with_name(f"{path.name}.meta.json")


def write_feature_dump(
    dataset: Dataset, X: npt.NDArray, path: str | os.PathLike, idf: IdfModel, embeddings_dim: int
) -> None:
    """Write the features `X` of the pairs of `dataset` (row `i` belongs to pair `i`), extracted with `idf`."""
    if X.shape != (len(dataset), FEATURE_COUNT):
        raise exceptions.DimensionMismatchError(len(dataset), X.shape[0], what="feature rows")
    df = pd.DataFrame(X, columns=list(FEATURE_NAMES))
    df.insert(0, ID_COLUMN, dataset.ids)
    df[SIMILARITY_COLUMN] = [p.similarity for p in dataset.pairs]
    df[ENTAILMENT_COLUMN] = [p.entailment.value if p.entailment else None for p in dataset.pairs]
    buf = io.StringIO()
    df.to_csv(buf, index=False, lineterminator="\n")
    files.write_text(meta_path(path), FeatureDumpMeta(embeddings_dim=embeddings_dim, idf=idf).model_dump_json())
    files.write_text(path, buf.getvalue())


def _read_meta(path: str | os.PathLike) -> FeatureDumpMeta:
    meta = meta_path(path)
    try:
        with open(meta, "rb") as f:
            return FeatureDumpMeta.model_validate_json(f.read())
    except OSError as err:
        raise exceptions.ModelFileError(meta, err.strerror or str(err)) from None
    except pydantic.ValidationError as err:
        raise exceptions.ModelFileError(meta, f"not a feature dump description: {err.errors()[0]['msg']}") from None


def read_feature_dump(path: str | os.PathLike) -> FeatureDump:
    """Read a file written by `write_feature_dump()`, with its description.

    :raise ModelFileError:
        When the file or its description can't be read, or its header doesn't match the feature layout.
    """
    try:
        df = pd.read_csv(
            path,
            dtype={ID_COLUMN: str, ENTAILMENT_COLUMN: str},
            keep_default_na=False,
            float_precision="round_trip",
        )
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as err:
        raise exceptions.ModelFileError(path, f"unreadable feature dump: {err}") from None
    if tuple(df.columns) != COLUMNS:
        raise exceptions.ModelFileError(path, f"unexpected header {list(df.columns)}")

    try:
        X = df[list(FEATURE_NAMES)].to_numpy(dtype=np.float64)
    except ValueError as err:
        raise exceptions.ModelFileError(path, f"non-numeric feature value: {err}") from None
    similarity = pd.to_numeric(df[SIMILARITY_COLUMN].replace("", np.nan), errors="coerce")
    return FeatureDump(
        ids=df[ID_COLUMN].tolist(),
        X=X,
        similarity=[None if pd.isna(v) else float(v) for v in similarity],
        entailment=[
            EntailmentClass.parse(v, pid) if v else None for v, pid in zip(df[ENTAILMENT_COLUMN], df[ID_COLUMN])
        ],
        meta=_read_meta(path),
    )
