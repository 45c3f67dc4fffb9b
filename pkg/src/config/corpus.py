import enum
import pathlib
import typing

import pydantic
from pydantic_settings import SettingsConfigDict

from . import _utils


class IdfSource(enum.StrEnum):
    """Where the document frequencies for the IDF weights come from."""

    TRAIN = "train"
    """Every `t` and `h` sentence of the training files is one document."""
    FILE = "file"
    """A previously persisted IDF model (see the `build-idf` command)."""


class CorpusConfig(_utils.BaseSettings):
    """Configs for reading corpora and weighting their terms."""

    model_config = SettingsConfigDict(env_prefix="ASSIN_CORPUS_")

    IDF_SOURCE: IdfSource = IdfSource.TRAIN
    IDF_PATH: pathlib.Path | None = None

    @pydantic.model_validator(mode="after")
    def _validate_idf_path(self) -> typing.Self:
        if self.IDF_SOURCE == IdfSource.FILE and self.IDF_PATH is None:
            raise _utils.required_by_error(self, "IDF_PATH", "when IDF_SOURCE is 'file'")
        return self
