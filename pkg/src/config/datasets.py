import pathlib

from pydantic_settings import SettingsConfigDict

from . import _utils


class DatasetsConfig(_utils.BaseSettings):
    """Locations of the ASSIN distribution files and of the Portuguese word vectors.

    All of them are optional: they are only read by the reproduction checks, which are skipped when missing.
    """

    model_config = SettingsConfigDict(env_prefix="ASSIN_DATA_")

    PTBR_TRAIN: pathlib.Path | None = None
    PTPT_TRAIN: pathlib.Path | None = None
    PTBR_TRIAL: pathlib.Path | None = None
    PTPT_TRIAL: pathlib.Path | None = None
    PTBR_TEST: pathlib.Path | None = None
    PTPT_TEST: pathlib.Path | None = None
    EMBEDDINGS: pathlib.Path | None = None

    def available(self, *names: str) -> bool:
        """If every one of the named files is configured and exists."""
        paths = [getattr(self, n) for n in names]
        return all(p is not None and p.is_file() for p in paths)
