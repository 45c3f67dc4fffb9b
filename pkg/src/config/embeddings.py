import enum
import pathlib
import typing

from pydantic_settings import SettingsConfigDict

from . import _utils


class EmbeddingsFormat(enum.StrEnum):
    """A word2vec interchange format and the file suffixes it is recognised by."""

    BINARY = ("bin", (".bin",))
    TEXT = ("txt", (".txt", ".vec"))

    def __new__(cls, name: str, suffixes: tuple[str, ...]):
        member = str.__new__(cls, name)
        member._value_ = name
        return member

    def __init__(self, name: str, suffixes: tuple[str, ...]):
        self.suffixes = suffixes

    @classmethod
    def from_path(cls, path: str | pathlib.Path) -> typing.Self:
        """The format matching the suffix of `path`, defaulting to `BINARY` (the word2vec tool's default output)."""
        suffix = pathlib.Path(path).suffix.lower()
        for member in cls:
            if suffix in member.suffixes:
                return member
        return cls.BINARY


class EmbeddingsConfig(_utils.BaseSettings):
    """Configs for the word-embedding table."""

    model_config = SettingsConfigDict(env_prefix="ASSIN_EMBEDDINGS_")

    PATH: pathlib.Path | None = None
    FORMAT: EmbeddingsFormat | None = None
    """When **None**, detected from the suffix of the file."""
