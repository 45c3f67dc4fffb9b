import os
import typing
from abc import ABC, abstractmethod

from config.embeddings import EmbeddingsFormat
from utils import exceptions

from ..models import EmbeddingTable


class BaseEmbeddingsProvider(ABC):
    """Base class for a reader/writer of one word2vec interchange format."""

    __slots__ = ()

    format: typing.ClassVar[EmbeddingsFormat]

    @abstractmethod
    def read(self, path: str | os.PathLike) -> EmbeddingTable:
        """Load a whole table from `path`."""

    @abstractmethod
    def write(self, table: EmbeddingTable, path: str | os.PathLike) -> None:
        """Persist `table` to `path`, replacing it atomically."""

    @staticmethod
    def _header(table: EmbeddingTable) -> bytes:
        return f"{table.count} {table.dim}\n".encode("ascii")

    @staticmethod
    def _check_writable(token: str) -> None:
        if any(c.isspace() for c in token):
            raise exceptions.EmbeddingsError(
                f"token {token!r} contains whitespace and can't be written in word2vec format"
            )
