import os
import typing
from collections.abc import Iterable, Sequence

from config.embeddings import EmbeddingsFormat
from utils import logging, singleton

from .models import EmbeddingTable
from .providers import BaseEmbeddingsProvider


log = logging.getLogger("embeddings")


def _provider(fmt: EmbeddingsFormat) -> BaseEmbeddingsProvider:
    match fmt:
        case EmbeddingsFormat.BINARY:
            from .providers.binary import Word2VecBinaryProvider

            return Word2VecBinaryProvider()
        case EmbeddingsFormat.TEXT:
            from .providers.text import Word2VecTextProvider

            return Word2VecTextProvider()


# being a Singleton is just a precaution, everything should be using the 'EmbeddingsService' instance:
class _EmbeddingsService(singleton.Singleton):
    """Service for reading and writing word-embedding tables."""

    __slots__ = ()

    def load(self, path: str | os.PathLike, fmt: EmbeddingsFormat | None = None) -> EmbeddingTable:
        """Load a table, in `fmt` or, when **None**, in the format matching the suffix of `path`."""
        fmt = fmt or EmbeddingsFormat.from_path(path)
        log.info(f"loading '{path}' ({fmt}) ...")
        table = _provider(fmt).read(path)
        log.info(f"loaded {table.count} vectors of dimension {table.dim}")
        return table

    def write(self, table: EmbeddingTable, path: str | os.PathLike, fmt: EmbeddingsFormat | None = None) -> None:
        """Write `table`, in `fmt` or, when **None**, in the format matching the suffix of `path`."""
        fmt = fmt or EmbeddingsFormat.from_path(path)
        _provider(fmt).write(table, path)
        log.info(f"wrote {table.count} vectors to '{path}' ({fmt})")

    def coverage(self, table: EmbeddingTable, sentences: Iterable[Sequence[str]]) -> dict[str, float | int]:
        """How much of a tokenized corpus the table covers, by occurrence and by distinct type."""
        occurrences = covered = 0
        types: set[str] = set()
        for tokens in sentences:
            occurrences += len(tokens)
            covered += sum(1 for t in tokens if t in table)
            types.update(tokens)
        types_covered = sum(1 for t in types if t in table)
        return {
            "tokens": occurrences,
            "tokens_in_vocabulary": covered,
            "token_coverage": covered / occurrences if occurrences else 0.0,
            "types": len(types),
            "types_in_vocabulary": types_covered,
            "type_coverage": types_covered / len(types) if types else 0.0,
        }


EmbeddingsService: typing.Final[_EmbeddingsService] = _EmbeddingsService()
"""Service for reading and writing word-embedding tables."""


def load_word2vec_binary(path: str | os.PathLike) -> EmbeddingTable:
    return EmbeddingsService.load(path, EmbeddingsFormat.BINARY)


def load_word2vec_text(path: str | os.PathLike) -> EmbeddingTable:
    return EmbeddingsService.load(path, EmbeddingsFormat.TEXT)


def write_word2vec_binary(table: EmbeddingTable, path: str | os.PathLike) -> None:
    EmbeddingsService.write(table, path, EmbeddingsFormat.BINARY)


def write_word2vec_text(table: EmbeddingTable, path: str | os.PathLike) -> None:
    EmbeddingsService.write(table, path, EmbeddingsFormat.TEXT)
