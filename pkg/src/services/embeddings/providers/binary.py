import os
import pathlib
import typing

import numpy as np

from config.embeddings import EmbeddingsFormat
from utils import exceptions, files, logging

from ..models import EmbeddingTable
from ..types import STORAGE_DTYPE
from .abstract import BaseEmbeddingsProvider


log = logging.getLogger("embeddings")


_HEADER_BYTES: typing.Final[frozenset[int]] = frozenset(b"0123456789 \t\r")


def parse_header(path: typing.Any, data: bytes) -> tuple[int, int, int]:
    """Parse the ASCII '<count> <dim>\\n' header shared by both formats.

    :return tuple[3]:
        count, dim, and the byte offset of the first record.
    """
    nl = data.find(b"\n")
    if nl == -1:
        raise exceptions.EmbeddingsHeaderError(path, len(data), data[:64])
    header = data[:nl]
    for offset, byte in enumerate(header):
        if byte not in _HEADER_BYTES:
            raise exceptions.EmbeddingsHeaderError(path, offset, header)
    fields = header.split()
    if len(fields) != 2:
        raise exceptions.EmbeddingsHeaderError(path, nl, header)
    count, dim = int(fields[0]), int(fields[1])
    if dim < 1:
        raise exceptions.EmbeddingsHeaderError(path, header.rfind(fields[1]), header)
    return count, dim, nl + 1


class Word2VecBinaryProvider(BaseEmbeddingsProvider):
    """The word2vec tool's binary output.

    Each record is the token, one 0x20 byte, `dim` little-endian float32 and an optional 0x0A.
    """

    __slots__ = ()

    format = EmbeddingsFormat.BINARY

    @typing.override
    def read(self, path: str | os.PathLike) -> EmbeddingTable:
        data = pathlib.Path(path).read_bytes()
        count, dim, pos = parse_header(path, data)
        width = STORAGE_DTYPE.itemsize * dim
        tokens: list[str] = []
        vectors = np.empty((count, dim), dtype=STORAGE_DTYPE)
        for i in range(count):
            space = data.find(b" ", pos)
            if space == -1:
                raise exceptions.EmbeddingsTruncatedError(path, i, None, "no token terminator")
            raw = data[pos:space]
            try:
                token = raw.decode("utf-8")
            except UnicodeDecodeError as err:
                raise exceptions.EmbeddingsParseError(path, f"token index {i} is not valid UTF-8: {err}")
            start = space + 1
            if start + width > len(data):
                available = (len(data) - start) // STORAGE_DTYPE.itemsize
                raise exceptions.EmbeddingsTruncatedError(path, i, token, f"{available} of {dim} components")
            vectors[i] = np.frombuffer(data, dtype=STORAGE_DTYPE, count=dim, offset=start)
            tokens.append(token)
            pos = start + width
            if data[pos : pos + 1] == b"\n":
                pos += 1
        if data[pos:].strip():
            log.warning(f"'{path}': ignoring {len(data) - pos} bytes after the last of {count} records")
        return EmbeddingTable(tokens, vectors)

    @typing.override
    def write(self, table: EmbeddingTable, path: str | os.PathLike) -> None:
        chunks = [self._header(table)]
        for token, vector in zip(table.tokens, table.vectors):
            self._check_writable(token)
            chunks.append(token.encode("utf-8") + b" " + vector.astype(STORAGE_DTYPE).tobytes() + b"\n")
        files.write_bytes(path, b"".join(chunks))
