import os
import pathlib
import typing

import numpy as np

from config.embeddings import EmbeddingsFormat
from utils import exceptions, files

from ..models import EmbeddingTable
from ..types import STORAGE_DTYPE
from .abstract import BaseEmbeddingsProvider
from .binary import parse_header


class Word2VecTextProvider(BaseEmbeddingsProvider):
    """The word2vec text format: the same header, then one 'token v1 ... vdim' record per line."""

    __slots__ = ()

    format = EmbeddingsFormat.TEXT

    @typing.override
    def read(self, path: str | os.PathLike) -> EmbeddingTable:
        data = pathlib.Path(path).read_bytes()
        count, dim, pos = parse_header(path, data)
        try:
            lines = data[pos:].decode("utf-8").split("\n")
        except UnicodeDecodeError as err:
            raise exceptions.EmbeddingsParseError(path, f"not valid UTF-8: {err}")
        tokens: list[str] = []
        vectors = np.empty((count, dim), dtype=STORAGE_DTYPE)
        line_no = 1  # the header
        for line in lines:
            line_no += 1
            fields = line.split()
            if not fields:
                continue
            i = len(tokens)
            if i == count:
                raise exceptions.EmbeddingsValueError(path, line_no, f"more records than the declared {count}")
            if len(fields) - 1 < dim:
                raise exceptions.EmbeddingsTruncatedError(
                    path, i, fields[0], f"line {line_no} has {len(fields) - 1} of {dim} components"
                )
            if len(fields) - 1 > dim:
                raise exceptions.EmbeddingsValueError(path, line_no, f"{len(fields) - 1} components, expected {dim}")
            try:
                values = np.array(fields[1:], dtype=np.float64)
            except ValueError as err:
                raise exceptions.EmbeddingsValueError(path, line_no, f"non-numeric component: {err}")
            if not np.all(np.isfinite(values)):
                raise exceptions.EmbeddingsValueError(path, line_no, "non-finite component")
            vectors[i] = values
            tokens.append(fields[0])
        if len(tokens) < count:
            raise exceptions.EmbeddingsTruncatedError(path, len(tokens), None, f"file ends after {len(tokens)} records")
        return EmbeddingTable(tokens, vectors)

    @typing.override
    def write(self, table: EmbeddingTable, path: str | os.PathLike) -> None:
        lines = [self._header(table).decode("ascii")]
        for token, vector in zip(table.tokens, table.vectors):
            self._check_writable(token)
            # 9 significant digits round-trip any float32 exactly
            lines.append(token + " " + " ".join(format(float(v), ".9g") for v in vector) + "\n")
        files.write_text(path, "".join(lines))
