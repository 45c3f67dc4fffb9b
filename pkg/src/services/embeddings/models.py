import typing
from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from utils import exceptions

from .types import STORAGE_DTYPE, DenseMatrix, DenseVector


class EmbeddingTable:
    """An immutable token -> vector map of a fixed dimension.

    Vectors are stored as 32-bit floats in one read-only matrix (row `i` belongs to the `i`-th token,
    in file order), every reduction (mean, dot, norm) is accumulated in 64 bits.\n
    Safe for concurrent read access.
    """

    __slots__ = ("_tokens", "_index", "_vectors")

    def __init__(self, tokens: Sequence[str], vectors: npt.ArrayLike):
        """
        :raise DimensionMismatchError:
            When `vectors` is not a `len(tokens) x dim` matrix with `dim` >= 1.
        :raise DuplicateTokenError:
            When a token repeats.
        :raise EmbeddingsError:
            When a token is empty or a component is not finite.
        """
        matrix = np.array(vectors, dtype=STORAGE_DTYPE, copy=True)
        if matrix.ndim != 2:
            raise exceptions.DimensionMismatchError(2, matrix.ndim, what="vector table rank")
        if matrix.shape[0] != len(tokens):
            raise exceptions.DimensionMismatchError(len(tokens), matrix.shape[0], what="vector count")
        if matrix.shape[1] < 1:
            raise exceptions.DimensionMismatchError(1, matrix.shape[1], what="minimal vector")
        if not np.all(np.isfinite(matrix)):
            bad = int(np.flatnonzero(~np.isfinite(matrix).all(axis=1))[0])
            raise exceptions.EmbeddingsError(f"non-finite component in the vector of token index {bad}")
        index: dict[str, int] = {}
        for i, token in enumerate(tokens):
            if not token:
                raise exceptions.EmbeddingsError(f"empty token at token index {i}")
            if token in index:
                raise exceptions.DuplicateTokenError(token, i)
            index[token] = i
        matrix.setflags(write=False)
        self._tokens: tuple[str, ...] = tuple(tokens)
        self._index = index
        self._vectors = matrix

    @classmethod
    def from_mapping(cls, entries: typing.Mapping[str, npt.ArrayLike]) -> typing.Self:
        """Build a table from an (ordered) token -> vector mapping."""
        tokens = list(entries)
        return cls(tokens, np.array([np.asarray(entries[t], dtype=np.float64) for t in tokens]))

    @property
    def dim(self) -> int:
        return int(self._vectors.shape[1])

    @property
    def count(self) -> int:
        return len(self._tokens)

    @property
    def tokens(self) -> tuple[str, ...]:
        return self._tokens

    @property
    def vectors(self) -> npt.NDArray[np.float32]:
        """The read-only `count x dim` storage matrix."""
        return self._vectors

    def __len__(self) -> int:
        return self.count

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __iter__(self) -> typing.Iterator[str]:
        return iter(self._tokens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingTable):
            return NotImplemented
        return self._tokens == other._tokens and np.array_equal(self._vectors, other._vectors)

    def __hash__(self) -> int:
        return hash((self._tokens, self._vectors.shape))

    def __repr__(self) -> str:
        return f"EmbeddingTable(count={self.count}, dim={self.dim})"

    def lookup(self, token: str) -> DenseVector | None:
        """The stored vector of `token`, **None** for an out-of-vocabulary token."""
        i = self._index.get(token)
        if i is None:
            return None
        return self._vectors[i].astype(np.float64)

    def rows(self, tokens: Iterable[str]) -> DenseMatrix:
        """The vectors of the in-vocabulary `tokens`, one row per occurrence, in order."""
        idx = [self._index[t] for t in tokens if t in self._index]
        return self._vectors[idx].astype(np.float64)

    def mean_vector(self, tokens: Iterable[str]) -> tuple[DenseVector, int]:
        """Arithmetic mean of the vectors of the in-vocabulary `tokens`.

        Repeated tokens contribute once per occurrence.

        :return tuple[2]:
        - the mean vector, the zero vector when no token is in vocabulary.
        - how many of the `tokens` were in vocabulary.
        """
        rows = self.rows(tokens)
        if rows.shape[0] == 0:
            return np.zeros(self.dim, dtype=np.float64), 0
        return rows.sum(axis=0) / rows.shape[0], int(rows.shape[0])
