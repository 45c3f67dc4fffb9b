import typing
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
import pydantic


class BinSpec(pydantic.BaseModel):
    """Right-open bins `[edges[i], edges[i + 1])`, the last one unbounded above.

    Values below the first edge fall in the first bin.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    edges: tuple[float, ...]

    @pydantic.field_validator("edges")
    @classmethod
    def _validate_edges(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("at least one edge is required")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError(f"edges must be strictly ascending: {v}")
        return v

    @classmethod
    def of(cls, *edges: float) -> typing.Self:
        return cls(edges=edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def index(self, values: npt.ArrayLike) -> npt.NDArray[np.intp]:
        """The bin of every value."""
        idx = np.searchsorted(np.asarray(self.edges), np.asarray(values, dtype=np.float64), side="right") - 1
        return np.clip(idx, 0, self.size - 1)

    def histogram(self, values: npt.ArrayLike, weights: Sequence[float] | npt.NDArray | None = None) -> npt.NDArray:
        """Mass per bin, each value counted with its weight (1 when **None**). Not normalized."""
        idx = self.index(values).reshape(-1)
        w = None if weights is None else np.asarray(weights, dtype=np.float64).reshape(-1)
        return np.bincount(idx, weights=w, minlength=self.size).astype(np.float64)


SALIENCY_BINS: typing.Final = BinSpec.of(0.0, 0.15, 0.4)
NETWORK_BINS: typing.Final = BinSpec.of(-1.0, 0.45, 0.8)
DIMENSION_BINS: typing.Final = BinSpec.of(-np.inf, 0.001, 0.01, 0.02)
