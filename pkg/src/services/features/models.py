import math
import typing

import numpy as np
import numpy.typing as npt
import pydantic


FEATURE_NAMES: typing.Final[tuple[str, ...]] = (
    "saliency_0_015",
    "saliency_015_04",
    "saliency_04_inf",
    "allpairs_m1_045",
    "allpairs_045_08",
    "allpairs_08_inf",
    "maxsim_m1_045",
    "maxsim_045_08",
    "maxsim_08_inf",
    "mean_cosine",
    "mean_euclidean",
    "dimdiff_0_0001",
    "dimdiff_0001_001",
    "dimdiff_001_002",
    "dimdiff_002_inf",
)
FEATURE_COUNT: typing.Final = len(FEATURE_NAMES)

SALIENCY: typing.Final = slice(0, 3)
ALL_PAIRS: typing.Final = slice(3, 6)
MAX_SIMILARITY: typing.Final = slice(6, 9)
MEAN_COSINE: typing.Final = 9
MEAN_EUCLIDEAN: typing.Final = 10
DIMENSIONS: typing.Final = slice(11, 15)

HISTOGRAM_GROUPS: typing.Final = (SALIENCY, ALL_PAIRS, MAX_SIMILARITY, DIMENSIONS)


class PairFeatures(pydantic.BaseModel):
    """The 15 features of a sentence pair, in the order of `FEATURE_NAMES`."""

    model_config = pydantic.ConfigDict(frozen=True)

    values: tuple[float, ...]

    @pydantic.field_validator("values")
    @classmethod
    def _validate_values(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if len(v) != FEATURE_COUNT:
            raise ValueError(f"exactly {FEATURE_COUNT} values are required, received {len(v)}")
        if not all(math.isfinite(x) for x in v):
            raise ValueError("all values must be finite")
        return v

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> typing.Self:
        return cls(values=tuple(float(x) for x in np.asarray(values, dtype=np.float64).reshape(-1)))

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.values, dtype=np.float64)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, item: int | slice) -> typing.Any:
        return self.values[item]
