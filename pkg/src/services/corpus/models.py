import enum
import math
import typing
from collections.abc import Iterable

import pydantic

from utils import exceptions, validators


class EntailmentClass(enum.StrEnum):
    """The three entailment classes, in their canonical order and spelling."""

    NONE = "None"
    ENTAILMENT = "Entailment"
    PARAPHRASE = "Paraphrase"

    @classmethod
    def parse(cls, value: str, pair_id: str | None = None) -> typing.Self:
        """Match `value` case-insensitively to a class.

        :raise LabelValueError:
            For an unknown class name.
        """
        folded = value.strip().casefold()
        for member in cls:
            if member.value.casefold() == folded:
                return member
        raise exceptions.LabelValueError(value, pair_id)

    @classmethod
    def ordered(cls) -> tuple[typing.Self, ...]:
        return tuple(cls)


class SentencePair(pydantic.BaseModel):
    """Two sentences and their optional gold labels."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    id: str
    text_t: str
    """The first sentence (the text)."""
    text_h: str
    """The second sentence (the hypothesis)."""
    similarity: float | None = None
    entailment: EntailmentClass | None = None

    @pydantic.field_validator("similarity")
    @classmethod
    def _validate_similarity(cls, v: float | None) -> float | None:
        if v is not None and not math.isfinite(v):
            raise ValueError("similarity must be finite")
        return validators.similarity_in_range(v)

    @pydantic.field_validator("entailment", mode="before")
    @classmethod
    def _validate_entailment(cls, v: typing.Any) -> typing.Any:
        return EntailmentClass.parse(v) if isinstance(v, str) else v


class Dataset(pydantic.BaseModel):
    """An ordered collection of `SentencePair`s with unique ids."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    pairs: tuple[SentencePair, ...]
    variant_tag: str = ""
    """Free-form name of the source, e.g. the split name."""

    @classmethod
    def from_pairs(cls, pairs: Iterable[SentencePair], variant_tag: str = "") -> typing.Self:
        """Build a `Dataset`.

        :raise DuplicatePairIdError:
            When two pairs share an id.
        """
        pairs = tuple(pairs)
        seen: set[str] = set()
        for p in pairs:
            if p.id in seen:
                raise exceptions.DuplicatePairIdError(p.id)
            seen.add(p.id)
        return cls(pairs=pairs, variant_tag=variant_tag)

    @pydantic.model_validator(mode="after")
    def _validate_unique_ids(self) -> typing.Self:
        if len({p.id for p in self.pairs}) != len(self.pairs):
            raise ValueError("pair ids must be unique within a dataset")
        return self

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> typing.Iterator[SentencePair]:  # type: ignore[override]
        return iter(self.pairs)

    @property
    def ids(self) -> list[str]:
        return [p.id for p in self.pairs]


class IdfModel(pydantic.BaseModel):
    """Document frequencies of a corpus, for inverse-document-frequency weights."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    doc_count: pydantic.PositiveInt
    doc_freq: dict[str, pydantic.PositiveInt]

    @pydantic.model_validator(mode="after")
    def _validate_doc_freq(self) -> typing.Self:
        for token, df in self.doc_freq.items():
            if df > self.doc_count:
                raise ValueError(f"document frequency {df} of '{token}' exceeds the document count {self.doc_count}")
        return self

    def idf(self, token: str) -> float:
        """ln((N + 1) / (df + 1)) + 1, with df = 0 for unseen tokens.

        Strictly positive and decreasing in df.
        """
        df = self.doc_freq.get(token, 0)
        return math.log((self.doc_count + 1) / (df + 1)) + 1.0
