from collections import Counter
from collections.abc import Iterable, Sequence

from utils import exceptions

from .models import Dataset, IdfModel
from .tokenizer import tokenize


def build_idf(documents: Iterable[Sequence[str]]) -> IdfModel:
    """Count, for every token, in how many of the `documents` it appears at least once.

    :raise EmptyCorpusError:
        When there is no document.
    """
    doc_freq: Counter[str] = Counter()
    n = 0
    for doc in documents:
        n += 1
        doc_freq.update(set(doc))
    if n == 0:
        raise exceptions.EmptyCorpusError()
    return IdfModel(doc_count=n, doc_freq={t: doc_freq[t] for t in sorted(doc_freq)})


def idf(model: IdfModel, token: str) -> float:
    return model.idf(token)


def sentence_documents(*datasets: Dataset) -> list[list[str]]:
    """Every `t` and every `h` sentence of the `datasets`, tokenized, as one document each."""
    return [tokenize(text) for ds in datasets for p in ds.pairs for text in (p.text_t, p.text_h)]
