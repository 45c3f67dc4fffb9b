import concurrent.futures
import typing
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from services.corpus import IdfModel, SentencePair, tokenize
from services.embeddings import EmbeddingTable
from utils import logging, singleton

from .extract import extract_tokens
from .models import FEATURE_COUNT


log = logging.getLogger("features")

# the read-only inputs of a worker process, set once by `_init_worker()`
_worker_emb: EmbeddingTable | None = None
_worker_idf: IdfModel | None = None


def _init_worker(emb: EmbeddingTable, idf: IdfModel) -> None:
    global _worker_emb, _worker_idf
    _worker_emb, _worker_idf = emb, idf


def _extract_chunk(pairs: Sequence[SentencePair]) -> npt.NDArray[np.float64]:
    assert _worker_emb is not None and _worker_idf is not None
    return _extract_all(pairs, _worker_emb, _worker_idf)


def _extract_all(pairs: Sequence[SentencePair], emb: EmbeddingTable, idf: IdfModel) -> npt.NDArray[np.float64]:
    X = np.empty((len(pairs), FEATURE_COUNT), dtype=np.float64)
    for i, p in enumerate(pairs):
        X[i] = extract_tokens(tokenize(p.text_t), tokenize(p.text_h), emb, idf)
    return X


# being a Singleton is just a precaution, everything should be using the 'FeaturesService' instance:
class _FeaturesService(singleton.Singleton):
    """Service for turning sentence pairs into feature matrices."""

    __slots__ = ()

    def extract_many(
        self,
        pairs: Sequence[SentencePair],
        emb: EmbeddingTable,
        idf: IdfModel,
        workers: int = 1,
    ) -> npt.NDArray[np.float64]:
        """The feature matrix of `pairs`, row `i` belonging to `pairs[i]`.

        :param workers:
            With more than 1, the pairs are split in contiguous chunks extracted by that many processes.
            The result does not depend on it.
        """
        if workers <= 1 or len(pairs) < 2 * workers:
            X = _extract_all(pairs, emb, idf)
        else:
            chunks = [list(c) for c in np.array_split(np.arange(len(pairs)), workers * 4) if len(c)]
            with concurrent.futures.ProcessPoolExecutor(
                max_workers=workers, initializer=_init_worker, initargs=(emb, idf)
            ) as pool:
                parts = pool.map(_extract_chunk, [[pairs[i] for i in c] for c in chunks])
                X = np.vstack(list(parts))
        log.info(f"extracted features of {len(pairs)} pairs")
        return X


FeaturesService: typing.Final[_FeaturesService] = _FeaturesService()
"""Service for turning sentence pairs into feature matrices."""
