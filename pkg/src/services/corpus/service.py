import os
import typing
from collections.abc import Sequence

import pydantic

from utils import exceptions, files, logging, singleton

from .assin import merge_datasets, parse_assin_xml, remove_overlap
from .idf import build_idf, sentence_documents
from .models import Dataset, IdfModel
from .tokenizer import tokenize


log = logging.getLogger("corpus")


# being a Singleton is just a precaution, everything should be using the 'CorpusService' instance:
class _CorpusService(singleton.Singleton):
    """Service for reading sentence-pair corpora and their IDF statistics."""

    __slots__ = ()

    def load(self, paths: Sequence[str | os.PathLike], dedupe_against: Dataset | None = None) -> Dataset:
        """Parse one or more ASSIN files.

        A single file is returned as is, several files are merged (see `merge_datasets`).

        :param dedupe_against:
            When provided, pairs also present in this dataset are removed (see `remove_overlap`).
        """
        if not paths:
            raise exceptions.EmptyCorpusError("list of corpus files")
        datasets = [parse_assin_xml(p) for p in paths]
        dataset = datasets[0] if len(datasets) == 1 else merge_datasets(datasets)
        if dedupe_against is not None:
            dataset = remove_overlap(dataset, dedupe_against)
        return dataset

    def build_idf(self, *datasets: Dataset) -> IdfModel:
        """IDF statistics with every `t` and every `h` sentence of `datasets` as a document."""
        model = build_idf(sentence_documents(*datasets))
        log.info(f"built IDF over {model.doc_count} sentences, {len(model.doc_freq)} distinct tokens")
        return model

    def save_idf(self, model: IdfModel, path: str | os.PathLike) -> None:
        files.write_text(path, model.model_dump_json(indent=2))
        log.info(f"wrote IDF to '{path}'")

    def load_idf(self, path: str | os.PathLike) -> IdfModel:
        """
        :raise ModelFileError:
            When `path` can't be read or isn't an IDF document.
        """
        try:
            with open(path, "rb") as f:
                return IdfModel.model_validate_json(f.read())
        except OSError as err:
            raise exceptions.ModelFileError(path, err.strerror or str(err)) from None
        except pydantic.ValidationError as err:
            message = f"not an IDF document: {err.error_count()} validation errors"
            raise exceptions.ModelFileError(path, message) from None

    def export_tokenized(self, dataset: Dataset, path: str | os.PathLike) -> None:
        """Write every sentence of `dataset` tokenized, one per line, `t` before `h`."""
        lines = (" ".join(tokenize(text)) for p in dataset.pairs for text in (p.text_t, p.text_h))
        files.write_text(path, "".join(f"{line}\n" for line in lines))


CorpusService: typing.Final[_CorpusService] = _CorpusService()
"""Service for reading sentence-pair corpora and their IDF statistics."""
