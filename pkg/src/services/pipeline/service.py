import os
import typing

import pydantic
import pydantic_core

from config.corpus import IdfSource
from config.learn import Task
from services.corpus import CorpusService, Dataset, IdfModel
from services.embeddings import EmbeddingsService, EmbeddingTable
from utils import exceptions, files, logging, singleton

from .config import RunConfig
from .models import MODEL_FORMAT_VERSION, ModelBundle


log = logging.getLogger("pipeline")


# being a Singleton is just a precaution, everything should be using the 'PipelineService' instance:
class _PipelineService(singleton.Singleton):
    """Shared steps of the commands: loading their inputs, persisting and restoring models."""

    __slots__ = ()

    def embeddings(self, cfg: RunConfig) -> EmbeddingTable:
        cfg.require("embeddings")
        assert cfg.embeddings is not None
        return EmbeddingsService.load(cfg.embeddings, cfg.embeddings_format)

    def test_set(self, cfg: RunConfig) -> Dataset:
        cfg.require("test")
        return CorpusService.load(cfg.test)

    def train_set(self, cfg: RunConfig) -> Dataset:
        """The training pairs, without those also in the test files when `cfg.dedupe` is set."""
        cfg.require("train")
        held_out = CorpusService.load(cfg.test) if cfg.dedupe and cfg.test else None
        return CorpusService.load(cfg.train, dedupe_against=held_out)

    def idf(self, cfg: RunConfig, train: Dataset | None = None) -> IdfModel:
        """IDF statistics per `cfg.idf_from`: built over the training pairs, or read from `cfg.idf_path`."""
        if cfg.idf_from == IdfSource.FILE:
            assert cfg.idf_path is not None
            return CorpusService.load_idf(cfg.idf_path)
        return CorpusService.build_idf(train if train is not None else self.train_set(cfg))

    def gold(self, dataset: Dataset, task: Task) -> list[typing.Any]:
        """The gold labels of `task`, in order.

        :raise UnlabeledPairError:
            Naming the first pair without one.
        """
        labels = []
        for p in dataset.pairs:
            label = p.similarity if task == Task.SIMILARITY else p.entailment
            if label is None:
                raise exceptions.UnlabeledPairError(p.id, task)
            labels.append(label)
        return labels

    def save_bundle(self, bundle: ModelBundle, path: str | os.PathLike) -> None:
        files.write_text(path, bundle.model_dump_json(by_alias=True, indent=1))
        log.info(f"wrote {bundle.learner} model to '{path}'")

    def load_bundle(self, path: str | os.PathLike, emb: EmbeddingTable | None = None) -> ModelBundle:
        """
        :param emb:
            When provided, the embeddings the model will be applied with.

        :raise ModelFileError:
            When the file can't be read, is of another format version or isn't a model bundle.
        :raise DimensionMismatchError:
            When the model was trained with embeddings of another dimension than `emb`.
        """
        try:
            with open(path, "rb") as f:
                raw = f.read()
            doc = pydantic_core.from_json(raw)
        except OSError as err:
            raise exceptions.ModelFileError(path, err.strerror or str(err)) from None
        except ValueError as err:
            raise exceptions.ModelFileError(path, f"not a JSON document: {err}") from None
        version = doc.get("format_version") if isinstance(doc, dict) else None
        if version != MODEL_FORMAT_VERSION:
            raise exceptions.ModelFileError(path, f"unsupported model format version {version!r}")
        try:
            bundle = ModelBundle.model_validate(doc)
        except pydantic.ValidationError as err:
            e = err.errors()[0]
            where = ".".join(map(str, e["loc"]))
            raise exceptions.ModelFileError(path, f"invalid model bundle at '{where}': {e['msg']}") from None
        if emb is not None and emb.dim != bundle.embeddings_dim:
            raise exceptions.DimensionMismatchError(bundle.embeddings_dim, emb.dim, what="embeddings")
        return bundle


PipelineService: typing.Final[_PipelineService] = _PipelineService()
"""Shared steps of the commands: loading their inputs, persisting and restoring models."""
