"""The pipeline commands, each a function of a `RunConfig`."""

import typing
from collections import defaultdict

import numpy as np
import pydantic

from config import AppConfig
from config.corpus import IdfSource
from config.learn import Learner, Task
from services.corpus import CorpusService, Dataset, IdfModel, SentencePair, tokenize
from services.embeddings import EmbeddingsService
from services.features import FeaturesService, read_feature_dump, write_feature_dump
from services.learn import LearnService, SolverSettings
from services.metrics import EvalReport, apply_affine, bow_baseline_similarity, build_report, fit_affine, pearson
from utils import exceptions, files, logging

from .config import RunConfig
from .models import LASSO_NOTE, ModelBundle
from .predictions import read_predictions, write_predictions
from .service import PipelineService


log = logging.getLogger("pipeline")

_REPORTS: typing.Final = pydantic.TypeAdapter(list[EvalReport])


def cmd_build_idf(cfg: RunConfig) -> None:
    """Build the IDF statistics of the training files and write them to `out`."""
    cfg.require("train", "out")
    assert cfg.out is not None
    train = PipelineService.train_set(cfg)
    CorpusService.save_idf(CorpusService.build_idf(train), cfg.out)
    if cfg.tokens is not None:
        CorpusService.export_tokenized(train, cfg.tokens)


def cmd_extract(cfg: RunConfig) -> None:
    """Write the feature dump of the test files (the training files when no test file is given) to `out`."""
    cfg.require("out")
    assert cfg.out is not None
    if not cfg.test:
        cfg.require("train")
    emb = PipelineService.embeddings(cfg)
    train = PipelineService.train_set(cfg) if cfg.train else None
    if cfg.idf_from == IdfSource.TRAIN:
        cfg.require("train")
    idf = PipelineService.idf(cfg, train)
    corpus = PipelineService.test_set(cfg) if cfg.test else train
    assert corpus is not None
    X = FeaturesService.extract_many(corpus.pairs, emb, idf, cfg.workers)
    write_feature_dump(corpus, X, cfg.out, idf, emb.dim)


def cmd_train(cfg: RunConfig) -> ModelBundle:
    """Grid-search, train and persist a model (to `out`) and its cross-validation report.

    The report goes to `report`, or next to the model with the '.cv.json' suffix.

    From a feature dump (`features`), the model keeps the IDF and embeddings dimension the dump was extracted
    with; `embeddings`, `train` (or `idf_path`) are then optional, and only checked against the dump.
    """
    cfg.require("out")
    assert cfg.out is not None
    task, learner = cfg.resolved_task, cfg.resolved_learner

    if cfg.features is not None:
        dump = read_feature_dump(cfg.features)
        idf, embeddings_dim = dump.meta.idf, dump.meta.embeddings_dim
        _check_dump_sources(cfg, idf, embeddings_dim)
        X = dump.X
        raw = dump.similarity if task == Task.SIMILARITY else dump.entailment
        for pid, label in zip(dump.ids, raw):
            if label is None:
                raise exceptions.UnlabeledPairError(pid, task)
        y: list[typing.Any] = list(raw)
    else:
        emb = PipelineService.embeddings(cfg)
        train = PipelineService.train_set(cfg)
        y = PipelineService.gold(train, task)
        idf = PipelineService.idf(cfg, train)
        embeddings_dim = emb.dim
        X = FeaturesService.extract_many(train.pairs, emb, idf, cfg.workers)

    model, search = LearnService.train(
        learner,
        X,
        y,
        grid=cfg.grid,
        folds=cfg.folds,
        seed=cfg.seed,
        workers=cfg.workers,
        settings=SolverSettings.from_config(AppConfig.LEARN),
    )
    bundle = ModelBundle(
        task=task,
        learner=learner,
        embeddings_dim=embeddings_dim,
        idf=idf,
        model=model,
        search=search,
        note=LASSO_NOTE if learner == Learner.LASSO else "",
    )
    PipelineService.save_bundle(bundle, cfg.out)
    report = cfg.report or cfg.out.with_suffix(".cv.json")
    files.write_text(report, search.model_dump_json(indent=1))
    log.info(f"wrote cross-validation report to '{report}'")
    return bundle


def _check_dump_sources(cfg: RunConfig, idf: IdfModel, embeddings_dim: int) -> None:
    """
    :raise ConfigError:
        When the IDF of `train` (or of `idf_path`) isn't the one the feature dump was extracted with.
    :raise DimensionMismatchError:
        When `embeddings` don't have the dimension the feature dump was extracted with.
    """
    if cfg.idf_from == IdfSource.FILE or cfg.train:
        source = f"--idf-path '{cfg.idf_path}'" if cfg.idf_from == IdfSource.FILE else "--train"
        if PipelineService.idf(cfg) != idf:
            raise exceptions.ConfigError(f"the IDF of {source} isn't the one '{cfg.features}' was extracted with")
    if cfg.embeddings is not None:
        dim = PipelineService.embeddings(cfg).dim
        if dim != embeddings_dim:
            raise exceptions.DimensionMismatchError(embeddings_dim, dim, what="embeddings")


def cmd_predict(cfg: RunConfig) -> None:
    """Apply one model per task to the test files and write the predictions to `out`."""
    cfg.require("model", "out")
    assert cfg.out is not None
    emb = PipelineService.embeddings(cfg)
    test = PipelineService.test_set(cfg)
    by_task: dict[Task, ModelBundle] = {}
    for path in cfg.model:
        bundle = PipelineService.load_bundle(path, emb)
        if bundle.task in by_task:
            raise exceptions.ConfigError(f"more than one '{bundle.task}' model given")
        by_task[bundle.task] = bundle

    similarity = entailment = None
    features: dict[int, np.ndarray] = {}
    for task, bundle in by_task.items():
        key = hash(bundle.idf.model_dump_json())
        if key not in features:
            features[key] = FeaturesService.extract_many(test.pairs, emb, bundle.idf, cfg.workers)
        if task == Task.SIMILARITY:
            similarity = LearnService.predict_similarity(bundle.model, features[key])
        else:
            entailment = LearnService.predict_entailment(bundle.model, features[key])
    write_predictions(cfg.out, test.ids, similarity, entailment)
    log.info(f"wrote predictions for {len(test)} pairs to '{cfg.out}'")


def cmd_evaluate(cfg: RunConfig) -> list[EvalReport]:
    """Score the `predictions` file against the gold labels of the test files, joining them by pair id.

    With several test files there is one report per file followed by the overall one.
    The reports are written to `out`, when given.
    """
    cfg.require("predictions", "test")
    assert cfg.predictions is not None
    preds = read_predictions(cfg.predictions)
    gold = PipelineService.test_set(cfg)
    gold_ids = set(gold.ids)
    for pid in gold.ids:
        if pid not in preds.ids:
            raise exceptions.PairIdMismatchError(pid, "predictions")
    for pid in preds.ids:
        if pid not in gold_ids:
            raise exceptions.PairIdMismatchError(pid, "gold")

    groups: dict[str, list[SentencePair]] = defaultdict(list)
    if len(cfg.test) > 1:
        for p in gold.pairs:
            groups[p.id.split(":", 1)[0]].append(p)
    splits = [(name, Dataset.from_pairs(pairs, variant_tag=name)) for name, pairs in groups.items()]
    splits.append((gold.variant_tag, gold))

    reports = []
    for name, ds in splits:
        similarity = entailment = None
        if preds.similarity is not None:
            similarity = ([preds.similarity[p.id] for p in ds.pairs], PipelineService.gold(ds, Task.SIMILARITY))
        if preds.entailment is not None:
            entailment = (
                [preds.entailment[p.id].value for p in ds.pairs],
                [c.value for c in PipelineService.gold(ds, Task.ENTAILMENT)],
            )
        if similarity is None and entailment is None:
            raise exceptions.ModelFileError(cfg.predictions, "neither a 'similarity' nor an 'entailment' column")
        reports.append(build_report(similarity, entailment, split=name))

    if cfg.out is not None:
        if len(reports) == 1:
            files.write_text(cfg.out, reports[0].model_dump_json(indent=1))
        else:
            files.write_text(cfg.out, _REPORTS.dump_json(reports, indent=1).decode())
        log.info(f"wrote evaluation report to '{cfg.out}'")
    return reports


def cmd_baseline(cfg: RunConfig) -> None:
    """Bag-of-words similarity of the test pairs, mapped onto [1, 5] by a least-squares fit on the training pairs."""
    cfg.require("train", "test", "out")
    assert cfg.out is not None
    train = PipelineService.train_set(cfg)
    test = PipelineService.test_set(cfg)
    slope, intercept = fit_affine(bow_baseline_similarity(train), PipelineService.gold(train, Task.SIMILARITY))
    scores = bow_baseline_similarity(test)
    write_predictions(cfg.out, test.ids, apply_affine(scores, slope, intercept))
    if all(p.similarity is not None for p in test.pairs):
        r = pearson(scores, [p.similarity for p in test.pairs])
        log.info(f"bag-of-words pearson on '{test.variant_tag}': {r:.4f}")


def cmd_inspect_embeddings(cfg: RunConfig) -> dict[str, typing.Any]:
    """Summarize the embedding table, its coverage of the given corpora and, with `out`, convert it."""
    emb = PipelineService.embeddings(cfg)
    summary: dict[str, typing.Any] = {"path": str(cfg.embeddings), "count": emb.count, "dim": emb.dim}
    norms = np.linalg.norm(emb.vectors.astype(np.float64), axis=1)
    summary["norm_min"], summary["norm_mean"], summary["norm_max"] = (
        float(norms.min()),
        float(norms.mean()),
        float(norms.max()),
    )
    paths = [*cfg.train, *cfg.test]
    if paths:
        corpus = CorpusService.load(paths)
        sentences = [tokenize(text) for p in corpus.pairs for text in (p.text_t, p.text_h)]
        summary["coverage"] = EmbeddingsService.coverage(emb, sentences)
    if cfg.out is not None:
        EmbeddingsService.write(emb, cfg.out)
    return summary
