import json

import numpy as np
import pytest

from api_cli.options import parse_grid
from config.corpus import IdfSource
from config.learn import Learner, Task
from services.corpus import CorpusService
from services.embeddings import EmbeddingsService, EmbeddingTable
from services.features import FEATURE_NAMES, FeaturesService, read_feature_dump
from services.learn import LearnService
from services.pipeline import (
    ModelBundle,
    PipelineService,
    RunConfig,
    commands,
    read_predictions,
    write_predictions,
)
from utils import exceptions


WORDS = ["o", "gato", "cão", "come", "bebe", "peixe", "água", "rato", "casa"]
CLASSES = ["None", "Entailment", "Paraphrase"]


def _pairs(rng, n, prefix="", labeled=True):
    pairs = []
    for i in range(n):
        pair = {
            "id": f"{prefix}{i + 1}",
            "t": " ".join(rng.choice(WORDS, size=int(rng.integers(2, 6)))),
            "h": " ".join(rng.choice(WORDS, size=int(rng.integers(2, 6)))),
        }
        if labeled:
            pair["similarity"] = f"{rng.uniform(1, 5):.2f}"
            pair["entailment"] = CLASSES[i % 3]
        pairs.append(pair)
    return pairs


@pytest.fixture
def embeddings(tmp_path, tiny_table):
    path = tmp_path / "vectors.txt"
    EmbeddingsService.write(tiny_table, path)
    return path


@pytest.fixture
def corpus(rng, write_assin):
    return {
        "train": write_assin("train.xml", *_pairs(rng, 30)),
        "ptbr": write_assin("ptbr.xml", *_pairs(rng, 12)),
        "ptpt": write_assin("ptpt.xml", *_pairs(rng, 9)),
    }


SVR_GRID = {"C": [1.0], "gamma": [0.5], "epsilon": [0.1]}
SVM_GRID = {"C": [1.0, 10.0], "gamma": [0.5]}


def _train(tmp_path, embeddings, corpus, learner=Learner.SVR, grid=None, name="model.json", **flags):
    cfg = RunConfig.build(
        embeddings=embeddings,
        train=[corpus["train"]],
        learner=learner,
        grid=grid or (SVM_GRID if learner == Learner.SVM else SVR_GRID),
        folds=3,
        out=tmp_path / name,
        **flags,
    )
    return commands.cmd_train(cfg)


class TestRunConfig:
    def test_precedence(self, write_raw):
        toml = write_raw("run.toml", "seed = 7\nfolds = 3\nlearner = 'svm'\n")
        cfg = RunConfig.build(toml, seed=11, folds=None)
        assert (cfg.seed, cfg.folds, cfg.learner) == (11, 3, Learner.SVM)
        assert cfg.resolved_task == Task.ENTAILMENT

    def test_defaults(self):
        cfg = RunConfig.build()
        assert cfg.resolved_task == Task.SIMILARITY
        assert cfg.resolved_learner == Learner.SVR
        assert RunConfig.build(task="entailment").resolved_learner == Learner.SVM
        assert cfg.idf_from == IdfSource.TRAIN

    def test_learner_must_fit_the_task(self):
        with pytest.raises(exceptions.ConfigError, match="lasso"):
            RunConfig.build(task="entailment", learner="lasso")

    def test_idf_file_needs_a_path(self):
        with pytest.raises(exceptions.ConfigError):
            RunConfig.build(idf_from="file")

    def test_unknown_toml_key(self, write_raw):
        with pytest.raises(exceptions.ConfigError):
            RunConfig.build(write_raw("bad.toml", "sede = 7\n"))

    def test_missing_toml(self, tmp_path):
        with pytest.raises(exceptions.ConfigError, match="not found"):
            RunConfig.build(tmp_path / "none.toml")

    def test_require(self):
        with pytest.raises(exceptions.ConfigError, match="--out"):
            RunConfig.build().require("out")


class TestParseGrid:
    def test_values(self):
        assert parse_grid(["C=1,10;gamma=0.1", "epsilon=0.2"]) == {"C": [1.0, 10.0], "gamma": [0.1], "epsilon": [0.2]}
        assert parse_grid([]) == {}

    @pytest.mark.parametrize("value", ["C", "=1", "C=", "C=a,b"])
    def test_invalid(self, value):
        with pytest.raises(exceptions.ConfigError):
            parse_grid([value])


class TestBuildIdf:
    def test_writes_the_model_and_tokens(self, tmp_path, corpus):
        out, tokens = tmp_path / "idf.json", tmp_path / "tokens.txt"
        commands.cmd_build_idf(RunConfig.build(train=[corpus["train"]], out=out, tokens=tokens))
        model = CorpusService.load_idf(out)
        assert model.doc_count == 60
        assert len(tokens.read_text(encoding="utf-8").splitlines()) == 60

    def test_idf_from_file_is_used_by_extract(self, tmp_path, corpus, embeddings):
        idf = tmp_path / "idf.json"
        commands.cmd_build_idf(RunConfig.build(train=[corpus["train"]], out=idf))
        from_file = tmp_path / "from_file.csv"
        from_train = tmp_path / "from_train.csv"
        common = {"embeddings": embeddings, "test": [corpus["ptbr"]]}
        commands.cmd_extract(RunConfig.build(idf_from="file", idf_path=idf, out=from_file, **common))
        commands.cmd_extract(RunConfig.build(train=[corpus["train"]], out=from_train, **common))
        assert from_file.read_bytes() == from_train.read_bytes()


class TestExtract:
    def test_dump(self, tmp_path, corpus, embeddings):
        out = tmp_path / "features.csv"
        commands.cmd_extract(RunConfig.build(embeddings=embeddings, train=[corpus["train"]], out=out))
        dump = read_feature_dump(out)
        assert dump.X.shape == (30, len(FEATURE_NAMES))
        assert dump.ids == [str(i) for i in range(1, 31)]

    def test_deterministic(self, tmp_path, corpus, embeddings):
        outs = [tmp_path / "one.csv", tmp_path / "two.csv", tmp_path / "three.csv"]
        for out, workers in zip(outs, [1, 1, 2]):
            cfg = RunConfig.build(
                embeddings=embeddings, train=[corpus["train"]], test=[corpus["ptbr"]], workers=workers, out=out
            )
            commands.cmd_extract(cfg)
        assert outs[0].read_bytes() == outs[1].read_bytes() == outs[2].read_bytes()

    def test_idf_from_train_needs_train(self, tmp_path, corpus, embeddings):
        with pytest.raises(exceptions.ConfigError, match="--train"):
            commands.cmd_extract(RunConfig.build(embeddings=embeddings, test=[corpus["ptbr"]], out=tmp_path / "f.csv"))


class TestTrain:
    def test_bundle_and_report(self, tmp_path, corpus, embeddings):
        bundle = _train(tmp_path, embeddings, corpus)
        assert (bundle.task, bundle.learner, bundle.embeddings_dim) == (Task.SIMILARITY, Learner.SVR, 3)
        assert PipelineService.load_bundle(tmp_path / "model.json") == bundle
        report = json.loads((tmp_path / "model.cv.json").read_text())
        assert report["candidates"] == [{"C": 1.0, "gamma": 0.5, "epsilon": 0.1}]
        assert report["folds"] == 3

    def test_lasso_bundle_documents_the_penalty(self, tmp_path, corpus, embeddings):
        bundle = _train(tmp_path, embeddings, corpus, learner=Learner.LASSO, grid={"lambda": [0.1, 0.01]})
        doc = json.loads((tmp_path / "model.json").read_text())
        assert "lambda" in doc["model"]
        assert "|w|_1 <= t" in doc["note"]
        assert bundle.model.kind == "lasso"

    def test_deterministic(self, tmp_path, corpus, embeddings):
        _train(tmp_path, embeddings, corpus, learner=Learner.SVM, name="one.json", seed=3)
        _train(tmp_path, embeddings, corpus, learner=Learner.SVM, name="two.json", seed=3)
        assert (tmp_path / "one.json").read_bytes() == (tmp_path / "two.json").read_bytes()
        assert (tmp_path / "one.cv.json").read_bytes() == (tmp_path / "two.cv.json").read_bytes()

    def test_from_feature_dump(self, tmp_path, corpus, embeddings):
        dump = tmp_path / "features.csv"
        commands.cmd_extract(RunConfig.build(embeddings=embeddings, train=[corpus["train"]], out=dump))
        from_dump = _train(tmp_path, embeddings, corpus, features=dump, name="dump.json")
        direct = _train(tmp_path, embeddings, corpus, name="direct.json")
        assert from_dump.model == direct.model

    def test_feature_dump_carries_its_idf_to_prediction(self, tmp_path, corpus, embeddings):
        dump = tmp_path / "features.csv"
        commands.cmd_extract(RunConfig.build(embeddings=embeddings, train=[corpus["train"]], out=dump))
        from_dump = commands.cmd_train(
            RunConfig.build(features=dump, learner=Learner.SVR, grid=SVR_GRID, folds=3, out=tmp_path / "dump.json")
        )
        assert from_dump.idf == CorpusService.build_idf(CorpusService.load([corpus["train"]]))
        assert from_dump.embeddings_dim == 3

        _train(tmp_path, embeddings, corpus, name="direct.json")
        for name in ("dump", "direct"):
            cfg = RunConfig.build(
                embeddings=embeddings,
                test=[corpus["ptbr"]],
                model=[tmp_path / f"{name}.json"],
                out=tmp_path / f"{name}.csv",
            )
            commands.cmd_predict(cfg)
        assert (tmp_path / "dump.csv").read_bytes() == (tmp_path / "direct.csv").read_bytes()

    def test_feature_dump_rejects_other_training_files(self, tmp_path, corpus, embeddings):
        dump = tmp_path / "features.csv"
        commands.cmd_extract(RunConfig.build(embeddings=embeddings, train=[corpus["train"]], out=dump))
        with pytest.raises(exceptions.ConfigError, match="--train"):
            _train(tmp_path, embeddings, {"train": corpus["ptbr"]}, features=dump)

    def test_feature_dump_rejects_another_idf_file(self, tmp_path, corpus, embeddings):
        dump = tmp_path / "features.csv"
        commands.cmd_extract(RunConfig.build(embeddings=embeddings, train=[corpus["train"]], out=dump))
        idf = tmp_path / "idf.json"
        commands.cmd_build_idf(RunConfig.build(train=[corpus["ptbr"]], out=idf))
        cfg = RunConfig.build(
            features=dump, idf_from="file", idf_path=idf, grid=SVR_GRID, folds=3, out=tmp_path / "m.json"
        )
        with pytest.raises(exceptions.ConfigError, match="--idf-path"):
            commands.cmd_train(cfg)

    def test_feature_dump_rejects_other_embeddings(self, tmp_path, corpus, embeddings):
        dump = tmp_path / "features.csv"
        commands.cmd_extract(RunConfig.build(embeddings=embeddings, train=[corpus["train"]], out=dump))
        wide = tmp_path / "wide.txt"
        EmbeddingsService.write(EmbeddingTable(["gato"], np.ones((1, 4))), wide)
        cfg = RunConfig.build(embeddings=wide, features=dump, grid=SVR_GRID, folds=3, out=tmp_path / "m.json")
        with pytest.raises(exceptions.DimensionMismatchError, match="embeddings"):
            commands.cmd_train(cfg)

    def test_unlabeled_training_pair(self, tmp_path, rng, write_assin, embeddings):
        blind = write_assin("blind.xml", *_pairs(rng, 10, labeled=False))
        with pytest.raises(exceptions.UnlabeledPairError, match="'1'"):
            _train(tmp_path, embeddings, {"train": blind})

    def test_requires_out(self, corpus, embeddings):
        with pytest.raises(exceptions.ConfigError, match="--out"):
            commands.cmd_train(RunConfig.build(embeddings=embeddings, train=[corpus["train"]]))


class TestModelFiles:
    def test_other_format_version(self, tmp_path, corpus, embeddings):
        _train(tmp_path, embeddings, corpus)
        doc = json.loads((tmp_path / "model.json").read_text())
        doc["format_version"] = 2
        (tmp_path / "model.json").write_text(json.dumps(doc))
        with pytest.raises(exceptions.ModelFileError, match="version 2"):
            PipelineService.load_bundle(tmp_path / "model.json")

    def test_not_a_bundle(self, tmp_path):
        (tmp_path / "model.json").write_text("[1, 2")
        with pytest.raises(exceptions.ModelFileError):
            PipelineService.load_bundle(tmp_path / "model.json")
        with pytest.raises(exceptions.ModelFileError):
            PipelineService.load_bundle(tmp_path / "missing.json")

    def test_embeddings_of_another_dimension(self, tmp_path, corpus, embeddings):
        _train(tmp_path, embeddings, corpus)
        flat = EmbeddingTable(["o", "gato"], [[1.0, 0.0], [0.0, 1.0]])
        with pytest.raises(exceptions.DimensionMismatchError):
            PipelineService.load_bundle(tmp_path / "model.json", flat)

    def test_mismatched_learner(self, tmp_path, corpus, embeddings):
        bundle = _train(tmp_path, embeddings, corpus)
        with pytest.raises(ValueError):
            ModelBundle.model_validate({**bundle.model_dump(by_alias=True), "learner": "lasso"})


class TestPredict:
    def test_both_tasks(self, tmp_path, corpus, embeddings):
        similarity = _train(tmp_path, embeddings, corpus, name="sim.json")
        entailment = _train(tmp_path, embeddings, corpus, learner=Learner.SVM, name="ent.json")
        out = tmp_path / "predictions.csv"
        cfg = RunConfig.build(
            embeddings=embeddings, test=[corpus["ptbr"]], model=[tmp_path / "sim.json", tmp_path / "ent.json"], out=out
        )
        commands.cmd_predict(cfg)
        assert out.read_text(encoding="utf-8").splitlines()[0] == "id,similarity,entailment"

        # the persisted models predict what the in-memory ones do
        test = CorpusService.load([corpus["ptbr"]])
        X = FeaturesService.extract_many(test.pairs, EmbeddingsService.load(embeddings), similarity.idf)
        preds = read_predictions(out)
        assert preds.ids == test.ids
        expected = LearnService.predict_similarity(similarity.model, X)
        assert [preds.similarity[i] for i in test.ids] == [float(f"{v:.4f}") for v in expected]
        assert all(1.0 <= v <= 5.0 for v in preds.similarity.values())
        assert [preds.entailment[i] for i in test.ids] == LearnService.predict_entailment(entailment.model, X)

    def test_one_model_per_task(self, tmp_path, corpus, embeddings):
        _train(tmp_path, embeddings, corpus, name="a.json")
        _train(tmp_path, embeddings, corpus, name="b.json")
        models = [tmp_path / "a.json", tmp_path / "b.json"]
        cfg = RunConfig.build(embeddings=embeddings, test=[corpus["ptbr"]], model=models, out=tmp_path / "p.csv")
        with pytest.raises(exceptions.ConfigError, match="similarity"):
            commands.cmd_predict(cfg)

    def test_deterministic(self, tmp_path, corpus, embeddings):
        _train(tmp_path, embeddings, corpus)
        for name in ("one.csv", "two.csv"):
            cfg = RunConfig.build(
                embeddings=embeddings, test=[corpus["ptbr"]], model=[tmp_path / "model.json"], out=tmp_path / name
            )
            commands.cmd_predict(cfg)
        assert (tmp_path / "one.csv").read_bytes() == (tmp_path / "two.csv").read_bytes()


def _gold_predictions(path, *tests, order=None):
    gold = CorpusService.load(list(tests))
    pairs = gold.pairs if order is None else [gold.pairs[i] for i in order]
    write_predictions(
        path, [p.id for p in pairs], [p.similarity for p in pairs], [p.entailment for p in pairs]
    )
    return gold


class TestEvaluate:
    def test_gold_against_itself(self, tmp_path, corpus):
        _gold_predictions(tmp_path / "p.csv", corpus["ptbr"])
        out = tmp_path / "report.json"
        [report] = commands.cmd_evaluate(
            RunConfig.build(test=[corpus["ptbr"]], predictions=tmp_path / "p.csv", out=out)
        )
        doc = json.loads(out.read_text())
        assert doc["pearson"] == pytest.approx(1.0)
        assert doc["mse"] == pytest.approx(0.0, abs=1e-12)
        assert doc["accuracy_pct"] == 100.0
        assert doc["f1_macro"] == 1.0
        assert doc["n"] == 12
        assert report.model_dump() == doc

    def test_order_of_the_predictions_is_irrelevant(self, tmp_path, corpus, rng):
        _gold_predictions(tmp_path / "a.csv", corpus["ptbr"])
        _gold_predictions(tmp_path / "b.csv", corpus["ptbr"], order=rng.permutation(12).tolist())
        reports = [
            commands.cmd_evaluate(RunConfig.build(test=[corpus["ptbr"]], predictions=tmp_path / name))
            for name in ("a.csv", "b.csv")
        ]
        assert reports[0] == reports[1]

    def test_per_split_reports(self, tmp_path, corpus):
        _gold_predictions(tmp_path / "p.csv", corpus["ptbr"], corpus["ptpt"])
        out = tmp_path / "report.json"
        reports = commands.cmd_evaluate(
            RunConfig.build(test=[corpus["ptbr"], corpus["ptpt"]], predictions=tmp_path / "p.csv", out=out)
        )
        assert [(r.split, r.n) for r in reports] == [("ptbr", 12), ("ptpt", 9), ("overall", 21)]
        assert [d["split"] for d in json.loads(out.read_text())] == ["ptbr", "ptpt", "overall"]

    def test_missing_prediction(self, tmp_path, corpus):
        _gold_predictions(tmp_path / "p.csv", corpus["ptbr"], order=list(range(11)))
        with pytest.raises(exceptions.PairIdMismatchError, match="'12'"):
            commands.cmd_evaluate(RunConfig.build(test=[corpus["ptbr"]], predictions=tmp_path / "p.csv"))

    def test_prediction_without_gold(self, tmp_path, corpus):
        write_predictions(tmp_path / "p.csv", ["999"], [3.0])
        with pytest.raises(exceptions.PairIdMismatchError):
            commands.cmd_evaluate(RunConfig.build(test=[corpus["ptbr"]], predictions=tmp_path / "p.csv"))

    def test_similarity_only(self, tmp_path, corpus):
        gold = CorpusService.load([corpus["ptbr"]])
        write_predictions(tmp_path / "p.csv", gold.ids, np.full(12, 3.0) + np.arange(12) / 100)
        [report] = commands.cmd_evaluate(RunConfig.build(test=[corpus["ptbr"]], predictions=tmp_path / "p.csv"))
        assert report.pearson is not None and report.accuracy is None


class TestBaseline:
    def test_predictions_in_range(self, tmp_path, corpus):
        out = tmp_path / "bow.csv"
        commands.cmd_baseline(RunConfig.build(train=[corpus["train"]], test=[corpus["ptbr"]], out=out))
        preds = read_predictions(out)
        assert preds.entailment is None
        assert all(1.0 <= v <= 5.0 for v in preds.similarity.values())


class TestInspectEmbeddings:
    def test_summary_and_conversion(self, tmp_path, corpus, embeddings, tiny_table):
        out = tmp_path / "vectors.bin"
        summary = commands.cmd_inspect_embeddings(
            RunConfig.build(embeddings=embeddings, test=[corpus["ptbr"]], out=out)
        )
        assert (summary["count"], summary["dim"]) == (7, 3)
        assert 0.0 <= summary["coverage"]["token_coverage"] <= 1.0
        assert EmbeddingsService.load(out) == EmbeddingsService.load(embeddings)
