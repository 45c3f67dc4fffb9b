"""Scores on the ASSIN distribution, run only when its files and the Portuguese word vectors are configured.

Point ASSIN_DATA_PTBR_TRAIN, ASSIN_DATA_PTPT_TRAIN, ASSIN_DATA_PTBR_TRIAL, ASSIN_DATA_PTPT_TRIAL,
ASSIN_DATA_PTBR_TEST and ASSIN_DATA_EMBEDDINGS at them (in the environment or the .env file).
"""

import pytest

from config import AppConfig
from services.corpus import CorpusService
from services.metrics import bow_baseline_similarity, pearson
from services.pipeline import RunConfig, commands


DATA = AppConfig.DATASETS

pytestmark = [
    pytest.mark.reproduction,
    pytest.mark.skipif(
        not DATA.available("PTBR_TRAIN", "PTPT_TRAIN", "PTBR_TRIAL", "PTPT_TRIAL", "EMBEDDINGS"),
        reason="ASSIN files or embeddings not configured",
    ),
]


@pytest.fixture(scope="module")
def trial_models(tmp_path_factory):
    """Both models, trained on the two training sets without the pairs that also occur in the trial sets."""
    out = tmp_path_factory.mktemp("trial")
    common = {
        "embeddings": DATA.EMBEDDINGS,
        "train": [DATA.PTBR_TRAIN, DATA.PTPT_TRAIN],
        "test": [DATA.PTBR_TRIAL, DATA.PTPT_TRIAL],
        "dedupe": True,
    }
    commands.cmd_train(RunConfig.build(learner="svr", out=out / "svr.json", **common))
    commands.cmd_train(RunConfig.build(learner="svm", out=out / "svm.json", **common))
    return out


def test_trial_similarity(trial_models):
    predictions = trial_models / "trial.csv"
    commands.cmd_predict(
        RunConfig.build(
            embeddings=DATA.EMBEDDINGS,
            test=[DATA.PTBR_TRIAL, DATA.PTPT_TRIAL],
            model=[trial_models / "svr.json", trial_models / "svm.json"],
            out=predictions,
        )
    )
    reports = commands.cmd_evaluate(RunConfig.build(test=[DATA.PTBR_TRIAL, DATA.PTPT_TRIAL], predictions=predictions))
    for report, expected in zip(reports, (0.51, 0.49, 0.50)):
        assert report.pearson == pytest.approx(expected, abs=0.05), report.split


def test_bag_of_words_baseline():
    trial = CorpusService.load([DATA.PTBR_TRIAL, DATA.PTPT_TRIAL])
    assert pearson(bow_baseline_similarity(trial), [p.similarity for p in trial.pairs]) == pytest.approx(0.47, abs=0.03)


@pytest.mark.skipif(not DATA.available("PTBR_TEST"), reason="PT-BR blind test set not configured")
def test_blind_test_ptbr(trial_models):
    predictions = trial_models / "blind.csv"
    commands.cmd_predict(
        RunConfig.build(
            embeddings=DATA.EMBEDDINGS,
            test=[DATA.PTBR_TEST],
            model=[trial_models / "svr.json", trial_models / "svm.json"],
            out=predictions,
        )
    )
    [report] = commands.cmd_evaluate(RunConfig.build(test=[DATA.PTBR_TEST], predictions=predictions))
    assert 0.59 <= report.pearson <= 0.70
    assert 100 * report.accuracy == pytest.approx(81.65, abs=2.0)
