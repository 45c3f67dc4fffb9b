import json
import pathlib
import typing

import click

from services.pipeline import RunConfig, commands
from utils import logging

from .options import parse_grid, with_options


log = logging.getLogger("cli")


def _run_config(config_file: pathlib.Path | None, grid: tuple[str, ...] = (), **flags: typing.Any) -> RunConfig:
    return RunConfig.build(config_file, grid=parse_grid(grid), **flags)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Overrides ASSIN_LOG_LEVEL.",
)
def cli(log_level: str | None) -> None:
    """Semantic similarity and entailment of ASSIN sentence pairs from word-embedding features."""
    if log_level:
        logging.set_level(log_level.upper())


@cli.command("build-idf")
@with_options("train", "test", "dedupe", "out", "tokens")
def build_idf(**flags: typing.Any) -> None:
    """Count the document frequencies of the training sentences."""
    commands.cmd_build_idf(_run_config(**flags))


@cli.command("extract")
@with_options("embeddings", "embeddings_format", "train", "test", "idf_from", "idf_path", "workers", "out")
def extract(**flags: typing.Any) -> None:
    """Write the 15 features of every pair of --test (or of --train) as CSV."""
    commands.cmd_extract(_run_config(**flags))


@cli.command("train")
@with_options(
    "embeddings",
    "embeddings_format",
    "train",
    "test",
    "dedupe",
    "features",
    "task",
    "learner",
    "grid",
    "seed",
    "folds",
    "workers",
    "idf_from",
    "idf_path",
    "out",
    "report",
)
def train(**flags: typing.Any) -> None:
    """Grid-search by cross validation, fit the best candidate and save it."""
    commands.cmd_train(_run_config(**flags))


@cli.command("predict")
@with_options("embeddings", "embeddings_format", "test", "model", "workers", "out")
def predict(**flags: typing.Any) -> None:
    """Predict the similarity and/or entailment class of every pair of --test."""
    commands.cmd_predict(_run_config(**flags))


@cli.command("evaluate")
@with_options("test", "predictions", "out")
def evaluate(**flags: typing.Any) -> None:
    """Score a predictions file against the gold labels of --test; the report is also printed."""
    reports = commands.cmd_evaluate(_run_config(**flags))
    for r in reports:
        click.echo(r.model_dump_json())


@cli.command("baseline")
@with_options("train", "test", "dedupe", "out")
def baseline(**flags: typing.Any) -> None:
    """Bag-of-words cosine similarity predictions."""
    commands.cmd_baseline(_run_config(**flags))


@cli.command("inspect-embeddings")
@with_options("embeddings", "embeddings_format", "train", "test", "out")
def inspect_embeddings(**flags: typing.Any) -> None:
    """Print the size of the embedding table and its coverage of the corpora; convert it with --out."""
    click.echo(json.dumps(commands.cmd_inspect_embeddings(_run_config(**flags)), indent=1))
