"""Shared click options of the subcommands."""

import pathlib
import typing
from collections.abc import Callable

import click

from config.corpus import IdfSource
from config.embeddings import EmbeddingsFormat
from config.learn import Learner, Task
from utils import exceptions


def parse_grid(values: typing.Iterable[str]) -> dict[str, list[float]]:
    """Parse `--grid` values: each one is 'key=v1,v2,...', several of them can be joined with ';'.

    A key repeated across values keeps its last list.

    :raise ConfigError:
        For a value without '=', an empty key or list, or a non-numeric item.
    """
    grid: dict[str, list[float]] = {}
    for value in values:
        for part in filter(None, (p.strip() for p in value.split(";"))):
            key, sep, items = part.partition("=")
            key = key.strip()
            if not sep or not key:
                raise exceptions.ConfigError(f"--grid: expected 'key=v1,v2,...', got '{part}'")
            try:
                numbers = [float(v) for v in items.split(",") if v.strip()]
            except ValueError:
                raise exceptions.ConfigError(f"--grid: non-numeric value in '{part}'") from None
            if not numbers:
                raise exceptions.ConfigError(f"--grid: no values for '{key}'")
            grid[key] = numbers
    return grid


_PATH = click.Path(path_type=pathlib.Path)
_EXISTING = click.Path(exists=True, dir_okay=False, path_type=pathlib.Path)


def _choice(enum: type) -> click.Choice:
    return click.Choice([m.value for m in enum], case_sensitive=False)


OPTIONS: typing.Final[dict[str, Callable]] = {
    "embeddings": click.option("--embeddings", type=_EXISTING, help="word2vec file (.bin or .txt)."),
    "embeddings_format": click.option(
        "--embeddings-format", type=_choice(EmbeddingsFormat), help="Overrides the detection by file suffix."
    ),
    "train": click.option("--train", type=_EXISTING, multiple=True, help="ASSIN XML training file, repeatable."),
    "test": click.option("--test", type=_EXISTING, multiple=True, help="ASSIN XML evaluation file, repeatable."),
    "features": click.option("--features", type=_EXISTING, help="Feature dump to train from."),
    "model": click.option("--model", type=_EXISTING, multiple=True, help="Model file, at most one per task."),
    "predictions": click.option("--predictions", type=_EXISTING, help="Predictions file to evaluate."),
    "out": click.option("--out", type=_PATH, help="Output file."),
    "report": click.option("--report", type=_PATH, help="Cross-validation report file."),
    "tokens": click.option("--tokens", type=_PATH, help="Also write the tokenized sentences here."),
    "task": click.option("--task", type=_choice(Task)),
    "learner": click.option("--learner", type=_choice(Learner)),
    "grid": click.option("--grid", multiple=True, help="Parameter list override, e.g. 'C=1,10;gamma=0.1'."),
    "seed": click.option("--seed", type=int, help="Seed of the cross-validation shuffling."),
    "folds": click.option("--folds", type=int),
    "workers": click.option("--workers", type=int, help="Processes for feature extraction and grid search."),
    "idf_from": click.option("--idf-from", type=_choice(IdfSource)),
    "idf_path": click.option("--idf-path", type=_EXISTING, help="IDF file written by 'build-idf'."),
    "dedupe": click.option(
        "--dedupe/--no-dedupe", default=None, help="Drop training pairs whose sentences also occur in --test."
    ),
}


def with_options(*names: str) -> Callable:
    """Decorate a command with `--config` and the named shared options."""

    def decorator(f: Callable) -> Callable:
        for name in reversed(names):
            f = OPTIONS[name](f)
        return click.option("--config", "config_file", type=_EXISTING, help="TOML file with option values.")(f)

    return decorator
