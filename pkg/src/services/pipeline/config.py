import contextvars
import pathlib
import typing

import pydantic
from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import PydanticBaseSettingsSource, SettingsConfigDict, TomlConfigSettingsSource

from config import AppConfig, _utils
from config.corpus import IdfSource
from config.embeddings import EmbeddingsFormat
from config.learn import Learner, Task
from utils import exceptions


_toml_file: contextvars.ContextVar[pathlib.Path | None] = contextvars.ContextVar("run_config_toml", default=None)


class RunConfig(PydanticBaseSettings):
    """Everything a command needs.

    Values come from, in order of precedence: the command-line flags, the TOML file given with `--config`,
    the global `AppConfig` defaults. Build it with `RunConfig.build()`.
    """

    model_config = SettingsConfigDict(frozen=True, extra="forbid", hide_input_in_errors=True)

    embeddings: pathlib.Path | None = pydantic.Field(default_factory=lambda: AppConfig.EMBEDDINGS.PATH)
    embeddings_format: EmbeddingsFormat | None = pydantic.Field(default_factory=lambda: AppConfig.EMBEDDINGS.FORMAT)
    train: list[pathlib.Path] = []
    test: list[pathlib.Path] = []
    features: pathlib.Path | None = None
    """A feature dump to train from instead of extracting the features of `train`."""
    model: list[pathlib.Path] = []
    predictions: pathlib.Path | None = None
    out: pathlib.Path | None = None
    report: pathlib.Path | None = None
    tokens: pathlib.Path | None = None
    """Where `build-idf` also writes the tokenized training sentences, one per line."""

    task: Task | None = None
    learner: Learner | None = None
    grid: dict[str, list[float]] = {}
    seed: int = pydantic.Field(default_factory=lambda: AppConfig.LEARN.SEED)
    folds: int = pydantic.Field(default_factory=lambda: AppConfig.LEARN.CV_FOLDS, ge=2)
    workers: int = pydantic.Field(default_factory=lambda: AppConfig.LEARN.WORKERS, ge=1)

    idf_from: IdfSource = pydantic.Field(default_factory=lambda: AppConfig.CORPUS.IDF_SOURCE)
    idf_path: pathlib.Path | None = pydantic.Field(default_factory=lambda: AppConfig.CORPUS.IDF_PATH)
    dedupe: bool = False
    """Drop from the training data the pairs that also occur in `test`."""

    @classmethod
    @typing.override
    def settings_customise_sources(
        cls,
        settings_cls: type[PydanticBaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        toml_file = _toml_file.get()
        if toml_file is None:
            return (init_settings,)
        return init_settings, TomlConfigSettingsSource(settings_cls, toml_file=toml_file)

    @pydantic.model_validator(mode="after")
    def _validate_task_learner(self) -> typing.Self:
        if self.learner is not None and self.task is not None and self.learner.task != self.task:
            raise ValueError(f"learner '{self.learner}' can't be trained for task '{self.task}'")
        if self.idf_from == IdfSource.FILE and self.idf_path is None:
            raise ValueError("'idf_path' is required when 'idf_from' is 'file'")
        return self

    @classmethod
    def build(cls, config_file: pathlib.Path | None = None, **flags: typing.Any) -> typing.Self:
        """Build a `RunConfig` from the given command-line `flags` (**None** and empty values are ignored).

        :raise ConfigError:
            When `config_file` doesn't exist or a value is invalid.
        """
        if config_file is not None and not config_file.is_file():
            raise exceptions.ConfigError(f"config file '{config_file}' not found")
        given = {k: v for k, v in flags.items() if v is not None and v != () and v != [] and v != {}}
        token = _toml_file.set(config_file)
        try:
            return cls(**given)
        except pydantic.ValidationError as err:
            raise exceptions.ConfigError(_utils.validation_message(err)) from None
        finally:
            _toml_file.reset(token)

    @property
    def resolved_task(self) -> Task:
        """The `task`, else the task of the `learner`, else similarity."""
        if self.task is not None:
            return self.task
        return self.learner.task if self.learner is not None else Task.SIMILARITY

    @property
    def resolved_learner(self) -> Learner:
        """The `learner`, else SVR for similarity and SVM for entailment."""
        if self.learner is not None:
            return self.learner
        return Learner.SVR if self.resolved_task == Task.SIMILARITY else Learner.SVM

    def require(self, *names: str) -> None:
        """
        :raise ConfigError:
            When one of the `names` fields is unset.
        """
        for name in names:
            if getattr(self, name) in (None, [], {}):
                raise exceptions.ConfigError(f"--{name.replace('_', '-')} is required for this command")
