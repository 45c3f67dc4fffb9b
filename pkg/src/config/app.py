import typing

import pydantic
from pydantic_settings import SettingsConfigDict

from utils import exceptions, logging, singleton

from . import _utils, corpus, datasets, embeddings, learn


log = logging.getLogger()


def _namespace[T: _utils.BaseSettings](model: type[T], name: str) -> typing.Any:
    return pydantic.Field(default_factory=lambda: _utils.init_config(model, name))


# being a Singleton is just a precaution, everything should be using the 'AppConfig' instance:
class _AppConfig(_utils.BaseSettings, singleton.SingletonPydantic):
    """Container for the different config namespaces."""

    model_config = SettingsConfigDict(env_prefix="ASSIN_")

    APP_NAME: str = "assin-similarity"
    LOG_LEVEL: typing.Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    EMBEDDINGS: embeddings.EmbeddingsConfig = _namespace(embeddings.EmbeddingsConfig, "EMBEDDINGS")
    CORPUS: corpus.CorpusConfig = _namespace(corpus.CorpusConfig, "CORPUS")
    LEARN: learn.LearnConfig = _namespace(learn.LearnConfig, "LEARN")
    DATASETS: datasets.DatasetsConfig = _namespace(datasets.DatasetsConfig, "DATASETS")


# a broken env is reported like any other config error: 'error[config]: ...' and exit status 2
with log.as_exit_status(), log.with_prefix("[CONFIG]"):
    try:
        AppConfig: typing.Final[_AppConfig] = _AppConfig()
    except pydantic.ValidationError as err:
        raise exceptions.ConfigError(_utils.validation_message(err, "ASSIN_")) from None
    logging.set_level(AppConfig.LOG_LEVEL)
    log.debug("loaded")
