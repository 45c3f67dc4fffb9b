"""Helpers shared by the config namespaces (and the per-run config built on top of them)."""

import pathlib
import typing

import pydantic
from pydantic_core import PydanticCustomError
from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import SettingsConfigDict

from utils import exceptions, logging


log = logging.getLogger()


ENV_FILE: typing.Final = pathlib.Path(__file__).parents[2] / ".env"


class BaseSettings(PydanticBaseSettings):
    """Env-only, read-once settings: the process env first, then the '.env' file at the repo root."""

    model_config = SettingsConfigDict(
        env_file=ENV_FILE,
        env_file_encoding="utf-8",
        env_ignore_empty=True,
        case_sensitive=True,
        extra="ignore",
        frozen=True,
        hide_input_in_errors=True,
    )


def validation_message(err: pydantic.ValidationError, prefix: str = "") -> str:
    """The first error of `err` on one line, as '<prefix><field>: <message>'.

    Model-level errors have no field and are returned as their bare message.
    """
    e = err.errors()[0]
    where = ".".join(map(str, e["loc"]))
    return f"{prefix}{where}: {e['msg']}" if where else e["msg"]


def init_config[T: PydanticBaseSettings](model: type[T], name: str) -> T:
    """Read the config namespace `model`, with any log emitted meanwhile prefixed by '[`name`]'.

    :raise ConfigError:
        Naming the offending env variable the way the user sets it, e.g. 'ASSIN_LEARN_SEED: ...'.
    """
    try:
        with log.with_prefix(f"[{name}]"):
            return model()
    except pydantic.ValidationError as err:
        prefix = model.model_config.get("env_prefix") or ""
        raise exceptions.ConfigError(validation_message(err, prefix)) from None


def required_by_error(settings: PydanticBaseSettings, name: str, reason: str) -> PydanticCustomError:
    """The error for the optional field `name`, made required by the value of another one."""
    prefix = settings.model_config.get("env_prefix") or ""
    return PydanticCustomError("missing", "{p}{n}: required {r}", {"p": prefix, "n": name, "r": reason})


def require_values(settings: PydanticBaseSettings, *names: str) -> None:
    """
    :raise PydanticCustomError:
        When one of the list fields `names` of `settings` is empty.
    """
    prefix = settings.model_config.get("env_prefix") or ""
    for name in names:
        if not getattr(settings, name):
            raise PydanticCustomError("too_short", "{p}{n}: at least one value is required", {"p": prefix, "n": name})
