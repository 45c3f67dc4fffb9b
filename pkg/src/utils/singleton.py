import typing

import pydantic


__all__ = (
    "Singleton",
    "SingletonPydantic",
)


_instances: dict[type, typing.Any] = {}


def _get_or_create(cls: type) -> typing.Any:
    if cls not in _instances:
        instance = cls.__new__(cls)  # type: ignore
        instance.__init__()
        _instances[cls] = instance
    return _instances[cls]


class __SingletonMeta(type):
    @typing.override
    def __call__(cls):
        return _get_or_create(cls)


class Singleton(metaclass=__SingletonMeta):
    """Affects current and all child classes (each will be a separate `Singleton`).

    Only works for classes that don't have constructor args and kwargs, i.e. the stateless services.

    Provides the `__slots__` attribute.
    """

    __slots__ = ()


class __SingletonMetaPydantic(type(pydantic.BaseModel)):  # type: ignore
    def __call__(cls):  # type: ignore
        return _get_or_create(cls)


class SingletonPydantic(metaclass=__SingletonMetaPydantic):
    """Affects current and all child classes (each will be a separate `Singleton`).

    Inherit together with `pydantic_settings.BaseSettings`.

    Only works for settings that read all of their fields from the environment or an *.env* file.
    """
