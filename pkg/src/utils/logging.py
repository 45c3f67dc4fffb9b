"""Custom logger: colourized stderr lines, tagged with the pipeline stage that emitted them."""

import contextlib
import logging as _l
import sys
import typing

import uvicorn.logging


_ROOT_NAME: typing.Final[str] = "assin"


def _stderr_handler(tag: str | None, *, errors: bool) -> _l.Handler:
    """Records below ERROR as '<LEVEL> [TAG] msg', the others with the emitting function as '... func: msg'."""
    where = "%(funcName)s: " if errors else ""
    handler = _l.StreamHandler(sys.stderr)
    handler.setFormatter(
        uvicorn.logging.ColourizedFormatter(fmt=f"%(levelprefix)s {tag + ' ' if tag else ''}{where}%(message)s")
    )
    if errors:
        handler.setLevel(_l.ERROR)
    else:
        handler.addFilter(lambda r: r.levelno < _l.ERROR)
    return handler


class _PrefixFilter(_l.Filter):
    def __init__(self, prefix: str):
        super().__init__()
        self.prefix = prefix

    @typing.override
    def filter(self, record: _l.LogRecord) -> bool:
        record.msg = f"{self.prefix} {record.msg}"
        return True


class CustomLogger(_l.Logger):
    """A `logging.Logger` for one pipeline stage, e.g. `getLogger("learn")` logs as "[LEARN] your-msg".

    Stage loggers are children of the "assin" logger and take their level from it (see `set_level()`),
    but they write to stderr themselves and don't propagate.
    """

    def __new__(cls, name: str | None = None) -> typing.Self:
        root = _l.getLogger(_ROOT_NAME)
        logger = root.getChild(name) if name else root
        if not logger.handlers:
            tag = f"[{name.upper()}]" if name else None
            logger.addHandler(_stderr_handler(tag, errors=False))
            logger.addHandler(_stderr_handler(tag, errors=True))
            logger.propagate = False
        logger.__class__ = cls
        return typing.cast(cls, logger)  # type: ignore

    def __init__(self, name: str | None = None) -> None: ...

    @contextlib.contextmanager
    def with_prefix(self, prefix: str | None = None) -> typing.Generator[None, typing.Any, None]:
        """Prepend `prefix` to every message logged through **self** within the context (no-op for **None**)."""
        if not prefix:
            yield
            return
        f = _PrefixFilter(prefix)
        self.addFilter(f)
        try:
            yield
        finally:
            self.removeFilter(f)

    @contextlib.contextmanager
    def as_exit_status(self) -> typing.Generator[None, typing.Any, None]:
        """Convert any raised exception into a one-line `error[<category>]: <message>` and a non-zero exit.

        Exceptions carrying a `category` and an `exit_code` (see `utils.exceptions`) use them,
        anything else is reported as category "internal" with exit code 1 and its traceback logged at DEBUG.
        """
        try:
            yield
        except Exception as err:
            category = getattr(err, "category", None)
            if category is None:
                self.debug("unexpected error", exc_info=err)
            message = " ".join(str(err).split())
            print(f"error[{category or 'internal'}]: {message}", file=sys.stderr)
            sys.exit(getattr(err, "exit_code", 1))


_ROOT: typing.Final[CustomLogger] = CustomLogger()
_ROOT.setLevel(_l.DEBUG)


def set_level(level: str | int) -> None:
    """Set the level of every `CustomLogger`, the stage loggers inherit it."""
    _ROOT.setLevel(level)


def getLogger(name: str | None = None) -> CustomLogger:
    """Return the `CustomLogger` of the stage `name` (the untagged root one for **None**), creating it if needed.

    Same name and signature as `logging.getLogger()`.
    """
    return CustomLogger(name)
