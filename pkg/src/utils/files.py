"""Write-once output files."""

import contextlib
import os
import pathlib
import tempfile
import typing


@contextlib.contextmanager
def atomic_path(path: str | os.PathLike) -> typing.Generator[pathlib.Path, typing.Any, None]:
    """Yield a temporary path next to `path`, renamed onto `path` only if the context exits cleanly.

    Readers never observe a half-written file and a failed write leaves a previous `path` untouched.
    """
    target = pathlib.Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
    os.close(fd)
    tmp_path = pathlib.Path(tmp)
    try:
        yield tmp_path
        os.replace(tmp_path, target)
    finally:
        tmp_path.unlink(missing_ok=True)


def write_text(path: str | os.PathLike, text: str) -> None:
    """Atomically write `text` as UTF-8 with '\\n' line endings."""
    with atomic_path(path) as tmp:
        tmp.write_text(text, encoding="utf-8", newline="\n")


def write_bytes(path: str | os.PathLike, data: bytes) -> None:
    """Atomically write `data`."""
    with atomic_path(path) as tmp:
        tmp.write_bytes(data)
