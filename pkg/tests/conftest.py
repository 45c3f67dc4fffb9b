import logging
import pathlib
import textwrap
import typing

import numpy as np
import pytest

from services.corpus import IdfModel
from services.embeddings import EmbeddingTable


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20160101)


@pytest.fixture
def tiny_table() -> EmbeddingTable:
    return EmbeddingTable.from_mapping(
        {
            "gato": [1.0, 0.0, 0.0],
            "cão": [0.9, 0.1, 0.0],
            "come": [0.0, 1.0, 0.0],
            "bebe": [0.1, 0.9, 0.2],
            "peixe": [0.0, 0.0, 1.0],
            "água": [0.2, 0.1, 0.9],
            "o": [0.3, 0.3, 0.3],
        }
    )


@pytest.fixture
def flat_idf() -> IdfModel:
    """Every token weighs the same."""
    return IdfModel(doc_count=1, doc_freq={})


def assin_xml(*pairs: dict[str, typing.Any]) -> str:
    """An ASSIN document with one `<pair>` per dict of (id, t, h and the optional similarity, entailment)."""
    body = []
    for p in pairs:
        attrs = f' id="{p["id"]}"'
        if "entailment" in p:
            attrs += f' entailment="{p["entailment"]}"'
        if "similarity" in p:
            attrs += f' similarity="{p["similarity"]}"'
        body.append(f"  <pair{attrs}>\n    <t>{p['t']}</t>\n    <h>{p['h']}</h>\n  </pair>")
    header = '<?xml version="1.0" encoding="utf-8"?>\n'
    return header + "<entailment-corpus>\n" + "\n".join(body) + "\n</entailment-corpus>\n"


@pytest.fixture
def write_assin(tmp_path: pathlib.Path) -> typing.Callable[..., pathlib.Path]:
    def write(name: str, *pairs: dict[str, typing.Any]) -> pathlib.Path:
        path = tmp_path / name
        path.write_text(assin_xml(*pairs), encoding="utf-8")
        return path

    return write


@pytest.fixture
def write_raw(tmp_path: pathlib.Path) -> typing.Callable[[str, str], pathlib.Path]:
    def write(name: str, content: str) -> pathlib.Path:
        path = tmp_path / name
        path.write_text(textwrap.dedent(content).lstrip(), encoding="utf-8")
        return path

    return write


@pytest.fixture
def service_log(caplog) -> typing.Iterator[typing.Callable[[str], pytest.LogCaptureFixture]]:
    """Route the records of the named service logger (which doesn't propagate) into `caplog`."""
    attached = []

    def _attach(name: str) -> pytest.LogCaptureFixture:
        logger = logging.getLogger(name)
        logger.addHandler(caplog.handler)
        attached.append(logger)
        return caplog

    yield _attach
    for logger in attached:
        logger.removeHandler(caplog.handler)
