import math
import os
import xml.etree.ElementTree as ET
from collections.abc import Iterable

from utils import exceptions, files, logging

from .models import Dataset, EntailmentClass, SentencePair


log = logging.getLogger("corpus")

ROOT_TAG = "entailment-corpus"
PAIR_TAG = "pair"


def _similarity(path: str | os.PathLike, raw: str | None, pair_id: str) -> float | None:
    if raw is None:
        return None
    try:
        value = float(raw.strip())
    except ValueError:
        raise exceptions.CorpusStructureError(path, f"similarity '{raw}' is not a decimal number", pair_id) from None
    if not math.isfinite(value) or not (1.0 <= value <= 5.0):
        raise exceptions.LabelRangeError(value, pair_id)
    return value


def _sentence(path: str | os.PathLike, pair: ET.Element, tag: str, pair_id: str) -> str:
    el = pair.find(tag)
    if el is None:
        raise exceptions.CorpusStructureError(path, f"<{PAIR_TAG}> has no <{tag}> element", pair_id)
    return el.text or ""


def parse_assin_xml(path: str | os.PathLike, variant_tag: str | None = None) -> Dataset:
    """Parse an ASSIN corpus file.

    Pairs without a `similarity` or an `entailment` attribute (blind test sets) get absent labels.

    :param path:
        The XML file.
    :param variant_tag:
        The `variant_tag` of the returned `Dataset`, the file stem when **None**.

    :raise CorpusParseError:
        When the file is not well-formed XML.
    :raise CorpusStructureError:
        When the root is not `<entailment-corpus>` or a `<pair>` lacks its `id`, `<t>` or `<h>`.
    :raise LabelRangeError:
        For a similarity outside of [1, 5].
    :raise LabelValueError:
        For an unknown entailment class.
    :raise DuplicatePairIdError:
        When two pairs share an id.
    """
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as err:
        line, column = err.position
        raise exceptions.CorpusParseError(path, line, column, str(err)) from None
    if root.tag != ROOT_TAG:
        raise exceptions.CorpusStructureError(path, f"root element is <{root.tag}>, expected <{ROOT_TAG}>")

    pairs = []
    for index, el in enumerate(root.iter(PAIR_TAG)):
        pair_id = el.get("id")
        if pair_id is None:
            raise exceptions.CorpusStructureError(path, f"<{PAIR_TAG}> number {index + 1} has no 'id' attribute")
        raw_entailment = el.get("entailment")
        pairs.append(
            SentencePair(
                id=pair_id,
                text_t=_sentence(path, el, "t", pair_id),
                text_h=_sentence(path, el, "h", pair_id),
                similarity=_similarity(path, el.get("similarity"), pair_id),
                entailment=None if raw_entailment is None else EntailmentClass.parse(raw_entailment, pair_id),
            )
        )

    tag = os.path.splitext(os.path.basename(path))[0] if variant_tag is None else variant_tag
    dataset = Dataset.from_pairs(pairs, variant_tag=tag)
    log.info(f"parsed {len(dataset)} pairs from '{path}'")
    return dataset


def write_assin_xml(dataset: Dataset, path: str | os.PathLike) -> None:
    """Serialize `dataset` in the format read by `parse_assin_xml`. Absent labels are left out."""
    root = ET.Element(ROOT_TAG)
    for p in dataset.pairs:
        attrib = {"id": p.id}
        if p.entailment is not None:
            attrib["entailment"] = p.entailment.value
        if p.similarity is not None:
            attrib["similarity"] = repr(p.similarity)
        el = ET.SubElement(root, PAIR_TAG, attrib)
        ET.SubElement(el, "t").text = p.text_t
        ET.SubElement(el, "h").text = p.text_h
    ET.indent(root)

    with files.atomic_path(path) as tmp:
        ET.ElementTree(root).write(tmp, encoding="utf-8", xml_declaration=True)


def merge_datasets(datasets: Iterable[Dataset], variant_tag: str = "overall") -> Dataset:
    """Concatenate `datasets` (e.g. PT-BR and PT-PT into the overall split).

    Every id is prefixed with the `variant_tag` of its source (or its position, when the tag is empty) as
    '<tag>:<id>', so ids of different sources can't collide.
    """
    pairs = []
    for index, ds in enumerate(datasets):
        prefix = ds.variant_tag or str(index)
        pairs.extend(p.model_copy(update={"id": f"{prefix}:{p.id}"}) for p in ds.pairs)
    return Dataset.from_pairs(pairs, variant_tag=variant_tag)


def remove_overlap(train: Dataset, test: Dataset) -> Dataset:
    """Drop from `train` every pair whose (t, h) sentences also form a pair of `test`."""
    held_out = {(p.text_t, p.text_h) for p in test.pairs}
    kept = [p for p in train.pairs if (p.text_t, p.text_h) not in held_out]
    if dropped := len(train) - len(kept):
        log.info(f"removed {dropped} pairs of '{train.variant_tag}' also present in '{test.variant_tag}'")
    return Dataset.from_pairs(kept, variant_tag=train.variant_tag)
