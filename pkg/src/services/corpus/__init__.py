from .assin import merge_datasets, parse_assin_xml, remove_overlap, write_assin_xml
from .idf import build_idf, idf
from .models import Dataset, EntailmentClass, IdfModel, SentencePair
from .service import CorpusService
from .tokenizer import tokenize


__all__ = [
    "CorpusService",
    "Dataset",
    "EntailmentClass",
    "IdfModel",
    "SentencePair",
    "build_idf",
    "idf",
    "merge_datasets",
    "parse_assin_xml",
    "remove_overlap",
    "tokenize",
    "write_assin_xml",
]
