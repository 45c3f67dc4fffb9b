from .models import EmbeddingTable
from .service import (
    EmbeddingsService,
    load_word2vec_binary,
    load_word2vec_text,
    write_word2vec_binary,
    write_word2vec_text,
)
from .types import DenseVector
from .vectors import cosine_matrix, cosine_similarity, euclidean_distance


__all__ = [
    "DenseVector",
    "EmbeddingTable",
    "EmbeddingsService",
    "cosine_matrix",
    "cosine_similarity",
    "euclidean_distance",
    "load_word2vec_binary",
    "load_word2vec_text",
    "write_word2vec_binary",
    "write_word2vec_text",
]
