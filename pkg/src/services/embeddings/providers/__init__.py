from .abstract import BaseEmbeddingsProvider


__all__ = ["BaseEmbeddingsProvider"]
