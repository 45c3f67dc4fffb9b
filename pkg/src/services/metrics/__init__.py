from .baseline import apply_affine, bow_baseline_similarity, fit_affine, tf_cosine
from .measures import accuracy, confusion_matrix, f1, mse, pearson
from .models import EvalReport, build_report


__all__ = [
    "EvalReport",
    "accuracy",
    "apply_affine",
    "bow_baseline_similarity",
    "build_report",
    "confusion_matrix",
    "f1",
    "fit_affine",
    "mse",
    "pearson",
    "tf_cosine",
]
