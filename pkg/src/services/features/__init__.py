from .bins import DIMENSION_BINS, NETWORK_BINS, SALIENCY_BINS, BinSpec
from .dump import FeatureDump, FeatureDumpMeta, meta_path, read_feature_dump, write_feature_dump
from .extract import (
    dimension_bins,
    extract_features,
    extract_tokens,
    mean_vector_distances,
    saliency_weighted_histogram,
    unweighted_all_pairs_histogram,
    unweighted_max_histogram,
)
from .models import FEATURE_COUNT, FEATURE_NAMES, HISTOGRAM_GROUPS, PairFeatures
from .service import FeaturesService


__all__ = [
    "DIMENSION_BINS",
    "FEATURE_COUNT",
    "FEATURE_NAMES",
    "HISTOGRAM_GROUPS",
    "NETWORK_BINS",
    "SALIENCY_BINS",
    "BinSpec",
    "FeatureDump",
    "FeatureDumpMeta",
    "FeaturesService",
    "PairFeatures",
    "dimension_bins",
    "extract_features",
    "extract_tokens",
    "mean_vector_distances",
    "meta_path",
    "read_feature_dump",
    "saliency_weighted_histogram",
    "unweighted_all_pairs_histogram",
    "unweighted_max_histogram",
    "write_feature_dump",
]
