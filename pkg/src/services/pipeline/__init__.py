from . import commands
from .config import RunConfig
from .models import MODEL_FORMAT_VERSION, ModelBundle
from .predictions import Predictions, read_predictions, write_predictions
from .service import PipelineService


__all__ = [
    "MODEL_FORMAT_VERSION",
    "ModelBundle",
    "PipelineService",
    "Predictions",
    "RunConfig",
    "commands",
    "read_predictions",
    "write_predictions",
]
