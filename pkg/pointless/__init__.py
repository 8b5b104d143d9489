from .configuration import Configuration, config
from .dataclass import LPoly, ModPLData, PrimeRecord
from .engine import PointCountingRunner, PointCountingRunnerArguments, classify, run_pipeline
from .forms import ConicQuartic, TernaryForm
from .model_builder import HyperModel, build_model, model_from_coefficients
from .utils.io import load_curve_file

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "ConicQuartic",
    "HyperModel",
    "LPoly",
    "ModPLData",
    "PointCountingRunner",
    "PointCountingRunnerArguments",
    "PrimeRecord",
    "TernaryForm",
    "build_model",
    "classify",
    "config",
    "load_curve_file",
    "model_from_coefficients",
    "run_pipeline",
]
