"""Finite systems, systemic modules, projectivity checks and Schanuel-type replays."""

from .core import FiniteSystem, check_system, make_system
from .instancefile import load_instance, parse_instance, serialize
from .instances import FINITE_NAMES, REGISTRY, SYSTEM_NAMES, get_instance
from .modules import MapTable, SystemicModule, classify_map, direct_sum, free_module
from .projective import characterizations, dual_basis, is_projective
from .report import VerificationReport
from .search import BACKEND

__version__ = "0.1.0"

__all__ = [
    "FINITE_NAMES", "REGISTRY", "SYSTEM_NAMES", "FiniteSystem", "MapTable", "SystemicModule",
    "BACKEND", "VerificationReport", "characterizations", "check_system", "classify_map",
    "direct_sum", "dual_basis", "free_module", "get_instance", "is_projective", "load_instance",
    "make_system", "parse_instance", "serialize",
]
