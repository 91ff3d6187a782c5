"""Antimagic orientations of 2d-regular graphs with any number of odd components."""

from .errors import (
    AntimagicError,
    BudgetExhausted,
    DegreeTooSmall,
    DuplicateEdge,
    Infeasible,
    LayoutError,
    NotRegular,
    SelfLoop,
)
from .gen import ComponentSpec, assemble, circulant
from .graph import ComponentInfo, Graph, build_graph, classify_components
from .pipeline import Construction, construct
from .verify import VerificationReport, check_antimagic, verify_construction
from .x0 import X0Result, solve_x0

__all__ = [
    "AntimagicError",
    "BudgetExhausted",
    "ComponentInfo",
    "ComponentSpec",
    "Construction",
    "DegreeTooSmall",
    "DuplicateEdge",
    "Graph",
    "Infeasible",
    "LayoutError",
    "NotRegular",
    "SelfLoop",
    "VerificationReport",
    "X0Result",
    "assemble",
    "build_graph",
    "check_antimagic",
    "circulant",
    "classify_components",
    "construct",
    "solve_x0",
    "verify_construction",
]
