"""Symmetric configurations v_3: construction, colouring, symmetry and enumeration."""
from ._kernels import BACKEND
from .core import (AssociatedGraph, Configuration, Graph, LeviGraph, ValidationReport,
                   associated_graph, connected_components, dual, format_config, levi_graph,
                   parse_config, read_configs, validate)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AssociatedGraph", "Configuration", "Graph", "LeviGraph", "ValidationReport",
    "associated_graph", "connected_components", "dual", "format_config", "levi_graph",
    "parse_config", "read_configs", "validate",
]
