"""Weyl-group orbit functions, their algebra, and discrete transforms."""

from .rootsys import build, parse_diagram, inner, convert_basis, to_orthogonal, from_orthogonal

__all__ = [
    "build", "parse_diagram", "inner", "convert_basis",
    "to_orthogonal", "from_orthogonal",
]
__version__ = "0.1.0"
