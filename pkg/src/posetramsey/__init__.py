"""Desk-scale toolkit for finite partial orders with linear extensions:
structures and embeddings, below-ordered extension spaces, anchored rigid
surjections, twisted products, grid witnesses, and exhaustive Ramsey
verification with explicit certificates."""

__version__ = "0.1.0"

from .structures import Structure, StructureError, validate_structure  # noqa: F401
from .engines import ColoringCertificate, InfeasibleSearchError, RunLimits  # noqa: F401
