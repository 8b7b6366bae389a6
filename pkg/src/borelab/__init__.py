"""Borel-stable abelian subalgebra combinatorics via affine root systems."""

from .cartan import AffineDiagram, load_diagram
from .grading import GradedContext, analyze, catalog_involutions, context_for, involution
from .minuscule import MinusculePoset, enumerate_poset, maxima_parametrization, verify_all

__all__ = [
    "AffineDiagram",
    "GradedContext",
    "MinusculePoset",
    "analyze",
    "catalog_involutions",
    "context_for",
    "enumerate_poset",
    "involution",
    "load_diagram",
    "maxima_parametrization",
    "verify_all",
]
__version__ = "0.1.0"
