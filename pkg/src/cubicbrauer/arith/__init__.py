"""
Arithmetic substrate: finite fields, truncated p-adic rings and forms.
"""

from .eisenstein import EisensteinElement, EisensteinRing, eisenstein_invert
from .finite_field import FieldElement, FiniteField, cube_roots_of_unity, validate_prime
from .forms import QQ, HomogeneousCubicForm, HomogeneousForm, form_substitute
from .padic import UnramifiedInteger, UnramifiedRing, teichmuller_lift
from .polynomials import FqPoly, ff_factor, field_embedding

__all__ = [
    "EisensteinElement",
    "EisensteinRing",
    "eisenstein_invert",
    "FieldElement",
    "FiniteField",
    "cube_roots_of_unity",
    "validate_prime",
    "QQ",
    "HomogeneousCubicForm",
    "HomogeneousForm",
    "form_substitute",
    "UnramifiedInteger",
    "UnramifiedRing",
    "teichmuller_lift",
    "FqPoly",
    "ff_factor",
    "field_embedding",
]
