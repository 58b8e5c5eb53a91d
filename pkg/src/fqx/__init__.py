"""Exact square-class, ramification and isotropy computations over F_q(X)."""

from .errors import FqxError
from .gf import FieldDesc, FieldElem, make_field
from .polyring import Poly, factor

__all__ = ["FieldDesc", "FieldElem", "FqxError", "Poly", "factor", "make_field"]
__version__ = "0.1.0"
