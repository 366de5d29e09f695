"""Exact polynomial kernel: rational arithmetic, resultants, real roots.

Public surface:

- types: ``Rat`` (exact rational constructor ``Q``), ``MPoly``,
  ``RatPoly``, ``RootInterval``
- arithmetic: ``mpoly_arith``, ``mpoly_partial`` (also available as
  operators / methods on ``MPoly``)
- elimination: ``sylvester_resultant``, ``euclidean_last_linear``
- roots: ``strip_known_factors``, ``isolate_real_roots``, ``refine_root``
- errors: ``DegenerateInput``, ``ChainCollapse``, ``NotAFactor``

Backends: term loops run compiled when the optional extension built,
pure-Python otherwise (``ORBITA_PURE=1`` forces pure); rationals are
gmpy2-backed when available (``ORBITA_NO_GMPY=1`` forces stdlib
fractions).  ``BACKEND`` and ``RATIONAL_BACKEND`` report the selection.
"""

from .backend import BACKEND, Q, RATIONAL_BACKEND, as_fraction
from .errors import ChainCollapse, DegenerateInput, NotAFactor, PolyKernelError
from .euclid import euclidean_last_linear
from .mpoly import MPoly, RatPoly
from .resultant import sylvester_resultant
from .roots import (
    RootInterval,
    isolate_real_roots,
    refine_root,
    strip_known_factors,
    sturm_chain,
)

Rat = Q

__all__ = [
    "BACKEND",
    "RATIONAL_BACKEND",
    "Q",
    "Rat",
    "as_fraction",
    "MPoly",
    "RatPoly",
    "RootInterval",
    "mpoly_arith",
    "mpoly_partial",
    "sylvester_resultant",
    "euclidean_last_linear",
    "strip_known_factors",
    "isolate_real_roots",
    "refine_root",
    "sturm_chain",
    "PolyKernelError",
    "DegenerateInput",
    "ChainCollapse",
    "NotAFactor",
]


def mpoly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    """Combine two polynomials: ``op`` is '+', '-' or '*'."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    raise DegenerateInput(f"unknown operation {op!r}")


def mpoly_partial(p: MPoly, var: str) -> MPoly:
    """Partial derivative of ``p`` with respect to ``var``."""
    return p.partial(var)
