"""Backend selection: compiled vs pure term loops, gmpy2 vs Fraction.

Environment switches (read once at import):

- ``ORBITA_PURE=1``      force the pure-Python term loops even if the
  compiled extension is importable;
- ``ORBITA_NO_GMPY=1``   force ``fractions.Fraction`` coefficients even if
  gmpy2 is importable.

``impl`` is the selected term-loop module; ``Q`` constructs an exact
rational from ints, strings, floats or another rational.
"""

import os
from fractions import Fraction

from . import _terms_py

if os.environ.get("ORBITA_PURE") == "1":
    impl = _terms_py
else:
    try:
        from . import _terms as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _terms_py

BACKEND = impl.BACKEND

if os.environ.get("ORBITA_NO_GMPY") == "1":
    _mpq = None
else:
    try:
        from gmpy2 import mpq as _mpq
    except ImportError:
        _mpq = None

if _mpq is not None:
    RATIONAL_BACKEND = "gmpy2"

    def Q(num=0, den=None):
        """Exact rational; gmpy2-backed."""
        if den is None:
            if isinstance(num, float):
                num = Fraction(num)
            return _mpq(num)
        return _mpq(num, den)

else:
    RATIONAL_BACKEND = "fractions"

    def Q(num=0, den=None):
        """Exact rational; fractions.Fraction-backed."""
        if den is None:
            return Fraction(num)
        return Fraction(num, den)


def q_num_den(q):
    """Numerator and denominator of an exact rational, as Python ints."""
    return int(q.numerator), int(q.denominator)


def as_fraction(q):
    """Convert any supported exact rational to ``fractions.Fraction``."""
    return Fraction(int(q.numerator), int(q.denominator))
