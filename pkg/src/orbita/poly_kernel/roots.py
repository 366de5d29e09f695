"""Real-root isolation and refinement for exact univariate polynomials.

Sturm's method throughout: a sign-safe pseudo-remainder chain with
primitive-part reduction, exact integer sign evaluation at rational
points, and bisection until each root sits alone in a half-open rational
interval ``(lo, hi]``.  The square-free part is isolated (so multiple
roots are found once) and each root's multiplicity is recovered from the
gcd layers of the polynomial.

Refinement is exact dyadic bisection on the isolating interval down to
the requested width, followed by a float Newton polish safeguarded by the
bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .backend import Q, q_num_den
from .dense import content, divexact, prem, sign_at, squarefree_part, u_trim
from .errors import DegenerateInput, NotAFactor
from .mpoly import RatPoly

__all__ = [
    "RootInterval",
    "isolate_real_roots",
    "refine_root",
    "strip_known_factors",
    "sturm_chain",
]


@dataclass(frozen=True)
class RootInterval:
    """Half-open rational interval ``(lo, hi]`` isolating one distinct
    real root; ``sign_change_count`` is the Sturm variation drop across
    it (1 for an isolating interval), ``multiplicity`` the root's
    multiplicity in the original polynomial."""

    lo: object
    hi: object
    sign_change_count: int
    multiplicity: int = 1

    def midpoint(self):
        return (Q(self.lo) + Q(self.hi)) / 2

    def width(self):
        return Q(self.hi) - Q(self.lo)


# ---------------------------------------------------------- Sturm chain ---


def sturm_chain(coeffs: list[int]) -> list[list[int]]:
    """Canonical Sturm chain of an integer polynomial.

    Each next element is the negated true remainder of the previous two,
    up to a positive constant: when the pseudo-remainder multiplier
    ``lead**k`` is negative the pseudo-remainder is kept as-is instead of
    negated.  Elements are reduced to primitive parts (positive content),
    which preserves all signs.
    """
    f = u_trim(list(coeffs))
    if not f:
        raise DegenerateInput("zero polynomial has no Sturm chain")
    chain = [f]
    if len(f) == 1:
        return chain
    df = u_trim([c * i for i, c in enumerate(f)][1:])
    g, _ = _primitive_signed(df)
    chain.append(g)
    while True:
        r, lead, k = prem(chain[-2], chain[-1])
        if not r:
            return chain
        if lead > 0 or k % 2 == 0:
            r = [-c for c in r]
        r, _ = _primitive_signed(r)
        chain.append(r)


def _primitive_signed(a: list[int]) -> tuple[list[int], int]:
    """Divide by the positive content (sign preserved)."""
    g = content(a)
    if g <= 1:
        return a, max(g, 1)
    return [c // g for c in a], g


def _variations(chain: list[list[int]], num: int, den: int) -> int:
    """Sign variations of the chain at ``num/den`` (zeros skipped)."""
    count = 0
    prev = 0
    for poly in chain:
        s = sign_at(poly, num, den)
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


# ------------------------------------------------------------ isolation ---


def isolate_real_roots(p: RatPoly, lo=None, hi=None) -> list[RootInterval]:
    """Disjoint rational intervals, one per distinct real root of ``p``
    in ``(lo, hi]``, sorted increasing.

    Default bounds are the Cauchy root bound.  Endpoints that happen to be
    roots are handled exactly: a root at ``lo`` is excluded, a root at
    ``hi`` is returned in a degenerate-tight interval ending exactly at
    ``hi``.
    """
    if p.is_zero():
        raise DegenerateInput("cannot isolate roots of the zero polynomial")
    coeffs, _ = p.to_int_coeffs()
    coeffs = u_trim(coeffs)
    if len(coeffs) == 1:
        return []

    sqf, layer0 = squarefree_part(coeffs)
    layers = _gcd_layers(layer0)

    if lo is None or hi is None:
        bound = _cauchy_bound(coeffs)
        lo = -bound if lo is None else Q(lo)
        hi = bound if hi is None else Q(hi)
    else:
        lo, hi = Q(lo), Q(hi)
    if not lo < hi:
        raise DegenerateInput("empty isolation interval")

    out: list[RootInterval] = []

    # roots exactly at the endpoints: lo is excluded by the half-open
    # interval, hi must be reported; both are deflated out so the Sturm
    # chain below sees only the remaining roots
    if _sign_q(sqf, lo) == 0:
        sqf = _deflate_rational_root(sqf, lo)
    hi_is_root = _sign_q(sqf, hi) == 0
    if hi_is_root:
        sqf = _deflate_rational_root(sqf, hi)

    chain = sturm_chain(sqf)
    interior_hi = hi
    if hi_is_root:
        # reserve a slice (interior_hi, hi] holding no other root, so the
        # appended interval for the hi root stays disjoint
        v_hi = _var_q(chain, hi)
        delta = (hi - lo) / 1024
        while _var_q(chain, hi - delta) != v_hi:
            delta = delta / 2
        interior_hi = hi - delta

    stack = [(lo, interior_hi, _var_q(chain, lo), _var_q(chain, interior_hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n <= 0:
            continue
        if n == 1:
            out.append(RootInterval(a, b, 1, _mult_from_layers(layers, a, b)))
            continue
        mid = _split_point(sqf, a, b)
        vm = _var_q(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))

    if hi_is_root:
        out.append(
            RootInterval(interior_hi, hi, 1, _mult_at_rational(coeffs, hi))
        )

    out.sort(key=lambda iv: Q(iv.lo))
    return out


def _cauchy_bound(coeffs: list[int]) -> object:
    lead = abs(coeffs[-1])
    top = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return Q(1 + (top + lead - 1) // lead)


def _sign_q(coeffs: list[int], x) -> int:
    num, den = q_num_den(Q(x))
    return sign_at(coeffs, num, den)


def _var_q(chain: list[list[int]], x) -> int:
    num, den = q_num_den(Q(x))
    return _variations(chain, num, den)


def _split_point(sqf: list[int], a, b):
    """A point strictly between a and b that is not a root (the midpoint,
    nudged through a fixed sequence of interior fractions if needed)."""
    for num, den in ((1, 2), (1, 3), (2, 5), (3, 7), (5, 11), (7, 13)):
        mid = a + (b - a) * Q(num, den)
        if _sign_q(sqf, mid) != 0:
            return mid
    raise DegenerateInput("could not find a non-root split point")


def _deflate_rational_root(coeffs: list[int], r) -> list[int]:
    """Exact division by (den*x - num) for the rational root r = num/den."""
    num, den = q_num_den(Q(r))
    return divexact(coeffs, [-num, den])


def _gcd_layers(layer0: list[int]) -> list[list[int]]:
    """Successive gcd layers: a root of multiplicity m in p appears in the
    first m-1 layers.  ``layer0`` is gcd(p, p')."""
    layers = []
    g = layer0
    while len(g) > 1:
        layers.append(g)
        g = squarefree_part(g)[1]
    return layers


def _mult_from_layers(layers: list[list[int]], a, b) -> int:
    """Multiplicity of the single root isolated in (a, b]."""
    mult = 1
    for g in layers:
        chain = _layer_chain(tuple(g))
        if _var_q(chain, a) - _var_q(chain, b) > 0:
            mult += 1
        else:
            break
    return mult


@lru_cache(maxsize=64)
def _layer_chain(g: tuple[int, ...]) -> list[list[int]]:
    return sturm_chain(list(g))


def _mult_at_rational(coeffs: list[int], r) -> int:
    """Multiplicity of an exact rational root by repeated deflation."""
    mult = 0
    cur = coeffs
    while _sign_q(cur, r) == 0:
        cur = _deflate_rational_root(cur, r)
        mult += 1
    return mult


# ----------------------------------------------------- known-factor strip ---


def strip_known_factors(
    p: RatPoly, factors: list[tuple[RatPoly, int]]
) -> RatPoly:
    """Divide out each ``(factor, multiplicity)`` exactly.

    Raises ``NotAFactor`` when any claimed factor does not divide the
    running quotient the demanded number of times.
    """
    out = p
    for factor, mult in factors:
        if factor.is_zero() or factor.degree() < 1:
            raise DegenerateInput("factors must have positive degree")
        for _ in range(mult):
            out = out.divexact(factor)
    return out


# ----------------------------------------------------------- refinement ---


@lru_cache(maxsize=32)
def _sqf_cached(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(squarefree_part(list(coeffs))[0])


def refine_root(p: RatPoly, interval: RootInterval, tol: float = 1e-13) -> float:
    """Shrink an isolating interval around its root and return the root
    as a float, accurate to ``tol`` (relative for roots above 1 in size).

    Bisection is exact (integer sign evaluation at rational points) on
    the square-free part, so even roots of high multiplicity and
    polynomials with coefficients far beyond float range refine reliably;
    a safeguarded float Newton polish sharpens the last digits.
    """
    if p.is_zero():
        raise DegenerateInput("cannot refine a root of the zero polynomial")
    coeffs, _ = p.to_int_coeffs()
    sqf = list(_sqf_cached(tuple(u_trim(coeffs))))
    a, b = Q(interval.lo), Q(interval.hi)
    sb = _sign_q(sqf, b)
    if sb == 0:
        return float(b)
    sa = _sign_q(sqf, a)
    if sa == 0:
        # the root is strictly inside; step the left end inward until the
        # sign shows up
        step = (b - a) / 65536
        while sa == 0:
            a = a + step
            sa = _sign_q(sqf, a)
    if sa == sb:
        raise DegenerateInput("interval does not bracket a sign change")

    target = Q(Fraction(tol))
    while b - a > target * _qmax(1, abs(a + b) / 2):
        mid = (a + b) / 2
        sm = _sign_q(sqf, mid)
        if sm == 0:
            return float(mid)
        if sm == sa:
            a = mid
        else:
            b = mid

    root = float((a + b) / 2)
    return _newton_polish(sqf, root, float(a), float(b))


def _qmax(a, b):
    a, b = Q(a), Q(b)
    return a if a >= b else b


def _newton_polish(sqf: list[int], x0: float, lo: float, hi: float) -> float:
    """Two float Newton steps on max-normalized coefficients, kept inside
    the bracket; fall back to the bisection value if they do not help."""
    scale = max(abs(c) for c in sqf)
    fc = [_float_ratio(c, scale) for c in sqf]
    dfc = [c * i for i, c in enumerate(fc)][1:]

    def ev(cs: list[float], x: float) -> float:
        acc = 0.0
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    best = x0
    best_val = abs(ev(fc, x0))
    x = x0
    for _ in range(2):
        d = ev(dfc, x)
        if d == 0.0 or not math.isfinite(d):
            break
        x_new = x - ev(fc, x) / d
        if not (lo <= x_new <= hi) or not math.isfinite(x_new):
            break
        x = x_new
        v = abs(ev(fc, x))
        if v < best_val:
            best, best_val = x, v
    return best


def _float_ratio(num: int, den: int) -> float:
    return float(Fraction(num, den))
