"""Exact sparse multivariate and dense univariate rational polynomials.

``MPoly`` stores terms as a dict mapping a packed integer exponent vector
to a nonzero exact coefficient (int, ``fractions.Fraction`` or gmpy2
rational).  Each variable owns 16 bits of the key, first variable in the
highest bits, so comparing packed keys as integers is lexicographic order
on exponent vectors.  Degrees above 65535 in any one variable are not
representable; the solvers here stay far below that.

``RatPoly`` is the dense univariate companion (coefficient list, lowest
degree first) used by root isolation and by resultant evaluation nodes.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .backend import Q, as_fraction, impl
from .errors import DegenerateInput, NotAFactor

SHIFT = 16
MASK = (1 << SHIFT) - 1


def pack(exps: Sequence[int]) -> int:
    """Pack an exponent tuple into the integer key."""
    key = 0
    for e in exps:
        key = (key << SHIFT) | e
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    """Unpack an integer key into an exponent tuple."""
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & MASK
        key >>= SHIFT
    return tuple(out)


def _is_exact_scalar(c) -> bool:
    return isinstance(c, int) or (
        hasattr(c, "numerator") and hasattr(c, "denominator")
    )


class MPoly:
    """Sparse exact multivariate polynomial over the rationals."""

    __slots__ = ("vars", "terms")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, variables: Sequence[str], terms: Mapping[int, object] | None = None):
        self.vars: tuple[str, ...] = tuple(variables)
        self.terms: dict = dict(terms) if terms else {}

    # -------------------------------------------------------- constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MPoly":
        return cls(variables)

    @classmethod
    def const(cls, c, variables: Sequence[str] = ()) -> "MPoly":
        p = cls(variables)
        if c:
            p.terms[0] = c
        return p

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "MPoly":
        variables = tuple(variables)
        i = variables.index(name)
        p = cls(variables)
        p.terms[1 << (SHIFT * (len(variables) - 1 - i))] = 1
        return p

    @classmethod
    def from_dict(cls, variables: Sequence[str], d: Mapping[Sequence[int], object]) -> "MPoly":
        """Build from ``{exponent tuple: coefficient}``; zeros are dropped."""
        p = cls(variables)
        for exps, c in d.items():
            if c:
                p.terms[pack(exps)] = c
        return p

    # ------------------------------------------------------------ queries

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant(self):
        """The value of a constant polynomial."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and 0 in self.terms:
            return self.terms[0]
        raise DegenerateInput("polynomial is not constant")

    def _var_index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise DegenerateInput(f"unknown variable {var!r} (have {self.vars})") from None

    def _var_shift(self, var: str) -> int:
        return SHIFT * (len(self.vars) - 1 - self._var_index(var))

    def degree(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var not in self.vars:
            return 0
        sh = self._var_shift(var)
        return max((k >> sh) & MASK for k in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        n = self.nvars
        best = 0
        for k in self.terms:
            t = 0
            kk = k
            for _ in range(n):
                t += kk & MASK
                kk >>= SHIFT
            if t > best:
                best = t
        return best

    def active_vars(self) -> tuple[str, ...]:
        """Variables that actually occur with positive exponent."""
        if not self.terms:
            return ()
        n = self.nvars
        seen = [False] * n
        for k in self.terms:
            kk = k
            for i in range(n - 1, -1, -1):
                if kk & MASK:
                    seen[i] = True
                kk >>= SHIFT
        return tuple(v for v, s in zip(self.vars, seen) if s)

    # ---------------------------------------------------------- alignment

    def map_vars(self, variables: Sequence[str]) -> "MPoly":
        """Re-embed into a (super)set of variables, possibly reordered."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        n_old = self.nvars
        out = MPoly(variables)
        if not self.terms:
            return out
        pos = []
        for v in self.vars:
            try:
                pos.append(variables.index(v))
            except ValueError:
                raise DegenerateInput(
                    f"variable {v!r} missing from target variables {variables}"
                ) from None
        n_new = len(variables)
        shifts = [SHIFT * (n_new - 1 - p) for p in pos]
        for k, c in self.terms.items():
            exps = unpack(k, n_old)
            key = 0
            for e, sh in zip(exps, shifts):
                key |= e << sh
            out.terms[key] = c
        return out

    @staticmethod
    def align(a: "MPoly", b: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Bring two polynomials onto a shared variable tuple (union)."""
        if a.vars == b.vars:
            return a, b
        merged = list(a.vars)
        for v in b.vars:
            if v not in merged:
                merged.append(v)
        t = tuple(merged)
        return a.map_vars(t), b.map_vars(t)

    # --------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if _is_exact_scalar(other):
            return MPoly.const(other, self.vars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly.align(self, o)
        return MPoly(a.vars, impl.terms_add(a.terms, b.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly.align(self, o)
        return MPoly(a.vars, impl.terms_sub(a.terms, b.terms))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly.align(o, self)
        return MPoly(a.vars, impl.terms_sub(a.terms, b.terms))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_const() and not isinstance(other, MPoly):
            c = o.constant()
            if not c:
                return MPoly(self.vars)
            return MPoly(self.vars, impl.terms_scale(self.terms, c))
        a, b = MPoly.align(self, o)
        return MPoly(a.vars, impl.terms_mul(a.terms, b.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if other.is_const():
                other = other.constant()
            else:
                return NotImplemented
        if not _is_exact_scalar(other):
            return NotImplemented
        if not other:
            raise DegenerateInput("division by zero")
        return self * (Q(1) / Q(other))

    def __neg__(self):
        return MPoly(self.vars, impl.terms_neg(self.terms))

    def __pow__(self, n: int):
        if n < 0:
            raise DegenerateInput("negative power")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MPoly.align(self, o)
        if len(a.terms) != len(b.terms):
            return False
        for k, c in a.terms.items():
            if k not in b.terms or b.terms[k] != c:
                return False
        return True

    # ------------------------------------------------------------ calculus

    def partial(self, var: str) -> "MPoly":
        """Partial derivative."""
        if var not in self.vars:
            return MPoly(self.vars)
        sh = self._var_shift(var)
        step = 1 << sh
        out = MPoly(self.vars)
        for k, c in self.terms.items():
            e = (k >> sh) & MASK
            if e:
                out.terms[k - step] = c * e
        return out

    # ------------------------------------------------------- substitution

    def subs(self, var: str, value) -> "MPoly":
        """Substitute an exact rational value for one variable."""
        if var not in self.vars:
            return self
        sh = self._var_shift(var)
        step = MASK << sh
        # group by exponent of var, then Horner over the groups
        groups: dict[int, dict] = {}
        for k, c in self.terms.items():
            e = (k >> sh) & MASK
            groups.setdefault(e, {})[k & ~step] = c
        acc: dict = {}
        for e in range(max(groups), -1, -1) if groups else []:
            if acc:
                acc = impl.terms_scale(acc, value) if value else {}
            g = groups.get(e)
            if g:
                acc = impl.terms_add(acc, g)
        return MPoly(self.vars, acc)

    def eval_exact(self, assignment: Mapping[str, object]):
        """Fully evaluate with exact rationals; returns an exact number."""
        p = self
        for v in self.vars:
            if v in assignment:
                p = p.subs(v, Q(assignment[v]) if isinstance(assignment[v], float) else assignment[v])
        return p.constant()

    def eval_float(self, assignment: Mapping[str, float]) -> float:
        """Evaluate at floats, exactly, then round once at the end.

        Robust against coefficients far outside float range: the floats are
        converted to exact rationals, the evaluation is exact, and only the
        final value is rounded.
        """
        exact = {v: Q(x) for v, x in assignment.items()}
        return float(as_fraction(self.eval_exact(exact)))

    def coeffs_in(self, var: str) -> list["MPoly"]:
        """Dense coefficient list with respect to one variable, lowest first.

        Each coefficient keeps the full variable tuple (with ``var`` absent
        from its support).  Empty list for the zero polynomial.
        """
        if not self.terms:
            return []
        sh = self._var_shift(var)
        step = MASK << sh
        deg = self.degree(var)
        out = [MPoly(self.vars) for _ in range(deg + 1)]
        for k, c in self.terms.items():
            e = (k >> sh) & MASK
            out[e].terms[k & ~step] = c
        return out

    # ----------------------------------------------------- exact division

    def _lead_key(self) -> int:
        return max(self.terms)

    def divexact(self, divisor: "MPoly") -> "MPoly":
        """Exact multivariate division; raises ``NotAFactor`` otherwise."""
        if divisor.is_zero():
            raise DegenerateInput("division by zero polynomial")
        a, b = MPoly.align(self, divisor)
        if a.is_zero():
            return MPoly(a.vars)
        n = len(a.vars)
        rem = dict(a.terms)
        bk = b._lead_key()
        bc = b.terms[bk]
        bexp = unpack(bk, n)
        quot: dict = {}
        bt = b.terms
        while rem:
            rk = max(rem)
            rexp = unpack(rk, n)
            if any(re < be for re, be in zip(rexp, bexp)):
                raise NotAFactor("division leaves a nonzero remainder")
            qk = rk - bk
            c = rem[rk]
            qc = c * Q(1) / bc if not isinstance(c, int) or not isinstance(bc, int) or c % bc else c // bc
            quot[qk] = qc
            for k2, c2 in bt.items():
                kk = qk + k2
                s = rem.get(kk)
                if s is None:
                    rem[kk] = -qc * c2
                else:
                    s = s - qc * c2
                    if s:
                        rem[kk] = s
                    else:
                        del rem[kk]
            if rk in rem:
                raise NotAFactor("division leaves a nonzero remainder")
        return MPoly(a.vars, quot)

    # ------------------------------------------------------ denominators

    def clear_denominators(self) -> tuple["MPoly", int]:
        """Return ``(M * self, M)`` with integer coefficients, M a positive int."""
        m = 1
        for c in self.terms.values():
            d = int(c.denominator) if not isinstance(c, int) else 1
            m = m * d // math.gcd(m, d)
        if m == 1:
            out = MPoly(self.vars, {k: int(c) for k, c in self.terms.items()})
            return out, 1
        out = MPoly(self.vars)
        for k, c in self.terms.items():
            num, den = int(c.numerator), int(c.denominator)
            out.terms[k] = num * (m // den)
        return out, m

    def content_int(self) -> int:
        """GCD of all (integer) coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, int(c))
            if g == 1:
                return 1
        return g

    # -------------------------------------------------------------- debug

    def dump(self) -> str:
        """Full, deterministic listing: one term per line, sorted by
        exponent vector."""
        if not self.terms:
            return "0"
        lines = []
        n = self.nvars
        for k in sorted(self.terms, reverse=True):
            exps = unpack(k, n)
            mono = " ".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps)
                if e
            )
            c = self.terms[k]
            lines.append(f"{c} * {mono}" if mono else f"{c}")
        return "\n".join(lines)

    def __repr__(self):
        degs = {v: self.degree(v) for v in self.active_vars()}
        return f"MPoly(vars={self.vars}, terms={len(self.terms)}, degrees={degs})"

    # ------------------------------------------------------- conversions

    def to_ratpoly(self, var: str | None = None) -> "RatPoly":
        """Convert a (at most) univariate polynomial to dense form."""
        active = self.active_vars()
        if len(active) > 1:
            raise DegenerateInput(f"not univariate: active variables {active}")
        if var is None:
            var = active[0] if active else (self.vars[0] if self.vars else "x")
        if var not in self.vars:
            if active:
                raise DegenerateInput(f"active variable is {active[0]!r}, not {var!r}")
            return RatPoly([self.terms.get(0, 0)] if self.terms else [], var)
        sh = self._var_shift(var)
        deg = self.degree(var)
        if deg < 0:
            return RatPoly([], var)
        coeffs = [0] * (deg + 1)
        for k, c in self.terms.items():
            coeffs[(k >> sh) & MASK] = c
        return RatPoly(coeffs, var)


class RatPoly:
    """Dense exact univariate polynomial, lowest-degree coefficient first."""

    __slots__ = ("coeffs", "var")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, coeffs: Iterable[object] = (), var: str = "x"):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.coeffs: list = c
        self.var = var

    # ------------------------------------------------------------ queries

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if _is_exact_scalar(other):
            if not other:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    # --------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "RatPoly | None":
        if isinstance(other, RatPoly):
            return other
        if _is_exact_scalar(other):
            return RatPoly([other], self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatPoly(impl.u_add(self.coeffs, o.coeffs), self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatPoly(impl.u_sub(self.coeffs, o.coeffs), self.var)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatPoly(impl.u_sub(o.coeffs, self.coeffs), self.var)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not isinstance(other, RatPoly):
            return RatPoly(impl.u_scale(self.coeffs, other), self.var)
        return RatPoly(impl.u_mul(self.coeffs, o.coeffs), self.var)

    __rmul__ = __mul__

    def __neg__(self):
        return RatPoly(impl.u_neg(self.coeffs), self.var)

    def derivative(self) -> "RatPoly":
        return RatPoly(
            [c * i for i, c in enumerate(self.coeffs)][1:], self.var
        )

    def div_rem(self, divisor: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Polynomial long division over the rationals."""
        if divisor.is_zero():
            raise DegenerateInput("division by zero polynomial")
        num = list(self.coeffs)
        dc = divisor.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        inv = Q(1) / Q(lead) if not isinstance(lead, int) or abs(lead) != 1 else None
        qd = len(num) - 1 - dd
        if qd < 0:
            return RatPoly([], self.var), RatPoly(num, self.var)
        quot = [0] * (qd + 1)
        for i in range(qd, -1, -1):
            top = num[i + dd]
            if not top:
                continue
            q = top * inv if inv is not None else (top if lead == 1 else -top)
            quot[i] = q
            for j, c in enumerate(dc):
                num[i + j] = num[i + j] - q * c
        return RatPoly(quot, self.var), RatPoly(num[:dd], self.var)

    def divexact(self, divisor: "RatPoly") -> "RatPoly":
        quot, rem = self.div_rem(divisor)
        if not rem.is_zero():
            raise NotAFactor("division leaves a nonzero remainder")
        return quot

    # -------------------------------------------------------- evaluation

    def eval_q(self, x):
        """Exact evaluation at a rational point."""
        return impl.u_eval(self.coeffs, x)

    def eval_float(self, x: float) -> float:
        """Evaluate at a float, exactly, rounding once at the end."""
        return float(as_fraction(Q(impl.u_eval(self.coeffs, Q(x)))))

    # ------------------------------------------------------- conversions

    def to_int_coeffs(self) -> tuple[list[int], int]:
        """Clear denominators: ``(coeffs of M * self as ints, M)``."""
        m = 1
        for c in self.coeffs:
            d = int(c.denominator) if not isinstance(c, int) else 1
            m = m * d // math.gcd(m, d)
        out = []
        for c in self.coeffs:
            if isinstance(c, int):
                out.append(c * m)
            else:
                num, den = int(c.numerator), int(c.denominator)
                out.append(num * (m // den))
        return out, m

    def to_mpoly(self, variables: Sequence[str] | None = None) -> MPoly:
        variables = tuple(variables) if variables is not None else (self.var,)
        p = MPoly(variables)
        sh = SHIFT * (len(variables) - 1 - variables.index(self.var))
        for e, c in enumerate(self.coeffs):
            if c:
                p.terms[e << sh] = c
        return p

    def __repr__(self):
        return f"RatPoly({self.var}, deg={self.degree()})"
