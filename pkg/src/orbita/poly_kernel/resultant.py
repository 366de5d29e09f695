"""Sylvester resultants of exact multivariate polynomials.

``sylvester_resultant(p, q, var)`` eliminates ``var`` and returns the
resultant as a polynomial in the remaining variables, exactly equal to the
determinant of the Sylvester matrix of ``p`` and ``q`` (p's coefficients
occupying the top rows).

The determinant is never expanded naively.  The strategy is picked from
the shape of the inputs, and every path computes the same exact value:

- degree 1 in ``var`` (either argument): evaluation closed form
  ``Res(Av+C, G) = sum_j G_j (-C)^j A^(g-j)``, with the sign flip
  ``(-1)^(deg p * deg q)`` when the linear argument is the second;
- degree 2 in ``var`` (either argument): closed form through the
  pseudo-remainder of the other polynomial by the quadratic, with a
  dedicated even/odd split when the quadratic has no middle term;
- otherwise, coefficients constant: integer Bareiss elimination;
- one remaining active variable: Bareiss over dense integer univariate
  entries;
- two or more remaining active variables: evaluate one variable at small
  integer nodes (skipping nodes that drop either leading coefficient),
  recurse per node, and reconstruct by exact Lagrange interpolation, with
  one spare node verifying the reconstruction.

Rational coefficients are cleared up front and the exact scale restored at
the end via ``Res(c*P, Q) = c**deg(Q) * Res(P, Q)``.
"""

from __future__ import annotations

from .backend import Q
from .dense import bareiss_det, u_trim
from .errors import DegenerateInput
from .mpoly import MPoly

__all__ = ["sylvester_resultant"]


def sylvester_resultant(p: MPoly, q: MPoly, var: str) -> MPoly:
    """Exact resultant of ``p`` and ``q`` with respect to ``var``."""
    if p.is_zero() or q.is_zero():
        raise DegenerateInput("resultant of a zero polynomial")
    p, q = MPoly.align(p, q)
    if var not in p.vars:
        raise DegenerateInput(f"unknown variable {var!r}")
    dp, dq = p.degree(var), q.degree(var)
    if dp < 1 or dq < 1:
        raise DegenerateInput(
            f"both inputs must have positive degree in {var!r} "
            f"(got {dp} and {dq})"
        )

    p_int, mp = p.clear_denominators()
    q_int, mq = q.clear_denominators()
    res = _resultant_int(p_int, q_int, var, dp, dq)
    scale = Q(1, mp**dq * mq**dp)
    if scale != 1:
        res = res * scale
    return res


def _resultant_int(p: MPoly, q: MPoly, var: str, dp: int, dq: int) -> MPoly:
    """Dispatch on shape; integer-coefficient inputs."""
    if dp == 1:
        return _res_linear(p, q, var, flip=False)
    if dq == 1:
        return _res_linear(q, p, var, flip=(dp * dq) % 2 == 1)
    if dp == 2:
        return _res_quadratic(p, q, var)
    if dq == 2:
        return _res_quadratic(q, p, var)

    pc = [c for c in p.coeffs_in(var)]
    qc = [c for c in q.coeffs_in(var)]
    active: list[str] = []
    for c in pc + qc:
        for v in c.active_vars():
            if v not in active:
                active.append(v)
    active = [v for v in p.vars if v in active]  # deterministic order

    if len(active) <= 1:
        return _res_bareiss_univariate(pc, qc, p.vars, active[0] if active else None)
    return _res_interpolated(pc, qc, p.vars, active)


# ------------------------------------------------------------- linear ---


def _res_linear(lin: MPoly, g: MPoly, var: str, flip: bool) -> MPoly:
    """``Res(Av+C, G)`` by evaluation at the root ``-C/A``, denominator
    cleared: ``sum_j G_j (-C)^j A^(g-j)`` (Horner form)."""
    a, c = _two_coeffs(lin, var)
    gc = g.coeffs_in(var)
    neg_c = -c
    acc = gc[-1]
    for j in range(len(gc) - 2, -1, -1):
        acc = acc * neg_c + gc[j] * _pow(a, len(gc) - 1 - j)
    if flip:
        acc = -acc
    return acc


def _two_coeffs(lin: MPoly, var: str) -> tuple[MPoly, MPoly]:
    cs = lin.coeffs_in(var)
    return cs[1], cs[0]


def _pow(base: MPoly, n: int) -> MPoly:
    return base**n


# ---------------------------------------------------------- quadratic ---


def _res_quadratic(quad: MPoly, g: MPoly, var: str) -> MPoly:
    """``Res(Av^2+Bv+C, G)``; no sign flip is ever needed because the
    quadratic contributes an even factor to ``(-1)^(deg p * deg q)``."""
    cs = quad.coeffs_in(var)
    a, b, c = cs[2], cs[1], cs[0]
    gc = g.coeffs_in(var)
    gdeg = len(gc) - 1
    if b.is_zero():
        return _res_quad_binomial(a, c, gc, gdeg)
    return _res_quad_general(a, b, c, gc, gdeg)


def _res_quad_binomial(a: MPoly, c: MPoly, gc: list[MPoly], gdeg: int) -> MPoly:
    """Middle term absent: split G by parity of the exponent.

    With ``u = v^2`` and ``G = E(u) + v*O(u)``,
    ``Res = A*Ehat^2 + C*Ohat^2`` (odd ``deg G``) or
    ``Res = Ehat^2 + C*A*Ohat^2`` (even ``deg G``), where ``Ehat`` and
    ``Ohat`` are the denominator-cleared values of ``E`` and ``O`` at
    ``u = -C/A``.
    """
    e = gc[0::2]
    o = gc[1::2]
    h = (gdeg - 1) // 2 if gdeg % 2 else gdeg // 2
    neg_c = -c
    ehat = _horner_cleared(e, neg_c, a, h)
    ohat = _horner_cleared(o, neg_c, a, h if gdeg % 2 else h - 1)
    if gdeg % 2:
        return a * ehat * ehat + c * ohat * ohat
    return ehat * ehat + c * a * ohat * ohat


def _horner_cleared(coeffs: list[MPoly], value: MPoly, denom: MPoly, top: int) -> MPoly:
    """``denom^top * P(value/denom)`` for ``P`` given by ``coeffs``
    (lowest first, length <= top+1), all polynomial arithmetic."""
    if not coeffs:
        return MPoly(value.vars)
    acc = MPoly(value.vars)
    dp = MPoly.const(1, value.vars)
    dpow = [dp]
    for _ in range(top):
        dp = dp * denom
        dpow.append(dp)
    for j in range(len(coeffs) - 1, -1, -1):
        acc = acc * value + coeffs[j] * dpow[top - j]
    return acc


def _res_quad_general(a: MPoly, b: MPoly, c: MPoly, gc: list[MPoly], gdeg: int) -> MPoly:
    """Pseudo-divide G by the quadratic, then evaluate the product of G at
    the two roots through the symmetric functions ``r1+r2 = -B/A``,
    ``r1*r2 = C/A``:

    ``A^k G = Q*(Av^2+Bv+C) + R1 v + R0``  implies
    ``Res = A^(g-2k-1) * (C R1^2 - B R1 R0 + A R0^2)``
    (a division when the exponent is negative; always exact).
    """
    r = list(gc)
    k = 0
    while len(r) - 1 >= 2:
        top = r[-1]
        dr = len(r) - 1
        new = [a * cf for cf in r[:-1]]
        new[dr - 1] = new[dr - 1] - top * b
        new[dr - 2] = new[dr - 2] - top * c
        k += 1
        while new and new[-1].is_zero():
            new.pop()
        r = new
        if not r:
            break
    r0 = r[0] if len(r) > 0 else MPoly(a.vars)
    r1 = r[1] if len(r) > 1 else MPoly(a.vars)
    core = c * r1 * r1 - b * r1 * r0 + a * r0 * r0
    exp = gdeg - 2 * k - 1
    if exp >= 0:
        return core * _pow(a, exp)
    return core.divexact(_pow(a, -exp))


# ----------------------------------------------- univariate coefficients ---


def _sylvester_entries_upoly(
    pc: list[list[int]], qc: list[list[int]]
) -> list[list[list[int]]]:
    """Sylvester matrix with dense integer univariate entries.

    ``pc``/``qc`` are the coefficient lists of p and q in the eliminated
    variable (lowest first); p's coefficients fill the top ``deg q`` rows.
    """
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    rows: list[list[list[int]]] = []
    for i in range(n):
        row = [[] for _ in range(size)]
        for j, cf in enumerate(reversed(pc)):
            row[i + j] = list(cf)
        rows.append(row)
    for i in range(m):
        row = [[] for _ in range(size)]
        for j, cf in enumerate(reversed(qc)):
            row[i + j] = list(cf)
        rows.append(row)
    return rows


def _res_bareiss_univariate(
    pc: list[MPoly], qc: list[MPoly], variables: tuple[str, ...], var1: str | None
) -> MPoly:
    """At most one active variable left: direct Bareiss elimination."""
    if var1 is None:
        pd = [[int(c.constant())] if not c.is_zero() else [] for c in pc]
        qd = [[int(c.constant())] if not c.is_zero() else [] for c in qc]
        det = bareiss_det(_sylvester_entries_upoly(pd, qd))
        out = MPoly(variables)
        if det:
            out.terms[0] = det[0]
        return out
    pd = [_dense_in(c, var1) for c in pc]
    qd = [_dense_in(c, var1) for c in qc]
    det = bareiss_det(_sylvester_entries_upoly(pd, qd))
    out = MPoly(variables)
    sh = _shift_of(variables, var1)
    for e, cf in enumerate(det):
        if cf:
            out.terms[e << sh] = cf
    return out


def _dense_in(c: MPoly, var: str) -> list[int]:
    sh = _shift_of(c.vars, var)
    deg = c.degree(var)
    if deg < 0:
        return []
    out = [0] * (deg + 1)
    for k, cf in c.terms.items():
        out[(k >> sh) & 0xFFFF] = int(cf)
    return u_trim(out)


def _shift_of(variables: tuple[str, ...], var: str) -> int:
    return 16 * (len(variables) - 1 - variables.index(var))


# ------------------------------------------------------- interpolation ---


def _row_degree_bound(pc: list[MPoly], qc: list[MPoly], v: str) -> int:
    """Degree bound of the Sylvester determinant in ``v``: each of the
    ``deg q`` p-rows contributes at most ``max_j deg_v(p_j)``, likewise
    for the q-rows."""
    dmax_p = max((c.degree(v) for c in pc), default=0)
    dmax_q = max((c.degree(v) for c in qc), default=0)
    return (len(qc) - 1) * dmax_p + (len(pc) - 1) * dmax_q


def _res_interpolated(
    pc: list[MPoly], qc: list[MPoly], variables: tuple[str, ...], active: list[str]
) -> MPoly:
    """Evaluate/interpolate on the active variable with the largest degree
    bound (fewest leftover degrees per node)."""
    bounds = {v: _row_degree_bound(pc, qc, v) for v in active}
    t = max(active, key=lambda v: (bounds[v], active.index(v) * -1))
    bound = bounds[t]
    lead_p, lead_q = pc[-1], qc[-1]

    nodes: list[int] = []
    values: list[MPoly] = []
    x = 0
    needed = bound + 1
    while len(nodes) < needed + 1:  # one spare node for verification
        for cand in (x, -x) if x else (0,):
            if len(nodes) >= needed + 1:
                break
            if lead_p.subs(t, cand).is_zero() or lead_q.subs(t, cand).is_zero():
                continue
            pc_t = [c.subs(t, cand) for c in pc]
            qc_t = [c.subs(t, cand) for c in qc]
            rem_active = [v for v in active if v != t]
            rem_active = [
                v
                for v in rem_active
                if any(c.degree(v) > 0 for c in pc_t + qc_t)
            ]
            if len(rem_active) <= 1:
                val = _res_bareiss_univariate(
                    pc_t, qc_t, variables, rem_active[0] if rem_active else None
                )
            else:
                val = _res_interpolated(pc_t, qc_t, variables, rem_active)
            nodes.append(cand)
            values.append(val)
        x += 1

    spare_node, spare_value = nodes.pop(), values.pop()
    result = _lagrange(nodes, values, t, variables)
    if result.subs(t, spare_node) != spare_value:
        raise DegenerateInput(
            "interpolation self-check failed (degree bound violated)"
        )
    return result


def _lagrange(
    nodes: list[int], values: list[MPoly], t: str, variables: tuple[str, ...]
) -> MPoly:
    """Exact Lagrange interpolation with polynomial values."""
    tv = MPoly.variable(t, variables)
    total = MPoly(variables)
    for i, (xi, vi) in enumerate(zip(nodes, values)):
        if vi.is_zero():
            continue
        num = MPoly.const(1, variables)
        den = 1
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            num = num * (tv - MPoly.const(xj, variables))
            den *= xi - xj
        total = total + vi * num * Q(1, den)
    return total
