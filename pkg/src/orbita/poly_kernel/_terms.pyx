# cython: language_level=3
"""Compiled term-arithmetic hot loops.

Twin of ``_terms_py``; same functions, same semantics.  Coefficients stay
Python objects (exact big ints / rationals) — the win is loop and dispatch
overhead, which dominates sparse polynomial arithmetic at our term counts.
"""

BACKEND = "compiled"


# ---------------------------------------------------------------- sparse ---


def terms_add(dict a, dict b):
    """Sum of two sparse term dicts."""
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def terms_sub(dict a, dict b):
    """Difference of two sparse term dicts."""
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def terms_neg(dict a):
    """Negation of a sparse term dict."""
    cdef dict out = {}
    for k, c in a.items():
        out[k] = -c
    return out


def terms_mul(dict a, dict b):
    """Product of two sparse term dicts (exponent keys add)."""
    cdef dict out = {}
    cdef dict x
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def terms_scale(dict a, c):
    """Sparse term dict times a nonzero scalar."""
    cdef dict out = {}
    for k, v in a.items():
        out[k] = v * c
    return out


# ----------------------------------------------------------------- dense ---


def u_trim(list a):
    """Drop trailing zeros in place; return the list."""
    while a and not a[-1]:
        a.pop()
    return a


def u_add(list a, list b):
    """Sum of two dense coefficient lists."""
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return u_trim(out)


def u_sub(list a, list b):
    """Difference of two dense coefficient lists."""
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef Py_ssize_t i
    cdef list out = list(a) + [0] * (n - len(a))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return u_trim(out)


def u_neg(list a):
    """Negation of a dense coefficient list."""
    return [-c for c in a]


def u_mul(list a, list b):
    """Product of two dense coefficient lists."""
    cdef Py_ssize_t i, j
    if not a or not b:
        return []
    cdef list out = [0] * (len(a) + len(b) - 1)
    if len(a) > len(b):
        a, b = b, a
    for i in range(len(a)):
        ca = a[i]
        if not ca:
            continue
        for j in range(len(b)):
            out[i + j] = out[i + j] + ca * b[j]
    return u_trim(out)


def u_scale(list a, c):
    """Dense coefficient list times a scalar (may be zero)."""
    if not c:
        return []
    return [v * c for v in a]


def u_eval(list a, x):
    """Evaluate a dense coefficient list at ``x`` by Horner's rule."""
    acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc
