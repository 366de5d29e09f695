"""Pure-Python term-arithmetic hot loops.

Twin of the optional compiled module ``_terms``; both expose the same
functions and are interchangeable.  Coefficients are exact numbers (int,
``fractions.Fraction`` or ``gmpy2.mpq``/``mpz``) and are only combined with
``+ - *``, so every function is generic over the coefficient type.

Two data layouts are served:

- sparse multivariate: ``dict`` mapping packed integer exponent -> nonzero
  coefficient (packing is the caller's concern);
- dense univariate: ``list`` of coefficients, lowest degree first, with no
  trailing zeros (the zero polynomial is the empty list).
"""

BACKEND = "python"


# ---------------------------------------------------------------- sparse ---


def terms_add(a, b):
    """Sum of two sparse term dicts."""
    out = dict(a)
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


def terms_sub(a, b):
    """Difference of two sparse term dicts."""
    out = dict(a)
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


def terms_neg(a):
    """Negation of a sparse term dict."""
    return {k: -c for k, c in a.items()}


def terms_mul(a, b):
    """Product of two sparse term dicts (exponent keys add)."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def terms_scale(a, c):
    """Sparse term dict times a nonzero scalar."""
    return {k: v * c for k, v in a.items()}


# ----------------------------------------------------------------- dense ---


def u_trim(a):
    """Drop trailing zeros in place; return the list."""
    while a and not a[-1]:
        a.pop()
    return a


def u_add(a, b):
    """Sum of two dense coefficient lists."""
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return u_trim(out)


def u_sub(a, b):
    """Difference of two dense coefficient lists."""
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return u_trim(out)


def u_neg(a):
    """Negation of a dense coefficient list."""
    return [-c for c in a]


def u_mul(a, b):
    """Product of two dense coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if len(a) > len(b):
        a, b = b, a
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return u_trim(out)


def u_scale(a, c):
    """Dense coefficient list times a scalar (may be zero)."""
    if not c:
        return []
    return [v * c for v in a]


def u_eval(a, x):
    """Evaluate a dense coefficient list at ``x`` by Horner's rule."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
