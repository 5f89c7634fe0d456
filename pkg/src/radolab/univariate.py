"""Univariate integer polynomials as coefficient lists, plus an exact
positive-real-root decision via Sturm chains.

A polynomial is a list of ints, lowest power first, with no trailing zeros;
the zero polynomial is the empty list.  All arithmetic is integer-exact, so
the root decision never sees a rounding error.
"""

from __future__ import annotations

from math import gcd


def normalize(coeffs: list[int]) -> list[int]:
    """Strip trailing zero coefficients."""
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return list(coeffs[:n])


def degree(p: list[int]) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def evaluate(p: list[int], x) -> int:
    """Horner evaluation; exact for int or Fraction arguments."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(p)][1:]


def strip_zero_roots(p: list[int]) -> tuple[list[int], int]:
    """Factor p = x^v * q with q(0) != 0; returns (q, v)."""
    v = 0
    while v < len(p) and p[v] == 0:
        v += 1
    return p[v:], v


def content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g or 1


def cauchy_bound(p: list[int]) -> int:
    """Integer B with every real root of p strictly less than B in absolute
    value.  Requires p nonzero and nonconstant."""
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    # 1 + max|c_i|/|c_n|, rounded up to an integer
    return 1 + (m + lead - 1) // lead if m else 1


def _signed_prem(f: list[int], g: list[int]) -> list[int]:
    """Remainder of f by g scaled only by positive constants, so that the
    sign pattern of the Euclidean remainder is preserved.  Coefficients are
    divided by their content to keep growth in check."""
    r = list(f)
    lg = g[-1]
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        lr = r[-1]
        shift = len(r) - 1 - dg
        # |lg| * r - sign(lg) * lr * x^shift * g  kills the leading term
        s = 1 if lg > 0 else -1
        r = [abs(lg) * c for c in r]
        for i, c in enumerate(g):
            r[shift + i] -= s * lr * c
        r = normalize(r)
    c = content(r)
    if c > 1:
        r = [x // c for x in r]
    return r


def sturm_chain(p: list[int]) -> list[list[int]]:
    """Sturm chain of p (each element scaled by a positive constant only,
    which leaves sign variations unchanged)."""
    chain = [list(p), derivative(p)]
    while chain[-1]:
        nxt = [-c for c in _signed_prem(chain[-2], chain[-1])]
        chain.append(normalize(nxt))
    return chain[:-1]


def _sign_variations(values: list[int]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(p: list[int], a: int, b: int) -> int:
    """Number of distinct real roots of p in (a, b]; requires p(a), p(b) != 0.

    Valid for non-square-free p as well: the canonical chain ends at a
    multiple of gcd(p, p') and still counts distinct roots.
    """
    chain = sturm_chain(p)
    va = _sign_variations([evaluate(q, a) for q in chain])
    vb = _sign_variations([evaluate(q, b) for q in chain])
    return va - vb


def has_positive_root(p: list[int]) -> bool:
    """True iff p has a real root in (0, +inf), decided exactly.

    The identically-zero polynomial counts as having a root (every point is
    one).  Roots at 0 do not count.
    """
    p = normalize(p)
    if not p:
        return True
    q, _ = strip_zero_roots(p)
    if len(q) == 1:
        return False
    bound = cauchy_bound(q)
    return count_roots_in(q, 0, bound) > 0
