"""Exact combinatorial helpers shared across the package.

Everything here is integer arithmetic; binomials follow the vanishing
convention C(a, b) = 0 for b < 0 or b > a.  Negative upper arguments are
rejected because no caller has a meaning for them.
"""
from __future__ import annotations

import math
from functools import lru_cache


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the vanishing convention."""
    if a < 0:
        raise ValueError(f"binomial upper argument must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def dim_forms(nvars: int, degree: int) -> int:
    """Dimension of the space of homogeneous forms of a given degree.

    Zero for negative degree, which lets callers sum over shifted degrees
    without special-casing.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return 0
    return math.comb(degree + nvars - 1, nvars - 1)


def multinomial(exponents: tuple[int, ...]) -> int:
    """Multinomial coefficient (sum a_i)! / prod(a_i!)."""
    if any(a < 0 for a in exponents):
        raise ValueError("exponents must be nonnegative")
    total = sum(exponents)
    out = math.factorial(total)
    for a in exponents:
        out //= math.factorial(a)
    return out


@lru_cache(maxsize=None)
def ci_hilbert(n: int, d: int) -> tuple[int, ...]:
    """Coefficients of (1 + u + ... + u^{d-1})^n, degrees 0 .. n(d-1).

    This is the Hilbert function of a quotient by a length-n regular
    sequence of degree-d forms in n variables; the entries sum to d^n.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    coeffs = [1]
    block = [1] * d
    for _ in range(n):
        out = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += c * b
        coeffs = out
    assert sum(coeffs) == d**n
    return tuple(coeffs)
