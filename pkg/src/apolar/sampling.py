"""Seeded random generation of forms and complete intersection tuples.

splitmix64 drives everything: tiny, stable across platforms, and good enough
for rejection sampling over a Zariski-open condition, which succeeds on
essentially every draw.  All sampling is deterministic in the seed.
"""
from __future__ import annotations

from .ci import GradedQuotient
from .linalg import MatrixQ, determinant
from .poly import FormTuple, Polynomial, monomial_basis

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator (Steele-Lea-Vigna constants)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Unbiased uniform integer in [0, m), by rejection."""
        if m <= 0:
            raise ValueError("need a positive range")
        limit = (1 << 64) // m * m
        while True:
            u = self.next_u64()
            if u < limit:
                return u % m

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)


class SamplingError(RuntimeError):
    """Rejection sampling exhausted its attempt budget."""


def random_form(nvars: int, degree: int, stream: SplitMix64, coeff_bound: int) -> Polynomial:
    """Form with integer coefficients uniform in [-coeff_bound, coeff_bound]."""
    terms = {}
    for mono in monomial_basis(nvars, degree):
        c = stream.randint(-coeff_bound, coeff_bound)
        if c:
            terms[mono] = c
    return Polynomial(nvars, terms)


def random_ci_tuple(
    n: int, d: int, seed: int, coeff_bound: int = 5, max_attempts: int = 64
) -> FormTuple:
    """Rejection-sample a complete intersection tuple, deterministically.

    Every attempt draws all n coefficient vectors before testing, so the
    stream position, and hence the result, depends only on the seed.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    stream = SplitMix64(seed)
    for _ in range(max_attempts):
        forms = [random_form(n, d, stream, coeff_bound) for _ in range(n)]
        if any(f.is_zero for f in forms):
            continue
        candidate = FormTuple(n, d, tuple(forms))
        if GradedQuotient(candidate).is_complete_intersection():
            return candidate
    raise SamplingError(
        f"no complete intersection in {max_attempts} attempts for n={n} d={d} "
        f"coeff_bound={coeff_bound}; raise the bound or the attempt cap"
    )


def random_invertible_matrix(n: int, stream: SplitMix64, coeff_bound: int = 3) -> MatrixQ:
    """Integer matrix with nonzero determinant, entries in [-bound, bound]."""
    while True:
        rows = [[stream.randint(-coeff_bound, coeff_bound) for _ in range(n)] for _ in range(n)]
        if determinant(rows):
            return MatrixQ.from_rows(rows)
