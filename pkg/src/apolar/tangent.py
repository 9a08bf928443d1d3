"""Tangent-space dimension counts and the relation space of form products.

For a form F of degree n(d-1) whose degree-d annihilator piece is a complete
intersection, the tangent space to the catalecticant rank locus has dimension

    dim k[y]_{n(d-1)} - dim( I_d * I_{n(d-1)-d} ),

and the expected value is N = K n - n^2 + 1 with K = C(d+n-1, n-1).  The
relation space R collects the linear relations among the shifted pairwise
products of a tuple's forms; its dimension admits both a brute-force kernel
computation and a closed alternating-sum formula, and the two are compared as
independent routes (the brute force is always full exact elimination).
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .apolarity import annihilator_polynomials, stratify
from .ci import DegenerateTupleError, GradedQuotient, _primitive_int_terms
from .combinat import binom, dim_forms
from .linalg import _triangularize, span_dim
from .poly import FormTuple, Polynomial, monomial_basis, monomial_index

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = int


@dataclass(frozen=True)
class TangentReport:
    """Dimension counts for one form; dim_R fields stay None until a suite
    fills them (they live on the tuple, not the form)."""

    n: int
    d: int
    dim_ambient: int
    dim_product: int
    tangent_dim: int
    expected_N: int
    dim_R_bruteforce: int | None = None
    dim_R_formula: int | None = None

    def with_relations(self, brute: int, formula: int) -> "TangentReport":
        return replace(self, dim_R_bruteforce=brute, dim_R_formula=formula)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "dim_ambient": self.dim_ambient,
            "dim_product": self.dim_product,
            "tangent_dim": self.tangent_dim,
            "expected_N": self.expected_N,
            "dim_R_bruteforce": self.dim_R_bruteforce,
            "dim_R_formula": self.dim_R_formula,
        }


def expected_N(n: int, d: int) -> int:
    """N = Kn - n^2 + 1, asserted equal to its alternating-sum expansion."""
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    value = dim_forms(n, d) * n - n * n + 1
    assert _tangent_alternating_sum(n, d) == value, "alternating sum disagrees with N"
    return value


def _tangent_alternating_sum(n: int, d: int) -> int:
    """Sum of (-1)^{m-1} (m-1) C(n+1,m) C(nd-md-1, n-1) over the m-band."""
    total = 0
    for m in range(n * (d - 1) // d + 1):
        term = (m - 1) * binom(n + 1, m) * binom(n * d - m * d - 1, n - 1)
        total += -term if m % 2 == 0 else term
    return total


def product_space_dim(us: Sequence[Polynomial], vs: Sequence[Polynomial]) -> int:
    """Dimension of span{u*v} for homogeneous families u in us, v in vs."""
    if not us or not vs:
        return 0
    nvars = us[0].nvars
    deg_u = us[0].homogeneous_degree()
    deg_v = vs[0].homogeneous_degree()
    for u in us:
        if u.nvars != nvars or u.homogeneous_degree() != deg_u:
            raise ValueError("first family is not homogeneous of one degree")
    for v in vs:
        if v.nvars != nvars or v.homogeneous_degree() != deg_v:
            raise ValueError("second family is not homogeneous of one degree")
    total = deg_u + deg_v
    vectors = [(u * v).coefficient_vector(total) for u in us for v in vs]
    return span_dim(vectors)


def tangent_dim(f: Polynomial) -> TangentReport:
    """Tangent dimension report for a form whose annihilator is a complete
    intersection; n and d are read off the form itself."""
    n = f.nvars
    if f.is_zero:
        raise ValueError("zero input")
    s = f.homogeneous_degree()
    if s % n:
        raise ValueError("form degree is not a multiple of the variable count")
    d = s // n + 1
    if d < 2:
        raise ValueError("need degree at least n")
    report = stratify(f, n, d)
    if not report.in_URes:
        raise DegenerateTupleError("form does not lie in the complete intersection locus")
    gens = annihilator_polynomials(f, d)
    assert len(gens) == n
    upper = annihilator_polynomials(f, s - d)
    dim_ambient = dim_forms(n, s)
    dim_product = product_space_dim(gens, upper)
    return TangentReport(
        n=n,
        d=d,
        dim_ambient=dim_ambient,
        dim_product=dim_product,
        tangent_dim=dim_ambient - dim_product,
        expected_N=expected_N(n, d),
    )


def _shift_rows(int_terms: dict, n: int, shift_degree: int, col) -> list[list[int]]:
    """Rows m * g over all degree-`shift_degree` monomials m, in grlex order."""
    rows = []
    for m in monomial_basis(n, shift_degree):
        row = [0] * len(col)
        for b, c in int_terms.items():
            row[col[tuple(x + y for x, y in zip(m, b))]] = c
        rows.append(row)
    return rows


def relation_space_dim_bruteforce(f: FormTuple) -> int:
    """Kernel dimension of (a_ij) -> sum a_ij f_i f_j, by full exact
    elimination (deliberately no modular shortcut: this is the independent
    route against relation_space_dim_formula)."""
    n, d = f.var_count, f.degree
    socle = f.socle_degree
    shift = socle - 2 * d
    if shift < 0:
        raise ValueError("need n(d-1) >= 2d")
    if not GradedQuotient(f).is_complete_intersection():
        raise DegenerateTupleError("tuple is not a complete intersection")
    col = monomial_index(n, socle)
    rows: list[list] = []
    for i in range(n):
        for j in range(i, n):
            prod = _primitive_int_terms(f.forms[i] * f.forms[j])
            rows.extend(_shift_rows(prod, n, shift, col))
    pivots = _triangularize([[mpz(v) for v in r] for r in rows], len(col))
    return len(rows) - len(pivots)


def relation_space_dim_formula(n: int, d: int) -> int:
    """Closed form for dim R: the m >= 3 band of the alternating sum."""
    if n < 3 or (n == 3 and d < 3):
        raise ValueError("need n >= 3, and d >= 3 when n = 3")
    if d < 2:
        raise ValueError("need d >= 2")
    total = 0
    for m in range(3, n * (d - 1) // d + 1):
        term = (m - 1) * binom(n + 1, m) * binom(n * (d - 1) - m * d + n - 1, n - 1)
        total += term if m % 2 else -term
    return total


def koszul_kernel_check(f: FormTuple, rho: int) -> bool:
    """Whether the syzygies of (h_1..h_n) -> sum h_i f_i in degree rho are
    exactly the Koszul ones m (f_j e_i - f_i e_j)."""
    n, d = f.var_count, f.degree
    if rho < d:
        raise ValueError("need rho >= d")
    if not GradedQuotient(f).is_complete_intersection():
        raise DegenerateTupleError("tuple is not a complete intersection")
    ints = [_primitive_int_terms(fi) for fi in f.forms]
    col_hi = monomial_index(n, rho + d)
    block = dim_forms(n, rho)
    phi_rows: list[list] = []
    for terms in ints:
        phi_rows.extend(_shift_rows(terms, n, rho, col_hi))
    pivots = _triangularize([[mpz(v) for v in r] for r in phi_rows], len(col_hi))
    kernel_dim = len(phi_rows) - len(pivots)

    col_lo = monomial_index(n, rho)
    koszul_rows = []
    for i in range(n):
        for j in range(i + 1, n):
            rows_j = _shift_rows(ints[j], n, rho - d, col_lo)
            rows_i = _shift_rows(ints[i], n, rho - d, col_lo)
            for vec_j, vec_i in zip(rows_j, rows_i):
                full = [0] * (n * block)
                full[i * block : (i + 1) * block] = vec_j
                full[j * block : (j + 1) * block] = [-v for v in vec_i]
                koszul_rows.append(full)
    koszul_dim = span_dim(koszul_rows) if koszul_rows else 0
    return kernel_dim == koszul_dim
