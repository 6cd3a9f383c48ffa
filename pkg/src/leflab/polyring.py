"""Graded pieces of a polynomial ring and multiplication-map matrices.

Only linear algebra on single graded pieces is needed: a fixed monomial
order, coordinates of powers of linear forms, and the matrix of
"multiply by f" from one graded piece to another.  No division, GCDs or
Groebner machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .modp import DenseMatrix, PrimeField


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


@dataclass(frozen=True)
class LinearFormRep:
    """A linear form by its coefficient tuple; at least one entry nonzero."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.coeffs):
            raise ValueError("linear form must be nonzero")

    @property
    def num_vars(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class GradedBasis:
    """All monomials of one degree, in graded-lexicographic order.

    The order is fixed (first variable largest) so that coordinate vectors
    and matrices are reproducible across runs.
    """

    num_vars: int
    degree: int
    monomials: tuple[Monomial, ...]
    _index: dict = field(compare=False, repr=False, hash=False)

    def __len__(self) -> int:
        return len(self.monomials)

    def index_of(self, exponents: tuple[int, ...]) -> int:
        return self._index[exponents]


def _exponent_tuples(num_vars: int, degree: int):
    if num_vars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in _exponent_tuples(num_vars - 1, degree - e):
            yield (e,) + rest


@lru_cache(maxsize=None)
def monomial_basis(num_vars: int, degree: int) -> GradedBasis:
    """Basis of the degree-`degree` piece; size C(degree+num_vars-1, num_vars-1)."""
    if num_vars < 1 or degree < 0:
        raise ValueError("need num_vars >= 1 and degree >= 0")
    monos = tuple(Monomial(e) for e in _exponent_tuples(num_vars, degree))
    index = {m.exponents: i for i, m in enumerate(monos)}
    assert len(monos) == comb(degree + num_vars - 1, num_vars - 1)
    return GradedBasis(num_vars, degree, monos, index)


def graded_dim(num_vars: int, degree: int) -> int:
    if degree < 0:
        return 0
    return comb(degree + num_vars - 1, num_vars - 1)


def multiply_by_linear_form(
    field_: PrimeField, vec: np.ndarray, degree: int, form: LinearFormRep
) -> np.ndarray:
    """Coordinates of (linear form) * (element of the degree-`degree` piece)."""
    r = form.num_vars
    src = monomial_basis(r, degree)
    dst = monomial_basis(r, degree + 1)
    out = np.zeros(len(dst), dtype=np.int64)
    for i, mono in enumerate(src.monomials):
        v = int(vec[i])
        if v == 0:
            continue
        for var, c in enumerate(form.coeffs):
            if c == 0:
                continue
            e = list(mono.exponents)
            e[var] += 1
            j = dst.index_of(tuple(e))
            out[j] = (out[j] + v * c) % field_.modulus
    return out


def power_coords(field_: PrimeField, form: LinearFormRep, a: int) -> np.ndarray:
    """Coordinates of form**a, built by repeated multiplication.

    Iterating one degree at a time keeps every intermediate inside field
    arithmetic; no multinomial coefficients are ever formed.
    """
    if a < 1:
        raise ValueError("power must be >= 1")
    vec = np.array([c % field_.modulus for c in form.coeffs], dtype=np.int64)
    for d in range(1, a):
        vec = multiply_by_linear_form(field_, vec, d, form)
    return vec


def mult_matrix(
    field_: PrimeField,
    num_vars: int,
    f_coords: np.ndarray,
    f_degree: int,
    target_degree: int,
) -> DenseMatrix:
    """Matrix of multiplication by f between graded pieces.

    Columns are indexed by the monomials of degree target_degree - f_degree,
    rows by the monomials of degree target_degree; the column for a monomial
    m holds the coordinates of f*m.
    """
    if target_degree < f_degree:
        raise ValueError("target degree below the degree of f")
    fb = monomial_basis(num_vars, f_degree)
    src = monomial_basis(num_vars, target_degree - f_degree)
    dst = monomial_basis(num_vars, target_degree)
    p = field_.modulus
    out = np.zeros((len(dst), len(src)), dtype=np.int64)
    terms = [
        (fb.monomials[t].exponents, int(f_coords[t]))
        for t in range(len(fb))
        if int(f_coords[t]) % p != 0
    ]
    for col, mono in enumerate(src.monomials):
        me = mono.exponents
        for te, c in terms:
            key = tuple(a + b for a, b in zip(me, te))
            row = dst.index_of(key)
            out[row, col] = (out[row, col] + c) % p
    return DenseMatrix(field_, out)
