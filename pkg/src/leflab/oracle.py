"""Brute-force ground truth for quotients by powers of general linear forms.

"General" is modeled by random coefficient vectors over a large prime field.
Ranks are semicontinuous: a random sample can only under-shoot the generic
rank, never exceed it, so rank reports take the maximum over several trial
forms and dimension reports are exact with overwhelming probability.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .modp import DEFAULT_PRIME, DenseMatrix, PrimeField, matrix_rank, reduce_rows, row_echelon
from .polyring import LinearFormRep, graded_dim, mult_matrix, power_coords

DEFAULT_TRIALS = 5


class NonArtinianError(ValueError):
    """Raised when an operation needs an artinian quotient (s >= num_vars)."""


class PrimeTooSmallError(ValueError):
    """Raised when the field modulus is too small for the requested degrees."""


@dataclass(frozen=True)
class ExponentSpec:
    """The exponent multiset (a_1 <= ... <= a_s) plus the ambient variable count."""

    num_vars: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 2:
            raise ValueError("need at least two variables")
        if len(self.exponents) == 0:
            raise ValueError("need at least one exponent")
        if any(a < 1 for a in self.exponents):
            raise ValueError("exponents must be >= 1")
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents)))

    @property
    def s(self) -> int:
        return len(self.exponents)

    @property
    def is_artinian(self) -> bool:
        return self.s >= self.num_vars

    def adjoin(self, power: int) -> "ExponentSpec":
        return ExponentSpec(self.num_vars, self.exponents + (power,))


@dataclass(frozen=True)
class IdealSample:
    """A concrete random realization of the ideal, reproducible from its seed."""

    spec: ExponentSpec
    forms: tuple[LinearFormRep, ...]
    field: PrimeField
    seed: int

    def adjoin_form(self, form: LinearFormRep, power: int) -> "IdealSample":
        idx = bisect_right(self.spec.exponents, power)
        forms = self.forms[:idx] + (form,) + self.forms[idx:]
        return IdealSample(self.spec.adjoin(power), forms, self.field, self.seed)


@dataclass(frozen=True)
class RankReport:
    """Exact rank data for multiplication by a general k-th power into degree j."""

    k: int
    j: int
    dim_domain: int
    dim_codomain: int
    rank: int
    kernel_dim: int
    cokernel_dim: int
    trials_used: int

    @property
    def is_maximal(self) -> bool:
        return self.rank == min(self.dim_domain, self.dim_codomain)

    @property
    def deficiency(self) -> int:
        return min(self.dim_domain, self.dim_codomain) - self.rank


@dataclass(frozen=True)
class HilbertData:
    """Quotient dimensions from degree 0 through the socle degree."""

    values: tuple[int, ...]

    @property
    def regularity(self) -> int:
        return len(self.values) - 1

    def at(self, j: int) -> int:
        if j < 0 or j > self.regularity:
            return 0
        return self.values[j]


def random_form(field: PrimeField, num_vars: int, rng: np.random.Generator) -> LinearFormRep:
    while True:
        coeffs = field.random_vector(rng, num_vars)
        if any(coeffs):
            return LinearFormRep(coeffs)


def _all_subsets_independent(field: PrimeField, forms: tuple[LinearFormRep, ...], r: int) -> bool:
    for subset in combinations(forms, r):
        m = DenseMatrix(field, [f.coeffs for f in subset])
        if matrix_rank(m) < r:
            return False
    return True


def sample_ideal(spec: ExponentSpec, prime: int = DEFAULT_PRIME, seed: int = 0) -> IdealSample:
    """Draw the linear forms for `spec`, resampling until any r of them are independent."""
    field = PrimeField(prime)
    bound = 2 * (max(spec.exponents) + spec.s + 10)
    if prime <= bound:
        raise PrimeTooSmallError(f"prime {prime} too small; need > {bound}")
    rng = np.random.default_rng(seed)
    while True:
        forms = tuple(random_form(field, spec.num_vars, rng) for _ in range(spec.s))
        if spec.s < spec.num_vars or _all_subsets_independent(field, forms, spec.num_vars):
            return IdealSample(spec, forms, field, seed)


@lru_cache(maxsize=None)
def _gen_coords(field: PrimeField, form: LinearFormRep, power: int) -> np.ndarray:
    vec = power_coords(field, form, power)
    vec.flags.writeable = False
    return vec


def _ideal_matrix(sample: IdealSample, j: int) -> np.ndarray:
    """Columns spanning the degree-j piece of the ideal, in monomial coordinates."""
    field = sample.field
    r = sample.spec.num_vars
    blocks = []
    for a, form in zip(sample.spec.exponents, sample.forms):
        if a <= j:
            coords = _gen_coords(field, form, a)
            blocks.append(mult_matrix(field, r, coords, a, j).entries)
    if not blocks:
        return np.zeros((graded_dim(r, j), 0), dtype=np.int64)
    return np.hstack(blocks)


@lru_cache(maxsize=None)
def ideal_piece_dim(sample: IdealSample, j: int) -> int:
    """dim of the degree-j piece of the ideal for this sample."""
    if j < 0:
        return 0
    return matrix_rank(DenseMatrix(sample.field, _ideal_matrix(sample, j)))


def quotient_dim(sample: IdealSample, j: int) -> int:
    if j < 0:
        return 0
    return graded_dim(sample.spec.num_vars, j) - ideal_piece_dim(sample, j)


def hilbert_function(sample: IdealSample) -> HilbertData:
    """All quotient dimensions through the first zero (the quotient is artinian)."""
    spec = sample.spec
    if not spec.is_artinian:
        raise NonArtinianError(f"{spec.s} forms in {spec.num_vars} variables is not artinian")
    # Socle bound from the complete intersection on the smallest r exponents.
    bound = sum(spec.exponents[: spec.num_vars]) - spec.num_vars
    values = []
    for j in range(bound + 2):
        h = quotient_dim(sample, j)
        if h == 0:
            return HilbertData(tuple(values))
        values.append(h)
    raise AssertionError("quotient did not vanish below the complete-intersection bound")


def regularity(sample: IdealSample) -> int:
    """Last degree with a nonzero quotient component."""
    return hilbert_function(sample).regularity


def _trial_rng(sample: IdealSample, k: int, j: int) -> np.random.Generator:
    return np.random.default_rng([sample.seed, sample.field.modulus, k, j, 0x1EF1AB])


def rank_with_form(sample: IdealSample, form: LinearFormRep, k: int, j: int) -> int:
    """Rank of multiplication by form**k into degree j, as a dimension drop."""
    adjoined = sample.adjoin_form(form, k)
    return quotient_dim(sample, j) - quotient_dim(adjoined, j)


def mult_rank_report(
    sample: IdealSample, k: int, j: int, trials: int = DEFAULT_TRIALS
) -> RankReport:
    """Rank of multiplication by a general k-th power from degree j-k to degree j.

    The rank over a random form is at most the generic rank, so the report
    takes the maximum over `trials` independent choices.
    """
    if k < 1 or j < k or trials < 1:
        raise ValueError("need k >= 1, j >= k, trials >= 1")
    dom = quotient_dim(sample, j - k)
    cod = quotient_dim(sample, j)
    if dom == 0 or cod == 0:
        rank, used = 0, 0
    else:
        rng = _trial_rng(sample, k, j)
        rank, used = 0, 0
        for _ in range(trials):
            form = random_form(sample.field, sample.spec.num_vars, rng)
            rank = max(rank, rank_with_form(sample, form, k, j))
            used += 1
            if rank == min(dom, cod):
                break
    return RankReport(k, j, dom, cod, rank, dom - rank, cod - rank, used)


def lefschetz_scan(
    sample: IdealSample, k: int, trials: int = DEFAULT_TRIALS
) -> list[tuple[int, int]]:
    """Degrees where multiplication by a general k-th power misses maximal rank.

    Scans j from k through regularity+k; an empty list certifies maximal rank
    in every degree.  Each entry is (degree, deficiency) with deficiency the
    gap min(dim domain, dim codomain) - rank.
    """
    hd = hilbert_function(sample)
    failures = []
    for j in range(k, hd.regularity + k + 1):
        if hd.at(j - k) == 0 or hd.at(j) == 0:
            continue
        report = mult_rank_report(sample, k, j, trials)
        if report.deficiency > 0:
            failures.append((j, report.deficiency))
    return failures


def standard_monomials(sample: IdealSample, j: int) -> tuple[DenseMatrix, tuple[int, ...], tuple[int, ...]]:
    """Echelon basis of the degree-j ideal piece plus pivot/standard positions.

    The non-pivot monomial positions index a vector-space basis of the
    degree-j piece of the quotient.
    """
    ech, pivots = row_echelon(DenseMatrix(sample.field, _ideal_matrix(sample, j).T))
    std = tuple(c for c in range(ech.cols) if c not in set(pivots))
    return ech, pivots, std


def mult_matrix_on_quotient(
    sample: IdealSample, form: LinearFormRep, k: int, j: int
) -> DenseMatrix:
    """The induced multiplication-by-form**k matrix in quotient coordinates.

    Independent route to the same rank as `rank_with_form`: expresses the map
    on standard-monomial bases of the two quotient pieces via normal forms.
    """
    field = sample.field
    r = sample.spec.num_vars
    _, _, std_dom = standard_monomials(sample, j - k)
    ech, pivots, std_cod = standard_monomials(sample, j)
    big = mult_matrix(field, r, _gen_coords(field, form, k), k, j)
    cols = big.entries[:, list(std_dom)] if std_dom else np.zeros((big.rows, 0), dtype=np.int64)
    reduced = reduce_rows(cols.T, ech, pivots)
    return DenseMatrix(field, reduced[:, list(std_cod)].T if std_cod else np.zeros((0, len(std_dom)), dtype=np.int64))
