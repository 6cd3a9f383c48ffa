"""Closed-form classification of maximal-rank behavior, no linear algebra.

Everything here is integer arithmetic on the exponent multiset: the peak
degree of the Hilbert function, the counting vector of exponents, and the
complete square/cube classifications together with their SLP/WLP corollaries
in three and four variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .linsys import binom
from .oracle import ExponentSpec, NonArtinianError

MAXIMAL = "maximal-everywhere"
FAILS = "fails"

EXCHANGE_CONCLUSION = "power-b multiplication has maximal rank on the power-k quotient"


@dataclass(frozen=True)
class ExponentCounts:
    """counts[j] = number of exponents <= j, for j = 0..j_max."""

    s: int
    counts: tuple[int, ...]

    @property
    def j_max(self) -> int:
        return len(self.counts) - 1

    def at(self, j: int) -> int:
        if j < 0:
            return 0
        if j <= self.j_max:
            return self.counts[j]
        if self.counts and self.counts[-1] == self.s:
            return self.s
        raise IndexError(f"count at degree {j} not computed (j_max={self.j_max})")

    def partial_sum(self, j: int) -> int:
        """counts[0] + ... + counts[j]."""
        return sum(self.at(i) for i in range(j + 1))


@dataclass(frozen=True)
class DegreeFailure:
    degree: int
    kernel_dim: Optional[int]
    cokernel_dim: Optional[int]

    @property
    def deficiency(self) -> int:
        known = [d for d in (self.kernel_dim, self.cokernel_dim) if d is not None]
        return min(known)


@dataclass(frozen=True)
class Verdict:
    """A theory-engine classification with its witness data."""

    status: str
    failures: tuple[DegreeFailure, ...] = ()
    witness: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in (MAXIMAL, FAILS):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == FAILS) != bool(self.failures):
            raise ValueError("failure list must be nonempty exactly when status is 'fails'")

    @property
    def failing_degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.failures)


def exponent_counts(spec: ExponentSpec, j_max: int) -> ExponentCounts:
    counts = tuple(sum(1 for a in spec.exponents if a <= j) for j in range(j_max + 1))
    return ExponentCounts(spec.s, counts)


def line_condition_sum(spec: ExponentSpec, j: int) -> int:
    """Sum of (j+1-a_i) over exponents a_i <= j.

    Equals the partial sum of the counting vector through degree j; this is
    the number of conditions the dual points put on degree-j binary forms.
    """
    return sum(j + 1 - a for a in spec.exponents if a <= j)


def peak_degree(spec: ExponentSpec) -> int:
    """Largest j with line_condition_sum(spec, j) <= j.

    This is the turning degree of the Hilbert function: multiplication by a
    general linear form is injective into degrees <= peak and surjective onto
    degrees >= peak+1.  Needs at least two exponents to be finite.
    """
    if spec.s < 2:
        raise ValueError("peak degree needs at least two exponents")
    total = sum(spec.exponents)
    upper = max(max(spec.exponents), (total - spec.s) // (spec.s - 1)) + 1
    best = 0
    for j in range(upper + 1):
        if line_condition_sum(spec, j) <= j:
            best = j
    return best


def peak_degree_uniform(s: int, t: int) -> int:
    """Peak degree for s copies of the exponent t."""
    if s < 2 or t < 1:
        raise ValueError("need s >= 2 and t >= 1")
    if s >= t + 1:
        return t - 1
    return s * (t - 1) // (s - 1)


def injectivity_certificate(spec: ExponentSpec, k: int, j: int) -> int:
    """Quotient dimension that certifies injectivity of a k-th-power map.

    If the exact dimension of the degree-j piece of the quotient by the ideal
    with a general k-th power adjoined equals this value, multiplication by
    that power into degree j is injective.
    """
    a_max = max(spec.exponents)
    if k < 1 or j < max(k, a_max):
        raise ValueError("need k >= 1 and j >= max(k, largest exponent)")
    head = j * k + 1 - binom(k - 1, 2)
    low = sum(k * (j - a) + 1 - binom(k - 1, 2) for a in spec.exponents if a <= j - k)
    high = sum(binom(j - a + 2, 2) for a in spec.exponents if a > j - k)
    return head - low - high


def _reject_non_artinian_3vars(spec: ExponentSpec) -> None:
    if spec.num_vars != 3:
        raise ValueError("this classification is for three variables")
    if not spec.is_artinian:
        raise NonArtinianError("need at least three forms in three variables")


def classify_square(spec: ExponentSpec) -> Verdict:
    """Multiplication by a general square always has maximal rank (3 variables)."""
    _reject_non_artinian_3vars(spec)
    return Verdict(MAXIMAL, witness={"peak": peak_degree(spec)})


def classify_cube(spec: ExponentSpec) -> Verdict:
    """Complete description of maximal rank for multiplication by a cube.

    In three variables the map can only miss maximal rank in the single
    degree peak+2, and it does so exactly when the count of exponents at most
    peak+1 equals peak + 2 - (partial count sum through peak), that number is
    even and at least four, and no exponent equals peak+2.  In the failing
    degree the kernel and cokernel are both one-dimensional and the domain
    and codomain have equal dimension.
    """
    _reject_non_artinian_3vars(spec)
    if any(a == 1 for a in spec.exponents):
        # A linear generator eliminates a variable; two-variable quotients
        # have the SLP, so every power map has maximal rank.
        return Verdict(MAXIMAL, witness={"rule_linear_generator": 1})
    if spec.s == 3:
        # Three general powers form a complete intersection with the SLP.
        return Verdict(MAXIMAL, witness={"rule_complete_intersection": 1})
    p = peak_degree(spec)
    counts = exponent_counts(spec, p + 2)
    nu = p + 2 - counts.partial_sum(p)
    witness = {
        "peak": p,
        "nu": nu,
        "m": counts.at(p),
        "n": sum(1 for a in spec.exponents if a == p + 1),
        "q": sum(1 for a in spec.exponents if a == p + 2),
        "d": p - sum(p + 1 - a for a in spec.exponents if a <= p),
    }
    fails = (
        counts.at(p + 1) == nu
        and nu >= 4
        and nu % 2 == 0
        and counts.at(p + 2) == counts.at(p + 1)
    )
    if not fails:
        return Verdict(MAXIMAL, witness=witness)
    witness["equal_dims_low"] = p - 1
    witness["equal_dims_high"] = p + 2
    return Verdict(FAILS, (DegreeFailure(p + 2, 1, 1),), witness)


def classify_cube_uniform(s: int, t: int) -> Verdict:
    """Cube classification for s copies of t: fails iff s-1 divides t and s >= 4 is even."""
    if s < 2 or t < 1:
        raise ValueError("need s >= 2 and t >= 1")
    if s <= 3:
        return Verdict(MAXIMAL, witness={"rule_complete_intersection": 1})
    p = peak_degree_uniform(s, t)
    if s % 2 == 0 and t % (s - 1) == 0:
        j = s * t // (s - 1)
        return Verdict(
            FAILS,
            (DegreeFailure(j, 1, 1),),
            {"peak": p, "equal_dims_low": j - 3, "equal_dims_high": j},
        )
    return Verdict(MAXIMAL, witness={"peak": p})


def slp_with_square_generator(spec: ExponentSpec) -> Verdict:
    """A three-variable quotient whose ideal contains a general square has the SLP."""
    if spec.num_vars != 3:
        raise ValueError("this result is for three variables")
    if 2 not in spec.exponents:
        raise ValueError("needs a square generator (some exponent equal to 2)")
    if spec.s < 3:
        raise NonArtinianError("need at least three forms in three variables")
    return Verdict(MAXIMAL, witness={"peak": peak_degree(spec)})


def wlp_with_square_generator_4vars(spec: ExponentSpec) -> Verdict:
    """A four-variable quotient with a generator of degree at most two has the WLP."""
    if spec.num_vars != 4:
        raise ValueError("this result is for four variables")
    if min(spec.exponents) > 2:
        raise ValueError("needs a generator of degree at most two")
    if spec.s < 4:
        raise NonArtinianError("need at least four forms in four variables")
    return Verdict(MAXIMAL, witness={})


@dataclass(frozen=True)
class CubeQuotientSlp:
    """SLP status of the quotient by a general cube, with the per-power evidence."""

    has_slp: bool
    checks: tuple[tuple[int, Verdict], ...]


def slp_after_cube_quotient(spec: ExponentSpec) -> CubeQuotientSlp:
    """SLP of the quotient by a further general cube.

    Checked through the cube classification applied to the exponent multiset
    with one extra entry b adjoined, for every b from 3 through the peak
    degree; the quotient has the SLP exactly when none of these fails.
    """
    _reject_non_artinian_3vars(spec)
    p0 = peak_degree(spec)
    checks = []
    for b in range(3, p0 + 1):
        bigger = spec.adjoin(b)
        # Adjoining a generator can only lower the peak degree.
        assert peak_degree(bigger) <= p0
        checks.append((b, classify_cube(bigger)))
    has_slp = all(v.status == MAXIMAL for _, v in checks)
    return CubeQuotientSlp(has_slp, tuple(checks))


def slp_after_cube_quotient_uniform(s: int, t: int) -> bool:
    """SLP of the cube quotient for s copies of t: fails iff s is odd and t >= s."""
    if s < 2:
        raise ValueError("need s >= 2")
    return not (s % 2 == 1 and t >= s)


@dataclass(frozen=True)
class FailingPowers:
    asserted: frozenset[int]
    conjectured: frozenset[int]


def failing_powers_after_cube(s: int, t: int, reg_bound: int) -> FailingPowers:
    """Powers b whose multiplication misses maximal rank on the cube quotient.

    For s odd, t >= s and b <= t the failing powers are exactly the multiples
    of s below reg_bound.  Multiples of s strictly between t and reg_bound are
    reported separately: they are conjectured to fail as well but are not
    asserted.
    """
    if s % 2 == 0 or s < 3:
        raise ValueError("need s odd and >= 3")
    if t < s:
        raise ValueError("need t >= s")
    asserted = frozenset(b for b in range(s, t + 1, s) if b < reg_bound)
    first = ((t // s) + 1) * s
    conjectured = frozenset(b for b in range(first, reg_bound, s))
    return FailingPowers(asserted, conjectured)


def wlp_cube_uniform_4vars(s: int, t: int) -> Verdict:
    """WLP in four variables for a cube plus s copies of t.

    Holds iff s is odd, or s is even and t is not a multiple of s-1; when it
    fails, surjectivity misses by one in the single degree s*t/(s-1).
    """
    if s < 4 or t < 3:
        raise ValueError("need s >= 4 and t >= 3")
    if s % 2 == 1 or t % (s - 1) != 0:
        return Verdict(MAXIMAL, witness={})
    j = s * t // (s - 1)
    return Verdict(FAILS, (DegreeFailure(j, None, 1),), {})


@dataclass(frozen=True)
class ExchangeFacts:
    """Which maximal-rank hypotheses are known, for the exchange implication.

    `wlp_base`: the base algebra has the WLP; `power_k_max_on_base`:
    multiplication by the k-th power has maximal rank on the base;
    `power_k_max_on_quotient_by_b`: same map on the quotient by the b-th
    power; `power_b_max_on_base`: multiplication by the b-th power on the
    base.
    """

    b: int
    k: int
    wlp_base: bool = False
    power_k_max_on_base: bool = False
    power_k_max_on_quotient_by_b: bool = False
    power_b_max_on_base: bool = False


def exchange_implication(facts: ExchangeFacts) -> Optional[str]:
    """Entailed conclusion of the exchange property, or None.

    Variant (a) needs the WLP of the base, b >= k, and maximal rank of the
    k-th-power map on both the base and the quotient by the b-th power;
    variant (b) needs maximal rank of the k-th-power map on the quotient by
    the b-th power together with maximal rank of the b-th-power map on the
    base.  Either yields maximal rank of the b-th-power map on the quotient
    by the k-th power, in every degree.
    """
    variant_a = (
        facts.wlp_base
        and facts.b >= facts.k
        and facts.power_k_max_on_base
        and facts.power_k_max_on_quotient_by_b
    )
    variant_b = facts.power_k_max_on_quotient_by_b and facts.power_b_max_on_base
    if variant_a or variant_b:
        return EXCHANGE_CONCLUSION
    return None
