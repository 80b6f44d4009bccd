"""The additive subgroup of Q spanned by the scaled canonical residues
gamma_n = a_n / p**n of a p-adic integer q, its finite truncations, its
image in Q/Z, and the quasicyclic (Pruefer) relations those images satisfy.

Every finitely generated subgroup of Q is cyclic, so a truncation is
represented by a single nonnegative generator; the infinite group only ever
appears through its truncations, with stabilization reported explicitly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PrecisionError
from .numutil import check_prime, gcd_with_coefficients, prime_to_part
from .padic import PAdicInt, canonical_sequence
from .supernatural import INF, SupernaturalNumber


@dataclass(frozen=True)
class CyclicSubgroupQ:
    """The subgroup generator*Z of Q; generator 0 encodes the trivial group."""

    generator: Fraction

    def __post_init__(self):
        if not isinstance(self.generator, Fraction):
            object.__setattr__(self, "generator", Fraction(self.generator))
        if self.generator < 0:
            raise DomainError("group generators are normalized nonnegative")


@dataclass(frozen=True)
class PruferElement:
    """A fully reduced element a/p**n of the p-power torsion of Q/Z.

    level 0 with numerator 0 is the identity; otherwise 0 <= a < p**n with
    p not dividing a, and the element has order exactly p**n.
    """

    p: int
    level: int
    numerator: int

    def __post_init__(self):
        check_prime(self.p)
        if self.level < 0:
            raise DomainError("level must be nonnegative")
        if self.level == 0:
            if self.numerator != 0:
                raise DomainError("the only level-0 element is the identity")
            return
        if not 0 <= self.numerator < self.p ** self.level:
            raise DomainError(
                f"numerator {self.numerator} out of range for level {self.level}"
            )
        if self.numerator % self.p == 0:
            raise DomainError(
                f"{self.numerator}/{self.p}^{self.level} is not reduced"
            )

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.p ** self.level)

    @property
    def order(self) -> int:
        return self.p ** self.level

    def __str__(self):
        if self.level == 0:
            return "0"
        return f"{self.numerator}/{self.p}^{self.level}"


@dataclass(frozen=True)
class ContainsOneReport:
    contains_one: bool
    content: int


@dataclass(frozen=True)
class DensityWitness:
    witness: Fraction
    distance: Fraction


@dataclass(frozen=True)
class PruferRelation:
    # step n: p*gamma_{n+1} differs from gamma_n by the integer `discrepancy`
    n: int
    holds: bool
    discrepancy: int


@dataclass(frozen=True)
class PruferRelationsReport:
    p_gamma1_zero: bool
    relations: tuple[PruferRelation, ...]
    levels: tuple[int, ...]
    unbounded_order: bool

    @property
    def all_hold(self) -> bool:
        return self.p_gamma1_zero and all(r.holds for r in self.relations)


@dataclass(frozen=True)
class SupernaturalLimit:
    sn: SupernaturalNumber
    scale: int
    stabilized: bool


def _require_nonzero(q: PAdicInt) -> None:
    if q.is_zero():
        raise DomainError(
            f"q is 0 at precision {q.precision}; the group it spans is trivial"
        )


def _positive_valuation(q: PAdicInt) -> int:
    _require_nonzero(q)
    v = q.valuation()
    if v < 1:
        raise DomainError(f"q must satisfy valuation >= 1 (|q| < 1); got valuation {v}")
    return v


def gamma_generators(q: PAdicInt) -> list[Fraction]:
    """The generators gamma_n = a_n / p**n for n = 1..N, each in [0, 1)."""
    seq = canonical_sequence(q)
    pn = 1
    out = []
    for a in seq.entries:
        pn *= q.p
        out.append(Fraction(a, pn))
    return out


def hull_with_coefficients(gens) -> tuple[CyclicSubgroupQ, list[int]]:
    """Cyclic hull of finitely many rationals plus a certificate.

    Over the common denominator D the hull generator is gcd of the scaled
    numerators divided by D; the returned coefficients c satisfy
    sum(c_i * gens_i) == generator exactly.
    """
    gens = [Fraction(g) for g in gens]
    if not gens:
        return CyclicSubgroupQ(Fraction(0)), []
    d = math.lcm(*(g.denominator for g in gens))
    nums = [g.numerator * (d // g.denominator) for g in gens]
    g, coeffs = gcd_with_coefficients(nums)
    return CyclicSubgroupQ(Fraction(g, d)), coeffs


def cyclic_hull(gens) -> CyclicSubgroupQ:
    """The smallest subgroup of Q containing every input (always cyclic)."""
    return hull_with_coefficients(gens)[0]


def gamma_group(q: PAdicInt) -> CyclicSubgroupQ:
    """The truncation at q's precision of the group its generators span."""
    return cyclic_hull(gamma_generators(q))


def contains(g: CyclicSubgroupQ, r) -> bool:
    r = Fraction(r)
    if g.generator == 0:
        return r == 0
    return (r / g.generator).denominator == 1


def contains_one_report(q: PAdicInt) -> ContainsOneReport:
    """Whether 1 lies in the truncated group, plus the obstruction.

    `content` is the prime-to-p part of gcd{a_n : a_n != 0}; the hull
    generator is content / p**(N - v), so 1 is inside exactly when the
    content is 1.  A content > 1 means the generator numerators share a
    common factor and no integer combination can reach 1.
    """
    _require_nonzero(q)
    group = gamma_group(q)
    nonzero = [a for a in canonical_sequence(q).entries if a]
    content = prime_to_part(math.gcd(*nonzero), q.p)
    report = ContainsOneReport(
        contains_one=contains(group, Fraction(1)), content=content
    )
    # the two fields are one fact seen two ways; keep them consistent
    assert report.contains_one == (content == 1)
    return report


def _required_precision(q: PAdicInt, epsilon: Fraction) -> int:
    # content can only shrink at higher precision, so this is an upper bound
    v = q.valuation()
    content = gamma_group(q).generator.numerator or 1
    n = v + 1
    while Fraction(content, q.p ** (n - v)) > epsilon:
        n += 1
    return n


def density_witness(q: PAdicInt, target, epsilon) -> DensityWitness:
    """The nearest element of the truncated group to `target`, guaranteed
    within epsilon; ties between two multiples resolve to the smaller one."""
    target = Fraction(target)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    _require_nonzero(q)
    g = gamma_group(q).generator
    if g == 0 or g > epsilon:
        needed = _required_precision(q, epsilon)
        raise PrecisionError(
            f"hull generator {g} exceeds epsilon {epsilon}; "
            f"precision about N={needed} would suffice",
            required_precision=needed,
        )
    steps = target / g
    k = steps.numerator // steps.denominator
    if steps - k > Fraction(1, 2):
        k += 1
    witness = k * g
    return DensityWitness(witness=witness, distance=abs(witness - target))


def prufer_image(gamma, p: int) -> PruferElement:
    """Reduce a rational with p-power denominator mod 1 into the p-power
    torsion of Q/Z."""
    check_prime(p)
    gamma = Fraction(gamma)
    den = gamma.denominator
    level = 0
    while den % p == 0:
        den //= p
        level += 1
    if den != 1:
        raise DomainError(
            f"denominator of {gamma} has a prime factor {den} other than {p}"
        )
    reduced = gamma % 1
    return PruferElement(
        p=p,
        level=_p_exponent(reduced.denominator, p),
        numerator=reduced.numerator,
    )


def _p_exponent(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def prufer_add(a: PruferElement, b: PruferElement) -> PruferElement:
    if a.p != b.p:
        raise DomainError(f"cannot add torsion elements at p={a.p} and p={b.p}")
    return prufer_image(a.fraction + b.fraction, a.p)


def prufer_relations_check(q: PAdicInt) -> PruferRelationsReport:
    """Verify the quasicyclic chain in Q/Z: p*gamma_1 = 0 and
    p*gamma_{n+1} = gamma_n mod 1, reporting the integer discrepancy of
    each step (it equals q's digit at p**n) and whether the reduced images
    climb to unbounded order."""
    v = _positive_valuation(q)
    gens = gamma_generators(q)
    first = prufer_image(q.p * gens[0], q.p)
    relations = []
    for n in range(1, len(gens)):
        diff = q.p * gens[n] - gens[n - 1]
        holds = diff.denominator == 1
        relations.append(
            PruferRelation(n=n, holds=holds, discrepancy=int(diff) if holds else 0)
        )
    levels = tuple(prufer_image(g, q.p).level for g in gens)
    tail = levels[v:]  # beyond the valuation the reduced level is n - v
    unbounded = all(b > a for a, b in zip(tail, tail[1:])) and (
        not tail or tail[-1] == q.precision - v
    )
    return PruferRelationsReport(
        p_gamma1_zero=(first.level == 0),
        relations=tuple(relations),
        levels=levels,
        unbounded_order=unbounded,
    )


def supernatural_limit(q: PAdicInt) -> SupernaturalLimit:
    """Empirical limit of the truncations: the hull generators follow
    content / p**(n - v), so the group tends to content * Z[1/p].  The
    supernatural shape is p^inf; `scale` is the latest content and
    `stabilized` says whether it was constant over the last 3 levels."""
    _positive_valuation(q)
    contents: list[int | None] = []
    for n in range(1, q.precision + 1):
        g = gamma_group(q.truncate(n)).generator
        contents.append(g.numerator if g else None)
    scale = contents[-1]
    assert scale is not None  # q != 0 guarantees a nontrivial last truncation
    window = contents[-3:]
    stabilized = len(window) == 3 and all(c == scale for c in window)
    return SupernaturalLimit(
        sn=SupernaturalNumber({q.p: INF}), scale=scale, stabilized=stabilized
    )


_PRUFER_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*(?:\^\s*(\d+))?)?\s*$")


def parse_prufer(text: str, p: int) -> PruferElement:
    """Parse `a/p^n` (also `a/m` for a literal p-power m, or a bare integer)
    and reduce it into the p-power torsion of Q/Z."""
    m = _PRUFER_RE.match(text)
    if m is None:
        raise DomainError(f"malformed torsion element: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        den = 1
    elif m.group(3) is None:
        den = int(m.group(2))
    else:
        den = int(m.group(2)) ** int(m.group(3))
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return prufer_image(Fraction(num, den), p)
