"""Supernatural numbers, the rational groups Q(n) they encode, and the
K0-level classification of UHF algebras.

A supernatural number is a formal product of primes with exponents in
{1, 2, ...} or infinity.  Q(n) is the additive group of rationals whose
denominators divide it; that group is the K0 invariant of the UHF algebra
built from a size sequence, and two UHF algebras are stably isomorphic
exactly when their invariants agree up to integer scaling.  Q(n) itself is
never materialized: membership (`qn_contains`) is its observable behavior.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .numutil import check_prime, factorize

INF = float("inf")  # exponent marker; compared against ints, never summed


@dataclass(frozen=True)
class SupernaturalNumber:
    """Finite map prime -> exponent (positive int or INF); absent means 0."""

    exponents: dict[int, int | float] = field(default_factory=dict)

    def __post_init__(self):
        for p, e in self.exponents.items():
            check_prime(p)
            if e == INF:
                continue
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise DomainError(
                    f"exponent of {p} must be a positive integer or inf, got {e!r}"
                )

    def exponent(self, p: int) -> int | float:
        return self.exponents.get(p, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.exponents))

    def infinite_support(self) -> frozenset[int]:
        return frozenset(p for p, e in self.exponents.items() if e == INF)

    def __str__(self):
        return format_supernatural(self)


@dataclass(frozen=True)
class UHFDescriptor:
    """An eventually periodic matrix-size sequence: finite prefix plus an
    optional block that repeats forever."""

    prefix: tuple[int, ...] = ()
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.prefix, tuple):
            object.__setattr__(self, "prefix", tuple(self.prefix))
        if not isinstance(self.tail, tuple):
            object.__setattr__(self, "tail", tuple(self.tail))
        for k in self.prefix + self.tail:
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise DomainError(f"matrix size {k!r} rejected; sizes are integers >= 1")

    def sizes(self, count: int) -> tuple[int, ...]:
        """The first `count` sizes of the (possibly infinite) sequence."""
        out = list(self.prefix[:count])
        while self.tail and len(out) < count:
            out.extend(self.tail)
        return tuple(out[:count])

    def __str__(self):
        return format_descriptor(self)


@dataclass(frozen=True)
class StableIsomorphism:
    equal: bool
    witness: tuple[int, int] | None


@dataclass(frozen=True)
class TateUHF:
    descriptor: UHFDescriptor
    k0: SupernaturalNumber
    scale: int
    label: str | None


def supernatural_from_sizes(m: UHFDescriptor) -> SupernaturalNumber:
    """Prime multiplicities of the full size product: the prefix contributes
    finitely, any prime dividing the repeating tail contributes infinity."""
    exps: dict[int, int | float] = {}
    for k in m.prefix:
        for p, e in factorize(k).items():
            exps[p] = exps.get(p, 0) + e
    tail_product = 1
    for k in m.tail:
        tail_product *= k
    if tail_product > 1:
        for p in factorize(tail_product):
            exps[p] = INF
    return SupernaturalNumber({p: e for p, e in exps.items() if e})


def k0_of(m: UHFDescriptor) -> SupernaturalNumber:
    """The K0 invariant of the UHF algebra with size sequence m.

    Numerically identical to `supernatural_from_sizes`; the name records
    that the result classifies the algebra: K0 is Q(n) for this n.
    """
    return supernatural_from_sizes(m)


def qn_contains(n: SupernaturalNumber, r) -> bool:
    """Membership of a rational in Q(n): every prime power in the reduced
    denominator must be within n's exponent for that prime."""
    r = Fraction(r)
    if r.denominator == 1:
        return True
    return all(
        mult <= n.exponent(p) for p, mult in factorize(r.denominator).items()
    )


def _sample_elements(n: SupernaturalNumber, cap: int = 8) -> list[Fraction]:
    """A deterministic sample of Q(n) elements that exercises every support
    prime at its extreme allowed denominator."""
    elems = [Fraction(0), Fraction(1), Fraction(-3)]
    combined = 1
    for p in n.support():
        e = n.exponent(p)
        k = cap if e == INF else e
        elems.append(Fraction(1, p ** k))
        elems.append(Fraction(p ** k - 1, p ** k))
        combined *= p ** k
    if combined > 1:
        elems.append(Fraction(7, combined))
    return elems


def stably_isomorphic(n: SupernaturalNumber, n2: SupernaturalNumber) -> StableIsomorphism:
    """Decide r*Q(n) = s*Q(n2) for some positive integers r, s.

    Over the representable class the infinite parts must match exactly,
    while finite exponents are absorbed by scaling; when equal, the minimal
    witness is returned and re-verified on sampled elements both ways.
    """
    if n.infinite_support() != n2.infinite_support():
        return StableIsomorphism(equal=False, witness=None)
    r = 1
    s = 1
    for p in sorted(set(n.support()) | set(n2.support())):
        e1 = n.exponent(p)
        e2 = n2.exponent(p)
        if e1 == INF:  # infinite in both; scaling is irrelevant there
            continue
        if e1 > e2:
            r *= p ** (e1 - e2)
        elif e2 > e1:
            s *= p ** (e2 - e1)
    ratio = Fraction(r, s)
    for x in _sample_elements(n):
        if not qn_contains(n2, x * ratio):
            raise RuntimeError(
                f"witness ({r}, {s}) failed re-verification on {x} in Q({n})"
            )
    for y in _sample_elements(n2):
        if not qn_contains(n, y / ratio):
            raise RuntimeError(
                f"witness ({r}, {s}) failed re-verification on {y} in Q({n2})"
            )
    return StableIsomorphism(equal=True, witness=(r, s))


def uhf_from_tate(q) -> TateUHF:
    """The UHF algebra dual to the Tate parameter q, at the K0 level: its
    size sequence repeats q's prime, so K0 is p^inf up to the reported
    integer scale."""
    from .gamma import supernatural_limit  # deferred: gamma imports this module

    limit = supernatural_limit(q)
    label = "CAR" if q.p == 2 else None
    return TateUHF(
        descriptor=UHFDescriptor(prefix=(), tail=(q.p,)),
        k0=limit.sn,
        scale=limit.scale,
        label=label,
    )


_FACTOR_RE = re.compile(r"^(\d+)(?:\^(inf|\d+))?$")


def parse_supernatural(text: str) -> SupernaturalNumber:
    """Parse `1` or an asterisk-separated factor list like `2^inf*3^2*5`."""
    text = text.strip()
    if text == "1":
        return SupernaturalNumber({})
    exps: dict[int, int | float] = {}
    for part in text.split("*"):
        m = _FACTOR_RE.match(part.strip())
        if m is None:
            raise DomainError(f"malformed supernatural factor: {part!r}")
        p = int(m.group(1))
        raw = m.group(2)
        e: int | float = 1 if raw is None else (INF if raw == "inf" else int(raw))
        if e == 0:
            continue
        if p in exps:
            raise DomainError(f"prime {p} listed twice in {text!r}")
        exps[p] = e
    return SupernaturalNumber(exps)


def format_supernatural(n: SupernaturalNumber) -> str:
    if not n.exponents:
        return "1"
    parts = []
    for p in n.support():
        e = n.exponent(p)
        if e == INF:
            parts.append(f"{p}^inf")
        elif e == 1:
            parts.append(str(p))
        else:
            parts.append(f"{p}^{e}")
    return "*".join(parts)


def parse_descriptor(text: str) -> UHFDescriptor:
    """Parse `sizes=2,4,8` optionally followed by `;tail=3,3`."""
    prefix: tuple[int, ...] = ()
    tail: tuple[int, ...] = ()
    seen = set()
    for chunk in text.strip().split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, body = chunk.partition("=")
        key = key.strip()
        if not sep or key not in ("sizes", "tail") or key in seen:
            raise DomainError(f"malformed descriptor chunk: {chunk!r}")
        seen.add(key)
        try:
            values = tuple(int(s) for s in body.split(",") if s.strip())
        except ValueError:
            raise DomainError(f"malformed size list: {body!r}") from None
        if key == "sizes":
            prefix = values
        else:
            tail = values
    if not seen:
        raise DomainError(f"malformed descriptor: {text!r}")
    return UHFDescriptor(prefix=prefix, tail=tail)


def format_descriptor(m: UHFDescriptor) -> str:
    out = f"sizes={','.join(map(str, m.prefix))}"
    if m.tail:
        out += f";tail={','.join(map(str, m.tail))}"
    return out
