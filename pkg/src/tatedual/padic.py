"""Fixed-precision p-adic integers.

A value is a residue mod p**N stored as N base-p digits, least significant
first, standing for a p-adic integer known to precision N.  All operations
are exact mod p**N and never extend precision on their own.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .errors import DomainError
from .numutil import check_prime


class _AtLeastPrecision:
    """Marker for 'every stored digit is zero': the valuation is >= N."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "at_least_precision"


AT_LEAST_PRECISION = _AtLeastPrecision()


@dataclass(frozen=True)
class PAdicInt:
    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.digits, tuple):
            object.__setattr__(self, "digits", tuple(self.digits))
        if len(self.digits) < 1:
            raise DomainError("precision must be at least 1")
        for i, d in enumerate(self.digits):
            if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < self.p:
                raise DomainError(
                    f"digit c_{i}={d!r} out of range [0, {self.p - 1}]"
                )

    @property
    def precision(self) -> int:
        return len(self.digits)

    @cached_property
    def value(self) -> int:
        """The canonical integer representative in [0, p**N)."""
        return kernels.to_int(self.digits, self.p)

    def is_zero(self) -> bool:
        return not any(self.digits)

    def valuation(self):
        """Index of the first nonzero digit, or AT_LEAST_PRECISION if none."""
        for i, d in enumerate(self.digits):
            if d:
                return i
        return AT_LEAST_PRECISION

    def truncate(self, n: int) -> PAdicInt:
        """The same value known only mod p**n, for 1 <= n <= N."""
        if not 1 <= n <= self.precision:
            raise DomainError(f"cannot truncate precision {self.precision} to {n}")
        return PAdicInt(self.p, self.digits[:n])

    def _check_compatible(self, other: PAdicInt) -> None:
        if not isinstance(other, PAdicInt):
            raise DomainError(f"expected a p-adic operand, got {other!r}")
        if self.p != other.p or self.precision != other.precision:
            raise DomainError(
                f"operands disagree: p={self.p}, N={self.precision} vs "
                f"p={other.p}, N={other.precision}"
            )

    def __add__(self, other: PAdicInt) -> PAdicInt:
        self._check_compatible(other)
        return PAdicInt(self.p, kernels.add(self.digits, other.digits, self.p))

    def __neg__(self) -> PAdicInt:
        return PAdicInt(self.p, kernels.neg(self.digits, self.p))

    def __sub__(self, other: PAdicInt) -> PAdicInt:
        return self + (-other)

    def __mul__(self, other: PAdicInt) -> PAdicInt:
        self._check_compatible(other)
        return PAdicInt(self.p, kernels.mul(self.digits, other.digits, self.p))

    def inverse(self) -> PAdicInt:
        """The unique z with self*z = 1 mod p**N; defined for units only."""
        if self.digits[0] == 0:
            raise DomainError(
                f"cannot invert a non-unit: valuation is {self.valuation()!r}"
            )
        return PAdicInt(self.p, kernels.inv(self.digits, self.p))

    def __str__(self):
        return f"{self.value} mod {self.p}^{self.precision}"


@dataclass(frozen=True)
class CanonicalSequence:
    """The partial-sum residues a_1..a_N of a p-adic integer.

    a_n is the value mod p**n, so 0 <= a_n < p**n and consecutive entries
    are congruent mod p**n.  Both facts are verified at construction.
    """

    p: int
    entries: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        pn = 1
        prev = None
        for n, a in enumerate(self.entries, start=1):
            pn *= self.p
            if not 0 <= a <= pn - 1:
                raise DomainError(f"a_{n}={a} out of range [0, {pn - 1}]")
            if prev is not None and (a - prev) % (pn // self.p) != 0:
                raise DomainError(
                    f"congruence broken: a_{n}={a} != a_{n - 1}={prev} "
                    f"mod {self.p}^{n - 1}"
                )
            prev = a

    def __len__(self):
        return len(self.entries)


def padic_from_integer(m: int, p: int, n: int) -> PAdicInt:
    """The residue of the integer m mod p**n, in canonical digit form."""
    check_prime(p)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"precision N={n!r} rejected; need an integer N >= 1")
    return PAdicInt(p, kernels.from_int(m, p, n))


def padic_zero(p: int, n: int) -> PAdicInt:
    return padic_from_integer(0, p, n)


def padic_one(p: int, n: int) -> PAdicInt:
    return padic_from_integer(1, p, n)


# op name -> arity
_ARITHMETIC_OPS = {"add": 2, "neg": 1, "mul": 2, "invert": 1}


def arithmetic(op: str, x: PAdicInt, y: PAdicInt | None = None) -> PAdicInt:
    """Dispatch one ring operation by name: add, neg, mul, or invert."""
    if op not in _ARITHMETIC_OPS:
        raise DomainError(f"unknown operation {op!r}; expected one of "
                          f"{sorted(_ARITHMETIC_OPS)}")
    arity = _ARITHMETIC_OPS[op]
    if arity == 2 and y is None:
        raise DomainError(f"operation {op!r} needs a second operand")
    if arity == 1 and y is not None:
        raise DomainError(f"operation {op!r} takes a single operand")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    return x.inverse()


def valuation(x: PAdicInt):
    return x.valuation()


def canonical_sequence(x: PAdicInt) -> CanonicalSequence:
    """The residues a_n = x mod p**n for n = 1..N."""
    entries = []
    acc = 0
    pw = 1
    for d in x.digits:
        acc += d * pw
        pw *= x.p
        entries.append(acc)
    return CanonicalSequence(x.p, tuple(entries))


_TEXT_RE = re.compile(
    r"^\s*p=(\d+)\s+N=(\d+)\s+(?:digits=\[([^\]]*)\]|int=(-?\d+))\s*$"
)


def parse_padic(text: str) -> PAdicInt:
    """Parse `p=<prime> N=<prec> digits=[c0,c1,...]` or `p=.. N=.. int=<m>`."""
    m = _TEXT_RE.match(text)
    if m is None:
        raise DomainError(f"malformed p-adic literal: {text!r}")
    p = int(m.group(1))
    n = int(m.group(2))
    if m.group(4) is not None:
        return padic_from_integer(int(m.group(4)), p, n)
    body = m.group(3).strip()
    try:
        digits = tuple(int(s) for s in body.split(",")) if body else ()
    except ValueError:
        raise DomainError(f"malformed digit list: {body!r}") from None
    if len(digits) != n:
        raise DomainError(
            f"digit list length {len(digits)} does not match N={n}"
        )
    check_prime(p)
    return PAdicInt(p, digits)


def format_padic(x: PAdicInt) -> str:
    return f"p={x.p} N={x.precision} digits=[{','.join(map(str, x.digits))}]"
