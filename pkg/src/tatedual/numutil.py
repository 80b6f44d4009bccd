"""Small integer helpers shared across the package: primality by trial
division, factorization, and extended gcd with combination certificates."""

from __future__ import annotations

from math import isqrt

from .errors import DomainError

# Primes are re-checked on every value construction; the cache keeps that
# amortized O(1) for the handful of primes a session actually uses.
_VERIFIED_PRIMES: set[int] = {2, 3, 5, 7, 11, 13}

MAX_PRIME_BITS = 63  # p must fit in a machine word


def smallest_factor(n: int) -> int:
    """Return the smallest prime factor of n >= 2 (n itself if prime)."""
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    f = 5
    top = isqrt(n)
    while f <= top:
        if n % f == 0:
            return f
        if n % (f + 2) == 0:
            return f + 2
        f += 6
    return n


def check_prime(p: int) -> None:
    """Reject p unless it is a prime fitting in a machine word."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise DomainError(f"p must be an integer, got {p!r}")
    if p in _VERIFIED_PRIMES:
        return
    if p < 2:
        raise DomainError(f"p={p} is not prime (primes start at 2)")
    if p.bit_length() > MAX_PRIME_BITS:
        raise DomainError(f"p={p} does not fit in a machine word")
    f = smallest_factor(p)
    if f != p:
        raise DomainError(f"p={p} is not prime (divisible by {f})")
    _VERIFIED_PRIMES.add(p)


def is_prime(n: int) -> bool:
    if n in _VERIFIED_PRIMES:
        return True
    return n >= 2 and smallest_factor(n) == n


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise DomainError(f"cannot factorize {n}; expected a positive integer")
    out: dict[int, int] = {}
    while n > 1:
        f = smallest_factor(n)
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        out[f] = e
    return out


def prime_to_part(n: int, p: int) -> int:
    """The p-free part of n: divide out every factor of p."""
    if n == 0:
        return 0
    n = abs(n)
    while n % p == 0:
        n //= p
    return n


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def gcd_with_coefficients(nums: list[int]) -> tuple[int, list[int]]:
    """gcd of a list together with integer coefficients realizing it.

    Returns (g, c) with g = sum(c[i] * nums[i]) and g = gcd(nums) >= 0.
    The empty list has gcd 0.
    """
    g = 0
    coeffs: list[int] = []
    for n in nums:
        g2, x, y = xgcd(g, n)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
        g = g2
    return g, coeffs
