"""Pure-Python digit kernels.

A residue mod p**N is a little-endian tuple of N digits in [0, p).  These
functions are the fallback used when the compiled extension is missing or
when p exceeds its fast-path limit; results are bit-identical to the
compiled kernels.
"""

BACKEND = "pure"


def to_int(digits, p):
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def from_int(value, p, n):
    value %= p ** n  # canonicalizes negatives too
    out = []
    for _ in range(n):
        value, d = divmod(value, p)
        out.append(d)
    return tuple(out)


def add(a, b, p):
    out = []
    carry = 0
    for x, y in zip(a, b):
        s = x + y + carry
        if s >= p:
            s -= p
            carry = 1
        else:
            carry = 0
        out.append(s)
    return tuple(out)


def neg(a, p):
    # p-complement: digits below the first nonzero stay 0
    for j, d in enumerate(a):
        if d:
            break
    else:
        return tuple(a)
    out = list(a[:j])
    out.append(p - a[j])
    for i in range(j + 1, len(a)):
        out.append(p - 1 - a[i])
    return tuple(out)


def mul(a, b, p):
    n = len(a)
    return from_int(to_int(a, p) * to_int(b, p), p, n)


def inv(a, p):
    if a[0] % p == 0:
        raise ZeroDivisionError("inverse of a non-unit residue")
    n = len(a)
    return from_int(pow(to_int(a, p), -1, p ** n), p, n)


def bilinear_scan(p, level):
    """Exhaustively check the level-n pairing for additivity in both slots.

    Every pair (z, c) in (Z/p^n)^2 is checked for the successor step
    z -> z+1 (first slot) and c -> c+1 (second slot); by induction that is
    full bilinearity.  Returns None on success, otherwise the first failing
    (slot, z, c) triple.
    """
    m = p ** level
    if m == 1:
        return None
    for z in range(m):
        z1 = z + 1
        if z1 == m:
            z1 = 0
        zc = 0  # z*c mod m, maintained incrementally
        for c in range(m):
            if (z1 * c) % m != (zc + c) % m:
                return ("z-additivity", z, c)
            if (z * (c + 1)) % m != (zc + z) % m:
                return ("gamma-additivity", z, c)
            zc += z
            if zc >= m:
                zc -= m
    return None
