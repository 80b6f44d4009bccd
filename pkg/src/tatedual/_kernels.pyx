# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit kernels.

Same contract as ``_kernels_py``: residues mod p**N as little-endian digit
tuples.  Digit products are accumulated in unsigned 128-bit integers, which
is why this fast path is limited to p < 2**31 (see P_LIMIT); the dispatcher
falls back to the pure kernels above that.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

BACKEND = "compiled"
P_LIMIT = 1 << 31


cdef u64* _alloc(Py_ssize_t n) except NULL:
    cdef u64* buf = <u64*> calloc(n if n > 0 else 1, sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _load(tuple t, u64* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = <u64> t[i]


cdef tuple _dump(u64* buf, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return tuple(out)


def to_int(digits, p):
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def from_int(value, p, n):
    value %= p ** n
    out = []
    for _ in range(n):
        value, d = divmod(value, p)
        out.append(d)
    return tuple(out)


def add(tuple a, tuple b, p):
    cdef Py_ssize_t n = len(a)
    cdef u64 cp = <u64> p
    cdef u64 carry = 0, s
    cdef Py_ssize_t i
    cdef u64* ba = _alloc(n)
    cdef u64* bb = _alloc(n)
    try:
        _load(a, ba, n)
        _load(b, bb, n)
        for i in range(n):
            s = ba[i] + bb[i] + carry
            if s >= cp:
                s -= cp
                carry = 1
            else:
                carry = 0
            ba[i] = s
        return _dump(ba, n)
    finally:
        free(ba)
        free(bb)


def neg(tuple a, p):
    cdef Py_ssize_t n = len(a)
    cdef u64 cp = <u64> p
    cdef Py_ssize_t i, j = -1
    cdef u64* buf = _alloc(n)
    try:
        _load(a, buf, n)
        for i in range(n):
            if buf[i] != 0:
                j = i
                break
        if j < 0:
            return tuple(a)
        buf[j] = cp - buf[j]
        for i in range(j + 1, n):
            buf[i] = cp - 1 - buf[i]
        return _dump(buf, n)
    finally:
        free(buf)


cdef void _mul_trunc(u64* a, u64* b, u64* out, Py_ssize_t n, u64 p):
    # column accumulation; carries stay well inside 128 bits for p < 2^31
    cdef u128 acc = 0
    cdef Py_ssize_t k, i
    for k in range(n):
        for i in range(k + 1):
            acc += <u128> a[i] * b[k - i]
        out[k] = <u64> (acc % p)
        acc = acc / p


def mul(tuple a, tuple b, p):
    cdef Py_ssize_t n = len(a)
    cdef u64 cp = <u64> p
    cdef u64* ba = _alloc(n)
    cdef u64* bb = _alloc(n)
    cdef u64* out = _alloc(n)
    try:
        _load(a, ba, n)
        _load(b, bb, n)
        _mul_trunc(ba, bb, out, n, cp)
        return _dump(out, n)
    finally:
        free(ba)
        free(bb)
        free(out)


cdef u64 _inv_mod_prime(u64 a, u64 p):
    # extended Euclid on signed 64-bit; a is a nonzero residue mod prime p
    cdef long long t = 0, newt = 1, r = <long long> p, newr = <long long> a
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <long long> p
    return <u64> t


def inv(tuple a, p):
    """Newton lifting of the unit inverse: z -> z*(2 - a*z), doubling the
    trusted precision each round."""
    cdef Py_ssize_t n = len(a)
    cdef u64 cp = <u64> p
    cdef Py_ssize_t m = 1, m2, i
    cdef u64 borrow, ti, wi
    cdef u64* ba = _alloc(n)
    cdef u64* z = _alloc(n)
    cdef u64* t = _alloc(n)
    cdef u64* w = _alloc(n)
    try:
        _load(a, ba, n)
        if ba[0] == 0:
            raise ZeroDivisionError("inverse of a non-unit residue")
        z[0] = _inv_mod_prime(ba[0], cp)
        while m < n:
            m2 = 2 * m
            if m2 > n:
                m2 = n
            _mul_trunc(ba, z, t, m2, cp)
            # w = (2 - a*z) mod p^m2
            borrow = 0
            for i in range(m2):
                ti = t[i] + borrow
                if i == 0:
                    wi = 2 % cp
                elif i == 1:
                    wi = 2 / cp
                else:
                    wi = 0
                if wi >= ti:
                    w[i] = wi - ti
                    borrow = 0
                else:
                    w[i] = wi + cp - ti
                    borrow = 1
            _mul_trunc(z, w, t, m2, cp)
            for i in range(m2):
                z[i] = t[i]
            m = m2
        return _dump(z, n)
    finally:
        free(ba)
        free(z)
        free(t)
        free(w)


def bilinear_scan(p, level):
    """Same exhaustive successor-step scan as the pure kernel."""
    cdef u64 m = 1
    cdef u64 cp = <u64> p
    cdef int i
    for i in range(level):
        m *= cp
    if m == 1:
        return None
    if m > (<u64> 1) << 31:
        raise OverflowError("modulus too large for the compiled scan")
    cdef u64 z, c, zc, z1
    for z in range(m):
        z1 = z + 1
        if z1 == m:
            z1 = 0
        zc = 0
        for c in range(m):
            if (z1 * c) % m != (zc + c) % m:
                return ("z-additivity", z, c)
            if (z * (c + 1)) % m != (zc + z) % m:
                return ("gamma-additivity", z, c)
            zc += z
            if zc >= m:
                zc -= m
    return None
