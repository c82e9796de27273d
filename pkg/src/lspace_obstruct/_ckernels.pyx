# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference versions."""

ctypedef unsigned long long u64
ctypedef long long i64


cdef bint _sqfree(u64 n) noexcept nogil:
    cdef u64 d = 5, step = 2
    if n % 2 == 0:
        n //= 2
        if n % 2 == 0:
            return False
    if n % 3 == 0:
        n //= 3
        if n % 3 == 0:
            return False
    while d <= n // d:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        d += step
        step = 6 - step
    return True


def is_squarefree(n):
    if n < 1:
        raise ValueError(f"is_squarefree needs n >= 1, got {n}")
    return bool(_sqfree(<u64>n))


def squarefree_flags(i64 lower, i64 upper):
    cdef i64 k
    cdef list out = []
    if lower < 1 and upper > lower:
        raise ValueError(f"is_squarefree needs n >= 1, got {lower}")
    for k in range(lower, upper):
        out.append(bool(_sqfree(<u64>k)))
    return out


def scaled_d_numerators(torsion, i64 n):
    cdef i64 g = len(torsion), i, t, r
    cdef list out = []
    for i in range(n // 2 + 1):
        t = torsion[i] if i < g else 0
        r = n - 2 * i
        out.append(r * r - n - 8 * n * t)
    return out


def max_scaled_d(torsion, i64 n):
    cdef i64 g = len(torsion), i, t, r, v, best = 0, arg = 0
    cdef bint first = True
    for i in range(n // 2 + 1):
        t = torsion[i] if i < g else 0
        r = n - 2 * i
        v = r * r - n - 8 * n * t
        if first or v > best:
            best, arg, first = v, i, False
    return best, arg
