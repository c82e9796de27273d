"""Pure-Python versions of the hot kernels.

Every function here has a compiled twin in ``_ckernels.pyx`` with the same
signature and results; ``kernels`` picks one at import time.
"""


def is_squarefree(n):
    if n < 1:
        raise ValueError(f"is_squarefree needs n >= 1, got {n}")
    for p in (2, 3):
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
    # 6k +/- 1 wheel; dividing out each found prime shrinks the search bound
    d, step = 5, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        d += step
        step = 6 - step
    return True


def squarefree_flags(lower, upper):
    return [is_squarefree(k) for k in range(lower, upper)]


def scaled_d_numerators(torsion, n):
    """Numerators of d(n, i) over the common denominator 4n, i = 0..n//2."""
    g = len(torsion)
    out = []
    for i in range(n // 2 + 1):
        t = torsion[i] if i < g else 0
        out.append((n - 2 * i) ** 2 - n - 8 * n * t)
    return out


def max_scaled_d(torsion, n):
    """Largest scaled numerator and the first index attaining it."""
    best, arg = None, 0
    for i, v in enumerate(scaled_d_numerators(torsion, n)):
        if best is None or v > best:
            best, arg = v, i
    return best, arg
