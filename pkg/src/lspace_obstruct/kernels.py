"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is. Both produce identical results. The compiled path works in 64-bit
integers, so oversized inputs are routed to the Python path, which uses
arbitrary-precision ints.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

# keeps (n - 2i)^2 and 8*n*t_i well inside a signed 64-bit word
_C_LIMIT = 1 << 28
_SQF_LIMIT = 1 << 63

BACKEND = "compiled" if _ckernels is not None else "python"
_impl = _ckernels if _ckernels is not None else _pykernels


def available_backends():
    return ("compiled", "python") if _ckernels is not None else ("python",)


def set_backend(name):
    """Switch backend globally; returns the previous name. Used by tests and benchmarks."""
    global BACKEND, _impl
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    previous = BACKEND
    BACKEND = name
    _impl = _ckernels if name == "compiled" else _pykernels
    return previous


def _small_d_input(torsion, n):
    return n < _C_LIMIT and all(0 <= t < _C_LIMIT for t in torsion)


def is_squarefree(n):
    if n >= _SQF_LIMIT:
        return _pykernels.is_squarefree(n)
    return _impl.is_squarefree(n)


def squarefree_flags(lower, upper):
    if upper > _SQF_LIMIT:
        return _pykernels.squarefree_flags(lower, upper)
    return _impl.squarefree_flags(lower, upper)


def scaled_d_numerators(torsion, n):
    if not _small_d_input(torsion, n):
        return _pykernels.scaled_d_numerators(torsion, n)
    return _impl.scaled_d_numerators(torsion, n)


def max_scaled_d(torsion, n):
    if not _small_d_input(torsion, n):
        return _pykernels.max_scaled_d(torsion, n)
    return _impl.max_scaled_d(torsion, n)
