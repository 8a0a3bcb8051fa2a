"""Integer kernels with a compiled core and a pure-Python fallback.

The Cython extension ``numsgps.kernels._fast`` is used when it imports;
otherwise (or when ``NUMSGPS_PURE=1`` is set) the pure implementation in
``numsgps.kernels._pure`` takes over. Both return identical numpy arrays.

Exactness contract: the compiled kernels run signed 64-bit arithmetic, so
each call is routed there only when a conservative a-priori bound proves
no intermediate value can reach 2**62. Larger inputs fall back to the
pure path (arbitrary-precision), and results that would not fit the
declared 64-bit width raise :class:`IntegerWidthError` instead of ever
wrapping.
"""

from __future__ import annotations

import os

from ..errors import IntegerWidthError
from . import _pure

try:  # pragma: no cover - depends on the build
    from . import _fast
except ImportError:  # pragma: no cover
    _fast = None

_FORCE_PURE = bool(os.environ.get("NUMSGPS_PURE"))
_active = _pure if (_FORCE_PURE or _fast is None) else _fast

#: Name of the backend answering in-envelope calls.
BACKEND = "compiled" if _active is not _pure else "python"

_SAFE = 1 << 62
_WIDTH = 1 << 64


def implementations():
    """Both backends, for benchmarks and equivalence tests."""
    return {"python": _pure, "compiled": _fast}


def sieve_fill(gens, bound):
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if _active is not _pure and bound < _SAFE:
        return _active.sieve_fill(gens, bound)
    return _pure.sieve_fill(gens, bound)


def order_fill(gens, bound, prev=None):
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound >= _WIDTH:
        raise IntegerWidthError(f"order table bound {bound} exceeds 64-bit width")
    if _active is not _pure and bound < _SAFE:
        return _active.order_fill(gens, bound, prev)
    return _pure.order_fill(gens, bound, prev)


def apery_distances(gens, x):
    if x <= 0:
        raise ValueError("modulus must be positive")
    # Any shortest path visits each of the x classes at most once, so
    # distances are below x * max(gens).
    envelope = x * max(gens)
    if envelope >= _WIDTH:
        raise IntegerWidthError(
            f"Apery distances for modulus {x} cannot be certified within 64 bits"
        )
    if _active is not _pure and envelope < _SAFE:
        return _active.apery_distances(gens, x)
    return _pure.apery_distances(gens, x)


def max_sum_count(gens, s):
    if _active is not _pure and 0 <= s < _SAFE:
        return _active.max_sum_count(gens, s)
    return _pure.max_sum_count(gens, s)
