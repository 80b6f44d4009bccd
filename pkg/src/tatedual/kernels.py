"""Backend selection for the digit kernels.

The compiled extension is preferred when it imported cleanly and the prime
fits its fast path; otherwise the pure-Python kernels run.  Both backends
produce bit-identical results, so selection never changes semantics.  Set
``TATEDUAL_KERNELS=pure`` (or ``compiled``) to pin a backend, or call
``set_backend`` at runtime (used by the benchmark and the test suite).
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

_P_LIMIT = getattr(_compiled, "P_LIMIT", 0)

# "auto" prefers the compiled backend where legal; "pure"/"compiled" pin it.
_mode = "auto"

_env = os.environ.get("TATEDUAL_KERNELS", "").strip().lower()
if _env in ("pure", "compiled", "auto"):
    _mode = _env

# conversions are not hot; one implementation serves both backends
to_int = _pure.to_int
from_int = _pure.from_int


def available_backends() -> tuple[str, ...]:
    return ("pure", "compiled") if _compiled is not None else ("pure",)


def set_backend(name: str) -> None:
    if name not in ("auto", "pure", "compiled"):
        raise ValueError(f"unknown kernel backend {name!r}")
    if name == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernels are not available in this install")
    global _mode
    _mode = name


def active_backend(p: int = 2) -> str:
    """Name of the backend that would serve an operation at prime p."""
    return _select(p).BACKEND


def _select(p):
    if _mode == "pure" or _compiled is None:
        return _pure
    if p >= _P_LIMIT:
        # the compiled column accumulator needs p*p to fit in 128 bits
        return _pure
    if _mode == "compiled":
        return _compiled
    return _compiled


def add(a, b, p):
    return _select(p).add(a, b, p)


def neg(a, p):
    return _select(p).neg(a, p)


def mul(a, b, p):
    return _select(p).mul(a, b, p)


def inv(a, p):
    return _select(p).inv(a, p)


def bilinear_scan(p, level):
    return _select(p).bilinear_scan(p, level)
