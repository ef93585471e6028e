"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_fallback`` module. Set ``MOOREHODGSON_BACKEND=python`` to force
the fallback (``compiled`` makes a missing extension an error).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = ("compiled", "python")


def available() -> list[str]:
    return [name for name in BACKENDS if name == "python" or _compiled is not None]


def get(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` (``None`` or ``"auto"`` picks the default)."""
    if name in (None, "auto"):
        return DEFAULT
    if name == "python":
        return _fallback
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return _compiled
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")


def name_of(module: ModuleType) -> str:
    return "python" if module is _fallback else "compiled"


_requested = os.environ.get("MOOREHODGSON_BACKEND", "auto").strip().lower()
if _requested in ("", "auto"):
    DEFAULT = _compiled if _compiled is not None else _fallback
else:
    DEFAULT = get(_requested)

ACTIVE = name_of(DEFAULT)
