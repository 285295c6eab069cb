"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise
the pure-Python ``_pykernels`` module is. Setting ``ALGBFS_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

if os.environ.get("ALGBFS_PURE_PYTHON", "") not in ("", "0") or _ckernels is None:
    DEFAULT = "python"
else:
    DEFAULT = "compiled"


def available() -> list[str]:
    return sorted(_BACKENDS)


def get(name: str | None = None) -> ModuleType:
    name = name or DEFAULT
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available()}") from None
