"""Kernel selection: compiled extension when built, pure Python otherwise.

The SEQCOVER_BACKEND environment variable forces a choice ("c" or
"python"); the default prefers the compiled kernel. Both kernels expose
the same SuffixAutomaton interface and are exercised against each other in
the test suite and the benchmark command.
"""

from __future__ import annotations

import os

from . import automaton as _py_kernel

try:
    from . import _automaton_c as _c_kernel
except ImportError:
    _c_kernel = None

_KERNELS = {"python": _py_kernel}
if _c_kernel is not None:
    _KERNELS["c"] = _c_kernel

PURE_PYTHON = "python"
COMPILED = "c"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def default_backend() -> str:
    forced = os.environ.get("SEQCOVER_BACKEND", "").strip().lower()
    if forced in ("", "auto"):
        return COMPILED if _c_kernel is not None else PURE_PYTHON
    return _normalize(forced)


def automaton_class(backend: str | None = None):
    """The SuffixAutomaton class for the requested backend."""
    name = default_backend() if backend is None else _normalize(backend)
    return _KERNELS[name].SuffixAutomaton, name


def _normalize(name: str) -> str:
    aliases = {"c": COMPILED, "compiled": COMPILED, "ext": COMPILED,
               "python": PURE_PYTHON, "py": PURE_PYTHON, "pure": PURE_PYTHON}
    if name not in aliases:
        raise ValueError(f"unknown backend {name!r}; expected one of {sorted(set(aliases))}")
    resolved = aliases[name]
    if resolved not in _KERNELS:
        raise ValueError(f"backend {resolved!r} is not available in this installation")
    return resolved
