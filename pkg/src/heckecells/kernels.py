"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HECKE_PURE=1`` to force the pure-Python kernels.
"""
import os

_NAMES = (
    "interval_union", "kl_row", "mu_from_row", "fold_gen", "accumulate",
    "row_to_dense", "subtract_expansion", "prev_nonzero",
)


def _load(pure: bool):
    if not pure:
        try:
            from . import _ckernels as mod
            return mod, "cython"
        except ImportError:  # extension not built
            pass
    from . import _pykernels as mod
    return mod, "python"


_mod, BACKEND = _load(os.environ.get("HECKE_PURE", "") not in ("", "0"))
globals().update({name: getattr(_mod, name) for name in _NAMES})

__all__ = ["BACKEND", *_NAMES]
