"""Backend selection for the search kernels.

The compiled extension is used when it imports; otherwise (or when
``SYMCONF_PURE_PYTHON`` is set to a non-empty value) the pure-Python
implementation is used.  Both expose the same functions.
"""
import os

from . import _pykernels as pykernels

ckernels = None
if not os.environ.get("SYMCONF_PURE_PYTHON"):
    try:
        from . import _ckernels as ckernels
    except ImportError:  # extension not built
        ckernels = None

active = ckernels if ckernels is not None else pykernels
BACKEND = active.BACKEND

orderly_matrices = active.orderly_matrices
canonical_labeling = active.canonical_labeling
hamiltonian_cycle = active.hamiltonian_cycle
blocking_set = active.blocking_set
permanent = active.permanent

__all__ = [
    "BACKEND", "ckernels", "pykernels", "orderly_matrices", "canonical_labeling",
    "hamiltonian_cycle", "blocking_set", "permanent",
]
