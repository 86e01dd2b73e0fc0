"""Integer exponent-vector kernels, numba-jitted with a pure-numpy fallback.

The two hot loops of the reduction engine live here: finding a divisor among
the leading monomials of a basis, and masking a batch of monomials against a
divisor set.  Both exist in a numba `@njit` version and a vectorized numpy
version; `ARCK_KERNELS=numba|numpy` selects the backend at import time
(default: numba when importable).  `benchmarks/bench_kernels.py` compares the
two paths.
"""

from __future__ import annotations

import os

import numpy as np


def find_divisor_numpy(lms: np.ndarray, target: np.ndarray) -> int:
    """Index of the first row of `lms` dividing `target`, or -1."""
    if lms.shape[0] == 0:
        return -1
    hits = np.flatnonzero((lms <= target).all(axis=1))
    return int(hits[0]) if hits.size else -1


def divisible_any_numpy(monos: np.ndarray, divisors: np.ndarray) -> np.ndarray:
    """Boolean mask: row i is divisible by some row of `divisors`."""
    if monos.shape[0] == 0:
        return np.zeros(0, dtype=np.bool_)
    if divisors.shape[0] == 0:
        return np.zeros(monos.shape[0], dtype=np.bool_)
    return (monos[:, None, :] >= divisors[None, :, :]).all(axis=2).any(axis=1)


try:
    from numba import njit

    @njit(cache=True)
    def find_divisor_numba(lms, target):  # pragma: no cover - mirrored by numpy path
        for i in range(lms.shape[0]):
            ok = True
            for j in range(lms.shape[1]):
                if lms[i, j] > target[j]:
                    ok = False
                    break
            if ok:
                return i
        return -1

    @njit(cache=True)
    def divisible_any_numba(monos, divisors):  # pragma: no cover
        out = np.zeros(monos.shape[0], dtype=np.bool_)
        for i in range(monos.shape[0]):
            for k in range(divisors.shape[0]):
                ok = True
                for j in range(monos.shape[1]):
                    if divisors[k, j] > monos[i, j]:
                        ok = False
                        break
                if ok:
                    out[i] = True
                    break
        return out

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    find_divisor_numba = None
    divisible_any_numba = None
    HAVE_NUMBA = False


find_divisor = find_divisor_numpy
divisible_any = divisible_any_numpy
_BACKEND = "numpy"


def set_backend(name: str) -> None:
    """Select 'numba' or 'numpy' kernels for the whole process."""
    global find_divisor, divisible_any, _BACKEND
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        find_divisor = find_divisor_numba
        divisible_any = divisible_any_numba
    elif name == "numpy":
        find_divisor = find_divisor_numpy
        divisible_any = divisible_any_numpy
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    _BACKEND = name


def get_backend() -> str:
    return _BACKEND


_requested = os.environ.get("ARCK_KERNELS", "").strip().lower()
if _requested in ("numba", "numpy"):
    set_backend(_requested)
elif HAVE_NUMBA:
    set_backend("numba")
