"""Batch divisibility tests of candidate monomials against generators.

Both back ends scan generators in the given order and stop at the first
divisor, so they agree on the mask and on the number of tests performed.
Small batches use numpy; large ones a numba kernel (compiled on first use).
"""

from __future__ import annotations

import numpy as np

# below this many candidate x generator x variable comparisons, numpy wins
# over paying the numba import and compile cost
NUMPY_WORK_LIMIT = 4_000_000
_CHUNK_CELLS = 8_000_000

_numba_kernels = None


def _load_numba():
    global _numba_kernels
    if _numba_kernels is not None:
        return _numba_kernels or None
    try:
        import numba
        from numba import njit, prange
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _numba_kernels = False
        return None

    @njit(cache=True, nogil=True)
    def scan_serial(cands, ptr, idx, exp, mask, tests):
        k = ptr.shape[0] - 1
        for r in range(cands.shape[0]):
            found = False
            t = 0
            for g in range(k):
                t += 1
                ok = True
                for q in range(ptr[g], ptr[g + 1]):
                    if exp[q] > cands[r, idx[q]]:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            mask[r] = not found
            tests[r] = t

    @njit(cache=True, nogil=True, parallel=True)
    def scan_parallel(cands, ptr, idx, exp, mask, tests):
        k = ptr.shape[0] - 1
        for r in prange(cands.shape[0]):
            found = False
            t = 0
            for g in range(k):
                t += 1
                ok = True
                for q in range(ptr[g], ptr[g + 1]):
                    if exp[q] > cands[r, idx[q]]:
                        ok = False
                        break
                if ok:
                    found = True
                    break
            mask[r] = not found
            tests[r] = t

    _numba_kernels = (numba, scan_serial, scan_parallel)
    return _numba_kernels


def _sparse(gens: np.ndarray):
    """CSR layout of the nonzero exponents of each generator."""
    rows, cols = np.nonzero(gens)
    ptr = np.zeros(gens.shape[0] + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=gens.shape[0]), out=ptr[1:])
    return ptr, cols.astype(np.int64), gens[rows, cols]


def _numpy_scan(cands: np.ndarray, gens: np.ndarray):
    c, k = cands.shape[0], gens.shape[0]
    mask = np.empty(c, dtype=bool)
    tests = np.empty(c, dtype=np.int64)
    step = max(1, _CHUNK_CELLS // max(1, k * cands.shape[1]))
    for s in range(0, c, step):
        block = cands[s : s + step]
        div = np.all(block[:, None, :] >= gens[None, :, :], axis=2)
        hit = div.any(axis=1)
        mask[s : s + step] = ~hit
        tests[s : s + step] = np.where(hit, div.argmax(axis=1) + 1, k)
    return mask, int(tests.sum())


def outside_ideal(cands: np.ndarray, gens: np.ndarray, threads: int = 1, backend: str = "auto"):
    """Mask of candidate rows divisible by no generator row, and the test count.

    ``gens`` should be ordered cheapest-first (ascending degree): the scan
    exits at the first divisor.  The result does not depend on ``threads``.
    """
    c, k = cands.shape[0], gens.shape[0]
    if c == 0 or k == 0:
        return np.ones(c, dtype=bool), 0
    if backend == "auto":
        backend = "numpy" if c * k * cands.shape[1] <= NUMPY_WORK_LIMIT else "numba"
    kernels = _load_numba() if backend == "numba" else None
    if kernels is None:
        return _numpy_scan(cands, gens)
    numba, serial, parallel = kernels
    cands = np.ascontiguousarray(cands)
    ptr, idx, exp = _sparse(gens)
    mask = np.empty(c, dtype=bool)
    tests = np.empty(c, dtype=np.int64)
    if threads > 1:
        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
        parallel(cands, ptr, idx, exp, mask, tests)
    else:
        serial(cands, ptr, idx, exp, mask, tests)
    return mask, int(tests.sum())
