"""Compiled inner loops for exhaustive coloring scans, with pure-Python
twins used when the JIT compiler is unavailable.

A t-coloring of the m-vertex ordered complete graph is encoded as an
integer code: digit i in base t is the color of edge number i in the
lexicographic edge order.  Scans walk a strided code range, optionally
skip codes that are not the lexicographically smallest color vector in
their symmetry orbit, and test the target predicate "some color class
contains one of the precomputed target edge sets" via bitmask inclusion.

Kernel results are (enumerated, visited, first_bad_code):
  enumerated  codes examined (including symmetry skips)
  visited     codes that passed the canonical-form filter
  first_bad   smallest examined code failing the predicate, or -1
Scans stop at the first predicate failure when stop_on_fail is set.
"""

import numpy as np

try:  # pragma: no cover - exercised implicitly by which twin runs
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def _is_canonical_t2(code, ne, rev_perm, use_rev, use_swap):
    """True when no symmetry image of the color vector is lexicographically
    smaller.  Group elements beyond identity: swap, reversal, both."""
    full = (np.int64(1) << ne) - 1
    for elem in range(1, 4):
        flip = elem & 1
        rev = elem >> 1
        if flip and not use_swap:
            continue
        if rev and not use_rev:
            continue
        for i in range(ne):
            src = rev_perm[i] if rev else i
            tb = (code >> src) & 1
            if flip:
                tb = 1 - tb
            ob = (code >> i) & 1
            if tb < ob:
                return False
            if tb > ob:
                break
    return True


@njit(cache=True)
def scan_t2(start, stop, stride, ne, rev_perm, use_rev, use_swap,
            targets, offsets, check_predicate, stop_on_fail):
    """Scan codes start, start+stride, ... below stop for t = 2."""
    full = (np.int64(1) << ne) - 1
    enumerated = np.int64(0)
    visited = np.int64(0)
    first_bad = np.int64(-1)
    ncolors = offsets.shape[0] - 1
    code = start
    while code < stop:
        enumerated += 1
        if (use_rev or use_swap) and not _is_canonical_t2(
                code, ne, rev_perm, use_rev, use_swap):
            code += stride
            continue
        visited += 1
        if check_predicate:
            holds = False
            for c in range(ncolors):
                mask = code if c == 1 else (full ^ code)
                for k in range(offsets[c], offsets[c + 1]):
                    if targets[k] & ~mask == 0:
                        holds = True
                        break
                if holds:
                    break
            if not holds:
                first_bad = code
                if stop_on_fail:
                    return enumerated, visited, first_bad
        code += stride
    return enumerated, visited, first_bad


@njit(cache=True)
def scan_digits(start, stop, stride, ne, t, rev_perm, colmaps, elem_rev,
                targets, offsets, check_predicate, stop_on_fail):
    """General-t scan; colmaps[k] is the color relabeling of group element
    k (k = 0 is identity and is skipped), elem_rev[k] marks reversal."""
    digits = np.empty(ne, dtype=np.int64)
    enumerated = np.int64(0)
    visited = np.int64(0)
    first_bad = np.int64(-1)
    nelems = colmaps.shape[0]
    ncolors = offsets.shape[0] - 1
    code = start
    while code < stop:
        enumerated += 1
        tmp = code
        for i in range(ne):
            digits[i] = tmp % t
            tmp //= t
        canonical = True
        for k in range(1, nelems):
            rev = elem_rev[k]
            for i in range(ne):
                src = rev_perm[i] if rev else i
                tb = colmaps[k, digits[src]]
                ob = digits[i]
                if tb < ob:
                    canonical = False
                    break
                if tb > ob:
                    break
            if not canonical:
                break
        if not canonical:
            code += stride
            continue
        visited += 1
        if check_predicate:
            holds = False
            for c in range(ncolors):
                mask = np.int64(0)
                for i in range(ne):
                    if digits[i] == c:
                        mask |= np.int64(1) << i
                for k in range(offsets[c], offsets[c + 1]):
                    if targets[k] & ~mask == 0:
                        holds = True
                        break
                if holds:
                    break
            if not holds:
                first_bad = code
                if stop_on_fail:
                    return enumerated, visited, first_bad
        code += stride
    return enumerated, visited, first_bad


def scan_t2_py(start, stop, stride, ne, rev_perm, use_rev, use_swap,
               targets, offsets, check_predicate, stop_on_fail):
    """Pure-Python twin of scan_t2 with identical semantics."""
    full = (1 << ne) - 1
    enumerated = visited = 0
    first_bad = -1
    ncolors = len(offsets) - 1
    for code in range(start, stop, stride):
        enumerated += 1
        canonical = True
        for elem in range(1, 4):
            flip, rev = elem & 1, elem >> 1
            if (flip and not use_swap) or (rev and not use_rev):
                continue
            for i in range(ne):
                src = rev_perm[i] if rev else i
                tb = (code >> src) & 1
                if flip:
                    tb = 1 - tb
                ob = (code >> i) & 1
                if tb < ob:
                    canonical = False
                    break
                if tb > ob:
                    break
            if not canonical:
                break
        if (use_rev or use_swap) and not canonical:
            continue
        visited += 1
        if check_predicate:
            holds = False
            for c in range(ncolors):
                mask = code if c == 1 else (full ^ code)
                if any(tm & ~mask == 0
                       for tm in targets[offsets[c]:offsets[c + 1]]):
                    holds = True
                    break
            if not holds:
                first_bad = code
                if stop_on_fail:
                    return enumerated, visited, first_bad
    return enumerated, visited, first_bad


def scan_digits_py(start, stop, stride, ne, t, rev_perm, colmaps, elem_rev,
                   targets, offsets, check_predicate, stop_on_fail):
    """Pure-Python twin of scan_digits with identical semantics."""
    enumerated = visited = 0
    first_bad = -1
    nelems = len(colmaps)
    ncolors = len(offsets) - 1
    for code in range(start, stop, stride):
        enumerated += 1
        digits = []
        tmp = code
        for _ in range(ne):
            digits.append(tmp % t)
            tmp //= t
        canonical = True
        for k in range(1, nelems):
            rev = elem_rev[k]
            for i in range(ne):
                src = rev_perm[i] if rev else i
                tb = colmaps[k][digits[src]]
                ob = digits[i]
                if tb < ob:
                    canonical = False
                    break
                if tb > ob:
                    break
            if not canonical:
                break
        if not canonical:
            continue
        visited += 1
        if check_predicate:
            holds = False
            for c in range(ncolors):
                mask = 0
                for i in range(ne):
                    if digits[i] == c:
                        mask |= 1 << i
                if any(tm & ~mask == 0
                       for tm in targets[offsets[c]:offsets[c + 1]]):
                    holds = True
                    break
            if not holds:
                first_bad = code
                if stop_on_fail:
                    return enumerated, visited, first_bad
    return enumerated, visited, first_bad
