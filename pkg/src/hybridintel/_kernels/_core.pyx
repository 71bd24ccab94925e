# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot kernels.

Mirrors ``_pyref`` operation for operation: candidate columns are
ordered by the same numpy stable argsort, the scan uses identical
float64 expressions, and ties resolve to the first candidate in scan
order, so results are bit-identical to the pure-python backend.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"

cdef double GAIN_EPS = 1e-12


def best_split(cnp.float64_t[:, ::1] x, cnp.int64_t[::1] y, int min_leaf):
    """See ``_pyref.best_split``; identical contract and results."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t f = x.shape[1]
    if n < 2 * min_leaf:
        return -1, 0.0, 0.0

    cdef long total_pos = 0
    cdef Py_ssize_t i, j
    for i in range(n):
        total_pos += y[i]
    if total_pos == 0 or total_pos == n:
        return -1, 0.0, 0.0

    cdef double nf = <double> n
    cdef double p_parent = total_pos / nf
    cdef double q_parent = (n - total_pos) / nf
    cdef double parent_gini = 1.0 - p_parent * p_parent - q_parent * q_parent

    # the same stable sort as the pure-python backend, for bit parity
    order_arr = np.ascontiguousarray(np.argsort(np.asarray(x), axis=0, kind="stable"))
    cdef cnp.int64_t[:, ::1] order = order_arr

    cdef int best_feat = -1
    cdef double best_thr = 0.0
    cdef double best_gain = 0.0

    cdef double feat_gain, gain, thr, xa, xb
    cdef Py_ssize_t feat_i
    cdef long pl_count
    cdef double nl, nr, pl, pr, ql, qr, gini_l, gini_r
    cdef double total_pos_f = <double> total_pos

    with nogil:
        for j in range(f):
            feat_gain = -1.0
            feat_i = -1
            pl_count = 0
            for i in range(1, n - min_leaf + 1):
                pl_count += y[order[i - 1, j]]
                if i < min_leaf:
                    continue
                if not x[order[i - 1, j], j] < x[order[i, j], j]:
                    continue
                nl = <double> i
                nr = nf - nl
                pl = <double> pl_count
                pr = total_pos_f - pl
                ql = nl - pl
                qr = nr - pr
                gini_l = 1.0 - (pl / nl) * (pl / nl) - (ql / nl) * (ql / nl)
                gini_r = 1.0 - (pr / nr) * (pr / nr) - (qr / nr) * (qr / nr)
                gain = parent_gini - (nl * gini_l + nr * gini_r) / nf
                if gain > feat_gain:
                    feat_gain = gain
                    feat_i = i

            if feat_i >= 0 and feat_gain > best_gain and feat_gain > GAIN_EPS:
                xa = x[order[feat_i - 1, j], j]
                xb = x[order[feat_i, j], j]
                thr = (xa + xb) / 2.0
                if thr >= xb:
                    thr = xa
                best_feat = <int> j
                best_thr = thr
                best_gain = feat_gain

    return best_feat, best_thr, best_gain


def apply_tree(cnp.int64_t[::1] feature, cnp.float64_t[::1] threshold,
               cnp.int64_t[::1] left, cnp.int64_t[::1] right,
               cnp.float64_t[:, ::1] x):
    """See ``_pyref.apply_tree``; identical contract and results."""
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef Py_ssize_t i
    cdef long node, feat
    with nogil:
        for i in range(n):
            node = 0
            feat = feature[0]
            while feat >= 0:
                if x[i, feat] <= threshold[node]:
                    node = left[node]
                else:
                    node = right[node]
                feat = feature[node]
            out[i] = node
    return out_arr
