# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Mirrors kernels.pyref exactly: same algorithms, same deterministic scan
orders. Kept in plain C loops so the per-step Python overhead of the SMO
working-set search disappears.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF STEP_EPS_FACTOR = 1e-4


cdef inline double _dot(double[:, ::1] X, Py_ssize_t i, Py_ssize_t j, Py_ssize_t d) nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t t
    for t in range(d):
        acc += X[i, t] * X[j, t]
    return acc


cdef inline double _row_dot_w(double[:, ::1] X, double[::1] w, Py_ssize_t i, Py_ssize_t d) nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t t
    for t in range(d):
        acc += X[i, t] * w[t]
    return acc


cdef class _SmoState:
    cdef double[:, ::1] X
    cdef double[::1] y
    cdef double[::1] alpha
    cdef double[::1] w
    cdef double b
    cdef double C
    cdef double tol
    cdef double step_eps
    cdef Py_ssize_t n
    cdef Py_ssize_t d

    cdef double error(self, Py_ssize_t i) nogil:
        return _row_dot_w(self.X, self.w, i, self.d) + self.b - self.y[i]

    cdef bint take_step(self, Py_ssize_t i1, Py_ssize_t i2, double E2) nogil:
        cdef double a1, a2, y1, y2, E1, s, L, H
        cdef double k11, k12, k22, eta, a2new, a1new
        cdef double v1, v2, obj_L, obj_H, a1p
        cdef double d1, d2, b1, b2
        cdef Py_ssize_t t
        if i1 == i2:
            return False
        a1 = self.alpha[i1]
        a2 = self.alpha[i2]
        y1 = self.y[i1]
        y2 = self.y[i2]
        E1 = self.error(i1)
        s = y1 * y2
        if s > 0.0:
            L = a1 + a2 - self.C
            if L < 0.0:
                L = 0.0
            H = a1 + a2
            if H > self.C:
                H = self.C
        else:
            L = a2 - a1
            if L < 0.0:
                L = 0.0
            H = self.C + a2 - a1
            if H > self.C:
                H = self.C
        if L >= H:
            return False
        k11 = _dot(self.X, i1, i1, self.d)
        k12 = _dot(self.X, i1, i2, self.d)
        k22 = _dot(self.X, i2, i2, self.d)
        eta = k11 + k22 - 2.0 * k12
        if eta > 0.0:
            a2new = a2 + y2 * (E1 - E2) / eta
            if a2new < L:
                a2new = L
            elif a2new > H:
                a2new = H
        else:
            v1 = (E1 + y1 - self.b) - a1 * y1 * k11 - a2 * y2 * k12
            v2 = (E2 + y2 - self.b) - a1 * y1 * k12 - a2 * y2 * k22
            a1p = a1 + s * (a2 - L)
            obj_L = (0.5 * k11 * a1p * a1p + 0.5 * k22 * L * L
                     + s * k12 * a1p * L + y1 * a1p * v1 + y2 * L * v2
                     - a1p - L)
            a1p = a1 + s * (a2 - H)
            obj_H = (0.5 * k11 * a1p * a1p + 0.5 * k22 * H * H
                     + s * k12 * a1p * H + y1 * a1p * v1 + y2 * H * v2
                     - a1p - H)
            if obj_L < obj_H - self.step_eps:
                a2new = L
            elif obj_L > obj_H + self.step_eps:
                a2new = H
            else:
                return False
        if a2new - a2 < self.step_eps * (a2new + a2 + self.step_eps):
            if a2 - a2new < self.step_eps * (a2new + a2 + self.step_eps):
                return False
        a1new = a1 + s * (a2 - a2new)
        d1 = y1 * (a1new - a1)
        d2 = y2 * (a2new - a2)
        b1 = self.b - (E1 + d1 * k11 + d2 * k12)
        b2 = self.b - (E2 + d1 * k12 + d2 * k22)
        if 0.0 < a1new < self.C:
            self.b = b1
        elif 0.0 < a2new < self.C:
            self.b = b2
        else:
            self.b = 0.5 * (b1 + b2)
        for t in range(self.d):
            self.w[t] += d1 * self.X[i1, t] + d2 * self.X[i2, t]
        self.alpha[i1] = a1new
        self.alpha[i2] = a2new
        return True

    cdef int examine(self, Py_ssize_t i2) nogil:
        cdef double a2, E2, r2, E1, gap, best_gap
        cdef Py_ssize_t i1, best, n_nb
        a2 = self.alpha[i2]
        E2 = self.error(i2)
        r2 = E2 * self.y[i2]
        if not ((r2 < -self.tol and a2 < self.C) or (r2 > self.tol and a2 > 0.0)):
            return 0
        # second-choice heuristic: max |E1 - E2| over non-bound alphas
        best = -1
        best_gap = -1.0
        n_nb = 0
        for i1 in range(self.n):
            if 0.0 < self.alpha[i1] < self.C:
                n_nb += 1
                E1 = self.error(i1)
                gap = E1 - E2
                if gap < 0.0:
                    gap = -gap
                if gap > best_gap:
                    best_gap = gap
                    best = i1
        if n_nb > 1:
            if self.take_step(best, i2, E2):
                return 1
        for i1 in range(self.n):
            if 0.0 < self.alpha[i1] < self.C:
                if self.take_step(i1, i2, E2):
                    return 1
        for i1 in range(self.n):
            if self.take_step(i1, i2, E2):
                return 1
        return 0


def smo_solve(X, y, double C=1.0, double tol=1e-3, int max_sweeps=10_000):
    """Compiled Platt SMO; see kernels.pyref.smo_solve for the contract."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] Xc = \
        np.ascontiguousarray(X, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yc = \
        np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = Xc.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] alpha = np.zeros(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w = np.zeros(Xc.shape[1])

    cdef _SmoState st = _SmoState()
    st.X = Xc
    st.y = yc
    st.alpha = alpha
    st.w = w
    st.b = 0.0
    st.C = C
    st.tol = tol
    st.step_eps = tol * STEP_EPS_FACTOR
    st.n = n
    st.d = Xc.shape[1]

    cdef bint examine_all = True
    cdef int num_changed = 0
    cdef int sweeps = 0
    cdef Py_ssize_t i
    while (num_changed > 0 or examine_all) and sweeps < max_sweeps:
        sweeps += 1
        num_changed = 0
        if examine_all:
            for i in range(n):
                num_changed += st.examine(i)
        else:
            for i in range(n):
                if 0.0 < st.alpha[i] < st.C:
                    num_changed += st.examine(i)
        if examine_all:
            examine_all = False
        elif num_changed == 0:
            examine_all = True
    converged = sweeps < max_sweeps
    return alpha, st.b, sweeps, converged


def levinson_batch(r):
    """Compiled batched Levinson-Durbin; see kernels.pyref.levinson_batch."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] rc = \
        np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n_frames = rc.shape[0]
    cdef Py_ssize_t p1 = rc.shape[1]
    cdef Py_ssize_t p = p1 - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] a = np.zeros((n_frames, p1))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] err = np.zeros(n_frames)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] valid = np.zeros(n_frames, dtype=np.uint8)
    cdef double[:, ::1] av = a
    cdef double[:, ::1] rv = rc
    cdef double[::1] ev = err
    cdef cnp.uint8_t[::1] vv = valid
    cdef Py_ssize_t f, i, j
    cdef double e, k, acc, tmp_lo, tmp_hi
    with nogil:
        for f in range(n_frames):
            av[f, 0] = 1.0
            e = rv[f, 0]
            if e <= 0.0:
                ev[f] = 0.0
                vv[f] = 0
                continue
            vv[f] = 1
            for i in range(1, p1):
                acc = rv[f, i]
                for j in range(1, i):
                    acc += av[f, j] * rv[f, i - j]
                k = -acc / e
                if not (-1.0 < k < 1.0):
                    vv[f] = 0
                    break
                # symmetric in-place update avoids a scratch buffer
                for j in range(1, (i + 1) // 2):
                    tmp_lo = av[f, j]
                    tmp_hi = av[f, i - j]
                    av[f, j] = tmp_lo + k * tmp_hi
                    av[f, i - j] = tmp_hi + k * tmp_lo
                if i >= 2 and i % 2 == 0:
                    av[f, i // 2] += k * av[f, i // 2]
                av[f, i] = k
                e *= 1.0 - k * k
                if e <= 0.0:
                    vv[f] = 0
                    break
            if vv[f]:
                ev[f] = e
            else:
                for j in range(1, p1):
                    av[f, j] = 0.0
                av[f, 0] = 1.0
                ev[f] = 0.0
    return a, err, valid.astype(bool)
