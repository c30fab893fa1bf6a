"""Pure-numpy reference implementations of the hot kernels.

These are the import-time fallback when the compiled extension is not
available. Both backends implement the same algorithms with the same
deterministic scan orders; results agree to floating-point noise (the
compiled loops and BLAS dot products may round differently in the last ulp).
"""

from __future__ import annotations

import numpy as np

# Accepted SMO steps must move alpha by at least this fraction of the
# working tolerance; guards against spinning on degenerate pairs.
STEP_EPS_FACTOR = 1e-4


def smo_solve(
    X: np.ndarray,
    y: np.ndarray,
    C: float = 1.0,
    tol: float = 1e-3,
    max_sweeps: int = 10_000,
) -> tuple[np.ndarray, float, int, bool]:
    """Sequential minimal optimization for the linear soft-margin SVM dual.

    Maximizes sum(alpha) - 0.5 ||sum_i alpha_i y_i x_i||^2 subject to
    0 <= alpha <= C and sum(alpha * y) = 0, using pairwise updates with
    Platt's working-set heuristics in a fixed (ascending-index) scan order,
    so the solve is deterministic.

    Returns (alpha, b, sweeps, converged) where the decision function is
    f(x) = w.x + b with w = X.T @ (alpha * y).
    """
    X = np.ascontiguousarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = X.shape[0]
    alpha = np.zeros(n)
    w = np.zeros(X.shape[1])
    b = 0.0
    step_eps = tol * STEP_EPS_FACTOR

    def error(i: int) -> float:
        return float(X[i] @ w) + b - y[i]

    def take_step(i1: int, i2: int, E2: float) -> bool:
        nonlocal b, w
        if i1 == i2:
            return False
        a1, a2 = alpha[i1], alpha[i2]
        y1, y2 = y[i1], y[i2]
        E1 = error(i1)
        s = y1 * y2
        if s > 0:
            L, H = max(0.0, a1 + a2 - C), min(C, a1 + a2)
        else:
            L, H = max(0.0, a2 - a1), min(C, C + a2 - a1)
        if L >= H:
            return False
        k11 = float(X[i1] @ X[i1])
        k12 = float(X[i1] @ X[i2])
        k22 = float(X[i2] @ X[i2])
        eta = k11 + k22 - 2.0 * k12
        if eta > 0.0:
            a2new = a2 + y2 * (E1 - E2) / eta
            a2new = min(max(a2new, L), H)
        else:
            # Degenerate direction: evaluate the dual objective at both ends
            # of the feasible segment and move to the better one.
            v1 = (E1 + y1 - b) - a1 * y1 * k11 - a2 * y2 * k12
            v2 = (E2 + y2 - b) - a1 * y1 * k12 - a2 * y2 * k22

            def pair_obj(a2p: float) -> float:
                a1p = a1 + s * (a2 - a2p)
                return (
                    0.5 * k11 * a1p * a1p
                    + 0.5 * k22 * a2p * a2p
                    + s * k12 * a1p * a2p
                    + y1 * a1p * v1
                    + y2 * a2p * v2
                    - a1p
                    - a2p
                )

            obj_L, obj_H = pair_obj(L), pair_obj(H)
            if obj_L < obj_H - step_eps:
                a2new = L
            elif obj_L > obj_H + step_eps:
                a2new = H
            else:
                return False
        if abs(a2new - a2) < step_eps * (a2new + a2 + step_eps):
            return False
        a1new = a1 + s * (a2 - a2new)
        d1 = y1 * (a1new - a1)
        d2 = y2 * (a2new - a2)
        b1 = b - (E1 + d1 * k11 + d2 * k12)
        b2 = b - (E2 + d1 * k12 + d2 * k22)
        if 0.0 < a1new < C:
            b = b1
        elif 0.0 < a2new < C:
            b = b2
        else:
            b = 0.5 * (b1 + b2)
        w += d1 * X[i1] + d2 * X[i2]
        alpha[i1] = a1new
        alpha[i2] = a2new
        return True

    def examine(i2: int) -> int:
        a2 = alpha[i2]
        E2 = error(i2)
        r2 = E2 * y[i2]
        if not ((r2 < -tol and a2 < C) or (r2 > tol and a2 > 0.0)):
            return 0
        nb = np.flatnonzero((alpha > 0.0) & (alpha < C))
        if nb.size > 1:
            E_nb = X[nb] @ w + b - y[nb]
            i1 = int(nb[np.argmax(np.abs(E_nb - E2))])
            if take_step(i1, i2, E2):
                return 1
        for i1 in nb:
            if take_step(int(i1), i2, E2):
                return 1
        for i1 in range(n):
            if take_step(i1, i2, E2):
                return 1
        return 0

    examine_all = True
    num_changed = 0
    sweeps = 0
    while (num_changed > 0 or examine_all) and sweeps < max_sweeps:
        sweeps += 1
        num_changed = 0
        if examine_all:
            for i in range(n):
                num_changed += examine(i)
        else:
            for i in np.flatnonzero((alpha > 0.0) & (alpha < C)):
                num_changed += examine(int(i))
        if examine_all:
            examine_all = False
        elif num_changed == 0:
            examine_all = True
    converged = sweeps < max_sweeps
    return alpha, b, sweeps, converged


def levinson_batch(r: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Levinson-Durbin recursion over a batch of autocorrelation sequences.

    r has shape (frames, order+1); returns (a, err, valid) where a[:, 0] = 1
    and 1 + sum_j a[f, j] z^-j is the prediction-error filter of frame f.
    Frames with non-positive energy or an unstable recursion (reflection
    coefficient outside (-1, 1)) are flagged invalid and zero-filled.
    """
    r = np.asarray(r, dtype=np.float64)
    n_frames, p1 = r.shape
    a = np.zeros((n_frames, p1))
    a[:, 0] = 1.0
    err = r[:, 0].copy()
    valid = err > 0.0
    err = np.where(valid, err, 1.0)
    for i in range(1, p1):
        acc = r[:, i].copy()
        if i > 1:
            acc += np.einsum("fj,fj->f", a[:, 1:i], r[:, i - 1:0:-1])
        k = -acc / err
        valid &= np.isfinite(k) & (np.abs(k) < 1.0)
        k = np.where(valid, k, 0.0)
        if i > 1:
            # copy: the reversed slice aliases the slice being updated
            a[:, 1:i] += k[:, None] * a[:, i - 1:0:-1].copy()
        a[:, i] = k
        err *= 1.0 - k * k
        valid &= err > 0.0
    a[~valid] = 0.0
    a[~valid, 0] = 1.0
    err = np.where(valid, err, 0.0)
    return a, err, valid
