"""Compiled inner loops: cyclic complex Jacobi and the theta-sweep for omega.

Everything here works on raw complex128 arrays and reports failure through
return flags; validation and exceptions live in the Python wrappers.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@njit(cache=True)
def _off_mass(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                z = a[i, j]
                acc += z.real * z.real + z.imag * z.imag
    return math.sqrt(acc)


@njit(cache=True)
def jacobi_eigh(a, want_vectors, off_tol, max_sweeps):
    """Cyclic Jacobi on a Hermitian matrix.

    Returns ``(values, vectors, converged, sweeps)`` with values sorted in
    descending order. ``vectors`` is a 1x1 placeholder when not requested.
    """
    n = a.shape[0]
    A = a.copy()
    if want_vectors:
        V = np.eye(n, dtype=np.complex128)
    else:
        V = np.eye(1, dtype=np.complex128)

    fro = 0.0
    for i in range(n):
        for j in range(n):
            z = a[i, j]
            fro += z.real * z.real + z.imag * z.imag
    thresh = off_tol * (1.0 + math.sqrt(fro))

    for i in range(n):
        A[i, i] = A[i, i].real

    converged = False
    sweeps = 0
    while True:
        if _off_mass(A) <= thresh:
            converged = True
            break
        if sweeps >= max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                b = abs(apq)
                if b == 0.0:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                ph = apq / b
                cph = ph.conjugate()
                theta = (aqq - app) / (2.0 * b)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^* A J with J = [[c, s], [-s conj(ph), c conj(ph)]] on (p, q);
                # only columns p, q are rotated, rows follow by Hermitian symmetry
                s_cph = s * cph
                c_cph = c * cph
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = A[k, p]
                    akq = A[k, q]
                    nkp = c * akp - s_cph * akq
                    nkq = s * akp + c_cph * akq
                    A[k, p] = nkp
                    A[k, q] = nkq
                    A[p, k] = nkp.conjugate()
                    A[q, k] = nkq.conjugate()
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = app - t * b
                A[q, q] = aqq + t * b
                if want_vectors:
                    for k in range(n):
                        vkp = V[k, p]
                        vkq = V[k, q]
                        V[k, p] = c * vkp - s_cph * vkq
                        V[k, q] = s * vkp + c_cph * vkq

    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i].real
    order = np.argsort(-w)
    w = w[order]
    if want_vectors:
        V = V[:, order]
    return w, V, converged, sweeps


@njit(cache=True)
def _rotated_extremes(H, K, theta, off_tol, max_sweeps):
    # Hermitian part of e^{i theta} (H + iK) is cos(theta) H - sin(theta) K
    M = math.cos(theta) * H - math.sin(theta) * K
    w, _, ok, _ = jacobi_eigh(M, False, off_tol, max_sweeps)
    return w[0], w[w.shape[0] - 1], ok


@njit(cache=True)
def _golden_max(H, K, a, b, width, off_tol, max_sweeps):
    c = a + _INV_PHI2 * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, _, ok1 = _rotated_extremes(H, K, c, off_tol, max_sweeps)
    fd, _, ok2 = _rotated_extremes(H, K, d, off_tol, max_sweeps)
    ok = ok1 and ok2
    best = max(fc, fd)
    while b - a > width:
        if fc > fd:
            b = d
            d = c
            fd = fc
            c = a + _INV_PHI2 * (b - a)
            fc, _, okc = _rotated_extremes(H, K, c, off_tol, max_sweeps)
            ok = ok and okc
            best = max(best, fc)
        else:
            a = c
            c = d
            fc = fd
            d = a + _INV_PHI * (b - a)
            fd, _, okd = _rotated_extremes(H, K, d, off_tol, max_sweeps)
            ok = ok and okd
            best = max(best, fd)
    return best, ok


@njit(cache=True)
def theta_grid(H, K, resolution, off_tol, max_sweeps):
    """f(theta_j) = lambda_max(cos H - sin K) on a uniform grid of [0, 2pi)."""
    N = resolution
    f = np.empty(N)
    ok = True
    step = 2.0 * math.pi / N
    if N % 2 == 0:
        # f(theta + pi) = -lambda_min(H(theta)), so one solve fills two slots
        half = N // 2
        for j in range(half):
            hi, lo, okj = _rotated_extremes(H, K, j * step, off_tol, max_sweeps)
            ok = ok and okj
            f[j] = hi
            f[j + half] = -lo
    else:
        for j in range(N):
            hi, _, okj = _rotated_extremes(H, K, j * step, off_tol, max_sweeps)
            ok = ok and okj
            f[j] = hi
    return f, ok


@njit(cache=True)
def numerical_radius_kernel(H, K, resolution, width, noise, off_tol, max_sweeps):
    """Grid scan plus golden-section refinement of every grid-local maximum.

    Points within ``noise`` of both neighbours count as local maxima; runs of
    consecutive such points (plateaus) are refined once, around their best
    point. Returns ``(omega, ok)``.
    """
    N = resolution
    f, ok = theta_grid(H, K, N, off_tol, max_sweeps)
    step = 2.0 * math.pi / N
    best = f.max()

    cand = np.zeros(N, dtype=np.bool_)
    if N < 3:
        cand[:] = True
    else:
        for j in range(N):
            left = f[(j - 1) % N]
            right = f[(j + 1) % N]
            cand[j] = f[j] >= left - noise and f[j] >= right - noise

    ncand = 0
    for j in range(N):
        if cand[j]:
            ncand += 1
    if ncand == 0:
        return best, ok

    if ncand == N:
        j = int(np.argmax(f))
        th = j * step
        val, okg = _golden_max(H, K, th - step, th + step, width, off_tol, max_sweeps)
        return max(best, val), ok and okg

    # start scanning just after a non-candidate so runs never straddle the wrap
    start = 0
    for j in range(N):
        if not cand[j]:
            start = j + 1
            break
    k = 0
    while k < N:
        j = (start + k) % N
        if not cand[j]:
            k += 1
            continue
        run_best = j
        while k < N and cand[(start + k) % N]:
            jj = (start + k) % N
            if f[jj] > f[run_best]:
                run_best = jj
            k += 1
        th = run_best * step
        val, okg = _golden_max(H, K, th - step, th + step, width, off_tol, max_sweeps)
        ok = ok and okg
        if val > best:
            best = val
    return best, ok
