# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled float-mode layer sweeps (see _kernels_py.py for the reference)."""

BACKEND = "cython"


cdef inline double _tilde_gamma(int j, int k, int n, double a2) nogil:
    cdef int r = n % 4
    if r < 0:
        r += 4
    if r == 1 or r == 3:
        return 1.0
    if r == 0:
        return a2 if (j % 2 == 0 and k % 2 == 0) else 1.0 / a2
    return a2 if (j % 2 != 0 and k % 2 != 0) else 1.0 / a2


cdef inline double _gamma(int j, int k, int n, double a2) nogil:
    cdef int r = n % 4
    if r < 0:
        r += 4
    if r == 0 or r == 2:
        return 1.0
    if r == 3:
        return a2 if (j % 2 == 0 and k % 2 == 0) else 1.0 / a2
    return a2 if (j % 2 != 0 and k % 2 != 0) else 1.0 / a2


def wave_step(double complex[:, :] nxt, double complex[:, :] cur,
              double complex[:, :] prv, double a2, int n, int off):
    cdef int j, k, rem
    cdef double g
    cdef double complex neighbors
    with nogil:
        for j in range(-(n + 2), n + 3):
            rem = n + 2 - (j if j >= 0 else -j)
            for k in range(-rem, rem + 1):
                if (j + k + n) % 2 != 0:
                    continue
                g = _tilde_gamma(j, k, n, a2)
                neighbors = (cur[j - 1 + off, k + off]
                             + cur[j + 1 + off, k + off]
                             + g * (cur[j + off, k + 1 + off]
                                    + cur[j + off, k - 1 + off]))
                nxt[j + off, k + off] = neighbors / (g + 1.0) - prv[j + off, k + off]


def embedding_step_interior(double complex[:, :] nxt, double complex[:, :] cur,
                            double a2, int n, int off_nxt, int off_cur):
    cdef int j, k, rem
    cdef double g
    cdef double complex neighbors
    with nogil:
        for j in range(-(n - 1), n):
            rem = n - 1 - (j if j >= 0 else -j)
            for k in range(-rem, rem + 1):
                if (j + k + n) % 2 == 0:
                    continue
                g = _gamma(j, k, n, a2)
                neighbors = (nxt[j - 1 + off_nxt, k + off_nxt]
                             + nxt[j + 1 + off_nxt, k + off_nxt]
                             + g * (nxt[j + off_nxt, k + 1 + off_nxt]
                                    + nxt[j + off_nxt, k - 1 + off_nxt]))
                nxt[j + off_nxt, k + off_nxt] = (neighbors / (g + 1.0)
                                                 - cur[j + off_cur, k + off_cur])
