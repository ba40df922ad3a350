"""Pure-Python reference kernels for the float-mode layer sweeps.

Same contracts as the compiled extension in ``_kernels.pyx``; kept as plain
loops so the two implementations stay independently checkable.
"""

BACKEND = "python"


def _tilde_gamma(j, k, n, a2):
    if n % 2 == 1:
        return 1.0
    if n % 4 == 0:
        return a2 if j % 2 == 0 and k % 2 == 0 else 1.0 / a2
    return a2 if j % 2 == 1 and k % 2 == 1 else 1.0 / a2


def wave_step(nxt, cur, prv, a2, n, off):
    """Fill layer n+1 of the wave recurrence from layers n and n-1.

    Arrays are dense complex grids indexed [j + off, k + off]; all step sites
    |j| + |k| <= n + 2 with j + k + n even are computed, without sources.
    """
    for j in range(-(n + 2), n + 3):
        rem = n + 2 - abs(j)
        for k in range(-rem, rem + 1):
            if (j + k + n) % 2 != 0:
                continue
            g = _tilde_gamma(j, k, n, a2)
            neighbors = (
                cur[j - 1 + off, k + off]
                + cur[j + 1 + off, k + off]
                + g * (cur[j + off, k + 1 + off] + cur[j + off, k - 1 + off])
            )
            nxt[j + off, k + off] = neighbors / (g + 1.0) - prv[j + off, k + off]


def _gamma(j, k, n, a2):
    if n % 2 == 0:
        return 1.0
    if n % 4 == 3:
        return a2 if j % 2 == 0 and k % 2 == 0 else 1.0 / a2
    return a2 if j % 2 == 1 and k % 2 == 1 else 1.0 / a2


def embedding_step_interior(nxt, cur, a2, n, off_nxt, off_cur):
    """Rule-5 sweep: update sites |j| + |k| < n with j + k + n odd in place.

    ``nxt`` must already hold the rule (1)-(4) values at all other indices.
    """
    for j in range(-(n - 1), n):
        rem = n - 1 - abs(j)
        for k in range(-rem, rem + 1):
            if (j + k + n) % 2 != 1:
                continue
            g = _gamma(j, k, n, a2)
            neighbors = (
                nxt[j - 1 + off_nxt, k + off_nxt]
                + nxt[j + 1 + off_nxt, k + off_nxt]
                + g * (nxt[j + off_nxt, k + 1 + off_nxt] + nxt[j + off_nxt, k - 1 + off_nxt])
            )
            nxt[j + off_nxt, k + off_nxt] = neighbors / (g + 1.0) - cur[
                j + off_cur, k + off_cur
            ]
