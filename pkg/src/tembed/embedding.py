"""Perfect t-embedding and origami recurrences for the two-periodic diamond.

Positions are indexed by dual vertices: inner (j, k) with |j| + |k| < n plus
the four corner vertices (+-n, 0), (0, +-n).  One step applies, in order, the
corner pinning, the two boundary convex-combination rules, the interior copy
and the four-neighbor interior update.  Exact mode keeps Gaussian rationals;
float mode runs dense complex arrays through the kernel backend.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .rings import GR_ZERO, GaussianRational, I, gaussian, rational, to_float_complex
from .wavefield import DirectionalSolver


def alpha(n: int, a):
    """Corner-rule coefficient."""
    if n % 2 == 1:
        return rational(1)
    a2 = rational(a) ** 2
    return a2 if n % 4 == 2 else 1 / a2


def beta(j: int, n: int, a):
    """Boundary-rule coefficient."""
    if n % 2 == 1:
        return rational(1)
    a2 = rational(a) ** 2
    if (n % 4 == 0 and j % 2 == 0) or (n % 4 == 2 and j % 2 == 1):
        return a2
    return 1 / a2


def gamma_coeff(j: int, k: int, n: int, a):
    """Interior-rule coefficient (the face weight driving the spider move)."""
    if n % 2 == 0:
        return rational(1)
    a2 = rational(a) ** 2
    if (n % 4 == 3 and j % 2 == 0 and k % 2 == 0) or (
        n % 4 == 1 and j % 2 == 1 and k % 2 == 1
    ):
        return a2
    return 1 / a2


class Embedding:
    """Positions of the t-embedding and origami map at one stage."""

    def __init__(self, a, stage: int, mode: str, tvals: dict, ovals: dict):
        self.a = rational(a)
        self.stage = stage
        self.mode = mode
        self.tvals = tvals
        self.ovals = ovals

    def vertices(self):
        n = self.stage
        yield from ((j, k) for j in range(-n + 1, n)
                    for k in range(-(n - 1 - abs(j)), n - abs(j)))
        yield from ((n, 0), (-n, 0), (0, n), (0, -n))

    def T(self, j: int, k: int):
        return self.tvals[(j, k)]

    def O(self, j: int, k: int):
        return self.ovals[(j, k)]

    def as_complex(self):
        tc = {key: to_float_complex(val) for key, val in self.tvals.items()}
        oc = {key: to_float_complex(val) for key, val in self.ovals.items()}
        return tc, oc


def _corner_values(a, n: int, mode: str, origami: bool):
    if mode == "float":
        one, ia = 1.0 + 0j, 1j * float(a)
    else:
        one, ia = gaussian(1), I * rational(a)
    if origami:
        return {(n, 0): one, (-n, 0): one, (0, n): ia, (0, -n): ia}
    return {(n, 0): one, (-n, 0): -one, (0, n): ia, (0, -n): -ia}


def base_embedding(a, mode: str = "exact") -> Embedding:
    """Stage-1 square: pinned corners, centered at zero, origami base from
    the wave-field assembly so both constructions share a base point."""
    a = rational(a)
    solver = DirectionalSolver(a, 1, mode=mode)
    tvals = _corner_values(a, 1, mode, origami=False)
    ovals = _corner_values(a, 1, mode, origami=True)
    tvals[(0, 0)] = 0j if mode == "float" else GR_ZERO
    ovals[(0, 0)] = solver.assemble_O(0, 0, 1)
    return Embedding(a, 1, mode, tvals, ovals)


def _coeff(value, mode):
    return float(value) if mode == "float" else value


def _step_map(vals: dict, n: int, a, mode: str, corner_vals: dict) -> dict:
    """Apply update rules (1)-(5) to one position map."""
    out = dict(corner_vals)  # rule (1)
    al = _coeff(alpha(n, a), mode)
    # rule (2): corner-adjacent boundary sites
    for s in (1, -1):
        out[(s * n, 0)] = (vals[(s * n, 0)] + al * vals[(s * (n - 1), 0)]) / (al + 1)
        out[(0, s * n)] = (al * vals[(0, s * n)] + vals[(0, s * (n - 1))]) / (al + 1)
    # rule (3): remaining boundary sites |j| + |k| = n
    for j in range(1, n):
        be = _coeff(beta(j, n, a), mode)
        for s in (1, -1):
            out[(j, s * (n - j))] = (
                vals[(j - 1, s * (n - j))] + be * vals[(j, s * (n - j - 1))]
            ) / (be + 1)
    for j in range(-(n - 1), 0):
        be = _coeff(beta(j, n, a), mode)
        for s in (1, -1):
            out[(j, s * (n + j))] = (
                be * vals[(j, s * (n + j - 1))] + vals[(j + 1, s * (n + j))]
            ) / (be + 1)
    # rule (4): interior copy at j + k + n even
    for (j, k), value in vals.items():
        if abs(j) + abs(k) < n and (j + k + n) % 2 == 0:
            out[(j, k)] = value
    # rule (5): interior update at j + k + n odd; all RHS neighbors are set
    for j in range(-(n - 1), n):
        for k in range(-(n - 1 - abs(j)), n - abs(j)):
            if (j + k + n) % 2 != 1:
                continue
            ga = _coeff(gamma_coeff(j, k, n, a), mode)
            neighbors = (
                out[(j - 1, k)]
                + out[(j + 1, k)]
                + ga * (out[(j, k + 1)] + out[(j, k - 1)])
            )
            out[(j, k)] = neighbors / (ga + 1) - vals[(j, k)]
    return out


def step(emb: Embedding) -> Embedding:
    n = emb.stage
    tvals = _step_map(emb.tvals, n, emb.a, emb.mode,
                      _corner_values(emb.a, n + 1, emb.mode, origami=False))
    ovals = _step_map(emb.ovals, n, emb.a, emb.mode,
                      _corner_values(emb.a, n + 1, emb.mode, origami=True))
    return Embedding(emb.a, n + 1, emb.mode, tvals, ovals)


def run_recurrence(a, stage: int, mode: str = "exact") -> Embedding:
    """Embedding and origami at the requested stage.

    Float mode delegates the interior sweep to the kernel backend; exact mode
    iterates the generic map.
    """
    if mode == "float":
        return _run_float(a, stage)
    emb = base_embedding(a, mode=mode)
    while emb.stage < stage:
        emb = step(emb)
    return emb


# --- dense float path -----------------------------------------------------


def _run_float(a, stage: int) -> Embedding:
    a = rational(a)
    af = float(a)
    a2 = af * af
    base = base_embedding(a, mode="float")
    arrays = {}
    for name, vals in (("T", base.tvals), ("O", base.ovals)):
        arr = np.zeros((3, 3), dtype=np.complex128)
        for (j, k), value in vals.items():
            arr[j + 1, k + 1] = value
        arrays[name] = arr
    for n in range(1, stage):
        for name in ("T", "O"):
            cur = arrays[name]
            off = n
            off_n = n + 1
            nxt = np.zeros((2 * n + 3, 2 * n + 3), dtype=np.complex128)
            nxt[1:-1, 1:-1] = cur  # rule (4) plus stale values overwritten below
            corners = _corner_values(a, n + 1, "float", origami=(name == "O"))
            for (j, k), value in corners.items():
                nxt[j + off_n, k + off_n] = value
            al = float(alpha(n, a))
            for s in (1, -1):
                nxt[s * n + off_n, off_n] = (
                    cur[s * n + off, off] + al * cur[s * (n - 1) + off, off]
                ) / (al + 1)
                nxt[off_n, s * n + off_n] = (
                    al * cur[off, s * n + off] + cur[off, s * (n - 1) + off]
                ) / (al + 1)
            for j in range(1, n):
                be = float(beta(j, n, a))
                for s in (1, -1):
                    nxt[j + off_n, s * (n - j) + off_n] = (
                        cur[j - 1 + off, s * (n - j) + off]
                        + be * cur[j + off, s * (n - j - 1) + off]
                    ) / (be + 1)
            for j in range(-(n - 1), 0):
                be = float(beta(j, n, a))
                for s in (1, -1):
                    nxt[j + off_n, s * (n + j) + off_n] = (
                        be * cur[j + off, s * (n + j - 1) + off]
                        + cur[j + 1 + off, s * (n + j) + off]
                    ) / (be + 1)
            kernels.embedding_step_interior(nxt, cur, a2, n, off_n, off)
            arrays[name] = nxt
    off = stage
    tvals, ovals = {}, {}
    for j in range(-stage + 1, stage):
        for k in range(-(stage - 1 - abs(j)), stage - abs(j)):
            tvals[(j, k)] = complex(arrays["T"][j + off, k + off])
            ovals[(j, k)] = complex(arrays["O"][j + off, k + off])
    for key in ((stage, 0), (-stage, 0), (0, stage), (0, -stage)):
        j, k = key
        tvals[key] = complex(arrays["T"][j + off, k + off])
        ovals[key] = complex(arrays["O"][j + off, k + off])
    return Embedding(a, stage, "float", tvals, ovals)


# --- recurrence vs assembly comparison ------------------------------------


def compare_theorem(a, max_stage: int, mode: str = "exact",
                    convention: str = "validated", stages=None,
                    tol: float = 1e-9) -> dict:
    """Recurrence embedding vs the assembled wave-field formulas, per stage.

    ``stages`` restricts which stages are compared (all by default); the
    recurrence is still stepped through every intermediate stage.
    """
    a = rational(a)
    compare_at = set(range(1, max_stage + 1)) if stages is None else set(stages)
    solver = DirectionalSolver(a, max_stage + 1, mode=mode, convention=convention)
    emb = base_embedding(a, mode=mode)
    records = []
    while True:
        n = emb.stage
        if n in compare_at:
            exact_ok = True
            max_err = 0.0
            corner_t = _corner_values(a, n, mode, origami=False)
            corner_o = _corner_values(a, n, mode, origami=True)
            for (j, k) in emb.vertices():
                if abs(j) + abs(k) == n:
                    want_t, want_o = corner_t[(j, k)], corner_o[(j, k)]
                else:
                    m = n if (j + k + n) % 2 == 1 else n + 1
                    want_t = solver.assemble_T(j, k, m)
                    want_o = solver.assemble_O(j, k, m)
                if mode == "float":
                    err = max(abs(emb.T(j, k) - want_t), abs(emb.O(j, k) - want_o))
                    max_err = max(max_err, err)
                else:
                    if emb.T(j, k) != want_t or emb.O(j, k) != want_o:
                        exact_ok = False
            record = {"stage": n}
            if mode == "float":
                record["max_error"] = max_err
            else:
                record["exact"] = exact_ok
            records.append(record)
        if n == max_stage:
            break
        emb = step(emb)
    passed = all(
        rec.get("exact", True) and rec.get("max_error", 0.0) <= tol
        for rec in records
    )
    return {"a": a, "mode": mode, "convention": convention,
            "stages": records, "passed": passed}


# --- geometric validity ---------------------------------------------------


def _expected_face_weight(j: int, k: int, n: int, a):
    # the face was a spider face either at this step or at the previous one
    m = n if (j + k + n) % 2 == 1 else n - 1
    return float(gamma_coeff(j, k, m, a))


def validate_perfect(emb: Embedding, tol: float = 1e-9) -> dict:
    """Angle/face-weight, rhombus and bisector checks on one embedding."""
    n = emb.stage
    a = float(emb.a)
    tc, _ = emb.as_complex()
    violations = []
    orientations = set()
    checked = 0
    for (j, k) in list(tc):
        if abs(j) + abs(k) >= n:
            continue
        nbrs = [(j + 1, k), (j, k + 1), (j - 1, k), (j, k - 1)]
        if any(p not in tc for p in nbrs):
            continue
        v = tc[(j, k)]
        e, nn, w, s = (tc[p] for p in nbrs)
        product = -((v - e) * (v - w)) / ((nn - v) * (s - v))
        checked += 1
        if abs(product.imag) > tol * max(1.0, abs(product)):
            violations.append(("not_real", (j, k), product))
            continue
        if product.real <= 0:
            violations.append(("not_positive", (j, k), product))
            continue
        expected = _expected_face_weight(j, k, n, emb.a)
        if abs(product.real - expected) <= tol * max(1.0, expected):
            orientations.add("direct")
        elif abs(product.real - 1.0 / expected) <= tol * max(1.0, 1.0 / expected):
            orientations.add("reciprocal")
        else:
            violations.append(("face_weight_mismatch", (j, k), product.real))
    if len(orientations) > 1:
        violations.append(("orientation_inconsistent", None, sorted(orientations)))

    corners = {(n, 0): 1, (-n, 0): -1, (0, n): 1j * a, (0, -n): -1j * a}
    for key, want in corners.items():
        if abs(tc[key] - want) > tol:
            violations.append(("corner", key, tc[key]))
    # tangential rhombus: distance from the center to each side
    radius = a / (1 + a * a) ** 0.5
    cycle = [(n, 0), (0, n), (-n, 0), (0, -n)]
    for idx in range(4):
        p, q = tc[cycle[idx]], tc[cycle[(idx + 1) % 4]]
        dist = abs((q - p).real * p.imag - (q - p).imag * p.real) / abs(q - p)
        if abs(dist - radius) > tol:
            violations.append(("tangential", (idx,), dist))
    if n >= 2:
        bisector = {
            (n - 1, 0): abs(tc[(n - 1, 0)].imag),
            (-(n - 1), 0): abs(tc[(-(n - 1), 0)].imag),
            (0, n - 1): abs(tc[(0, n - 1)].real),
            (0, -(n - 1)): abs(tc[(0, -(n - 1))].real),
        }
        for key, err in bisector.items():
            if err > tol:
                violations.append(("bisector", key, err))
    return {
        "stage": n,
        "a": a,
        "tol": tol,
        "faces_checked": checked,
        "orientation": sorted(orientations),
        "violations": violations,
        "passed": not violations,
    }
