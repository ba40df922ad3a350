"""Octahedron recurrence over exact rings, closed forms and density functions.

The recurrence lives on the odd sublattice ``j + k + n`` odd:

    T[j,k,n+1] * T[j,k,n-1] = T[j+1,k,n]*T[j-1,k,n] + T[j,k+1,n]*T[j,k-1,n]

with 2x2-periodic initial data on layers n = 0, 1.  Density functions are
computed by evolving the recurrence over dual rationals with a single tagged
initial site.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import (
    DualRational,
    ZERO,
    dual_lift,
    dual_log_derivative,
    rational,
)


@dataclass(frozen=True)
class InitialData:
    """2x2-periodic initial layer values t(j, k), all strictly positive."""

    a_oct: object
    b_oct: object
    c_oct: object
    d_oct: object

    def __post_init__(self):
        for name in ("a_oct", "b_oct", "c_oct", "d_oct"):
            value = rational(getattr(self, name))
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def two_periodic(cls, a) -> "InitialData":
        """The initial data matched to the two-periodic Aztec diamond."""
        a = rational(a)
        return cls(1, 1, 1, 1 / a)

    @classmethod
    def uniform(cls) -> "InitialData":
        return cls(1, 1, 1, 1)

    def t(self, j: int, k: int):
        if j % 2 == 0:
            return self.a_oct if k % 2 == 0 else self.c_oct
        return self.d_oct if k % 2 == 0 else self.b_oct

    @staticmethod
    def n_init(j: int, k: int) -> int:
        return (j + k + 1) % 2


class TField:
    """Layered octahedron-recurrence values on the cone above a center.

    Layer ``n`` stores all sites with ``j + k + n`` odd and
    ``|j - j0| + |k - k0| <= depth - n + 1``.
    """

    def __init__(self, center, depth, dual: bool):
        self.center = center
        self.depth = depth
        self.dual = dual
        self.layers: list[dict] = [dict() for _ in range(depth + 1)]

    def sites(self, n: int):
        j0, k0 = self.center
        radius = self.depth - n + 1
        for dj in range(-radius, radius + 1):
            rem = radius - abs(dj)
            for dk in range(-rem, rem + 1):
                j, k = j0 + dj, k0 + dk
                if (j + k + n) % 2 == 1:
                    yield j, k

    def value(self, j: int, k: int, n: int):
        return self.layers[n][(j, k)]

    def items(self):
        for n, layer in enumerate(self.layers):
            for (j, k), value in layer.items():
                yield (j, k, n), value

    def to_csv_rows(self):
        from .rings import rational_to_str

        for (j, k, n), value in sorted(self.items()):
            scalar = value.value if self.dual else value
            yield (j, k, n, rational_to_str(scalar))


def evolve_T(init: InitialData, center=(0, 0), depth: int = 0, tagged_site=None) -> TField:
    """Evolve the octahedron recurrence up to ``depth`` above ``center``.

    With ``tagged_site`` given, the evolution runs over dual rationals with the
    initial value at that single lattice site lifted as tagged; the resulting
    field then carries ``t dT/dt`` in its infinitesimal parts.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    dual = tagged_site is not None
    fld = TField(center, depth, dual)

    def seed(j, k):
        value = init.t(j, k)
        if dual:
            return dual_lift(value, (j, k) == tuple(tagged_site))
        return value

    for n in (0, 1):
        if n <= depth:
            fld.layers[n] = {(j, k): seed(j, k) for (j, k) in fld.sites(n)}
    for n in range(1, depth):
        prev, cur = fld.layers[n - 1], fld.layers[n]
        nxt = {}
        for j, k in fld.sites(n + 1):
            num = cur[(j + 1, k)] * cur[(j - 1, k)] + cur[(j, k + 1)] * cur[(j, k - 1)]
            denom = prev[(j, k)]
            value = num / denom
            positive = value.value > 0 if dual else value > 0
            if not positive:
                raise ArithmeticError(f"non-positive recurrence value at {(j, k, n + 1)}")
            nxt[(j, k)] = value
        fld.layers[n + 1] = nxt
    return fld


def closed_form_T(init: InitialData, j: int, k: int, n: int):
    """Exact value of the recurrence for 2x2-periodic initial data."""
    if (j + k + n) % 2 != 1:
        raise ValueError("j + k + n must be odd")
    if n < 0:
        raise ValueError("n must be >= 0")
    A = (init.a_oct**2 + init.b_oct**2) / (init.c_oct * init.d_oct)
    B = (init.c_oct**2 + init.d_oct**2) / (init.a_oct * init.b_oct)
    prefactor = A ** ((n // 2) * ((n + 1) // 2)) * B ** (((n - 1) // 2) * (n // 2))
    base = init.t(j, k) if n % 4 in (0, 1) else init.t(j + 1, k + 1)
    return prefactor * base


def coeff_L(init: InitialData, j: int, k: int, n: int):
    """Closed-form coefficient L at a recurrence-step site (j + k + n even)."""
    if (j + k + n) % 2 != 0:
        raise ValueError("j + k + n must be even at a recurrence step")
    if n < 1:
        raise ValueError("n must be >= 1")
    A = (init.a_oct**2 + init.b_oct**2) / (init.c_oct * init.d_oct)
    B = (init.c_oct**2 + init.d_oct**2) / (init.a_oct * init.b_oct)
    t = init.t
    if n % 4 in (0, 1):
        tau = (t(j + 1, k) * t(j - 1, k)) / (t(j, k) * t(j + 1, k + 1))
    else:
        tau = (t(j + 2, k + 1) * t(j, k + 1)) / (t(j, k) * t(j + 1, k + 1))
    return A ** (n // 2 - (n + 1) // 2) * B ** ((n - 1) // 2 - n // 2) * tau


def coeff_R(init: InitialData, j: int, k: int, n: int):
    return 1 - coeff_L(init, j, k, n)


def density_dual(init: InitialData, site, center=(0, 0), depth: int = 0) -> dict:
    """Density function rho^site as a map (j, k, n) -> rational.

    One full dual evolution with the given lattice site tagged; the density at
    every stored point is the logarithmic derivative of the field value.
    """
    fld = evolve_T(init, center=center, depth=depth, tagged_site=site)
    return {point: dual_log_derivative(value) for point, value in fld.items()}
