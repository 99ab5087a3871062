"""Normalized solutions of the lattice equation by exact tail seeding.

The weighted difference equation

    a(n+1) f(n+1) + b(n) f(n) + a(n) f(n-1)
        = (w(n) / w_inf) (a_inf (z + 1/z) + b_inf) f(n)

reduces to the free two-sided recursion wherever all four coefficients
sit at their limits, and there its solutions are combinations of z^n and
z^{-n}.  With a finite window the solution pinned to z^n at +infinity
therefore equals z^n exactly on every site at or above n_max, and the one
pinned to z^{-n} at -infinity equals z^{-n} at or below n_min - 1.  Both
are seeded with those exact plane-wave values on the outer sites and
propagated through the window by the recursion itself, which on the unit
circle has no decaying companion solution to lose accuracy to.

Solutions are produced on an index range two sites wider than the window
on each side so that downstream tail fits read only sites where the tail
form is exact.  A caller can widen the range further; the extra sites are
free and cost one recursion step each.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .lattice import CoefficientSequence, IndexWindow, coefficient_arrays, coefficient_at
from .spectral import require_admissible


class SolutionKind(Enum):
    """Which normalization a solution carries."""

    LEFT_JOST = "left-jost"
    RIGHT_JOST = "right-jost"
    LEFT_CONJUGATE = "left-conjugate"
    RIGHT_CONJUGATE = "right-conjugate"


@dataclass(frozen=True, eq=False)
class LatticeSolution:
    """Solution values on the contiguous index range [lo, lo + len - 1]."""

    values: np.ndarray
    lo: int
    kind: SolutionKind
    z: complex

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex).copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "z", complex(self.z))

    @property
    def hi(self) -> int:
        return self.lo + self.values.size - 1

    def at(self, n: int) -> complex:
        if not self.lo <= n <= self.hi:
            raise IndexError(f"site {n} outside solution range [{self.lo}, {self.hi}]")
        return complex(self.values[n - self.lo])


def solution_range(seq: CoefficientSequence, cover: IndexWindow | None = None) -> tuple[int, int]:
    """Index range a solution will span, two sites past the window plus cover."""
    lo = seq.window.n_min - 2
    hi = seq.window.n_max + 2
    if cover is not None:
        lo = min(lo, cover.n_min)
        hi = max(hi, cover.n_max)
    return lo, hi


def jost_values(
    seq: CoefficientSequence,
    zs: np.ndarray,
    side: str,
    cover: IndexWindow | None = None,
    at_inverse: bool = False,
) -> tuple[np.ndarray, int]:
    """Vectorized solve: values[i, k] is the solution at zs[i], site lo + k.

    side selects the normalization, "left" for z^n at +infinity and
    "right" for z^{-n} at -infinity.  Returns (values, lo).

    at_inverse evaluates the same construction at 1/z while still
    parametrized by z: the seed exponents flip sign and the recursion
    drive is reused unchanged, z + 1/z being inversion symmetric.  No
    floating-point number is exactly the inverse of z, so evaluating at
    a rounded reciprocal instead would move the result by a point-level
    error; relations that pair values at z and 1/z amplify exactly that
    error near z = +1, -1, and this mode is what keeps them clean.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    require_admissible(zs)
    sign = -1 if at_inverse else 1
    lo, hi = solution_range(seq, cover)
    n_min, n_max = seq.window.n_min, seq.window.n_max
    a, b, w = coefficient_arrays(seq, lo, hi + 1)
    lim = seq.limits
    s = lim.a_inf * (zs + 1.0 / zs) + lim.b_inf
    vals = np.empty((zs.size, hi - lo + 1), dtype=complex)
    if side == "left":
        tail = np.arange(n_max, hi + 1)
        vals[:, n_max - lo :] = zs[:, None] ** (sign * tail[None, :])
        for n in range(n_max, lo, -1):
            k = n - lo
            rhs = (w[k] / lim.w_inf) * s * vals[:, k]
            vals[:, k - 1] = (rhs - a[k + 1] * vals[:, k + 1] - b[k] * vals[:, k]) / a[k]
    else:
        tail = np.arange(lo, n_min)
        vals[:, : n_min - lo] = zs[:, None] ** (-sign * tail[None, :])
        for n in range(n_min - 1, hi):
            k = n - lo
            rhs = (w[k] / lim.w_inf) * s * vals[:, k]
            vals[:, k + 1] = (rhs - b[k] * vals[:, k] - a[k] * vals[:, k - 1]) / a[k + 1]
    return vals, lo


def jost_left(
    seq: CoefficientSequence, z: complex, cover: IndexWindow | None = None
) -> LatticeSolution:
    """Solution normalized to z^n at +infinity."""
    vals, lo = jost_values(seq, z, "left", cover)
    return LatticeSolution(vals[0], lo, SolutionKind.LEFT_JOST, z)


def jost_right(
    seq: CoefficientSequence, z: complex, cover: IndexWindow | None = None
) -> LatticeSolution:
    """Solution normalized to z^{-n} at -infinity."""
    vals, lo = jost_values(seq, z, "right", cover)
    return LatticeSolution(vals[0], lo, SolutionKind.RIGHT_JOST, z)


def conjugate_solution(
    seq: CoefficientSequence, z: complex, side: str, cover: IndexWindow | None = None
) -> LatticeSolution:
    """Companion solution, the same normalization taken at the inverse point.

    Computed through the at_inverse mode of jost_values, so solution and
    companion share one floating-point base point; the junction fits and
    Wronskian pairings downstream need exactly that.  On the circle the
    companion coincides with the entrywise complex conjugate of the plain
    solution.  That coincidence stays a checkable statement because the
    conjugation checks evaluate at an independently rounded reciprocal
    rather than through this function.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    vals, lo = jost_values(seq, complex(z), side, cover, at_inverse=True)
    kind = SolutionKind.LEFT_CONJUGATE if side == "left" else SolutionKind.RIGHT_CONJUGATE
    return LatticeSolution(vals[0], lo, kind, z)


def wronskian(
    seq: CoefficientSequence, phi: LatticeSolution, zeta: LatticeSolution, n: int
) -> complex:
    """a(n+1) (phi(n) zeta(n+1) - phi(n+1) zeta(n)), constant across n."""
    a_next = coefficient_at(seq, n + 1)[0]
    return a_next * (phi.at(n) * zeta.at(n + 1) - phi.at(n + 1) * zeta.at(n))


def wronskian_constancy_check(
    seq: CoefficientSequence, phi: LatticeSolution, zeta: LatticeSolution
) -> float:
    """Max drift of the pairing across the shared range, relatively scaled.

    Returns max_n |W(n) - W(n0)| / max(1, |W(n0)|) over every site pair in
    the overlap of the two ranges, with n0 the lowest usable site.
    """
    lo = max(phi.lo, zeta.lo)
    hi = min(phi.hi, zeta.hi)
    if hi - lo < 2:
        raise ValueError("solution ranges overlap on fewer than three sites")
    p = phi.values[lo - phi.lo : hi - phi.lo + 1]
    q = zeta.values[lo - zeta.lo : hi - zeta.lo + 1]
    a, _, _ = coefficient_arrays(seq, lo + 1, hi)
    w_all = a * (p[:-1] * q[1:] - p[1:] * q[:-1])
    ref = w_all[0]
    return float(np.max(np.abs(w_all - ref)) / max(1.0, abs(ref)))


def equation_residual(seq: CoefficientSequence, sol: LatticeSolution) -> float:
    """Worst relative defect of the difference equation at interior sites.

    Each site residual is scaled by the largest participating term so the
    figure stays meaningful when the solution grows through the window.
    """
    lo, hi = sol.lo, sol.hi
    if hi - lo < 2:
        raise ValueError("solution range too short to test the equation")
    # coefficient arrays span [lo, hi + 1], one site longer than the values
    a, b, w = coefficient_arrays(seq, lo, hi + 1)
    s = seq.limits.a_inf * (sol.z + 1.0 / sol.z) + seq.limits.b_inf
    v = sol.values
    up = a[2:-1] * v[2:]
    mid = b[1:-2] * v[1:-1]
    down = a[1:-2] * v[:-2]
    drive = (w[1:-2] / seq.limits.w_inf) * s * v[1:-1]
    defect = np.abs(up + mid + down - drive)
    scale = np.maximum.reduce(
        [np.ones_like(defect), np.abs(up), np.abs(mid), np.abs(down), np.abs(drive)]
    )
    return float(np.max(defect / scale))
