"""Quadrature-exact integration over SU(2) with the normalized invariant
measure, and the orthogonality checks built on it.

On the angle chart the measure is (1/(2 pi^2)) sin(t) cos(t) dt dpsi dphi.
Substituting x = cos(2t) makes the t-density uniform on [-1, 1], so a
Gauss-Legendre rule in x integrates the polynomial part exactly, while
uniform (trapezoidal) rules on the periodic phases are exact for every
trigonometric monomial below the node count.  Products of two matrix
elements of spin <= L are trigonometric polynomials of phase degree <= 4L
and x-degree <= 2L, which gives a concrete node budget for exactness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from numpy.polynomial.legendre import leggauss

from .exactcomb import HalfInt, factorial, is_valid_spin_pair, spin_range
from .group import EulerAngles, Mat2C, diag_element, from_euler, multiply
from .specfun import JacobiParams, jacobi_eval, legendre
from .wigner import oracle_matrix

__all__ = [
    "ExactnessBudget",
    "HaarGrid",
    "pairwise_sum",
    "build_grid",
    "integrate",
    "DeviationReport",
    "schur_check",
    "character_norm",
    "jacobi_orthogonality_check",
    "legendre_product_check",
    "addition_formula_check",
]


@dataclass(frozen=True)
class ExactnessBudget:
    """Largest spin whose matrix-element products a grid integrates exactly."""

    max_l: HalfInt

    @property
    def min_n_theta(self) -> int:
        return self.max_l.twice + 1

    @property
    def min_n_phi(self) -> int:
        return 2 * self.max_l.twice + 1

    @property
    def min_n_psi(self) -> int:
        return 2 * self.max_l.twice + 1


@dataclass
class HaarGrid:
    """Product quadrature grid over the angle chart with weights summing to 1.

    Nodes are flattened theta-major, then phi, then psi; the node weight is
    (Gauss-Legendre weight in x)/2 * (1/n_phi) * (1/n_psi).
    """

    n_theta: int
    n_phi: int
    n_psi: int
    thetas: np.ndarray
    phis: np.ndarray
    psis: np.ndarray
    weights: np.ndarray
    _matrices: dict = field(default_factory=dict, repr=False)

    @property
    def node_count(self) -> int:
        return len(self.weights)

    def nodes(self):
        """Iterate (theta, phi, psi, weight) quadruples in node order."""
        return zip(self.thetas, self.phis, self.psis, self.weights)

    def max_exact_l(self) -> HalfInt:
        """Largest spin within this grid's exactness budget."""
        twice = min(self.n_theta - 1, (self.n_phi - 1) // 2, (self.n_psi - 1) // 2)
        return HalfInt(max(twice, 0))

    def element(self, index: int) -> Mat2C:
        return from_euler(
            EulerAngles(float(self.thetas[index]), float(self.phis[index]), float(self.psis[index]))
        )

    def matrices(self, l: HalfInt) -> np.ndarray:
        """Representation matrices at every node, shape (nodes, 2l+1, 2l+1)."""
        if l.twice not in self._matrices:
            stack = np.empty((self.node_count, l.twice + 1, l.twice + 1), dtype=complex)
            for i in range(self.node_count):
                stack[i] = oracle_matrix(l, self.element(i)).entries
            self._matrices[l.twice] = stack
        return self._matrices[l.twice]


def pairwise_sum(values):
    """Deterministic pairwise-tree reduction along the leading axis."""
    arr = np.asarray(values)
    if arr.shape[0] == 0:
        return arr.sum(axis=0)
    while arr.shape[0] > 1:
        half = arr[0 : arr.shape[0] - arr.shape[0] % 2 : 2] + arr[1 :: 2]
        if arr.shape[0] % 2:
            arr = np.concatenate([half, arr[-1:]])
        else:
            arr = half
    return arr[0]


def build_grid(
    max_l: HalfInt,
    n_theta: int | None = None,
    n_phi: int | None = None,
    n_psi: int | None = None,
) -> HaarGrid:
    """Smallest grid exact for spin max_l, with optional node-count overrides."""
    budget = ExactnessBudget(max_l)
    n_theta = budget.min_n_theta if n_theta is None else n_theta
    n_phi = budget.min_n_phi if n_phi is None else n_phi
    n_psi = budget.min_n_psi if n_psi is None else n_psi
    if min(n_theta, n_phi, n_psi) < 1:
        raise ValueError("grid needs at least one node per axis")
    x, wx = leggauss(n_theta)
    thetas_1d = 0.5 * np.arccos(x)
    phis_1d = 2 * math.pi * np.arange(n_phi) / n_phi
    psis_1d = 2 * math.pi * np.arange(n_psi) / n_psi
    thetas = np.repeat(thetas_1d, n_phi * n_psi)
    phis = np.tile(np.repeat(phis_1d, n_psi), n_theta)
    psis = np.tile(psis_1d, n_theta * n_phi)
    weights = np.repeat(wx / 2, n_phi * n_psi) / (n_phi * n_psi)
    return HaarGrid(n_theta, n_phi, n_psi, thetas, phis, psis, weights)


def integrate(grid: HaarGrid, f) -> complex:
    """Weighted sum of f over the grid, reduced in a fixed pairwise order."""
    values = np.empty(grid.node_count, dtype=complex)
    for i in range(grid.node_count):
        values[i] = complex(f(grid.element(i)))
        if not (math.isfinite(values[i].real) and math.isfinite(values[i].imag)):
            raise ValueError(
                f"integrand not finite at node {i} "
                f"(theta={grid.thetas[i]}, phi={grid.phis[i]}, psi={grid.psis[i]})"
            )
    return complex(pairwise_sum(grid.weights * values))


@dataclass(frozen=True)
class DeviationReport:
    """Worst absolute deviation over a family of checked integrals."""

    max_deviation: float
    worst: tuple
    checked: int


def _check_budget(grid: HaarGrid, l: HalfInt) -> None:
    if l.twice > grid.max_exact_l().twice:
        raise ValueError(
            f"spin l={l} exceeds the grid exactness budget (max l={grid.max_exact_l()})"
        )


def schur_check(grid: HaarGrid, l: HalfInt, l_prime: HalfInt) -> DeviationReport:
    """Integrals of t^l_{m,n} conj(t^l'_{m',n'}) against their exact values.

    The exact value is 1/(2l+1) when (l, m, n) = (l', m', n') and 0 otherwise;
    the report carries the worst deviation over all index combinations.
    """
    _check_budget(grid, l)
    _check_budget(grid, l_prime)
    T = grid.matrices(l)
    U = grid.matrices(l_prime)
    dim_u = l_prime.twice + 1
    u_flat = np.conj(U.reshape(grid.node_count, dim_u * dim_u))
    w = grid.weights[:, None]
    worst = None
    max_dev = -1.0
    checked = 0
    same_l = l.twice == l_prime.twice
    for i1, m in enumerate(spin_range(l)):
        for j1, n in enumerate(spin_range(l)):
            integrals = pairwise_sum(w * T[:, i1, j1][:, None] * u_flat)
            for i2, mp in enumerate(spin_range(l_prime)):
                for j2, np_ in enumerate(spin_range(l_prime)):
                    expected = 0.0
                    if same_l and i1 == i2 and j1 == j2:
                        expected = 1.0 / (l.twice + 1)
                    dev = abs(integrals[i2 * dim_u + j2] - expected)
                    checked += 1
                    if dev > max_dev:
                        max_dev = dev
                        worst = (m.twice, n.twice, mp.twice, np_.twice)
    return DeviationReport(float(max_dev), worst, checked)


def character_norm(grid: HaarGrid, l: HalfInt) -> float:
    """Integral of |trace t^l|^2; equals 1 exactly for every spin."""
    _check_budget(grid, l)
    T = grid.matrices(l)
    traces = np.trace(T, axis1=1, axis2=2)
    return float(pairwise_sum(grid.weights * np.abs(traces) ** 2).real)


def jacobi_orthogonality_check(l: HalfInt, l_prime: HalfInt, m: HalfInt, n: HalfInt) -> float:
    """Deviation of the x-substituted same-column integral from its target.

    Evaluates the weighted Jacobi product integral on [-1, 1] with a
    Gauss-Legendre rule of exact degree and compares against
    delta_{l,l'}/(2l+1).
    """
    for spin in (l, l_prime):
        if not (is_valid_spin_pair(spin, m) and is_valid_spin_pair(spin, n)):
            raise ValueError(f"(m={m}, n={n}) is not a weight pair of spin {spin}")
    if (m + n).twice < 0 or (m - n).twice < 0:
        raise ValueError("check is stated on the quadrant m + n >= 0, m - n >= 0")
    deg1 = (l - m).as_int()
    deg2 = (l_prime - m).as_int()
    al = (m + n).as_int()
    be = (m - n).as_int()
    npts = (deg1 + deg2 + al + be) // 2 + 1
    x, w = leggauss(npts)
    p1 = np.array([jacobi_eval(JacobiParams(al, be, deg1), xi) for xi in x])
    p2 = p1 if (deg2 == deg1) else np.array([jacobi_eval(JacobiParams(al, be, deg2), xi) for xi in x])
    integral = float(pairwise_sum(w * p1 * p2 * (1 - x) ** al * (1 + x) ** be))
    pref = Fraction(
        factorial((l + m).as_int()) * factorial((l - m).as_int()),
        factorial((l + n).as_int()) * factorial((l - n).as_int()) * 2 ** (m.twice + 1),
    )
    expected = 1.0 / (l.twice + 1) if l.twice == l_prime.twice else 0.0
    return float(pref) * integral - expected


def legendre_product_check(l: int, theta1: float, theta2: float, n_phi: int) -> float:
    """Deviation of the phase-averaged composite Legendre value from the product.

    Compares P_l(cos t1) P_l(cos t2) with the uniform-quadrature average of
    P_l(cos t1 cos t2 + sin t1 sin t2 cos phi); the integrand is a
    trigonometric polynomial of degree l, so n_phi >= 2l + 1 is exact.
    """
    if n_phi < 2 * l + 1:
        raise ValueError(f"need n_phi >= 2l+1 = {2 * l + 1}, got {n_phi}")
    phis = 2 * math.pi * np.arange(n_phi) / n_phi
    args = math.cos(theta1) * math.cos(theta2) + math.sin(theta1) * math.sin(theta2) * np.cos(phis)
    values = np.array([legendre(l, a) for a in args])
    average = float(pairwise_sum(values)) / n_phi
    return average - legendre(l, math.cos(theta1)) * legendre(l, math.cos(theta2))


def addition_formula_check(l: int, theta1: float, theta2: float, phi: float) -> float:
    """Largest deviation among the two decompositions of a composite element.

    Builds T = R(t1/2) diag(e^{i phi/2}, e^{-i phi/2}) R'(t2/2) from the two
    real rotation factors, takes the central matrix element of t^l(T), and
    checks it against (i) the Legendre value at the composite argument and
    (ii) the phase-weighted sum over the central row and column of the two
    factors.
    """
    if l < 0:
        raise ValueError(f"negative degree l={l}")
    h1, h2 = theta1 / 2, theta2 / 2
    left = Mat2C(math.sin(h1), -math.cos(h1), math.cos(h1), math.sin(h1))
    right = Mat2C(math.sin(h2), math.cos(h2), -math.cos(h2), math.sin(h2))
    T = multiply(multiply(left, diag_element(phi / 2)), right)
    spin = HalfInt(2 * l)
    zero = HalfInt(0)
    center = oracle_matrix(spin, T).entry(zero, zero)
    composite = math.cos(theta1) * math.cos(theta2) + math.sin(theta1) * math.sin(theta2) * math.cos(phi)
    closed_form = legendre(l, composite)
    row = oracle_matrix(spin, left)
    col = oracle_matrix(spin, right)
    series = 0j
    for k in spin_range(spin):
        series += row.entry(zero, k) * col.entry(k, zero) * np.exp(-1j * float(k) * phi)
    return max(abs(center - closed_form), abs(center - series))
