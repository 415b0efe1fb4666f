"""Differential and integral operator checks for orbit functions, and the
Hermite-type eigenfunctions of the (anti)symmetrized Fourier transform.

All derivative checks use central finite differences; the eigenrelations
of the shift operators are finite algebraic identities and need no
differentiation.  The Hermite machinery covers the symmetric-group case:
determinants / symmetrized products of one-variable Hermite polynomials,
their transform eigenproperty under Gaussian quadrature, and the generic
construction from an arbitrary family of orthogonal polynomials.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .rootsys import RootSystem, vec, inner, orth_dim
from .weyl import generate_group, orth_group, orth_apply
from .orbitfn import (
    eval_orbit_function, eval_batch, eval_orth_batch, _perm_sum,
)

TWO_PI = 2.0 * math.pi


# -- Laplace and symmetric-power operators --------------------------------

def laplace_check(rs: RootSystem, m: Sequence, x: Sequence,
                  h: float = 1e-4) -> tuple[complex, complex, float]:
    """Finite-difference Laplacian of the antisymmetric orbit function in
    orthogonal coordinates against -4 pi^2 sum(m_i^2) times the function.

    Returns (fd value, predicted eigenvalue times the value, relative
    error).
    """
    r = orth_dim(rs)
    xv = np.asarray([float(v) for v in x])
    pts = [xv]
    for i in range(r):
        e = np.zeros(r)
        e[i] = h
        pts.append(xv + e)
        pts.append(xv - e)
    vals = eval_orth_batch(rs, "anti", m, np.array(pts))
    f0 = vals[0]
    fd = sum((vals[1 + 2 * i] - 2 * f0 + vals[2 + 2 * i]) / h ** 2
             for i in range(r))
    eig = -4 * math.pi ** 2 * float(sum(Fraction(v) ** 2 for v in m))
    ref = eig * f0
    rel = abs(fd - ref) / max(abs(ref), 1e-300)
    return fd, ref, rel


def laplace_check_omega(rs: RootSystem, lam: Sequence, x: Sequence,
                        h: float = 1e-4) -> tuple[complex, complex, float]:
    """The same eigencheck in omega coordinates: the second-order operator
    with the inverse metric as coefficients reproduces -4 pi^2 <lam, lam>.
    Works for every diagram, G_2 included."""
    coeffs = [[float(c) for c in row] for row in rs.metric_inv]
    fd = _apply_quadratic_operator(
        lambda pts: eval_batch(rs, "anti", lam, pts), coeffs,
        np.asarray([float(v) for v in x]), h)
    f0 = eval_orbit_function(rs, "anti", lam, x)
    eig = -4 * math.pi ** 2 * float(inner(rs, lam, lam))
    ref = eig * f0
    rel = abs(fd - ref) / max(abs(ref), 1e-300)
    return fd, ref, rel


def _apply_quadratic_operator(f: Callable, coeffs, x: np.ndarray, h: float) -> complex:
    """sum_ij c_ij D_i D_j f at x by central differences."""
    n = len(x)
    pts = [x]
    index = {}
    for i in range(n):
        for j in range(n):
            if coeffs[i][j] == 0 or (j, i) in index:
                continue
            if i == j:
                e = np.zeros(n)
                e[i] = h
                index[(i, i)] = len(pts)
                pts.extend([x + e, x - e])
            else:
                ei, ej = np.zeros(n), np.zeros(n)
                ei[i], ej[j] = h, h
                index[(i, j)] = len(pts)
                pts.extend([x + ei + ej, x + ei - ej, x - ei + ej, x - ei - ej])
    vals = f(np.array(pts))
    f0 = vals[0]
    total = 0j
    for (i, j), k in index.items():
        if i == j:
            total += coeffs[i][i] * (vals[k] - 2 * f0 + vals[k + 1]) / h ** 2
        else:
            c = coeffs[i][j] + coeffs[j][i]
            total += c * (vals[k] - vals[k + 1] - vals[k + 2] + vals[k + 3]) / (4 * h ** 2)
    return total


def sigma2_check(rs: RootSystem, m: Sequence, x: Sequence,
                 h: float = 1e-3) -> float:
    """Second elementary symmetric polynomial of the coordinate second
    derivatives: eigenvalue (-4 pi^2)^2 sigma_2(m_1^2, ..., m_r^2)."""
    r = orth_dim(rs)
    xv = np.asarray([float(v) for v in x])
    f = lambda pts: eval_orth_batch(rs, "anti", m, pts)
    total = 0j
    for i in range(r):
        for j in range(i + 1, r):
            # 9-point stencil for D_i^2 D_j^2
            ei, ej = np.zeros(r), np.zeros(r)
            ei[i], ej[j] = h, h
            pts = [xv + a * ei + b * ej for a in (1, 0, -1) for b in (1, 0, -1)]
            v = f(np.array(pts)).reshape(3, 3)
            di2 = (v[0] - 2 * v[1] + v[2]) / h ** 2      # D_i^2 along axis 0
            total += (di2[0] - 2 * di2[1] + di2[2]) / h ** 2
    f0 = complex(f(xv[None, :])[0])
    sig2 = sum(Fraction(m[i]) ** 2 * Fraction(m[j]) ** 2
               for i in range(r) for j in range(i + 1, r))
    ref = (4 * math.pi ** 2) ** 2 * float(sig2) * f0
    return abs(total - ref) / max(abs(ref), 1e-300)


def sigma_k_check(rs: RootSystem, m: Sequence, x: Sequence, k: int,
                  h: float | None = None) -> float:
    """Eigencheck of the k-th elementary symmetric polynomial in the
    coordinate second derivatives; k = 1 is the Laplacian."""
    if k == 1:
        return laplace_check(rs, m, x, h or 1e-4)[2]
    if k == 2:
        return sigma2_check(rs, m, x, h or 1e-3)
    raise ValueError("only k <= 2 is supported (mixed stencil order)")


def omega_basis_operator(rs: RootSystem) -> dict:
    """Coefficient matrices for the second-order operator in the omega
    basis: the symmetrized half-inverse-norm Cartan form alongside the
    inverse metric.  Only the latter reproduces the -4 pi^2 <lam, lam>
    eigenvalue; the two are proportional only for simply-laced diagrams.
    """
    n = rs.rank
    half = [[Fraction(rs.cartan[i][j], 2) / rs.root_norms[j] for j in range(n)]
            for i in range(n)]
    sym = tuple(tuple((half[i][j] + half[j][i]) / 2 for j in range(n))
                for i in range(n))
    return {"cartan_form": sym, "metric_dual": rs.metric_inv}


# -- shift operators -------------------------------------------------------

def shift_operator_check(rs: RootSystem, lam: Sequence, x: Sequence,
                         y: Sequence, variant: str) -> float:
    """Eigenrelations of the group-averaged shift operators, for strictly
    dominant lam.

    variant ``"det_on_anti"``:  sum_w det(w) anti(wx + y) = sym(y) anti(x)
    variant ``"plain_on_anti"``: sum_w anti(wx + y)       = anti(y) sym(x)
    variant ``"det_on_sym"``:   sum_w det(w) sym(wx + y)  = anti(y) anti(x)

    A det-free average is symmetric in x and a det-weighted one is
    antisymmetric, which forces the output kinds above (the last two are
    often quoted with the x-side kinds swapped, which fails numerically).
    Returns the relative error of the identity.
    """
    xv, yv = vec(x), vec(y)
    group = generate_group(rs)
    if variant == "det_on_anti":
        kind, use_det, eig_kind, val_kind = "anti", True, "sym", "anti"
    elif variant == "plain_on_anti":
        kind, use_det, eig_kind, val_kind = "anti", False, "anti", "sym"
    elif variant == "det_on_sym":
        kind, use_det, eig_kind, val_kind = "sym", True, "anti", "anti"
    else:
        raise ValueError(f"unknown variant {variant!r}")
    shifted = np.array([[float(c + d) for c, d in zip(w.apply(xv), yv)]
                        for w in group])
    vals = eval_batch(rs, kind, lam, shifted)
    dets = np.array([w.det if use_det else 1 for w in group])
    lhs = dets @ vals
    rhs = (eval_orbit_function(rs, eig_kind, lam, [float(c) for c in yv])
           * eval_orbit_function(rs, val_kind, lam, [float(c) for c in xv]))
    # measure against the summand scale as well: a near-zero eigenvalue
    # product must not inflate plain roundoff into a reported error
    scale = max(abs(rhs), float(np.mean(np.abs(vals))), 1e-12)
    return abs(lhs - rhs) / scale


def gradient_sum_residual(rs: RootSystem, m: Sequence, x: Sequence,
                          h: float = 1e-5) -> float:
    """Residual of sum_w (d_i phi)(wx) = 0 over all coordinates i, for the
    families where the reflection representation misses the determinant
    character (A, B, C, and even-rank D)."""
    r = orth_dim(rs)
    xv = np.asarray([float(v) for v in x])
    images = np.array([[float(v) for v in orth_apply(p, s, xv)]
                       for p, s, _ in orth_group(rs)])
    worst = 0.0
    for i in range(r):
        e = np.zeros(r)
        e[i] = h
        up = eval_orth_batch(rs, "anti", m, images + e)
        dn = eval_orth_batch(rs, "anti", m, images - e)
        grads = (up - dn) / (2 * h)
        scale = float(np.sum(np.abs(grads))) or 1.0
        worst = max(worst, abs(np.sum(grads)) / scale)
    return worst


# -- Hermite polynomials and transform eigenfunctions -----------------------

def hermite_polynomial(n: int, x):
    """Physicists' Hermite polynomial by the three-term recurrence."""
    x = np.asarray(x, dtype=float)
    h0 = np.ones_like(x)
    if n == 0:
        return h0
    h1 = 2 * x
    for k in range(1, n):
        h0, h1 = h1, 2 * x * h1 - 2 * k * h0
    return h1


def hermite_explicit(n: int, x: float) -> float:
    """The factorial-sum definition; a small-n oracle for the recurrence."""
    total = 0.0
    for m in range(n // 2 + 1):
        total += ((-1) ** m * (2 * x) ** (n - 2 * m)
                  / (math.factorial(m) * math.factorial(n - 2 * m)))
    return math.factorial(n) * total


def hermite_sym_anti(m: Sequence[int], lam: Sequence, variant: str):
    """Symmetrized / antisymmetrized multivariate Hermite polynomials.

    anti: det(H_{m_i}(lam_j)) -- needs strictly decreasing m, vanishes at
    coinciding arguments; sym: the full symmetric-group sum of products.
    """
    n = len(m)
    lam = [float(v) for v in lam]
    if variant == "anti":
        if not all(m[i] > m[i + 1] for i in range(n - 1)):
            raise ValueError("antisymmetric labels must decrease strictly")
        grid = np.array([[hermite_polynomial(mi, lj) for lj in lam] for mi in m])
        return complex(_perm_sum(grid.astype(complex), signed=True)).real
    if variant == "sym":
        total = 0.0
        for p in itertools.permutations(range(n)):
            term = 1.0
            for i in range(n):
                term *= hermite_polynomial(m[p[i]], lam[i])
            total += term
        return total
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class PlaneWaveQuadrature:
    """Shared grid for the two-variable (anti)symmetrized Fourier
    transform: midpoint nodes on [-L, L] and the 1-D transform matrix."""
    nodes: np.ndarray
    matrix: np.ndarray  # K[p, a] = exp(2 pi i g_p g_a) * cell

    @classmethod
    def make(cls, half_width: float = 6.0, resolution: int = 400):
        cell = 2 * half_width / resolution
        nodes = -half_width + (np.arange(resolution) + 0.5) * cell
        matrix = np.exp(TWO_PI * 1j * np.outer(nodes, nodes)) * cell
        return cls(nodes=nodes, matrix=matrix)

    def apply(self, values: np.ndarray, variant: str) -> np.ndarray:
        """One application of the transform to a function sampled on the
        tensor grid; variant "anti" antisymmetrizes, "sym" symmetrizes."""
        g = self.matrix @ values @ self.matrix.T
        if variant == "anti":
            return 0.5 * (g - g.T)
        return 0.5 * (g + g.T)


def gaussian_hermite_samples(q: PlaneWaveQuadrature, m: Sequence[int],
                             variant: str) -> np.ndarray:
    """exp(-pi |x|^2) H^{variant}_m(sqrt(2 pi) x) on the tensor grid."""
    x1, x2 = np.meshgrid(q.nodes, q.nodes, indexing="ij")
    gauss = np.exp(-math.pi * (x1 ** 2 + x2 ** 2))
    s = math.sqrt(TWO_PI)
    if variant == "anti":
        h = (hermite_polynomial(m[0], s * x1) * hermite_polynomial(m[1], s * x2)
             - hermite_polynomial(m[1], s * x1) * hermite_polynomial(m[0], s * x2))
    else:
        h = (hermite_polynomial(m[0], s * x1) * hermite_polynomial(m[1], s * x2)
             + hermite_polynomial(m[1], s * x1) * hermite_polynomial(m[0], s * x2))
    return gauss * h


def transform_eigen_check(m: Sequence[int], variant: str,
                          half_width: float = 6.0, resolution: int = 400,
                          quadrature: PlaneWaveQuadrature | None = None) -> float:
    """Relative eigen-residual of the (anti)symmetrized transform on its
    Gaussian-Hermite eigenfunction.

    With the exp(+2 pi i <lam, x>) kernel used throughout, the eigenvalue
    is i^{+|m|} (the conjugate kernel gives i^{-|m|}); either way the
    fourth power of the transform is the identity.
    """
    q = quadrature or PlaneWaveQuadrature.make(half_width, resolution)
    g0 = gaussian_hermite_samples(q, m, variant)
    out = q.apply(g0.astype(complex), variant)
    eig = 1j ** int(sum(m))
    num = np.linalg.norm(out - eig * g0)
    return float(num / np.linalg.norm(g0))


def transform_fourth_power_residual(m: Sequence[int], variant: str,
                                    half_width: float = 6.0,
                                    resolution: int = 400,
                                    quadrature: PlaneWaveQuadrature | None = None) -> float:
    q = quadrature or PlaneWaveQuadrature.make(half_width, resolution)
    g0 = gaussian_hermite_samples(q, m, variant).astype(complex)
    g = g0
    for _ in range(4):
        g = q.apply(g, variant)
    return float(np.linalg.norm(g - g0) / np.linalg.norm(g0))


# -- generic orthogonal-polynomial families ---------------------------------

@dataclass(frozen=True)
class PolynomialFamily:
    """One-variable orthogonal polynomials given by coefficient arrays
    (lowest degree first) plus Gauss nodes/weights for their measure."""
    name: str
    coefficients: tuple[tuple[float, ...], ...]
    gauss: tuple[np.ndarray, np.ndarray]

    def value(self, k: int, x):
        return np.polynomial.polynomial.polyval(x, np.asarray(self.coefficients[k]))

    def derivative_value(self, k: int, order: int, x):
        c = np.polynomial.polynomial.polyder(np.asarray(self.coefficients[k]), order)
        return np.polynomial.polynomial.polyval(x, c)


def monomial_family(max_degree: int) -> PolynomialFamily:
    coeffs = tuple(tuple(0.0 if i != k else 1.0 for i in range(k + 1))
                   for k in range(max_degree + 1))
    nodes, weights = np.polynomial.legendre.leggauss(max_degree + 1)
    return PolynomialFamily("monomial", coeffs, (nodes, weights))


def hermite_family(max_degree: int) -> PolynomialFamily:
    """Orthonormal Hermite polynomials for the weight exp(-x^2)."""
    coeffs = []
    prev = np.array([1.0])
    cur = np.array([0.0, 2.0])
    for k in range(max_degree + 1):
        p = prev if k == 0 else cur
        norm = math.sqrt(2.0 ** k * math.factorial(k) * math.sqrt(math.pi))
        coeffs.append(tuple(p / norm))
        if k >= 1:
            nxt = 2 * np.concatenate([[0.0], cur]) - 2 * k * np.concatenate(
                [prev, [0.0, 0.0]])
            prev, cur = cur, nxt
    nodes, weights = np.polynomial.hermite.hermgauss(max_degree + 4)
    return PolynomialFamily("hermite", tuple(coeffs), (nodes, weights))


def generic_sym_poly(family: PolynomialFamily, m: Sequence[int], x: Sequence) -> float:
    """Coset sum over distinct permutations of the label."""
    total = 0.0
    for pm in set(itertools.permutations(m)):
        term = 1.0
        for mi, xi in zip(pm, x):
            term *= float(family.value(mi, xi))
        total += term
    return total


def generic_anti_poly(family: PolynomialFamily, m: Sequence[int], x: Sequence) -> float:
    grid = np.array([[float(family.value(mi, xj)) for xj in x] for mi in m])
    return complex(_perm_sum(grid.astype(complex), signed=True)).real


def generic_anti_quotient(family: PolynomialFamily, m: Sequence[int],
                          x: Sequence) -> float:
    """The antisymmetric determinant divided by the Vandermonde.

    Coinciding coordinates are a removable singularity, handled by the
    confluent determinant: repeated columns become scaled derivatives.
    """
    xs = [float(v) for v in x]
    n = len(xs)
    counts: dict[float, int] = {}
    orders = []
    for v in xs:
        orders.append(counts.get(v, 0))
        counts[v] = counts.get(v, 0) + 1
    P = np.array([[float(family.derivative_value(mi, orders[j], xs[j]))
                   / math.factorial(orders[j]) for j in range(n)] for mi in m])
    V = np.array([[_mono_deriv(n - 1 - i, orders[j], xs[j])
                   / math.factorial(orders[j]) for j in range(n)] for i in range(n)])
    return float(np.linalg.det(P) / np.linalg.det(V))


def _mono_deriv(power: int, order: int, x: float) -> float:
    if order > power:
        return 0.0
    c = math.factorial(power) / math.factorial(power - order)
    return c * x ** (power - order)


def generic_anti_orthogonality(family: PolynomialFamily, m1, m2) -> float:
    """Quadrature of the antisymmetric polynomials over the ordered region
    against delta_{m1 m2} (exact Gauss rule for the family measure)."""
    nodes, weights = family.gauss
    n = len(m1)
    grids = np.meshgrid(*([nodes] * n), indexing="ij")
    wgrids = np.meshgrid(*([weights] * n), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    ws = np.prod(np.stack([w.ravel() for w in wgrids], axis=1), axis=1)
    v1 = np.array([generic_anti_poly(family, m1, p) for p in pts])
    v2 = np.array([generic_anti_poly(family, m2, p) for p in pts])
    integral = float(np.sum(ws * v1 * v2)) / math.factorial(n)
    expect = 1.0 if tuple(m1) == tuple(m2) else 0.0
    return abs(integral - expect)
