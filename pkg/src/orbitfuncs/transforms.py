"""Grids on the fundamental domain and discrete orbit-function transforms.

Covers three layers:

* grids F_M (rational points of the closed fundamental domain) and their
  Weyl expansion modulo the coroot lattice;
* the finite orbit-function transform: an evaluation-matrix plan over the
  interior grid, with a mandatory orthogonality (separation) check at
  build time;
* the classical 1-D discrete sine/cosine transforms, DCT/DST-1..4, and
  their antisymmetrized / symmetrized multivariate versions, all driven
  by one weighted-kernel plan type.

Continuous transforms are provided at desk scale by midpoint quadrature
in coroot coordinates, where the unit cell of the coroot lattice has
volume 1 and the fundamental domain has volume 1/|W|.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .rootsys import RootSystem, Vec, vec, vec_mat
from .weyl import generate_group
from .orbitfn import eval_coroot_point, eval_batch

TWO_PI = 2.0 * math.pi


class PlanSeparationError(RuntimeError):
    """The sampling set does not separate two labels: the plan would be
    singular."""


# -- grids ---------------------------------------------------------------

@dataclass(frozen=True)
class GridPoint:
    s: tuple[int, ...]        # numerators over M in the coweight basis
    s0: int                   # the affine numerator M - sum s_i m_i
    M: int
    omega: Vec                # omega coordinates
    coroot: Vec               # coroot-basis coordinates
    interior: bool


@dataclass(frozen=True)
class GridFM:
    rs: RootSystem
    M: int
    points: tuple[GridPoint, ...]

    def interior_points(self) -> tuple[GridPoint, ...]:
        return tuple(p for p in self.points if p.interior)


def _s_tuples(marks: Sequence[int], M: int):
    """Nonnegative integer tuples s with sum(s_i * m_i) <= M."""
    n = len(marks)

    def rec(i, budget):
        if i == n:
            yield ()
            return
        for si in range(budget // marks[i] + 1):
            for rest in rec(i + 1, budget - si * marks[i]):
                yield (si,) + rest
    yield from rec(0, M)


def grid_fm(rs: RootSystem, M: int) -> GridFM:
    """The grid F_M: points sum(s_i/M) w_i^check of the closed fundamental
    domain, indexed by s with s_0 + sum s_i m_i = M over the marks m_i."""
    if M < 1:
        raise ValueError("M must be a positive integer")
    pts = []
    for s in sorted(_s_tuples(rs.marks, M)):
        s0 = M - sum(si * mi for si, mi in zip(s, rs.marks))
        omega = tuple(Fraction(si, M) * 2 / rs.root_norms[i]
                      for i, si in enumerate(s))
        coroot = vec_mat(vec(omega), rs.metric)
        interior = s0 > 0 and all(si > 0 for si in s)
        pts.append(GridPoint(s=s, s0=s0, M=M, omega=omega, coroot=coroot,
                             interior=interior))
    return GridFM(rs=rs, M=M, points=tuple(pts))


def tm_expand(rs: RootSystem, grid: GridFM) -> list[Vec]:
    """Weyl expansion of the grid modulo the coroot lattice: all distinct
    coroot-coordinate tuples w x mod 1."""
    group = generate_group(rs)
    seen: set[Vec] = set()
    for p in grid.points:
        for w in group:
            img = w.apply(p.omega)
            b = vec_mat(img, rs.metric)
            seen.add(tuple(c % 1 for c in b))
    return sorted(seen)


# -- the finite orbit-function transform ----------------------------------

@dataclass(frozen=True)
class TransformPlan:
    rs: RootSystem
    M: int
    labels: tuple[Vec, ...]
    grid: tuple[GridPoint, ...]
    kernel: np.ndarray        # (labels, grid) values of the antisymmetric functions
    norm: float               # diagonal of the interior-grid Gram matrix
    gram_matrix: np.ndarray   # cached at build, after the separation check

    def forward(self, f: np.ndarray) -> np.ndarray:
        """Coefficients a_lambda = <f, phi_lambda> / norm over the grid."""
        return (self.kernel.conj() @ np.asarray(f, dtype=complex)) / self.norm

    def inverse(self, a: np.ndarray) -> np.ndarray:
        """Signal values sum_lambda a_lambda phi_lambda(x_j)."""
        return self.kernel.T @ np.asarray(a, dtype=complex)

    def gram(self) -> np.ndarray:
        return self.gram_matrix


def finite_transform(plan: TransformPlan, f: np.ndarray,
                     direction: str = "forward") -> np.ndarray:
    """Apply a built plan to a signal (forward) or coefficient vector
    (inverse)."""
    if direction == "forward":
        return plan.forward(f)
    if direction == "inverse":
        return plan.inverse(f)
    raise ValueError(f"unknown direction {direction!r}")


def default_labels(rs: RootSystem, M: int) -> tuple[Vec, ...]:
    """The canonical square label set for F_M plans: strictly dominant
    integral weights inside the M-fold dual alcove.

    The grid side is cut out by the marks; the label side by the dual
    marks (highest-short-root coroot coefficients).  The two index sets
    coincide for simply-laced diagrams but differ for B, C, G: reusing
    the grid tuples as labels makes the plan singular there (weights
    congruent modulo M times the root lattice evaluate identically on
    every sampling point).
    """
    from .weyl import dual_marks
    dm = dual_marks(rs)
    out = []
    for s in sorted(_s_tuples(dm, M)):
        if all(si > 0 for si in s) and sum(a * b for a, b in zip(s, dm)) < M:
            out.append(vec(s))
    return tuple(out)


def lattice_index(rs: RootSystem) -> int:
    """|P^check / Q^check| = det of the Cartan matrix."""
    det = Fraction(1)
    m = [list(row) for row in rs.cartan]
    n = rs.rank
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    assert det.denominator == 1 and det > 0
    return int(det)


def build_plan(rs: RootSystem, M: int, labels: Sequence[Vec] | None = None,
               tol: float = 1e-9) -> TransformPlan:
    """Evaluation-matrix plan over the interior of F_M.

    The expected Gram diagonal over the interior grid is c M^n with
    c = |P^check/Q^check|; the Weyl expansion of the grid multiplies it by
    |W|.  Off-diagonal entries beyond tol * diagonal mean the sampling set
    does not separate two labels and the build fails.
    """
    grid = grid_fm(rs, M).interior_points()
    if labels is None:
        labels = default_labels(rs, M)
    labels = tuple(vec(l) for l in labels)
    kernel = np.empty((len(labels), len(grid)), dtype=complex)
    for i, lam in enumerate(labels):
        for j, p in enumerate(grid):
            kernel[i, j] = eval_coroot_point(rs, "antisymmetric", lam, p.coroot)
    norm = float(lattice_index(rs) * M ** rs.rank)
    g = kernel @ kernel.conj().T
    for i in range(len(labels)):
        for j in range(len(labels)):
            ref = norm if i == j else 0.0
            if abs(g[i, j] - ref) > tol * norm:
                raise PlanSeparationError(
                    f"labels {labels[i]} and {labels[j]} are not separated on "
                    f"the F_{M} grid of {rs.id.label}: gram = {g[i, j]:.3e}, "
                    f"expected {ref}")
    return TransformPlan(rs=rs, M=M, labels=labels, grid=grid,
                         kernel=kernel, norm=norm, gram_matrix=g)


def gram_over_torus(rs: RootSystem, M: int, labels: Sequence[Vec]) -> np.ndarray:
    """Gram matrix of the antisymmetric functions over the full Weyl
    expansion of F_M modulo the coroot lattice (definitional check)."""
    pts = tm_expand(rs, grid_fm(rs, M))
    V = np.array([[eval_coroot_point(rs, "antisymmetric", vec(lam), b)
                   for b in pts] for lam in labels])
    return V @ V.conj().T


# -- weighted-kernel discrete plans ---------------------------------------

@dataclass(frozen=True)
class DiscretePlan:
    """A finite transform given by kernel rows orthogonal under weighted
    sums over the grid:  sum_k weights_k K[r,k] conj(K[r',k]) = norms_r
    delta_rr'."""
    name: str
    labels: tuple
    grid: tuple
    kernel: np.ndarray
    weights: np.ndarray
    norms: np.ndarray

    def forward(self, f: np.ndarray) -> np.ndarray:
        f = np.asarray(f, dtype=complex)
        return (self.kernel.conj() * self.weights) @ f / self.norms

    def inverse(self, a: np.ndarray) -> np.ndarray:
        return self.kernel.T @ np.asarray(a, dtype=complex)

    def gram(self) -> np.ndarray:
        return (self.kernel * self.weights) @ self.kernel.conj().T

    def gram_residual(self) -> float:
        g = self.gram()
        return float(np.max(np.abs(g - np.diag(self.norms))))


def _dct_dst_data(kind: str, N: int):
    """(labels, grid nodes, kernel fn, weight fn, norm fn) for the 1-D
    transforms; nodes are the integer indices of each variant."""
    half = 0.5
    if kind == "dct1":
        return (range(N + 1), range(N + 1),
                lambda r, k: math.cos(math.pi * r * k / N),
                lambda k: half if k in (0, N) else 1.0,
                lambda r: (2.0 if r in (0, N) else 1.0) * N / 2)
    if kind == "dct2":
        return (range(N), range(N),
                lambda r, k: math.cos(math.pi * (r + half) * k / N),
                lambda k: half if k == 0 else 1.0,
                lambda r: N / 2)
    if kind == "dct3":
        return (range(N), range(N),
                lambda r, k: math.cos(math.pi * r * (k + half) / N),
                lambda k: 1.0,
                lambda r: (2.0 if r == 0 else 1.0) * N / 2)
    if kind == "dct4":
        return (range(N), range(N),
                lambda r, k: math.cos(math.pi * (r + half) * (k + half) / N),
                lambda k: 1.0,
                lambda r: N / 2)
    if kind == "dst1":
        return (range(1, N), range(1, N),
                lambda r, k: math.sin(math.pi * r * k / N),
                lambda k: 1.0,
                lambda r: N / 2)
    if kind == "dst2":
        return (range(N), range(1, N + 1),
                lambda r, k: math.sin(math.pi * (r + half) * k / N),
                lambda k: half if k == N else 1.0,
                lambda r: N / 2)
    if kind == "dst3":
        return (range(1, N + 1), range(N),
                lambda r, k: math.sin(math.pi * r * (k + half) / N),
                lambda k: 1.0,
                lambda r: (2.0 if r == N else 1.0) * N / 2)
    if kind == "dst4":
        return (range(N), range(N),
                lambda r, k: math.sin(math.pi * (r + half) * (k + half) / N),
                lambda k: 1.0,
                lambda r: N / 2)
    raise ValueError(f"unknown 1-D transform kind {kind!r}")


def dst_dct_1d(kind: str, N: int) -> DiscretePlan:
    """The classical discrete transforms on one variable.

    ``"sine"`` and ``"cosine"`` are the orbit-function normalizations on
    the grid {k/M}; ``"dct1".."dct4"`` and ``"dst1".."dst4"`` the standard
    signal-processing kernels with their weight conventions.
    """
    kind = kind.lower()
    if kind == "sine":
        M = N
        labels = tuple(range(1, M))
        grid = tuple(Fraction(k, M) for k in range(1, M))
        kernel = np.array([[2j * math.sin(math.pi * m * float(s)) for s in grid]
                           for m in labels])
        return DiscretePlan(kind, labels, grid, kernel,
                            np.ones(len(grid)), np.full(len(labels), 2.0 * M))
    if kind == "cosine":
        M = N
        labels = tuple(range(M + 1))
        grid = tuple(Fraction(k, M) for k in range(M + 1))
        kernel = np.array([[2 * math.cos(math.pi * m * float(s)) for s in grid]
                           for m in labels]).astype(complex)
        weights = np.array([0.5 if s in (0, 1) else 1.0 for s in grid])
        norms = np.array([(4.0 if m in (0, M) else 2.0) * M for m in labels])
        return DiscretePlan(kind, labels, grid, kernel, weights, norms)
    labels, nodes, kfn, wfn, nfn = _dct_dst_data(kind, N)
    labels, nodes = tuple(labels), tuple(nodes)
    kernel = np.array([[kfn(r, k) for k in nodes] for r in labels]).astype(complex)
    weights = np.array([wfn(k) for k in nodes])
    norms = np.array([nfn(r) for r in labels])
    return DiscretePlan(kind, labels, nodes, kernel, weights, norms)


def _tuples(values, n: int, strict: bool):
    if strict:
        return [t for t in itertools.combinations(sorted(values, reverse=True), n)]
    return [t for t in itertools.combinations_with_replacement(
        sorted(values, reverse=True), n)]


def _stab_order(t) -> int:
    """Order of the permutation stabilizer of a tuple: the product of the
    factorials of its entry multiplicities."""
    out = 1
    for c in Counter(t).values():
        out *= math.factorial(c)
    return out


def _det_or_perm_rows(one_dim: Callable, labels, grid, signed: bool) -> np.ndarray:
    """Kernel matrix of |S_n|^{-1/2} det/perm (one_dim(r_i, k_j))."""
    n = len(labels[0])
    fact = 1.0 / math.sqrt(math.factorial(n))
    out = np.empty((len(labels), len(grid)), dtype=complex)
    perms = list(itertools.permutations(range(n)))
    sgns = [_parity(p) for p in perms]
    for a, r in enumerate(labels):
        for b, k in enumerate(grid):
            total = 0j
            for p, sg in zip(perms, sgns):
                term = 1.0 + 0j
                for i in range(n):
                    term *= one_dim(r[p[i]], k[i])
                total += (sg if signed else 1) * term
            out[a, b] = fact * total
    return out


def _parity(p) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                c += 1
            if c % 2 == 0:
                sign = -sign
    return sign


def multivariate_plan(kind: str, n: int, N: int) -> DiscretePlan:
    """Antisymmetric and symmetric multivariate discrete transforms.

    kinds: ``anti_exp``, ``sym_exp`` (discrete Fourier kernels),
    ``anti_sine``, ``sym_cosine`` (orbit-function normalizations on the
    grid {k/M}), and ``amdct1..4`` / ``smdct1..4`` built on the DCT
    kernels.  Labels and grid nodes are decreasing tuples, strictly
    decreasing for the antisymmetric kinds.
    """
    kind = kind.lower()
    nf = math.factorial(n)
    if kind in ("anti_exp", "sym_exp"):
        signed = kind == "anti_exp"
        vals = range(1, N + 1)
        labels = _tuples(vals, n, strict=signed)
        grid = [tuple(Fraction(k, N) for k in t) for t in _tuples(vals, n, strict=signed)]
        one = lambda m, s: cmath_exp(TWO_PI * m * float(s)) / math.sqrt(N)
        kernel = _det_or_perm_rows(one, labels, grid, signed)
        if signed:
            weights = np.full(len(grid), float(nf))
            norms = np.ones(len(labels))
        else:
            weights = np.array([nf / _stab_order(t) for t in grid])
            norms = np.array([float(_stab_order(r)) for r in labels])
        return DiscretePlan(kind, tuple(labels), tuple(grid), kernel, weights, norms)
    if kind == "anti_sine":
        M = N
        labels = _tuples(range(1, M), n, strict=True)
        grid = [tuple(Fraction(k, M) for k in t) for t in _tuples(range(1, M), n, strict=True)]
        one = lambda m, s: 2j * math.sin(math.pi * m * float(s))
        kernel = _det_or_perm_rows(one, labels, grid, signed=True)
        return DiscretePlan(kind, tuple(labels), tuple(grid), kernel,
                            np.full(len(grid), float(nf)),
                            np.full(len(labels), float((2 * M) ** n)))
    if kind == "sym_cosine":
        M = N
        labels = _tuples(range(M + 1), n, strict=False)
        grid = [tuple(Fraction(k, M) for k in t) for t in _tuples(range(M + 1), n, strict=False)]
        one = lambda m, s: 2 * math.cos(math.pi * m * float(s))
        kernel = _det_or_perm_rows(one, labels, grid, signed=False)
        cs = [np.prod([0.5 if v in (0, 1) else 1.0 for v in t]) for t in grid]
        weights = np.array([nf * c / _stab_order(t) for c, t in zip(cs, grid)])
        rm = [np.prod([4.0 if v in (0, M) else 2.0 for v in r]) for r in labels]
        norms = np.array([float(M ** n) * r * _stab_order(lab)
                          for r, lab in zip(rm, labels)])
        return DiscretePlan(kind, tuple(labels), tuple(grid), kernel, weights, norms)
    if kind[:5] in ("amdct", "smdct") and kind[5:] in "1234" and len(kind) == 6:
        variant = kind[5]
        signed = kind.startswith("a")
        base = "dct" + variant
        _, nodes, kfn, wfn, nfn = _dct_dst_data(base, N)
        nodes = tuple(nodes)
        labels = _tuples(nodes, n, strict=signed)
        grid = _tuples(nodes, n, strict=signed)
        kernel = _det_or_perm_rows(kfn, labels, grid, signed)
        cw = [np.prod([wfn(k) for k in t]) for t in grid]
        hw = [np.prod([nfn(r) / (N / 2) for r in t]) for t in labels]
        if signed:
            weights = np.array([nf * c for c in cw])
            norms = np.array([h * (N / 2) ** n for h in hw])
        else:
            weights = np.array([nf * c / _stab_order(t) for c, t in zip(cw, grid)])
            norms = np.array([h * (N / 2) ** n * _stab_order(lab)
                              for h, lab in zip(hw, labels)])
        return DiscretePlan(kind, tuple(labels), tuple(grid), kernel, weights, norms)
    raise ValueError(f"unknown multivariate kind {kind!r}")


def cmath_exp(phase: float) -> complex:
    return complex(math.cos(phase), math.sin(phase))


# -- continuous transforms at desk scale -----------------------------------

def fundamental_domain_quadrature(rs: RootSystem, resolution: int = 200):
    """Midpoint rule on F in coroot coordinates.

    Returns (omega coordinates of the nodes as an (K, n) array, cell
    weight).  In these coordinates the torus cell has volume 1, so the
    weights sum to ~ 1/|W| and the antisymmetric functions satisfy
    int_F phi conj(phi') = delta.
    """
    n = rs.rank
    Sinv = np.array([[float(x) for x in row] for row in rs.metric_inv])
    S = np.array([[float(x) for x in row] for row in rs.metric])
    # bounding box of the simplex {0, rows of S / q_i} in coroot coordinates
    verts = np.vstack([np.zeros(n)] +
                      [S[i] / rs.comarks[i] for i in range(n)])
    lo, hi = verts.min(axis=0), verts.max(axis=0)
    axes = [lo[k] + (hi[k] - lo[k]) * (np.arange(resolution) + 0.5) / resolution
            for k in range(n)]
    mesh = np.meshgrid(*axes, indexing="ij")
    c = np.stack([m.ravel() for m in mesh], axis=1)
    theta = c @ Sinv
    level = theta @ np.array([float(q) for q in rs.comarks])
    mask = np.all(theta >= 0, axis=1) & (level <= 1)
    cell = float(np.prod((hi - lo) / resolution))
    return theta[mask], cell


def continuous_orthogonality_residual(rs: RootSystem, lam, mu,
                                      resolution: int = 200) -> float:
    pts, w = fundamental_domain_quadrature(rs, resolution)
    vals1 = eval_batch(rs, "anti", lam, pts)
    vals2 = eval_batch(rs, "anti", mu, pts)
    integral = np.sum(vals1 * vals2.conj()) * w
    expect = 1.0 if tuple(lam) == tuple(mu) else 0.0
    return float(abs(integral - expect))


def mixed_symmetry_orthogonality_residual(rs: RootSystem, mu,
                                          resolution: int = 200) -> float:
    """Quadrature of phi_mu conj(varphi_mu) over F union r_1 F."""
    n = rs.rank
    pts, w = fundamental_domain_quadrature(rs, resolution)
    sym = eval_batch(rs, "sym", mu, pts)
    anti = eval_batch(rs, "anti", mu, pts)
    part_f = np.sum(sym * anti.conj()) * w
    # reflected copy: integrate the pullbacks over F
    from .weyl import generators
    r1 = generators(rs)[0]
    mat = np.array([[float(r1.matrix[i][j]) for j in range(n)] for i in range(n)])
    pts_r = pts @ mat.T
    sym_r = eval_batch(rs, "sym", mu, pts_r)
    anti_r = eval_batch(rs, "anti", mu, pts_r)
    part_rf = np.sum(sym_r * anti_r.conj()) * w
    return float(abs(part_f + part_rf))


def series_coefficients(rs: RootSystem, f: Callable, labels,
                        resolution: int = 200) -> np.ndarray:
    """c_lambda = int_F f(x) conj(phi_lambda(x)) dx by midpoint quadrature;
    f maps an (K, n) array of omega coordinates to values."""
    pts, w = fundamental_domain_quadrature(rs, resolution)
    fv = np.asarray(f(pts), dtype=complex)
    out = []
    for lam in labels:
        vals = eval_batch(rs, "anti", lam, pts)
        out.append(np.sum(fv * vals.conj()) * w)
    return np.array(out)


def series_synthesis(rs: RootSystem, coeffs, labels, xs: np.ndarray) -> np.ndarray:
    """Evaluate sum_lambda c_lambda phi_lambda at omega-coordinate points:
    the inverse of :func:`series_coefficients` on its span."""
    out = np.zeros(len(xs), dtype=complex)
    for c, lam in zip(coeffs, labels):
        out += c * eval_batch(rs, "anti", lam, xs)
    return out


def plancherel_residual(rs: RootSystem, f: Callable, labels,
                        resolution: int = 200) -> float:
    """| sum |c_lambda|^2 - int_F |f|^2 | for a function spanned by the
    given labels."""
    pts, w = fundamental_domain_quadrature(rs, resolution)
    fv = np.asarray(f(pts), dtype=complex)
    coeffs = series_coefficients(rs, f, labels, resolution)
    lhs = float(np.sum(np.abs(coeffs) ** 2))
    rhs = float(np.sum(np.abs(fv) ** 2) * w)
    return abs(lhs - rhs)


def _chamber_points(n: int, upper: float, resolution: int):
    """Midpoint nodes covering the ordered chamber: for n = 2 the full
    square is sampled with half weight, which integrates (anti)symmetric
    extensions over the chamber without a diagonal-strip error.  The
    supplied function is therefore evaluated at unordered points too and
    must implement the matching extension (any globally defined formula
    does)."""
    ax = (np.arange(resolution) + 0.5) * upper / resolution
    cell = (upper / resolution) ** n
    if n == 1:
        return ax[:, None], cell
    g1, g2 = np.meshgrid(ax, ax, indexing="ij")
    return np.stack([g1.ravel(), g2.ravel()], axis=1), cell / 2


def sine_integral_transform(f: Callable, lams: Sequence, upper: float,
                            resolution: int = 400) -> np.ndarray:
    """Multivariate sine integral transform over the truncated positive
    chamber {upper > x_1 > ... > x_n > 0}: ftilde(lam) = int f det(sin
    2 pi lam_i x_j) dx.  n is inferred from the label length; n <= 2."""
    n = len(lams[0])
    if n > 2:
        raise ValueError("quadrature transform supports n <= 2 only")
    pts, cell = _chamber_points(n, upper, resolution)
    fv = np.asarray(f(pts), dtype=float)
    out = []
    for lam in lams:
        lamv = np.asarray([float(v) for v in lam])
        if n == 1:
            kern = np.sin(TWO_PI * lamv[0] * pts[:, 0])
        else:
            kern = (np.sin(TWO_PI * lamv[0] * pts[:, 0]) * np.sin(TWO_PI * lamv[1] * pts[:, 1])
                    - np.sin(TWO_PI * lamv[1] * pts[:, 0]) * np.sin(TWO_PI * lamv[0] * pts[:, 1]))
        out.append(np.sum(fv * kern) * cell)
    return np.array(out)


def cosine_integral_transform(f: Callable, lams: Sequence, upper: float,
                              resolution: int = 400) -> np.ndarray:
    """Symmetric counterpart of :func:`sine_integral_transform` with the
    permanent-style cosine kernel."""
    n = len(lams[0])
    if n > 2:
        raise ValueError("quadrature transform supports n <= 2 only")
    pts, cell = _chamber_points(n, upper, resolution)
    fv = np.asarray(f(pts), dtype=float)
    out = []
    for lam in lams:
        lamv = np.asarray([float(v) for v in lam])
        if n == 1:
            kern = np.cos(TWO_PI * lamv[0] * pts[:, 0])
        else:
            kern = (np.cos(TWO_PI * lamv[0] * pts[:, 0]) * np.cos(TWO_PI * lamv[1] * pts[:, 1])
                    + np.cos(TWO_PI * lamv[1] * pts[:, 0]) * np.cos(TWO_PI * lamv[0] * pts[:, 1]))
        out.append(np.sum(fv * kern) * cell)
    return np.array(out)
