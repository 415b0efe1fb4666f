"""Evaluation of symmetric and antisymmetric orbit functions.

Two evaluation routes are provided and cross-checked by the tests:

* the defining sums over the Weyl group / Weyl orbit, in omega coordinates
  (any diagram) or in orthogonal coordinates (families A, B, C, D);
* closed forms: determinants and permanent-like sums of exponentials,
  sines and cosines in orthogonal coordinates, and the product-over-
  positive-roots formulas for the weight rho.

Weights stay exact rationals until the final trigonometric evaluation.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .rootsys import (
    RootSystem, vec, is_dominant, inner, orth_dim,
)
from .weyl import (
    orbit, signed_orbit, stabilizer_order, positive_roots,
    orth_group, orth_apply, WallError,
)

TWO_PI = 2.0 * math.pi

_KINDS = ("antisymmetric", "symmetric", "normalized")


def _norm_kind(kind: str) -> str:
    k = kind.lower()
    aliases = {"anti": "antisymmetric", "sym": "symmetric", "norm": "normalized"}
    k = aliases.get(k, k)
    if k not in _KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {_KINDS}")
    return k


class NearSingularEvaluationError(ArithmeticError):
    """Character evaluation too close to a zero of the rho function."""


# -- omega-coordinate evaluation -----------------------------------------

_TERMS_CACHE: dict = {}


def _terms_omega(rs: RootSystem, kind: str, lam: tuple) -> tuple[np.ndarray, np.ndarray]:
    """Rows mu.S for every term mu, plus the coefficient of each term."""
    key = (rs.id, kind, lam)
    if key in _TERMS_CACHE:
        return _TERMS_CACHE[key]
    lamv = vec(lam)
    if kind == "antisymmetric":
        pts = signed_orbit(rs, lamv).points
        coeffs = np.array([s for _, s in pts], dtype=float)
        weights = [p for p, _ in pts]
    else:
        if not is_dominant(lamv):
            raise ValueError("symmetric orbit functions need a dominant weight")
        weights = orbit(rs, lamv)
        c = 1.0 if kind == "symmetric" else float(stabilizer_order(rs, lamv))
        coeffs = np.full(len(weights), c)
    S = rs.metric
    n = rs.rank
    rows = np.array(
        [[float(sum(p[i] * S[i][j] for i in range(n))) for j in range(n)]
         for p in weights])
    _TERMS_CACHE[key] = (rows, coeffs)
    return rows, coeffs


def eval_orbit_function(rs: RootSystem, kind: str, lam: Sequence, x: Sequence) -> complex:
    """Orbit function at a single point x given in omega coordinates.

    antisymmetric: sum over W of det(w) exp(2 pi i <w lam, x>)
    symmetric:     sum over the orbit of exp(2 pi i <mu, x>)
    normalized:    |W_lam| times the symmetric value
    """
    return complex(eval_batch(rs, kind, lam, np.asarray([list(map(float, x))]))[0])


def eval_batch(rs: RootSystem, kind: str, lam: Sequence, xs: np.ndarray) -> np.ndarray:
    """Vectorized evaluation at an (N, rank) array of omega coordinates."""
    kind = _norm_kind(kind)
    rows, coeffs = _terms_omega(rs, kind, tuple(Fraction(c) for c in lam))
    xs = np.asarray(xs, dtype=float)
    phases = rows @ xs.T                       # (terms, N) of <mu, x>
    return coeffs @ np.exp(TWO_PI * 1j * phases)


def eval_coroot_point(rs: RootSystem, kind: str, lam: Sequence, b: Sequence) -> complex:
    """Evaluate at a point given by exact coroot-basis coordinates b.

    The pairing with a weight in omega coordinates is the plain dot
    product, so the phase is an exact rational; this is what the discrete
    transforms use.
    """
    kind = _norm_kind(kind)
    lamv = vec(lam)
    bv = vec(b)
    if kind == "antisymmetric":
        terms = signed_orbit(rs, lamv).points
    else:
        c = 1 if kind == "symmetric" else stabilizer_order(rs, lamv)
        terms = [(p, c) for p in orbit(rs, lamv)]
    total = 0j
    for p, s in terms:
        phase = sum(pi * bi for pi, bi in zip(p, bv)) % 1
        total += s * complex(math.cos(TWO_PI * float(phase)),
                             math.sin(TWO_PI * float(phase)))
    return total


# -- orthogonal-coordinate evaluation (A, B, C, D) -----------------------

_ORTH_CACHE: dict = {}


def _orth_terms(rs: RootSystem, kind: str, m: tuple) -> tuple[np.ndarray, np.ndarray]:
    key = (rs.id, kind, m)
    if key in _ORTH_CACHE:
        return _ORTH_CACHE[key]
    imgs, coeffs = [], []
    for p, s, d in orth_group(rs):
        imgs.append([float(v) for v in orth_apply(p, s, m)])
        coeffs.append(float(d) if kind == "antisymmetric" else 1.0)
    out = (np.array(imgs), np.array(coeffs))
    _ORTH_CACHE[key] = out
    return out


def is_strictly_dominant_orth(rs: RootSystem, m: Sequence) -> bool:
    fam = rs.family
    mv = [Fraction(v) for v in m]
    if fam == "A":
        return all(mv[i] > mv[i + 1] for i in range(len(mv) - 1))
    if fam in ("B", "C"):
        return all(mv[i] > mv[i + 1] for i in range(len(mv) - 1)) and mv[-1] > 0
    if fam == "D":
        return all(mv[i] > mv[i + 1] for i in range(len(mv) - 2)) and mv[-2] > abs(mv[-1])
    raise ValueError(f"no orthogonal model for {rs.id.label}")


def eval_orth(rs: RootSystem, kind: str, m: Sequence, x: Sequence) -> complex:
    """Defining sum in orthogonal coordinates (full Weyl-group sum).

    Requires m strictly dominant in the orthogonal sense, so that the
    group sum and the orbit sum coincide for the symmetric kind too.
    """
    kind = _norm_kind(kind)
    if kind == "normalized":
        raise ValueError("normalized kind is only defined on omega coordinates")
    if not is_strictly_dominant_orth(rs, m):
        raise WallError(f"{tuple(m)} is not strictly dominant in orthogonal coordinates")
    if len(m) != orth_dim(rs):
        raise ValueError(f"expected {orth_dim(rs)} coordinates")
    imgs, coeffs = _orth_terms(rs, kind, tuple(Fraction(v) for v in m))
    xv = np.asarray([float(v) for v in x])
    return complex(coeffs @ np.exp(TWO_PI * 1j * (imgs @ xv)))


def eval_orth_batch(rs: RootSystem, kind: str, m: Sequence, xs: np.ndarray) -> np.ndarray:
    """Vectorized form of :func:`eval_orth` over an (N, dim) array."""
    kind = _norm_kind(kind)
    if not is_strictly_dominant_orth(rs, m):
        raise WallError(f"{tuple(m)} is not strictly dominant in orthogonal coordinates")
    imgs, coeffs = _orth_terms(rs, kind, tuple(Fraction(v) for v in m))
    xs = np.asarray(xs, dtype=float)
    return coeffs @ np.exp(TWO_PI * 1j * (imgs @ xs.T))


def _perm_sum(values: np.ndarray, signed: bool) -> complex:
    """det (signed) or permanent (unsigned) of a small square matrix."""
    n = values.shape[0]
    total = 0j
    for p in itertools.permutations(range(n)):
        term = 1.0 + 0j
        for i in range(n):
            term *= values[i, p[i]]
        if signed:
            sign = 1
            seen = [False] * n
            for i in range(n):
                if not seen[i]:
                    j, c = i, 0
                    while not seen[j]:
                        seen[j] = True
                        j = p[j]
                        c += 1
                    if c % 2 == 0:
                        sign = -sign
            total += sign * term
        else:
            total += term
    return total


def closed_form_orth(rs: RootSystem, kind: str, m: Sequence, x: Sequence) -> complex:
    """Determinant / permanent closed forms in orthogonal coordinates."""
    kind = _norm_kind(kind)
    fam = rs.family
    if fam not in "ABCD":
        raise ValueError(f"no closed orthogonal form for {rs.id.label}")
    if not is_strictly_dominant_orth(rs, m):
        raise WallError(f"{tuple(m)} is not strictly dominant in orthogonal coordinates")
    mv = np.asarray([float(v) for v in m])
    xv = np.asarray([float(v) for v in x])
    n = rs.rank
    if fam == "A":
        grid = np.exp(TWO_PI * 1j * np.outer(mv, xv))
        return _perm_sum(grid, signed=(kind == "antisymmetric"))
    sin = np.sin(TWO_PI * np.outer(mv, xv)).astype(complex)
    cos = np.cos(TWO_PI * np.outer(mv, xv)).astype(complex)
    if fam in ("B", "C"):
        if kind == "antisymmetric":
            return (2j) ** n * _perm_sum(sin, signed=True)
        return 2 ** n * _perm_sum(cos, signed=False)
    # D_n
    signed = kind == "antisymmetric"
    cos_part = 2 ** (n - 1) * _perm_sum(cos, signed=signed)
    if Fraction(m[-1]) == 0:
        return cos_part
    sin_part = Fraction(1, 2) * (2j) ** n * _perm_sum(sin, signed=signed)
    return complex(sin_part) + cos_part


# -- rho products ---------------------------------------------------------

def rho_products(rs: RootSystem, x: Sequence) -> tuple[complex, complex]:
    """(antisymmetric, symmetric) rho functions as products over positive
    roots: (2i)^r prod sin(pi <alpha,x>) and 2^r prod cos(pi <alpha,x>)."""
    pos = positive_roots(rs)
    S = rs.metric
    n = rs.rank
    xv = np.asarray([float(c) for c in x])
    sines, cosines = 1.0, 1.0
    for alpha in pos:
        arow = np.array([float(sum(alpha[i] * S[i][j] for i in range(n)))
                         for j in range(n)])
        ang = math.pi * float(arow @ xv)
        sines *= math.sin(ang)
        cosines *= math.cos(ang)
    r = len(pos)
    return (2j) ** r * sines, (2 ** r) * cosines


_RHO_COS_CACHE: dict = {}


def rho_cosine_orbit_decomposition(rs: RootSystem) -> dict:
    """Exact expansion of 2^r prod cos(pi <alpha,x>) into symmetric orbit
    functions, as {dominant label: integer coefficient}.

    Expanding the product gives one exponential per subset S of the
    positive roots, at the weight rho - sum(S); collecting the dominant
    ones yields the coefficients.  The leading term is the rho orbit with
    coefficient 1; for rank >= 2 lower orbits appear as well, so the
    product is *not* equal to the rho orbit sum alone.
    """
    if rs.id in _RHO_COS_CACHE:
        return _RHO_COS_CACHE[rs.id]
    pos = positive_roots(rs)
    rho = rs.rho
    counts: dict = {}
    for mask in range(1 << len(pos)):
        point = list(rho)
        m = mask
        i = 0
        while m:
            if m & 1:
                for k in range(rs.rank):
                    point[k] -= pos[i][k]
            m >>= 1
            i += 1
        key = tuple(point)
        counts[key] = counts.get(key, 0) + 1
    coeffs = {lab: c for lab, c in counts.items() if is_dominant(lab)}
    assert coeffs[rho] == 1
    _RHO_COS_CACHE[rs.id] = coeffs
    return coeffs


def rho_orth(rs: RootSystem):
    """rho in the orthogonal coordinate models."""
    n = rs.rank
    return {
        "A": tuple(Fraction(k) for k in range(n, -1, -1)),
        "B": tuple(Fraction(2 * k - 1, 2) for k in range(n, 0, -1)),
        "C": tuple(Fraction(k) for k in range(n, 0, -1)),
        "D": tuple(Fraction(k) for k in range(n - 1, -1, -1)),
    }[rs.family]


def rho_products_orth(rs: RootSystem, x: Sequence) -> tuple[complex, complex]:
    """Per-family products for the rho functions in orthogonal coordinates.

    For A_n the formulas hold on the zero-sum hyperplane.
    """
    fam, n = rs.family, rs.rank
    xv = [float(v) for v in x]
    sin, cos = math.sin, math.cos
    pi = math.pi
    if fam == "A":
        r = n * (n + 1) // 2
        s = c = 1.0
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                s *= sin(pi * (xv[i] - xv[j]))
                c *= cos(pi * (xv[i] - xv[j]))
        return (2j) ** r * s, 2 ** r * c
    if fam in ("B", "C"):
        r = n * n
        s = c = 1.0
        for i in range(n):
            for j in range(i + 1, n):
                s *= sin(pi * (xv[i] - xv[j])) * sin(pi * (xv[i] + xv[j]))
                c *= cos(pi * (xv[i] - xv[j])) * cos(pi * (xv[i] + xv[j]))
        for i in range(n):
            ang = pi * xv[i] if fam == "B" else 2 * pi * xv[i]
            s *= sin(ang)
            c *= cos(ang)
        return (2j) ** r * s, 2 ** r * c
    if fam == "D":
        r = n * (n - 1)
        s = c = 1.0
        for i in range(n):
            for j in range(i + 1, n):
                s *= sin(pi * (xv[i] - xv[j])) * sin(pi * (xv[i] + xv[j]))
                c *= cos(pi * (xv[i] - xv[j])) * cos(pi * (xv[i] + xv[j]))
        return (2j) ** r * s, 2 ** r * c
    raise ValueError(f"no orthogonal model for {rs.id.label}")


# -- characters and dimensions -------------------------------------------

def character(rs: RootSystem, lam: Sequence, x: Sequence,
              threshold: float = 1e-12) -> complex:
    """Weyl character: the ratio of the shifted and unshifted rho-type
    antisymmetric orbit functions."""
    lamv = vec(lam)
    if not is_dominant(lamv) or any(c.denominator != 1 for c in lamv):
        raise ValueError("character needs a dominant integral weight")
    shifted = tuple(c + 1 for c in lamv)
    denom = eval_orbit_function(rs, "antisymmetric", rs.rho, x)
    if abs(denom) < threshold:
        raise NearSingularEvaluationError(
            f"|rho function| = {abs(denom):.2e} at x={tuple(x)}; perturb x "
            f"or use dimension() for the x -> 0 limit")
    return eval_orbit_function(rs, "antisymmetric", shifted, x) / denom


def character_highprec(rs: RootSystem, lam: Sequence, x: Sequence, dps: int = 60) -> complex:
    """Character by the defining ratio in arbitrary precision.

    Near x = 0 both orbit sums are ~ |x|^r while their terms are O(1), so
    double precision loses everything to cancellation; this path keeps
    enough digits to take the limit numerically.  x must be rational.
    """
    import mpmath as mp

    xv = vec(x)
    lamv = vec(lam)
    shifted = tuple(c + 1 for c in lamv)

    def anti(mu):
        with mp.workdps(dps):
            total = mp.mpc(0)
            for p, s in signed_orbit(rs, mu).points:
                phase = inner(rs, p, xv)
                total += s * mp.expjpi(2 * mp.mpf(phase.numerator) / phase.denominator)
            return total

    with mp.workdps(dps):
        val = anti(shifted) / anti(rs.rho)
        return complex(val)


def dimension(rs: RootSystem, lam: Sequence) -> int:
    """Product formula for the x -> 0 limit of the character, exactly."""
    lamv = vec(lam)
    if not is_dominant(lamv) or any(c.denominator != 1 for c in lamv):
        raise ValueError("dimension needs a dominant integral weight")
    shifted = tuple(c + 1 for c in lamv)
    total = Fraction(1)
    for alpha in positive_roots(rs):
        total *= inner(rs, shifted, alpha) / inner(rs, rs.rho, alpha)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {total} for {lamv}")
    return int(total)


# -- generating-function identities for the A family ---------------------

def vandermonde(v: Sequence) -> Fraction:
    vv = [Fraction(c) for c in v]
    out = Fraction(1)
    for i in range(len(vv)):
        for j in range(i + 1, len(vv)):
            out *= vv[i] - vv[j]
    return out


def _staircase(k: int) -> tuple:
    return tuple(range(k - 1, -1, -1))


def partitions(total: int, parts: int):
    """Weakly decreasing nonnegative integer tuples with the given sum."""
    def rec(rest, maxpart, k):
        if k == 0:
            if rest == 0:
                yield ()
            return
        for first in range(min(rest, maxpart), -1, -1):
            if first * k < rest:
                break
            for tail in rec(rest - first, first, k - 1):
                yield (first,) + tail
    yield from rec(total, total, parts)


def det_powers(m: Sequence[int], ys: Sequence) -> complex:
    """det(y_j ** m_i): the antisymmetrized multivariate power sum."""
    n = len(ys)
    grid = np.array([[complex(y) ** int(mi) for y in ys] for mi in m])
    return _perm_sum(grid, signed=True)


def an_identity(check: str, **params) -> float:
    """Evaluate one of the A-family identities; returns |LHS - RHS|.

    Exact finite identities (``cha5``, ``cha6``, ``cha7``) are computed in
    integer arithmetic and return exactly 0.0 on success.  The series
    identities (``R1``, ``cauchy``, ``cha3``, ``cha4``) are truncated at
    total degree ``K`` and need max(|y|,|z|,|t|) < 1.
    """
    check = check.lower().replace("-", "")
    if check == "cha5":
        s, r, m = params["s"], params["r"], params["m"]
        rho_s, rho_r = _staircase(s), _staircase(r)
        lhs = sum(
            vandermonde([a + b for a, b in zip(mm, rho_s)])
            * vandermonde([a + b for a, b in zip(mm + (0,) * (r - s), rho_r)])
            for mm in partitions(m, s))
        rhs = (Fraction(math.factorial(s * r + m - 1),
                        math.factorial(s * r - 1) * math.factorial(m))
               * vandermonde(rho_s) * vandermonde(rho_r))
        return float(abs(lhs - rhs))
    if check in ("cha6", "cha7"):
        n, m = params["n"], params["m"]
        rho = _staircase(n)
        if check == "cha6":
            labels = [tuple(2 * a for a in mm) for mm in partitions(m, n)]
            d = n * (n + 1) // 2
        else:
            nu = n // 2
            labels = []
            for mm in partitions(m, nu):
                doubled = tuple(itertools.chain.from_iterable((a, a) for a in mm))
                labels.append(doubled + (0,) * (n - 2 * nu))
            d = n * (n - 1) // 2
        lhs = sum(vandermonde([a + b for a, b in zip(lab, rho)]) for lab in labels)
        rhs = (Fraction(math.factorial(d + m - 1),
                        math.factorial(d - 1) * math.factorial(m))
               * vandermonde(rho))
        return float(abs(lhs - rhs))
    if check in ("r1", "cauchy"):
        ys = [complex(v) for v in params["y"]]
        zs = [complex(v) for v in params["z"]]
        K = params.get("K", 12)
        if max(max(abs(v) for v in ys), max(abs(v) for v in zs)) >= 1:
            raise ValueError("series identity needs |y_i|, |z_j| < 1")
        n1, n2 = len(ys), len(zs)
        if n1 > n2:
            raise ValueError("give the shorter tuple first")
        rho1, rho2 = _staircase(n1), _staircase(n2)
        rhs = 0j
        for total in range(K + 1):
            for mm in partitions(total, n1):
                mhat = mm + (0,) * (n2 - n1)
                rhs += (det_powers([a + b for a, b in zip(mm, rho1)], ys)
                        * det_powers([a + b for a, b in zip(mhat, rho2)], zs))
        if check == "r1":
            lhs = det_powers(rho1, ys) * det_powers(rho2, zs)
            for yi in ys:
                for zj in zs:
                    lhs /= (1 - yi * zj)
        else:
            if n1 != n2:
                raise ValueError("the determinant identity needs len(y) == len(z)")
            grid = np.array([[1.0 / (1 - yi * zj) for zj in zs] for yi in ys])
            lhs = _perm_sum(grid.astype(complex), signed=True)
        return abs(lhs - rhs)
    if check in ("cha3", "cha4"):
        ys = [complex(v) for v in params["y"]]
        t = complex(params.get("t", 1.0))
        K = params.get("K", 12)
        n = len(ys)
        rho = _staircase(n)
        rhs = 0j
        if check == "cha3":
            for total in range(K + 1):
                for mm in partitions(total, n):
                    lab = [2 * a + b for a, b in zip(mm, rho)]
                    rhs += det_powers(lab, ys) * t ** total
            lhs = det_powers(rho, ys)
            for i in range(n):
                for j in range(i, n):
                    lhs /= (1 - t * ys[i] * ys[j])
        else:
            nu = n // 2
            for total in range(K + 1):
                for mm in partitions(total, nu):
                    doubled = tuple(itertools.chain.from_iterable((a, a) for a in mm))
                    doubled += (0,) * (n - 2 * nu)
                    lab = [a + b for a, b in zip(doubled, rho)]
                    rhs += det_powers(lab, ys) * t ** total
            lhs = det_powers(rho, ys)
            for i in range(n):
                for j in range(i + 1, n):
                    lhs /= (1 - t * ys[i] * ys[j])
        return abs(lhs - rhs)
    raise ValueError(f"unknown identity {check!r}")
