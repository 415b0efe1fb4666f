"""Static data of connected root systems: Cartan matrices, metrics, bases.

All lattice-level data is kept as exact rationals (``fractions.Fraction``);
floating point enters only at evaluation time in the other modules.

Vectors are plain tuples of Fractions.  Three coordinate systems are used
throughout the package:

* ``omega``  -- coordinates with respect to the fundamental weights,
* ``alpha``  -- coordinates with respect to the simple roots,
* ``alpha_check`` -- coordinates with respect to the simple coroots.

For the families A, B, C, D there is additionally the orthogonal coordinate
model (n+1 coordinates summing to a constant for A_n, n coordinates
otherwise), provided by :func:`to_orthogonal` / :func:`from_orthogonal`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

_FAMILIES = "ABCDEFG"


class InvalidDiagramError(ValueError):
    """Raised for family/rank combinations that do not name a diagram."""


class UnsupportedCoordinatesError(ValueError):
    """Raised when an orthogonal coordinate model is not available."""


def vec(xs: Iterable) -> Vec:
    return tuple(Fraction(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def vec_mat(v: Vec, m: Mat) -> Vec:
    n = len(m[0])
    return tuple(sum(v[i] * m[i][k] for i in range(len(v))) for k in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    n, k, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][j] * b[j][c] for j in range(k)) for c in range(p))
        for i in range(n)
    )


def mat_inverse(m: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class DiagramId:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in _FAMILIES:
            raise InvalidDiagramError(f"unknown family {fam!r}")
        bounds = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
                  "E": (6, 8), "F": (4, 4), "G": (2, 2)}
        lo, hi = bounds[fam]
        if n < lo or (hi is not None and n > hi):
            raise InvalidDiagramError(f"rank {n} not admissible for family {fam}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


def parse_diagram(label: str | DiagramId) -> DiagramId:
    """Parse labels like ``"A2"`` or ``"D4"`` (no Unicode, no products)."""
    if isinstance(label, DiagramId):
        return label
    s = label.strip()
    if len(s) < 2 or s[0].upper() not in _FAMILIES or not s[1:].isdigit():
        raise InvalidDiagramError(f"cannot parse diagram label {label!r}")
    return DiagramId(s[0].upper(), int(s[1:]))


def _cartan_and_norms(did: DiagramId) -> tuple[Mat, Vec]:
    """Cartan matrix and squared simple-root lengths <a_i,a_i>.

    Long roots are normalized to squared length 2; this fixes the short
    roots of B/C/F at 1 and the short root of G_2 at 2/3.
    """
    fam, n = did.family, did.rank
    two = Fraction(2)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = two

    def link(i, j, mij=-1, mji=-1):
        M[i][j] = Fraction(mij)
        M[j][i] = Fraction(mji)

    norms = [two] * n
    if fam == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif fam == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
        norms[n - 1] = Fraction(1)
    elif fam == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
        norms = [Fraction(1)] * (n - 1) + [two]
    elif fam == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif fam == "G":
        link(0, 1, -3, -1)
        norms[1] = Fraction(2, 3)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
        norms = [two, two, Fraction(1), Fraction(1)]
    elif fam == "E":
        # Chain 1..n-1 with node n attached to the branch node.
        for i in range(n - 2):
            link(i, i + 1)
        branch = {6: 2, 7: 2, 8: 4}[n]
        link(branch, n - 1)
    return mat(M), tuple(norms)


def _marks(did: DiagramId) -> tuple[int, ...]:
    fam, n = did.family, did.rank
    if fam == "A":
        return (1,) * n
    if fam == "B":
        return (1,) + (2,) * (n - 1)
    if fam == "C":
        return (2,) * (n - 1) + (1,)
    if fam == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    if fam == "G":
        return (2, 3)
    if fam == "F":
        return (2, 3, 4, 2)
    return {6: (1, 2, 3, 2, 1, 2),
            7: (2, 3, 4, 3, 2, 1, 2),
            8: (2, 3, 4, 5, 6, 4, 2, 3)}[n]


def _weyl_order(did: DiagramId) -> int:
    fam, n = did.family, did.rank
    if fam == "A":
        return factorial(n + 1)
    if fam in ("B", "C"):
        return 2 ** n * factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * factorial(n)
    if fam == "G":
        return 12
    if fam == "F":
        return 1152
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


@dataclass(frozen=True)
class RootSystem:
    """Immutable bundle of static data for one connected diagram."""

    id: DiagramId
    cartan: Mat
    cartan_inv: Mat
    root_norms: Vec          # <alpha_i, alpha_i>
    metric: Mat              # S = M^-1 D with D = diag(<alpha_i,alpha_i>/2)
    metric_inv: Mat          # S^-1 = D^-1 M
    marks: tuple[int, ...]   # xi = sum m_i alpha_i
    comarks: tuple[int, ...]  # xi = sum q_i alpha_i^check
    rho: Vec                 # (1, ..., 1) in the omega basis
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.id.rank

    @property
    def family(self) -> str:
        return self.id.family

    @property
    def highest_root_omega(self) -> Vec:
        return vec_mat(vec(self.marks), self.cartan)

    def __repr__(self) -> str:  # keep dataclass repr short
        return f"RootSystem({self.id.label})"


_CACHE: dict[DiagramId, RootSystem] = {}


def build(label: str | DiagramId) -> RootSystem:
    """Construct (and cache) the root-system data for a diagram."""
    did = parse_diagram(label)
    if did in _CACHE:
        return _CACHE[did]
    M, norms = _cartan_and_norms(did)
    Minv = mat_inverse(M)
    D = tuple(tuple(norms[i] / 2 if i == j else Fraction(0) for j in range(did.rank))
              for i in range(did.rank))
    S = mat_mul(Minv, D)
    Sinv = mat_inverse(S)
    marks = _marks(did)
    comarks = tuple(int(m * norms[i] / 2) for i, m in enumerate(marks))
    rs = RootSystem(
        id=did, cartan=M, cartan_inv=Minv, root_norms=norms,
        metric=S, metric_inv=Sinv, marks=marks, comarks=comarks,
        rho=vec([1] * did.rank), weyl_order=_weyl_order(did),
    )
    _sanity(rs)
    _CACHE[did] = rs
    return rs


def _sanity(rs: RootSystem):
    n = rs.rank
    for i in range(n):
        assert rs.metric[i] == tuple(rs.metric[j][i] for j in range(n)), "S not symmetric"
    xi = rs.highest_root_omega
    assert inner(rs, xi, xi) == 2, "highest root must have squared length 2"
    # q_i = m_i <alpha_i, alpha_i> / 2, so the comark expansion of xi in the
    # coroot basis matches the mark expansion in the root basis.
    assert all(Fraction(q) == Fraction(m) * rs.root_norms[i] / 2
               for i, (m, q) in enumerate(zip(rs.marks, rs.comarks)))


def inner(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    """Scalar product of two vectors given in omega coordinates: x S y^T."""
    n = rs.rank
    if len(x) != n or len(y) != n:
        raise ValueError(f"expected {n} coordinates")
    xv, yv = vec(x), vec(y)
    return sum(xv[i] * rs.metric[i][j] * yv[j] for i in range(n) for j in range(n))


_BASES = ("omega", "alpha", "alpha_check")


def convert_basis(rs: RootSystem, v: Sequence, frm: str, to: str) -> Vec:
    """Convert coordinates between the omega, alpha and coroot bases."""
    if frm not in _BASES or to not in _BASES:
        raise ValueError(f"bases must be one of {_BASES}")
    w = vec(v)
    if len(w) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates")
    if frm == to:
        return w
    # via omega coordinates
    if frm == "alpha":
        w = vec_mat(w, rs.cartan)
    elif frm == "alpha_check":
        w = vec_mat(w, rs.metric_inv)
    if to == "omega":
        return w
    if to == "alpha":
        return vec_mat(w, rs.cartan_inv)
    return vec_mat(w, rs.metric)  # omega -> alpha_check


def is_dominant(v: Sequence) -> bool:
    return all(Fraction(c) >= 0 for c in v)


def is_strictly_dominant(v: Sequence) -> bool:
    return all(Fraction(c) > 0 for c in v)


def orth_dim(rs: RootSystem) -> int:
    """Number of orthogonal coordinates (n+1 for A_n, n for B/C/D)."""
    if rs.family == "A":
        return rs.rank + 1
    if rs.family in ("B", "C", "D"):
        return rs.rank
    raise UnsupportedCoordinatesError(f"no orthogonal model for {rs.id.label}")


def orth_pairing_scale(rs: RootSystem) -> Fraction:
    """Factor relating the orthogonal dot product to the lattice metric.

    sum_i m_i(x) m_i(y) = scale * <x, y>  for the coordinate maps below.
    The C_n model has basis vectors of squared length 1/2, hence scale 2;
    the A/B/D models are isometric.
    """
    return Fraction(2) if rs.family == "C" else Fraction(1)


def to_orthogonal(rs: RootSystem, lam: Sequence, offset: Fraction | int = 0) -> Vec:
    """Orthogonal coordinates of a vector given in omega coordinates.

    For A_n the zero-sum gauge is used by default; ``offset`` shifts every
    coordinate by the same constant (the functions built on these
    coordinates do not depend on the shift).
    """
    fam, n = rs.family, rs.rank
    lamv = vec(lam)
    if len(lamv) != n:
        raise ValueError(f"expected {n} coordinates")
    if fam == "A":
        m = [Fraction(0)] * (n + 1)
        total = sum((j + 1) * lamv[j] for j in range(n))
        m[n] = -Fraction(total, n + 1)
        for i in range(n - 1, -1, -1):
            m[i] = m[i + 1] + lamv[i]
        return tuple(x + Fraction(offset) for x in m)
    if fam == "B":
        half_last = lamv[n - 1] / 2
        m = [sum(lamv[i:n - 1], half_last) for i in range(n)]
        return tuple(m)
    if fam == "C":
        return tuple(sum(lamv[i:n]) for i in range(n))
    if fam == "D":
        tail = (lamv[n - 2] + lamv[n - 1]) / 2
        m = [sum(lamv[i:n - 2], tail) for i in range(n - 2)]
        m.append(tail)
        m.append((lamv[n - 2] - lamv[n - 1]) / 2)
        return tuple(m)
    raise UnsupportedCoordinatesError(f"no orthogonal model for {rs.id.label}")


def from_orthogonal(rs: RootSystem, m: Sequence) -> Vec:
    """Inverse of :func:`to_orthogonal` (A_n: modulo the constant-sum gauge)."""
    fam, n = rs.family, rs.rank
    mv = vec(m)
    if len(mv) != orth_dim(rs):
        raise ValueError(f"expected {orth_dim(rs)} orthogonal coordinates")
    if fam == "A":
        return tuple(mv[i] - mv[i + 1] for i in range(n))
    if fam == "B":
        return tuple(mv[i] - mv[i + 1] for i in range(n - 1)) + (2 * mv[n - 1],)
    if fam == "C":
        return tuple(mv[i] - mv[i + 1] for i in range(n - 1)) + (mv[n - 1],)
    if fam == "D":
        return tuple(mv[i] - mv[i + 1] for i in range(n - 2)) + \
            (mv[n - 2] + mv[n - 1], mv[n - 2] - mv[n - 1])
    raise UnsupportedCoordinatesError(f"no orthogonal model for {rs.id.label}")


# -- JSON serialization -------------------------------------------------

def _frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def frac_of_str(s: str) -> Fraction:
    return Fraction(s)


def to_json_dict(rs: RootSystem) -> dict:
    return {
        "diagram": rs.id.label,
        "rank": rs.rank,
        "cartan": [[_frac_str(x) for x in row] for row in rs.cartan],
        "cartan_inv": [[_frac_str(x) for x in row] for row in rs.cartan_inv],
        "metric": [[_frac_str(x) for x in row] for row in rs.metric],
        "root_norms": [_frac_str(x) for x in rs.root_norms],
        "marks": list(rs.marks),
        "comarks": list(rs.comarks),
        "rho": [_frac_str(x) for x in rs.rho],
        "weyl_order": rs.weyl_order,
    }


def to_json(rs: RootSystem, **kw) -> str:
    return json.dumps(to_json_dict(rs), **kw)


def from_json(text: str) -> RootSystem:
    """Rebuild from the serialized diagram label and verify the payload."""
    data = json.loads(text)
    rs = build(data["diagram"])
    if mat(data["cartan"]) != rs.cartan or data["weyl_order"] != rs.weyl_order:
        raise ValueError("serialized root system is inconsistent with its label")
    return rs
