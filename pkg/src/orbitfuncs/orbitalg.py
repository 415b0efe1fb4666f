"""Decomposition of products of (signed) orbits and branching to subgroups.

The canonical strategy is exact brute force: expand all point pairs (or
all restricted orbit points) and read each coefficient off the dominant
representative itself.  A product or restriction of orbit sums is a
(anti)invariant exponential sum, so the coefficient of a term equals the
signed multiplicity of its dominant exponent, and wall exponents of
antisymmetric results must cancel (asserted).  The group-coset shortcut
and the per-family branching term generators are validated against the
brute force in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .rootsys import RootSystem, Vec, vec, is_dominant, is_strictly_dominant
from .weyl import (
    orbit, signed_orbit, to_dominant, orth_group, orth_apply, WallError,
)


@dataclass(frozen=True)
class OrbitTerm:
    coefficient: int
    label: tuple
    kind: str  # "orbit" or "signed"


OrbitSum = tuple[OrbitTerm, ...]


def _collect(counter: dict, kind: str) -> OrbitSum:
    terms = [OrbitTerm(c, lab, kind) for lab, c in sorted(counter.items()) if c != 0]
    return tuple(terms)


def product_plain_signed(rs: RootSystem, lam: Sequence, mu: Sequence) -> OrbitSum:
    """O(lam) x O^+-(mu): a union of signed orbits with coefficients +-1.

    Coefficients are the signed counts of pairs landing exactly on each
    strictly dominant weight; pairs landing on walls must cancel.
    """
    lamv, muv = vec(lam), vec(mu)
    if not is_strictly_dominant(muv):
        raise WallError("the signed factor must be strictly dominant")
    plain = orbit(rs, lamv)
    signed = signed_orbit(rs, muv).points
    counter: dict = {}
    for p in plain:
        for q, s in signed:
            y = tuple(a + b for a, b in zip(p, q))
            if is_dominant(y):
                counter[y] = counter.get(y, 0) + s
    for lab, c in counter.items():
        if not is_strictly_dominant(lab):
            assert c == 0, f"wall term {lab} did not cancel"
    counter = {lab: c for lab, c in counter.items() if is_strictly_dominant(lab)}
    return _collect(counter, "signed")


def product_plain_signed_coset(rs: RootSystem, lam: Sequence, mu: Sequence) -> OrbitSum:
    """The W/W_lam shortcut: one candidate term per orbit point of lam."""
    lamv, muv = vec(lam), vec(mu)
    if not is_strictly_dominant(muv):
        raise WallError("the signed factor must be strictly dominant")
    counter: dict = {}
    for p in orbit(rs, lamv):
        y = tuple(a + b for a, b in zip(p, muv))
        dom = to_dominant(rs, y)
        if dom.on_wall:
            continue
        counter[dom.weight] = counter.get(dom.weight, 0) + dom.sign
    return _collect(counter, "signed")


def product_signed_signed(rs: RootSystem, lam: Sequence, mu: Sequence) -> OrbitSum:
    """O^+-(lam) x O^+-(mu): a union of plain orbits with integer
    coefficients; labels on walls may carry |coefficient| > 1."""
    pts1 = signed_orbit(rs, vec(lam)).points
    pts2 = signed_orbit(rs, vec(mu)).points
    counter: dict = {}
    for p, s1 in pts1:
        for q, s2 in pts2:
            y = tuple(a + b for a, b in zip(p, q))
            if is_dominant(y):
                counter[y] = counter.get(y, 0) + s1 * s2
    return _collect(counter, "orbit")


def product_plain_plain(rs: RootSystem, lam: Sequence, mu: Sequence) -> OrbitSum:
    """O(lam) x O(mu): a union of plain orbits with positive multiplicities."""
    counter: dict = {}
    for p in orbit(rs, vec(lam)):
        for q in orbit(rs, vec(mu)):
            y = tuple(a + b for a, b in zip(p, q))
            if is_dominant(y):
                counter[y] = counter.get(y, 0) + 1
    out = _collect(counter, "orbit")
    assert all(t.coefficient > 0 for t in out)
    return out


_PAIRING = {
    ("orbit", "orbit"): ("orbit", product_plain_plain),
    ("orbit", "signed"): ("signed", product_plain_signed),
    ("signed", "orbit"): ("signed", None),
    ("signed", "signed"): ("orbit", product_signed_signed),
}


def expand_function_product(rs: RootSystem, kind1: str, lam: Sequence,
                            kind2: str, mu: Sequence) -> OrbitSum:
    """Expansion of a product of orbit functions into orbit functions.

    ``kind`` is ``"orbit"`` for a symmetric orbit function and ``"signed"``
    for an antisymmetric one: sym*sym and anti*anti expand into symmetric
    functions, sym*anti into antisymmetric ones, with the same integer
    coefficients as the orbit-level decompositions.
    """
    if (kind1, kind2) not in _PAIRING:
        raise ValueError(f"unknown kind pairing {(kind1, kind2)}")
    if kind1 == "signed" and kind2 == "orbit":
        return product_plain_signed(rs, mu, lam)
    _, fn = _PAIRING[(kind1, kind2)]
    return fn(rs, lam, mu)


# -- branching -----------------------------------------------------------

def _strictly_decreasing(t) -> bool:
    return all(t[i] > t[i + 1] for i in range(len(t) - 1))


def _dominant_for(family: str, t) -> bool:
    if family == "A":
        return _strictly_decreasing(t)
    if family in ("B", "C"):
        return _strictly_decreasing(t) and t[-1] > 0
    if family == "D":
        if len(t) == 1:
            return True
        return _strictly_decreasing(t[:-1]) and t[-2] > abs(t[-1])
    raise ValueError(family)


@dataclass(frozen=True)
class BranchRule:
    """Restriction of a signed orbit to a sub-root-system.

    ``kind="drop"``: remove one node of the diagram end (A_n -> A_{n-1},
    B_n -> B_{n-1}, C_n -> C_{n-1}, D_n -> D_{n-1}).  ``kind="split"``:
    remove the interior node p (1-based), giving A_{p-1} x A_{q-1} from
    A_{n-1}, A_{p-1} x C_q from C_n, or A_{p-1} x D_q from D_n.
    """
    kind: str
    p: int = 0

    def targets(self, rs: RootSystem) -> tuple[tuple[str, int], ...]:
        fam, n = rs.family, rs.rank
        if self.kind == "drop":
            return ((fam, n - 1),)
        q = (n + 1 if fam == "A" else n) - self.p
        return (("A", self.p - 1), (fam, q))


def branch(rs: RootSystem, rule: BranchRule, m: Sequence) -> OrbitSum:
    """Decompose a signed orbit, given in orthogonal coordinates, into
    signed orbits of the sub-root-system selected by ``rule``.

    Labels are orthogonal-coordinate tuples; for split rules each label is
    a pair (A-part tuple, second-factor tuple).
    """
    fam = rs.family
    if fam not in "ABCD":
        raise ValueError(f"no branching rules for {rs.id.label}")
    mv = vec(m)
    r = len(mv)
    if fam != "A" and not (_strictly_decreasing(mv) and mv[-1] > 0):
        # the B/C/D rules are stated for strictly positive decreasing m
        raise WallError("branching needs m_1 > m_2 > ... > m_r > 0")
    if fam == "A" and not _strictly_decreasing(mv):
        raise WallError("branching needs strictly decreasing coordinates")

    if rule.kind == "drop":
        if fam == "A":
            restrict = lambda pt: (pt[:-1],)
            doms = ("A",)
        else:
            restrict = lambda pt: (pt[1:],)
            doms = (fam,)
    elif rule.kind == "split":
        p = rule.p
        if not 1 <= p < r:
            raise ValueError(f"split position {p} out of range")
        if fam == "B":
            raise ValueError("no A x B split rule is implemented")
        restrict = lambda pt: (pt[:p], pt[p:])
        doms = ("A", fam)
    else:
        raise ValueError(f"unknown rule kind {rule.kind!r}")

    counter: dict = {}
    for perm, signs, det in orth_group(rs):
        parts = restrict(orth_apply(perm, signs, mv))
        if all(_dominant_for(f, t) for f, t in zip(doms, parts)):
            key = parts[0] if len(parts) == 1 else parts
            counter[key] = counter.get(key, 0) + det
    strict: dict = {}
    for key, c in counter.items():
        parts = (key,) if not isinstance(key[0], tuple) else key
        on_wall = any(_on_wall(f, t) for f, t in zip(doms, parts))
        if on_wall:
            assert c == 0, f"wall term {key} did not cancel"
        elif c != 0:
            strict[key] = c
    return _collect(strict, "signed")


def _on_wall(family: str, t) -> bool:
    if len(t) == 1:
        return False if family in ("A", "D") else t[0] == 0
    if not _strictly_decreasing(tuple(abs(v) if family == "D" and i == len(t) - 1
                                      else v for i, v in enumerate(t))):
        return True
    if family in ("B", "C"):
        return t[-1] == 0
    if family == "D":
        return t[-2] == abs(t[-1])
    return False


def branch_terms_a_drop(m: Sequence) -> OrbitSum:
    """Closed-form generator for the A_n -> A_{n-1} restriction: drop one
    coordinate; the sign is +1 when evenly many coordinates follow it."""
    mv = vec(m)
    out = []
    for i in range(len(mv)):
        label = mv[:i] + mv[i + 1:]
        sign = 1 if (len(mv) - 1 - i) % 2 == 0 else -1
        out.append(OrbitTerm(sign, label, "signed"))
    return tuple(sorted(out, key=lambda t: t.label))


def branch_terms_a_split(m: Sequence, p: int) -> OrbitSum:
    """A_{n-1} -> A_{p-1} x A_{q-1}: one term per p-subset, signed by the
    parity of the shuffle putting the subset first."""
    mv = vec(m)
    n = len(mv)
    out = []
    for idx in itertools.combinations(range(n), p):
        rest = tuple(i for i in range(n) if i not in idx)
        seq = idx + rest
        sign = _perm_parity(seq)
        out.append(OrbitTerm(sign, (tuple(mv[i] for i in idx),
                                    tuple(mv[i] for i in rest)), "signed"))
    return tuple(sorted(out, key=lambda t: t.label))


def _perm_parity(seq) -> int:
    sign = 1
    seen = [False] * len(seq)
    for i in range(len(seq)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = seq[j]
                c += 1
            if c % 2 == 0:
                sign = -sign
    return sign


def decompose_same_rank(rs: RootSystem, coset_reps, lam: Sequence) -> list[tuple[int, Vec]]:
    """Same-rank decomposition given explicit coset representatives w_i:
    returns (det w_i, w_i lam) per representative."""
    lamv = vec(lam)
    return [(w.det, w.apply(lamv)) for w in coset_reps]
