"""Exact integral reduced homology via Smith normal form, plus the
sphericity and Cohen-Macaulay checkers built on it.

All arithmetic is exact (Python integers).  Homology is computed from
the augmented chain complex, so degree -1 is handled uniformly: the
vertex-free complex has reduced homology Z concentrated in degree -1.

"Spherical" here is the homology-level proxy: acyclic, or free homology
concentrated in a single degree.  Acyclicity cannot be distinguished
from contractibility at this level; reports carry that caveat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .poset import SimplicialComplex

HOMOLOGY_PROXY_CAVEAT = (
    "Sphericity and Cohen-Macaulayness are verified at homology level only: "
    "'contractible' is proxied by 'acyclic' and 'wedge of r-spheres' by free "
    "homology concentrated in degree r. Acyclic-but-not-contractible cannot "
    "be detected by this tool."
)


# -- Smith normal form --------------------------------------------------

def smith_normal_form(matrix) -> tuple:
    """Invariant factors (d1 | d2 | ... | dr, all > 0) and rank of an
    integer matrix.  Accepts a dense row-list or a dict {(i, j): value}.
    """
    rows = _to_sparse(matrix)
    diag = _eliminate(rows)
    return _invariant_factors(diag), len(diag)


def _to_sparse(matrix) -> dict:
    rows = {}
    if isinstance(matrix, dict):
        for (i, j), v in matrix.items():
            if v:
                rows.setdefault(i, {})[j] = int(v)
        return rows
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if v:
                rows.setdefault(i, {})[j] = int(v)
    return rows


def _eliminate(rows: dict) -> list:
    """Diagonalize by integer row/column operations; returns the nonzero
    diagonal entries (not yet normalized to a divisibility chain)."""
    # column index: col -> set of rows with a nonzero entry there
    cols = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    diag = []

    def addrow(src, dst, c):
        """row[dst] += c * row[src]"""
        rs = rows.get(src, {})
        rd = rows.setdefault(dst, {})
        for j, v in rs.items():
            nv = rd.get(j, 0) + c * v
            if nv:
                rd[j] = nv
                cols.setdefault(j, set()).add(dst)
            elif j in rd:
                del rd[j]
                cols[j].discard(dst)

    def addcol(src, dst, c):
        """col[dst] += c * col[src]"""
        for i in list(cols.get(src, ())):
            v = rows[i].get(src, 0)
            nv = rows[i].get(dst, 0) + c * v
            if nv:
                rows[i][dst] = nv
                cols.setdefault(dst, set()).add(i)
            elif dst in rows[i]:
                del rows[i][dst]
                cols[dst].discard(i)

    def remove(i, j):
        for jj in list(rows.get(i, ())):
            cols[jj].discard(i)
        rows.pop(i, None)
        for ii in list(cols.get(j, ())):
            rows[ii].pop(j, None)
        cols.pop(j, None)

    while True:
        # pick a pivot: prefer +-1 entries with minimal fill, else the
        # smallest absolute value
        best = None
        for i, r in rows.items():
            if not r:
                continue
            for j, v in r.items():
                av = abs(v)
                fill = (len(r) - 1) * (len(cols[j]) - 1)
                key = (av != 1, av, fill, i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best and best[0][0] is False and best[0][2] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        # make the pivot divide its row and column (Euclidean steps)
        while True:
            pv = rows[pi][pj]
            moved = False
            for i in list(cols[pj]):
                if i == pi:
                    continue
                v = rows[i].get(pj, 0)
                if v == 0:
                    continue
                q = v // pv
                if q:
                    addrow(pi, i, -q)
                if rows.get(i, {}).get(pj, 0):
                    pi = i  # remainder is smaller; rotate pivot
                    moved = True
                    break
            if moved:
                continue
            for j in list(rows[pi]):
                if j == pj:
                    continue
                v = rows[pi][j]
                q = v // pv
                if q:
                    addcol(pj, j, -q)
                if rows[pi].get(j, 0):
                    pj = j
                    moved = True
                    break
            if not moved:
                break
        diag.append(abs(rows[pi][pj]))
        remove(pi, pj)
    return diag


def _invariant_factors(diag: Sequence[int]) -> tuple:
    """Normalize a diagonal multiset to the divisibility chain via prime
    decomposition (entries are small at desk scale)."""
    powers = {}  # prime -> sorted list of exponents, descending
    r = len(diag)
    for d in diag:
        for p, e in _factorize(d).items():
            powers.setdefault(p, []).append(e)
    for p in powers:
        powers[p].sort(reverse=True)
    factors = []
    for k in range(r):
        f = 1
        for p, es in powers.items():
            if k < len(es):
                f *= p ** es[k]
        factors.append(f)
    factors.reverse()  # ascending divisibility chain
    return tuple(factors)


def _factorize(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- boundary matrices and reduced homology -----------------------------

@dataclass(frozen=True)
class BoundaryMatrix:
    """Augmented simplicial boundary operator in degree k (columns are
    k-simplices, rows (k-1)-simplices; degree 0 maps onto the empty
    simplex)."""
    degree: int
    row_simplices: tuple
    col_simplices: tuple
    entries: dict  # (i, j) -> +-1

    @property
    def shape(self):
        return (len(self.row_simplices), len(self.col_simplices))


def boundary_matrix(C: SimplicialComplex, k: int) -> BoundaryMatrix:
    rows = C.simplices_of_dim(k - 1)
    cols = C.simplices_of_dim(k)
    rindex = {s: i for i, s in enumerate(rows)}
    entries = {}
    for j, s in enumerate(cols):
        vs = sorted(s)
        for pos in range(len(vs)):
            face = frozenset(vs[:pos] + vs[pos + 1:])
            entries[(rindex[face], j)] = (-1) ** pos
    return BoundaryMatrix(k, tuple(rows), tuple(cols), entries)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology: per-degree Betti number and invariant
    factors > 1 (torsion coefficients), for degrees -1..dim."""
    dim: int
    betti: tuple       # betti[q + 1] = rank of H~_q
    torsion: tuple     # torsion[q + 1] = tuple of invariant factors > 1

    def betti_of(self, q: int) -> int:
        if -1 <= q <= self.dim:
            return self.betti[q + 1]
        return 0

    def torsion_of(self, q: int) -> tuple:
        if -1 <= q <= self.dim:
            return self.torsion[q + 1]
        return ()

    def nonzero_degrees(self) -> tuple:
        return tuple(q for q in range(-1, self.dim + 1)
                     if self.betti_of(q) or self.torsion_of(q))

    def is_trivial(self) -> bool:
        return not self.nonzero_degrees()

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        lo = min(-1, -1)
        hi = max(self.dim, other.dim)
        return all(self.betti_of(q) == other.betti_of(q)
                   and self.torsion_of(q) == other.torsion_of(q)
                   for q in range(lo, hi + 1))

    def __hash__(self):
        return hash((self.nonzero_degrees(),))

    def to_json(self) -> list:
        return [{"degree": q, "betti": self.betti_of(q),
                 "torsion": list(self.torsion_of(q))}
                for q in range(-1, self.dim + 1)]

    def describe(self) -> str:
        nz = [f"H~_{q}=Z^{self.betti_of(q)}"
              + ("".join(f"+Z/{t}" for t in self.torsion_of(q)))
              for q in self.nonzero_degrees()]
        return ", ".join(nz) if nz else "trivial"


def reduced_homology(C: SimplicialComplex) -> HomologyProfile:
    """Exact reduced integral homology of an abstract complex, via SNF
    of the augmented boundary matrices."""
    d = C.dim
    nsimp = {q: C.n_simplices(q) for q in range(-1, d + 1)}
    snf = {}
    for k in range(0, d + 1):
        B = boundary_matrix(C, k)
        snf[k] = smith_normal_form(B.entries) if B.entries else ((), 0)
    betti = []
    torsion = []
    for q in range(-1, d + 1):
        rank_q = snf[q][1] if q in snf else 0
        rank_q1 = snf[q + 1][1] if (q + 1) in snf else 0
        betti.append(nsimp[q] - rank_q - rank_q1)
        tors = tuple(f for f in (snf[q + 1][0] if (q + 1) in snf else ())
                     if f > 1)
        torsion.append(tors)
    return HomologyProfile(d, tuple(betti), tuple(torsion))


# -- sphericity and Cohen-Macaulay checks -------------------------------

@dataclass(frozen=True)
class SphericityVerdict:
    weakly_spherical_in: Optional[int]
    homology_spherical: bool
    cohen_macaulay: bool
    witness: Optional[str]
    profile: Optional[HomologyProfile] = None

    def to_json(self) -> dict:
        return {"weakly_spherical_in": self.weakly_spherical_in,
                "homology_spherical": self.homology_spherical,
                "cohen_macaulay": self.cohen_macaulay,
                "witness": self.witness,
                "profile": self.profile.to_json() if self.profile else None,
                "caveat": HOMOLOGY_PROXY_CAVEAT}


def _spherical_in(profile: HomologyProfile, r: int) -> bool:
    """Homology-level r-spherical: acyclic, or free homology concentrated
    in degree r."""
    nz = profile.nonzero_degrees()
    if not nz:
        return True
    return nz == (r,) and not profile.torsion_of(r)


def sphericity(C: SimplicialComplex, r: Optional[int] = None,
               profile: Optional[HomologyProfile] = None) -> SphericityVerdict:
    """Check (weak) r-sphericity of a complex; with r=None the unique
    candidate degree is inferred from the homology itself."""
    if profile is None:
        profile = reduced_homology(C)
    nz = profile.nonzero_degrees()
    if r is None:
        r = nz[0] if len(nz) == 1 else (C.dim if not nz else None)
    weak = None
    witness = None
    if r is not None and all(q == r for q in nz):
        weak = r
    elif nz:
        witness = f"nonzero homology in degrees {list(nz)}"
    spherical = weak is not None and (not nz or not profile.torsion_of(r))
    if weak is not None and nz and profile.torsion_of(r):
        witness = f"torsion {list(profile.torsion_of(r))} in degree {r}"
    return SphericityVerdict(weak, spherical, False, witness, profile)


def is_cohen_macaulay(C: SimplicialComplex) -> SphericityVerdict:
    """Cohen-Macaulay at homology level: the complex is d-spherical and
    the link of every r-simplex (r >= 0) is (d-r-1)-spherical, d = dim.
    The empty link is accepted exactly when d-r-1 = -1 (its homology is
    concentrated in degree -1)."""
    from .poset import link as _link
    d = C.dim
    top = sphericity(C, d)
    if not top.homology_spherical:
        return SphericityVerdict(top.weakly_spherical_in, False, False,
                                 f"complex itself: {top.witness}", top.profile)
    for k in range(0, d + 1):
        for s in C.simplices_of_dim(k):
            lk = _link(C, s)
            v = sphericity(lk, d - k - 1)
            if not v.homology_spherical:
                wit = (f"link of {sorted(s)} (dim {k}): {v.witness or 'not '}"
                       f"{d - k - 1}-spherical; {v.profile.describe()}")
                return SphericityVerdict(top.weakly_spherical_in, True,
                                         False, wit, top.profile)
    return SphericityVerdict(top.weakly_spherical_in, True, True, None,
                             top.profile)
