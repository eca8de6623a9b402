"""Subgroup posets (Quillen, Brown, abelian-subgroup, intervals), their
order complexes, and the simplicial constructions (link, join, wedge)
used to assemble homotopy-formula right-hand sides.

A SimplicialComplex always contains the empty simplex; the vertex-free
complex {()} has dimension -1 and reduced homology Z in degree -1, which
makes the join and link degree arithmetic uniform.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadAttachment,
    NodeNotInPoset,
    SimplexNotInComplex,
)
from . import group as gp
from .group import Group, Subgroup


class SubgroupPoset:
    """An inclusion-ordered family of subgroups of a ground group, with
    canonical node order (by subgroup order, then member tuple)."""

    def __init__(self, ground_group: Group, nodes: Iterable[Subgroup],
                 kind: str = ""):
        seen = {}
        for S in nodes:
            seen.setdefault(S.members, S)
        self.ground_group = ground_group
        self.nodes = [seen[m] for m in
                      sorted(seen, key=lambda m: (len(m), m))]
        self.kind = kind
        self._index = {S.members: i for i, S in enumerate(self.nodes)}
        n = len(self.nodes)
        # above[i] = indices of nodes strictly containing node i
        self.above = [frozenset(j for j in range(n) if i != j
                                and self.nodes[i] < self.nodes[j])
                      for i in range(n)]
        self.below = [frozenset(j for j in range(n) if i in self.above[j])
                      for i in range(n)]

    def __len__(self):
        return len(self.nodes)

    def index_of(self, S: Subgroup) -> int:
        try:
            return self._index[S.members]
        except KeyError:
            raise NodeNotInPoset(f"subgroup of order {S.order} not in poset") \
                from None

    def covers(self) -> list:
        """Hasse diagram: (i, j) with node i covered by node j."""
        out = []
        for i in range(len(self.nodes)):
            for j in sorted(self.above[i]):
                if not (self.above[i] & self.below[j]):
                    out.append((i, j))
        return out

    def induced(self, indices: Iterable[int], kind: str = "") -> "SubgroupPoset":
        return SubgroupPoset(self.ground_group,
                             [self.nodes[i] for i in indices],
                             kind or self.kind)


# -- poset builders -----------------------------------------------------

def quillen_poset(G: Group, p: int,
                  within: Optional[Subgroup] = None) -> SubgroupPoset:
    """A_p: all nontrivial elementary abelian p-subgroups."""
    sets = gp.elementary_abelian_subgroups(G, p, within=within)
    return SubgroupPoset(G, [Subgroup(G, s) for s in sets], kind=f"A_{p}")


def brown_poset(G: Group, p: int, within: Optional[Subgroup] = None,
                include_whole_group: bool = False) -> SubgroupPoset:
    """S_p: all nontrivial p-subgroups, proper in G (per the stated
    definition; set ``include_whole_group`` to keep a p-group G itself)."""
    sets = gp.all_p_subgroups(G, p, within=within)
    if not include_whole_group:
        whole = frozenset(range(G.order)) if within is None \
            else within.member_set
        sets = [s for s in sets if s != whole]
    return SubgroupPoset(G, [Subgroup(G, s) for s in sets], kind=f"S_{p}")


def ab_poset(D: Subgroup) -> SubgroupPoset:
    """Ab(D): all abelian subgroups of D (including the trivial one)."""
    D = gp._as_subgroup(D)
    G = D.parent
    sets = gp.abelian_subgroups(G, within=D)
    return SubgroupPoset(G, [Subgroup(G, s) for s in sets], kind="Ab")


def upper_interval(P: SubgroupPoset, x: Subgroup) -> SubgroupPoset:
    i = P.index_of(x)
    return P.induced(sorted(P.above[i]))


def lower_interval(P: SubgroupPoset, x: Subgroup) -> SubgroupPoset:
    i = P.index_of(x)
    return P.induced(sorted(P.below[i]))


def open_interval(P: SubgroupPoset, r: Subgroup, s: Subgroup) -> SubgroupPoset:
    i, j = P.index_of(r), P.index_of(s)
    return P.induced(sorted(P.above[i] & P.below[j]))


def find_conjunctive_element(P: SubgroupPoset) -> Optional[Subgroup]:
    """A node having a least upper bound with every node, or None.
    Existence certifies contractibility of the order complex."""
    n = len(P.nodes)
    geq = [P.above[i] | {i} for i in range(n)]
    for a in range(n):
        ok = True
        for x in range(n):
            ub = geq[a] & geq[x]
            if not ub:
                ok = False
                break
            if not any(all(u == v or u in P.below[v] for v in ub) for u in ub):
                ok = False
                break
        if ok:
            return P.nodes[a]
    return None


# -- simplicial complexes -----------------------------------------------

class SimplicialComplex:
    """Abstract simplicial complex on integer vertex ids, closed under
    faces and always containing the empty simplex."""

    def __init__(self, simplices: Iterable[frozenset],
                 labels: Optional[list] = None, close: bool = False):
        simps = set(map(frozenset, simplices))
        simps.add(frozenset())
        if close:
            closed = set()
            for s in simps:
                for k in range(len(s) + 1):
                    closed.update(map(frozenset, itertools.combinations(s, k)))
            simps = closed
        self.simplices = frozenset(simps)
        self.vertices = sorted(set().union(*simps)) if simps else []
        self.labels = labels
        self.dim = max((len(s) for s in simps), default=0) - 1

    def n_simplices(self, k: int) -> int:
        return sum(1 for s in self.simplices if len(s) == k + 1)

    def simplices_of_dim(self, k: int) -> list:
        return sorted((s for s in self.simplices if len(s) == k + 1),
                      key=lambda s: tuple(sorted(s)))

    def __contains__(self, sigma) -> bool:
        return frozenset(sigma) in self.simplices

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.simplices == other.simplices)

    def __hash__(self):
        return hash(self.simplices)

    def euler_characteristic_reduced(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def facets(self) -> list:
        out = []
        for s in self.simplices:
            if s and not any(s < t for t in self.simplices):
                out.append(s)
        return sorted(out, key=lambda s: tuple(sorted(s)))

    def export_text(self) -> str:
        """One simplex per line, sorted vertex ids space-separated."""
        lines = [" ".join(map(str, sorted(s)))
                 for s in sorted(self.simplices,
                                 key=lambda s: (len(s), tuple(sorted(s))))
                 if s]
        return "\n".join(lines) + ("\n" if lines else "")

    @staticmethod
    def import_text(text: str) -> "SimplicialComplex":
        """Parse the export format; a bare facet list is also accepted
        (faces are closed over on import)."""
        simps = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            simps.append(frozenset(int(t) for t in line.split()))
        return SimplicialComplex(simps, close=True)


EMPTY_COMPLEX = SimplicialComplex([])


def order_complex(P: SubgroupPoset) -> SimplicialComplex:
    """Simplices are the chains of the poset; vertex i is node i."""
    n = len(P.nodes)
    chains = []

    def extend(chain, top):
        chains.append(frozenset(chain))
        for j in sorted(P.above[top]):
            chain.append(j)
            extend(chain, j)
            chain.pop()

    for i in range(n):
        extend([i], i)
    return SimplicialComplex(chains, labels=list(P.nodes))


def link(C: SimplicialComplex, sigma) -> SimplicialComplex:
    sigma = frozenset(sigma)
    if sigma not in C.simplices:
        raise SimplexNotInComplex(f"{sorted(sigma)} not a simplex")
    out = [tau for tau in C.simplices
           if not (tau & sigma) and (tau | sigma) in C.simplices]
    return SimplicialComplex(out)


def join(C1: SimplicialComplex, C2: SimplicialComplex) -> SimplicialComplex:
    """Join with disjointly relabeled vertices: C1 keeps its ids, C2 is
    shifted.  Join with the vertex-free complex returns the other factor."""
    shift = (max(C1.vertices) + 1) if C1.vertices else 0
    out = []
    for a in C1.simplices:
        for b in C2.simplices:
            out.append(a | frozenset(x + shift for x in b))
    return SimplicialComplex(out)


@dataclass(frozen=True)
class WedgeAssembly:
    """A base complex plus pieces, each glued at a base vertex.  The
    glued vertex of each piece is its id-minimal vertex."""
    base: SimplicialComplex
    pieces: tuple  # of (SimplicialComplex, attachment vertex id in base)


def wedge(W: WedgeAssembly) -> SimplicialComplex:
    simps = set(W.base.simplices)
    fresh = (max(W.base.vertices) + 1) if W.base.vertices else 0
    for piece, at in W.pieces:
        if W.base.vertices and at not in W.base.vertices:
            raise BadAttachment(f"vertex {at} not in base")
        if not piece.vertices:
            continue
        glue = min(piece.vertices)
        ren = {}
        for v in piece.vertices:
            if v == glue:
                ren[v] = at
            else:
                ren[v] = fresh
                fresh += 1
        for s in piece.simplices:
            simps.add(frozenset(ren[v] for v in s))
    return SimplicialComplex(simps)
