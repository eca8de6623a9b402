"""Finite permutation group engine.

Groups are fully enumerated permutation groups with canonical integer
element ids (elements sorted lexicographically by image tuple, so the
identity is always id 0).  A dense multiplication table makes all element
arithmetic O(1), which keeps the subgroup-theoretic primitives cheap at
desk scale.  Subgroups are immutable member-id sets inside a parent group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    GroupTooLarge,
    HypothesisViolated,
    InvalidPermutation,
    NotAPGroup,
    NotSolvable,
)

DEFAULT_ELEMENT_CAP = 4096
DERIVED_SERIES_DEPTH_CAP = 32

Perm = tuple  # tuple of images, 0-based


def compose(a: Perm, b: Perm) -> Perm:
    """(a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def invert(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def validate_permutation(p: Sequence[int], degree: int) -> Perm:
    t = tuple(p)
    if len(t) != degree or sorted(t) != list(range(degree)):
        raise InvalidPermutation(f"not a permutation of 0..{degree - 1}: {p!r}")
    return t


class Group:
    """A fully enumerated finite permutation group.

    Immutable after construction; safe to share.  `elements[i]` is the
    permutation with id ``i``; `table[i, j]` is the id of
    ``elements[i] * elements[j]``.
    """

    def __init__(self, degree: int, elements: list, generator_ids: tuple,
                 provenance: str = "given generators", label: str = ""):
        self.degree = degree
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}
        self.generators = generator_ids
        self.provenance = provenance
        self.label = label
        self.order = len(elements)
        self.identity = self.index[tuple(range(degree))]
        assert self.identity == 0, "identity must sort first"
        self.table = self._build_table()
        self.inverse = self._build_inverses()
        self._order_of = None

    # -- construction ---------------------------------------------------

    def _build_table(self) -> np.ndarray:
        n = self.order
        E = np.array(self.elements, dtype=np.int64)
        lookup = {E[i].tobytes(): i for i in range(n)}
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            prods = E[i][E]  # row j = elements[i] o elements[j]
            row = table[i]
            for j in range(n):
                row[j] = lookup[prods[j].tobytes()]
        return table

    def _build_inverses(self) -> np.ndarray:
        n = self.order
        inv = np.empty(n, dtype=np.int32)
        e = self.identity
        for i in range(n):
            inv[np.flatnonzero(self.table[i] == e)[0]] = i
        return inv

    # -- element arithmetic ---------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, a: int, g: int) -> int:
        """a conjugated by g: g^-1 a g."""
        return int(self.table[self.table[self.inverse[g], a], g])

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        t = self.table
        return int(t[t[t[self.inverse[a], self.inverse[b]], a], b])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = self.identity
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def element_order(self, a: int) -> int:
        if self._order_of is None:
            self._order_of = {}
        o = self._order_of.get(a)
        if o is None:
            o, x = 1, a
            while x != self.identity:
                x = self.mul(x, a)
                o += 1
            self._order_of[a] = o
        return o

    def elements_of_order(self, k: int) -> list:
        return [a for a in range(self.order) if self.element_order(a) == k]

    # -- subgroup plumbing ----------------------------------------------

    def closure(self, seed: Iterable[int]) -> frozenset:
        """Smallest subgroup (as an id set) containing ``seed``."""
        gens = sorted(set(seed) - {self.identity})
        members = {self.identity}
        frontier = [self.identity]
        table = self.table
        while frontier:
            new = []
            for w in frontier:
                for g in gens:
                    x = int(table[w, g])
                    if x not in members:
                        members.add(x)
                        new.append(x)
            frontier = new
        return frozenset(members)

    def subgroup(self, members: Iterable[int], witness: Optional[tuple] = None) -> "Subgroup":
        return Subgroup(self, members, witness)

    def full(self) -> "Subgroup":
        return Subgroup(self, range(self.order), tuple(self.generators))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), ())

    def __repr__(self):
        lab = f" {self.label}" if self.label else ""
        return f"<Group{lab} order={self.order} degree={self.degree}>"


class Subgroup:
    """A subgroup of a parent :class:`Group`, stored as a sorted member-id
    tuple.  Equality and hashing are by member set (within one parent),
    never by the generator witness."""

    __slots__ = ("parent", "members", "member_set", "generator_witness")

    def __init__(self, parent: Group, members: Iterable[int],
                 witness: Optional[tuple] = None):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.member_set = frozenset(self.members)
        if witness is None:
            witness = _small_witness(parent, self.member_set)
        self.generator_witness = tuple(witness)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, elem: int) -> bool:
        return elem in self.member_set

    def __le__(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def __lt__(self, other: "Subgroup") -> bool:
        return self.member_set < other.member_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.members == other.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def _small_witness(G: Group, members: frozenset) -> tuple:
    """Greedy small generating set for a known-closed member set."""
    if len(members) == 1:
        return ()
    gens = []
    have = {G.identity}
    for x in sorted(members, key=lambda a: (-G.element_order(a), a)):
        if x not in have:
            gens.append(x)
            have = set(G.closure(gens))
            if len(have) == len(members):
                break
    return tuple(sorted(gens))


def _as_subgroup(S) -> Subgroup:
    if isinstance(S, Subgroup):
        return S
    if isinstance(S, Group):
        return S.full()
    raise TypeError(f"expected Group or Subgroup, got {type(S)!r}")


# -- constructors -------------------------------------------------------

def group_from_generators(degree: int, gens: Sequence[Sequence[int]], *,
                          cap: int = DEFAULT_ELEMENT_CAP,
                          provenance: str = "given generators",
                          label: str = "") -> Group:
    """Enumerate the group generated by permutations of {0..degree-1}."""
    perms = [validate_permutation(g, degree) for g in gens]
    identity = tuple(range(degree))
    members = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for w in frontier:
            for g in perms:
                x = compose(w, g)
                if x not in members:
                    members.add(x)
                    if len(members) > cap:
                        raise GroupTooLarge(
                            f"group order exceeds cap {cap}")
                    new.append(x)
        frontier = new
    elements = sorted(members)
    index = {p: i for i, p in enumerate(elements)}
    gen_ids = tuple(sorted({index[p] for p in perms} - {index[identity]}))
    return Group(degree, elements, gen_ids, provenance=provenance, label=label)


def group_from_table(table: Sequence[Sequence[int]], *,
                     gen_indices: Optional[Sequence[int]] = None,
                     cap: int = DEFAULT_ELEMENT_CAP,
                     provenance: str = "regular representation",
                     label: str = "") -> Group:
    """Build a Group from an abstract multiplication table via the left
    regular action (rows of the table are the permutations)."""
    n = len(table)
    if n > cap:
        raise GroupTooLarge(f"group order {n} exceeds cap {cap}")
    perms = {tuple(row) for row in table}
    if len(perms) != n:
        raise InvalidPermutation("multiplication table rows not distinct")
    elements = sorted(perms)
    index = {p: i for i, p in enumerate(elements)}
    if gen_indices is None:
        gen_ids = tuple(i for i in range(len(elements)) if i != 0)
    else:
        gen_ids = tuple(sorted({index[tuple(table[i])] for i in gen_indices}))
    G = Group(n, elements, gen_ids, provenance=provenance, label=label)
    # shrink the witness generators
    if gen_indices is None:
        G = Group(n, elements,
                  _small_witness(G, frozenset(range(n))),
                  provenance=provenance, label=label)
    return G


# -- spec operations ----------------------------------------------------

def subgroup_generated(G: Group, seed: Iterable[int]) -> Subgroup:
    seed = tuple(sorted(set(seed)))
    for s in seed:
        if not 0 <= s < G.order:
            raise InvalidPermutation(f"element id {s} not in group")
    return Subgroup(G, G.closure(seed), seed)


def derived_subgroup(S) -> Subgroup:
    S = _as_subgroup(S)
    G = S.parent
    comms = {G.commutator(a, b) for a in S.members for b in S.members}
    return Subgroup(G, G.closure(comms))


def centralizer(S, X) -> Subgroup:
    S, X = _as_subgroup(S), _as_subgroup(X)
    G = S.parent
    gens = X.generator_witness or X.members
    t = G.table
    members = [s for s in S.members if all(t[s, x] == t[x, s] for x in gens)]
    return Subgroup(G, members)


def center(S) -> Subgroup:
    S = _as_subgroup(S)
    return centralizer(S, S)


def normalizer(S, X) -> Subgroup:
    S, X = _as_subgroup(S), _as_subgroup(X)
    G = S.parent
    gens = X.generator_witness or X.members
    members = [s for s in S.members
               if all(G.conj(x, s) in X.member_set for x in gens)]
    return Subgroup(G, members)


def conjugate_subgroup(S: Subgroup, g: int) -> Subgroup:
    G = S.parent
    return Subgroup(G, (G.conj(x, g) for x in S.members),
                    tuple(sorted(G.conj(x, g) for x in S.generator_witness)))


def normal_closure(G: Group, seed: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup of G containing ``seed``."""
    gens = set(seed) - {G.identity}
    members = set(G.closure(gens))
    while True:
        extra = {G.conj(x, g) for x in members for g in G.generators}
        if extra <= members:
            return Subgroup(G, members)
        members = set(G.closure(members | extra))


def is_normal(S: Subgroup, in_: Optional[Subgroup] = None) -> bool:
    G = S.parent
    amb = in_.members if in_ is not None else range(G.order)
    gens = S.generator_witness or S.members
    return all(G.conj(x, g) in S.member_set for g in amb for x in gens)


def is_abelian(S) -> bool:
    S = _as_subgroup(S)
    t = S.parent.table
    m = S.members
    return all(t[a, b] == t[b, a] for a, b in itertools.combinations(m, 2))


def is_cyclic(S) -> bool:
    S = _as_subgroup(S)
    G = S.parent
    return any(G.element_order(x) == S.order for x in S.members)


def exponent(S) -> int:
    S = _as_subgroup(S)
    G = S.parent
    e = 1
    for x in S.members:
        e = _lcm(e, G.element_order(x))
    return e


def _lcm(a, b):
    import math
    return a * b // math.gcd(a, b)


def is_p_group(S, p: int) -> bool:
    S = _as_subgroup(S)
    n = S.order
    while n % p == 0:
        n //= p
    return n == 1


def is_p_prime_group(S, p: int) -> bool:
    return _as_subgroup(S).order % p != 0


def is_elementary_abelian(S, p: int) -> bool:
    S = _as_subgroup(S)
    return (is_p_group(S, p) and is_abelian(S)
            and (S.order == 1 or exponent(S) == p))


def omega1(P, p: int) -> Subgroup:
    P = _as_subgroup(P)
    if not is_p_group(P, p):
        raise NotAPGroup(f"omega1 requires a {p}-group, order {P.order}")
    G = P.parent
    gens = [x for x in P.members if x != G.identity and G.element_order(x) == p]
    return Subgroup(G, G.closure(gens))


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """Deterministic Sylow p-subgroup (canonical-minimal extension chain)."""
    pa = 1
    n = G.order
    while n % p == 0:
        pa *= p
        n //= p
    H = G.trivial_subgroup()
    if pa == 1:
        return H
    while H.order < pa:
        N = normalizer(G.full(), H)
        ext = None
        for g in N.members:
            if g in H.member_set:
                continue
            o = G.element_order(g)
            if o % p == 0 or o == 1:
                if o != 1 and _is_p_power(o, p) and G.power(g, p) in H.member_set:
                    ext = g
                    break
        if ext is None:  # pragma: no cover - cannot happen by Sylow theory
            raise RuntimeError("Sylow extension step failed")
        H = Subgroup(G, G.closure(set(H.members) | {ext}),
                     tuple(sorted(set(H.generator_witness) | {ext})))
    return H


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def all_sylow_subgroups(G: Group, p: int) -> list:
    if G.order % p != 0:
        return []
    P = sylow_subgroup(G, p)
    seen = {}
    for g in range(G.order):
        Q = conjugate_subgroup(P, g)
        seen.setdefault(Q.members, Q)
    return [seen[m] for m in sorted(seen)]


def o_p(G: Group, p: int) -> Subgroup:
    """Largest normal p-subgroup: intersection of the Sylow p-subgroups."""
    syl = all_sylow_subgroups(G, p)
    if not syl:
        return G.trivial_subgroup()
    members = frozenset.intersection(*[S.member_set for S in syl])
    return Subgroup(G, members)


def o_p_prime(G: Group, p: int) -> Subgroup:
    """Largest normal p'-subgroup, generated by all elements whose normal
    closure is a p'-group."""
    gens = []
    seen_cyclic = set()
    for x in range(G.order):
        if x == G.identity or G.element_order(x) % p == 0:
            continue
        c = G.closure([x])
        if c in seen_cyclic:
            continue
        seen_cyclic.add(c)
        if normal_closure(G, [x]).order % p != 0:
            gens.append(x)
    return Subgroup(G, G.closure(gens))


def is_solvable(S) -> bool:
    S = _as_subgroup(S)
    cur = S
    for _ in range(DERIVED_SERIES_DEPTH_CAP):
        if cur.order == 1:
            return True
        nxt = derived_subgroup(cur)
        if nxt.order == cur.order:
            return False
        cur = nxt
    return False


# -- quotients ----------------------------------------------------------

class Quotient:
    """Quotient group G/N together with the projection on element ids."""

    def __init__(self, parent: Group, group: Group, hom: tuple):
        self.parent = parent
        self.group = group
        self.hom = hom  # hom[g] = id in quotient group

    def preimage(self, K: Subgroup) -> Subgroup:
        """Preimage in G of a subgroup of the quotient (member-id set)."""
        ks = K.member_set
        return Subgroup(self.parent, [g for g in range(len(self.hom))
                                      if self.hom[g] in ks])

    def image(self, S: Subgroup) -> Subgroup:
        return Subgroup(self.group, {self.hom[g] for g in S.members})


def quotient_group(G: Group, N: Subgroup, *, label: str = "") -> Quotient:
    """Quotient by a normal subgroup, as a canonical permutation group on
    the cosets (left regular action of the quotient)."""
    if not is_normal(N):
        raise HypothesisViolated("normality", "quotient by non-normal subgroup")
    n = G.order
    Nm = np.array(N.members, dtype=np.int64)
    cmin = G.table[Nm, :].min(axis=0)  # canonical rep (min of coset Ng)
    reps = sorted(set(int(c) for c in cmin))
    rep_index = {r: i for i, r in enumerate(reps)}
    k = len(reps)
    qtable = [[rep_index[int(cmin[G.mul(a, b)])] for b in reps] for a in reps]
    Q = group_from_table(qtable, cap=max(DEFAULT_ELEMENT_CAP, k),
                         provenance="coset action (regular)",
                         label=label or (G.label + "/N" if G.label else ""))
    # qtable row i is the left-translation permutation of element i; find
    # its id in the canonical group
    row_id = {tuple(row): Q.index[tuple(row)] for row in qtable}
    hom = tuple(row_id[tuple(qtable[rep_index[int(cmin[g])]])]
                for g in range(n))
    return Quotient(G, Q, hom)


# -- p-series and p-length ---------------------------------------------

@dataclass(frozen=True)
class PSeriesReport:
    prime: int
    series: tuple  # ascending chain of Subgroups of G, starting at 1
    p_length: int

    def to_json(self):
        return {"prime": self.prime,
                "series_orders": [S.order for S in self.series],
                "p_length": self.p_length}


def p_length(G: Group, p: int) -> PSeriesReport:
    """Upper p-series 1 <= O_{p'} <= O_{p',p} <= ... and its p-length."""
    if not is_solvable(G):
        raise NotSolvable(f"group of order {G.order} is not solvable")
    series = [G.trivial_subgroup()]
    plen = 0
    phase_p = False  # start with a p'-step
    cur = series[0]
    while cur.order < G.order:
        if cur.order == 1:
            # avoid rebuilding G as a quotient by the trivial subgroup
            nxt = o_p(G, p) if phase_p else o_p_prime(G, p)
        else:
            q = quotient_group(G, cur)
            K = o_p(q.group, p) if phase_p else o_p_prime(q.group, p)
            nxt = q.preimage(K)
        if nxt.order > cur.order:
            if phase_p:
                plen += 1
            series.append(nxt)
            cur = nxt
        phase_p = not phase_p
    return PSeriesReport(p, tuple(series), plen)


# -- rank and p-group structure -----------------------------------------

def elementary_abelian_subgroups(G: Group, p: int,
                                 within: Optional[Subgroup] = None) -> list:
    """All nontrivial elementary abelian p-subgroups (as member frozensets),
    by rank-incremental closure over commuting order-p elements."""
    amb = within.member_set if within is not None else frozenset(range(G.order))
    porder = sorted(x for x in amb
                    if x != G.identity and G.element_order(x) == p)
    level = {}
    for x in porder:
        c = G.closure([x])
        level[c] = None
    found = list(level)
    cur = list(level)
    t = G.table
    while cur:
        nxt = {}
        for E in cur:
            for g in porder:
                if g in E:
                    continue
                if all(t[g, x] == t[x, g] for x in E):
                    X = frozenset().union(*[
                        {int(t[a, b]) for b in _cyclic_ids(G, g)} for a in E])
                    if X <= amb:
                        nxt[X] = None
        new = [X for X in nxt if X not in set(found)]
        found.extend(new)
        cur = new
    return sorted(set(found), key=lambda s: (len(s), tuple(sorted(s))))


def _cyclic_ids(G: Group, g: int) -> tuple:
    ids = [G.identity]
    x = g
    while x != G.identity:
        ids.append(x)
        x = G.mul(x, g)
    return tuple(ids)


def rank(P, p: int) -> int:
    P = _as_subgroup(P)
    if not is_p_group(P, p):
        raise NotAPGroup("rank requires a p-group")
    if P.order == 1:
        return 0
    tori = elementary_abelian_subgroups(P.parent, p, within=P)
    if not tori:
        return 0
    best = max(len(s) for s in tori)
    r = 0
    while p ** r < best:
        r += 1
    return r


def frattini_subgroup(P, p: int) -> Subgroup:
    """Frattini subgroup of a p-group: P' * P^p."""
    P = _as_subgroup(P)
    if not is_p_group(P, p):
        raise NotAPGroup("frattini_subgroup requires a p-group")
    G = P.parent
    gens = set(derived_subgroup(P).members)
    gens.update(G.power(x, p) for x in P.members)
    return Subgroup(G, G.closure(gens))


def is_extraspecial(S, p: int) -> bool:
    S = _as_subgroup(S)
    if not is_p_group(S, p) or S.order <= p:
        return False
    Z = center(S)
    if Z.order != p:
        return False
    return (derived_subgroup(S).member_set == Z.member_set
            and frattini_subgroup(S, p).member_set == Z.member_set)


def is_dihedral_2group(S) -> bool:
    """Dihedral group of order 2^n >= 8 (cyclic index-2 subgroup inverted
    by an outside involution)."""
    return _dihedral_like(S, lambda m: m - 1)


def is_semidihedral_2group(S) -> bool:
    """Semidihedral group of order 2^n >= 16: x^z = x^(2^(n-2) - 1)."""
    return _dihedral_like(S, lambda m: m // 2 - 1)


def _dihedral_like(S, twist) -> bool:
    S = _as_subgroup(S)
    G = S.parent
    n = S.order
    if n < 8 or not is_p_group(S, 2):
        return False
    m = n // 2
    t = twist(m)
    for x in S.members:
        if G.element_order(x) != m:
            continue
        X = G.closure([x])
        target = G.power(x, t)
        for z in S.members:
            if z in X or G.element_order(z) != 2:
                continue
            if G.conj(x, z) == target:
                return True
        return False  # all cyclic index-2 subgroups are conjugate-equivalent
    return False


# -- p-subgroup enumeration (for the Brown poset and Sylow counting) ----

def all_p_subgroups(G: Group, p: int,
                    within: Optional[Subgroup] = None) -> list:
    """All nontrivial p-subgroups (as member frozensets), by index-p
    extension BFS from the cyclic subgroups of order p."""
    amb = within.member_set if within is not None else frozenset(range(G.order))
    pelems = sorted(x for x in amb if x != G.identity
                    and _is_p_power(G.element_order(x), p))
    level = {}
    for x in pelems:
        if G.element_order(x) == p:
            level[G.closure([x])] = None
    found = dict(level)
    cur = list(level)
    while cur:
        nxt = {}
        target = len(next(iter(cur))) * p if cur else 0
        for H in cur:
            for g in pelems:
                if g in H:
                    continue
                K = G.closure(set(H) | {g})
                if len(K) == target and K <= amb and K not in found:
                    nxt[K] = None
        for K in nxt:
            found[K] = None
        cur = list(nxt)
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def all_subgroups(G: Group, within: Optional[Subgroup] = None) -> list:
    """All subgroups (as member frozensets) of a small group, by
    extension BFS.  Exponential in the subgroup count; desk scale only."""
    amb = sorted(within.member_set) if within is not None \
        else list(range(G.order))
    ambset = frozenset(amb)
    found = {frozenset([G.identity]): None}
    cur = list(found)
    while cur:
        nxt = {}
        for H in cur:
            for g in amb:
                if g in H:
                    continue
                K = G.closure(set(H) | {g})
                if K <= ambset and K not in found and K not in nxt:
                    nxt[K] = None
        for K in nxt:
            found[K] = None
        cur = list(nxt)
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def abelian_subgroups(G: Group, within: Optional[Subgroup] = None) -> list:
    """All abelian subgroups (including the trivial one), by extension
    over centralizing elements."""
    amb = within.member_set if within is not None else frozenset(range(G.order))
    t = G.table
    found = {frozenset([G.identity]): None}
    cur = list(found)
    ambl = sorted(amb)
    while cur:
        nxt = {}
        for H in cur:
            for g in ambl:
                if g in H:
                    continue
                if all(t[g, x] == t[x, g] for x in H):
                    K = G.closure(set(H) | {g})
                    if K <= amb and K not in found and K not in nxt:
                        nxt[K] = None
        for K in nxt:
            found[K] = None
        cur = list(nxt)
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
