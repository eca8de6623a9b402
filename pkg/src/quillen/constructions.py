"""Deterministic builders for the group families used throughout:
cyclic, dihedral, semidihedral, quaternion, elementary abelian,
extraspecial, direct/central/semidirect products, and a named catalog.

Builders prefer a small natural faithful action where one is obvious and
fall back to the regular representation (the Group records which was
used in its ``provenance`` field).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    ActionNotHomomorphism,
    InvalidSpec,
    NotCentral,
    PairingNotIsomorphism,
    UnknownName,
)
from . import group as gp
from .group import DEFAULT_ELEMENT_CAP, Group, Subgroup

KINDS = ("named", "cyclic", "dihedral", "semidihedral", "quaternion",
         "elementary_abelian", "extraspecial", "direct_product",
         "central_product", "semidirect_product", "perm")


@dataclass(frozen=True)
class GroupSpec:
    """Serializable recipe for a group; see :func:`build`."""
    kind: str
    params: dict

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": _params_to_json(self.params)}

    @staticmethod
    def from_json(data: dict) -> "GroupSpec":
        if not isinstance(data, dict) or set(data) - {"kind", "params"}:
            raise InvalidSpec(f"bad spec object: {data!r}")
        kind = data.get("kind")
        if kind not in KINDS:
            raise InvalidSpec(f"unknown kind {kind!r}")
        return GroupSpec(kind, _params_from_json(kind, data.get("params", {})))


def _params_to_json(params):
    out = {}
    for k, v in params.items():
        if isinstance(v, GroupSpec):
            out[k] = v.to_json()
        elif isinstance(v, (list, tuple)) and v and isinstance(v[0], GroupSpec):
            out[k] = [s.to_json() for s in v]
        else:
            out[k] = v
    return out


def _params_from_json(kind, params):
    if not isinstance(params, dict):
        raise InvalidSpec("params must be an object")
    out = dict(params)
    for key in ("a", "b", "n", "h"):
        if key in out and isinstance(out[key], dict):
            out[key] = GroupSpec.from_json(out[key])
    if "factors" in out:
        out["factors"] = [GroupSpec.from_json(s) if isinstance(s, dict) else s
                          for s in out["factors"]]
    return out


# -- elementary family builders -----------------------------------------

def cyclic(n: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if n < 1:
        raise InvalidSpec("cyclic order must be >= 1")
    if n == 1:
        return gp.group_from_generators(1, [], label="C1",
                                        provenance="trivial action")
    g = tuple((i + 1) % n for i in range(n))
    return gp.group_from_generators(n, [g], cap=cap, label=f"C{n}",
                                    provenance="natural cycle action")


def symmetric(n: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if n < 1:
        raise InvalidSpec("symmetric degree must be >= 1")
    if n == 1:
        return cyclic(1)
    gens = [tuple((i + 1) % n for i in range(n)),
            tuple([1, 0] + list(range(2, n)))]
    return gp.group_from_generators(n, gens, cap=cap, label=f"S{n}",
                                    provenance="natural action")


def elementary_abelian(p: int, r: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if r < 0 or p < 2:
        raise InvalidSpec("elementary_abelian needs prime p and rank >= 0")
    if r == 0:
        return cyclic(1)
    degree = p * r
    gens = []
    for k in range(r):
        img = list(range(degree))
        for i in range(p):
            img[k * p + i] = k * p + (i + 1) % p
        gens.append(tuple(img))
    return gp.group_from_generators(degree, gens, cap=cap,
                                    label=f"C{p}^{r}",
                                    provenance="disjoint cycles action")


def dihedral(order: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if order < 4 or order % 2:
        raise InvalidSpec("dihedral order must be an even number >= 4")
    m = order // 2
    if m == 2:
        G = elementary_abelian(2, 2, cap)
        return Group(G.degree, G.elements, G.generators,
                     provenance=G.provenance, label="D4=V4")
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return gp.group_from_generators(m, [rot, ref], cap=cap,
                                    label=f"D{order}",
                                    provenance="natural polygon action")


def semidihedral(order: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    n = order.bit_length() - 1
    if order != 2 ** n or n < 4:
        raise InvalidSpec("semidihedral order must be 2^n with n >= 4")
    m = order // 2
    t = m // 2 - 1  # x^z = x^(2^(n-2) - 1)
    rot = tuple((i + 1) % m for i in range(m))
    twist = tuple((t * i) % m for i in range(m))
    return gp.group_from_generators(m, [rot, twist], cap=cap,
                                    label=f"SD{order}",
                                    provenance="affine action on Z/2^(n-1)")


def quaternion(order: int, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    n = order.bit_length() - 1
    if order != 2 ** n or n < 3:
        raise InvalidSpec("quaternion order must be 2^n with n >= 3")
    m = order // 2
    # presentation x^m = 1, z^2 = x^(m/2), x^z = x^-1; elements (i, e)
    def mul(a, b):
        i, e = a
        j, f = b
        if e == 0:
            return ((i + j) % m, f)
        k = (i - j) % m
        if f == 0:
            return (k, 1)
        return ((k + m // 2) % m, 0)
    elems = [(i, e) for e in (0, 1) for i in range(m)]
    return _from_mul(elems, mul, gen_elems=[(1, 0), (0, 1)], cap=cap,
                     label=f"Q{order}")


def extraspecial(p: int, n: int, variant: str,
                 cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Extraspecial group of order p^(2n+1).

    For odd p, ``variant`` is "exp_p" or "exp_p2"; for p = 2 it is "+"
    (central product of dihedrals) or "-" (one quaternion factor).
    """
    if n < 1:
        raise InvalidSpec("extraspecial needs n >= 1")
    if p == 2:
        if variant not in ("+", "-"):
            raise InvalidSpec("p=2 extraspecial variant must be '+' or '-'")
        parts = [dihedral(8, cap) for _ in range(n)]
        if variant == "-":
            parts[-1] = quaternion(8, cap)
        G = parts[0]
        for H in parts[1:]:
            G = central_product_by_order(G, H, 2, cap=cap)
        G.label = "ES(2,%d,%s)" % (n, variant)
        return G
    if variant == "exp_p":
        G = _heisenberg(p, cap)
    elif variant == "exp_p2":
        G = _modular_p3(p, cap)
    else:
        raise InvalidSpec("odd-p extraspecial variant must be exp_p/exp_p2")
    base = G
    for _ in range(n - 1):
        G = central_product_by_order(G, _heisenberg(p, cap), p, cap=cap)
    G.label = "ES(%d,%d,%s)" % (p, n, variant)
    return G


def _heisenberg(p: int, cap: int) -> Group:
    # p^(1+2) of exponent p (p odd): triples (a,b,c) over F_p
    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)
    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    return _from_mul(elems, mul, gen_elems=[(1, 0, 0), (0, 1, 0)], cap=cap,
                     label=f"Heis({p})")


def _modular_p3(p: int, cap: int) -> Group:
    # p^(1+2) of exponent p^2: <x of order p^2, y | x^y = x^(1+p)>
    m = p * p
    rot = tuple((i + 1) % m for i in range(m))
    twist = tuple(((1 + p) * i) % m for i in range(m))
    return gp.group_from_generators(m, [rot, twist], cap=cap,
                                    label=f"M({p}^3)",
                                    provenance="affine action on Z/p^2")


def _from_mul(elems, mul, gen_elems, cap, label=""):
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return gp.group_from_table(table, gen_indices=[index[g] for g in gen_elems],
                               cap=cap, label=label)


# -- product constructions ----------------------------------------------

def direct_product(factors: Sequence[Group],
                   cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Direct product acting on the disjoint union of the factor domains."""
    if not factors:
        return cyclic(1)
    order = 1
    for F in factors:
        order *= F.order
        if order > cap:
            raise gp.GroupTooLarge(f"direct product order exceeds cap {cap}")
    degree = sum(F.degree for F in factors)
    gens = []
    off = 0
    for F in factors:
        for g in F.generators:
            img = list(range(degree))
            perm = F.elements[g]
            for i, x in enumerate(perm):
                img[off + i] = off + x
            gens.append(tuple(img))
        off += F.degree
    label = "x".join(F.label or "?" for F in factors)
    return gp.group_from_generators(degree, gens, cap=cap, label=label,
                                    provenance="disjoint union of factor actions")


def _product_with_pairs(A: Group, B: Group, cap: int):
    """Direct product together with the (a_id, b_id) -> product_id map."""
    P = direct_product([A, B], cap=cap)
    pair_to_id = {}
    for a in range(A.order):
        pa = A.elements[a]
        for b in range(B.order):
            pb = B.elements[b]
            img = tuple(list(pa) + [A.degree + x for x in pb])
            pair_to_id[(a, b)] = P.index[img]
    return P, pair_to_id


def central_product(A: Group, B: Group, pairs: Sequence[tuple],
                    cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Quotient of A x B identifying central subgroups via the pairing.

    ``pairs`` lists (a_id, b_id) generator pairs; the map a_i -> b_i must
    extend to an isomorphism of the generated central subgroups.
    """
    za = [a for a, _ in pairs]
    zb = [b for _, b in pairs]
    for a in za:
        if any(A.mul(a, g) != A.mul(g, a) for g in range(A.order)):
            raise NotCentral(f"element {a} is not central in A")
    for b in zb:
        if any(B.mul(b, g) != B.mul(g, b) for g in range(B.order)):
            raise NotCentral(f"element {b} is not central in B")
    phi = _extend_pairing(A, B, pairs)
    P, pair_to_id = _product_with_pairs(A, B, cap)
    anti = [pair_to_id[(a, B.inv(b))] for a, b in phi.items()]
    K = Subgroup(P, P.closure(anti))
    if K.order != len(phi):
        raise PairingNotIsomorphism("anti-diagonal has wrong order")
    q = gp.quotient_group(P, K)
    Q = q.group
    Q.label = f"{A.label or '?'}o{B.label or '?'}"
    return Q


def _extend_pairing(A: Group, B: Group, pairs):
    """Extend generator pairs multiplicatively to a full isomorphism of
    the generated (abelian) subgroups; raise if inconsistent."""
    phi = {A.identity: B.identity}
    frontier = [A.identity]
    while frontier:
        new = []
        for x in frontier:
            for (a, b) in pairs:
                xa, xb = A.mul(x, a), B.mul(phi[x], b)
                if xa in phi:
                    if phi[xa] != xb:
                        raise PairingNotIsomorphism(
                            "pairing does not extend to a homomorphism")
                else:
                    phi[xa] = xb
                    new.append(xa)
        frontier = new
    if len(set(phi.values())) != len(phi):
        raise PairingNotIsomorphism("pairing not injective")
    # surjectivity onto <zb>
    if len(B.closure(b for _, b in pairs)) != len(phi):
        raise PairingNotIsomorphism("pairing not surjective onto target")
    return phi


def central_product_by_order(A: Group, B: Group, k: int,
                             cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Central product identifying the canonical order-k cyclic subgroups
    of the (cyclic) centers of A and B."""
    a = _canonical_central_of_order(A, k)
    b = _canonical_central_of_order(B, k)
    return central_product(A, B, [(a, b)], cap=cap)


def _canonical_central_of_order(G: Group, k: int) -> int:
    Z = gp.center(G)
    cands = [z for z in Z.members if G.element_order(z) == k]
    if not cands:
        raise NotCentral(f"no central element of order {k}")
    return cands[0]


def semidirect_product(N: Group, H: Group, action: dict,
                       cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Semidirect product N x| H.

    ``action`` maps each generator id of H to an automorphism of N given
    as a full image tuple on N's element ids.  The generator images must
    extend consistently to a homomorphism H -> Aut(N); this is verified
    exhaustively over H's Cayley graph.
    """
    auts = {H.identity: tuple(range(N.order))}
    for h, img in action.items():
        if h not in H.generators:
            raise ActionNotHomomorphism(f"{h} is not a generator id of H")
        _check_automorphism(N, tuple(img))
    frontier = [H.identity]
    while frontier:
        new = []
        for h in frontier:
            for g in H.generators:
                hg = H.mul(h, g)
                ag = tuple(action[g])
                ah = auts[h]
                composed = tuple(ah[x] for x in ag)  # a_(hg) = a_h o a_g
                if hg in auts:
                    if auts[hg] != composed:
                        raise ActionNotHomomorphism(
                            "generator images are inconsistent on relations")
                else:
                    auts[hg] = composed
                    new.append(hg)
        frontier = new
    if N.order * H.order > cap:
        raise gp.GroupTooLarge("semidirect product order exceeds cap")

    def mul(x, y):
        n1, h1 = x
        n2, h2 = y
        return (N.mul(n1, auts[h1][n2]), H.mul(h1, h2))
    elems = [(n, h) for n in range(N.order) for h in range(H.order)]
    gen_elems = [(n, H.identity) for n in N.generators] + \
                [(N.identity, h) for h in H.generators]
    G = _from_mul(elems, mul, gen_elems, cap,
                  label=f"{N.label or '?'}:{H.label or '?'}")
    return G


def _check_automorphism(N: Group, img: tuple):
    if sorted(img) != list(range(N.order)):
        raise ActionNotHomomorphism("action image is not a bijection of N")
    for a in range(N.order):
        for b in range(N.order):
            if img[N.mul(a, b)] != N.mul(img[a], img[b]):
                raise ActionNotHomomorphism("action image is not a homomorphism")


def automorphism_from_generator_images(N: Group, images: dict) -> tuple:
    """Extend a map on N's generators to the full automorphism image
    tuple, by closure.  ``images`` maps generator id -> element id."""
    amap = {N.identity: N.identity}
    frontier = [N.identity]
    while frontier:
        new = []
        for x in frontier:
            for g, ig in images.items():
                xg, ximg = N.mul(x, g), N.mul(amap[x], ig)
                if xg in amap:
                    if amap[xg] != ximg:
                        raise ActionNotHomomorphism(
                            "generator images do not define a homomorphism")
                else:
                    amap[xg] = ximg
                    new.append(xg)
        frontier = new
    if len(amap) != N.order:
        raise ActionNotHomomorphism("generator images do not cover N")
    return tuple(amap[x] for x in range(N.order))


# -- build entry point --------------------------------------------------

def build(spec: GroupSpec, cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Deterministically build the group described by ``spec``.  A spec
    may carry a ``min_cap`` parameter raising the element cap for groups
    known to exceed the default (used by a few catalog entries)."""
    k, p = spec.kind, spec.params
    cap = max(cap, p.get("min_cap", 0))
    try:
        if k == "named":
            return build(catalog(p["name"]), cap)
        if k == "cyclic":
            return cyclic(p["order"], cap)
        if k == "dihedral":
            return dihedral(p["order"], cap)
        if k == "semidihedral":
            return semidihedral(p["order"], cap)
        if k == "quaternion":
            return quaternion(p["order"], cap)
        if k == "elementary_abelian":
            return elementary_abelian(p["prime"], p["rank"], cap)
        if k == "extraspecial":
            return extraspecial(p["prime"], p["n"], p["variant"], cap)
        if k == "direct_product":
            return direct_product([build(f, cap) for f in p["factors"]], cap)
        if k == "central_product":
            A, B = build(p["a"], cap), build(p["b"], cap)
            if "pairs" in p:
                return central_product(A, B, [tuple(x) for x in p["pairs"]], cap)
            return central_product_by_order(A, B, p["order"], cap)
        if k == "semidirect_product":
            N, H = build(p["n"], cap), build(p["h"], cap)
            action = _resolve_action(N, H, p["action"])
            return semidirect_product(N, H, action, cap)
        if k == "perm":
            gens = [tuple(x - 1 for x in g) for g in p["generators"]]
            return gp.group_from_generators(p["degree"], gens, cap=cap,
                                            label=p.get("label", ""))
    except KeyError as e:
        raise InvalidSpec(f"missing parameter {e} for kind {k!r}") from e
    raise InvalidSpec(f"unknown kind {k!r}")


def _resolve_action(N: Group, H: Group, action) -> dict:
    """Action given either as full image tuples per H generator (list
    index = position of the generator in H.generators) or as generator
    images of N ({"gen_images": [[n_gen_img, ...], ...]})."""
    out = {}
    if isinstance(action, dict) and "gen_images" in action:
        rows = action["gen_images"]
        if len(rows) != len(H.generators):
            raise InvalidSpec("need one image row per H generator")
        ngens = list(N.generators)
        for h, row in zip(H.generators, rows):
            if len(row) != len(ngens):
                raise InvalidSpec("need one image per N generator")
            out[h] = automorphism_from_generator_images(
                N, dict(zip(ngens, row)))
        return out
    if isinstance(action, (list, tuple)):
        if len(action) != len(H.generators):
            raise InvalidSpec("need one automorphism per H generator")
        for h, img in zip(H.generators, action):
            out[h] = tuple(img)
        return out
    raise InvalidSpec("unrecognized action format")


# -- named catalog ------------------------------------------------------

def _sl23_spec() -> GroupSpec:
    # SL(2,3) acting on the 8 nonzero vectors of F_3^2.
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        # column-vector convention: v -> M v
        return [idx[((m[0][0] * a + m[0][1] * b) % 3,
                     (m[1][0] * a + m[1][1] * b) % 3)] + 1
                for (a, b) in vecs]
    gens = [mat_perm([[1, 1], [0, 1]]), mat_perm([[0, 2], [1, 0]])]
    return GroupSpec("perm", {"degree": 8, "generators": gens,
                              "label": "SL(2,3)"})


def _c3c3_sl23_spec() -> GroupSpec:
    # (C3 x C3) x| SL(2,3) with the natural linear action.
    n = GroupSpec("elementary_abelian", {"prime": 3, "rank": 2})
    h = _sl23_spec()
    N = build(n)
    H = build(h)
    # N generators act as e1, e2; find them
    ngens = list(N.generators)
    # identify which generator is which basis vector via cycle support
    rows = []
    for hgen in H.generators:
        perm = H.elements[hgen]
        # recover the matrix from the action on basis vectors of F_3^2
        vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
        e1img = vecs[perm[vecs.index((1, 0))]]
        e2img = vecs[perm[vecs.index((0, 1))]]
        # image of N-generator i is e_i-image written in N
        def nv(v):
            x = N.identity
            x = N.power(ngens[0], v[0])
            x = N.mul(x, N.power(ngens[1], v[1]))
            return x
        rows.append([nv(e1img), nv(e2img)])
    return GroupSpec("semidirect_product",
                     {"n": n, "h": h, "action": {"gen_images": rows}})


def _semidirect_with_inversion(n_spec: GroupSpec) -> GroupSpec:
    N = build(n_spec)
    inv_images = [N.inv(g) for g in N.generators]
    return GroupSpec("semidirect_product",
                     {"n": n_spec,
                      "h": GroupSpec("cyclic", {"order": 2}),
                      "action": {"gen_images": [inv_images]}})


def _c7_c3_spec() -> GroupSpec:
    # C7 x| C3 via the order-3 automorphism x -> x^2
    n = GroupSpec("cyclic", {"order": 7})
    N = build(n)
    g = list(N.generators)[0]
    return GroupSpec("semidirect_product",
                     {"n": n, "h": GroupSpec("cyclic", {"order": 3}),
                      "action": {"gen_images": [[N.power(g, 2)]]}})


def _c5_v4_spec() -> GroupSpec:
    # C5 x| V4 with one factor inverting (the other acting trivially)
    n = GroupSpec("cyclic", {"order": 5})
    N = build(n)
    g = list(N.generators)[0]
    return GroupSpec("semidirect_product",
                     {"n": n,
                      "h": GroupSpec("elementary_abelian", {"prime": 2, "rank": 2}),
                      "action": {"gen_images": [[N.inv(g)], [g]]}})


def _c3_d16xc2_spec() -> GroupSpec:
    # C3 x| (D16 x C2): the reflection of D16 inverts C3, everything else
    # acts trivially. Sylow 2-subgroup is D16 x C2, with T = D16 dihedral.
    n = GroupSpec("cyclic", {"order": 3})
    N = build(n)
    h = GroupSpec("direct_product",
                  {"factors": [GroupSpec("dihedral", {"order": 16}),
                               GroupSpec("cyclic", {"order": 2})]})
    H = build(h)
    g = list(N.generators)[0]
    rows = []
    for hgen in H.generators:
        o = H.element_order(hgen)
        rows.append([N.inv(g)] if o == 2 else [g])
    return GroupSpec("semidirect_product",
                     {"n": n, "h": h, "action": {"gen_images": rows}})


def _gl23_pair(big_order: int, twist) -> tuple:
    """First (in lexicographic matrix order) pair (x, z) in GL(2,3) with
    |x| = big_order, |z| = 2, z outside <x>, and x^z = x^twist."""
    def mul(A, B):
        return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) % 3
                           for j in range(2)) for i in range(2))
    ident = ((1, 0), (0, 1))

    def order(A):
        o, M = 1, A
        while M != ident:
            M = mul(M, A)
            o += 1
        return o
    mats = [((a, b), (c, d))
            for a in range(3) for b in range(3)
            for c in range(3) for d in range(3)
            if (a * d - b * c) % 3 != 0]
    x = next(M for M in mats if order(M) == big_order)
    powers = set()
    M = x
    target = ident
    for k in range(big_order):
        powers.add(M)
        if k + 1 == twist % big_order:
            target = M
        M = mul(M, x)
    z = next(M for M in mats if order(M) == 2 and M not in powers
             and mul(mul(M, x), M) == target)
    return x, z


def _affine_f3_4_spec(linear_gens: list, label: str,
                      min_cap: int) -> GroupSpec:
    """Permutation spec for (C3)^4 x| <linear_gens> acting affinely on
    the 81 vectors of F_3^4 (4x4 matrices over F_3)."""
    vecs = [(a, b, c, d) for a in range(3) for b in range(3)
            for c in range(3) for d in range(3)]
    idx = {v: i for i, v in enumerate(vecs)}

    def lin_perm(K):
        return [idx[tuple(sum(K[i][j] * v[j] for j in range(4)) % 3
                          for i in range(4))] + 1 for v in vecs]
    translate = [idx[((v[0] + 1) % 3,) + v[1:]] + 1 for v in vecs]
    gens = [translate] + [lin_perm(K) for K in linear_gens]
    return GroupSpec("perm", {"degree": 81, "generators": gens,
                              "label": label, "min_cap": min_cap})


def _kron(A, B) -> list:
    """Kronecker product of 2x2 matrices over F_3 (4x4 result)."""
    K = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    K[2 * i + k][2 * j + l] = (A[i][j] * B[k][l]) % 3
    return K


def _c34_sd16c4_spec() -> GroupSpec:
    # (C3)^4 x| (SD16 o C4), order 2592: SD16 < GL(2,3) acting on
    # F_9^2 = F_3^4, centrally extended by the scalar of order 4
    # (multiplication by a square root of -1 in F_9).  The action is
    # faithful, so the group has no nontrivial normal 2-subgroup.
    x, z = _gl23_pair(8, 3)
    i2 = ((1, 0), (0, 1))
    # F_9 = F_3[w], w^2 = -1; scalar w on F_9^2 in F_3^4 coordinates
    # (a + bw per F_9 entry): w * (a + bw) = -b + aw
    w = [[0, 2, 0, 0], [1, 0, 0, 0], [0, 0, 0, 2], [0, 0, 1, 0]]
    # embed GL(2,3) F_9-linearly: blocks scaled by matrix entries
    def f9lin(M):
        K = [[0] * 4 for _ in range(4)]
        for i in range(2):
            for j in range(2):
                K[2 * i][2 * j] = M[i][j] % 3
                K[2 * i + 1][2 * j + 1] = M[i][j] % 3
        return K
    return _affine_f3_4_spec([f9lin(x), f9lin(z), w],
                             "C3^4:(SD16oC4)", 4096)


def _c34_sd16d8_spec() -> GroupSpec:
    # (C3)^4 x| (SD16 o D8), order 5184: the tensor product of the
    # natural 2-dimensional representations of SD16 and D8 over F_3
    # identifies the two central involutions, realizing the central
    # product faithfully on F_3^4.
    x, z = _gl23_pair(8, 3)
    r, s = _gl23_pair(4, -1)
    i2 = ((1, 0), (0, 1))
    return _affine_f3_4_spec(
        [_kron(x, i2), _kron(z, i2), _kron(i2, r), _kron(i2, s)],
        "C3^4:(SD16oD8)", 8192)


def _sd16_c4_spec() -> GroupSpec:
    # SD16 o C4 identifying x^4 with c^2: the semidihedral main-theorem
    # witness of order 32.
    return GroupSpec("central_product",
                     {"a": GroupSpec("semidihedral", {"order": 16}),
                      "b": GroupSpec("cyclic", {"order": 4}),
                      "order": 2})


_CATALOG = None


def _build_catalog() -> dict:
    c3c3 = GroupSpec("elementary_abelian", {"prime": 3, "rank": 2})
    cat = {
        "S3": GroupSpec("perm", {"degree": 3,
                                 "generators": [[2, 3, 1], [2, 1, 3]],
                                 "label": "S3"}),
        "S4": GroupSpec("perm", {"degree": 4,
                                 "generators": [[2, 3, 4, 1], [2, 1, 3, 4]],
                                 "label": "S4"}),
        "A4": GroupSpec("perm", {"degree": 4,
                                 "generators": [[2, 3, 1, 4], [2, 1, 4, 3]],
                                 "label": "A4"}),
        "C2": GroupSpec("cyclic", {"order": 2}),
        "C4": GroupSpec("cyclic", {"order": 4}),
        "V4": GroupSpec("elementary_abelian", {"prime": 2, "rank": 2}),
        "C3xC3": c3c3,
        "D8": GroupSpec("dihedral", {"order": 8}),
        "D16": GroupSpec("dihedral", {"order": 16}),
        "Q8": GroupSpec("quaternion", {"order": 8}),
        "SD16": GroupSpec("semidihedral", {"order": 16}),
        "SL(2,3)": _sl23_spec(),
        "SD16oC4": _sd16_c4_spec(),
        "D16xC2": GroupSpec("direct_product",
                            {"factors": [GroupSpec("dihedral", {"order": 16}),
                                         GroupSpec("cyclic", {"order": 2})]}),
        "D8oD8": GroupSpec("central_product",
                           {"a": GroupSpec("dihedral", {"order": 8}),
                            "b": GroupSpec("dihedral", {"order": 8}),
                            "order": 2}),
        "D8oQ8": GroupSpec("central_product",
                           {"a": GroupSpec("dihedral", {"order": 8}),
                            "b": GroupSpec("quaternion", {"order": 8}),
                            "order": 2}),
        "D8oC4": GroupSpec("central_product",
                           {"a": GroupSpec("dihedral", {"order": 8}),
                            "b": GroupSpec("cyclic", {"order": 4}),
                            "order": 2}),
        "ES27+": GroupSpec("extraspecial", {"prime": 3, "n": 1,
                                            "variant": "exp_p"}),
        "ES27-": GroupSpec("extraspecial", {"prime": 3, "n": 1,
                                            "variant": "exp_p2"}),
        "ES27+xC3": GroupSpec("direct_product",
                              {"factors": [GroupSpec("extraspecial",
                                                     {"prime": 3, "n": 1,
                                                      "variant": "exp_p"}),
                                           GroupSpec("cyclic", {"order": 3})]}),
        "C3C3:SL(2,3)": _c3c3_sl23_spec(),
        "C7:C3": _c7_c3_spec(),
        "C5:V4": _c5_v4_spec(),
        "C3C3:C2": _semidirect_with_inversion(c3c3),
        "C3:(D16xC2)": _c3_d16xc2_spec(),
        "C3^4:(SD16oC4)": _c34_sd16c4_spec(),
        "C3^4:(SD16oD8)": _c34_sd16d8_spec(),
    }
    # unicode aliases used in the literature-facing names
    aliases = {
        "SD16∘C4": "SD16oC4",
        "D16×C2": "D16xC2",
        "D8∘D8": "D8oD8",
        "D8∘Q8": "D8oQ8",
        "D8∘C4": "D8oC4",
        "(C3×C3)⋊SL(2,3)": "C3C3:SL(2,3)",
        "C7⋊C3": "C7:C3",
        "(C3×C3)⋊C2": "C3C3:C2",
    }
    for k, v in aliases.items():
        cat[k] = cat[v]
    return cat


def catalog(name: str) -> GroupSpec:
    """Look up a named GroupSpec from the pinned catalog."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownName(f"unknown catalog name {name!r}") from None


_GROUP_CACHE: dict = {}


def catalog_group(name: str) -> Group:
    """Build (and memoize) a catalog group by name."""
    spec = catalog(name)
    key = spec.to_json() if hasattr(spec, "to_json") else repr(spec)
    key = str(key)
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = build(spec)
    return _GROUP_CACHE[key]


def catalog_names() -> list:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return sorted(k for k in _CATALOG if k.isascii())
