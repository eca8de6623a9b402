"""Core group-engine tests: element arithmetic, subgroup primitives,
Sylow theory, quotients, and the p-series."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quillen import constructions as cs
from quillen import group as gp
from quillen.errors import (
    GroupTooLarge,
    HypothesisViolated,
    InvalidPermutation,
    NotSolvable,
)


def G_of(name):
    return cs.catalog_group(name)


# -- element arithmetic -------------------------------------------------

def test_identity_is_id_zero():
    for name in ("S3", "S4", "D8", "Q8"):
        G = G_of(name)
        assert G.identity == 0
        for a in range(G.order):
            assert G.mul(G.identity, a) == a
            assert G.mul(a, G.identity) == a


def test_inverses_and_associativity_s4():
    G = G_of("S4")
    for a in range(G.order):
        assert G.mul(a, G.inv(a)) == G.identity
    for a, b, c in itertools.islice(
            itertools.product(range(G.order), repeat=3), 500):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_element_orders_divide_group_order():
    for name in ("S4", "SD16", "SL(2,3)"):
        G = G_of(name)
        for a in range(G.order):
            assert G.order % G.element_order(a) == 0


def test_power_matches_repeated_multiplication():
    G = G_of("D8")
    for a in range(G.order):
        x = G.identity
        for k in range(10):
            assert G.power(a, k) == x
            x = G.mul(x, a)
        assert G.power(a, -1) == G.inv(a)


def test_commutator_and_conjugation():
    G = G_of("S3")
    for a in range(G.order):
        for b in range(G.order):
            lhs = G.commutator(a, b)
            rhs = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))
            assert lhs == rhs
            assert G.conj(a, b) == G.mul(G.mul(G.inv(b), a), b)


def test_invalid_permutation_rejected():
    with pytest.raises(InvalidPermutation):
        gp.group_from_generators(3, [[0, 0, 1]])


def test_element_cap_enforced():
    with pytest.raises(GroupTooLarge):
        gp.group_from_generators(
            5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], cap=100)  # S5 = 120


# -- closure / subgroup properties (property-based) ---------------------

@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=23), max_size=3))
def test_closure_is_subgroup_of_s4(seed):
    G = G_of("S4")
    H = gp.subgroup_generated(G, seed)
    assert G.order % H.order == 0  # Lagrange
    for a in H.members:
        assert G.inv(a) in H.member_set
        for b in H.members:
            assert G.mul(a, b) in H.member_set


def test_small_witness_regenerates():
    G = G_of("SD16")
    for m in gp.all_subgroups(G):
        S = gp.Subgroup(G, m)
        assert G.closure(S.generator_witness) == S.member_set


# -- predicates ---------------------------------------------------------

def test_abelian_cyclic_predicates():
    assert gp.is_abelian(G_of("C3xC3"))
    assert gp.is_cyclic(G_of("C4"))
    assert not gp.is_cyclic(G_of("C3xC3"))
    assert not gp.is_abelian(G_of("S3"))


def test_exponent():
    assert gp.exponent(G_of("C3xC3")) == 3
    assert gp.exponent(G_of("S3")) == 6
    assert gp.exponent(G_of("Q8")) == 4
    assert gp.exponent(G_of("ES27+")) == 3
    assert gp.exponent(G_of("ES27-")) == 9


def test_elementary_abelian():
    assert gp.is_elementary_abelian(G_of("V4"), 2)
    assert gp.is_elementary_abelian(G_of("C3xC3"), 3)
    assert not gp.is_elementary_abelian(G_of("C4"), 2)


def test_dihedral_and_semidihedral_recognizers():
    assert gp.is_dihedral_2group(G_of("D8"))
    assert gp.is_dihedral_2group(G_of("D16"))
    assert not gp.is_dihedral_2group(G_of("Q8"))
    assert not gp.is_dihedral_2group(G_of("SD16"))
    assert gp.is_semidihedral_2group(G_of("SD16"))
    assert not gp.is_semidihedral_2group(G_of("D16"))
    assert not gp.is_semidihedral_2group(G_of("Q8"))


def test_extraspecial_recognizer():
    assert gp.is_extraspecial(G_of("D8"), 2)
    assert gp.is_extraspecial(G_of("Q8"), 2)
    assert gp.is_extraspecial(G_of("D8oD8"), 2)
    assert gp.is_extraspecial(G_of("ES27+"), 3)
    assert gp.is_extraspecial(G_of("ES27-"), 3)
    assert not gp.is_extraspecial(G_of("V4"), 2)
    assert not gp.is_extraspecial(G_of("D16"), 2)  # center != Frattini


def test_solvability():
    for name in ("S3", "S4", "A4", "SL(2,3)", "C3C3:SL(2,3)", "D8"):
        assert gp.is_solvable(G_of(name))
    A5 = gp.group_from_generators(
        5, [[1, 2, 3, 4, 0], [1, 0, 3, 2, 4]], label="A5")
    assert A5.order == 60
    assert not gp.is_solvable(A5)


# -- structural subgroups -----------------------------------------------

def test_center_and_derived():
    G = G_of("S4")
    assert gp.center(G).order == 1
    assert gp.derived_subgroup(G).order == 12  # A4
    D8 = G_of("D8")
    assert gp.center(D8).order == 2
    assert gp.derived_subgroup(D8).order == 2
    Q8 = G_of("Q8")
    assert gp.derived_subgroup(Q8).member_set == gp.center(Q8).member_set


def test_centralizer_normalizer():
    G = G_of("S4")
    P = gp.sylow_subgroup(G, 2)
    N = gp.normalizer(G.full(), P)
    assert N.member_set == P.member_set  # D8 is self-normalizing in S4
    t = G.elements_of_order(2)[0]
    C = gp.centralizer(G.full(), gp.subgroup_generated(G, [t]))
    assert t in C.member_set and G.order % C.order == 0


def test_normal_closure_and_is_normal():
    G = G_of("S4")
    three = G.elements_of_order(3)[0]
    NC = gp.normal_closure(G, [three])
    assert NC.order == 12
    assert gp.is_normal(NC)
    P = gp.sylow_subgroup(G, 2)
    assert not gp.is_normal(P)


def test_sylow_subgroups():
    G = G_of("S4")
    P2 = gp.sylow_subgroup(G, 2)
    P3 = gp.sylow_subgroup(G, 3)
    assert P2.order == 8 and gp.is_dihedral_2group(P2)
    assert P3.order == 3
    assert len(gp.all_sylow_subgroups(G, 2)) == 3
    assert len(gp.all_sylow_subgroups(G, 3)) == 4
    # determinism
    assert gp.sylow_subgroup(G, 2).members == P2.members


def test_o_p_and_o_p_prime():
    S4 = G_of("S4")
    assert gp.o_p(S4, 2).order == 4  # V4
    assert gp.o_p(S4, 3).order == 1
    assert gp.o_p_prime(S4, 2).order == 1
    assert gp.o_p_prime(S4, 3).order == 4
    S3 = G_of("S3")
    assert gp.o_p_prime(S3, 2).order == 3
    assert gp.o_p(S3, 3).order == 3


def test_omega1():
    SD16 = G_of("SD16")
    O = gp.omega1(SD16, 2)
    assert O.order == 8 and gp.is_dihedral_2group(O)
    assert gp.omega1(G_of("ES27-"), 3).order == 9
    assert gp.omega1(G_of("D8"), 2).order == 8


def test_rank():
    assert gp.rank(G_of("D8").full(), 2) == 2
    assert gp.rank(G_of("Q8").full(), 2) == 1
    assert gp.rank(G_of("D8oD8").full(), 2) == 3
    assert gp.rank(G_of("ES27+").full(), 3) == 2
    assert gp.rank(G_of("C3xC3").full(), 3) == 2


def test_frattini():
    assert gp.frattini_subgroup(G_of("D8").full(), 2).order == 2
    assert gp.frattini_subgroup(G_of("V4").full(), 2).order == 1
    assert gp.frattini_subgroup(G_of("C4").full(), 2).order == 2


# -- quotients and p-series ---------------------------------------------

def test_quotient_group_s4_by_v4():
    G = G_of("S4")
    V = gp.o_p(G, 2)
    q = gp.quotient_group(G, V)
    assert q.group.order == 6
    assert not gp.is_abelian(q.group)  # S3
    # hom is a homomorphism
    for a in range(0, G.order, 5):
        for b in range(0, G.order, 7):
            assert q.hom[G.mul(a, b)] == q.group.mul(q.hom[a], q.hom[b])
    # preimage/image round trip
    K = gp.sylow_subgroup(q.group, 3)
    pre = q.preimage(K)
    assert pre.order == 12
    assert q.image(pre).member_set == K.member_set


def test_quotient_requires_normality():
    G = G_of("S4")
    with pytest.raises(HypothesisViolated):
        gp.quotient_group(G, gp.sylow_subgroup(G, 3))


def test_p_length():
    assert gp.p_length(G_of("S4"), 2).p_length == 2
    assert gp.p_length(G_of("S4"), 3).p_length == 1
    assert gp.p_length(G_of("S3"), 2).p_length == 1
    assert gp.p_length(G_of("C3C3:SL(2,3)"), 3).p_length == 2
    assert gp.p_length(G_of("C5:V4"), 5).p_length == 1
    rep = gp.p_length(G_of("S4"), 2)
    assert rep.series[0].order == 1 and rep.series[-1].order == 24
    A5 = gp.group_from_generators(5, [[1, 2, 3, 4, 0], [1, 0, 3, 2, 4]])
    with pytest.raises(NotSolvable):
        gp.p_length(A5, 2)


# -- enumeration --------------------------------------------------------

def test_elementary_abelian_subgroup_counts():
    G = G_of("D8")
    tori = gp.elementary_abelian_subgroups(G, 2)
    # D8: 5 involutions -> 5 C2s, plus 2 V4s
    assert len([t for t in tori if len(t) == 2]) == 5
    assert len([t for t in tori if len(t) == 4]) == 2
    assert len(tori) == 7


def test_all_p_subgroups_s4():
    G = G_of("S4")
    subs = gp.all_p_subgroups(G, 2)
    by_order = {}
    for s in subs:
        by_order[len(s)] = by_order.get(len(s), 0) + 1
    # S4: 9 C2, 3 C4 + 4 V4 (one normal + 3 in the Sylows), 3 D8
    assert by_order[2] == 9
    assert by_order[4] == 7
    assert by_order[8] == 3


def test_all_subgroups_counts():
    assert len(gp.all_subgroups(G_of("D8"))) == 10
    assert len(gp.all_subgroups(G_of("Q8"))) == 6
    assert len(gp.all_subgroups(G_of("S3"))) == 6


def test_abelian_subgroups_include_trivial():
    subs = gp.abelian_subgroups(G_of("D8"))
    assert frozenset([0]) in subs
    assert len(subs) == 9  # 10 subgroups of D8 minus the nonabelian whole
