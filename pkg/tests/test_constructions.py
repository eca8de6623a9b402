"""Builder and catalog tests: family constructors, product
constructions, spec serialization, and the named catalog."""

import json

import pytest

from quillen import constructions as cs
from quillen import group as gp
from quillen.errors import (
    ActionNotHomomorphism,
    InvalidSpec,
    NotCentral,
    PairingNotIsomorphism,
    UnknownName,
)


# -- elementary families ------------------------------------------------

def test_cyclic():
    for n in (1, 2, 5, 12):
        G = cs.cyclic(n)
        assert G.order == n and gp.is_cyclic(G)
    with pytest.raises(InvalidSpec):
        cs.cyclic(0)


def test_symmetric():
    assert cs.symmetric(4).order == 24
    assert not gp.is_abelian(cs.symmetric(3))


def test_elementary_abelian():
    G = cs.elementary_abelian(3, 2)
    assert G.order == 9 and gp.is_elementary_abelian(G, 3)
    assert cs.elementary_abelian(2, 0).order == 1


def test_dihedral():
    for order in (8, 16, 32):
        G = cs.dihedral(order)
        assert G.order == order and gp.is_dihedral_2group(G)
    assert gp.is_elementary_abelian(cs.dihedral(4), 2)
    assert cs.dihedral(12).order == 12
    with pytest.raises(InvalidSpec):
        cs.dihedral(7)


def test_semidihedral():
    for order in (16, 32):
        G = cs.semidihedral(order)
        assert G.order == order and gp.is_semidihedral_2group(G)
    with pytest.raises(InvalidSpec):
        cs.semidihedral(8)


def test_quaternion():
    Q8 = cs.quaternion(8)
    assert Q8.order == 8
    assert sum(1 for x in range(8) if Q8.element_order(x) == 2) == 1
    Q16 = cs.quaternion(16)
    assert sum(1 for x in range(16) if Q16.element_order(x) == 2) == 1


def test_extraspecial():
    for p, variant, expo in ((3, "exp_p", 3), (3, "exp_p2", 9)):
        G = cs.extraspecial(p, 1, variant)
        assert G.order == 27
        assert gp.is_extraspecial(G, p)
        assert gp.exponent(G) == expo
    plus = cs.extraspecial(2, 2, "+")
    minus = cs.extraspecial(2, 2, "-")
    assert plus.order == 32 and minus.order == 32
    assert gp.is_extraspecial(plus, 2) and gp.is_extraspecial(minus, 2)
    assert gp.rank(plus.full(), 2) == 3
    assert gp.rank(minus.full(), 2) == 2
    big = cs.extraspecial(3, 2, "exp_p")
    assert big.order == 3 ** 5 and gp.is_extraspecial(big, 3)


# -- products -----------------------------------------------------------

def test_direct_product():
    G = cs.direct_product([cs.cyclic(2), cs.cyclic(3)])
    assert G.order == 6 and gp.is_cyclic(G)
    H = cs.direct_product([cs.dihedral(16), cs.cyclic(2)])
    assert H.order == 32 and gp.center(H).order == 4


def test_central_product_d8_d8():
    G = cs.central_product_by_order(cs.dihedral(8), cs.dihedral(8), 2)
    assert G.order == 32
    assert gp.is_extraspecial(G, 2)


def test_central_product_bad_pairing():
    with pytest.raises(NotCentral):
        # the rotation of D8 is central only up to its square
        D8 = cs.dihedral(8)
        rot = next(x for x in range(8) if D8.element_order(x) == 4)
        cs.central_product(D8, cs.cyclic(4), [(rot, 1)])


def test_semidirect_product_rejects_bad_action():
    N, H = cs.cyclic(5), cs.cyclic(4)
    bad = {list(H.generators)[0]: tuple(range(5))}  # trivial, fine
    cs.semidirect_product(N, H, bad)  # sanity: C5 x C4
    with pytest.raises(ActionNotHomomorphism):
        # order-2 automorphism assigned to an order-4 generator is fine
        # (kernel C2), but a non-bijection must be rejected
        cs.semidirect_product(N, H, {list(H.generators)[0]: (0, 0, 1, 2, 3)})


def test_semidirect_product_inversion():
    N = cs.cyclic(3)
    H = cs.cyclic(2)
    g = list(N.generators)[0]
    G = cs.semidirect_product(N, H, {list(H.generators)[0]:
                                     cs.automorphism_from_generator_images(
                                         N, {g: N.inv(g)})})
    assert G.order == 6 and not gp.is_abelian(G)


# -- spec serialization -------------------------------------------------

def test_spec_json_round_trip():
    for name in ("S4", "SD16oC4", "C3C3:SL(2,3)", "C3^4:(SD16oD8)"):
        spec = cs.catalog(name)
        data = json.loads(json.dumps(spec.to_json()))
        back = cs.GroupSpec.from_json(data)
        assert back == spec


def test_spec_rejects_garbage():
    with pytest.raises(InvalidSpec):
        cs.GroupSpec.from_json({"kind": "nope", "params": {}})
    with pytest.raises(InvalidSpec):
        cs.GroupSpec.from_json({"kind": "cyclic", "params": {}, "extra": 1})
    with pytest.raises(InvalidSpec):
        cs.build(cs.GroupSpec("cyclic", {}))  # missing order


# -- catalog ------------------------------------------------------------

EXPECTED_ORDERS = {
    "S3": 6, "S4": 24, "A4": 12, "V4": 4, "C3xC3": 9, "D8": 8,
    "D16": 16, "Q8": 8, "SD16": 16, "SL(2,3)": 24, "SD16oC4": 32,
    "D16xC2": 32, "D8oD8": 32, "D8oQ8": 32, "D8oC4": 16,
    "ES27+": 27, "ES27-": 27, "ES27+xC3": 81, "C3C3:SL(2,3)": 216,
    "C7:C3": 21, "C5:V4": 20, "C3C3:C2": 18, "C3:(D16xC2)": 96,
}


def test_catalog_orders():
    for name, order in EXPECTED_ORDERS.items():
        assert cs.catalog_group(name).order == order, name


def test_catalog_group_memoized():
    assert cs.catalog_group("S4") is cs.catalog_group("S4")


def test_catalog_unknown_name():
    with pytest.raises(UnknownName):
        cs.catalog("definitely-not-a-group")


def test_catalog_unicode_aliases():
    assert cs.catalog("SD16∘C4") == cs.catalog("SD16oC4")
    assert cs.catalog("C7⋊C3") == cs.catalog("C7:C3")


def test_catalog_structural_facts():
    SDC4 = cs.catalog_group("SD16oC4")
    assert gp.is_cyclic(gp.center(SDC4))
    assert gp.center(SDC4).order == 4
    assert gp.derived_subgroup(SDC4).order == 4
    SL23 = cs.catalog_group("SL(2,3)")
    assert gp.center(SL23).order == 2
    assert sum(1 for x in range(24) if SL23.element_order(x) == 2) == 1
    big = cs.catalog_group("C3C3:SL(2,3)")
    P = gp.sylow_subgroup(big, 3)
    assert P.order == 27 and gp.is_extraspecial(P, 3)
    assert gp.exponent(P) == 3


def test_affine_witnesses():
    """The two order > 4096 instances: faithful affine constructions with
    the intended Sylow 2-subgroups and no nontrivial normal 2-subgroup."""
    G = cs.catalog_group("C3^4:(SD16oC4)")
    assert G.order == 2592
    P = gp.sylow_subgroup(G, 2)
    assert P.order == 32
    assert gp.is_cyclic(gp.center(P)) and gp.center(P).order == 4
    assert gp.o_p(G, 2).order == 1
    H = cs.catalog_group("C3^4:(SD16oD8)")
    assert H.order == 5184
    Q = gp.sylow_subgroup(H, 2)
    assert Q.order == 64
    assert gp.o_p(H, 2).order == 1
    assert gp.o_p_prime(H, 2).order == 81


def test_catalog_names_listed():
    names = cs.catalog_names()
    assert "S4" in names and "C3^4:(SD16oD8)" in names
    for n in names:
        assert isinstance(cs.catalog(n), cs.GroupSpec)
