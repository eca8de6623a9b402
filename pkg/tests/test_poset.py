"""Poset and simplicial-complex tests: Quillen/Brown/abelian posets,
order complexes, links, joins, wedges, and the text format."""

import pytest

from quillen import constructions as cs
from quillen import group as gp
from quillen import poset as ps
from quillen.errors import BadAttachment, NodeNotInPoset, SimplexNotInComplex


def G_of(name):
    return cs.catalog_group(name)


# -- posets -------------------------------------------------------------

def test_quillen_poset_s3():
    P = ps.quillen_poset(G_of("S3"), 2)
    assert len(P) == 3
    assert all(S.order == 2 for S in P.nodes)
    assert P.covers() == []


def test_quillen_poset_d8():
    P = ps.quillen_poset(G_of("D8"), 2)
    assert len(P) == 7  # 5 C2s + 2 V4s
    assert len(P.covers()) == 6  # each V4 covers 3 C2s


def test_brown_poset_proper():
    D8 = G_of("D8")
    B = ps.brown_poset(D8, 2)
    assert all(S.order < 8 for S in B.nodes)
    assert len(B) == 8  # 10 subgroups - trivial - whole
    Bw = ps.brown_poset(D8, 2, include_whole_group=True)
    assert len(Bw) == 9


def test_poset_intervals():
    G = G_of("D8")
    P = ps.quillen_poset(G, 2)
    Z = gp.center(G.full())
    up = ps.upper_interval(P, Z)
    assert len(up) == 2  # the two V4s
    V = up.nodes[0]
    low = ps.lower_interval(P, V)
    assert len(low) == 3
    assert len(ps.open_interval(P, Z, V)) == 0


def test_index_of_missing_node():
    G = G_of("D8")
    P = ps.quillen_poset(G, 2)
    with pytest.raises(NodeNotInPoset):
        P.index_of(G.full())


def test_ab_poset_d8_above_center():
    G = G_of("D8")
    A = ps.ab_poset(G.full())
    Z = gp.center(G.full())
    up = ps.upper_interval(A, Z)
    # one C4 and two V4s strictly above the center
    assert len(up) == 3
    assert sorted(S.order for S in up.nodes) == [4, 4, 4]


def test_find_conjunctive_element():
    G = G_of("D8")
    P = ps.quillen_poset(G, 2)
    c = ps.find_conjunctive_element(P)
    assert c is not None
    assert c.member_set == gp.center(G.full()).member_set
    # three isolated points: no conjunctive element
    S3 = G_of("S3")
    assert ps.find_conjunctive_element(ps.quillen_poset(S3, 2)) is None


# -- simplicial complexes -----------------------------------------------

def test_order_complex_chains():
    G = G_of("D8")
    P = ps.quillen_poset(G, 2)
    C = ps.order_complex(P)
    assert C.dim == 1
    assert C.n_simplices(0) == 7
    assert C.n_simplices(1) == 6
    assert C.labels == list(P.nodes)


def test_empty_and_point_complexes():
    empty = ps.SimplicialComplex([])
    assert empty.dim == -1 and empty.n_simplices(-1) == 1
    pt = ps.SimplicialComplex([[0]], close=True)
    assert pt.dim == 0
    assert pt.euler_characteristic_reduced() == 0


def test_close_under_faces():
    C = ps.SimplicialComplex([[0, 1, 2]], close=True)
    assert C.n_simplices(2) == 1
    assert C.n_simplices(1) == 3
    assert C.n_simplices(0) == 3
    assert frozenset([0, 2]) in C


def test_facets():
    C = ps.SimplicialComplex([[0, 1], [1, 2], [2]], close=True)
    assert C.facets() == [frozenset([0, 1]), frozenset([1, 2])]


def test_link():
    C = ps.SimplicialComplex([[0, 1, 2]], close=True)
    lk = ps.link(C, [0])
    assert lk.dim == 1 and frozenset([1, 2]) in lk
    with pytest.raises(SimplexNotInComplex):
        ps.link(C, [0, 3])


def test_join_is_associative_on_sizes():
    s0 = ps.SimplicialComplex([[0], [1]], close=True)
    circle = ps.join(s0, s0)
    assert circle.dim == 1
    assert circle.n_simplices(1) == 4
    assert circle.euler_characteristic_reduced() == -1  # circle: chi~ = -1
    # join with the vertex-free complex is the identity
    assert ps.join(s0, ps.EMPTY_COMPLEX).simplices == s0.simplices


def test_wedge():
    tri = ps.SimplicialComplex([[0, 1], [1, 2], [0, 2]], close=True)
    W = ps.wedge(ps.WedgeAssembly(tri, ((tri, 0),)))
    assert W.n_simplices(1) == 6
    assert W.n_simplices(0) == 5
    with pytest.raises(BadAttachment):
        ps.wedge(ps.WedgeAssembly(tri, ((tri, 99),)))


def test_text_round_trip():
    G = G_of("D8")
    C = ps.order_complex(ps.quillen_poset(G, 2))
    text = C.export_text()
    back = ps.SimplicialComplex.import_text(text)
    assert back.simplices == C.simplices
    # facet-only input is closed over
    assert ps.SimplicialComplex.import_text("0 1 2\n").n_simplices(1) == 3
    # comments and blank lines ignored
    assert ps.SimplicialComplex.import_text("# c\n\n0 1\n").dim == 1
