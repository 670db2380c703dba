from __future__ import annotations

import os
import random

import pytest

from edgeideals.errors import LimitExceeded
from edgeideals.evenconnect import (
    Comparison,
    EdgeFactorization,
    EdgeOrder,
    EvenConnectionPath,
    colon_via_even_connections,
    edge_divides,
    edgelex_compare,
    enumerate_factorizations,
    even_connections,
    generator_ordering,
    leaf_peel_order,
    maximal_expression,
    verify_colon_chain,
    verify_leaf_lemma,
    verify_order_lemma,
    verify_reg_chain,
)
from edgeideals.families import (
    cycle_certificate,
    cycle_graph,
    cycle_with_paths,
    path_graph,
    random_connected_graph,
    three_triangles,
)
from edgeideals.graphs import CycleCertificate, Graph
from edgeideals.monomials import (
    Monomial,
    ideal_equal,
    ideal_sum,
    parse_ideal,
    parse_monomial,
)
from edgeideals.symbolic import CycleDecomposition, edge_ideal, ordinary_power

_SEED = 52061


def _mono(text: str, nv: int) -> Monomial:
    return parse_monomial(text, nv)


def two_paths_graph():
    """C_5 with two 2-edge paths hanging at vertex 1 (9 vertices)."""
    return cycle_with_paths(5, [(1, 2), (1, 2)])


def test_enumerate_factorizations_examples():
    c5 = cycle_graph(5)
    facs = enumerate_factorizations(_mono("x1*x2*x3*x4", 5), c5, 2)
    assert [f.edges for f in facs] == [((1, 2), (3, 4))]
    assert facs[0].remainder.is_unit()
    assert facs[0].product == _mono("x1*x2*x3*x4", 5)

    facs = enumerate_factorizations(_mono("x1*x2^2*x3", 5), c5, 2)
    assert [f.edges for f in facs] == [((1, 2), (2, 3))]

    facs = enumerate_factorizations(_mono("x1^2*x2^2", 5), c5, 2)
    assert [f.edges for f in facs] == [((1, 2), (1, 2))]

    assert enumerate_factorizations(_mono("x1^2*x3^2", 5), c5, 2) == []

    # leftover degree is recorded when the monomial is larger than 2s
    facs = enumerate_factorizations(_mono("x1*x2*x4", 5), c5, 1)
    assert [(f.edges, f.remainder.render()) for f in facs] == [(((1, 2),), "x4")]
    assert facs[0].host() == _mono("x1*x2*x4", 5)

    unit = enumerate_factorizations(_mono("x3", 5), c5, 0)
    assert len(unit) == 1 and unit[0].edges == ()
    assert unit[0].remainder == _mono("x3", 5)


def test_edge_divides():
    c5 = cycle_graph(5)
    assert edge_divides(c5, (1, 2), _mono("x1*x2^2*x3", 5), 2)
    assert not edge_divides(c5, (2, 3), _mono("x1*x2*x3*x4", 5), 2)
    assert edge_divides(c5, (3, 4), _mono("x3*x4", 5), 1)
    # plain non-division is False, not an error
    assert not edge_divides(c5, (4, 5), _mono("x1*x2^2*x3", 5), 2)
    with pytest.raises(ValueError):
        edge_divides(c5, (1, 3), _mono("x1*x3", 5), 1)


def test_default_edge_order():
    c5 = cycle_graph(5)
    order = EdgeOrder.for_graph(c5)
    assert order.edges == ((4, 5), (3, 4), (2, 3), (1, 5), (1, 2))
    assert order.edge_rank((5, 4)) == 0
    assert order.edge_rank((1, 2)) == 4
    assert order.variables_by_rank == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        order.edge_rank((1, 3))
    with pytest.raises(ValueError):
        EdgeOrder(((1, 2), (1, 2)), (0, 1), "dup")
    with pytest.raises(ValueError):
        EdgeOrder(((1, 2),), (0, 2), "bad-ranks")


def test_edgelex_paper_example():
    c5 = cycle_graph(5)
    cmp = edgelex_compare(_mono("x4^2*x5^2", 5), _mono("x1^2*x5^2", 5), c5, 2)
    assert cmp.verdict == "greater"
    assert cmp.left.edges == ((4, 5), (4, 5))
    assert cmp.right.edges == ((1, 5), (1, 5))

    same = edgelex_compare(_mono("x1*x2*x3*x4", 5), _mono("x1*x2*x3*x4", 5), c5, 2)
    assert same.verdict == "equal"

    # equal edge parts, decided by the leftover factor: x1 beats x2
    tail = edgelex_compare(_mono("x1^2*x2", 5), _mono("x1*x2^2", 5), c5, 1, 1)
    assert tail.verdict == "greater"
    assert tail.left.edges == tail.right.edges == ((1, 2),)

    with pytest.raises(ValueError):
        edgelex_compare(_mono("x1*x2", 5), _mono("x1*x2*x3*x4", 5), c5, 2)
    with pytest.raises(ValueError):
        edgelex_compare(_mono("x1*x2*x3*x4", 5), _mono("x1^2*x3^2", 5), c5, 2)


def test_maximal_expression_prefers_greater_edges():
    c5 = cycle_graph(5)
    # x2x3x4x5 factors as (2,3)(4,5) and (3,4)... only those two pairs;
    # the maximal one leads with the greatest edge (4,5)
    best = maximal_expression(_mono("x2*x3*x4*x5", 5), c5, 2)
    assert set(best.edges) == {(4, 5), (2, 3)}
    with pytest.raises(ValueError):
        maximal_expression(_mono("x1^2*x3^2", 5), c5, 2)


def test_generator_ordering_total_and_consistent():
    c5 = cycle_graph(5)
    go = generator_ordering(c5, 2)
    us = go.generators
    assert len(us) == len(set(us)) == len(ordinary_power(c5, 2).gens)
    for i in range(len(us)):
        for j in range(i + 1, len(us)):
            cmp = edgelex_compare(us[i], us[j], c5, 2)
            assert cmp.verdict == "greater", (i, j)
    assert go.position(us[3]) == 3
    # the greatest generator is the square of the greatest edge
    assert us[0] == _mono("x4^2*x5^2", 5)
    with pytest.raises(ValueError):
        generator_ordering(c5, 0)


def test_even_connections_single_edge_cycle():
    c5 = cycle_graph(5)
    f = enumerate_factorizations(_mono("x1*x2", 5), c5, 1)[0]
    pairs = even_connections(f, c5)
    assert [p for p, _ in pairs] == [(1, 2), (1, 5), (2, 3), (3, 5)]
    for _, path in pairs:
        path.validate(c5)
    by_pair = dict(pairs)
    assert by_pair[(3, 5)].vertices in ((3, 2, 1, 5), (5, 1, 2, 3))


def test_even_connections_self_pair():
    c5 = cycle_graph(5)
    u = _mono("x1*x2*x3*x4", 5)
    f = enumerate_factorizations(u, c5, 2)[0]
    pairs = dict(even_connections(f, c5))
    assert (5, 5) in pairs
    path = pairs[(5, 5)]
    path.validate(c5)
    assert path.vertices[0] == path.vertices[-1] == 5


def test_even_connections_isolated_edge():
    g = Graph(4, [(1, 2), (3, 4)])
    f = enumerate_factorizations(_mono("x1*x2", 4), g, 1)[0]
    pairs = even_connections(f, g)
    # only the bounce along the edge itself; nothing new for the colon
    assert [p for p, _ in pairs] == [(1, 2)]


def test_path_validation_rejects_bad_walks():
    c5 = cycle_graph(5)
    f = enumerate_factorizations(_mono("x1*x2", 5), c5, 1)[0]
    with pytest.raises(ValueError):
        EvenConnectionPath((3, 2, 1), f).validate(c5)
    with pytest.raises(ValueError):
        EvenConnectionPath((3, 2, 4, 5), f).validate(c5)  # (2,4) not an edge
    with pytest.raises(ValueError):
        EvenConnectionPath((2, 3, 4, 5), f).validate(c5)  # (3,4) not in the factorization
    # reusing the single copy of (1,2) twice breaks the multiplicity bound
    with pytest.raises(ValueError):
        EvenConnectionPath((3, 2, 1, 2, 1, 5), f).validate(c5)


def test_colon_via_even_connections_cycle():
    c5 = cycle_graph(5)
    res = colon_via_even_connections(c5, _mono("x1*x2", 5), 2)
    want = ideal_sum(edge_ideal(c5), parse_ideal("x3*x5", 5))
    assert res.matches
    assert ideal_equal(res.built, want)
    assert ideal_equal(res.direct, want)
    assert res.report.status == "pass"
    assert (3, 5) in res.pairs


def test_colon_via_even_connections_forest():
    p3 = path_graph(3)
    res = colon_via_even_connections(p3, _mono("x1*x2", 3), 2)
    assert res.matches
    assert ideal_equal(res.built, edge_ideal(p3))


def test_colon_via_even_connections_deeper():
    c5 = cycle_graph(5)
    res = colon_via_even_connections(c5, _mono("x1*x2*x3*x4", 5), 3)
    assert res.matches
    assert res.report.status == "pass"
    with pytest.raises(ValueError):
        colon_via_even_connections(c5, _mono("x1*x2", 5), 1)
    with pytest.raises(ValueError):
        colon_via_even_connections(c5, _mono("x1*x2*x3", 5), 2)
    with pytest.raises(ValueError):
        colon_via_even_connections(c5, _mono("x1^2*x3^2", 5), 3)


def test_colon_equivalence_random_graphs():
    rng = random.Random(_SEED)
    for _ in range(5):
        g = random_connected_graph(rng, rng.randint(4, 6), 0.5)
        for u in ordinary_power(g, 1).gens:
            assert colon_via_even_connections(g, u, 2).matches, (g.edges, u.render())
    for _ in range(3):
        g = random_connected_graph(rng, rng.randint(4, 6), 0.5, bipartite=True)
        for u in ordinary_power(g, 2).gens[:6]:
            assert colon_via_even_connections(g, u, 3).matches, (g.edges, u.render())


def test_verify_order_lemma_cycle():
    c5 = cycle_graph(5)
    for s, r in ((1, 0), (2, 0), (1, 1), (2, 1)):
        rep = verify_order_lemma(c5, s, r)
        assert rep.status == "pass", (s, r, rep.witnesses)
        assert rep.config == (("edge_order", "endpoint-descending"),)
    assert int(verify_order_lemma(c5, 2, 0).details.split()[0]) == 15 * 14 // 2


def test_verify_order_lemma_pendant():
    g, _ = cycle_with_paths(5, [(1, 2)])
    rep = verify_order_lemma(g, 2, 1)
    assert rep.status == "pass", rep.witnesses


def test_leaf_peel_order():
    g, cert = cycle_with_paths(5, [(1, 3)])
    cd = CycleDecomposition.from_graph(g, [cert])
    lp = leaf_peel_order(cd)
    assert lp.peeled == (8, 7, 6) or lp.peeled == (8, 7)
    # vertex 6 neighbors the cycle, so it is a y-vertex, not a peel vertex
    assert lp.peeled == (8, 7)
    assert lp.peel_edges == ((7, 8), (6, 7))
    assert lp.z_index(8) == 1 and lp.z_index(7) == 2
    order = lp.order
    assert order.label == "leaf-peel"
    assert order.edges == (
        (7, 8), (6, 7), (1, 6), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)
    )
    # variable order: z's by peel, then y, then the cycle walk
    assert order.variables_by_rank == (7, 6, 5, 0, 1, 2, 3, 4)


def test_leaf_peel_rejects_cycles_among_pendant_vertices():
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (6, 7), (7, 8), (8, 9), (7, 9)]
    g = Graph(9, edges)
    cert = CycleCertificate.check(g, (1, 2, 3, 4, 5))
    cd = CycleDecomposition.from_graph(g, [cert])
    with pytest.raises(ValueError):
        leaf_peel_order(cd)
    rep = verify_leaf_lemma(g, cd, 2)
    assert rep.status == "skipped"
    assert "leaf elimination" in rep.reason


def test_verify_leaf_lemma_nonvacuous():
    # pendant branches at two cycle vertices put the peel pair (7,9) at odd
    # distance, so it is even-connected already at s=2 through 7,6,1,2,8,9
    g, cert = cycle_with_paths(5, [(1, 2), (2, 2)])
    cd = CycleDecomposition.from_graph(g, [cert])
    rep = verify_leaf_lemma(g, cd, 2)
    assert rep.status == "pass", rep.witnesses
    assert int(rep.details.split()[0]) > 0


def test_verify_leaf_lemma_adjacent_pairs_not_counted():
    # a doubled pendant edge even-connects its endpoints to themselves, but
    # adjacent pairs only restate edge generators and are not checked
    g, cert = cycle_with_paths(5, [(1, 3)])
    cd = CycleDecomposition.from_graph(g, [cert])
    rep = verify_leaf_lemma(g, cd, 2)
    assert rep.status == "pass", rep.witnesses
    assert int(rep.details.split()[0]) == 0


def test_verify_leaf_lemma_vacuous_cases():
    g, cert = two_paths_graph()
    cd = CycleDecomposition.from_graph(g, [cert])
    rep = verify_leaf_lemma(g, cd, 2)
    assert rep.status == "pass"
    assert int(rep.details.split()[0]) == 0

    g7, cert7 = cycle_with_paths(7, [(1, 2)])
    cd7 = CycleDecomposition.from_graph(g7, [cert7])
    rep7 = verify_leaf_lemma(g7, cd7, 2)
    assert rep7.status == "pass"
    assert int(rep7.details.split()[0]) == 0


def test_verify_colon_chain_nonvacuous():
    g, cert = two_paths_graph()
    cd = CycleDecomposition.from_graph(g, [cert])
    rep = verify_colon_chain(g, cd, 3)
    assert rep.status == "pass", rep.witnesses
    assert int(rep.details.split()[0]) >= 2


def test_verify_colon_chain_trivial_cases():
    c5 = cycle_graph(5)
    cd5 = CycleDecomposition.from_graph(c5, [cycle_certificate(5)])
    rep = verify_colon_chain(c5, cd5, 3)
    assert rep.status == "pass"

    g7, cert7 = cycle_with_paths(7, [(1, 2)])
    cd7 = CycleDecomposition.from_graph(g7, [cert7])
    for s in (1, 2, 3):
        rep = verify_colon_chain(g7, cd7, s)
        assert rep.status == "pass"
        assert "0 colon checks" in rep.details

    tri, certs = three_triangles()
    cd3 = CycleDecomposition.from_graph(tri, certs)
    assert verify_colon_chain(tri, cd3, 2).status == "skipped"


def test_verify_reg_chain_gate_and_trivial():
    c5 = cycle_graph(5)
    cd5 = CycleDecomposition.from_graph(c5, [cycle_certificate(5)])
    rep = verify_reg_chain(c5, cd5, 2)
    assert rep.status == "skipped"
    assert rep.reason == "nu(G)-nu(H) < 3"

    g, cert = two_paths_graph()
    cd = CycleDecomposition.from_graph(g, [cert])
    rep2 = verify_reg_chain(g, cd, 2)
    assert rep2.status == "pass", rep2.witnesses
    assert "chain of length 1" in rep2.details


@pytest.mark.skipif(
    not os.environ.get("EDGEIDEALS_EXTENDED"),
    reason="minutes-scale; set EDGEIDEALS_EXTENDED=1 to run",
)
def test_verify_reg_chain_nontrivial_layer():
    g, cert = two_paths_graph()
    cd = CycleDecomposition.from_graph(g, [cert])
    rep = verify_reg_chain(g, cd, 3, max_closure=300_000)
    assert rep.status == "pass", rep.witnesses
    assert "chain of length 2" in rep.details
