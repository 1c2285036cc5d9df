import random

from agmod import aggraph
from agmod.aggraph import build_AG, build_AG_star, invariants, to_dot
from agmod.finmod import Module
from agmod.finring import Ring

from helpers import product_module, zmod
from oracles import (
    brute_chromatic_number,
    brute_clique_number,
    brute_girth,
)


def _labels(graph):
    return [v.label for v in graph.vertices]


def _edge_labels(graph):
    return {
        frozenset((graph.vertices[i].label, graph.vertices[j].label))
        for i, j in graph.edges()
    }


def test_ag_z12_is_the_four_vertex_path():
    g = build_AG(zmod(12))
    assert sorted(_labels(g)) == ["⟨2⟩", "⟨3⟩", "⟨4⟩", "⟨6⟩"]
    assert _edge_labels(g) == {
        frozenset({"⟨2⟩", "⟨6⟩"}),
        frozenset({"⟨6⟩", "⟨4⟩"}),
        frozenset({"⟨4⟩", "⟨3⟩"}),
    }
    inv = invariants(g)
    assert inv.girth is None
    assert inv.diameter == 3
    assert inv.bipartite and inv.connected
    assert inv.is_tree and inv.is_path4 and not inv.is_star
    assert inv.clique_number == 2 and inv.chromatic_number == 2


def test_ag_z2xz4_has_the_expected_four_vertices():
    m = product_module([2, 4])
    g = build_AG(m)
    expected = {
        frozenset({(0, b) for b in range(4)}),        # (0) x S
        frozenset({(0, 0), (1, 0)}),                  # F x (0)
        frozenset({(0, 0), (0, 2)}),                  # (0) x N
        frozenset({(a, b) for a in range(2) for b in (0, 2)}),  # F x N
    }
    assert {v.elements for v in g.vertices} == expected
    assert "path_4" in invariants(g).shape


def test_ag_simple_module_is_empty():
    g = build_AG(zmod(5))
    assert g.n == 0
    inv = invariants(g)
    assert inv.shape == frozenset({"empty"})
    assert inv.clique_number == 0 and inv.chromatic_number == 0
    assert inv.girth is None and inv.diameter is None
    assert inv.connected and inv.bipartite


def test_ag_z30_invariants():
    g = build_AG(zmod(30))
    inv = invariants(g)
    assert g.n == 6 and len(g.edges()) == 6
    assert inv.girth == 3
    assert inv.clique_number == 3 and inv.chromatic_number == 3
    assert list(inv.degree_sequence) == [1, 1, 1, 3, 3, 3]
    triangle = {"⟨6⟩", "⟨10⟩", "⟨15⟩"}
    idx = {v.label: i for i, v in enumerate(g.vertices)}
    for a in triangle:
        for b in triangle:
            if a != b:
                assert g.has_edge(idx[a], idx[b])


def test_module_itself_can_be_a_vertex():
    # every nonzero submodule of (Z_2)^2 over Z_2 annihilates a line, so the
    # graph is complete on the three lines plus the whole module
    vec = Module(Ring([2]), [(2, 0), (2, 0)])
    g = build_AG(vec)
    assert g.n == 4
    assert any(v.is_whole for v in g.vertices)
    inv = invariants(g)
    assert "complete" in inv.shape and "regular" in inv.shape
    assert inv.clique_number == 4 and inv.chromatic_number == 4


def test_ag_star_equals_ag_on_faithful_z12():
    m = zmod(12)
    ag, star = build_AG(m), build_AG_star(m)
    assert _labels(ag) == _labels(star)
    assert _edge_labels(ag) == _edge_labels(star)


def test_ag_star_filters_colons_equal_to_annihilator():
    vec = Module(Ring([2]), [(2, 0), (2, 0)])
    assert build_AG_star(vec).n == 0
    m30 = zmod(30)
    assert _edge_labels(build_AG_star(m30)) == _edge_labels(build_AG(m30))


def test_ag_star_is_subgraph_of_ag():
    for m in [zmod(12), zmod(16), zmod(24, 12), product_module([2, 4]),
              Module(Ring([2, 4]), [(1, 0), (4, 1)])]:
        ag, star = build_AG(m), build_AG_star(m)
        ag_verts = {v.encoding for v in ag.vertices}
        assert {v.encoding for v in star.vertices} <= ag_verts
        assert all(not v.is_whole for v in star.vertices)
        assert _edge_labels(star) <= _edge_labels(ag)


def test_shape_conventions_small_graphs():
    one = invariants(build_AG(zmod(4)))  # single vertex
    assert {"star", "path_1", "tree"} <= one.shape
    assert one.diameter is None and one.connected
    two = invariants(build_AG(zmod(8)))  # one edge
    assert {"star", "path_2", "tree"} <= two.shape
    assert two.diameter == 1
    assert invariants(build_AG(zmod(6))).clique_number == 2


def test_isolated_self_annihilating_vertex():
    # in Z_4 over Z_4 the unique proper submodule squares to zero: a vertex
    # with no partner but itself
    g = build_AG(zmod(4))
    assert _labels(g) == ["⟨2⟩"]
    assert g.edges() == []


def _random_graph(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def test_solvers_match_brute_force_on_random_graphs():
    rng = random.Random(1202)
    for _ in range(120):
        n = rng.randint(0, 9)
        adj = _random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        cl, witness = aggraph.max_clique(adj, n)
        assert cl == brute_clique_number(adj, n)
        assert witness.bit_count() == cl
        members = [v for v in range(n) if witness >> v & 1]
        for a in members:
            for b in members:
                if a != b:
                    assert adj[a] >> b & 1
        ch = aggraph.chromatic_number(adj, n)
        assert ch == brute_chromatic_number(adj, n)
        assert ch >= cl


def test_girth_matches_edge_removal_oracle():
    rng = random.Random(77)
    for _ in range(80):
        n = rng.randint(0, 8)
        adj = _random_graph(rng, n, 0.45)
        verts = tuple(None for _ in range(n))
        g = aggraph.AnnGraph(None, "AG", verts, tuple(adj))
        assert aggraph._girth(g) == brute_girth(adj, n)


def test_chromatic_at_least_clique_on_corpus(corpus_analyses):
    for a in corpus_analyses[:80]:
        inv = a.inv
        assert inv.chromatic_number >= inv.clique_number
        if inv.bipartite:
            assert inv.girth is None or inv.girth % 2 == 0


def test_bipartite_matches_bipartition_enumeration():
    # bipartite iff some 2-part split has no internal edges
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(0, 9)
        adj = _random_graph(rng, n, 0.4)
        g = aggraph.AnnGraph(None, "AG", tuple(None for _ in range(n)), tuple(adj))
        brute = any(
            all(
                (split >> i & 1) != (split >> j & 1)
                for i in range(n)
                for j in range(i + 1, n)
                if adj[i] >> j & 1
            )
            for split in range(1 << n)
        ) or n == 0
        assert aggraph._is_bipartite(g) == brute


def test_to_dot_z6():
    assert to_dot(build_AG(zmod(6))) == (
        "graph AG {\n"
        '  v0 [label="⟨2⟩"];\n'
        '  v1 [label="⟨3⟩"];\n'
        "  v0 -- v1;\n"
        "}\n"
    )


def test_to_dot_empty_and_deterministic():
    assert to_dot(build_AG(zmod(5))) == "graph AG {\n}\n"
    m = zmod(12)
    text = to_dot(build_AG(m))
    assert text == to_dot(build_AG(zmod(12)))
    assert text.count("--") == 3 and text.count("label=") == 4
