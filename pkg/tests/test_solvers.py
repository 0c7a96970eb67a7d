import random
from itertools import combinations

import pytest

from tridom.domination import (
    METHOD_BFS_TREE,
    METHOD_CONTRACTION,
    METHOD_DELTA,
    METHOD_SUBSET,
    all_minimum_cds,
    bfs_tree_cds,
    classify,
    contract_edge,
    contraction_search,
    exact_gamma,
    exact_gamma_c,
    gamma_c_by_contraction,
)
from tridom.graphs import (
    Graph,
    bits,
    degree_stats,
    induces_connected,
    is_dominating,
    vset,
)
from tridom.planar import underlying_graph
from tridom.families import icosa_chain, icosahedron, octahedron

from helpers import (
    brute_gamma,
    brute_gamma_c,
    brute_minimum_dominating_sets,
    random_connected_graph,
)


def test_exact_gamma_examples():
    assert exact_gamma(Graph.complete(4)).value == 1
    ico = underlying_graph(icosahedron())
    cert = exact_gamma(ico)
    assert cert.value == 2
    assert cert.method == METHOD_SUBSET
    assert is_dominating(ico, cert.witness)
    assert exact_gamma(underlying_graph(icosa_chain(2))).value == 3


def test_exact_gamma_matches_brute_force_and_lex_least():
    rng = random.Random(19)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 8), 0.35)
        cert = exact_gamma(g)
        assert cert.value == brute_gamma(g)
        minima = brute_minimum_dominating_sets(g, cert.value)
        lex_least = min(minima, key=lambda m: tuple(bits(m)))
        assert cert.witness == lex_least


def test_exact_gamma_rejects_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        exact_gamma(g)
    with pytest.raises(ValueError):
        exact_gamma_c(g)


def test_exact_gamma_c_examples():
    p5 = Graph.path(5)
    cert = exact_gamma_c(p5)
    assert cert.value == 3
    assert cert.witness == vset([1, 2, 3])
    assert exact_gamma_c(underlying_graph(icosahedron())).value == 4
    with pytest.raises(ValueError):
        exact_gamma_c(Graph(1, [0]))


def test_exact_gamma_c_matches_brute_force():
    rng = random.Random(23)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 8), 0.35)
        cert = exact_gamma_c(g)
        assert cert.value == brute_gamma_c(g)
        assert is_dominating(g, cert.witness)
        assert induces_connected(g, cert.witness)
        assert cert.witness.bit_count() == cert.value


def test_gamma_le_gamma_c_everywhere():
    rng = random.Random(29)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 9), 0.3)
        assert exact_gamma(g).value <= exact_gamma_c(g).value


def test_all_minimum_cds():
    k4 = Graph.complete(4)
    assert all_minimum_cds(k4) == [vset([v]) for v in range(4)]
    star = Graph.star(5)
    assert all_minimum_cds(star) == [vset([0])]
    oc = underlying_graph(octahedron())
    minima = all_minimum_cds(oc)
    # brute force: of the 15 pairs, exactly the 12 adjacent ones work
    expected = []
    for pair in combinations(range(6), 2):
        s = vset(pair)
        if is_dominating(oc, s) and induces_connected(oc, s):
            expected.append(s)
    assert len(minima) == len(expected) == 12
    assert sorted(minima, key=lambda m: tuple(bits(m))) == minima
    assert set(minima) == set(expected)


def test_all_minimum_cds_complete_against_powerset(levels_to_9):
    rng = random.Random(31)
    sample = [levels_to_9[8][i] for i in (0, 5, 13)] + [levels_to_9[9][7]]
    for t in sample:
        g = underlying_graph(t)
        value = exact_gamma_c(g).value
        brute = [vset(c) for c in combinations(range(g.n), value)
                 if is_dominating(g, vset(c)) and induces_connected(g, vset(c))]
        assert set(all_minimum_cds(g)) == set(brute)


def test_bfs_tree_cds_examples():
    w8 = Graph.wheel(8)
    cert = bfs_tree_cds(w8)
    assert cert.value == 1 and cert.witness == vset([7])  # hub only
    assert cert.method == METHOD_BFS_TREE
    oc = underlying_graph(octahedron())
    assert bfs_tree_cds(oc).value <= 2
    ico = underlying_graph(icosahedron())
    assert bfs_tree_cds(ico).value <= 7  # n - Delta = 12 - 5


def test_bfs_tree_cds_is_always_a_cds_within_bound():
    rng = random.Random(37)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 10), 0.3)
        cert = bfs_tree_cds(g)
        _, dmax, _ = degree_stats(g)
        assert cert.value <= g.n - dmax
        assert is_dominating(g, cert.witness)
        assert induces_connected(g, cert.witness)


def test_contract_edge_examples():
    k4 = Graph.complete(4)
    assert contract_edge(k4, (0, 1)) == Graph.complete(3)
    oc = underlying_graph(octahedron())
    for e in oc.edges():
        minor = contract_edge(oc, e)
        assert minor.n == 5
        assert minor.degree(min(e)) == 4  # merged vertex is universal
    p3 = Graph.path(3)
    assert contract_edge(p3, (0, 1)) == Graph.path(2)
    with pytest.raises(ValueError):
        contract_edge(oc, (0, 5))  # antipodes: not an edge


def test_contract_edge_relabeling_convention():
    # path 0-1-2-3, contract (1, 3): illegal (not an edge); contract (2, 3):
    # merged vertex keeps label 2, nothing above shifts
    p4 = Graph.path(4)
    m = contract_edge(p4, (2, 3))
    assert m == Graph.path(3)
    # contract (0, 1) of the 4-cycle: vertices 2,3 shift down to 1,2
    c4 = Graph.cycle(4)
    m = contract_edge(c4, (0, 1))
    assert m == Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_contract_edge_keeps_graph_simple():
    rng = random.Random(41)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 10), 0.4)
        e = g.edges()[rng.randrange(g.edge_count())]
        contract_edge(g, e).check()


def test_contraction_search_examples():
    w8 = Graph.wheel(8)
    w = contraction_search(w8, 0)
    assert w is not None and w.edges == () and w.universal_degree == 7
    oc = underlying_graph(octahedron())
    assert contraction_search(oc, 0) is None
    w = contraction_search(oc, 1)
    assert w is not None and w.edges == ((0, 1),)  # lexicographically least edge
    assert w.universal_degree == 4
    p5 = Graph.path(5)
    assert contraction_search(p5, 1) is None  # no single contraction helps on P5
    assert contraction_search(p5, 10) is None  # k larger than any tree


def test_contraction_search_returns_lex_least_witness():
    """Brute-force all connected acyclic k-edge sets and compare minima."""
    from itertools import combinations
    from tridom.domination import _minor_has_universal_merge
    rng = random.Random(53)
    cases = [underlying_graph(octahedron())]
    cases += [random_connected_graph(rng, rng.randint(5, 8), 0.45) for _ in range(8)]
    for g in cases:
        k = gamma_c_by_contraction(g).value - 1
        if k < 1:
            continue
        edge_list = g.edges()
        successes = []
        for combo in combinations(edge_list, k):
            span = 0
            for u, v in combo:
                span |= (1 << u) | (1 << v)
            if span.bit_count() != k + 1:  # not a tree
                continue
            sub = Graph.from_edges(g.n, combo)
            seen = span & -span
            frontier = seen
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    nxt |= sub.adj[x]
                frontier = nxt & span & ~seen
                seen |= frontier
            if seen != span:  # not connected
                continue
            if _minor_has_universal_merge(g, combo):
                successes.append(combo)
        want = min(successes)
        got = contraction_search(g, k)
        assert got is not None and got.edges == want


def test_gamma_c_by_contraction_examples():
    assert gamma_c_by_contraction(Graph.complete(4)).value == 1
    oc = underlying_graph(octahedron())
    cert = gamma_c_by_contraction(oc)
    assert cert.value == 2 and cert.method == METHOD_CONTRACTION
    assert is_dominating(oc, cert.witness) and induces_connected(oc, cert.witness)
    ico = underlying_graph(icosahedron())
    cert = gamma_c_by_contraction(ico)
    assert cert.value == 4  # found at k = 3
    assert cert.witness.bit_count() == 4
    assert is_dominating(ico, cert.witness) and induces_connected(ico, cert.witness)


def test_contraction_agrees_with_subset_search_small(levels_to_9):
    for n in (5, 6, 7, 8):
        for t in levels_to_9[n]:
            g = underlying_graph(t)
            assert gamma_c_by_contraction(g).value == exact_gamma_c(g).value


def test_contraction_agrees_on_random_graphs():
    rng = random.Random(43)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(3, 10), 0.35)
        assert gamma_c_by_contraction(g).value == exact_gamma_c(g).value


def test_spanning_tree_of_minimum_cds_contracts_to_universal():
    """Contracting any spanning tree of a minimum connected dominating set
    merges it into a universal vertex: the forward direction behind the
    contraction method."""
    rng = random.Random(47)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(3, 9), 0.4)
        cert = exact_gamma_c(g)
        members = list(bits(cert.witness))
        k = len(members) - 1
        if k == 0:
            assert g.degree(members[0]) == g.n - 1
            continue
        # build a spanning tree of the induced subgraph by BFS
        inside = set(members)
        seen = {members[0]}
        queue = [members[0]]
        tree = []
        while queue:
            x = queue.pop(0)
            for y in bits(g.adj[x]):
                if y in inside and y not in seen:
                    seen.add(y)
                    tree.append((min(x, y), max(x, y)))
                    queue.append(y)
        assert len(tree) == k
        # contract the tree edge by edge, tracking labels
        labels = list(range(g.n))
        cur = g
        for x, y in tree:
            cx, cy = labels[x], labels[y]
            lo, hi = min(cx, cy), max(cx, cy)
            cur = contract_edge(cur, (lo, hi))
            labels = [lo if l == hi else (l - 1 if l > hi else l) for l in labels]
        merged = labels[members[0]]
        assert cur.degree(merged) == cur.n - 1
        # and the search finds a witness at the same depth
        assert contraction_search(g, k) is not None


def test_classify_shortcuts_and_agreement(levels_to_9):
    for t in levels_to_9[7]:
        g = underlying_graph(t)
        cert = classify(t)
        _, dmax, _ = degree_stats(g)
        if dmax == g.n - 1:
            assert cert.value == 1 and cert.method == METHOD_DELTA
        elif dmax == g.n - 2:
            assert cert.value == 2 and cert.method == METHOD_DELTA
        else:
            assert cert.method == METHOD_CONTRACTION
        assert cert.value == exact_gamma_c(g).value
        assert is_dominating(g, cert.witness)
        assert induces_connected(g, cert.witness)


def test_classify_octahedron_uses_shortcut():
    cert = classify(octahedron())
    assert cert.value == 2
    assert cert.method == METHOD_DELTA


def test_classify_unique_order9_value3(levels_to_9):
    values = [classify(t).value for t in levels_to_9[9]]
    assert values.count(3) == 1
    t9 = levels_to_9[9][values.index(3)]
    cert = classify(t9)
    assert cert.method == METHOD_CONTRACTION
    # found via two contractions: a connected pair of edges works, one does not
    g = underlying_graph(t9)
    assert contraction_search(g, 1) is None
    assert contraction_search(g, 2) is not None
