import pytest

from tridom.domination import all_minimum_cds, exact_gamma, exact_gamma_c
from tridom.families import (
    FamilySpec,
    expected_family_value,
    family,
    family_base,
    icosa_chain,
    icosahedron,
    new_triangle,
    octahedron,
    octahedron_sum,
    octahedron_sum_report,
)
from tridom.generate import K4
from tridom.graphs import vset
from tridom.planar import (
    canonical_code,
    faces,
    is_face,
    relabel,
    underlying_graph,
    verify_triangulation,
)



def test_octahedron_is_the_4_regular_6_vertex_triangulation():
    oc = octahedron()
    assert oc.n == 6
    assert verify_triangulation(oc).ok
    assert underlying_graph(oc).degrees() == [4] * 6


def test_octahedron_sum_structure():
    child = octahedron_sum(K4, faces(K4)[0])
    assert child.n == 7
    assert child.edge_count() == K4.edge_count() + 9
    assert verify_triangulation(child).ok
    assert is_face(child, new_triangle(K4))
    # iterate on the fresh triangle
    grand = octahedron_sum(child, new_triangle(K4))
    assert grand.n == 10
    assert verify_triangulation(grand).ok
    with pytest.raises(ValueError):
        octahedron_sum(K4, (0, 2, 1))


def test_octahedron_sum_gadget_is_an_octahedron():
    # the six gadget vertices a,b,c,e,f,g induce the 4-regular triangulation
    f = faces(K4)[0]
    child = octahedron_sum(K4, f)
    g = underlying_graph(child)
    gadget = vset(f) | vset([4, 5, 6])
    degrees_within = [(g.adj[v] & gadget).bit_count() for v in sorted(
        [f[0], f[1], f[2], 4, 5, 6])]
    assert degrees_within == [4] * 6


def test_family_bases(levels_to_9):
    tb, fb = family_base("B")
    gb = underlying_graph(tb)
    assert tb.n == 9 and tb.edge_count() == 21
    assert exact_gamma(gb).value == 2
    assert exact_gamma_c(gb).value == 3
    ta, fa = family_base("A")
    ga = underlying_graph(ta)
    assert ta.n == 9 and ta.edge_count() == 21
    assert exact_gamma_c(ga).value == 2
    fmask = vset(fa)
    assert all((s & fmask) == 0 for s in all_minimum_cds(ga))
    with pytest.raises(ValueError):
        family_base("C")


def test_family_b_base_is_unique_value3_graph(levels_to_9):
    with_3 = [t for t in levels_to_9[9]
              if exact_gamma_c(underlying_graph(t)).value == 3]
    assert len(with_3) == 1
    tb, _ = family_base("B")
    assert canonical_code(tb) == canonical_code(with_3[0])


def test_sum_report_family_a_base_predicts_plus_two():
    ta, fa = family_base("A")
    rep = octahedron_sum_report(ta, fa)
    assert rep.base_value == 2
    assert rep.face_hits == 0
    assert rep.predicted_increment == 2
    assert rep.summed_value == 4
    assert rep.consistent is True


def test_sum_report_family_a_second_stage_predicts_plus_one():
    ta, fa = family_base("A")
    t12 = octahedron_sum(ta, fa)
    rep = octahedron_sum_report(t12, new_triangle(ta))
    assert rep.base_value == 4
    assert rep.face_hits == 1
    assert rep.predicted_increment == 1
    assert rep.summed_value == 5
    assert rep.consistent is True


def test_sum_report_family_b_base_increment_zero():
    tb, fb = family_base("B")
    rep = octahedron_sum_report(tb, fb)
    assert rep.base_value == 3
    assert rep.summed_value == 3
    assert rep.observed_increment == 0
    assert rep.face_hits >= 2       # outside the predictable cases
    assert rep.predicted_increment is None
    assert rep.consistent is None


def test_sum_reports_consistent_along_construction_paths():
    """Wherever a construction-path face meets the minimum sets 0 or 1
    times, the observed increment must equal the predicted one."""
    for which in ("A", "B"):
        t, site = family_base(which)
        while t.n <= 15:
            rep = octahedron_sum_report(t, site)
            if rep.predicted_increment is not None:
                assert rep.consistent is True, (which, t.n, rep)
            prev = t
            t = octahedron_sum(t, site)
            site = new_triangle(prev)


def test_family_values_quick():
    a4 = family("A", 4)
    assert a4.n == 12
    assert exact_gamma_c(underlying_graph(a4)).value == 4
    b4 = family("B", 4)
    assert b4.n == 12
    assert exact_gamma_c(underlying_graph(b4)).value == 3
    with pytest.raises(ValueError):
        family("A", 2)


def test_family_orders_scale_with_k():
    for which, k in (("A", 6), ("B", 5)):
        t = family(which, k)
        assert t.n == 3 * k
        assert verify_triangulation(t).ok


def test_expected_family_values():
    assert [expected_family_value("A", k) for k in range(3, 8)] == [2, 4, 5, 6, 7]
    assert [expected_family_value("B", k) for k in range(3, 7)] == [3, 3, 5, 6]


def test_icosahedron_stats():
    ico = icosahedron()
    assert ico.n == 12
    assert ico.edge_count() == 30
    assert len(faces(ico)) == 20
    g = underlying_graph(ico)
    assert exact_gamma(g).value == 2
    assert exact_gamma_c(g).value == 4


def test_icosahedron_code_same_from_every_face():
    """Re-rooting the designated outer face anywhere leaves the canonical
    code unchanged (the graph is face-transitive)."""
    ico = icosahedron()
    base = canonical_code(ico)
    for f in faces(ico):
        perm = [None] * 12
        perm[f[0]], perm[f[1]], perm[f[2]] = 0, 1, 2
        nxt = 3
        for v in range(12):
            if perm[v] is None:
                perm[v] = nxt
                nxt += 1
        assert canonical_code(relabel(ico, perm)) == base


def test_icosa_chain_structure():
    t2 = icosa_chain(2)
    assert t2.n == 22
    assert verify_triangulation(t2).ok
    t3 = icosa_chain(3)
    assert t3.n == 32
    assert verify_triangulation(t3).ok
    t4 = icosa_chain(4)
    assert t4.n == 42
    assert verify_triangulation(t4).ok
    with pytest.raises(ValueError):
        icosa_chain(1)


def test_icosa_chain_2_values():
    g = underlying_graph(icosa_chain(2))
    assert exact_gamma(g).value == 3
    assert exact_gamma_c(g).value == 6


def test_icosa_chain_dominating_witness_structure():
    """The least minimum dominating set is the shared vertex plus one
    interior vertex per icosahedron copy."""
    from tridom.graphs import bits
    for k in (2, 3):
        g = underlying_graph(icosa_chain(k))
        cert = exact_gamma(g)
        assert cert.value == k + 1
        members = set(bits(cert.witness))
        assert 0 in members  # the vertex every copy shares
        interiors = [set(range(3, 12))]
        interiors += [set(range(12 + (i - 2) * 10 + 1, 12 + (i - 2) * 10 + 10))
                      for i in range(2, k + 1)]
        rest = members - {0}
        assert len(rest) == k
        for zone in interiors:
            assert len(rest & zone) == 1


def test_family_spec_validation():
    assert FamilySpec("A", 3).build().n == 9
    assert FamilySpec("chain", 2).build().n == 22
    with pytest.raises(ValueError):
        FamilySpec("A", 2)
    with pytest.raises(ValueError):
        FamilySpec("chain", 1)
    with pytest.raises(ValueError):
        FamilySpec("D", 3)
