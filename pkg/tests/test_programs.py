import random

import pytest

from omforge.core import om_from_points
from omforge.corpus import cyclic_om, random_points, w3
from omforge.faces import mutations
from omforge.programs import (
    ElementNotInSeparator,
    NonComodularPair,
    Program,
    all_programs_euclidean,
    analyze_cycle,
    cocircuit_graph,
    edge_direction,
    eliminate,
    find_chords,
    is_euclidean,
    is_totally_non_euclidean,
    program_verdicts,
    reduce_cycle_chordless,
    valid_programs,
    verify_witness,
    very_strong_components,
)
from omforge.signs import SignVector

sv = SignVector.from_string


# -- elimination ---------------------------------------------------------------

def test_eliminate_w3():
    z = eliminate(w3(), sv("-0+"), sv("++0"), 0)
    assert z == sv("0++")


def test_eliminate_antipodal_rejected():
    x = sv("+0-")
    with pytest.raises(NonComodularPair):
        eliminate(w3(), x, -x, 0)


def test_eliminate_needs_separator():
    with pytest.raises(ElementNotInSeparator):
        eliminate(w3(), sv("+0-"), sv("++0"), 1)


def test_eliminate_unique_on_comodular_pairs():
    om = cyclic_om(4, 7)
    coc = om.sorted_cocircuits()
    checked = 0
    for i in range(len(coc)):
        for j in range(i + 1, len(coc)):
            x, y = coc[i], coc[j]
            sep = x.separation(y)
            if not sep:
                continue
            u = x.zero_mask & y.zero_mask
            if om.subset_rank(u) != om.rank - 2:
                continue
            e = min(sep)
            z = eliminate(om, x, y, e)
            assert z[e] == 0
            assert (z.zero_mask & u) == u
            checked += 1
            if checked > 200:
                return


# -- edge direction --------------------------------------------------------------

def test_w3_edge_direction():
    p = Program(w3(), 0, 1)
    assert edge_direction(p, sv("+0-"), sv("++0")) == 1
    assert edge_direction(p, sv("++0"), sv("+0-")) == -1


def test_w3_graph():
    p = Program(w3(), 0, 1)
    g = cocircuit_graph(p)
    assert len(g.vertices) == 2
    assert len(g.edges) == 1
    assert g.directions == (1,)


def test_uniform_vertex_count():
    # vertices are the cocircuits with g = +: of 112 total, 2*C(7,2)
    # vanish at g; half the rest are positive there
    p = Program(cyclic_om(4, 8), 0, 1)
    g = cocircuit_graph(p)
    assert len(g.vertices) == (112 - 2 * 21) // 2 == 35


def test_gf_plus_nonempty():
    rng = random.Random(41)
    om = om_from_points(random_points(rng, 3, 6))
    for g, f in valid_programs(om)[:10]:
        graph = cocircuit_graph(Program(om, g, f))
        assert graph.gf_plus() or graph.gf_minus()


def test_program_validity():
    with pytest.raises(ValueError):
        Program(w3(), 0, 0)
    with pytest.raises(ValueError):
        Program(w3(), 0, 9)
    # a coloop target is rejected
    om = w3().direct_sum(om_from_points([[1]]))
    with pytest.raises(ValueError):
        Program(om, 0, 3)


# -- Euclideaness ----------------------------------------------------------------

def test_realizable_programs_euclidean():
    rng = random.Random(42)
    for _ in range(5):
        om = om_from_points(random_points(rng, rng.choice((3, 4)), 7, uniform=False))
        assert all_programs_euclidean(om)


def test_rank3_always_euclidean():
    om = cyclic_om(3, 6)
    assert all_programs_euclidean(om)


def test_euclidean_components_singletons():
    p = Program(cyclic_om(4, 8), 0, 1)
    comps = very_strong_components(p)
    assert all(isolated for _, isolated in comps)


def test_totally_non_euclidean_false_on_realizable(non_euclidean_om):
    assert not is_totally_non_euclidean(cyclic_om(4, 8))
    assert not is_totally_non_euclidean(non_euclidean_om)


def test_non_euclidean_witness(non_euclidean_om):
    om = non_euclidean_om
    verdicts = program_verdicts(om)
    bad = [(g, f) for (g, f), ok in verdicts.items() if not ok]
    assert bad
    g, f = bad[0]
    p = Program(om, g, f)
    verdict = is_euclidean(p)
    assert not verdict.euclidean
    w = verdict.witness
    assert len(w.vertices) >= 3
    assert verify_witness(p, w)
    comps = very_strong_components(p)
    big = [vs for vs, isolated in comps if not isolated]
    assert big and all(len(vs) >= 3 for vs in big)


def test_exchange_cross_check(non_euclidean_om):
    # verdict of (om,g,f) vs (om,f,g): logged as a cross-check
    om = non_euclidean_om
    verdicts = program_verdicts(om)
    for (g, f), ok in verdicts.items():
        assert verdicts[(f, g)] == ok


def test_chordless_reduction(non_euclidean_om):
    om = non_euclidean_om
    verdicts = program_verdicts(om)
    g, f = next((gf for gf, ok in verdicts.items() if not ok))
    p = Program(om, g, f)
    w = is_euclidean(p).witness
    reduced = reduce_cycle_chordless(p, w)
    assert verify_witness(p, reduced)
    directed, undirected = find_chords(p, reduced)
    assert not directed
    assert not undirected
    # chordless input is a fixed point
    again = reduce_cycle_chordless(p, reduced)
    assert again.vertices == reduced.vertices


def test_cycle_report(non_euclidean_om):
    om = non_euclidean_om
    verdicts = program_verdicts(om)
    g, f = next(gf for gf, ok in verdicts.items() if not ok)
    p = Program(om, g, f)
    w = is_euclidean(p).witness
    rep = analyze_cycle(p, w)
    # a strictly directed cycle has constant g = + and f nonzero
    assert rep.per_element[g].values == (1,)
    assert 0 not in rep.per_element[f].values
    assert not rep.edges_on_single_simplicial_tope
    assert not rep.any_confining_tope_fully_used


def test_mutation_cocircuits_avoid_cycles(non_euclidean_om):
    # mutations meeting {f,g} keep their cocircuits out of directed cycles
    om = non_euclidean_om
    verdicts = program_verdicts(om)
    g, f = next(gf for gf, ok in verdicts.items() if not ok)
    p = Program(om, g, f)
    cycle_vertices = set()
    for vs, isolated in very_strong_components(p):
        if not isolated:
            cycle_vertices.update(vs)
    for cert in mutations(om):
        if g in cert.basis or f in cert.basis:
            for x in cert.cocircuit_vectors():
                assert x not in cycle_vertices and -x not in cycle_vertices


def test_euclidean_verdicts_empty_report():
    p = Program(cyclic_om(3, 6), 0, 1)
    verdict = is_euclidean(p)
    assert verdict.euclidean and verdict.witness is None
