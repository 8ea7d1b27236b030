"""Property tests tying the executable pieces back to the structural
facts they must reproduce, at desk scale."""

import random

from omforge.core import om_from_points
from omforge.corpus import cyclic_om, random_points, w3
from omforge.faces import adjacent_cocircuits, mutations, topes
from omforge.programs import (
    Program,
    all_programs_euclidean,
    cocircuit_graph,
    is_euclidean,
    very_strong_components,
)
from omforge.signs import PLUS


def extremes_in_halfspace(graph, half, want_sources):
    """Vertices of the halfspace with no predecessor (sources) or no
    successor (sinks) inside it."""
    blocked = {i: False for i in half}
    half_set = set(half)
    for (i, j, _), d in zip(graph.edges, graph.directions):
        if i not in half_set or j not in half_set or d == 0:
            continue
        head, tail = (j, i) if d > 0 else (i, j)
        if want_sources:
            blocked[head] = True
        else:
            blocked[tail] = True
    return [i for i in half if not blocked[i]]


def test_source_cocircuits_yield_adjacent_simplicial_topes():
    # Euclidean program with g in general position: every source of the
    # f=+ subgraph sits on a simplicial tope whose other cocircuits all
    # have f = 0 and g = +
    instances = [
        (cyclic_om(4, 8), 0, 1),
        (cyclic_om(3, 6), 2, 4),
        (om_from_points(random_points(random.Random(71), 3, 6)), 0, 3),
    ]
    for om, g, fx in instances:
        p = Program(om, g, fx)
        assert is_euclidean(p).euclidean
        graph = cocircuit_graph(p)
        halves = [
            (h, src)
            for h, src in ((graph.gf_plus(), True), (graph.gf_minus(), False))
            if h
        ]
        assert halves  # at least one halfspace is populated
        for half, want_sources in halves:
            extremes = extremes_in_halfspace(graph, half, want_sources)
            assert extremes  # acyclic and finite: extremes exist
            for i in extremes:
                x = graph.vertices[i]
                found = False
                for t in topes(om):
                    if not x.leq(t):
                        continue
                    adj = adjacent_cocircuits(om, t)
                    if len(adj) != om.rank:
                        continue
                    others = adj - {x}
                    if all(y[fx] == 0 and y[g] == PLUS for y in others):
                        found = True
                        break
                assert found, f"extreme {x.to_string()} of (g={g},f={fx}) has no tope"


def test_nontrivial_component_vertices_lie_on_cycles(non_euclidean_om):
    om = non_euclidean_om
    from omforge.programs import program_verdicts

    verdicts = program_verdicts(om)
    g, fx = next(gf for gf, ok in verdicts.items() if not ok)
    p = Program(om, g, fx)
    graph = cocircuit_graph(p)
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj = graph.arcs()
    for vs, isolated in very_strong_components(p):
        if isolated:
            continue
        comp = {index[v] for v in vs}
        # each vertex reaches itself through the component
        for start in comp:
            frontier = {w for w in adj[start] if w in comp}
            seen = set(frontier)
            while frontier:
                if start in frontier:
                    break
                nxt = set()
                for v in frontier:
                    for w in adj[v]:
                        if w in comp and w not in seen:
                            seen.add(w)
                            nxt.add(w)
                frontier = nxt
            assert start in seen


def test_euclidean_rank3_every_element_three_mutations():
    rng = random.Random(72)
    for _ in range(3):
        om = om_from_points(random_points(rng, 3, 6))
        assert all_programs_euclidean(om)
        counts = [
            sum(1 for c in mutations(om) if e in c.basis) for e in range(om.n)
        ]
        assert min(counts) >= 3
        assert len(mutations(om)) >= om.n


def test_disconnected_mutation_bound():
    # simple disconnected realizable, no coloops: at least 3n-9 mutations
    s = w3().direct_sum(w3())
    assert len(mutations(s)) >= 3 * s.n - 9


def test_exchange_symmetry_on_corpus():
    rng = random.Random(73)
    for _ in range(3):
        om = om_from_points(random_points(rng, 3, 6))
        from omforge.programs import program_verdicts

        verdicts = program_verdicts(om)
        for (g, fx), ok in verdicts.items():
            assert verdicts[(fx, g)] == ok
