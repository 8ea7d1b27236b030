#!/usr/bin/env python3
"""Oriented-matroid programs and the directed cocircuit graph.

A program (om, g, f) lives on the cocircuits with g = +; neighbouring
cocircuits are joined by edges, and the f-sign of the elimination at g
directs them. No directed cycle = Euclidean. Realizable instances are
always Euclidean; the smallest non-Euclidean uniform examples have
rank 4 and 8 elements.
"""

import omforge as f

w3 = f.om_from_points([[1, 1], [1, 2], [1, 3]])
p = f.Program(w3, 0, 1)
graph = f.cocircuit_graph(p)
print("W3 program (g=0, f=1):", len(graph.vertices), "vertices,",
      len(graph.edges), "edge(s), direction", graph.directions)
print("Euclidean:", f.is_euclidean(p).euclidean)

# every program of a realizable oriented matroid is Euclidean
c48 = f.om_from_points([[t**k for k in range(4)] for t in range(1, 9)])
print("cyclic C(4,8) all 56 programs Euclidean:",
      f.all_programs_euclidean(c48))

# a non-Euclidean uniform rank-4 class, found by flip search
chi = f.Chirotope.from_string(
    4, 8,
    "---+++++++++++-+++++++++++++++++++++++++++++++++++++++++++++++++-+++--",
)
bad = f.cocircuits_from_chirotope(chi)
verdicts = f.program_verdicts(bad)
cyclic_programs = [(g, fx) for (g, fx), ok in verdicts.items() if not ok]
print("\nnon-Euclidean instance:", len(cyclic_programs), "of",
      len(verdicts), "programs have directed cycles:", cyclic_programs)

g, fx = cyclic_programs[0]
p = f.Program(bad, g, fx)
verdict = f.is_euclidean(p)
w = verdict.witness
print(f"witness cycle for (g={g}, f={fx}), length {len(w.vertices)}:")
for v in w.vertices:
    print("  ", v.to_string())

reduced = f.reduce_cycle_chordless(p, w)
print("chordless reduction keeps it a directed cycle:",
      f.verify_witness(p, reduced), "| length", len(reduced.vertices))

report = f.analyze_cycle(p, reduced)
print("cycle confined to a single simplicial tope:",
      report.edges_on_single_simplicial_tope)
comps = [vs for vs, isolated in f.very_strong_components(p) if not isolated]
print("very strong components of size >= 3:", [len(vs) for vs in comps])

print("\ntotally non-Euclidean (no Euclidean program at all):",
      f.is_totally_non_euclidean(bad))
