"""Oriented-matroid programs and their directed cocircuit graphs.

A program (om, g, f) has vertices the cocircuits with g = +, edges the
conformal comodular pairs, and each edge carries the elimination at g;
its f-sign directs the edge.  A program is Euclidean iff the strictly
directed graph is acyclic.  Directed cycles traverse only strictly
directed edges; direction-0 edges are never traversable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import OrientedMatroid
from .faces import adjacent_cocircuits, topes
from .signs import PLUS, SignVector


class EliminationError(ValueError):
    pass


class ElementNotInSeparator(EliminationError):
    pass


class NonComodularPair(EliminationError):
    pass


def comodular(om: OrientedMatroid, x: SignVector, y: SignVector) -> bool:
    """Zero sets meet in a flat of rank exactly rank-2."""
    u = x.zero_mask & y.zero_mask
    if om.is_uniform():
        return bin(u).count("1") == om.rank - 2
    return om.subset_rank(u) == om.rank - 2


def eliminate(om: OrientedMatroid, x: SignVector, y: SignVector, e: int) -> SignVector:
    """Unique cocircuit Z with Z_e = 0 vanishing on z(X) n z(Y) and
    conforming to X o Y away from the separator."""
    sep = x.sep_mask(y)
    ebit = 1 << e
    if not sep & ebit:
        raise ElementNotInSeparator(f"element {e} does not separate the pair")
    u = x.zero_mask & y.zero_mask
    if om.subset_rank(u) != om.rank - 2:
        raise NonComodularPair("pair is not comodular; elimination is not unique")
    z = om.cocircuit_with_zero(om.closure_mask(u | ebit))
    if z is None:
        raise EliminationError("no cocircuit on the eliminated flat")
    comp = x.compose(y)
    ok_pos = ((z.pm & comp.mm) | (z.mm & comp.pm)) & ~sep == 0
    ok_neg = ((z.mm & comp.mm) | (z.pm & comp.pm)) & ~sep == 0
    if ok_pos and ok_neg:
        raise EliminationError("ambiguous elimination sign")
    if ok_pos:
        return z
    if ok_neg:
        return -z
    raise EliminationError("no conforming elimination sign (axiom violation?)")


@dataclass(frozen=True)
class Program:
    """An oriented-matroid program (om, g, f): g at infinity, f the target."""

    om: OrientedMatroid
    g: int
    f: int

    def __post_init__(self):
        n = self.om.n
        if not (0 <= self.g < n and 0 <= self.f < n):
            raise ValueError("g or f out of range")
        if self.g == self.f:
            raise ValueError("g and f must differ")
        if self.g in self.om.loops():
            raise ValueError(f"g={self.g} is a loop")
        if self.f in self.om.coloops():
            raise ValueError(f"f={self.f} is a coloop")


def _edges_for_g(om: OrientedMatroid, g: int):
    """Vertices (cocircuits with g=+) and edges with their eliminations.

    Cached per (om, g); directions for any target f read off the stored
    elimination cocircuits.
    """
    cached = om._graph_cache.get(g)
    if cached is not None:
        return cached
    verts = tuple(x for x in om.sorted_cocircuits() if x[g] == PLUS)
    uniform = om.is_uniform()
    want = om.rank - 2
    edges = []
    for i, x in enumerate(verts):
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if x.sep_mask(y):
                continue
            u = x.zero_mask & y.zero_mask
            if uniform:
                if bin(u).count("1") != want:
                    continue
            elif om.subset_rank(u) != want:
                continue
            z = eliminate(om, -x, y, g)
            edges.append((i, j, z))
    cached = (verts, tuple(edges))
    om._graph_cache[g] = cached
    return cached


@dataclass(frozen=True)
class CocircuitGraph:
    g: int
    f: int
    vertices: tuple[SignVector, ...]
    edges: tuple[tuple[int, int, SignVector], ...]
    directions: tuple[int, ...]  # sign of Z_f per edge; + directs i -> j

    def gf_plus(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.vertices) if v[self.f] > 0)

    def gf_minus(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.vertices) if v[self.f] < 0)

    def arcs(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.vertices]
        for (i, j, _), d in zip(self.edges, self.directions):
            if d > 0:
                out[i].append(j)
            elif d < 0:
                out[j].append(i)
        return out


def cocircuit_graph(p: Program) -> CocircuitGraph:
    verts, edges = _edges_for_g(p.om, p.g)
    dirs = tuple(z[p.f] for _, _, z in edges)
    return CocircuitGraph(p.g, p.f, verts, edges, dirs)


def edge_direction(p: Program, x: SignVector, y: SignVector) -> int:
    """Sign of the f-coordinate of El(-X, Y, g); + directs X -> Y."""
    if x[p.g] != PLUS or y[p.g] != PLUS:
        raise ValueError("both cocircuits must lie in the g=+ hemisphere")
    if x.sep_mask(y) or not comodular(p.om, x, y):
        raise ValueError("pair is not an edge of the cocircuit graph")
    return eliminate(p.om, -x, y, p.g)[p.f]


def _tarjan_scc(adj: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; components in deterministic order."""
    n = len(adj)
    index = [0] * n
    low = [0] * n
    on_stack = [False] * n
    visited = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 1
    for root in range(n):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                visited[v] = True
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if not visited[w]:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


@dataclass(frozen=True)
class DirectedCycleWitness:
    """A strictly directed cycle: vertices in order, plus the edge
    eliminations Z_i (Z_i at g = 0) directing vertex i to vertex i+1."""

    vertices: tuple[SignVector, ...]
    directions: tuple[SignVector, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_string() for v in self.vertices],
            "edge_cocircuits": [z.to_string() for z in self.directions],
        }


@dataclass(frozen=True)
class EuclideanVerdict:
    euclidean: bool
    witness: Optional[DirectedCycleWitness] = None

    def __bool__(self) -> bool:
        return self.euclidean


def _shortest_cycle(adj: list[list[int]], comp: list[int]) -> list[int]:
    """Shortest directed cycle within one strongly connected component."""
    inside = set(comp)
    best: Optional[list[int]] = None
    for start in comp:
        prev = {start: -1}
        frontier = [start]
        found = None
        while frontier and found is None:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w == start:
                        found = v
                        break
                    if w in inside and w not in prev:
                        prev[w] = v
                        nxt.append(w)
                if found is not None:
                    break
            frontier = nxt
        if found is not None:
            path = [found]
            while path[-1] != start:
                path.append(prev[path[-1]])
            path.reverse()
            if best is None or len(path) < len(best):
                best = path
    if best is None:
        raise RuntimeError("no cycle in a nontrivial component")
    return best


def is_euclidean(p: Program) -> EuclideanVerdict:
    """Acyclicity of the strictly directed cocircuit graph, with a
    directed-cycle witness extracted from a nontrivial component."""
    graph = cocircuit_graph(p)
    adj = graph.arcs()
    comps = _tarjan_scc(adj)
    nontrivial = [c for c in comps if len(c) > 1]
    if not nontrivial:
        return EuclideanVerdict(True)
    cycle = _shortest_cycle(adj, nontrivial[0])
    verts = tuple(graph.vertices[i] for i in cycle)
    dirs = []
    for t in range(len(verts)):
        x, y = verts[t], verts[(t + 1) % len(verts)]
        dirs.append(eliminate(p.om, -x, y, p.g))
    return EuclideanVerdict(False, DirectedCycleWitness(verts, tuple(dirs)))


def very_strong_components(p: Program) -> list[tuple[tuple[SignVector, ...], bool]]:
    """SCC partition of the strictly directed graph; singletons flagged isolated."""
    graph = cocircuit_graph(p)
    comps = _tarjan_scc(graph.arcs())
    out = []
    for comp in sorted(comps):
        vs = tuple(graph.vertices[i] for i in comp)
        out.append((vs, len(comp) == 1))
    return out


def valid_programs(om: OrientedMatroid) -> list[tuple[int, int]]:
    loops = om.loops()
    coloops = om.coloops()
    return [
        (g, f)
        for g in range(om.n)
        if g not in loops
        for f in range(om.n)
        if f != g and f not in coloops
    ]


def program_verdicts(om: OrientedMatroid) -> dict[tuple[int, int], bool]:
    return {
        (g, f): is_euclidean(Program(om, g, f)).euclidean
        for g, f in valid_programs(om)
    }


def all_programs_euclidean(om: OrientedMatroid) -> bool:
    return all(
        is_euclidean(Program(om, g, f)).euclidean for g, f in valid_programs(om)
    )


def has_euclidean_program(om: OrientedMatroid) -> bool:
    return any(
        is_euclidean(Program(om, g, f)).euclidean for g, f in valid_programs(om)
    )


def is_totally_non_euclidean(om: OrientedMatroid) -> bool:
    """No valid program of the oriented matroid is Euclidean."""
    return not has_euclidean_program(om)


def verify_witness(p: Program, w: DirectedCycleWitness) -> bool:
    """Re-run the edge checks: every consecutive pair is a strictly
    forward-directed edge whose elimination matches."""
    k = len(w.vertices)
    if k < 3:
        return False
    for t in range(k):
        x, y = w.vertices[t], w.vertices[(t + 1) % k]
        if x[p.g] != PLUS or y[p.g] != PLUS:
            return False
        if x.sep_mask(y) or not comodular(p.om, x, y):
            return False
        z = eliminate(p.om, -x, y, p.g)
        if z != w.directions[t] or z[p.f] != PLUS:
            return False
    return True


def find_chords(
    p: Program, w: DirectedCycleWitness
) -> tuple[list[tuple[int, int, int]], list[tuple[int, int]]]:
    """Chords of the cycle: (i, j, direction-sign) for directed ones and
    (i, j) for direction-0 ones."""
    k = len(w.vertices)
    directed = []
    undirected = []
    for i in range(k):
        for j in range(k):
            if j in (i, (i + 1) % k):
                continue
            if (j + 1) % k == i:
                continue
            if j < i:
                continue
            x, y = w.vertices[i], w.vertices[j]
            if x.sep_mask(y) or not comodular(p.om, x, y):
                continue
            d = eliminate(p.om, -x, y, p.g)[p.f]
            if d == 0:
                undirected.append((i, j))
            else:
                directed.append((i, j, d))
    return directed, undirected


def reduce_cycle_chordless(p: Program, w: DirectedCycleWitness) -> DirectedCycleWitness:
    """Shortcut forward chords and cut at backward chords until no
    strictly directed chord remains.  The output is again a directed
    cycle; direction-0 chords are untraversable and left in place."""
    verts = list(w.vertices)
    while True:
        k = len(verts)
        reduced = False
        for i in range(k):
            for j in range(k):
                if j in (i, (i + 1) % k) or (j + 1) % k == i:
                    continue
                x, y = verts[i], verts[j]
                if x.sep_mask(y) or not comodular(p.om, x, y):
                    continue
                d = eliminate(p.om, -x, y, p.g)[p.f]
                if d > 0:
                    # go directly from i to j
                    keep = []
                    t = j
                    while t != i:
                        keep.append(verts[t])
                        t = (t + 1) % k
                    keep.append(verts[i])
                    verts = keep
                    reduced = True
                elif d < 0:
                    # segment i..j plus the chord back
                    keep = []
                    t = i
                    while t != j:
                        keep.append(verts[t])
                        t = (t + 1) % k
                    keep.append(verts[j])
                    verts = keep
                    reduced = True
                if reduced:
                    break
            if reduced:
                break
        if not reduced:
            break
    dirs = []
    for t in range(len(verts)):
        x, y = verts[t], verts[(t + 1) % len(verts)]
        dirs.append(eliminate(p.om, -x, y, p.g))
    return DirectedCycleWitness(tuple(verts), tuple(dirs))


@dataclass(frozen=True)
class CycleElementReport:
    values: tuple[int, ...]
    all_zero: bool
    constant_nonzero: bool
    half_open: bool
    on_edge_zero: bool
    both_signs_present: bool


@dataclass(frozen=True)
class CycleReport:
    per_element: dict
    edges_on_single_simplicial_tope: bool
    confining_topes: tuple[SignVector, ...]
    any_confining_tope_fully_used: bool

    def to_json(self) -> dict:
        return {
            "per_element": {
                str(e): vars(rep) for e, rep in sorted(self.per_element.items())
            },
            "edges_on_single_simplicial_tope": self.edges_on_single_simplicial_tope,
            "confining_topes": [t.to_string() for t in self.confining_topes],
            "any_confining_tope_fully_used": self.any_confining_tope_fully_used,
        }


def analyze_cycle(p: Program, w: DirectedCycleWitness) -> CycleReport:
    """Raw per-element sign structure of a directed cycle, plus the
    simplicial-tope confinement checks."""
    om = p.om
    verts = w.vertices
    k = len(verts)
    edge_zero_masks = [
        verts[t].compose(verts[(t + 1) % k]).zero_mask for t in range(k)
    ]
    per = {}
    for e in range(om.n):
        ebit = 1 << e
        vals = {v[e] for v in verts}
        on_edge = any(zm & ebit for zm in edge_zero_masks)
        per[e] = CycleElementReport(
            values=tuple(sorted(vals)),
            all_zero=vals == {0},
            constant_nonzero=len(vals) == 1 and 0 not in vals,
            half_open=(vals <= {0, PLUS} or vals <= {0, -PLUS}) and vals != {0},
            on_edge_zero=on_edge,
            both_signs_present=(PLUS in vals and -PLUS in vals),
        )
    vert_set = set(verts)
    confining = []
    fully_used = False
    edges_on_one_simplicial = False
    for t in topes(om):
        adj = adjacent_cocircuits(om, t)
        if vert_set <= adj:
            confining.append(t)
            if adj <= vert_set:
                fully_used = True
        if len(adj) == om.rank:
            # all cycle edges on this simplicial tope?
            if all(
                verts[i].leq(t) and verts[(i + 1) % k].leq(t) for i in range(k)
            ):
                edges_on_one_simplicial = True
    return CycleReport(
        per_element=per,
        edges_on_single_simplicial_tope=edges_on_one_simplicial,
        confining_topes=tuple(sorted(confining, key=SignVector.sort_key)),
        any_confining_tope_fully_used=fully_used,
    )
