"""Classification chain and flip-graph searches.

The chain: realizable-by-construction implies all programs Euclidean
implies a Mandel witness exists implies every element has an adjacent
mutation (Las Vergnas).  Witness search is sufficient-only: absence
within budget is 'undetermined', never a disproof.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .canonical import canonical_form
from .core import OrientedMatroid
from .extensions import (
    ExtensionError,
    LexExtensionSpec,
    lex_extend,
    mandel_from_euclidean_mutant,
)
from .faces import (
    adjacent_mutation_count,
    flip,
    min_adjacent_mutations,
    mutations,
)
from .programs import (
    Program,
    all_programs_euclidean,
    has_euclidean_program,
    is_euclidean,
)
from .signs import PLUS


@dataclass(frozen=True)
class MandelWitness:
    """Either a plain lexicographic extension spec or the
    extend-then-flip pipeline data; both name the extension element that
    makes every program with it Euclidean."""

    kind: str  # "lex" | "flip-pipeline"
    spec: Optional[LexExtensionSpec] = None
    mutation: Optional[tuple[int, ...]] = None
    g: Optional[int] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.spec is not None:
            out["spec"] = self.spec.to_string()
        if self.mutation is not None:
            out["mutation"] = list(self.mutation)
        if self.g is not None:
            out["g"] = self.g
        return out


def is_las_vergnas(om: OrientedMatroid) -> bool:
    """Every non-loop, non-coloop element has an adjacent mutation."""
    loops, coloops = om.loops(), om.coloops()
    return all(
        adjacent_mutation_count(om, e) >= 1
        for e in range(om.n)
        if e not in loops and e not in coloops
    )


def _verify_lex_witness(om: OrientedMatroid, spec: LexExtensionSpec) -> bool:
    ext = lex_extend(om, spec)
    g = om.n
    if not ext.is_general_position(g):
        return False
    coloops = ext.coloops()
    if g in coloops:
        return False
    return all(
        is_euclidean(Program(ext, g, f)).euclidean
        for f in range(om.n)
        if f not in coloops
    )


def mandel_witness_search(
    om: OrientedMatroid, budget: int = 2000
) -> Optional[MandelWitness]:
    """Search for an extension in general position making all programs
    with it Euclidean.  Order: single lex spec for Euclidean input, the
    Euclidean-mutant flip pipeline, then brute lexicographic search.
    Returns None when the budget runs out (undetermined, not a no)."""
    if not om.is_uniform():
        raise ValueError("witness search implemented for uniform oriented matroids")
    if budget <= 0:
        return None
    spent = 0
    if all_programs_euclidean(om):
        spec = LexExtensionSpec(tuple((e, PLUS) for e in range(om.rank)))
        if _verify_lex_witness(om, spec):
            return MandelWitness("lex", spec=spec)
        spent += 1
    else:
        # fast path: one flip away from a Euclidean mutant
        for cert in mutations(om):
            if spent >= budget:
                return None
            spent += 1
            try:
                mutant = flip(om, cert)
            except ValueError:
                continue
            if not all_programs_euclidean(mutant):
                continue
            for f in cert.basis:
                order = (f,) + tuple(e for e in cert.basis if e != f)
                for g in range(om.n):
                    if g in cert.basis:
                        continue
                    try:
                        result = mandel_from_euclidean_mutant(
                            om, order, g, check_hypotheses=False
                        )
                    except ExtensionError:
                        continue
                    if result.ok:
                        return MandelWitness(
                            "flip-pipeline", spec=result.spec,
                            mutation=order, g=g,
                        )
                    spent += 1
                    if spent >= budget:
                        return None
    # brute lexicographic search
    for elems in itertools.permutations(range(om.n), om.rank):
        for pattern in itertools.product((PLUS, -PLUS), repeat=om.rank):
            if spent >= budget:
                return None
            spent += 1
            spec = LexExtensionSpec(tuple(zip(elems, pattern)))
            if _verify_lex_witness(om, spec):
                return MandelWitness("lex", spec=spec)
    return None


@dataclass
class ClassificationReport:
    n: int
    rank: int
    uniform: bool
    realizable_by_construction: bool
    euclidean_all_programs: bool
    totally_non_euclidean: bool
    las_vergnas: bool
    mandel_witness: Optional[MandelWitness]
    mandel_undetermined: bool
    L: Optional[int]
    adjacency: dict
    mutation_count: int
    consistency_violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "uniform": self.uniform,
            "realizable_by_construction": self.realizable_by_construction,
            "euclidean_all_programs": self.euclidean_all_programs,
            "totally_non_euclidean": self.totally_non_euclidean,
            "las_vergnas": self.las_vergnas,
            "mandel_witness": self.mandel_witness.to_json()
            if self.mandel_witness
            else None,
            "mandel_undetermined": self.mandel_undetermined,
            "L": self.L,
            "adjacency": {str(e): c for e, c in sorted(self.adjacency.items())},
            "mutation_count": self.mutation_count,
            "consistency_violations": self.consistency_violations,
        }


def classify(
    om: OrientedMatroid, mandel_budget: int = 2000, search_mandel: bool = True
) -> ClassificationReport:
    loops, coloops = om.loops(), om.coloops()
    eligible = [e for e in range(om.n) if e not in loops and e not in coloops]
    certs = mutations(om)
    adjacency = {e: sum(1 for c in certs if e in c.basis) for e in eligible}
    lv = all(c >= 1 for c in adjacency.values())
    eall = all_programs_euclidean(om)
    tne = False if eall else not has_euclidean_program(om)
    witness = None
    undetermined = False
    if search_mandel and om.is_uniform():
        witness = mandel_witness_search(om, budget=mandel_budget)
        undetermined = witness is None
    else:
        undetermined = True
    report = ClassificationReport(
        n=om.n,
        rank=om.rank,
        uniform=om.is_uniform(),
        realizable_by_construction=om.provenance == "from-points",
        euclidean_all_programs=eall,
        totally_non_euclidean=tne,
        las_vergnas=lv,
        mandel_witness=witness,
        mandel_undetermined=undetermined,
        L=min(adjacency.values()) if adjacency else None,
        adjacency=adjacency,
        mutation_count=len(certs),
    )
    if report.realizable_by_construction and not report.euclidean_all_programs:
        report.consistency_violations.append("realizable but not Euclidean")
    if report.mandel_witness is not None and not report.las_vergnas:
        report.consistency_violations.append("Mandel witness but not Las Vergnas")
    if report.totally_non_euclidean and report.euclidean_all_programs:
        report.consistency_violations.append("totally non-Euclidean yet Euclidean")
    return report


@dataclass
class MutationGraphNode:
    key: str
    om: OrientedMatroid
    depth: int
    neighbors: list = field(default_factory=list)
    summary: Optional[dict] = None


@dataclass
class MutationGraph:
    nodes: dict
    seed_key: str
    exhausted_budget: bool

    def to_json(self) -> dict:
        return {
            "seed": self.seed_key,
            "budget_exhausted": self.exhausted_budget,
            "nodes": {
                k: {
                    "depth": node.depth,
                    "chirotope": node.om.chirotope.to_string()
                    if node.om.chirotope
                    else None,
                    "neighbors": sorted(set(node.neighbors)),
                    "summary": node.summary,
                }
                for k, node in self.nodes.items()
            },
        }


def mutation_graph_bfs(
    seed: OrientedMatroid,
    max_nodes: int = 1000,
    max_depth: Optional[int] = None,
    node_hook=None,
) -> MutationGraph:
    """Flip BFS with canonical-form dedup, deterministic order.

    node_hook(node) runs once per accepted node; budget exhaustion is
    reported, and a partial graph is returned.
    """
    if not seed.is_uniform():
        raise ValueError("mutation graph BFS requires a uniform seed")
    seed_key = canonical_form(seed)
    nodes: dict[str, MutationGraphNode] = {}
    root = MutationGraphNode(seed_key, seed, 0)
    nodes[seed_key] = root
    if node_hook is not None:
        node_hook(root)
    queue = deque([root])
    exhausted = False
    while queue:
        node = queue.popleft()
        if max_depth is not None and node.depth >= max_depth:
            continue
        for cert in mutations(node.om):
            neighbor = flip(node.om, cert)
            key = canonical_form(neighbor)
            node.neighbors.append(key)
            if key in nodes:
                continue
            if len(nodes) >= max_nodes:
                exhausted = True
                continue
            new = MutationGraphNode(key, neighbor, node.depth + 1)
            nodes[key] = new
            if node_hook is not None:
                node_hook(new)
            queue.append(new)
    return MutationGraph(nodes, seed_key, exhausted)


def flip_distance_to_euclidean(
    om: OrientedMatroid, radius: int = 3, max_nodes: int = 4000
) -> Optional[int]:
    """BFS distance to the nearest class whose programs are all
    Euclidean; None if not found within the radius."""
    if all_programs_euclidean(om):
        return 0
    seen = {canonical_form(om)}
    frontier = [om]
    for depth in range(1, radius + 1):
        nxt = []
        for current in frontier:
            for cert in mutations(current):
                neighbor = flip(current, cert)
                key = canonical_form(neighbor)
                if key in seen:
                    continue
                seen.add(key)
                if all_programs_euclidean(neighbor):
                    return depth
                if len(seen) < max_nodes:
                    nxt.append(neighbor)
        frontier = nxt
        if not frontier:
            break
    return None


def summary_table(oms: Iterable[OrientedMatroid]) -> dict:
    """Aggregate the minimum per-element mutation adjacency by class flags."""
    rows: dict[str, dict] = {}

    def bump(bucket: str, value: int):
        row = rows.setdefault(bucket, {"count": 0, "min_L": None, "max_L": None})
        row["count"] += 1
        row["min_L"] = value if row["min_L"] is None else min(row["min_L"], value)
        row["max_L"] = value if row["max_L"] is None else max(row["max_L"], value)

    for om in oms:
        L = min_adjacent_mutations(om)
        bump("all", L)
        if om.provenance == "from-points":
            bump("realizable", L)
        if all_programs_euclidean(om):
            bump(f"euclidean-rank-{om.rank}", L)
        if is_las_vergnas(om):
            bump("las-vergnas", L)
    return rows
