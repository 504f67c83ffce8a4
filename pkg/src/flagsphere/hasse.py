"""The Hasse graph of the contraction order on flag spheres.

Nodes are isomorphism classes of flag spheres with 6 <= n <= max_n, each
held as its canonical representative.  An arc runs from class A to class B
when some flag sphere in B has a flag-preserving contraction landing in A,
so arcs point from the smaller sphere to the larger and the octahedron is
the unique source.  The graph is grown breadth-first from the octahedron
by flag-preserving vertex splits; completeness follows from every flag
sphere's contraction path down to the octahedron, reversed.

Two per-node degree bounds hold and are checked by verify_degree_bounds:
in-degree is at most the number of belt-free edges (each in-arc consumes a
flag-contractible edge of the representative) and out-degree is at most
the sum of link-polygon diagonal counts (each out-arc is a flag-preserving
split).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .canonical import (
    canonical_form,
    canonical_sphere,
    encode_face_set,
    form_hex,
    sphere_from_form,
)
from .errors import BudgetTooSmall, FormatError
from .expansion import expansion_bound, flag_expansions
from .flags import belt_covered_edges
from .sphere import SimplicialSphere, from_faces, octahedron


@dataclass(frozen=True)
class HasseNode:
    form: bytes
    n: int
    sphere: SimplicialSphere


@dataclass(frozen=True)
class HasseGraph:
    max_n: int
    nodes: dict[bytes, HasseNode]
    arcs: frozenset[tuple[bytes, bytes]]

    def level_counts(self) -> dict[int, int]:
        """Node count per vertex count, keys ascending."""
        counts = Counter(node.n for node in self.nodes.values())
        return {n: counts[n] for n in sorted(counts)}


def _expand_forms(K: SimplicialSphere) -> list[bytes]:
    return [canonical_form(child) for _, child in flag_expansions(K)]


def build(max_n: int, jobs: int = 1) -> HasseGraph:
    """All flag-sphere classes with 6 <= n <= max_n and their contraction arcs.

    Breadth-first from the octahedron; every node's sphere is the
    canonical representative, so downstream exports are label-stable.
    Worker count never changes the result.
    """
    if max_n < 6:
        raise BudgetTooSmall(f"need max_n >= 6, got {max_n}")
    start = canonical_sphere(octahedron())
    f0 = canonical_form(start)
    nodes = {f0: HasseNode(f0, 6, start)}
    arcs = set()
    frontier = [f0]
    for n in range(6, max_n):
        reps = [nodes[f].sphere for f in frontier]
        if jobs > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(_expand_forms, reps))
        else:
            batches = [_expand_forms(K) for K in reps]
        nxt = []
        for parent, child_forms in zip(frontier, batches):
            for cf in child_forms:
                if cf not in nodes:
                    nodes[cf] = HasseNode(cf, n + 1, sphere_from_form(cf))
                    nxt.append(cf)
                arcs.add((parent, cf))
        frontier = nxt
    return HasseGraph(max_n, nodes, frozenset(arcs))


@dataclass(frozen=True)
class BoundEntry:
    form_hex: str
    n: int
    in_degree: int
    belt_free_edges: int
    out_degree: int
    expansion_bound: int
    out_checked: bool
    ok: bool


@dataclass(frozen=True)
class BoundsReport:
    entries: tuple[BoundEntry, ...]

    @property
    def violations(self) -> tuple[BoundEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def verify_degree_bounds(G: HasseGraph) -> BoundsReport:
    """Check both degree bounds on every node; violations become entries.

    The out-degree bound is only meaningful for nodes below the budget
    (nodes at max_n have no children in G); their entries carry
    out_checked=False.
    """
    in_deg = Counter(dst for _, dst in G.arcs)
    out_deg = Counter(src for src, _ in G.arcs)
    entries = []
    for form in sorted(G.nodes):
        node = G.nodes[form]
        K = node.sphere
        belt_free = K.n_edges - len(belt_covered_edges(K))
        bound = expansion_bound(K)
        out_checked = node.n < G.max_n
        ok = in_deg[form] <= belt_free and (
            not out_checked or out_deg[form] <= bound
        )
        entries.append(
            BoundEntry(
                form_hex=form_hex(form),
                n=node.n,
                in_degree=in_deg[form],
                belt_free_edges=belt_free,
                out_degree=out_deg[form],
                expansion_bound=bound,
                out_checked=out_checked,
                ok=ok,
            )
        )
    return BoundsReport(tuple(entries))


def _sorted_arcs(G: HasseGraph) -> list[tuple[bytes, bytes]]:
    return sorted(G.arcs)


def export_dot(G: HasseGraph) -> str:
    """Deterministic DOT rendering, nodes and arcs sorted by form."""
    lines = ["digraph hasse {"]
    for form in sorted(G.nodes):
        node = G.nodes[form]
        hx = form_hex(form)
        lines.append(f'  "{hx}" [label="{hx[:12]} n={node.n}"];')
    for src, dst in _sorted_arcs(G):
        lines.append(f'  "{form_hex(src)}" -> "{form_hex(dst)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_GRAPH_FORMAT = "hasse-graph"
_GRAPH_VERSION = 1


def export_json(G: HasseGraph) -> str:
    """Deterministic JSON rendering; import_json inverts it exactly."""
    obj = {
        "format": _GRAPH_FORMAT,
        "version": _GRAPH_VERSION,
        "max_n": G.max_n,
        "nodes": [
            {
                "form": form_hex(form),
                "n": G.nodes[form].n,
                "faces": [list(f) for f in G.nodes[form].sphere.faces],
            }
            for form in sorted(G.nodes)
        ],
        "arcs": [[form_hex(a), form_hex(b)] for a, b in _sorted_arcs(G)],
    }
    return json.dumps(obj, indent=2) + "\n"


def import_json(text: str) -> HasseGraph:
    """Rebuild a graph from export_json output.

    Every node is revalidated as a sphere and its recomputed form must
    hash to the stored one, so a tampered file cannot round-trip.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"graph file is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("format") != _GRAPH_FORMAT:
        raise FormatError("not a hasse graph file")
    if obj.get("version") != _GRAPH_VERSION:
        raise FormatError(f"unsupported graph version {obj.get('version')!r}")
    if not isinstance(obj.get("max_n"), int) or not isinstance(obj.get("nodes"), list):
        raise FormatError("graph file must carry max_n and a node list")
    nodes = {}
    by_hex = {}
    for entry in obj["nodes"]:
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("n"), int)
            or not isinstance(entry.get("faces"), list)
            or not isinstance(entry.get("form"), str)
        ):
            raise FormatError("graph node entry is malformed")
        sphere = from_faces(entry["n"], [tuple(f) for f in entry["faces"]])
        form = canonical_form(sphere)
        if form != encode_face_set(sphere.n, sphere.faces) or form_hex(form) != entry["form"]:
            raise FormatError(
                f"node {entry['form'][:12]} is not a canonically labeled"
                " representative of its own form"
            )
        nodes[form] = HasseNode(form, sphere.n, sphere)
        by_hex[entry["form"]] = form
    arcs = set()
    for arc in obj.get("arcs", []):
        if (
            not isinstance(arc, list)
            or len(arc) != 2
            or arc[0] not in by_hex
            or arc[1] not in by_hex
        ):
            raise FormatError("graph arc references an unknown node")
        arcs.add((by_hex[arc[0]], by_hex[arc[1]]))
    return HasseGraph(obj["max_n"], nodes, frozenset(arcs))


def export_levels_tsv(G: HasseGraph) -> str:
    """Per-level summary: vertex count, class count, arcs entering the level."""
    arcs_into = Counter(G.nodes[dst].n for _, dst in G.arcs)
    lines = ["n\tcount\tarcs_in_level"]
    for n, count in G.level_counts().items():
        lines.append(f"{n}\t{count}\t{arcs_into[n]}")
    return "\n".join(lines) + "\n"
