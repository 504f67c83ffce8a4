"""Missing-face detection, flagness, and belt (empty square) enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotAnEdge
from .sphere import SimplicialSphere


@dataclass(frozen=True)
class Belt:
    """Four vertices whose induced subcomplex is the boundary of a square.

    ``cycle`` lists the vertices in induced 4-cycle order, normalized to
    start at the smallest vertex and continue toward its smaller
    cycle-neighbor.  Consecutive cycle entries are edges of the sphere;
    the two diagonals are non-edges.
    """

    cycle: tuple[int, int, int, int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @property
    def sides(self) -> tuple[tuple[int, int], ...]:
        a, b, c, d = self.cycle
        return tuple(
            (u, v) if u < v else (v, u) for u, v in ((a, b), (b, c), (c, d), (d, a))
        )


def normalized_belt(a: int, c: int, b: int, d: int) -> Belt:
    """Belt with diagonals {a,c} and {b,d}, in normalized cycle order."""
    first = min(a, b, c, d)
    if first in (a, c):
        diag, other = (a, c), (b, d)
    else:
        diag, other = (b, d), (a, c)
    second, last = min(other), max(other)
    third = diag[0] if diag[1] == first else diag[1]
    return Belt((first, second, third, last))


def missing_triangles(K: SimplicialSphere) -> tuple[tuple[int, int, int], ...]:
    """All 3-cliques of the edge graph that are not faces, sorted.

    Together with the minimum degree this certifies flagness of a
    2-sphere; see :func:`is_flag`.
    """
    out = []
    for a, b in K.edges:
        common = K.neighbors(a) & K.neighbors(b)
        for c in common:
            if c > b and not K.has_face((a, b, c)):
                out.append((a, b, c))
    return tuple(sorted(out))


def is_flag(K: SimplicialSphere) -> bool:
    """True iff every clique of the 1-skeleton spans a simplex of ``K``.

    On a triangulated 2-sphere this reduces to: no missing triangle and
    no degree-3 vertex (a degree-3 vertex plus its link triangle is a
    4-clique that cannot span a 3-simplex in a 2-complex).
    """
    if any(K.degree(v) < 4 for v in range(K.n)):
        return False
    return not missing_triangles(K)


def belts(K: SimplicialSphere) -> tuple[Belt, ...]:
    """All belts of ``K``, each reported once, sorted by cycle.

    Enumeration is over diagonals: every non-adjacent pair {a,c} with a
    non-adjacent pair {b,d} of common neighbors spans the belt {a,b,c,d}.
    Each belt arises from both of its diagonals, so results are deduped
    by vertex set.
    """
    found: dict[frozenset[int], Belt] = {}
    for a, c in combinations(range(K.n), 2):
        if K.has_edge(a, c):
            continue
        common = sorted(K.neighbors(a) & K.neighbors(c))
        for b, d in combinations(common, 2):
            if K.has_edge(b, d):
                continue
            key = frozenset((a, b, c, d))
            if key not in found:
                found[key] = normalized_belt(a, c, b, d)
    return tuple(sorted(found.values(), key=lambda belt: belt.cycle))


def belt_covered_edges(K: SimplicialSphere) -> frozenset[tuple[int, int]]:
    """Edges of ``K`` that are a side of at least one belt."""
    covered: set[tuple[int, int]] = set()
    for belt in belts(K):
        covered.update(belt.sides)
    return frozenset(covered)


def edge_in_belt(K: SimplicialSphere, e) -> bool:
    """True iff some belt contains both endpoints of edge ``e``.

    Both endpoints of an edge can only sit on a belt as one of its sides
    (diagonals are non-edges), so this equals side membership.
    """
    u, v = sorted(e)
    if not K.has_edge(u, v):
        raise NotAnEdge(f"{{{u},{v}}} is not an edge")
    return (u, v) in belt_covered_edges(K)
