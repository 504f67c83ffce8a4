"""Vertex splitting, the inverse of edge contraction.

Splitting a vertex ``w`` at two of its link-cycle vertices ``a`` and ``b``
replaces ``w`` with an edge ``{w, n}`` (``n`` is the next free label): the
link arc from ``a`` to ``b`` stays attached to ``w``, the complementary arc
goes to the new vertex, and both copies share the two junction faces
``{w, n, a}`` and ``{w, n, b}``.  Contracting ``{w, n}`` in the result
restores the original sphere.

The split preserves flagness exactly when ``a`` and ``b`` are not adjacent
on the link cycle; a degree-``k`` vertex therefore admits ``k*(k-3)/2``
flag-preserving splits, one per diagonal of its link polygon.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadSplitSpec, NotFlag
from .flags import is_flag
from .sphere import SimplicialSphere, from_faces


@dataclass(frozen=True)
class SplitSpec:
    """A vertex split: vertex ``w``, junction link vertices ``a`` and ``b``."""

    w: int
    a: int
    b: int


def split_vertex(K: SimplicialSphere, spec: SplitSpec) -> SimplicialSphere:
    """Apply ``spec`` to ``K``; the new vertex gets label ``K.n``.

    The arc of ``w``'s link running from ``a`` to ``b`` in the link cycle's
    normalized direction stays with ``w``; the arc from ``b`` back to ``a``
    moves to the new vertex.  Raises BadSplitSpec unless ``a`` and ``b`` are
    two distinct link vertices of a valid ``w``.
    """
    if not isinstance(spec.w, int) or not 0 <= spec.w < K.n:
        raise BadSplitSpec(f"no vertex {spec.w!r} to split")
    if spec.a == spec.b:
        raise BadSplitSpec("junction vertices must be distinct")
    cyc = K.link_cycle(spec.w)
    for v in (spec.a, spec.b):
        if v not in K.neighbors(spec.w):
            raise BadSplitSpec(f"{v} is not in the link of {spec.w}")
    i, j = sorted((cyc.index(spec.a), cyc.index(spec.b)))
    first, second = cyc[i], cyc[j]
    arc_keep = cyc[i : j + 1]
    arc_new = cyc[j:] + cyc[: i + 1]
    w, w2 = spec.w, K.n
    faces = [f for f in K.faces if w not in f]
    faces.extend((w, arc_keep[t], arc_keep[t + 1]) for t in range(len(arc_keep) - 1))
    faces.extend((w2, arc_new[t], arc_new[t + 1]) for t in range(len(arc_new) - 1))
    faces.append((w, w2, first))
    faces.append((w, w2, second))
    return from_faces(K.n + 1, faces)


def diagonal_count(k: int) -> int:
    """Number of diagonals of a ``k``-gon: k*(k-3)/2."""
    return k * (k - 3) // 2


def expansion_bound(K: SimplicialSphere) -> int:
    """Upper bound on flag-preserving splits: sum of link-polygon diagonals."""
    return sum(count * diagonal_count(k) for k, count in K.r_vector().items())


def flag_expansions(K: SimplicialSphere) -> list[tuple[SplitSpec, SimplicialSphere]]:
    """All flag-preserving splits of a flag sphere, in deterministic order.

    Enumerates vertices in label order and, for each, every non-adjacent
    pair of link-cycle positions (the diagonals of the link polygon).  Each
    result is flag because the junction pair being non-adjacent neither
    creates a missing triangle nor a vertex of degree 3.
    """
    if not is_flag(K):
        raise NotFlag(f"sphere on {K.n} vertices is not flag")
    out = []
    for w in range(K.n):
        cyc = K.link_cycle(w)
        d = len(cyc)
        for i in range(d):
            for j in range(i + 2, d):
                if i == 0 and j == d - 1:
                    continue
                spec = SplitSpec(w, cyc[i], cyc[j])
                out.append((spec, split_vertex(K, spec)))
    return out
