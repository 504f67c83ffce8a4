"""Validated triangulations of the 2-sphere and their .tri text format.

A sphere is stored purely combinatorially: a vertex count ``n`` and a set
of unordered vertex triples (the triangles).  Validation accepts exactly
the complexes that triangulate S2: every edge in two triangles, every
vertex link a single cycle, Euler characteristic 2, face-connected.
Instances are immutable after construction and safe to share between
threads; every operation in this package treats them as values.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import BadVertex, FormatError, NotASphere

Face = tuple[int, int, int]


class SimplicialSphere:
    """A triangulation of the 2-sphere on vertices ``0..n-1``.

    Do not call the constructor directly; build instances with
    :func:`from_faces` (or the fixed models :func:`tetrahedron` and
    :func:`octahedron`), which run the full validation.

    Equality and hashing compare the exact labeled face set; use
    :func:`flagsphere.canonical.isomorphic` for equality up to relabeling.
    """

    __slots__ = (
        "n",
        "faces",
        "_face_set",
        "_edges",
        "_edge_set",
        "_neighbors",
        "_succ",
        "_pred",
        "_link_cache",
        "_canon_form",
    )

    def __init__(self, n: int, faces: tuple[Face, ...], _token: object = None):
        if _token is not _INTERNAL:
            raise TypeError("use from_faces() to construct a SimplicialSphere")
        self.n = n
        self.faces = faces
        self._face_set = frozenset(faces)
        edge_set: set[tuple[int, int]] = set()
        for a, b, c in faces:
            edge_set.add((a, b))
            edge_set.add((a, c))
            edge_set.add((b, c))
        self._edges = tuple(sorted(edge_set))
        self._edge_set = frozenset(edge_set)
        self._neighbors: tuple[frozenset[int], ...] = ()
        self._succ: tuple[dict[int, int], ...] = ()
        self._pred: tuple[dict[int, int], ...] = ()
        self._link_cache: dict[int, tuple[int, ...]] = {}
        self._canon_form: bytes | None = None

    # -- basic accessors ---------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted pairs, in lexicographic order."""
        return self._edges

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def has_face(self, face) -> bool:
        return tuple(sorted(face)) in self._face_set

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._neighbors[v])

    def link_cycle(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in cyclic order around ``v``.

        The representative is normalized: it starts at the smallest
        neighbor and proceeds toward the smaller of that neighbor's two
        cycle-neighbors.  Callers must treat the result as a cycle defined
        up to rotation and reflection.
        """
        self._check_vertex(v)
        cached = self._link_cache.get(v)
        if cached is not None:
            return cached
        succ, pred = self._succ[v], self._pred[v]
        start = min(succ)
        step = succ if succ[start] <= pred[start] else pred
        cycle = [start]
        cur = start
        for _ in range(len(succ) - 1):
            cur = step[cur]
            cycle.append(cur)
        out = tuple(cycle)
        self._link_cache[v] = out
        return out

    def rotation(self, v: int, reverse: bool = False) -> dict[int, int]:
        """Successor map of the (arbitrarily oriented) rotation around ``v``."""
        self._check_vertex(v)
        return (self._pred if reverse else self._succ)[v]

    def r_vector(self) -> dict[int, int]:
        """Count vertices by degree: ``{k: number of degree-k vertices}``.

        Equivalently the number of k-gon facets of the dual simple polytope.
        """
        counts: dict[int, int] = {}
        for nbrs in self._neighbors:
            counts[len(nbrs)] = counts.get(len(nbrs), 0) + 1
        return dict(sorted(counts.items()))

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise BadVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialSphere):
            return NotImplemented
        return self.n == other.n and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.n, self.faces))

    def __repr__(self) -> str:
        return f"SimplicialSphere(n={self.n}, faces={self.n_faces})"


_INTERNAL = object()


def from_faces(n: int, faces) -> SimplicialSphere:
    """Validate ``faces`` over vertices ``0..n-1`` and build the sphere.

    Faces may be given in any order and any within-face order; they are
    stored as sorted triples in sorted order.  Raises :class:`NotASphere`
    with a reason code when any invariant fails.
    """
    norm: list[Face] = []
    for f in faces:
        raw = tuple(f)
        if not all(isinstance(v, int) for v in raw):
            raise NotASphere("bad-index", f"face {raw!r} has a non-integer vertex")
        t = tuple(sorted(raw))
        if len(t) != 3 or t[0] == t[1] or t[1] == t[2]:
            raise NotASphere("bad-index", f"face {raw!r} is not 3 distinct vertices")
        if t[0] < 0 or t[2] >= n:
            raise NotASphere("bad-index", f"face {t!r} out of range 0..{n - 1}")
        norm.append(t)
    norm.sort()
    for prev, cur in zip(norm, norm[1:]):
        if prev == cur:
            raise NotASphere("duplicate-face", f"face {cur!r} given more than once")
    covered = {v for f in norm for v in f}
    if len(covered) != n:
        missing = sorted(set(range(n)) - covered)
        raise NotASphere("bad-index", f"vertices {missing} occur in no face")

    face_tuple = tuple(norm)
    edge_faces: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, (a, b, c) in enumerate(face_tuple):
        edge_faces[a, b].append(i)
        edge_faces[a, c].append(i)
        edge_faces[b, c].append(i)
    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise NotASphere(
                "edge-degree", f"edge {set(e)} lies in {len(fs)} faces (expected 2)"
            )

    # Link adjacency: for each vertex, each neighbor's two link-neighbors.
    link_adj: dict[int, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    for a, b, c in face_tuple:
        link_adj[a][b].append(c)
        link_adj[a][c].append(b)
        link_adj[b][a].append(c)
        link_adj[b][c].append(a)
        link_adj[c][a].append(b)
        link_adj[c][b].append(a)
    for v in range(n):
        adj = link_adj[v]
        start = next(iter(adj))
        prev, cur = None, start
        seen = 1
        while True:
            x, y = adj[cur]
            nxt = y if x == prev else x
            if nxt == start:
                break
            prev, cur = cur, nxt
            seen += 1
        if seen != len(adj):
            raise NotASphere(
                "link-not-cycle", f"link of vertex {v} is not a single cycle"
            )

    V, E, F = n, len(edge_faces), len(face_tuple)
    if V - E + F != 2:
        raise NotASphere("euler-fail", f"V-E+F = {V}-{E}+{F} = {V - E + F} != 2")

    # Face-adjacency connectivity.
    reached = [False] * F
    stack = [0]
    reached[0] = True
    count = 1
    while stack:
        i = stack.pop()
        a, b, c = face_tuple[i]
        for e in ((a, b), (a, c), (b, c)):
            fa, fb = edge_faces[e]
            j = fb if fa == i else fa
            if not reached[j]:
                reached[j] = True
                count += 1
                stack.append(j)
    if count != F:
        raise NotASphere("disconnected", f"face graph has {F - count} unreachable faces")

    sphere = SimplicialSphere(n, face_tuple, _token=_INTERNAL)
    sphere._neighbors = tuple(frozenset(link_adj[v]) for v in range(n))
    sphere._succ, sphere._pred = _build_rotations(n, face_tuple, edge_faces)
    return sphere


def _build_rotations(n, face_tuple, edge_faces):
    """Orient all faces consistently and derive per-vertex rotation maps.

    A connected surface with Euler characteristic 2 is a sphere, hence
    orientable, so the propagation below can never conflict.
    """
    oriented: list[Face | None] = [None] * len(face_tuple)
    oriented[0] = face_tuple[0]
    stack = [0]
    while stack:
        i = stack.pop()
        x, y, z = oriented[i]
        for u, v in ((x, y), (y, z), (z, x)):
            e = (u, v) if u < v else (v, u)
            fa, fb = edge_faces[e]
            j = fb if fa == i else fa
            if oriented[j] is None:
                (w,) = set(face_tuple[j]) - {u, v}
                oriented[j] = (v, u, w)
                stack.append(j)
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    pred: list[dict[int, int]] = [{} for _ in range(n)]
    for x, y, z in oriented:
        succ[x][y] = z
        succ[y][z] = x
        succ[z][x] = y
        pred[x][z] = y
        pred[y][x] = z
        pred[z][y] = x
    return tuple(succ), tuple(pred)


def tetrahedron() -> SimplicialSphere:
    """The boundary of the 3-simplex: the smallest triangulated S2."""
    return from_faces(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def octahedron() -> SimplicialSphere:
    """The octahedron boundary in its fixed labeling.

    Opposite (non-adjacent) vertex pairs are {0,5}, {1,4}, {2,3}; this
    labeling is relied on by tests and by the reduction terminal check.
    """
    return from_faces(
        6,
        [
            (0, 1, 2),
            (0, 2, 4),
            (0, 4, 3),
            (0, 3, 1),
            (5, 1, 2),
            (5, 2, 4),
            (5, 4, 3),
            (5, 3, 1),
        ],
    )


# -- .tri text format ------------------------------------------------------


def dump_tri(sphere: SimplicialSphere) -> str:
    """Render a sphere in .tri format (canonical: parse(dump(K)) == K)."""
    lines = [str(sphere.n)]
    lines.extend(f"{a} {b} {c}" for a, b, c in sphere.faces)
    return "\n".join(lines) + "\n"


def parse_tri(text: str) -> SimplicialSphere:
    """Parse .tri text: vertex count line, then one face per line.

    Blank lines and lines starting with 'c' are ignored.
    """
    n = None
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {line!r}")
        if n is None:
            if len(values) != 1:
                raise FormatError(f"line {lineno}: expected a single vertex count")
            n = values[0]
        else:
            if len(values) != 3:
                raise FormatError(f"line {lineno}: expected 3 vertex indices")
            faces.append(tuple(values))
    if n is None:
        raise FormatError("empty .tri input")
    return from_faces(n, faces)


def dump_corpus(spheres) -> str:
    """Render spheres as .tri blocks separated by blank lines."""
    return "\n".join(dump_tri(s) for s in spheres)


def parse_corpus(text: str) -> list[SimplicialSphere]:
    """Parse a corpus dump produced by :func:`dump_corpus`."""
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [parse_tri(b) for b in blocks]
