"""Brute-force reference implementations.

Everything here favors the most literal possible reading of each
definition over speed, so the fast paths elsewhere in the package can be
validated against it.  The only shared machinery is the core sphere type,
the raw vertex-split constructor (whose output is revalidated from
scratch), the Belt value container, and canonical forms where noted for
deduplication above the size where pairwise bijection search stays cheap;
belt search, flagness, and isomorphism are reimplemented from their
definitions.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .canonical import canonical_form
from .errors import BudgetTooLarge, BudgetTooSmall, TooLarge
from .expansion import SplitSpec, split_vertex
from .flags import Belt
from .sphere import SimplicialSphere, tetrahedron

# Pairwise bijection search stays affordable through this vertex count;
# beyond it enumerate_all_spheres switches to canonical-form dedup.
_BRUTE_DEDUP_LIMIT = 8
_ISO_LIMIT = 9
_ENUMERATION_LIMIT = 11


def brute_belts(K: SimplicialSphere) -> set[Belt]:
    """Every 4-subset inducing exactly a chord-free, face-free 4-cycle."""
    out = set()
    for quad in combinations(range(K.n), 4):
        induced = [p for p in combinations(quad, 2) if K.has_edge(*p)]
        if len(induced) != 4:
            continue
        deg = {v: 0 for v in quad}
        for u, v in induced:
            deg[u] += 1
            deg[v] += 1
        if any(d != 2 for d in deg.values()):
            continue
        if any(K.has_face(t) for t in combinations(quad, 3)):
            continue
        # walk the 4-cycle from its smallest vertex toward its smaller
        # neighbor; quad is sorted, so quad[0] is that vertex
        nbr = {v: [] for v in quad}
        for u, v in induced:
            nbr[u].append(v)
            nbr[v].append(u)
        a = quad[0]
        b = min(nbr[a])
        c = nbr[b][1] if nbr[b][0] == a else nbr[b][0]
        d = max(nbr[a])
        out.add(Belt((a, b, c, d)))
    return out


def brute_is_flag(K: SimplicialSphere) -> bool:
    """Literal clique test: every clique of the 1-skeleton spans a simplex.

    A 4-clique can never span (there are no 3-simplices), and a 3-clique
    spans iff it is a face; smaller cliques always span.
    """
    for quad in combinations(range(K.n), 4):
        if all(K.has_edge(*p) for p in combinations(quad, 2)):
            return False
    for tri in combinations(range(K.n), 3):
        if (
            K.has_edge(tri[0], tri[1])
            and K.has_edge(tri[0], tri[2])
            and K.has_edge(tri[1], tri[2])
            and not K.has_face(tri)
        ):
            return False
    return True


def brute_isomorphic(A: SimplicialSphere, B: SimplicialSphere) -> bool:
    """Search all degree-respecting vertex bijections for a face match."""
    if A.n != B.n or A.n_faces != B.n_faces:
        return False
    if A.n > _ISO_LIMIT:
        raise TooLarge(f"bijection search capped at {_ISO_LIMIT} vertices, got {A.n}")
    deg_a = {}
    deg_b = {}
    for v in range(A.n):
        deg_a.setdefault(A.degree(v), []).append(v)
    for v in range(B.n):
        deg_b.setdefault(B.degree(v), []).append(v)
    if sorted(deg_a) != sorted(deg_b):
        return False
    if any(len(deg_a[k]) != len(deg_b[k]) for k in deg_a):
        return False
    classes = sorted(deg_a)
    faces_a = A.faces
    target = B._face_set

    def assign(idx: int, mapping: list[int]) -> bool:
        if idx == len(classes):
            return all(
                tuple(sorted((mapping[x], mapping[y], mapping[z]))) in target
                for x, y, z in faces_a
            )
        k = classes[idx]
        for perm in permutations(deg_b[k]):
            for src, dst in zip(deg_a[k], perm):
                mapping[src] = dst
            if assign(idx + 1, mapping):
                return True
        return False

    return assign(0, [-1] * A.n)


def _all_splits(K: SimplicialSphere) -> list[SimplicialSphere]:
    """Every vertex split of K, adjacent link pairs included."""
    out = []
    for w in range(K.n):
        cyc = K.link_cycle(w)
        for i in range(len(cyc)):
            for j in range(i + 1, len(cyc)):
                out.append(split_vertex(K, SplitSpec(w, cyc[i], cyc[j])))
    return out


def enumerate_all_spheres(max_n: int, jobs: int = 1) -> list[SimplicialSphere]:
    """One representative per isomorphism class of spheres with 4 <= n <= max_n.

    Grown level by level from the tetrahedron by unrestricted vertex
    splits; every triangulated 2-sphere on n >= 5 vertices has an edge
    whose contraction is again a sphere, so the reversed splits reach
    every class.  Levels through n=8 deduplicate by pairwise bijection
    search, larger levels by canonical form.
    """
    if max_n < 4:
        raise BudgetTooSmall(f"need max_n >= 4, got {max_n}")
    if max_n > _ENUMERATION_LIMIT:
        raise BudgetTooLarge(f"enumeration capped at {_ENUMERATION_LIMIT}, got {max_n}")
    levels: list[list[SimplicialSphere]] = [[tetrahedron()]]
    for n in range(5, max_n + 1):
        if jobs > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(_all_splits, levels[-1]))
        else:
            batches = [_all_splits(K) for K in levels[-1]]
        fresh: list[SimplicialSphere] = []
        seen_forms: dict[bytes, None] = {}
        for batch in batches:
            for cand in batch:
                if n <= _BRUTE_DEDUP_LIMIT:
                    if any(brute_isomorphic(cand, rep) for rep in fresh):
                        continue
                    fresh.append(cand)
                else:
                    form = canonical_form(cand)
                    if form not in seen_forms:
                        seen_forms[form] = None
                        fresh.append(cand)
        levels.append(fresh)
    return [K for level in levels for K in level]
