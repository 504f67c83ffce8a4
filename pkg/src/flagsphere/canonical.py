"""Canonical forms and isomorphism for triangulated 2-spheres.

The form of a sphere is computed by relabeling it breadth-first from every
directed edge in both rotational directions (4E starts), encoding each
relabeled face set, and keeping the lexicographic minimum.  Scanning both
directions makes the form independent of the arbitrary orientation chosen
when the rotation maps were built, so mirror images share a form.  The
minimal code is itself a relabeled copy of the sphere, which makes the
form a complete isomorphism invariant, not just a hash.
"""

from __future__ import annotations

import hashlib

from .errors import FormatError
from .sphere import SimplicialSphere, from_faces

# Labels are packed three to an int while they fit 10 bits; packing keeps
# the hot comparison loop on machine ints.
_PACK_LIMIT = 1 << 10


def _bfs_labels(n: int, rot, u: int, v: int) -> list[int]:
    """Deterministic relabeling: old label -> new label, rooted at edge u->v.

    Vertices are processed in new-label order; each vertex's unlabeled
    neighbors receive labels in rotation order starting after the neighbor
    that discovered it (after ``v`` for the root).
    """
    label = [-1] * n
    label[u] = 0
    label[v] = 1
    order = [u, v]
    ref = [-1] * n
    ref[u] = v
    ref[v] = u
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        rx = rot[x]
        t = ref[x]
        for _ in range(len(rx) - 1):
            t = rx[t]
            if label[t] < 0:
                label[t] = len(order)
                ref[t] = x
                order.append(t)
    return label


def _face_code(faces, label, packed: bool):
    if packed:
        code = []
        for a, b, c in faces:
            x, y, z = label[a], label[b], label[c]
            if x > y:
                x, y = y, x
            if y > z:
                y, z = z, y
            if x > y:
                x, y = y, x
            code.append((x << 20) | (y << 10) | z)
    else:
        code = [tuple(sorted((label[a], label[b], label[c]))) for a, b, c in faces]
    code.sort()
    return code


def _min_code(K: SimplicialSphere, rotations):
    n = K.n
    packed = n < _PACK_LIMIT
    faces = K.faces
    best = None
    for a, b in K.edges:
        for u, v in ((a, b), (b, a)):
            for rot in rotations:
                code = _face_code(faces, _bfs_labels(n, rot, u, v), packed)
                if best is None or code < best:
                    best = code
    return best, packed


def _code_faces(code, packed: bool):
    if packed:
        mask = _PACK_LIMIT - 1
        return [(e >> 20, (e >> 10) & mask, e & mask) for e in code]
    return list(code)


def encode_face_set(n: int, faces) -> bytes:
    """Serialize a face set as count-prefixed big-endian 32-bit integers."""
    sorted_faces = sorted(tuple(sorted(f)) for f in faces)
    flat = [n, len(sorted_faces)]
    for f in sorted_faces:
        flat.extend(f)
    return b"".join(x.to_bytes(4, "big") for x in flat)


def decode_form(form: bytes) -> tuple[int, list[tuple[int, int, int]]]:
    """Invert :func:`encode_face_set`."""
    if len(form) < 8 or len(form) % 4:
        raise FormatError("truncated canonical form")
    ints = [int.from_bytes(form[i : i + 4], "big") for i in range(0, len(form), 4)]
    n, f_count = ints[0], ints[1]
    if len(ints) != 2 + 3 * f_count:
        raise FormatError("canonical form length does not match its face count")
    faces = [(ints[i], ints[i + 1], ints[i + 2]) for i in range(2, len(ints), 3)]
    return n, faces


def canonical_form(K: SimplicialSphere) -> bytes:
    """The canonical byte string of ``K``'s isomorphism class.

    Equal byte strings are equivalent to the spheres being isomorphic
    (including mirror images); the rendering is stable across runs and
    platforms.
    """
    if K._canon_form is not None:
        return K._canon_form
    best, packed = _min_code(K, (K._succ, K._pred))
    form = encode_face_set(K.n, _code_faces(best, packed))
    K._canon_form = form
    return form


def form_hex(form: bytes) -> str:
    """Stable hexadecimal rendering of a form, used in exports."""
    return hashlib.sha256(form).hexdigest()


def sphere_from_form(form: bytes) -> SimplicialSphere:
    """Reconstruct the canonical representative encoded by ``form``."""
    n, faces = decode_form(form)
    sphere = from_faces(n, faces)
    sphere._canon_form = form
    return sphere


def canonical_sphere(K: SimplicialSphere) -> SimplicialSphere:
    """The canonically relabeled representative of ``K``'s class."""
    return sphere_from_form(canonical_form(K))


def isomorphic(A: SimplicialSphere, B: SimplicialSphere) -> bool:
    """True iff some relabeling maps the faces of ``A`` onto those of ``B``."""
    if A.n != B.n or A.n_faces != B.n_faces:
        return False
    if sorted(map(len, A._neighbors)) != sorted(map(len, B._neighbors)):
        return False
    return canonical_form(A) == canonical_form(B)
