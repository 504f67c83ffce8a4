"""Edge contraction, contractibility predicates, and certified reduction.

Contracting an edge {u, v} merges its endpoints and deletes the two
incident triangles.  The result is again a simplicial sphere exactly when
the link condition holds; it is again flag exactly when the edge lies in
no belt.  Every flag sphere reduces to the octahedron by repeatedly
contracting belt-free edges, and the reduction is recorded as a replayable
certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .canonical import isomorphic
from .errors import (
    FlagsphereError,
    FormatError,
    InternalMinimalityViolation,
    LinkConditionViolated,
    NotAnEdge,
    NotFlag,
)
from .flags import belt_covered_edges, edge_in_belt, is_flag
from .oracle import brute_belts, brute_is_flag, brute_isomorphic
from .sphere import SimplicialSphere, from_faces, octahedron


def _norm_edge(K: SimplicialSphere, e) -> tuple[int, int]:
    u, v = e
    if not K.has_edge(u, v):
        raise NotAnEdge(f"{{{u}, {v}}} is not an edge")
    return (u, v) if u < v else (v, u)


def link_condition(K: SimplicialSphere, e) -> bool:
    """True iff contracting ``e`` yields a simplicial sphere.

    Requires the common neighbors of the endpoints to be exactly the two
    apexes of the edge's faces, and additionally that the apex pair is not
    itself joined to both endpoints by faces (that last case occurs only
    on the tetrahedron, whose contractions collapse).
    """
    u, v = _norm_edge(K, e)
    common = K.neighbors(u) & K.neighbors(v)
    apexes = {w for w in common if K.has_face((u, v, w))}
    if common != apexes:
        return False
    a, b = sorted(apexes)
    return not (K.has_face((u, a, b)) and K.has_face((v, a, b)))


def contract_mapped(K: SimplicialSphere, e) -> tuple[SimplicialSphere, tuple[int, ...]]:
    """Contract ``e``, returning the sphere and the old->new label map.

    The merged vertex keeps the smaller endpoint label and the remaining
    labels are compacted to 0..n-2.
    """
    u, v = _norm_edge(K, e)
    if not link_condition(K, (u, v)):
        raise LinkConditionViolated(
            f"contracting {{{u}, {v}}} would not produce a simplicial sphere"
        )
    relabel = tuple(w if w < v else (u if w == v else w - 1) for w in range(K.n))
    faces = [
        (relabel[x], relabel[y], relabel[z])
        for x, y, z in K.faces
        if not (u in (x, y, z) and v in (x, y, z))
    ]
    return from_faces(K.n - 1, faces), relabel


def contract(K: SimplicialSphere, e) -> SimplicialSphere:
    """Contract ``e`` (see contract_mapped; drops the relabeling map)."""
    return contract_mapped(K, e)[0]


def is_flag_contractible(K: SimplicialSphere, e) -> bool:
    """For flag ``K``: does contracting ``e`` keep the sphere flag?"""
    if not is_flag(K):
        raise NotFlag(f"sphere on {K.n} vertices is not flag")
    u, v = _norm_edge(K, e)
    return not edge_in_belt(K, (u, v))


def is_minimal(K: SimplicialSphere) -> bool:
    """True iff no flag-preserving contraction exists (every edge belted)."""
    if not is_flag(K):
        raise NotFlag(f"sphere on {K.n} vertices is not flag")
    return len(belt_covered_edges(K)) == K.n_edges


def square_link_vertices(K: SimplicialSphere) -> set[int]:
    """Vertices of degree 4 whose link 4-cycle has no chord."""
    out = set()
    for v in range(K.n):
        if K.degree(v) != 4:
            continue
        a, b, c, d = K.link_cycle(v)
        if not K.has_edge(a, c) and not K.has_edge(b, d):
            out.add(v)
    return out


@dataclass(frozen=True)
class CertStep:
    """One contraction: the edge (in the current labeling) and the label map."""

    edge: tuple[int, int]
    relabel: tuple[int, ...]


@dataclass(frozen=True)
class ContractionCertificate:
    start: SimplicialSphere
    steps: tuple[CertStep, ...]
    end: SimplicialSphere


@dataclass(frozen=True)
class CertificateCheck:
    """Boolean verdict plus a first-failure diagnostic."""

    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def reduce_to_octahedron(K: SimplicialSphere) -> ContractionCertificate:
    """Greedily contract the first belt-free edge until 6 vertices remain.

    Edges are tried in lexicographic (min, max) order, so the certificate
    is a pure function of the input labeling.  A flag sphere on more than
    6 vertices always has a belt-free edge; running out of them is an
    internal failure, not a caller error.
    """
    if not is_flag(K):
        raise NotFlag(f"sphere on {K.n} vertices is not flag")
    cur = K
    steps = []
    while cur.n > 6:
        covered = belt_covered_edges(cur)
        edge = next((e for e in cur.edges if e not in covered), None)
        if edge is None:
            raise InternalMinimalityViolation(
                f"flag sphere on {cur.n} vertices has every edge in a belt"
            )
        cur, relabel = contract_mapped(cur, edge)
        steps.append(CertStep(edge, relabel))
    if not isomorphic(cur, octahedron()):
        raise InternalMinimalityViolation(
            "reduction ended on a 6-vertex sphere that is not the octahedron"
        )
    return ContractionCertificate(K, tuple(steps), cur)


def verify_certificate(cert: ContractionCertificate) -> CertificateCheck:
    """Replay a certificate against brute-force predicates only.

    Checks the step count, flagness and belt-freeness at every step, the
    recorded relabelings, exact equality of the replayed end, and that the
    end is the octahedron.  Never raises on bad certificates; the verdict
    carries the first failure.
    """

    def fail(reason: str) -> CertificateCheck:
        return CertificateCheck(False, reason)

    if len(cert.steps) != cert.start.n - 6:
        return fail(
            f"expected {cert.start.n - 6} steps for {cert.start.n} vertices,"
            f" certificate has {len(cert.steps)}"
        )
    cur = cert.start
    for idx, step in enumerate(cert.steps):
        if not brute_is_flag(cur):
            return fail(f"step {idx}: sphere is not flag")
        u, v = step.edge
        if not cur.has_edge(u, v):
            return fail(f"step {idx}: {{{u}, {v}}} is not an edge")
        if any({u, v} <= belt.vertices for belt in brute_belts(cur)):
            return fail(f"step {idx}: edge {{{u}, {v}}} lies in a belt")
        try:
            nxt, relabel = contract_mapped(cur, (u, v))
        except FlagsphereError as exc:
            return fail(f"step {idx}: contraction failed: {exc}")
        if relabel != step.relabel:
            return fail(f"step {idx}: recorded relabeling does not match replay")
        cur = nxt
    if cur != cert.end:
        return fail("replayed end sphere differs from recorded end")
    if not brute_is_flag(cur):
        return fail("end sphere is not flag")
    if not brute_isomorphic(cur, octahedron()):
        return fail("end sphere is not the octahedron")
    return CertificateCheck(True, "ok")


_CERT_FORMAT = "contraction-certificate"
_CERT_VERSION = 1


def _sphere_obj(K: SimplicialSphere) -> dict:
    return {"n": K.n, "faces": [list(f) for f in K.faces]}


def _sphere_from_obj(obj, what: str) -> SimplicialSphere:
    if (
        not isinstance(obj, dict)
        or not isinstance(obj.get("n"), int)
        or not isinstance(obj.get("faces"), list)
    ):
        raise FormatError(f"certificate {what} must be an object with n and faces")
    return from_faces(obj["n"], [tuple(f) for f in obj["faces"]])


def certificate_to_json(cert: ContractionCertificate) -> str:
    obj = {
        "format": _CERT_FORMAT,
        "version": _CERT_VERSION,
        "start": _sphere_obj(cert.start),
        "steps": [
            {"edge": list(s.edge), "relabel": list(s.relabel)} for s in cert.steps
        ],
        "end": _sphere_obj(cert.end),
    }
    return json.dumps(obj, indent=2) + "\n"


def certificate_from_json(text: str) -> ContractionCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("format") != _CERT_FORMAT:
        raise FormatError("not a contraction certificate")
    if obj.get("version") != _CERT_VERSION:
        raise FormatError(f"unsupported certificate version {obj.get('version')!r}")
    raw_steps = obj.get("steps")
    if not isinstance(raw_steps, list):
        raise FormatError("certificate steps must be a list")
    steps = []
    for i, s in enumerate(raw_steps):
        if (
            not isinstance(s, dict)
            or not isinstance(s.get("edge"), list)
            or len(s["edge"]) != 2
            or not all(isinstance(x, int) for x in s["edge"])
            or not isinstance(s.get("relabel"), list)
            or not all(isinstance(x, int) for x in s["relabel"])
        ):
            raise FormatError(f"certificate step {i} is malformed")
        steps.append(CertStep((s["edge"][0], s["edge"][1]), tuple(s["relabel"])))
    return ContractionCertificate(
        _sphere_from_obj(obj.get("start"), "start"),
        tuple(steps),
        _sphere_from_obj(obj.get("end"), "end"),
    )
