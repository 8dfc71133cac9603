"""Surface embeddings of multigraphs via (signed) rotation systems.

Darts: edge e has two ends 2e and 2e+1; twin(d) = d ^ 1. A rotation system
is a cyclic order of darts at each vertex plus a sign per edge (+1/-1, all
+1 in orientable mode; signs are gauge-fixed to +1 on a spanning tree in the
nonorientable search). Faces are traced on states (dart, side); orbits come
in reversal pairs, so the face count is half the orbit count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .errors import DisconnectedGraphError, PreconditionError, check_guard
from .graph import Cycle, MultiGraph, betti


@dataclass(frozen=True)
class RotationSystem:
    """rotations[v] = cyclic order of darts at v; signs[e] in {+1, -1}."""

    rotations: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]

    def validate(self, g: MultiGraph) -> None:
        if len(self.rotations) != g.n or len(self.signs) != g.m:
            raise PreconditionError("rotation system shape mismatch")
        if any(s not in (1, -1) for s in self.signs):
            raise PreconditionError("edge signs must be +1 or -1")
        seen: set[int] = set()
        for v, rot in enumerate(self.rotations):
            for d in rot:
                e, side = divmod(d, 2)
                if not 0 <= e < g.m:
                    raise PreconditionError(f"dart {d} out of range")
                if g.edges[e][side] != v:
                    raise PreconditionError(f"dart {d} listed at wrong vertex")
                if d in seen:
                    raise PreconditionError(f"dart {d} listed twice")
                seen.add(d)
        if len(seen) != 2 * g.m:
            raise PreconditionError("every edge end must appear exactly once")

    def orientable(self) -> bool:
        return all(s == 1 for s in self.signs)


@dataclass(frozen=True)
class EmbeddingCertificate:
    """2-cell embedding: faces are closed dart walks; chi = n - m + #faces."""

    rotation: RotationSystem
    faces: tuple[tuple[int, ...], ...]
    chi: int

    def to_json(self) -> str:
        payload = {
            "chi": self.chi,
            "orientable": self.rotation.orientable(),
            "rotations": [list(r) for r in self.rotation.rotations],
            "signs": list(self.rotation.signs),
            "faces": [list(f) for f in self.faces],
        }
        return json.dumps(payload, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "EmbeddingCertificate":
        data = json.loads(text)
        rot = RotationSystem(tuple(tuple(r) for r in data["rotations"]),
                             tuple(data["signs"]))
        return EmbeddingCertificate(rot, tuple(tuple(f) for f in data["faces"]),
                                    data["chi"])


def _dart_tables(g: MultiGraph, rot: RotationSystem):
    """next/prev dart in the cyclic order at each dart's own vertex."""
    nxt = [0] * (2 * g.m)
    prv = [0] * (2 * g.m)
    for order in rot.rotations:
        k = len(order)
        for i, d in enumerate(order):
            nxt[d] = order[(i + 1) % k]
            prv[d] = order[(i - 1) % k]
    return nxt, prv


def trace_faces(g: MultiGraph, rot: RotationSystem) -> list[tuple[int, ...]]:
    """Boundary walks (dart sequences) of the 2-cell embedding given by rot.

    States are (dart, side); the successor crosses to the twin, flips the
    side on negative edges, and turns by the rotation (forward on side 0,
    backward on side 1). Orbits pair up as walk reversals; one walk per pair
    is returned, each orbit pair giving one face.
    """
    rot.validate(g)
    nxt, prv = _dart_tables(g, rot)
    signs = rot.signs
    total = 4 * g.m
    seen = [False] * total
    orbits: list[list[int]] = []
    for s0 in range(total):
        if seen[s0]:
            continue
        walk = []
        s = s0
        while not seen[s]:
            seen[s] = True
            d, side = divmod(s, 2)
            walk.append(d)
            t = d ^ 1
            nside = side ^ (signs[d >> 1] < 0)
            s = ((nxt[t] if nside == 0 else prv[t]) << 1) | nside
        orbits.append(walk)
    assert len(orbits) % 2 == 0, "face orbits must pair into walk reversals"
    # Pair each orbit with its reversal (twin darts in reverse order).
    keyed: dict[tuple[int, ...], list[int]] = {}
    for i, walk in enumerate(orbits):
        keyed.setdefault(_cyclic_key(walk), []).append(i)
    taken = [False] * len(orbits)
    faces: list[tuple[int, ...]] = []
    for i, walk in enumerate(orbits):
        if taken[i]:
            continue
        taken[i] = True
        rev = [d ^ 1 for d in reversed(walk)]
        j = next(k for k in keyed.get(_cyclic_key(rev), ()) if not taken[k])
        taken[j] = True
        faces.append(tuple(min(walk, rev, key=_cyclic_key)))
    return sorted(faces, key=_cyclic_key)


def _cyclic_key(walk: Sequence[int]) -> tuple[int, ...]:
    k = len(walk)
    w = list(walk)
    best = None
    for i in range(k):
        cand = tuple(w[i:] + w[:i])
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


def certificate_chi(g: MultiGraph, rot: RotationSystem) -> tuple[int, list[tuple[int, ...]]]:
    faces = trace_faces(g, rot)
    return g.n - g.m + len(faces), faces


def verify_certificate(g: MultiGraph, cert: EmbeddingCertificate,
                       face_cycle: Cycle | None = None) -> bool:
    """Cheap re-verification: re-trace the stored rotation system and check
    the face list, Euler characteristic, and edge-side double counting."""
    chi, faces = certificate_chi(g, cert.rotation)
    if chi != cert.chi:
        return False
    if sorted(faces, key=_cyclic_key) != sorted(cert.faces, key=_cyclic_key):
        return False
    if sum(len(f) for f in faces) != 2 * g.m:
        return False
    per_edge = [0] * g.m
    for f in faces:
        for d in f:
            per_edge[d >> 1] += 1
    if any(c != 2 for c in per_edge):
        return False
    if face_cycle is not None and not _has_face(faces, face_cycle):
        return False
    return True


def _has_face(faces: Sequence[tuple[int, ...]], c: Cycle) -> bool:
    want = sorted(c.edge_ids)
    for f in faces:
        if len(f) == len(want) and sorted(d >> 1 for d in f) == want:
            return True
    return False


def _rotation_candidates(g: MultiGraph) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All rotation systems, lexicographic: the first dart at each vertex is
    pinned (cyclic order), remaining darts permuted."""
    from itertools import permutations

    darts_at = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        darts_at[u].append(2 * e)
        darts_at[v].append(2 * e + 1)
    per_vertex = []
    for v in range(g.n):
        ds = darts_at[v]
        if len(ds) <= 1:
            per_vertex.append([tuple(ds)])
        else:
            head, rest = ds[0], ds[1:]
            per_vertex.append([(head,) + p for p in permutations(rest)])
    for combo in product(*per_vertex):
        yield tuple(combo)


def _sign_candidates(g: MultiGraph, orientable: bool) -> Iterator[tuple[int, ...]]:
    """Sign vectors, gauge-fixed to +1 on a spanning tree; all +1 first."""
    if orientable:
        yield (1,) * g.m
        return
    tree: set[int] = set()
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    for x in queue:
        for e in g.incidence[x]:
            y = g.other_end(e, x)
            if not seen[y]:
                seen[y] = True
                tree.add(e)
                queue.append(y)
    free = [e for e in range(g.m) if e not in tree]
    for bits in product((1, -1), repeat=len(free)):
        signs = [1] * g.m
        for e, s in zip(free, bits):
            signs[e] = s
        yield tuple(signs)


def _search_space(g: MultiGraph, orientable: bool) -> int:
    import math

    size = 1
    for v in range(g.n):
        size *= math.factorial(max(g.degree(v) - 1, 0))
    if not orientable:
        size <<= betti(g)
    return size


def _fast_face_count(g: MultiGraph, nxt, prv, signs) -> int:
    total = 4 * g.m
    seen = bytearray(total)
    orbits = 0
    for s0 in range(total):
        if seen[s0]:
            continue
        orbits += 1
        s = s0
        while not seen[s]:
            seen[s] = True
            d, side = divmod(s, 2)
            t = d ^ 1
            nside = side ^ (signs[d >> 1] < 0)
            s = ((nxt[t] if nside == 0 else prv[t]) << 1) | nside
    return orbits // 2


def embeds_in(g: MultiGraph, chi: int, orientable: bool,
              face: Cycle | None = None,
              want_max: bool = False) -> EmbeddingCertificate | None:
    """Search rotation systems (and sign classes in nonorientable mode) for a
    2-cell embedding with Euler characteristic >= chi; first hit in
    lexicographic order wins. With want_max, exhaust the space and return a
    certificate attaining the maximum characteristic if it is >= chi.
    When face is given, the cycle must appear as a face boundary."""
    if not g.is_connected():
        raise DisconnectedGraphError("embedding search requires a connected graph")
    check_guard(_search_space(g, orientable), 10 ** 9, "embeds_in search space")
    best: tuple[int, RotationSystem] | None = None
    sign_list = list(_sign_candidates(g, orientable))
    for rotations in _rotation_candidates(g):
        rot0 = RotationSystem(rotations, (1,) * g.m)
        nxt, prv = _dart_tables(g, rot0)
        for signs in sign_list:
            nfaces = _fast_face_count(g, nxt, prv, signs)
            got = g.n - g.m + nfaces
            if got < chi:
                continue
            rot = RotationSystem(rotations, signs)
            if face is not None or not want_max:
                faces = trace_faces(g, rot)
                if face is not None and not _has_face(faces, face):
                    continue
                if not want_max:
                    return EmbeddingCertificate(rot, tuple(faces), got)
            if best is None or got > best[0]:
                best = (got, rot)
    if best is None:
        return None
    chi_best, rot = best
    return EmbeddingCertificate(rot, tuple(trace_faces(g, rot)), chi_best)


def embeds_with_face(g: MultiGraph, chi: int, orientable: bool,
                     c: Cycle) -> EmbeddingCertificate | None:
    """Embedding certificate in which c bounds a face, enabling extension
    arguments that attach a new vertex inside the disc."""
    return embeds_in(g, chi, orientable, face=c)


def embedding_systole_bound(b: int, chi: int) -> Fraction:
    """Upper bound 2/(b - 1 + chi) on sys(G) for a Betti-b graph embeddable
    with Euler characteristic chi."""
    if b - 1 + chi <= 0:
        raise PreconditionError("bound needs b - 1 + chi > 0")
    return Fraction(2, b - 1 + chi)
