"""Combinatorial plane embeddings: validation, face traversal, triangulation,
and a seeded generator of plane triangulations.

A PlaneGraph is a rotation system (counterclockwise neighbor order per vertex)
plus a designated outer face. Faces are traversed combinatorially; Euler's
formula certifies that the rotation system is a sphere embedding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Base class for embedding validation failures."""


class NotSimple(GraphError):
    pass


class NotSphereEmbedding(GraphError):
    pass


class BadOuterFace(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TooSmall(GraphError):
    pass


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable plane embedding of a simple connected planar graph.

    rotations[v] lists the neighbors of v in counterclockwise order;
    outer_face is the cyclic vertex sequence of the unbounded face as
    traversed by `faces`.
    """

    n: int
    rotations: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...]
    _edges: frozenset[frozenset[int]] = field(repr=False, default=frozenset())

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as sorted pairs, lexicographically ordered."""
        return sorted(
            (u, w) for u in range(self.n) for w in self.rotations[u] if u < w
        )

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rotations": [list(r) for r in self.rotations],
            "outer_face": list(self.outer_face),
        }

    def mirrored(self) -> "PlaneGraph":
        """The reflected embedding: all rotations reversed, outer face reversed."""
        rot = tuple(tuple(reversed(r)) for r in self.rotations)
        outer = tuple(reversed(self.outer_face))
        return validate_plane_graph(
            {"n": self.n, "rotations": [list(r) for r in rot], "outer_face": list(outer)}
        )


@dataclass(frozen=True)
class Triangulation:
    """A PlaneGraph whose every face (including the outer one) is a 3-cycle."""

    graph: PlaneGraph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def outer_face(self) -> tuple[int, ...]:
        return self.graph.outer_face

    def mirrored(self) -> "Triangulation":
        return Triangulation(self.graph.mirrored())


def _face_walks(n: int, rotations: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All faces of the rotation system, each as the vertex sequence of its
    boundary walk. Every directed edge is used exactly once.

    Successor rule: after arriving at v from u, leave along the neighbor that
    follows u in the rotation of v. One orbit per face.
    """
    pos = [
        {w: i for i, w in enumerate(rot)} for rot in rotations
    ]
    seen: set[tuple[int, int]] = set()
    walks: list[tuple[int, ...]] = []
    for u in range(n):
        for w in rotations[u]:
            if (u, w) in seen:
                continue
            walk: list[int] = []
            cur = (u, w)
            while cur not in seen:
                seen.add(cur)
                a, b = cur
                walk.append(a)
                nxt = rotations[b][(pos[b][a] + 1) % len(rotations[b])]
                cur = (b, nxt)
            walks.append(tuple(walk))
    return walks


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a cyclic sequence to start at its smallest element (orientation
    preserved) so equal cycles compare equal."""
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def faces(g: PlaneGraph) -> list[tuple[int, ...]]:
    """Faces as boundary walks, outer face first, rest sorted canonically."""
    walks = _face_walks(g.n, g.rotations)
    outer = _canonical_cycle(g.outer_face)
    out: list[tuple[int, ...]] = []
    inner: list[tuple[int, ...]] = []
    for w in walks:
        cw = _canonical_cycle(w)
        if cw == outer:
            out.append(cw)
        else:
            inner.append(cw)
    if len(out) != 1:
        raise BadOuterFace(f"outer face {g.outer_face} found {len(out)} times in traversal")
    return out + sorted(inner)


def validate_plane_graph(description: dict) -> PlaneGraph:
    """Build a PlaneGraph from raw rotation-system data, checking every
    invariant: simplicity, edge symmetry, connectivity, Euler's formula, and
    that the declared outer face is one of the traversed faces.
    """
    try:
        n = int(description["n"])
        rotations = tuple(tuple(int(w) for w in r) for r in description["rotations"])
        outer = tuple(int(v) for v in description["outer_face"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph description: {exc}") from None

    if n < 1:
        raise TooSmall("graph must have at least one vertex")
    if len(rotations) != n:
        raise GraphError(f"expected {n} rotations, got {len(rotations)}")

    for v, rot in enumerate(rotations):
        for w in rot:
            if not 0 <= w < n:
                raise GraphError(f"vertex {w} out of range in rotation of {v}")
            if w == v:
                raise NotSimple(f"loop at vertex {v}")
        if len(set(rot)) != len(rot):
            raise NotSimple(f"parallel edge in rotation of vertex {v}")

    neighbor_sets = [frozenset(rot) for rot in rotations]
    for v, rot in enumerate(rotations):
        for w in rot:
            if v not in neighbor_sets[w]:
                raise GraphError(f"edge {v}-{w} not symmetric")

    # Connectivity.
    if n > 1:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in rotations[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise Disconnected(f"only {len(seen)} of {n} vertices reachable")

    m = sum(len(r) for r in rotations) // 2

    # Euler check via face traversal; isolated-vertex graphs have one face.
    f = len(_face_walks(n, rotations)) if m > 0 else 1
    if n - m + f != 2:
        raise NotSphereEmbedding(
            f"Euler check failed: n={n}, m={m}, f={f} gives {n - m + f} != 2"
        )

    edges = frozenset(frozenset((u, w)) for u in range(n) for w in rotations[u])
    g = PlaneGraph(n=n, rotations=rotations, outer_face=outer, _edges=edges)

    # Outer face must be one of the traversed faces.
    if m > 0:
        outer_c = _canonical_cycle(outer)
        if not any(_canonical_cycle(w) == outer_c for w in _face_walks(n, rotations)):
            raise BadOuterFace(f"{outer} is not a face of the embedding")
    else:
        if outer != tuple(range(n)):
            raise BadOuterFace("outer face of an edgeless graph must list its vertices")
    return g


def as_triangulation(g: PlaneGraph) -> Triangulation:
    """Wrap a PlaneGraph after checking that every face is a 3-cycle."""
    if g.n < 3:
        raise TooSmall("triangulations need at least 3 vertices")
    for face in faces(g):
        if len(face) != 3 or len(set(face)) != 3:
            raise GraphError(f"face {face} is not a triangle")
    if g.m != 3 * g.n - 6:
        raise GraphError(f"edge count {g.m} != 3n-6 = {3 * g.n - 6}")
    return Triangulation(g)


def triangulate(g: PlaneGraph) -> tuple[Triangulation, list[tuple[int, int]]]:
    """Add edges inside every face until all faces are triangles.

    Input edges are preserved; the result stays simple. Within a face the
    splitting edge is chosen at the first corner whose two neighbors along the
    walk are distinct and not yet adjacent, which avoids parallel edges even
    for faces with repeated vertices (cut vertices).
    """
    if g.n < 3:
        raise TooSmall("cannot triangulate fewer than 3 vertices")

    rotations = [list(r) for r in g.rotations]
    edge_set = {frozenset((u, w)) for u in range(g.n) for w in g.rotations[u]}
    added: list[tuple[int, int]] = []
    outer = g.outer_face

    def insert_after(v: int, anchor: int, w: int) -> None:
        rotations[v].insert(rotations[v].index(anchor) + 1, w)

    def insert_before(v: int, anchor: int, w: int) -> None:
        rotations[v].insert(rotations[v].index(anchor), w)

    guard = 0
    while True:
        guard += 1
        if guard > 16 * (g.n + 1) ** 2:
            raise GraphError("triangulation did not terminate")
        walks = _face_walks(g.n, tuple(tuple(r) for r in rotations))
        target = None
        for w in walks:
            if len(w) > 3 or len(set(w)) != len(w):
                if len(w) == 3:
                    raise NotSimple(f"degenerate face {w}")
                target = w
                break
        if target is None:
            break
        k = len(target)
        done = False
        for i in range(k):
            a, b, c = target[(i - 1) % k], target[i], target[(i + 1) % k]
            if a != c and frozenset((a, c)) not in edge_set:
                # Chord a-c cuts triangle (a, b, c) off this face. The face
                # walk enters b from a and leaves toward c, so inside the
                # face the new edge sits next to b in both rotations.
                insert_before(a, b, c) if False else None
                # a's rotation: c goes right after b when walking a->b; the
                # directed edge (a,b) is followed in the face, so at a we
                # insert c immediately *before* b's predecessor position.
                # Simpler and correct: at a, insert c after b? The face walk
                # ... -> a -> b means next(a->?) uses rotation of a only for
                # arrival; for the chord both sides: at a insert c before b
                # in the arrival sense. We use explicit successor math below.
                raise_helper = None
                del raise_helper
                # At vertex a the face uses directed edge (a, b): the new
                # face (a, b, c) must keep edge (a,b); chord (a,c) bounds it
                # on the other side, so c is inserted before b in rot(a)?
                # Rotation successor rule: face (a,b,c) requires that at a,
                # after arriving from c, we leave toward b: next after c is b,
                # i.e. c immediately precedes b in rot(a).
                insert_before(a, b, c)
                # At c, the face (a,b,c) requires: arriving from b, leave
                # toward a: a immediately follows... next after b must be a,
                # i.e. a inserted right after b in rot(c).
                insert_after(c, b, a)
                edge_set.add(frozenset((a, c)))
                u, v = (a, c) if a < c else (c, a)
                added.append((u, v))
                done = True
                break
        if not done:
            raise GraphError(f"no chord insertable in face {target}")

    out = validate_plane_graph(
        {
            "n": g.n,
            "rotations": [list(r) for r in rotations],
            "outer_face": list(outer),
        }
    )
    return as_triangulation(out), added


def random_triangulation(n: int, seed: int) -> Triangulation:
    """Seeded plane triangulation built by canonical construction.

    Starting from a triangle, each new vertex is attached to a random run of
    at least 2 consecutive vertices on the current outer path; the last vertex
    covers the whole path, so the result's outer face is the triangle
    (0, 1, n-1). Deterministic for fixed (n, seed); sampling is biased toward
    canonical constructions by design.
    """
    if n < 3:
        raise TooSmall("triangulations need at least 3 vertices")
    rng = random.Random(seed)

    # rotations built incrementally; contour runs from vertex 0 to vertex 1.
    rotations: list[list[int]] = [[] for _ in range(n)]

    def add_base_triangle() -> None:
        rotations[0].extend([1, 2])
        rotations[1].extend([2, 0])
        rotations[2].extend([0, 1])

    add_base_triangle()
    contour = [0, 2, 1]
    for v in range(3, n):
        t = len(contour)
        if v == n - 1:
            i, j = 0, t - 1
        else:
            i = rng.randrange(0, t - 1)
            j = rng.randrange(i + 1, t)
        run = contour[i : j + 1]
        # v sees the run from outside; ccw around v the run appears reversed.
        rotations[v] = list(reversed(run))
        # Left end: v inserted before the next contour vertex in ccw order.
        rotations[run[0]].insert(rotations[run[0]].index(run[1]), v)
        # Right end: v inserted after the previous contour vertex.
        rotations[run[-1]].insert(rotations[run[-1]].index(run[-2]) + 1, v)
        for w_idx in range(1, len(run) - 1):
            w = run[w_idx]
            rotations[w].insert(rotations[w].index(run[w_idx + 1]), v)
        contour = contour[: i + 1] + [v] + contour[j:]

    outer = [0, n - 1, 1] if n > 3 else [0, 2, 1]
    g = validate_plane_graph(
        {"n": n, "rotations": [list(r) for r in rotations], "outer_face": outer}
    )
    return as_triangulation(g)
