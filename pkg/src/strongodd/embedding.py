"""Rotation systems, face tracing, and planar embeddings for the built families.

A rotation system fixes a cyclic order of neighbors around each vertex.  Face
tracing follows the standard next-dart rule: after traversing the dart
(u, v), continue with (v, w) where w is the successor of u in the rotation at
v.  The traced embedding has genus 0 exactly when V - E + F = 2, which is the
verdict ``verify_embedding`` reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InvalidRotationError, UnsupportedFamilyError
from .graphs import Bipyramid, BipyramidUnion, Cycle, FamilySpec, Graph, Wheel


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic neighbor order; a combinatorial embedding witness."""

    rotation: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "RotationSystem":
        return cls(tuple(tuple(r) for r in rows))

    def __len__(self) -> int:
        return len(self.rotation)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]


class EmbeddingCheck(NamedTuple):
    faces: int
    euler_ok: bool


def verify_embedding(g: Graph, rot: RotationSystem) -> EmbeddingCheck:
    """Trace every face of the embedding and test V - E + F = 2.

    Raises InvalidRotationError unless rot lists, for every vertex, exactly
    its neighbor set in some cyclic order.
    """
    if len(rot) != g.n:
        raise InvalidRotationError(f"rotation covers {len(rot)} vertices, graph has {g.n}")
    for v in range(g.n):
        if tuple(sorted(rot[v])) != g.adj[v]:
            raise InvalidRotationError(f"rotation at vertex {v} is not a permutation of its neighbors")
    succ: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        row = rot[v]
        d = len(row)
        for i, u in enumerate(row):
            succ[(v, u)] = row[(i + 1) % d]
    unvisited = {(u, v) for u in range(g.n) for v in g.adj[u]}
    faces = 0
    while unvisited:
        start = next(iter(unvisited))
        dart = start
        while True:
            unvisited.discard(dart)
            u, v = dart
            dart = (v, succ[(v, u)])
            if dart == start:
                break
        faces += 1
    return EmbeddingCheck(faces, g.n - g.edge_count + faces == 2)


def embed_family(spec: FamilySpec) -> RotationSystem:
    """A concrete genus-0 rotation system for a supported family spec.

    Supported: Cycle, Wheel, Bipyramid, BipyramidUnion.  The layout puts the
    cycle on a circle with the first apex inside and the second (when there
    is one) outside; for BipyramidUnion the glued apex lists the first cycle
    in reverse order followed by the second cycle in forward order.
    """
    if isinstance(spec, Cycle):
        n = spec.n
        return RotationSystem.from_lists([[(i - 1) % n, (i + 1) % n] for i in range(n)])
    if isinstance(spec, Wheel):
        n = spec.n
        hub = n
        rows = [[(i + 1) % n, hub, (i - 1) % n] for i in range(n)]
        rows.append(list(range(n)))
        return RotationSystem.from_lists(rows)
    if isinstance(spec, Bipyramid):
        n = spec.n
        x, y = n, n + 1
        rows = [[(i + 1) % n, x, (i - 1) % n, y] for i in range(n)]
        rows.append(list(range(n)))
        rows.append(list(range(n - 1, -1, -1)))
        return RotationSystem.from_lists(rows)
    if isinstance(spec, BipyramidUnion):
        m, n = spec.m, spec.n
        x1, y = m, m + 1
        c2 = [m + 2 + t for t in range(n)]
        x2 = m + n + 2
        rows: list[list[int]] = []
        for i in range(m):
            rows.append([(i + 1) % m, x1, (i - 1) % m, y])
        rows.append(list(range(m)))
        rows.append(list(range(m - 1, -1, -1)) + c2)
        # second bipyramid mirrored so that its boundary runs forward at y
        for t in range(n):
            rows.append([c2[(t - 1) % n], x2, c2[(t + 1) % n], y])
        rows.append(list(reversed(c2)))
        return RotationSystem.from_lists(rows)
    raise UnsupportedFamilyError(f"no embedding constructor for family {spec!r}")
