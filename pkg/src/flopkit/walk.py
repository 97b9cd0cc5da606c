"""Wall crossing by iterated Dynkin involutions.

A chamber is an extended diagram with some vertices shaded. Crossing the wall
of a shaded vertex ``v`` deletes ``v``, applies the Dynkin involution to every
remaining connected component, and moves the other shaded vertices along.
The wall is labelled by the extended-diagram label of ``v``'s position.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, NotShadedError, PeriodGuardError, UnknownVertexError
from .rootsys import DynkinDiagram, ExtendedDiagram, extend_affine

MAX_CROSSINGS = 10_000


@dataclass(frozen=True)
class ChamberState:
    extended: ExtendedDiagram
    shaded: frozenset[int]
    last_crossed: int | None = None

    def __post_init__(self) -> None:
        if not self.shaded:
            raise DomainError("a chamber needs at least one shaded vertex")
        unknown = self.shaded - set(self.extended.vertices)
        if unknown:
            raise UnknownVertexError(f"{self.extended.name} has no vertices {sorted(unknown)}")
        if self.last_crossed is not None and self.last_crossed not in self.shaded:
            raise DomainError(f"last crossed vertex {self.last_crossed} is not shaded")

    def label(self, v: int) -> int:
        return self.extended.labels[v]


@dataclass(frozen=True)
class WallRecord:
    position: int
    label: int
    crossed: int


@dataclass(frozen=True)
class Period:
    """One period of the 1D walk between consecutive label-1 walls."""

    N: int
    equator_labels: tuple[int, ...]
    state_period: int


def initial_state(diagram: DynkinDiagram, chosen: Iterable[int]) -> ChamberState:
    """Shade ``chosen`` plus the affine vertex of the extended diagram."""
    chosen = frozenset(chosen)
    if not chosen:
        raise DomainError("choose at least one vertex")
    unknown = chosen - set(diagram.vertices)
    if unknown:
        raise UnknownVertexError(f"{diagram.name} has no vertices {sorted(unknown)}")
    ext = extend_affine(diagram)
    return ChamberState(ext, chosen | {ext.affine_vertex})


def cross(state: ChamberState, v: int, position: int = 0) -> tuple[ChamberState, WallRecord]:
    if v not in state.shaded:
        raise NotShadedError(f"vertex {v} is not shaded in {sorted(state.shaded)}")
    perm = state.extended.restricted_involution(v)
    shaded = frozenset(perm[w] for w in state.shaded)
    new = ChamberState(state.extended, shaded, v)
    return new, WallRecord(position, state.label(v), v)


def _next_vertex(state: ChamberState) -> int:
    others = sorted(state.shaded - {state.last_crossed})
    if len(others) != 1:
        raise DomainError("the 1D walk needs exactly two shaded vertices")
    return others[0]


def walk_1d(diagram: DynkinDiagram, vertex: int, count: int) -> list[tuple[ChamberState, WallRecord]]:
    """Cross ``count`` walls to the right, starting with the chosen vertex."""
    if count < 1:
        raise DomainError("count must be at least 1")
    state = initial_state(diagram, [vertex])
    out = []
    v = vertex
    for k in range(1, count + 1):
        state, wall = cross(state, v, k)
        out.append((state, wall))
        v = _next_vertex(state)
    return out


def label_sequence_1d(diagram: DynkinDiagram, vertex: int, count: int) -> list[WallRecord]:
    """
    Wall labels met walking right from the fundamental chamber.

    >>> from flopkit.rootsys import build_diagram
    >>> [w.label for w in label_sequence_1d(build_diagram("E", 6), 3, 6)]
    [3, 2, 3, 1, 3, 2]
    """
    return [wall for _, wall in walk_1d(diagram, vertex, count)]


def period_1d(diagram: DynkinDiagram, vertex: int, max_crossings: int = MAX_CROSSINGS) -> Period:
    """Number of walls per translation period and their labels.

    The walk is run until its (shaded set, last crossed) state recurs. The
    translation generator carries a label-1 wall to the next one, so ``N`` is
    the spacing between label-1 walls; the spacing and the labels in between
    are checked to be identical across the whole state period.
    """
    state = initial_state(diagram, [vertex])
    v = vertex
    seen: dict[tuple[frozenset[int], int | None], int] = {}
    labels: list[int] = []
    for k in range(max_crossings):
        state, wall = cross(state, v, k + 1)
        key = (state.shaded, state.last_crossed)
        if key in seen:
            start = seen[key]
            cycle = labels[start:]
            break
        seen[key] = k
        labels.append(wall.label)
        v = _next_vertex(state)
    else:
        raise PeriodGuardError(f"walk on {diagram.name} vertex {vertex} did not close in {max_crossings} crossings")

    ones = [i for i, lab in enumerate(cycle) if lab == 1]
    if not ones:
        raise PeriodGuardError(f"walk on {diagram.name} vertex {vertex} met no label-1 wall")
    n = len(cycle) // len(ones)
    rotated = cycle[ones[0]:] + cycle[:ones[0]]
    blocks = {tuple(rotated[i:i + n]) for i in range(0, len(rotated), n)}
    if n * len(ones) != len(cycle) or len(blocks) != 1:
        raise PeriodGuardError(f"walk on {diagram.name} vertex {vertex} is not translation periodic")
    return Period(n, tuple(rotated[:n]), len(cycle))


# -- chamber graphs ------------------------------------------------------------


@dataclass(frozen=True)
class ChamberEdge:
    source: int
    target: int
    label: int
    crossed: int


@dataclass(frozen=True)
class ChamberGraph:
    extended: ExtendedDiagram
    nodes: tuple[frozenset[int], ...]
    edges: tuple[ChamberEdge, ...]

    def to_dict(self) -> dict:
        return {
            "diagram": self.extended.base.name,
            "nodes": [sorted(s) for s in self.nodes],
            "edges": [
                {"from": e.source, "to": e.target, "label": e.label, "crossedVertex": e.crossed}
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def chamber_graph(diagram: DynkinDiagram, chosen: Iterable[int], max_depth: int) -> ChamberGraph:
    """Breadth-first closure of ``cross`` over every shaded choice.

    Chambers are identified by their shaded set. Each wall is reported once,
    with ``source <= target`` in discovery order.
    """
    chosen = frozenset(chosen)
    if not 1 <= len(chosen) <= 2:
        raise DomainError("chamber graphs take one or two chosen vertices")
    if max_depth < 1:
        raise DomainError("max_depth must be at least 1")
    start = initial_state(diagram, chosen)
    index = {start.shaded: 0}
    nodes = [start.shaded]
    edges: dict[tuple[int, int, int], ChamberEdge] = {}
    queue = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        if depth >= max_depth:
            continue
        here = index[state.shaded]
        for v in sorted(state.shaded):
            new, wall = cross(state, v)
            if new.shaded not in index:
                index[new.shaded] = len(nodes)
                nodes.append(new.shaded)
                queue.append((ChamberState(new.extended, new.shaded), depth + 1))
            there = index[new.shaded]
            lo, hi = min(here, there), max(here, there)
            edges.setdefault((lo, hi, v), ChamberEdge(lo, hi, wall.label, v))
    ordered = sorted(edges.values(), key=lambda e: (e.source, e.target, e.crossed))
    return ChamberGraph(start.extended, tuple(nodes), tuple(ordered))
