"""ADE Dynkin diagrams, positive roots, highest-root labels and the Dynkin involution.

Vertex numbering is fixed once and used everywhere:

* ``A_n``: ``1..n`` along the chain.
* ``D_n``: ``1..n-2`` along the chain, fork vertices ``n-1`` and ``n`` attached
  to ``n-2``.
* ``E_n``: ``1..n-1`` along the long chain, branch vertex ``n`` attached to
  chain vertex ``3``.

The affine vertex of an extended diagram is always ``rank + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .errors import DomainError, InvalidRankError, UnknownVertexError

Edge = tuple[int, int]
Root = tuple[int, ...]

DIAGRAM_TYPES = ("A", "D", "E")


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _adjacency(vertices: Iterable[int], edges: Iterable[Edge]) -> dict[int, frozenset[int]]:
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return {v: frozenset(ns) for v, ns in adj.items()}


@dataclass(frozen=True)
class DynkinDiagram:
    """A finite simply-laced Dynkin diagram in canonical numbering."""

    type: str
    rank: int
    edges: tuple[Edge, ...]

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @cached_property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return _adjacency(self.vertices, self.edges)

    def neighbours(self, v: int) -> frozenset[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertexError(f"{self.name} has no vertex {v}") from None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ExtendedDiagram:
    """An ADE diagram together with its affine vertex.

    For affine ``A_1`` the double bond is stored as a single edge and
    ``affine_a1`` is set; everything downstream only needs adjacency.
    """

    base: DynkinDiagram
    affine_edges: tuple[int, ...]
    affine_a1: bool = False
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    @property
    def affine_vertex(self) -> int:
        return self.base.rank + 1

    @property
    def name(self) -> str:
        return f"~{self.base.name}"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.base.rank + 2))

    @property
    def edges(self) -> tuple[Edge, ...]:
        extra = tuple(_edge(v, self.affine_vertex) for v in self.affine_edges)
        return tuple(sorted(self.base.edges + extra))

    @cached_property
    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return _adjacency(self.vertices, self.edges)

    @cached_property
    def labels(self) -> Mapping[int, int]:
        labels = dict(highest_root_labels(self.base))
        labels[self.affine_vertex] = 1
        return labels

    def neighbours(self, v: int) -> frozenset[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertexError(f"{self.name} has no vertex {v}") from None

    def components_without(self, v: int) -> tuple[frozenset[int], ...]:
        """Connected components of the diagram once ``v`` is deleted."""
        if v not in self.adjacency:
            raise UnknownVertexError(f"{self.name} has no vertex {v}")
        return _components(self.adjacency, v)

    def restricted_involution(self, v: int) -> Mapping[int, int]:
        """Product of the Dynkin involutions of the components left after deleting ``v``.

        ``v`` itself is fixed.
        """
        if v not in self._cache:
            perm = {v: v}
            for comp in self.components_without(v):
                perm.update(component_involution(comp, self.adjacency))
            self._cache[v] = perm
        return self._cache[v]


def _components(adj: Mapping[int, frozenset[int]], removed: int) -> tuple[frozenset[int], ...]:
    seen = {removed}
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack, comp = [start], set()
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.add(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return tuple(comps)


# -- construction --------------------------------------------------------------


def validate_rank(diagram_type: str, rank: int) -> None:
    if diagram_type not in DIAGRAM_TYPES:
        raise InvalidRankError(f"unknown diagram type {diagram_type!r}; expected one of A, D, E")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InvalidRankError(f"rank must be an integer, got {rank!r}")
    if diagram_type == "A" and rank < 1:
        raise InvalidRankError(f"A_n needs n >= 1, got {rank}")
    if diagram_type == "D" and rank < 4:
        raise InvalidRankError(f"D_n needs n >= 4, got {rank}")
    if diagram_type == "E" and rank not in (6, 7, 8):
        raise InvalidRankError(f"E_n needs n in {{6, 7, 8}}, got {rank}")


@lru_cache(maxsize=None)
def build_diagram(diagram_type: str, rank: int) -> DynkinDiagram:
    """Return the canonical ``diagram_type``/``rank`` diagram.

    >>> build_diagram("E", 6).edges
    ((1, 2), (2, 3), (3, 4), (3, 6), (4, 5))
    """
    validate_rank(diagram_type, rank)
    if diagram_type == "A":
        edges = [(i, i + 1) for i in range(1, rank)]
    elif diagram_type == "D":
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
    else:
        edges = [(i, i + 1) for i in range(1, rank - 1)]
        edges.append((3, rank))
    return DynkinDiagram(diagram_type, rank, tuple(sorted(edges)))


def parse_diagram(name: str) -> DynkinDiagram:
    """Parse names like ``"E6"``, ``"d5"`` or ``"A12"``."""
    text = name.strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise InvalidRankError(f"cannot parse diagram name {name!r}")
    return build_diagram(text[0], int(text[1:]))


def all_diagrams(max_a: int = 12, max_d: int = 12) -> list[DynkinDiagram]:
    out = [build_diagram("A", n) for n in range(1, max_a + 1)]
    out += [build_diagram("D", n) for n in range(4, max_d + 1)]
    out += [build_diagram("E", n) for n in (6, 7, 8)]
    return out


# -- roots ---------------------------------------------------------------------


def cartan_matrix(diagram: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    n = diagram.rank
    rows = []
    for i in range(1, n + 1):
        nbrs = diagram.neighbours(i)
        rows.append(tuple(2 if j == i else (-1 if j in nbrs else 0) for j in range(1, n + 1)))
    return tuple(rows)


@lru_cache(maxsize=None)
def positive_roots(diagram: DynkinDiagram) -> tuple[Root, ...]:
    """All positive roots as coefficient vectors over the simple roots.

    Built by closure from the simple roots, one height at a time, using the
    root-string criterion: ``alpha + alpha_i`` is a root iff ``p - <alpha, alpha_i> > 0``
    where ``p`` is how far ``alpha - k alpha_i`` stays a root. Sorted by
    height, then lexicographically.
    """
    n = diagram.rank
    cartan = cartan_matrix(diagram)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = sorted(simple)
    while layer:
        nxt = set()
        for alpha in layer:
            for i in range(n):
                pairing = sum(cartan[i][j] * alpha[j] for j in range(n))
                p = 0
                probe = list(alpha)
                while True:
                    probe[i] -= 1
                    if tuple(probe) not in found:
                        break
                    p += 1
                if p - pairing > 0:
                    beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
                    if beta not in found:
                        nxt.add(beta)
        found |= nxt
        layer = sorted(nxt)
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


def highest_root(diagram: DynkinDiagram) -> Root:
    roots = positive_roots(diagram)
    top = roots[-1]
    if len(roots) > 1 and sum(roots[-2]) == sum(top):
        raise AssertionError(f"{diagram} has no unique highest root")
    return top


def highest_root_labels(diagram: DynkinDiagram) -> dict[int, int]:
    """Coefficient of each simple root in the highest root, keyed by vertex."""
    return {v: c for v, c in zip(diagram.vertices, highest_root(diagram))}


# -- involution ----------------------------------------------------------------


def dynkin_involution(diagram: DynkinDiagram) -> dict[int, int]:
    """The canonical diagram involution as a vertex permutation.

    Chain reversal for ``A_n``, fork swap for ``D_n`` with ``n`` odd, the
    reflection of ``E_6``; the identity otherwise (including ``D_4``).
    """
    n = diagram.rank
    perm = {v: v for v in diagram.vertices}
    if diagram.type == "A":
        perm = {v: n + 1 - v for v in diagram.vertices}
    elif diagram.type == "D" and n % 2 == 1:
        perm[n - 1], perm[n] = n, n - 1
    elif diagram.type == "E" and n == 6:
        perm.update({1: 5, 2: 4, 4: 2, 5: 1})
    return perm


def component_involution(
    component: Iterable[int], adjacency: Mapping[int, Iterable[int]]
) -> dict[int, int]:
    """Dynkin involution of a connected ADE subgraph given in arbitrary numbering.

    The component's type is recognised from its shape: a path is ``A``; a tree
    with one trivalent vertex and arms ``(1, 1, k)`` is ``D_{k+3}``; arms
    ``(1, 2, 2)``, ``(1, 2, 3)``, ``(1, 2, 4)`` are ``E_6``, ``E_7``, ``E_8``.
    """
    comp = frozenset(component)
    local = {v: sorted(w for w in adjacency[v] if w in comp) for v in comp}
    n_edges = sum(len(ns) for ns in local.values()) // 2
    if n_edges != len(comp) - 1:
        raise ValueError(f"component {sorted(comp)} is not a tree")
    branch = [v for v, ns in local.items() if len(ns) >= 3]

    if not branch:
        if len(comp) == 1:
            return {v: v for v in comp}
        ends = sorted(v for v, ns in local.items() if len(ns) == 1)
        path = _walk_arm(local, None, ends[0])
        return {v: w for v, w in zip(path, reversed(path))}

    if len(branch) != 1 or len(local[branch[0]]) != 3:
        raise ValueError(f"component {sorted(comp)} is not of ADE shape")
    centre = branch[0]
    arms = sorted((_walk_arm(local, centre, start) for start in local[centre]), key=lambda a: (len(a), a))
    lengths = tuple(len(a) for a in arms)
    perm = {v: v for v in comp}
    if lengths[:2] == (1, 1):
        rank = len(comp)
        if rank % 2 == 1:
            perm[arms[0][0]], perm[arms[1][0]] = arms[1][0], arms[0][0]
        return perm
    if lengths == (1, 2, 2):
        for u, w in zip(arms[1], arms[2]):
            perm[u], perm[w] = w, u
        return perm
    if lengths in ((1, 2, 3), (1, 2, 4)):
        return perm
    raise ValueError(f"component {sorted(comp)} with arms {lengths} is not of ADE shape")


def _walk_arm(local: Mapping[int, list[int]], prev: int | None, start: int) -> list[int]:
    arm = [start]
    while True:
        nxt = [w for w in local[arm[-1]] if w != prev and w not in arm]
        if len(local[arm[-1]]) > 2 or not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


# -- affine extension ----------------------------------------------------------


def _affine_attachment(diagram: DynkinDiagram) -> tuple[int, ...]:
    n = diagram.rank
    if diagram.type == "A":
        return (1,) if n == 1 else (1, n)
    if diagram.type == "D":
        return (2,)
    return {6: (6,), 7: (1,), 8: (7,)}[n]


@lru_cache(maxsize=None)
def extend_affine(diagram: DynkinDiagram) -> ExtendedDiagram:
    """Attach the affine vertex (label 1) at its canonical position."""
    return ExtendedDiagram(
        base=diagram,
        affine_edges=_affine_attachment(diagram),
        affine_a1=diagram.type == "A" and diagram.rank == 1,
    )


def balance_defect(diagram: DynkinDiagram) -> dict[int, int]:
    """``2 * label(v) - sum of neighbour labels`` for each vertex of ``diagram``."""
    labels = highest_root_labels(diagram)
    return {v: 2 * labels[v] - sum(labels[w] for w in diagram.neighbours(v)) for v in diagram.vertices}


def vertices_with_label(diagram: DynkinDiagram, label: int) -> list[int]:
    labels = highest_root_labels(diagram)
    return [v for v in diagram.vertices if labels[v] == label]


AMBIENT_ORDER = (("A", 1), ("D", 4), ("E", 6), ("E", 7), ("E", 8))


def ambient_for_length(ell: int) -> tuple[DynkinDiagram, int]:
    """Smallest diagram with a vertex labelled ``ell``, and its first such vertex."""
    for kind, rank in AMBIENT_ORDER:
        diagram = build_diagram(kind, rank)
        found = vertices_with_label(diagram, ell)
        if found:
            return diagram, found[0]
    raise DomainError(f"no ADE vertex has label {ell!r}; labels run 1..6")
