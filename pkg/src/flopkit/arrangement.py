"""Periodic wall arrangements built directly from restricted positive roots.

This is the geometric counterpart of :mod:`flopkit.walk`. Restricting every
positive root to the coordinates of the chosen vertices ``J`` gives integer
vectors ``c``; the walls are the hyperplanes ``c . theta = n`` for all integers
``n``. Everything is exact rational arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, EmptyWindowError, UnknownVertexError
from .rootsys import DynkinDiagram, positive_roots

RestrictedRoot = tuple[int, ...]
Point = tuple[Fraction, ...]


def restricted_roots(diagram: DynkinDiagram, J: Sequence[int]) -> tuple[RestrictedRoot, ...]:
    """J-coordinates of all positive roots with nonzero restriction, sorted."""
    J = tuple(J)
    if not 1 <= len(J) <= 2 or len(set(J)) != len(J):
        raise DomainError(f"J must be one or two distinct vertices, got {list(J)}")
    for j in J:
        if j not in diagram.vertices:
            raise UnknownVertexError(f"{diagram.name} has no vertex {j}")
    out = set()
    for root in positive_roots(diagram):
        c = tuple(root[j - 1] for j in J)
        if any(c):
            out.add(c)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Window:
    """Half-open box ``[lo, hi)``: low faces included, high faces excluded."""

    lo: Point
    hi: Point

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi) or not self.lo:
            raise DomainError("window corners must have the same positive dimension")
        if any(a >= b for a, b in zip(self.lo, self.hi)):
            raise EmptyWindowError(f"empty window {self}")

    @classmethod
    def of(cls, lo: Iterable, hi: Iterable) -> Window:
        return cls(tuple(Fraction(x) for x in lo), tuple(Fraction(x) for x in hi))

    @classmethod
    def parse(cls, text: str) -> Window:
        """``"0,1"`` is ``[0, 1)``; ``"0,0,2,2"`` is ``[0, 2) x [0, 2)``. Entries may be fractions."""
        try:
            parts = [Fraction(p.strip()) for p in text.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse window {text!r}: {exc}") from None
        if len(parts) not in (2, 4):
            raise DomainError(f"window needs 2 or 4 numbers, got {len(parts)}")
        d = len(parts) // 2
        if d == 1:
            return cls.of(parts[:1], parts[1:])
        return cls.of(parts[:2], parts[2:])

    @property
    def dimension(self) -> int:
        return len(self.lo)

    def shifted(self, offset: Sequence[int]) -> Window:
        return Window(
            tuple(a + k for a, k in zip(self.lo, offset)),
            tuple(b + k for b, k in zip(self.hi, offset)),
        )

    def to_list(self) -> list[list[str]]:
        return [[str(x) for x in self.lo], [str(x) for x in self.hi]]


@dataclass(frozen=True)
class Wall:
    normal: RestrictedRoot
    level: int
    label: int | None = None

    @property
    def position(self) -> Fraction:
        """Location of a 1D wall."""
        return Fraction(self.level, self.normal[0])

    def key(self) -> tuple[tuple[int, ...], int]:
        """Primitive integer equation of the underlying hyperplane."""
        g = math.gcd(*self.normal, self.level)
        return tuple(c // g for c in self.normal), self.level // g

    def to_dict(self) -> dict:
        out: dict = {"normal": list(self.normal), "level": self.level}
        if self.label is not None:
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class WallArrangement:
    dimension: int
    roots: tuple[RestrictedRoot, ...]
    walls: tuple[Wall, ...]
    window: Window
    lattice: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "walls": [w.to_dict() for w in self.walls],
            "window": self.window.to_list(),
            "lattice": [list(g) for g in self.lattice],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _unit_lattice(d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def _levels(c: RestrictedRoot, window: Window) -> range:
    # c >= 0 and nonzero, so c . theta sweeps [c.lo, c.hi) over the box.
    lo = sum(ci * x for ci, x in zip(c, window.lo))
    hi = sum(ci * x for ci, x in zip(c, window.hi))
    return range(math.ceil(lo), math.ceil(hi))


def walls_1d(roots: Iterable[RestrictedRoot], window: Window) -> tuple[Wall, ...]:
    """One wall per point ``n / c``, labelled by the least ``c`` with ``c x`` integral."""
    coeffs = sorted({c[0] for c in roots})
    best: dict[Fraction, int] = {}
    for c in coeffs:
        for n in _levels((c,), window):
            best.setdefault(Fraction(n, c), c)
    return tuple(Wall((c,), int(x * c), c) for x, c in sorted(best.items()))


def oracle_walls_1d(diagram: DynkinDiagram, vertex: int, window: Window | None = None) -> WallArrangement:
    """Walls of the 1D arrangement for a single chosen vertex (default window ``[0, 1)``)."""
    window = window or Window.of([0], [1])
    if window.dimension != 1:
        raise DomainError("1D arrangement needs a 1D window")
    roots = restricted_roots(diagram, [vertex])
    return WallArrangement(1, roots, walls_1d(roots, window), window, _unit_lattice(1))


def walls_2d(roots: Iterable[RestrictedRoot], window: Window) -> tuple[Wall, ...]:
    """Every line ``c . theta = n`` meeting the window, each geometric line once."""
    seen: dict[tuple, Wall] = {}
    for c in sorted(roots):
        for n in _levels(c, window):
            wall = Wall(c, n)
            seen.setdefault(wall.key(), wall)
    return tuple(sorted(seen.values(), key=lambda w: (w.normal, w.level)))


def arrangement_2d(diagram: DynkinDiagram, J: Sequence[int], window: Window | None = None) -> WallArrangement:
    if len(J) != 2:
        raise DomainError(f"2D arrangement needs exactly two vertices, got {list(J)}")
    window = window or Window.of([0, 0], [1, 1])
    if window.dimension != 2:
        raise DomainError("2D arrangement needs a 2D window")
    roots = restricted_roots(diagram, J)
    return WallArrangement(2, roots, walls_2d(roots, window), window, _unit_lattice(2))


# -- chambers ------------------------------------------------------------------


@dataclass(frozen=True)
class Chambers:
    count: int
    cells: tuple[tuple[Point, ...], ...]


def _split(poly: list[Point], c: RestrictedRoot, n: int) -> list[list[Point]]:
    vals = [sum(ci * x for ci, x in zip(c, p)) - n for p in poly]
    if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
        return [poly]
    pos: list[Point] = []
    neg: list[Point] = []
    for i, (p, vp) in enumerate(zip(poly, vals)):
        q, vq = poly[(i + 1) % len(poly)], vals[(i + 1) % len(poly)]
        if vp >= 0:
            pos.append(p)
        if vp <= 0:
            neg.append(p)
        if vp * vq < 0:
            t = vp / (vp - vq)
            cut = tuple(a + t * (b - a) for a, b in zip(p, q))
            pos.append(cut)
            neg.append(cut)
    return [pos, neg]


def chambers_in_fundamental_domain(arrangement: WallArrangement) -> Chambers:
    """Chambers of the unit cell ``[0, 1)^d`` of the translation lattice.

    The coordinate hyperplanes are always walls (simple roots restrict to unit
    vectors), so the chambers of the cell are the pieces of the open cell cut
    by the walls through its interior.
    """
    d = arrangement.dimension
    cell = Window.of([0] * d, [1] * d)
    if d == 1:
        cuts = sorted(w.position for w in walls_1d(arrangement.roots, cell))
        ends = cuts[1:] + [Fraction(1)]
        cells = tuple(((a,), (b,)) for a, b in zip(cuts, ends))
        return Chambers(len(cells), cells)

    zero, one = Fraction(0), Fraction(1)
    polys = [[(zero, zero), (one, zero), (one, one), (zero, one)]]
    for wall in walls_2d(arrangement.roots, cell):
        polys = [piece for poly in polys for piece in _split(poly, wall.normal, wall.level)]
    return Chambers(len(polys), tuple(tuple(p) for p in polys))
