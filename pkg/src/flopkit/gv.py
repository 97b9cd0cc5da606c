"""Curve-counting lower bounds for a smooth length-``ell`` flop."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import DomainError

KNOWN_REALIZED = "known-realized"
OPEN_WITH_EXAMPLE = "open-with-example"

# ell -> (GV lower bounds n_1..n_ell, dim A_con lower bound) as tabulated.
GV_TABLE: dict[int, tuple[tuple[int, ...], int]] = {
    1: ((1,), 1),
    2: ((4, 1), 8),
    3: ((5, 3, 1), 26),
    4: ((6, 4, 2, 1), 56),
    5: ((7, 6, 4, 2, 1), 124),
    6: ((6, 6, 4, 3, 2, 1), 200),
}

# Flops known to exist where realisation of the bound is open.
KNOWN_EXAMPLES: dict[int, tuple[int, ...]] = {
    3: (6, 3, 1),
    4: (6, 5, 2, 1),
    5: (8, 6, 4, 2, 1),
}

DEFORMATION_CONDITIONS = (
    "strictly noncommutative deformations of O_aC exist",
    "2a <= ell",
    "higher multiples of aC exist",
)


def _check_length(ell: int) -> None:
    if not isinstance(ell, int) or not 1 <= ell <= 6:
        raise DomainError(f"length must be in 1..6, got {ell!r}")


def contraction_dim_bound(gv: tuple[int, ...]) -> int:
    """``sum i^2 n_i`` over the GV tuple."""
    return sum(i * i * n for i, n in enumerate(gv, start=1))


@dataclass(frozen=True)
class DeformationReport:
    ell: int
    a: int
    holds: bool
    conditions: tuple[str, ...] = DEFORMATION_CONDITIONS


def deformation_equivalents(ell: int, a: int) -> DeformationReport:
    """The three equivalent conditions share one truth value, ``2a <= ell``."""
    _check_length(ell)
    if not isinstance(a, int) or not 1 <= a <= ell:
        raise DomainError(f"need 1 <= a <= ell, got a={a!r}, ell={ell}")
    return DeformationReport(ell, a, 2 * a <= ell)


@dataclass(frozen=True)
class GvRow:
    ell: int
    gv_lower_bounds: tuple[int, ...]
    dim_bound: int
    realized: str

    def __post_init__(self) -> None:
        if len(self.gv_lower_bounds) != self.ell:
            raise DomainError("one GV bound per multiple of the curve")
        if contraction_dim_bound(self.gv_lower_bounds) != self.dim_bound:
            raise DomainError(f"dim bound {self.dim_bound} disagrees with sum i^2 n_i")


@dataclass(frozen=True)
class RealizationStatus:
    ell: int
    status: str
    example: tuple[int, ...] | None = None


def realized_status(ell: int) -> RealizationStatus:
    _check_length(ell)
    if ell in KNOWN_EXAMPLES:
        return RealizationStatus(ell, OPEN_WITH_EXAMPLE, KNOWN_EXAMPLES[ell])
    return RealizationStatus(ell, KNOWN_REALIZED)


def gv_row(ell: int) -> GvRow:
    _check_length(ell)
    bounds, dim = GV_TABLE[ell]
    return GvRow(ell, bounds, dim, realized_status(ell).status)


def format_bounds(bounds: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, bounds)) + ")"


def gv_table_csv() -> str:
    """The full table as CSV: ``ell``, GV lower bound, ``dim A_con`` lower bound."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ell", "gv_lower_bound", "dim_Acon_lower_bound"])
    for ell in range(1, 7):
        row = gv_row(ell)
        writer.writerow([ell, format_bounds(row.gv_lower_bounds), row.dim_bound])
    return buf.getvalue()
