"""The punctured sphere obtained from the 1D arrangement modulo translation."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError
from .rootsys import DynkinDiagram
from .walk import period_1d

POLES = ("north", "south")


@dataclass(frozen=True)
class PuncturedSphere:
    """Sphere minus ``N`` equator holes and the two poles.

    ``a`` in the fundamental group loops the north pole, ``c`` the south pole.
    """

    equator_labels: tuple[int, ...]
    poles: tuple[str, str] = POLES

    def __post_init__(self) -> None:
        if not self.equator_labels or self.equator_labels[0] != 1:
            raise DomainError("equator labels must start at a label-1 puncture")

    @property
    def N(self) -> int:
        return len(self.equator_labels)

    @property
    def puncture_count(self) -> int:
        return self.N + 2

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "punctures": self.puncture_count,
            "equatorLabels": list(self.equator_labels),
            "poles": list(self.poles),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def punctured_sphere(diagram: DynkinDiagram, vertex: int) -> PuncturedSphere:
    return PuncturedSphere(period_1d(diagram, vertex).equator_labels)


def euler_characteristic(sphere: PuncturedSphere) -> int:
    return 2 - sphere.puncture_count
