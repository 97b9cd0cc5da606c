"""The simples helix of a length-``ell`` flop, as formal symbols.

No sheaf cohomology is computed here. A :class:`SheafSymbol` records a sheaf
kind, a twist by ``O(k)`` and a homological shift; equality is structural once
``omega_2C`` has been rewritten as ``O_2C(-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError, UnsupportedKindError

KINDS = ("OC", "omegaC", "Z", "Zomega")


def _check_length(ell: int, lo: int = 1) -> None:
    if not isinstance(ell, int) or not lo <= ell <= 6:
        raise DomainError(f"length must be in {lo}..6, got {ell!r}")


@dataclass(frozen=True)
class SheafSymbol:
    kind: str
    a: int | None = None
    twist: int = 0
    shift: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown sheaf kind {self.kind!r}")
        if self.kind in ("Z", "Zomega"):
            if self.a is not None:
                raise DomainError(f"{self.kind} takes no thickening")
        elif self.a is None or self.a < (1 if self.kind == "OC" else 2):
            raise DomainError(f"bad thickening {self.a!r} for {self.kind}")
        if self.kind == "omegaC" and self.a == 2:
            # omega_2C = O_2C(-1)
            object.__setattr__(self, "kind", "OC")
            object.__setattr__(self, "twist", self.twist - 1)

    def twisted(self, k: int) -> SheafSymbol:
        return replace(self, twist=self.twist + k)

    def shifted(self, s: int) -> SheafSymbol:
        return replace(self, shift=self.shift + s)

    @property
    def support_length(self) -> int:
        """Multiplicity of the curve in the support; ``Z`` extends ``O_2C`` by ``O_3C``."""
        return 5 if self.a is None else self.a

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.a is not None:
            out["a"] = self.a
        out["twist"] = self.twist
        out["shift"] = self.shift
        return out

    @classmethod
    def from_dict(cls, data: dict) -> SheafSymbol:
        return cls(data["kind"], data.get("a"), data.get("twist", 0), data.get("shift", 0))

    def __str__(self) -> str:
        if self.kind == "OC":
            base = "O_C" if self.a == 1 else f"O_{self.a}C"
        elif self.kind == "omegaC":
            base = f"w_{self.a}C"
        else:
            base = "Z" if self.kind == "Z" else "Z^w"
        if self.twist:
            base += f"({self.twist})"
        if self.shift:
            base += f"[{self.shift}]"
        return base


def OC(a: int, twist: int = 0) -> SheafSymbol:
    return SheafSymbol("OC", a, twist)


def omegaC(a: int, twist: int = 0) -> SheafSymbol:
    return SheafSymbol("omegaC", a, twist)


def base_helix(ell: int) -> tuple[SheafSymbol, ...]:
    """``S_0, ..., S_{N-1}`` for a length-``ell`` flop.

    >>> [str(s) for s in base_helix(3)]
    ['O_C(-1)', 'O_3C', 'O_2C', 'w_3C(1)']
    """
    _check_length(ell)
    out = [OC(1, -1)]
    if ell == 1:
        return tuple(out)
    out += [OC(a) for a in range(ell, 2, -1)]
    if ell >= 5:
        out.append(SheafSymbol("Z"))
    out.append(OC(2))
    if ell >= 5:
        out.append(SheafSymbol("Zomega", twist=1))
    out += [omegaC(a, 1) for a in range(3, ell + 1)]
    return tuple(out)


def helix_entry(ell: int, i: int) -> SheafSymbol:
    """``S_i``, using ``S_{i+N} = S_i (x) O(1)``."""
    base = base_helix(ell)
    q, r = divmod(i, len(base))
    return base[r].twisted(q)


@dataclass(frozen=True)
class Heart:
    """The heart reached after ``index`` tilts, with simples ``S_{t-1}[1]`` and ``S_t``.

    ``progenerator`` and ``deformation_algebra`` are named placeholders only.
    """

    index: int
    simples: tuple[SheafSymbol, SheafSymbol]

    @property
    def progenerator(self) -> tuple[str, str]:
        return (f"V({self.index - 1})", f"V({self.index})")

    @property
    def deformation_algebra(self) -> str:
        return f"Lambda_def({self.index})"


def heart(ell: int, t: int) -> Heart:
    return Heart(t, (helix_entry(ell, t - 1).shifted(1), helix_entry(ell, t)))


def ext1_dichotomy(ell: int) -> int:
    """``dim Ext^1(O_2C, O_3C)``: 0 for ``ell <= 4``, 1 for ``ell`` in {5, 6}."""
    _check_length(ell, lo=3)
    return 0 if ell <= 4 else 1


def dual(symbol: SheafSymbol) -> SheafSymbol:
    """Duality on the symbols whose dual is known.

    ``D(Z) = Z^w[1]`` and ``D(O_2C) = omega_2C[1]``; duality is taken to be an
    involution, negates twists and negates shifts.
    """
    if symbol.kind == "Z":
        image = SheafSymbol("Zomega", shift=1)
    elif symbol.kind == "Zomega":
        image = SheafSymbol("Z", shift=1)
    elif symbol.kind == "OC" and symbol.a == 2:
        image = omegaC(2).shifted(1)
    else:
        raise UnsupportedKindError(f"no duality formula for {symbol}")
    return replace(image, twist=image.twist - symbol.twist, shift=image.shift - symbol.shift)
