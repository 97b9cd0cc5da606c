"""Fundamental group of the sphere minus ``N + 2`` points and its monodromy action.

Generators are ``a`` (north pole), ``b0 .. b{N-1}`` (equator holes) and ``c``
(south pole) subject to the single relation ``c b0 ... b{N-1} a = 1``.
Eliminating ``c`` leaves the free group on ``a, b0 .. b{N-1}``, so words are
compared by substitution and free reduction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, UnknownGeneratorError
from .rootsys import ambient_for_length
from .walk import period_1d

Letter = tuple[str, int]

_TOKEN = re.compile(r"^(a|c|b(?:0|[1-9][0-9]*))(\^-1)?$")


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, exp in letters:
        if out and out[-1] == (gen, -exp):
            out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        """Parse whitespace-separated tokens ``a``, ``a^-1``, ``b0``, ``b3^-1``, ``c``."""
        letters = []
        for token in text.split():
            m = _TOKEN.match(token)
            if not m:
                raise UnknownGeneratorError(f"cannot parse token {token!r}")
            letters.append((m.group(1), -1 if m.group(2) else 1))
        return cls(tuple(letters))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduced(self) -> GroupWord:
        return GroupWord(_free_reduce(self.letters))

    def __str__(self) -> str:
        if not self.letters:
            return "trivial"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def generators(N: int) -> tuple[str, ...]:
    _check_N(N)
    return ("a",) + tuple(f"b{i}" for i in range(N)) + ("c",)


def _check_N(N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")


@dataclass(frozen=True)
class Presentation:
    N: int
    generators: tuple[str, ...]
    relation: GroupWord


def presentation(N: int) -> Presentation:
    gens = generators(N)
    relation = GroupWord(tuple((g, 1) for g in ("c",) + gens[1:-1] + ("a",)))
    return Presentation(N, gens, relation)


def _check_word(word: GroupWord, N: int) -> None:
    allowed = set(generators(N))
    for gen, _ in word.letters:
        if gen not in allowed:
            raise UnknownGeneratorError(f"{gen} is not a generator when N = {N}")


def normal_form(word: GroupWord, N: int) -> GroupWord:
    """Substitute ``c = (b0 ... b{N-1} a)^-1`` and freely reduce."""
    _check_word(word, N)
    c_inverse = [(f"b{i}", 1) for i in range(N)] + [("a", 1)]
    c = [(g, -e) for g, e in reversed(c_inverse)]
    expanded: list[Letter] = []
    for gen, exp in word.letters:
        if gen == "c":
            expanded.extend(c if exp == 1 else c_inverse)
        else:
            expanded.append((gen, exp))
    return GroupWord(_free_reduce(expanded))


def words_equal(w1: GroupWord, w2: GroupWord, N: int) -> bool:
    return normal_form(w1, N) == normal_form(w2, N)


# -- monodromy -----------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    """One factor of a composite functor.

    ``kind`` is ``"O"`` (tensor by ``O(value)``), ``"T"`` (twist at helix
    index ``value``) or ``"F"`` (flop functor). ``exp`` is +1 or -1; tensor
    atoms always carry ``exp = 1`` and fold the sign into ``value``.
    """

    kind: str
    value: int = 0
    exp: int = 1

    def inverse(self) -> Atom:
        if self.kind == "O":
            return Atom("O", -self.value)
        return Atom(self.kind, self.value, -self.exp)

    def __str__(self) -> str:
        if self.kind == "O":
            return f"TensorO({self.value})"
        if self.kind == "T":
            return f"Twist({self.value})" if self.exp == 1 else f"Twist({self.value})^-1"
        return "Flop" if self.exp == 1 else "FlopInverse"


def TensorO(k: int) -> Atom:
    return Atom("O", k)


def Twist(i: int) -> Atom:
    return Atom("T", i)


FLOP = Atom("F")
FLOP_INVERSE = Atom("F", exp=-1)


def _reduce_atoms(atoms: Iterable[Atom]) -> tuple[Atom, ...]:
    out: list[Atom] = []
    for atom in atoms:
        if atom.kind == "O" and atom.value == 0:
            continue
        if out and out[-1].kind == "O" and atom.kind == "O":
            merged = out[-1].value + atom.value
            out.pop()
            if merged:
                out.append(Atom("O", merged))
        elif out and out[-1] == atom.inverse():
            out.pop()
        else:
            out.append(atom)
    return tuple(out)


@dataclass(frozen=True)
class FunctorExpr:
    """A composite of atoms, written in the same order as the word it images."""

    atoms: tuple[Atom, ...] = ()

    def __mul__(self, other: FunctorExpr) -> FunctorExpr:
        return FunctorExpr(_reduce_atoms(self.atoms + other.atoms))

    def inverse(self) -> FunctorExpr:
        return FunctorExpr(_reduce_atoms(a.inverse() for a in reversed(self.atoms)))

    def __str__(self) -> str:
        return " o ".join(map(str, self.atoms)) if self.atoms else "Id"


def length_to_N(ell: int) -> int:
    """Walls per period for length ``ell``, read off the walk in the smallest ambient diagram."""
    return period_1d(*ambient_for_length(ell)).N


def _letter_image(gen: str) -> FunctorExpr:
    if gen == "a":
        return FunctorExpr((TensorO(-1),))
    if gen == "c":
        return FunctorExpr((FLOP_INVERSE, TensorO(-1), FLOP))
    return FunctorExpr((Twist(int(gen[1:])),))


def monodromy(word: GroupWord | Sequence[Letter], ell: int) -> FunctorExpr:
    """Letter-wise image under ``a -> -(x)O(-1)``, ``b_i -> twist at S_i``, ``c -> F^-1 (-(x)O(-1)) F``."""
    if not isinstance(word, GroupWord):
        word = GroupWord(tuple(word))
    _check_word(word, length_to_N(ell))
    out = FunctorExpr()
    for gen, exp in word.letters:
        image = _letter_image(gen)
        out = out * (image if exp == 1 else image.inverse())
    return out
