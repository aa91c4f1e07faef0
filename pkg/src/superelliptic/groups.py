"""Reduced automorphism groups and full-group labels.

A superelliptic curve y^n = f(x) carries a central cyclic group of order n
whose quotient acts on the projective line; that quotient -- the *reduced*
group -- is one of the finite Moebius groups: trivial, cyclic C_m, dihedral of
order 2m, or one of A_4, S_4, A_5.  The full automorphism group has order
n * |reduced|.

Table labels for full groups come in two kinds: recognizable names built from
C_k, D_k (subscript = order, so D_6 is the symmetric group on 3 letters),
V_4, A_4, S_4, A_5 with direct products and powers; and opaque names (G_5, K,
...) whose order is known only from the row context.  ``parse_group_label``
handles both.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "ReducedKind",
    "ReducedGroup",
    "full_group_order",
    "GroupLabel",
    "LabelError",
    "parse_group_label",
]


class ReducedKind(Enum):
    TRIVIAL = "trivial"
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    TETRAHEDRAL = "tetrahedral"   # A_4
    OCTAHEDRAL = "octahedral"     # S_4
    ICOSAHEDRAL = "icosahedral"   # A_5

    @property
    def is_cyclic_or_trivial(self) -> bool:
        return self in (ReducedKind.TRIVIAL, ReducedKind.CYCLIC)


_FIXED_ORDERS = {
    ReducedKind.TRIVIAL: 1,
    ReducedKind.TETRAHEDRAL: 12,
    ReducedKind.OCTAHEDRAL: 24,
    ReducedKind.ICOSAHEDRAL: 60,
}


@dataclass(frozen=True)
class ReducedGroup:
    """A finite subgroup of the Moebius group, up to conjugacy."""

    kind: ReducedKind
    m: int | None = None  # C_m: order m; dihedral: half the order; else None

    def __post_init__(self) -> None:
        if self.kind is ReducedKind.CYCLIC:
            if self.m is None or self.m < 2:
                raise ValueError("cyclic reduced group needs m >= 2")
        elif self.kind is ReducedKind.DIHEDRAL:
            if self.m is None or self.m < 2:
                raise ValueError("dihedral reduced group needs m >= 2")
        elif self.m is not None:
            raise ValueError(f"{self.kind.value} reduced group takes no parameter")

    @classmethod
    def trivial(cls) -> "ReducedGroup":
        return cls(ReducedKind.TRIVIAL)

    @classmethod
    def cyclic(cls, m: int) -> "ReducedGroup":
        if m == 1:
            return cls.trivial()
        return cls(ReducedKind.CYCLIC, m)

    @classmethod
    def dihedral(cls, m: int) -> "ReducedGroup":
        """Dihedral group of order 2m (m = 2 is the Klein four-group)."""
        return cls(ReducedKind.DIHEDRAL, m)

    @property
    def order(self) -> int:
        if self.kind in _FIXED_ORDERS:
            return _FIXED_ORDERS[self.kind]
        assert self.m is not None
        return self.m if self.kind is ReducedKind.CYCLIC else 2 * self.m

    @property
    def is_cyclic_or_trivial(self) -> bool:
        return self.kind.is_cyclic_or_trivial

    def describe(self) -> str:
        if self.kind is ReducedKind.TRIVIAL:
            return "{1}"
        if self.kind is ReducedKind.CYCLIC:
            return f"C_{self.m}"
        if self.kind is ReducedKind.DIHEDRAL:
            return "V_4" if self.m == 2 else f"D_{2 * self.m}"
        return {ReducedKind.TETRAHEDRAL: "A_4",
                ReducedKind.OCTAHEDRAL: "S_4",
                ReducedKind.ICOSAHEDRAL: "A_5"}[self.kind]

    def __str__(self) -> str:
        return self.describe()


def full_group_order(level: int, reduced: ReducedGroup) -> int:
    """Order of the full automorphism group: level times reduced order."""
    if level < 2:
        raise ValueError(f"level must be at least 2, got {level}")
    return level * reduced.order


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class GroupLabel:
    """A full-group label as printed, with its order when determinable.

    ``recognized`` is True when the name itself pins the order down (C_k, D_k,
    V_4, A_4, S_4, A_5, their products and powers); opaque names (G_5, K, ...)
    carry the order supplied by context, or None.
    """

    text: str
    order: int | None
    recognized: bool

    def __str__(self) -> str:
        return self.text


_ATOM_ORDERS = {"V_4": 4, "A_4": 12, "S_4": 24, "A_5": 60}
_SUBSCRIPTED = re.compile(r"^([CD])_(\d+)$")
_OPAQUE = re.compile(r"^(G_\d+|K)$")
_POWER = re.compile(r"^(.*?)\^(\d+)$")


def _atom_order(atom: str) -> int | None:
    """Order of a single label atom, or None when opaque."""
    power = _POWER.match(atom)
    exponent = 1
    if power:
        atom, exponent = power.group(1), int(power.group(2))
        atom = atom.strip().strip("{}").strip()
    if atom in _ATOM_ORDERS:
        return _ATOM_ORDERS[atom] ** exponent
    sub = _SUBSCRIPTED.match(atom)
    if sub:
        kind, k = sub.group(1), int(sub.group(2))
        if k < 1 or (kind == "D" and (k % 2 or k < 4)):
            raise LabelError(f"impossible group label atom {atom!r}")
        return k ** exponent
    if _OPAQUE.match(atom):
        return None
    raise LabelError(f"unrecognized group label atom {atom!r}")


def parse_group_label(text: str, context_order: int | None = None) -> GroupLabel:
    """Parse a full-group label; opaque or blank labels take ``context_order``.

    Accepts direct products separated by the times sign (either the Unicode
    character or a surrounded lowercase x) and powers like C_3^2.
    """
    cleaned = text.strip()
    if not cleaned:
        return GroupLabel("", context_order, False)
    atoms = re.split(r"\s*×\s*|\s+x\s+", cleaned)
    order = 1
    for atom in atoms:
        atom_order = _atom_order(atom.strip())
        if atom_order is None:
            return GroupLabel(cleaned, context_order, False)
        order *= atom_order
    return GroupLabel(cleaned, order, True)
