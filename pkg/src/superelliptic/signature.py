"""Cone-point signatures of genus-zero group quotients.

A signature records the branching of the quotient map X -> X/G of a curve by a
finite automorphism group: the multiset of cone-point orders.  The text form is
compact, e.g. ``2^5,4^2`` for five cone points of order 2 and two of order 4;
``render(parse(s)) == s`` for canonical text.

The module solves the Riemann--Hurwitz relation

    2(g - 1) = 2|G|(g0 - 1) + |G| * sum(1 - 1/c_i)

exactly (Fractions throughout), computes the dimension of the corresponding
locus in moduli (3*g0 - 3 + r), tests the odd-multiplicity property, and
repairs misprinted signatures: given a genus and group order, it first tries
appending one cone order and then replacing exactly one, targeting a genus-zero
quotient.  All consistent single-edit repairs are reported; a deterministic
preference picks one when several exist.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "Signature",
    "InconsistentSignatureError",
    "quotient_genus",
    "moduli_dimension",
    "complete_signature",
    "SignatureRepair",
    "cyclic_branch_data_valid",
]

_ENTRY_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Signature:
    """A multiset of cone-point orders, stored as sorted (order, multiplicity)."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        merged: dict[int, int] = {}
        for order, mult in self.entries:
            if order < 2:
                raise ValueError(f"cone order must be at least 2, got {order}")
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            merged[order] = merged.get(order, 0) + mult
        object.__setattr__(self, "entries", tuple(sorted(merged.items())))

    # -- construction ------------------------------------------------------

    @classmethod
    def of(cls, *orders: int) -> "Signature":
        """Signature from an explicit list of cone orders, e.g. of(2, 3, 10)."""
        return cls(tuple((o, 1) for o in orders))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse the text form, e.g. ``2^5,4^2`` (whitespace tolerated)."""
        parts = [p.strip() for p in text.split(",")]
        if parts == [""]:
            raise ValueError("empty signature text")
        entries = []
        for part in parts:
            m = _ENTRY_RE.match(part)
            if not m:
                raise ValueError(f"bad signature entry {part!r} in {text!r}")
            order = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) else 1
            entries.append((order, mult))
        return cls(tuple(entries))

    # -- views ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form; inverse of :meth:`parse` on canonical input."""
        chunks = []
        for order, mult in self.entries:
            chunks.append(f"{order}^{mult}" if mult > 1 else f"{order}")
        return ",".join(chunks)

    @property
    def orders(self) -> tuple[int, ...]:
        """All cone orders with repetition, ascending."""
        out: list[int] = []
        for order, mult in self.entries:
            out.extend([order] * mult)
        return tuple(out)

    @property
    def point_count(self) -> int:
        """r, the number of cone points."""
        return sum(mult for _, mult in self.entries)

    @property
    def has_odd_multiplicity(self) -> bool:
        """True when some cone order occurs an odd number of times."""
        return any(mult % 2 == 1 for _, mult in self.entries)

    def ramification_sum(self) -> Fraction:
        """sum over cone points of (1 - 1/c), exact."""
        return sum((Fraction(mult) * (1 - Fraction(1, order)) for order, mult in self.entries),
                   Fraction(0))

    # -- edits (used by the repair search) ------------------------------------

    def with_appended(self, order: int) -> "Signature":
        return Signature(self.entries + ((order, 1),))

    def with_replaced(self, old: int, new: int) -> "Signature":
        orders = list(self.orders)
        orders.remove(old)
        orders.append(new)
        return Signature.of(*orders)

    def __str__(self) -> str:
        return self.render()


class InconsistentSignatureError(ValueError):
    """Riemann--Hurwitz does not balance; carries the exact rational residue."""

    def __init__(self, message: str, residue: Fraction):
        super().__init__(f"{message} (quotient genus would be {residue})")
        self.residue = residue


def _quotient_genus_exact(genus: int, group_order: int, sig: Signature) -> Fraction:
    if group_order < 1:
        raise ValueError(f"group order must be positive, got {group_order}")
    if genus < 2:
        raise ValueError(f"curve genus must be at least 2, got {genus}")
    rhs = Fraction(2 * (genus - 1)) - group_order * sig.ramification_sum()
    return rhs / (2 * group_order) + 1


def quotient_genus(genus: int, group_order: int, sig: Signature) -> int:
    """Solve Riemann--Hurwitz for the quotient genus; exact, no rounding.

    Raises :class:`InconsistentSignatureError` when the balance is not a
    non-negative integer; the exception carries the rational residue.
    """
    g0 = _quotient_genus_exact(genus, group_order, sig)
    if g0.denominator != 1 or g0 < 0:
        raise InconsistentSignatureError(
            f"signature {sig} with group order {group_order} "
            f"does not fit a genus-{genus} curve", g0)
    return int(g0)


def moduli_dimension(g0: int, r: int) -> int:
    """Dimension 3*g0 - 3 + r of the family's locus in moduli space."""
    if g0 < 0:
        raise ValueError(f"quotient genus must be non-negative, got {g0}")
    if r < 0:
        raise ValueError(f"cone point count must be non-negative, got {r}")
    dim = 3 * g0 - 3 + r
    if dim < 0:
        raise ValueError(
            f"a genus-{g0} quotient with {r} cone points bounds no family "
            f"(dimension {dim})")
    return dim


@dataclass(frozen=True)
class SignatureRepair:
    """Outcome of :func:`complete_signature`.

    status is one of ``consistent`` (no edit needed), ``completed`` (one order
    appended), ``corrected`` (one order replaced), ``unrepairable``.  The
    chosen signature is in ``signature`` (the input itself when no repair was
    possible); every consistent single-edit alternative is in ``candidates``.
    """

    status: str
    signature: Signature
    candidates: tuple[Signature, ...] = ()
    edit: str | None = None
    ambiguous: bool = field(default=False)

    @property
    def changed(self) -> bool:
        return self.status in ("completed", "corrected")


def _divisors(k: int) -> list[int]:
    return [d for d in range(2, k + 1) if k % d == 0]


def complete_signature(genus: int, group_order: int, sig: Signature) -> SignatureRepair:
    """Repair a misprinted signature so that the quotient has genus zero.

    The search is deliberately narrow, mirroring how these misprints arise:
    first try appending a single cone order (a dropped entry), then try
    replacing exactly one entry (a garbled digit).  Candidate orders are
    divisors of the group order.  When several replacements balance, the one
    replacing the largest printed order is preferred (ties broken by smaller
    replacement); all consistent candidates are reported and ``ambiguous`` is
    set.  Idempotent: a consistent signature comes back unchanged.
    """
    g0 = _quotient_genus_exact(genus, group_order, sig)
    if g0 == 0:
        return SignatureRepair("consistent", sig)

    allowed = _divisors(group_order)

    appended: list[tuple[Signature, str]] = []
    for c in allowed:
        cand = sig.with_appended(c)
        if _quotient_genus_exact(genus, group_order, cand) == 0:
            appended.append((cand, f"appended {c}"))
    if appended:
        sigs = tuple(s for s, _ in appended)
        chosen, edit = appended[0]
        return SignatureRepair("completed", chosen, sigs, edit,
                               ambiguous=len(appended) > 1)

    replaced: list[tuple[int, int, Signature]] = []
    seen: set[Signature] = set()
    for old in sorted(set(sig.orders)):
        for new in allowed:
            if new == old:
                continue
            cand = sig.with_replaced(old, new)
            if cand in seen:
                continue
            if _quotient_genus_exact(genus, group_order, cand) == 0:
                seen.add(cand)
                replaced.append((old, new, cand))
    if replaced:
        replaced.sort(key=lambda t: (-t[0], t[1]))
        old, new, chosen = replaced[0]
        return SignatureRepair("corrected", chosen,
                               tuple(c for _, _, c in replaced),
                               f"replaced {old} with {new}",
                               ambiguous=len(replaced) > 1)

    return SignatureRepair("unrepairable", sig)


def cyclic_branch_data_valid(n: int, residues: tuple[int, ...]) -> bool:
    """Validity of branch data for a degree-n cyclic cover of the line.

    Each local rotation exponent must be a unit modulo n (so every branch
    point is totally ramified at level n) and the exponents must sum to zero
    modulo n (so the cover is unbranched at the remaining points).
    """
    from math import gcd

    if n < 2:
        raise ValueError(f"cover degree must be at least 2, got {n}")
    if not residues:
        return False
    return all(gcd(r % n, n) == 1 for r in residues) and sum(residues) % n == 0
