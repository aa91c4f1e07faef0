"""Decide whether a family's field of moduli must be a field of definition.

Three sufficiency criteria are applied in priority order:

1. If the reduced automorphism group is neither trivial nor cyclic, the
   central cyclic subgroup is unique of its kind and the curve descends to its
   field of moduli (unique-subgroup descent criterion).
2. If some cone order appears an odd number of times in the signature, the
   curve is definable over its field of moduli (odd-signature criterion).
3. If the locus is zero-dimensional the curve is rigid, hence definable
   (quasiplatonic rigidity).

When none applies the honest answer is "possibly not definable": the methods
prove nothing either way, and the published tables highlight exactly these
rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .groups import ReducedGroup
from .signature import Signature

__all__ = ["Verdict", "Reason", "Classification", "classify", "THEOREM_TEXT"]


class Verdict(Enum):
    DEFINABLE = "definable"
    POSSIBLY_NOT_DEFINABLE = "possibly_not_definable"


class Reason(Enum):
    UNIQUE_SUBGROUP = "unique_subgroup"
    ODD_SIGNATURE = "odd_signature"
    QUASIPLATONIC = "quasiplatonic"


THEOREM_TEXT = {
    Reason.UNIQUE_SUBGROUP: "unique-subgroup descent criterion",
    Reason.ODD_SIGNATURE: "odd-signature criterion",
    Reason.QUASIPLATONIC: "quasiplatonic rigidity",
}

_NO_CRITERION = "no applicable sufficiency criterion"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: Reason | None
    theorem: str

    @property
    def is_definable(self) -> bool:
        return self.verdict is Verdict.DEFINABLE

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "reason": self.reason.value if self.reason else None,
            "theorem": self.theorem,
        }


def classify(reduced: ReducedGroup, sig: Signature, delta: int) -> Classification:
    """Apply the three criteria in priority order.

    ``sig`` must already be the effective (repaired) signature and ``delta``
    the dimension of the locus; callers working from raw table rows should go
    through the dataset layer, which performs the repairs.
    """
    if not reduced.is_cyclic_or_trivial:
        return Classification(Verdict.DEFINABLE, Reason.UNIQUE_SUBGROUP,
                              THEOREM_TEXT[Reason.UNIQUE_SUBGROUP])
    if sig.has_odd_multiplicity:
        return Classification(Verdict.DEFINABLE, Reason.ODD_SIGNATURE,
                              THEOREM_TEXT[Reason.ODD_SIGNATURE])
    if delta == 0:
        return Classification(Verdict.DEFINABLE, Reason.QUASIPLATONIC,
                              THEOREM_TEXT[Reason.QUASIPLATONIC])
    return Classification(Verdict.POSSIBLY_NOT_DEFINABLE, None, _NO_CRITERION)
