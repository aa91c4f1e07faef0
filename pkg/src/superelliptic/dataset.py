"""Typed access to the embedded classification table.

Wraps the raw tuples in :mod:`superelliptic.tables` as frozen records, layers
the signature-repair oracle (plus the one documented manual correction) on
top of the printed signatures, classifies rows, and serializes the whole
dataset losslessly to JSON and per-genus CSV.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import tables
from .classify import Classification, classify
from .family import EquationTemplate
from .groups import GroupLabel, ReducedGroup, parse_group_label
from .signature import Signature, SignatureRepair, complete_signature

DATASET_VERSION = "v1"

CSV_COLUMNS = ("Nr", "reduced_group", "full_group", "order", "n", "m",
               "signature", "delta", "blue", "equation")


class Block(Enum):
    """Which block of a genus table a row belongs to (its reduced-group type)."""

    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    TETRAHEDRAL = "tetrahedral"
    OCTAHEDRAL = "octahedral"
    ICOSAHEDRAL = "icosahedral"


@dataclass(frozen=True)
class FamilyRecord:
    """One row of a genus table, fields as printed (equation possibly corrected)."""

    genus: int
    number: int
    block: Block
    label_text: str
    level: int
    m: int | None
    signature: Signature
    delta: int
    equation: EquationTemplate
    highlighted: bool

    @property
    def key(self) -> tuple[int, int]:
        return (self.genus, self.number)

    def reduced_group(self) -> ReducedGroup:
        if self.block is Block.CYCLIC:
            if self.m is None or self.m < 1:
                raise ValueError(f"row {self.key}: cyclic block needs m >= 1")
            return ReducedGroup.cyclic(self.m)
        if self.block is Block.DIHEDRAL:
            if self.m is None or self.m < 2:
                raise ValueError(f"row {self.key}: dihedral block needs m >= 2")
            return ReducedGroup.dihedral(self.m)
        from .groups import ReducedKind
        kind = {
            Block.TETRAHEDRAL: ReducedKind.TETRAHEDRAL,
            Block.OCTAHEDRAL: ReducedKind.OCTAHEDRAL,
            Block.ICOSAHEDRAL: ReducedKind.ICOSAHEDRAL,
        }[self.block]
        return ReducedGroup(kind)

    def group_order(self) -> int:
        return self.level * self.reduced_group().order

    def label(self) -> GroupLabel:
        return parse_group_label(self.label_text, context_order=self.group_order())


@dataclass(frozen=True)
class SignatureResolution:
    """How a printed signature became the effective one used downstream."""

    printed: Signature
    effective: Signature
    repair: SignatureRepair
    manual_note: str | None = None

    @property
    def changed(self) -> bool:
        return self.effective != self.printed

    @property
    def status(self) -> str:
        if self.manual_note is not None:
            return "manually_corrected"
        return self.repair.status


@dataclass(frozen=True)
class NamedCurve:
    """A single curve called out next to a table rather than inside it."""

    genus: int
    level: int
    label_text: str
    equation: EquationTemplate
    note: str


def repair_signature(record: FamilyRecord) -> SignatureResolution:
    """Resolve a row's printed signature to the one its own data forces."""
    repair = complete_signature(record.genus, record.group_order(), record.signature)
    if repair.status != "unrepairable":
        return SignatureResolution(record.signature, repair.signature, repair)
    manual = tables.MANUAL_SIGNATURE_CORRECTIONS.get(record.key)
    if manual is not None:
        corrected, note = manual
        return SignatureResolution(record.signature, Signature.parse(corrected),
                                   repair, manual_note=note)
    return SignatureResolution(record.signature, record.signature, repair)


def effective_signature(record: FamilyRecord) -> Signature:
    return repair_signature(record).effective


def classify_record(record: FamilyRecord) -> Classification:
    return classify(record.reduced_group(), effective_signature(record), record.delta)


class Dataset:
    """All rows plus the named curves, with lookup and serialization."""

    def __init__(self, records, named_curves=(), version: str = DATASET_VERSION):
        self.records: tuple[FamilyRecord, ...] = tuple(
            sorted(records, key=lambda r: r.key))
        self.named_curves: tuple[NamedCurve, ...] = tuple(named_curves)
        self.version = version
        self._by_key = {r.key: r for r in self.records}
        if len(self._by_key) != len(self.records):
            raise ValueError("duplicate (genus, number) keys in dataset")

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(sorted({r.genus for r in self.records}))

    def genus_rows(self, genus: int) -> tuple[FamilyRecord, ...]:
        rows = tuple(r for r in self.records if r.genus == genus)
        if not rows:
            raise KeyError(f"no rows for genus {genus}")
        return rows

    def get(self, genus: int, number: int) -> FamilyRecord:
        try:
            return self._by_key[(genus, number)]
        except KeyError:
            raise KeyError(f"no row {number} in the genus-{genus} table") from None

    def count_by_level(self, genus: int) -> dict[int, int]:
        return dict(sorted(Counter(r.level for r in self.genus_rows(genus)).items()))

    def count_by_block(self, genus: int) -> dict[str, int]:
        counts = Counter(r.block.value for r in self.genus_rows(genus))
        return {b: counts[b] for b in (x.value for x in Block) if counts[b]}

    def highlighted_numbers(self, genus: int) -> tuple[int, ...]:
        return tuple(r.number for r in self.genus_rows(genus) if r.highlighted)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def _record_to_json(record: FamilyRecord) -> dict:
    return {
        "genus": record.genus,
        "nr": record.number,
        "block": record.block.value,
        "label": record.label_text,
        "level": record.level,
        "m": record.m,
        "signature": record.signature.render(),
        "dim": record.delta,
        "equation": record.equation.to_json_dict(),
        "highlighted": record.highlighted,
    }


def _record_from_json(obj: dict) -> FamilyRecord:
    return FamilyRecord(
        genus=obj["genus"],
        number=obj["nr"],
        block=Block(obj["block"]),
        label_text=obj["label"],
        level=obj["level"],
        m=obj["m"],
        signature=Signature.parse(obj["signature"]),
        delta=obj["dim"],
        equation=EquationTemplate.from_json_dict(obj["equation"]),
        highlighted=obj["highlighted"],
    )


def _named_to_json(curve: NamedCurve) -> dict:
    return {
        "genus": curve.genus,
        "level": curve.level,
        "label": curve.label_text,
        "equation": curve.equation.to_json_dict(),
        "note": curve.note,
    }


def _named_from_json(obj: dict) -> NamedCurve:
    return NamedCurve(
        genus=obj["genus"],
        level=obj["level"],
        label_text=obj["label"],
        equation=EquationTemplate.from_json_dict(obj["equation"]),
        note=obj["note"],
    )


def to_json(dataset: Dataset) -> str:
    payload = {
        "version": dataset.version,
        "families": [_record_to_json(r) for r in dataset.records],
        "named_curves": [_named_to_json(c) for c in dataset.named_curves],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> Dataset:
    payload = json.loads(text)
    version = payload.get("version")
    if version != DATASET_VERSION:
        raise ValueError(f"unsupported dataset version {version!r}")
    records = [_record_from_json(o) for o in payload["families"]]
    named = [_named_from_json(o) for o in payload.get("named_curves", ())]
    return Dataset(records, named, version=version)


def export_csv(dataset: Dataset, genus: int) -> str:
    """One genus table as CSV (CRLF rows, signatures quoted as needed)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_COLUMNS)
    for r in dataset.genus_rows(genus):
        writer.writerow([
            r.number,
            r.reduced_group().describe(),
            r.label_text,
            r.group_order(),
            r.level,
            "" if r.m is None else r.m,
            r.signature.render(),
            r.delta,
            "yes" if r.highlighted else "no",
            r.equation.render(),
        ])
    return buf.getvalue()


def _build_records() -> tuple[FamilyRecord, ...]:
    out = []
    for genus, rows in tables.ALL_TABLES.items():
        for nr, block, label, level, m, sig, delta, eq, highlighted in rows:
            out.append(FamilyRecord(
                genus=genus,
                number=nr,
                block=Block(block),
                label_text=label,
                level=level,
                m=m,
                signature=Signature.parse(sig),
                delta=delta,
                equation=eq,
                highlighted=highlighted,
            ))
    return tuple(out)


def _build_named() -> tuple[NamedCurve, ...]:
    return tuple(NamedCurve(genus=g, level=n, label_text=label, equation=eq, note=note)
                 for g, n, label, eq, note in tables.NAMED_CURVES)


@lru_cache(maxsize=1)
def load_embedded() -> Dataset:
    return Dataset(_build_records(), _build_named())
