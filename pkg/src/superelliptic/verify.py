"""Re-derivation checks for every row of the dataset.

Each row is checked from first principles: the printed signature must balance
the genus relation over a genus-0 quotient (after repair where a misprint
forces one), the locus dimension must match the signature length, the
defining polynomial must have the stated genus at the stated level with one
free coefficient per dimension, the level/branch-point pair must be one of
the admissible splittings of the genus, cone orders must divide the group
order, the polynomial must stay separable under a rational probe, and the
recomputed verdict must agree with the printed highlighting.

Findings that match the documented deviation registries in
:mod:`superelliptic.tables` are reported as warnings; everything else is a
failure.  Strict mode promotes warnings to failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import tables
from .classify import Classification, classify
from .dataset import Dataset, FamilyRecord, SignatureResolution, repair_signature
from .family import (NonSuperellipticError, branch_count, branch_residues,
                     enumerate_levels, genus_of_family, normal_form_admissible,
                     separability_probe)
from .groups import LabelError
from .signature import (InconsistentSignatureError, cyclic_branch_data_valid,
                        moduli_dimension, quotient_genus)

FAILURE = "failure"
WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    genus: int
    number: int
    message: str

    def render(self) -> str:
        return (f"[{self.severity}] genus {self.genus} nr {self.number} "
                f"({self.code}): {self.message}")


@dataclass(frozen=True)
class RowResult:
    record: FamilyRecord
    resolution: SignatureResolution
    classification: Classification | None
    findings: tuple[Finding, ...]

    @property
    def ok(self) -> bool:
        return not any(f.severity == FAILURE for f in self.findings)


@dataclass
class VerifyReport:
    rows: list[RowResult] = field(default_factory=list)

    @property
    def findings(self) -> tuple[Finding, ...]:
        return tuple(f for row in self.rows for f in row.findings)

    @property
    def failures(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == FAILURE)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == WARNING)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_lines(self) -> list[str]:
        lines = []
        by_genus: dict[int, list[RowResult]] = {}
        for row in self.rows:
            by_genus.setdefault(row.record.genus, []).append(row)
        for genus in sorted(by_genus):
            rows = by_genus[genus]
            nfail = sum(1 for r in rows for f in r.findings if f.severity == FAILURE)
            nwarn = sum(1 for r in rows for f in r.findings if f.severity == WARNING)
            lines.append(f"genus {genus}: {len(rows)} rows checked, "
                         f"{nfail} failure(s), {nwarn} warning(s)")
        lines.append(f"total: {len(self.rows)} rows, {len(self.failures)} "
                     f"failure(s), {len(self.warnings)} warning(s)")
        return lines

    def render(self, verbose: bool = False) -> str:
        lines = [f.render() for f in self.findings if f.severity == FAILURE or verbose]
        lines.extend(self.summary_lines())
        return "\n".join(lines)


def _documented(record: FamilyRecord, code: str) -> bool:
    key = record.key
    if code == "signature":
        return (key in tables.SIGNATURE_MISPRINTS
                or key in tables.MANUAL_SIGNATURE_CORRECTIONS)
    if code == "label":
        return key in tables.LABEL_DISCREPANCIES
    if code == "classification":
        return key in tables.CLASSIFICATION_DISCREPANCIES
    return False


def verify_row(record: FamilyRecord, strict: bool = False) -> RowResult:
    findings: list[Finding] = []

    def add(code: str, message: str, downgradable: bool = False) -> None:
        severity = WARNING if downgradable and _documented(record, code) else FAILURE
        findings.append(Finding(severity, code, record.genus, record.number, message))

    reduced = record.reduced_group()
    order = record.group_order()

    try:
        label = record.label()
        if label.recognized and label.order is not None and label.order != order:
            add("label",
                f"printed group {record.label_text!r} has order {label.order}, "
                f"but level {record.level} over {reduced.describe()} forces "
                f"{order}", downgradable=True)
    except LabelError as exc:
        add("label", str(exc))

    resolution = repair_signature(record)
    if resolution.status in ("completed", "corrected"):
        note = resolution.repair.edit or "repaired"
        suffix = " (repair choice is ambiguous)" if resolution.repair.ambiguous else ""
        add("signature",
            f"printed signature {record.signature} does not balance the genus "
            f"relation; {note}{suffix}", downgradable=True)
    elif resolution.status == "manually_corrected":
        add("signature",
            f"printed signature {record.signature} is beyond single-edit "
            f"repair; corrected to {resolution.effective} ({resolution.manual_note})",
            downgradable=True)
    elif resolution.status == "unrepairable":
        add("signature",
            f"printed signature {record.signature} does not balance the genus "
            f"relation and no single edit fixes it")

    eff = resolution.effective
    balanced = False
    try:
        g0 = quotient_genus(record.genus, order, eff)
        if g0 != 0:
            add("signature", f"effective signature gives quotient genus {g0}, "
                             f"expected 0")
        else:
            balanced = True
    except InconsistentSignatureError as exc:
        add("signature", f"effective signature does not balance: {exc}")

    if balanced:
        dim = moduli_dimension(0, eff.point_count)
        if dim != record.delta:
            add("dimension",
                f"signature {eff} gives a {dim}-dimensional locus, table "
                f"says {record.delta}")

    bad_orders = sorted({o for o, _ in eff.entries if order % o})
    if bad_orders:
        add("cone_orders",
            f"cone order(s) {bad_orders} do not divide the group order {order}")

    try:
        computed_genus = genus_of_family(record.level, record.equation)
        if computed_genus != record.genus:
            add("genus",
                f"equation {record.equation.render()} at level {record.level} "
                f"has genus {computed_genus}, not {record.genus}")
        points = branch_count(record.level, record.equation)
        if (record.level, points) not in enumerate_levels(record.genus):
            add("levels",
                f"(level, branch points) = ({record.level}, {points}) is not "
                f"an admissible splitting of genus {record.genus}")
        elif not normal_form_admissible(record.level, points):
            add("levels",
                f"level {record.level} with {points} branch points admits no "
                f"normal form")
        residues = branch_residues(record.level, record.equation)
        if not cyclic_branch_data_valid(record.level, residues):
            add("residues",
                f"branch residues {residues} are not valid cyclic-cover data "
                f"at level {record.level}")
    except NonSuperellipticError as exc:
        add("genus", str(exc))

    if record.equation.parameter_count != record.delta:
        add("parameters",
            f"equation has {record.equation.parameter_count} free "
            f"coefficient(s), table dimension is {record.delta}")

    probe = separability_probe(record.level, record.equation)
    if not probe.ok:
        add("separability", "; ".join(probe.messages))

    classification = classify(reduced, eff, record.delta)
    computed_highlight = not classification.is_definable
    if computed_highlight != record.highlighted:
        documented = tables.CLASSIFICATION_DISCREPANCIES.get(record.key)
        detail = f" ({documented})" if documented else ""
        side = ("recomputation says the row is possibly-not-definable but it "
                "is not highlighted" if computed_highlight else
                "recomputation proves definability but the row is highlighted")
        add("classification", side + detail, downgradable=True)

    if strict:
        findings = [replace(f, severity=FAILURE) if f.severity == WARNING else f
                    for f in findings]

    return RowResult(record, resolution, classification, tuple(findings))


def verify_dataset(dataset: Dataset, genera=None, strict: bool = False) -> VerifyReport:
    report = VerifyReport()
    wanted = set(genera) if genera is not None else None
    for record in dataset:
        if wanted is not None and record.genus not in wanted:
            continue
        report.rows.append(verify_row(record, strict=strict))
    return report
