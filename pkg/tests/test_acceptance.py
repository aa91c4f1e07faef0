"""Acceptance gate: one test (and one printed PASS/FAIL line) per criterion.

Criterion 2 (reproduction of the published highlighting) currently fails on
genus 6 and is expected to: the printed signature of genus-6 row 11 is
internally inconsistent, and the correction forced by its own equation and
dimension places the row among the possibly-not-definable cases, while the
published table does not highlight it.  The failure message carries the full
analysis; all other genera reproduce exactly.
"""

from __future__ import annotations

import pytest

from superelliptic.classify import Reason
from superelliptic.dataset import (classify_record, export_csv, from_json,
                                   load_embedded, repair_signature, to_json)
from superelliptic.family import (branch_count, enumerate_levels,
                                  genus_of_family, separability_probe)
from superelliptic.signature import complete_signature, quotient_genus

EXPECTED_ROW_COUNTS = {3: 5, 4: 9, 5: 20, 6: 36, 7: 27, 8: 22, 9: 50, 10: 55}

PUBLISHED_HIGHLIGHTED = {
    3: {1, 2},
    4: {1, 3, 5},
    5: {1, 2, 6},
    6: {9, 10, 13, 15},
    7: {1, 2, 11},
    8: {2, 6, 7, 8},
    9: {1, 3, 4, 14, 16, 20},
    10: {2, 3, 16, 17, 19, 20, 23},
}

REPAIRABLE_MISPRINTS = {(5, 5), (9, 8), (9, 9), (9, 11), (9, 12), (9, 13),
                        (10, 8), (10, 9), (10, 12), (10, 13), (10, 14)}


@pytest.fixture(scope="module")
def ds():
    return load_embedded()


def _report(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"CRITERION {number}: {status} - {detail}"
    print(line)
    assert ok, line


def test_criterion_1_row_counts(ds) -> None:
    counts = {g: len(ds.genus_rows(g)) for g in ds.genera}
    ok = counts == EXPECTED_ROW_COUNTS and len(ds) == 224
    _report(1, ok, f"per-genus row counts {counts}, total {len(ds)}")


def test_criterion_2_highlighted_rows_reproduced(ds) -> None:
    computed = {
        g: {r.number for r in ds.genus_rows(g)
            if not classify_record(r).is_definable}
        for g in ds.genera
    }
    mismatches = {g: (sorted(computed[g]), sorted(PUBLISHED_HIGHLIGHTED[g]))
                  for g in ds.genera if computed[g] != PUBLISHED_HIGHLIGHTED[g]}
    detail = ("recomputed possibly-not-definable sets match the published "
              "highlighting for every genus")
    if mismatches:
        detail = (
            f"recomputed vs published highlighting differs: {mismatches}. "
            "Known cause: genus-6 row 11 (level 2 over C_3, printed signature "
            "2^3,3^2,6^2) has an internally inconsistent signature; the "
            "correction its equation and printed dimension force is 2^4,6^2, "
            "whose cone orders all have even multiplicity, so with a cyclic "
            "reduced group and a 3-dimensional locus no sufficiency criterion "
            "applies and the row joins the highlighted set, yet the published "
            "table leaves it unhighlighted. Its direct analogues (genus 5 "
            "nr 2, genus 8 nr 2, genus 9 nr 16 - the same shape one genus "
            "up or down) are all highlighted."
        )
    _report(2, not mismatches, detail)


def test_criterion_3_signature_misprints_found_and_repaired(ds) -> None:
    corrected, unrepairable = set(), set()
    for record in ds:
        repair = complete_signature(record.genus, record.group_order(),
                                    record.signature)
        if repair.status in ("completed", "corrected"):
            corrected.add(record.key)
        elif repair.status == "unrepairable":
            unrepairable.add(record.key)
    scan_ok = corrected == REPAIRABLE_MISPRINTS and unrepairable == {(6, 11)}
    balanced = all(
        quotient_genus(r.genus, r.group_order(),
                       repair_signature(r).effective) == 0
        for r in ds)
    _report(3, scan_ok and balanced,
            f"independent scan found {len(corrected)} single-edit misprints "
            f"and {len(unrepairable)} beyond-single-edit case(s) "
            f"{sorted(unrepairable)}; every effective signature balances the "
            f"genus relation over a genus-0 quotient")


def test_criterion_4_dimension_column(ds) -> None:
    bad = [r.key for r in ds
           if repair_signature(r).effective.point_count - 3 != r.delta]
    _report(4, not bad,
            f"printed dimension equals (branch orbits - 3) for all 224 rows"
            + (f"; exceptions {bad}" if bad else ""))


def test_criterion_5_equations_give_the_right_genus(ds) -> None:
    wrong_genus = [r.key for r in ds
                   if genus_of_family(r.level, r.equation) != r.genus]
    wrong_params = [r.key for r in ds
                    if r.equation.parameter_count != r.delta]
    ok = not wrong_genus and not wrong_params
    _report(5, ok,
            "every defining polynomial has the row's genus at the row's level "
            "and one free coefficient per dimension"
            + (f"; genus exceptions {wrong_genus}" if wrong_genus else "")
            + (f"; parameter exceptions {wrong_params}" if wrong_params else ""))


def test_criterion_6_level_enumeration(ds) -> None:
    frozen_ok = (enumerate_levels(2) == ((2, 6), (3, 4), (5, 3))
                 and enumerate_levels(5) == ((2, 12), (3, 7), (6, 4), (11, 3)))
    outside = [r.key for r in ds
               if (r.level, branch_count(r.level, r.equation))
               not in enumerate_levels(r.genus)]
    _report(6, frozen_ok and not outside,
            "level/branch-point splittings enumerate correctly and every "
            "table row realises one of them"
            + (f"; rows outside {outside}" if outside else ""))


def test_criterion_7_classifier_properties(ds) -> None:
    problems = []
    for r in ds:
        verdict = classify_record(r)
        effective = repair_signature(r).effective
        if r.delta == 0 and not verdict.is_definable:
            problems.append((r.key, "rigid but not definable"))
        if not r.reduced_group().is_cyclic_or_trivial \
                and verdict.reason is not Reason.UNIQUE_SUBGROUP:
            problems.append((r.key, "non-cyclic reduced group not decided "
                                    "by the subgroup criterion"))
        if not verdict.is_definable:
            if effective.has_odd_multiplicity:
                problems.append((r.key, "odd multiplicity yet undecided"))
            if not r.reduced_group().is_cyclic_or_trivial or r.delta == 0:
                problems.append((r.key, "undecided despite an applicable "
                                        "criterion"))
    _report(7, not problems,
            "verdicts respect the three sufficiency criteria and their "
            "priority on all rows" + (f"; violations {problems}" if problems else ""))


def test_criterion_8_round_trips(ds) -> None:
    text = to_json(ds)
    clone = from_json(text)
    json_ok = to_json(clone) == text and clone.records == ds.records
    csv_ok = all(export_csv(ds, g) == export_csv(clone, g) for g in ds.genera)
    _report(8, json_ok and csv_ok,
            "dataset JSON round-trips byte-identically and CSV export is "
            "reproducible from the reloaded dataset")


def test_criterion_9_genericity_probe(ds) -> None:
    failing = [(r.key, probe.messages) for r in ds
               if not (probe := separability_probe(r.level, r.equation)).ok]
    _report(9, not failing,
            "every family stays separable with the correct degree at the "
            "fixed rational probe point"
            + (f"; failures {failing}" if failing else ""))
