"""Reduced groups and printed full-group labels."""

from __future__ import annotations

import pytest

from superelliptic.groups import (LabelError, ReducedGroup, ReducedKind,
                                  full_group_order, parse_group_label)


def test_reduced_group_construction() -> None:
    assert ReducedGroup.cyclic(1) == ReducedGroup.trivial()
    assert ReducedGroup.cyclic(1).order == 1
    assert ReducedGroup.cyclic(7).order == 7
    assert ReducedGroup.dihedral(2).order == 4
    assert ReducedGroup.dihedral(12).order == 24
    assert ReducedGroup(ReducedKind.TETRAHEDRAL).order == 12
    assert ReducedGroup(ReducedKind.OCTAHEDRAL).order == 24
    assert ReducedGroup(ReducedKind.ICOSAHEDRAL).order == 60


def test_reduced_group_describe() -> None:
    assert ReducedGroup.trivial().describe() == "{1}"
    assert ReducedGroup.cyclic(5).describe() == "C_5"
    assert ReducedGroup.dihedral(2).describe() == "V_4"
    assert ReducedGroup.dihedral(6).describe() == "D_12"
    assert ReducedGroup(ReducedKind.TETRAHEDRAL).describe() == "A_4"
    assert ReducedGroup(ReducedKind.OCTAHEDRAL).describe() == "S_4"
    assert ReducedGroup(ReducedKind.ICOSAHEDRAL).describe() == "A_5"


def test_reduced_group_cyclicity_flag() -> None:
    assert ReducedGroup.trivial().is_cyclic_or_trivial
    assert ReducedGroup.cyclic(9).is_cyclic_or_trivial
    assert not ReducedGroup.dihedral(2).is_cyclic_or_trivial
    assert not ReducedGroup(ReducedKind.ICOSAHEDRAL).is_cyclic_or_trivial


def test_full_group_order() -> None:
    assert full_group_order(3, ReducedGroup.dihedral(3)) == 18
    assert full_group_order(2, ReducedGroup(ReducedKind.ICOSAHEDRAL)) == 120
    with pytest.raises(ValueError):
        full_group_order(1, ReducedGroup.cyclic(2))


# (printed label, expected order); all appear in the tables or the named list.
LABEL_CASES = [
    ("C_2", 2),
    ("C_22", 22),
    ("V_4", 4),
    ("A_4", 12),
    ("S_4", 24),
    ("A_5", 60),
    ("C_2 × C_3", 6),
    ("C_3 × C_2", 6),
    ("C_3^2", 9),
    ("D_6 × C_3", 18),
    ("D_8 × C_4", 32),
    ("D_24 × C_3", 72),
    ("S_4 × C_3", 72),
    ("A_5 × C_3", 180),
    ("D_10 × C_5", 50),
    ("V_4 × C_11", 44),
    ("D_4 × C_5", 20),
]


@pytest.mark.parametrize("text,order", LABEL_CASES)
def test_label_orders(text: str, order: int) -> None:
    label = parse_group_label(text)
    assert label.recognized
    assert label.order == order


def test_label_ascii_product_separator() -> None:
    assert parse_group_label("D_6 x C_3").order == 18


def test_opaque_labels_take_context_order() -> None:
    for text in ("G_5", "G_22", "K"):
        label = parse_group_label(text, context_order=48)
        assert not label.recognized
        assert label.order == 48
    assert parse_group_label("G_9").order is None


def test_blank_label() -> None:
    label = parse_group_label("", context_order=8)
    assert not label.recognized
    assert label.order == 8
    assert label.text == ""


@pytest.mark.parametrize("bad", ["D_7", "D_2", "X_9", "C_0", "C_2 × Q_8"])
def test_label_rejects_malformed(bad: str) -> None:
    with pytest.raises(LabelError):
        parse_group_label(bad)
