"""Equation templates, branch counts, genus computation, level enumeration."""

from __future__ import annotations

from fractions import Fraction

import pytest

from superelliptic.arith import QuadNum
from superelliptic.family import (EquationTemplate, FixedCoeff,
                                  NonSuperellipticError, ParamCoeff, Term,
                                  branch_count, branch_residues,
                                  enumerate_levels, genus_of_family,
                                  normal_form_admissible, probe_assignment,
                                  separability_probe, superelliptic_genus)
from superelliptic.tables import F1, f, spread, t


def test_template_shape() -> None:
    tmpl = t(f(1), f(6, (2, "a1"), (4, "a2"), 0))       # x(x^6+a_1x^2+a_2x^4+1)
    assert tmpl.degree == 7
    assert tmpl.parameter_indices == (1, 2)
    assert tmpl.parameter_count == 2
    assert tmpl.render() == "x(x^6+a_1x^2+a_2x^4+1)"


def test_template_render_edge_cases() -> None:
    assert t(f(12, (0, -1))).render() == "x^12-1"
    assert t(f(1), f(10, (5, 11), (0, -1))).render() == "x(x^10+11x^5-1)"
    assert t(F1).render() == "x^12-a_1x^10-33x^8+2a_1x^6-33x^4-a_1x^2+1"
    quartic = t(f(4, (2, ("sqrt", 2, -3)), 0), rad=-3)
    assert quartic.render() == "x^4+2*sqrt(-3)x^2+1"


def test_template_validation() -> None:
    with pytest.raises(ValueError):
        EquationTemplate((), 1)
    with pytest.raises(ValueError):
        t(f(2, (2, "a1"), 0))      # duplicate exponent inside one factor
    with pytest.raises(ValueError):
        ParamCoeff(0)
    with pytest.raises(ValueError):
        ParamCoeff(1, Fraction(0))


def test_instantiate_default_probe() -> None:
    tmpl = t(f(1), f(6, (2, "a1"), (4, "a2"), 0))
    poly = tmpl.instantiate()
    assert poly.degree == 7
    primes = probe_assignment(tmpl)
    assert primes == {1: 5, 2: 7}
    assert poly.coefficient(3) == QuadNum(5)      # x * a_1 x^2
    assert poly.coefficient(5) == QuadNum(7)


def test_instantiate_explicit_values() -> None:
    tmpl = t(f(4, (2, "a1"), 0))
    poly = tmpl.instantiate({1: Fraction(-2)})
    assert poly.coefficient(2) == QuadNum(-2)
    with pytest.raises(KeyError):
        tmpl.instantiate({2: 1})


def test_instantiate_radical_coefficient() -> None:
    quartic = t(f(4, (2, ("sqrt", 2, -3)), 0), rad=-3)
    poly = quartic.instantiate()
    assert poly.coefficient(2) == QuadNum(0, 2, -3)


@pytest.mark.parametrize("level,degree,expected", [
    (2, 12, 12),       # n | deg: no branching at infinity
    (2, 11, 12),       # gcd = 1: branched at infinity
    (5, 3, 4),
    (3, 7, 8),
    (11, 2, 3),
])
def test_branch_count(level: int, degree: int, expected: int) -> None:
    tmpl = t(f(degree, 0))
    assert branch_count(level, tmpl) == expected


def test_branch_count_rejects_bad_shape() -> None:
    with pytest.raises(NonSuperellipticError):
        branch_count(4, t(f(6, 0)))        # 4 does not divide 6, gcd = 2
    with pytest.raises(NonSuperellipticError):
        branch_count(6, t(f(4, 0)))


@pytest.mark.parametrize("level,points,genus", [
    (2, 12, 5), (11, 3, 5), (2, 6, 2), (3, 4, 2), (5, 3, 2),
    (13, 3, 6), (3, 12, 10), (21, 3, 10),
])
def test_superelliptic_genus(level: int, points: int, genus: int) -> None:
    assert superelliptic_genus(level, points) == genus


def _brute_force_levels(genus: int) -> set[tuple[int, int]]:
    out = set()
    for level in range(2, 2 * genus + 2):
        for points in range(3, 2 * genus + 3):
            if (level - 1) * (points - 2) == 2 * genus:
                out.add((level, points))
    return out


@pytest.mark.parametrize("genus", range(2, 13))
def test_enumerate_levels_matches_brute_force(genus: int) -> None:
    assert set(enumerate_levels(genus)) == _brute_force_levels(genus)


def test_enumerate_levels_frozen_examples() -> None:
    assert enumerate_levels(2) == ((2, 6), (3, 4), (5, 3))
    assert enumerate_levels(5) == ((2, 12), (3, 7), (6, 4), (11, 3))


def test_normal_form_admissibility() -> None:
    # of the four genus-5 splittings only two admit a normal form
    assert normal_form_admissible(2, 12)
    assert not normal_form_admissible(3, 7)
    assert not normal_form_admissible(6, 4)
    assert normal_form_admissible(11, 3)


@pytest.mark.parametrize("level,tmpl,genus", [
    (2, t(F1), 5),
    (3, t(F1), 10),
    (2, t(f(4, (2, ("sqrt", 2, -3)), 0), F1, rad=-3), 7),
    (2, t(f(1), f(4, (0, -1)), F1), 8),
    (2, t(f(8, (4, 14), 0), F1), 9),
    (2, t(f(20, (15, -228), (10, 494), (5, 228), 0)), 9),
    (3, t(f(1), f(10, (5, 11), (0, -1))), 10),
])
def test_genus_of_shared_special_families(level: int, tmpl: EquationTemplate,
                                          genus: int) -> None:
    assert genus_of_family(level, tmpl) == genus


def test_printed_equation_defects_change_the_genus() -> None:
    # Without its leading x factor this family drops from genus 6 to genus 4:
    printed = t(spread(6, 1, 5))
    assert genus_of_family(3, printed) == 4
    assert genus_of_family(3, t(f(1), spread(6, 1, 5))) == 6
    # and this one admits no normal form at all at its level:
    with pytest.raises(NonSuperellipticError):
        genus_of_family(4, t(spread(6, 1, 5)))
    assert genus_of_family(4, t(f(1), spread(6, 1, 5))) == 9


def test_branch_residues() -> None:
    assert branch_residues(2, t(f(12, 0))) == tuple([1] * 12)
    assert branch_residues(2, t(f(1), f(10, (5, "a1"), 0))) == tuple([1] * 11) + (1,)
    assert branch_residues(5, t(f(1), f(2, (0, -1)))) == (1, 1, 1, 2)


def test_separability_probe_accepts_generic_family() -> None:
    tmpl = t(f(1), f(6, (2, "a1"), (4, "a2"), 0))
    result = separability_probe(2, tmpl)
    assert result.ok
    assert result.messages == ()


def test_separability_probe_flags_degeneracies() -> None:
    tmpl = t(f(2, (1, "a1"), 0))
    bad = separability_probe(2, tmpl, {1: Fraction(2)})    # x^2+2x+1 = (x+1)^2
    assert not bad.ok
    assert any("repeated root" in m for m in bad.messages)
    good = separability_probe(2, tmpl, {1: Fraction(3)})
    assert good.ok


def test_separability_probe_flags_degree_drop() -> None:
    tmpl = t(f(0, (2, "a1")))        # a_1 x^2 alone: vanishes at a_1 = 0
    result = separability_probe(2, tmpl, {1: Fraction(0)})
    assert not result.ok


def test_template_json_round_trip() -> None:
    for tmpl in (
        t(f(1), f(6, (2, "a1"), (4, "a2"), 0)),
        t(F1),
        t(f(4, (2, ("sqrt", 2, -3)), 0), F1, rad=-3),
        t(f(4, (2, ("a1", -1)), (0, Fraction(1, 3)))),
    ):
        data = tmpl.to_json_dict()
        assert EquationTemplate.from_json_dict(data) == tmpl
