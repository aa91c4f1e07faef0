"""Equation templates y^n = f(x) and their numerical invariants.

A family is presented by a level n and a product of polynomial factors whose
coefficients are exact constants or formal parameters a_i (optionally scaled,
e.g. -a_1 or 2a_1).  From the template alone one reads off the degree, the
number of independent parameters, the branch points of the cyclic cover
(counting the point at infinity when the level does not divide the degree) and
hence the genus.

``enumerate_levels`` inverts the genus formula 2g = (n-1)(B-2): all candidate
(level, branch count) pairs for a given genus, whether or not each admits the
y^n = f(x) normal form (``normal_form_admissible`` decides that).

``separability_probe`` instantiates the parameters at fixed distinct primes
(5, 7, 11, ... by parameter index) and checks that the resulting polynomial
has the expected degree and no repeated roots; failures are reported, not
raised, so a verification run can collect them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Union

from .arith import Poly, QuadNum

__all__ = [
    "FixedCoeff",
    "ParamCoeff",
    "Term",
    "EquationTemplate",
    "NonSuperellipticError",
    "branch_count",
    "superelliptic_genus",
    "genus_of_family",
    "enumerate_levels",
    "normal_form_admissible",
    "branch_residues",
    "probe_assignment",
    "separability_probe",
    "ProbeResult",
]

PROBE_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                61, 67, 71, 73, 79, 83, 89, 97, 101, 103)


class NonSuperellipticError(ValueError):
    """The (level, degree) combination admits no y^n = f(x) normal form."""


@dataclass(frozen=True)
class FixedCoeff:
    """An exact constant coefficient."""

    value: QuadNum

    @classmethod
    def of(cls, value: Union[int, Fraction, QuadNum]) -> "FixedCoeff":
        return cls(QuadNum.coerce(value))

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ParamCoeff:
    """A formal parameter a_i, optionally scaled by an exact rational."""

    index: int
    scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"parameter index must be positive, got {self.index}")
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale == 0:
            raise ValueError("parameter scale must be nonzero")

    def render(self) -> str:
        name = f"a_{self.index}"
        if self.scale == 1:
            return name
        if self.scale == -1:
            return f"-{name}"
        return f"{self.scale}{name}"


Coefficient = Union[FixedCoeff, ParamCoeff]


@dataclass(frozen=True)
class Term:
    exponent: int
    coeff: Coefficient

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"negative exponent {self.exponent}")


@dataclass(frozen=True)
class EquationTemplate:
    """f(x) as an ordered product of factors, each an ordered list of terms.

    Term order inside a factor is display order (kept as authored); the
    radicand records the square root used by any non-rational fixed
    coefficient (1 when none is).
    """

    factors: tuple[tuple[Term, ...], ...]
    radicand: int = 1

    def __post_init__(self) -> None:
        if not self.factors or any(not f for f in self.factors):
            raise ValueError("template needs at least one non-empty factor")
        for factor in self.factors:
            exps = [t.exponent for t in factor]
            if len(set(exps)) != len(exps):
                raise ValueError("duplicate exponent inside one factor")

    # -- invariants --------------------------------------------------------

    @property
    def degree(self) -> int:
        return sum(max(t.exponent for t in factor) for factor in self.factors)

    @property
    def parameter_indices(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for factor in self.factors:
            for t in factor:
                if isinstance(t.coeff, ParamCoeff):
                    seen.add(t.coeff.index)
        return tuple(sorted(seen))

    @property
    def parameter_count(self) -> int:
        return len(self.parameter_indices)

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        rendered = []
        for factor in self.factors:
            body = _render_factor(factor)
            if len(self.factors) > 1 and len(factor) > 1:
                body = f"({body})"
            rendered.append(body)
        return "".join(rendered)

    # -- instantiation ---------------------------------------------------------

    def instantiate(self, values: Mapping[int, Union[int, Fraction, QuadNum]] | None = None) -> Poly:
        """Expand the product with parameters set to ``values`` (default probe)."""
        if values is None:
            values = probe_assignment(self)
        product = Poly.constant(1)
        for factor in self.factors:
            terms = []
            for t in factor:
                if isinstance(t.coeff, FixedCoeff):
                    c: QuadNum = t.coeff.value
                else:
                    if t.coeff.index not in values:
                        raise KeyError(f"no value for parameter a_{t.coeff.index}")
                    c = QuadNum.coerce(values[t.coeff.index]) * QuadNum(t.coeff.scale)
                terms.append((t.exponent, c))
            product = product * Poly(terms)
        return product

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "factors": [[_term_to_json(t) for t in factor] for factor in self.factors],
            "radicand": self.radicand,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "EquationTemplate":
        factors = tuple(
            tuple(_term_from_json(t) for t in factor) for factor in data["factors"]
        )
        return cls(factors, int(data.get("radicand", 1)))

    def __str__(self) -> str:
        return self.render()


def _render_factor(factor: tuple[Term, ...]) -> str:
    parts = []
    for t in factor:
        c = t.coeff
        if t.exponent == 0:
            text = c.render()
        else:
            x = "x" if t.exponent == 1 else f"x^{t.exponent}"
            if isinstance(c, FixedCoeff) and c.value == QuadNum(1):
                text = x
            elif isinstance(c, FixedCoeff) and c.value == QuadNum(-1):
                text = f"-{x}"
            else:
                coeff_text = c.render()
                if isinstance(c, FixedCoeff) and not c.value.is_rational:
                    coeff_text = coeff_text if c.value.a == 0 else f"({coeff_text})"
                text = f"{coeff_text}{x}"
        parts.append(text)
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _term_to_json(t: Term) -> dict:
    if isinstance(t.coeff, FixedCoeff):
        v = t.coeff.value
        c: dict = {"kind": "fixed", "a": str(v.a), "b": str(v.b)}
        if v.d != 1:
            c["d"] = v.d
        return {"e": t.exponent, "c": c}
    return {"e": t.exponent,
            "c": {"kind": "param", "i": t.coeff.index, "scale": str(t.coeff.scale)}}


def _term_from_json(data: dict) -> Term:
    c = data["c"]
    if c["kind"] == "fixed":
        b = Fraction(c.get("b", "0"))
        d = int(c["d"]) if "d" in c else 1
        return Term(int(data["e"]), FixedCoeff(QuadNum(Fraction(c["a"]), b, d)))
    if c["kind"] == "param":
        return Term(int(data["e"]),
                    ParamCoeff(int(c["i"]), Fraction(c.get("scale", "1"))))
    raise ValueError(f"unknown coefficient kind {c.get('kind')!r}")


def branch_count(level: int, template: EquationTemplate) -> int:
    """Number of branch points of y^n = f(x) for separable f of this degree.

    Every root of f is a branch point; the point at infinity is one exactly
    when the level does not divide the degree.  Degrees with
    gcd(level, degree) strictly between 1 and level leave the cover branched
    at infinity with order below the level, which the normal form excludes.
    """
    if level < 2:
        raise ValueError(f"level must be at least 2, got {level}")
    deg = template.degree
    if deg < 1:
        raise NonSuperellipticError("constant f(x) defines no cover")
    if deg % level == 0:
        return deg
    if gcd(level, deg) == 1:
        return deg + 1
    raise NonSuperellipticError(
        f"level {level} with degree {deg}: gcd {gcd(level, deg)} is neither "
        f"{level} nor 1, so y^{level} = f(x) is not in normal form")


def superelliptic_genus(level: int, branch_points: int) -> int:
    """Genus from 2g = (level - 1)(branch_points - 2)."""
    if level < 2:
        raise ValueError(f"level must be at least 2, got {level}")
    if branch_points < 3:
        raise ValueError(f"need at least 3 branch points, got {branch_points}")
    twice = (level - 1) * (branch_points - 2)
    if twice % 2:
        raise NonSuperellipticError(
            f"level {level} with {branch_points} branch points gives "
            f"non-integral genus {twice}/2")
    return twice // 2


def genus_of_family(level: int, template: EquationTemplate) -> int:
    return superelliptic_genus(level, branch_count(level, template))


def enumerate_levels(genus: int) -> tuple[tuple[int, int], ...]:
    """All (level, branch count) pairs with (level-1)(branch-2) = 2*genus.

    Sorted by level.  Includes pairs that admit no y^n = f(x) normal form;
    filter with :func:`normal_form_admissible` when that matters.
    """
    if genus < 2:
        raise ValueError(f"genus must be at least 2, got {genus}")
    out = []
    target = 2 * genus
    for d in range(1, target + 1):
        if target % d == 0:
            out.append((d + 1, target // d + 2))
    return tuple(out)


def normal_form_admissible(level: int, branch_points: int) -> bool:
    """Whether some separable f gives y^n = f(x) with this branch count.

    Either the level divides the branch count (f of degree = branch count,
    unbranched at infinity) or level and branch count - 1 are coprime
    (f of degree = branch count - 1, branched at infinity).
    """
    if level < 2 or branch_points < 3:
        raise ValueError("need level >= 2 and at least 3 branch points")
    return branch_points % level == 0 or gcd(level, branch_points - 1) == 1


def branch_residues(level: int, template: EquationTemplate) -> tuple[int, ...]:
    """Local rotation exponents of the cyclic cover at its branch points.

    In normal form every finite root is simple (exponent 1); when the level
    does not divide the degree, infinity carries the balancing exponent
    -degree mod level.
    """
    deg = branch_count(level, template)  # validates the shape
    finite = template.degree
    residues = [1] * finite
    if deg == finite + 1:
        residues.append((-finite) % level)
    return tuple(residues)


def probe_assignment(template: EquationTemplate) -> dict[int, int]:
    """Distinct fixed primes 5, 7, 11, ... keyed by parameter index."""
    indices = template.parameter_indices
    if len(indices) > len(PROBE_PRIMES):
        raise ValueError(f"more parameters ({len(indices)}) than probe primes")
    return {idx: PROBE_PRIMES[pos] for pos, idx in enumerate(indices)}


@dataclass(frozen=True)
class ProbeResult:
    ok: bool
    messages: tuple[str, ...]
    poly: Poly


def separability_probe(level: int, template: EquationTemplate,
                       values: Mapping[int, Union[int, Fraction, QuadNum]] | None = None) -> ProbeResult:
    """Instantiate at the probe assignment and check degree and separability."""
    from .arith import is_separable

    messages = []
    poly = template.instantiate(values)
    if poly.is_zero or poly.degree != template.degree:
        messages.append(
            f"instantiated degree {'0' if poly.is_zero else poly.degree} "
            f"!= template degree {template.degree}")
    elif not is_separable(poly):
        messages.append("instantiated polynomial has a repeated root")
    try:
        branch_count(level, template)
    except NonSuperellipticError as exc:
        messages.append(str(exc))
    return ProbeResult(not messages, tuple(messages), poly)
