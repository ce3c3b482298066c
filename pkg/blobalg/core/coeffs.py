"""Exact scalars for the diagram algebras.

Two coefficient fields are supported:

* the rational function field K = Q(q, Q), realised as a sympy ``FracField``
  whose elements are kept gcd-reduced, and
* the cyclotomic field F = Q(zeta_l) reached by the specialization
  q -> zeta_l, Q -> zeta_l^m.

Laurent polynomials are a view of elements of K whose denominator is a
monomial; they carry the ``q^a*Q^b`` text form used in reports.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import QQ, field, sympify
from sympy.polys.polyclasses import ANP

from blobalg.core.exceptions import ConfigurationError, DenominatorVanishes
from blobalg.core.interfaces import ScalarField


logger = logging.getLogger(__name__)

_K, _q, _Q = field("q,Q", QQ)
_K_DOMAIN = _K.to_domain()

RationalFunction = type(_q)
CycloNumber = ANP


class GenericField(ScalarField):
    """The field K = Q(q, Q) of rational functions."""

    name = "generic"

    @property
    def domain(self):
        """The sympy domain used for matrices over K."""
        return _K_DOMAIN

    @property
    def zero(self):
        return _K.zero

    @property
    def one(self):
        return _K.one

    @property
    def q(self):
        return _q

    @property
    def Q(self):
        return _Q

    @property
    def is_generic(self) -> bool:
        return True

    def from_int(self, numerator: int, denominator: int = 1):
        return _K(QQ(numerator, denominator))

    def is_zero(self, x: Any) -> bool:
        return not x

    def format(self, x: Any) -> str:
        return format_rational_function(x)

    def from_expr(self, text: str):
        """Parse a sympy expression in q and Q into K."""
        return _K.from_expr(sympify(text, locals={"q": _q.as_expr(), "Q": _Q.as_expr()}))

    def __repr__(self) -> str:
        return "GenericField()"


class CyclotomicField(ScalarField):
    """The cyclotomic field Q(zeta_l) with q = zeta_l and Q = zeta_l^m."""

    name = "cyclo"

    def __init__(self, l: int, m: int):
        if l < 3 or l % 2 == 0:
            raise ConfigurationError(f"l must be an odd integer >= 3, got {l}")
        self.l = l
        self.m = m % l
        self._domain = _cyclotomic_domain(l)
        zeta = self._domain.unit
        self._powers = [self._domain.one]
        for _ in range(1, l):
            self._powers.append(self._powers[-1] * zeta)

    @property
    def domain(self):
        return self._domain

    @property
    def zero(self):
        return self._domain.zero

    @property
    def one(self):
        return self._domain.one

    @property
    def q(self):
        return self._powers[1]

    @property
    def Q(self):
        return self._powers[self.m]

    @property
    def is_generic(self) -> bool:
        return False

    def zeta_power(self, exponent: int):
        """zeta_l^exponent for any integer exponent."""
        return self._powers[exponent % self.l]

    def from_int(self, numerator: int, denominator: int = 1):
        return self._domain.convert(QQ(numerator, denominator))

    def is_zero(self, x: Any) -> bool:
        return x.is_zero

    def format(self, x: Any) -> str:
        return format_cyclo_number(x, self.l)

    def coefficients(self, x: Any) -> list:
        """Coefficients of x in the power basis 1, zeta, ..., zeta^{phi(l)-1}."""
        degree = self._domain.mod.degree()
        coeffs = list(reversed(x.to_list()))
        return coeffs + [QQ(0)] * (degree - len(coeffs))

    def from_coefficients(self, coeffs: list) -> Any:
        total = self.zero
        for j, c in enumerate(coeffs):
            total = total + self.zeta_power(j) * QQ(c)
        return total

    def __repr__(self) -> str:
        return f"CyclotomicField(l={self.l}, m={self.m})"


@lru_cache(maxsize=None)
def _cyclotomic_domain(l: int):
    logger.debug("Building cyclotomic field of order %d", l)
    return QQ.cyclotomic_field(l)


@lru_cache(maxsize=None)
def generic_field() -> GenericField:
    return GenericField()


@lru_cache(maxsize=None)
def cyclotomic_field(l: int, m: int) -> CyclotomicField:
    return CyclotomicField(l, m)


def gauss(k: int, scalar_field: ScalarField) -> Any:
    """Return the quantum integer [k] in the requested field."""
    return scalar_field.gauss(k)


def _evaluate(poly, target: CyclotomicField):
    total = target.zero
    for (a, b), c in poly.items():
        total = total + target.zeta_power(a + target.m * b) * c
    return total


def specialize(x: Any, l: int, m: int):
    """Evaluate x in K at q = zeta_l, Q = zeta_l^m.

    Args:
        x: Element of the generic field (or an integer)
        l: Odd order of the root of unity
        m: Blob parameter

    Returns:
        The value in Q(zeta_l)

    Raises:
        DenominatorVanishes: If the reduced denominator of x vanishes there
    """
    target = cyclotomic_field(l, m)
    x = _K(x) if not isinstance(x, RationalFunction) else x
    denominator = _evaluate(x.denom, target)
    if denominator.is_zero:
        raise DenominatorVanishes(
            f"Denominator of {format_rational_function(x)} vanishes at (zeta_{l}, zeta_{l}^{m})",
            details={"l": l, "m": m, "value": format_rational_function(x)},
        )
    return _evaluate(x.numer, target) / denominator


_CYCLO_TEXT = re.compile(r"cyclo\((\d+)\)\[(.*)\]")


def parse_scalar(text: str, l: int, m: int):
    """Read a value of Q(zeta_l) written as ``cyclo(l)[c0, c1, ...]`` or as an expression in q and Q.

    Raises:
        ConfigurationError: If a cyclo form is tagged with another l
        DenominatorVanishes: If an expression has no value at (zeta_l, zeta_l^m)
    """
    match = _CYCLO_TEXT.fullmatch(text.strip())
    if match is None:
        return specialize(generic_field().from_expr(text), l, m)
    if int(match.group(1)) != l:
        raise ConfigurationError(f"Scalar {text!r} does not belong to Q(zeta_{l})")
    target = cyclotomic_field(l, m)
    total = target.zero
    for j, piece in enumerate(match.group(2).split(",")):
        c = Fraction(piece)
        total = total + target.zeta_power(j) * target.from_int(c.numerator, c.denominator)
    return total


def separation_ok(l: int, m: int) -> bool:
    """Check that q^4 != 1, Q != Q^-1, Q != q^2 Q^-1 and Q^-1 != q^2 Q after specialization."""
    if l < 3 or l % 2 == 0:
        return False
    F = cyclotomic_field(l, m)
    q, Q = F.q, F.Q
    conditions = (
        q**4 - 1,
        Q - Q**-1,
        Q - q**2 * Q**-1,
        Q**-1 - q**2 * Q,
    )
    return all(not F.is_zero(c) for c in conditions)


def half_m(l: int, m: int) -> int:
    """The residue k0 with 2*k0 = m mod l (l odd)."""
    return (m * ((l + 1) // 2)) % l


@dataclass(frozen=True)
class Residue:
    """An element of Z/lZ."""

    value: int
    l: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.l)

    def __add__(self, other: int) -> "Residue":
        return Residue(self.value + int(other), self.l)

    def __sub__(self, other: int) -> "Residue":
        return Residue(self.value - int(other), self.l)

    def __int__(self) -> int:
        return self.value

    def cartan(self, other: "Residue") -> int:
        return cartan_entry(self.value, other.value, self.l)


def cartan_entry(i: int, j: int, l: int) -> int:
    """The Cartan matrix entry a_{ij} of the cyclic quiver Z/lZ."""
    d = (i - j) % l
    if d == 0:
        return 2
    if d in (1, l - 1):
        return -1
    return 0


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial in q and Q with rational coefficients."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    @classmethod
    def from_dict(cls, terms: dict[tuple[int, int], Fraction]) -> "LaurentPoly":
        return cls(tuple(sorted((k, Fraction(c)) for k, c in terms.items() if c)))

    @classmethod
    def from_element(cls, x: Any) -> "LaurentPoly":
        """View an element of K whose denominator is a monomial as a Laurent polynomial."""
        if len(x.denom) != 1:
            raise ValueError(f"{format_rational_function(x)} is not a Laurent polynomial")
        ((da, db), dc), = x.denom.items()
        terms = {
            (a - da, b - db): Fraction(int(c.numerator), int(c.denominator))
            / Fraction(int(dc.numerator), int(dc.denominator))
            for (a, b), c in x.numer.items()
        }
        return cls.from_dict(terms)

    def to_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def to_element(self):
        total = _K.zero
        for (a, b), c in self.terms:
            total = total + _K(QQ(c.numerator, c.denominator)) * _q**a * _Q**b
        return total

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = self.to_dict()
        for k, c in other.terms:
            terms[k] = terms.get(k, Fraction(0)) + c
        return LaurentPoly.from_dict(terms)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms:
            for (a2, b2), c2 in other.terms:
                key = (a + a2, b + b2)
                terms[key] = terms.get(key, Fraction(0)) + c * c2
        return LaurentPoly.from_dict(terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_laurent(self.to_dict())


def gauss_laurent(k: int) -> LaurentPoly:
    """[k] as an explicit Laurent polynomial."""
    sign = 1 if k >= 0 else -1
    k = abs(k)
    return LaurentPoly.from_dict({(k - 1 - 2 * j, 0): Fraction(sign) for j in range(k)})


def _monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("Q" if b == 1 else f"Q^{b}")
    return "*".join(parts)


def format_laurent(terms: dict[tuple[int, int], Fraction]) -> str:
    """Render {(a, b): c} as a sum of c*q^a*Q^b terms, highest exponents first."""
    if not terms:
        return "0"
    pieces = []
    for (a, b), c in sorted(terms.items(), reverse=True):
        mono = _monomial(a, b)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _poly_terms(poly) -> dict[tuple[int, int], Fraction]:
    return {
        k: Fraction(int(c.numerator), int(c.denominator)) for k, c in poly.items()
    }


def format_rational_function(x: Any) -> str:
    """Render an element of K as ``num`` or ``(num)/(den)``."""
    numer = format_laurent(_poly_terms(x.numer))
    if x.denom == 1:
        return numer
    return f"({numer})/({format_laurent(_poly_terms(x.denom))})"


def format_cyclo_number(x: Any, l: int) -> str:
    """Render an element of Q(zeta_l) as its coefficient vector tagged with l."""
    coeffs = [str(Fraction(int(c.numerator), int(c.denominator))) for c in reversed(x.to_list())]
    return f"cyclo({l})[{', '.join(coeffs) if coeffs else '0'}]"
