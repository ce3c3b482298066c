"""KLR idempotents and homogeneous generators in the specialized quotients.

With xi = q^2 and the residues i of a tableau, e(i) is the sum of the
seminormal idempotents F_s over the tableaux s with residue sequence i,
built over Q(q, Q) and then specialized to q = zeta_l, Q = zeta_l^m.

On the corner e(i) A e(i) the element L_r acts as xi^{i_r}(1 - y_r), so
every power series in y_r, y_{r+1} used for psi_r is evaluated through
sparse left multiplications by L_r and L_{r+1}. Inverses of elements with
an invertible constant part are Neumann series, which terminate because
y_r is nilpotent.
"""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from blobalg.core.algebra import AlgebraElement, DiagramAlgebra, make_algebra, specialize_element
from blobalg.core.coeffs import CyclotomicField, generic_field, half_m
from blobalg.core.constants import KLR_RELATIONS, MAX_NEUMANN_TERMS
from blobalg.core.exceptions import NonInvertibleQ, SpecializationFailure
from blobalg.core.interfaces import WalkTableau
from blobalg.core.jm import jm_element, left_multiply_jm, seminormal
from blobalg.core.reports import VerificationReport
from blobalg.core.tabcomb import ResidueSeq, residue_sequence


logger = logging.getLogger(__name__)

Operator = Callable[[AlgebraElement], AlgebraElement]


@dataclass
class KLRIdempotents:
    """The nonzero e(i), keyed by residue sequence, and the classes Std(i)."""

    algebra: DiagramAlgebra
    idempotents: dict[ResidueSeq, AlgebraElement]
    classes: dict[ResidueSeq, list[WalkTableau]]

    def e(self, residues: ResidueSeq) -> AlgebraElement:
        return self.idempotents.get(tuple(residues), self.algebra.zero())

    @property
    def sequences(self) -> list[ResidueSeq]:
        return sorted(self.idempotents)

    def __iter__(self):
        return iter(self.sequences)


@dataclass
class KLRGenerators:
    """y_1..y_n and psi_1..psi_{n-1}, with their restrictions to each e(i)."""

    idempotents: KLRIdempotents
    y: list[AlgebraElement]
    psi: list[AlgebraElement]
    y_parts: dict[tuple[int, ResidueSeq], AlgebraElement]
    psi_parts: dict[tuple[int, ResidueSeq], AlgebraElement]

    @property
    def algebra(self) -> DiagramAlgebra:
        return self.idempotents.algebra


def _require_cyclotomic(algebra: DiagramAlgebra) -> CyclotomicField:
    if not isinstance(algebra.field, CyclotomicField):
        raise SpecializationFailure(
            "KLR generators are defined over the cyclotomic field only",
            details={"algebra": algebra.describe()},
        )
    return algebra.field


def _residues(algebra: DiagramAlgebra, t: WalkTableau) -> ResidueSeq:
    F = algebra.field
    return residue_sequence(t, F.l, F.m)


def residue_classes(algebra: DiagramAlgebra) -> dict[ResidueSeq, list[WalkTableau]]:
    """Std(i) for every residue sequence i that occurs."""
    _require_cyclotomic(algebra)
    classes: dict[ResidueSeq, list[WalkTableau]] = {}
    for shape in algebra.shapes:
        for t in algebra.tableaux(shape):
            classes.setdefault(_residues(algebra, t), []).append(t)
    return classes


@lru_cache(maxsize=None)
def klr_idempotents(algebra: DiagramAlgebra) -> KLRIdempotents:
    """The KLR idempotents e(i) of the algebra over Q(zeta_l).

    Raises:
        SpecializationFailure: If an idempotent has a coefficient that does not specialize
    """
    F = _require_cyclotomic(algebra)
    generic = make_algebra(algebra.kind, algebra.n, generic_field())
    data = seminormal(generic)
    classes = residue_classes(algebra)
    idempotents = {}
    for residues, tableaux in sorted(classes.items()):
        total = generic.zero()
        for t in tableaux:
            total = total + data.F(t)
        idempotents[residues] = specialize_element(total, F.l, F.m)
    logger.info(
        "Built %d KLR idempotents for %s", len(idempotents), algebra.describe()
    )
    return KLRIdempotents(algebra, idempotents, classes)


def _xi_power(algebra: DiagramAlgebra, exponent: int) -> Any:
    return algebra.field.zeta_power(2 * exponent)


def _affine(r: int, a: Any, b: Any, c: Any) -> Operator:
    """x -> (a L_r + b L_{r+1} + c) x."""

    def apply(x: AlgebraElement) -> AlgebraElement:
        result = x.scale(c) if c is not None else x.algebra.zero()
        if a is not None:
            result = result + left_multiply_jm(x, r).scale(a)
        if b is not None:
            result = result + left_multiply_jm(x, r + 1).scale(b)
        return result

    return apply


def _solve(op: Operator, constant: Any, x: AlgebraElement) -> AlgebraElement:
    """w with op(w) = x, where op - constant is nilpotent on the corner containing x.

    Raises:
        NonInvertibleQ: If the constant vanishes or the series does not terminate
    """
    F = x.algebra.field
    if F.is_zero(constant):
        raise NonInvertibleQ("Constant term of a KLR correction vanishes")
    inverse = constant**-1
    term = x.scale(inverse)
    total = term
    for _ in range(MAX_NEUMANN_TERMS):
        term = (op(term) - term.scale(constant)).scale(-inverse)
        if term.is_zero():
            return total
        total = total + term
    raise NonInvertibleQ(
        f"Neumann series did not terminate after {MAX_NEUMANN_TERMS} terms"
    )


def y_elements(algebra: DiagramAlgebra, idempotents: KLRIdempotents) -> list[AlgebraElement]:
    """y_r = sum_i (1 - xi^{-i_r} L_r) e(i)."""
    return [
        sum(
            (_y_part(algebra, r, i, idempotents.e(i)) for i in idempotents),
            algebra.zero(),
        )
        for r in range(1, algebra.n + 1)
    ]


def _y_part(algebra: DiagramAlgebra, r: int, residues: ResidueSeq, unit: AlgebraElement) -> AlgebraElement:
    return unit - left_multiply_jm(unit, r).scale(_xi_power(algebra, -residues[r - 1]))


def _p_part(algebra: DiagramAlgebra, r: int, residues: ResidueSeq, x: AlgebraElement) -> AlgebraElement:
    """P_r(i) x for x in the corner of e(i)."""
    a, b = residues[r - 1], residues[r]
    if a == b:
        return x
    xi = _xi_power(algebra, 1)
    one = algebra.field.one
    Ya, Yb = _xi_power(algebra, a), _xi_power(algebra, b)
    w = _solve(_affine(r, -one, one, None), Yb - Ya, x)
    return left_multiply_jm(w, r + 1).scale(one - xi)


def _q_inverse_part(algebra: DiagramAlgebra, r: int, residues: ResidueSeq, x: AlgebraElement) -> AlgebraElement:
    """Q_r(i)^-1 x for x in the corner of e(i)."""
    l = algebra.field.l
    a, b = residues[r - 1], residues[r]
    xi = _xi_power(algebra, 1)
    one = algebra.field.one
    Ya, Yb = _xi_power(algebra, a), _xi_power(algebra, b)
    if a == b:
        scale = _xi_power(algebra, -a)
        return _solve(_affine(r, scale, -(scale * xi), None), one - xi, x)
    if b == (a - 1) % l:
        return x.scale(_xi_power(algebra, -a))
    w = _solve(_affine(r, one, -xi, None), Ya - xi * Yb, x)
    difference = _affine(r, one, -one, None)
    w = difference(w)
    if b == (a + 1) % l:
        w = difference(w)
    return w


def _q_part(algebra: DiagramAlgebra, r: int, residues: ResidueSeq, x: AlgebraElement) -> AlgebraElement:
    """Q_r(i) x for x in the corner of e(i)."""
    l = algebra.field.l
    a, b = residues[r - 1], residues[r]
    xi = _xi_power(algebra, 1)
    one = algebra.field.one
    Ya, Yb = _xi_power(algebra, a), _xi_power(algebra, b)
    if a == b:
        scale = _xi_power(algebra, -a)
        return _affine(r, scale, -(scale * xi), None)(x)
    if b == (a - 1) % l:
        return x.scale(Ya)
    difference = _affine(r, one, -one, None)
    if b == (a + 1) % l:
        w = _solve(lambda z: difference(difference(z)), (Ya - Yb) ** 2, x)
    else:
        w = _solve(difference, Ya - Yb, x)
    return _affine(r, one, -xi, None)(w)


def psi_elements(algebra: DiagramAlgebra, idempotents: KLRIdempotents) -> list[AlgebraElement]:
    """psi_r = sum_i (T_r + P_r(i)) Q_r(i)^-1 e(i).

    The power series in y_r, y_{r+1} are evaluated through L_r and L_{r+1} on
    each corner.
    """
    return [
        sum(
            (_psi_part(algebra, r, i, idempotents.e(i)) for i in idempotents),
            algebra.zero(),
        )
        for r in range(1, algebra.n)
    ]


def _psi_part(algebra: DiagramAlgebra, r: int, residues: ResidueSeq, unit: AlgebraElement) -> AlgebraElement:
    z = _q_inverse_part(algebra, r, residues, unit)
    return algebra.hecke_generator(r) * z + _p_part(algebra, r, residues, z)


@lru_cache(maxsize=None)
def klr_generators(algebra: DiagramAlgebra) -> KLRGenerators:
    """Idempotents, y and psi generators of the algebra over Q(zeta_l)."""
    idempotents = klr_idempotents(algebra)
    n = algebra.n
    y_parts = {
        (r, i): _y_part(algebra, r, i, idempotents.e(i))
        for r in range(1, n + 1)
        for i in idempotents
    }
    psi_parts = {
        (r, i): _psi_part(algebra, r, i, idempotents.e(i))
        for r in range(1, n)
        for i in idempotents
    }
    y = [
        sum((y_parts[(r, i)] for i in idempotents), algebra.zero()) for r in range(1, n + 1)
    ]
    psi = [sum((psi_parts[(r, i)] for i in idempotents), algebra.zero()) for r in range(1, n)]
    logger.info("Built KLR generators for %s", algebra.describe())
    return KLRGenerators(idempotents, y, psi, y_parts, psi_parts)


def nilpotency_order(x: AlgebraElement, bound: int | None = None) -> int | None:
    """Least N with x^N = 0, or None if none is found up to the bound (dim + 1 by default)."""
    bound = bound if bound is not None else x.algebra.dimension + 1
    power = x
    for N in range(1, bound + 1):
        if power.is_zero():
            return N
        power = power * x
    return None


def _allowed_first(algebra: DiagramAlgebra) -> set[int]:
    F = algebra.field
    if algebra.kind == "tl":
        return {0}
    k0 = half_m(F.l, F.m)
    return {k0, (-k0) % F.l}


def _forbidden_prefixes(algebra: DiagramAlgebra) -> list[ResidueSeq]:
    F = algebra.field
    if algebra.kind == "tl":
        return [(0, 1, 2)]
    k0 = half_m(F.l, F.m)
    return [(k0, (k0 - 1) % F.l), ((-k0) % F.l, (-k0 - 1) % F.l)]


def verify_vanishing(algebra: DiagramAlgebra) -> VerificationReport:
    """Check the vanishing relations of the quotient on the KLR idempotents."""
    report = VerificationReport(title=f"KLR vanishing in {algebra.describe()}")
    F = _require_cyclotomic(algebra)
    gens = klr_generators(algebra)
    idempotents = gens.idempotents
    allowed = _allowed_first(algebra)
    bad = [i for i in idempotents if i and i[0] not in allowed]
    report.add("first_residue", not bad, str(bad[0]) if bad else None, allowed=sorted(allowed))
    for prefix in _forbidden_prefixes(algebra):
        if len(prefix) > algebra.n:
            continue
        hits = [i for i in idempotents if i[: len(prefix)] == prefix]
        if algebra.kind == "tl" and F.l == 3:
            nonzero = [i for i in hits if not (idempotents.e(i) * gens.y[2]).is_zero()]
            report.add(
                f"e{prefix} y3 = 0", not nonzero, str(nonzero[0]) if nonzero else None
            )
        else:
            report.add(f"e{prefix} = 0", not hits, str(hits[0]) if hits else None)
    return report


def verify_weight_spaces(algebra: DiagramAlgebra) -> VerificationReport:
    """Check (L_r - xi^{i_r})^N e(i) = 0 with N the algebra dimension."""
    report = VerificationReport(title=f"weight spaces in {algebra.describe()}")
    idempotents = klr_idempotents(algebra)
    for i in idempotents:
        failures = []
        for r in range(1, algebra.n + 1):
            x = idempotents.e(i)
            eigenvalue = _xi_power(algebra, i[r - 1])
            for _ in range(algebra.dimension):
                if x.is_zero():
                    break
                x = left_multiply_jm(x, r) - x.scale(eigenvalue)
            if not x.is_zero():
                failures.append(r)
        report.add(f"weight space {i}", not failures, f"r={failures[0]}" if failures else None)
    return report


def _swap(residues: ResidueSeq, r: int) -> ResidueSeq:
    seq = list(residues)
    seq[r - 1], seq[r] = seq[r], seq[r - 1]
    return tuple(seq)


class _Suite:
    """Relation checks of the KLR presentation, grouped by relation name."""

    def __init__(self, gens: KLRGenerators):
        self.gens = gens
        self.algebra = gens.algebra
        self.idem = gens.idempotents
        self.l = self.algebra.field.l

    def _collect(self, name: str, failures: list[str]) -> tuple[str, bool, str | None]:
        return name, not failures, failures[0] if failures else None

    def y1_vanishing(self):
        y1 = self.gens.y[0] if self.gens.y else self.algebra.zero()
        return self._collect("y1_vanishing", [] if y1.is_zero() else ["y1 != 0"])

    def first_residue(self):
        allowed = _allowed_first(self.algebra)
        bad = [str(i) for i in self.idem if i and i[0] not in allowed]
        return self._collect("first_residue", bad)

    def idempotent_orthogonality(self):
        failures = []
        for i in self.idem:
            for j in self.idem:
                product_ij = self.idem.e(i) * self.idem.e(j)
                expected = self.idem.e(i) if i == j else self.algebra.zero()
                if product_ij != expected:
                    failures.append(f"e{i} e{j}")
        return self._collect("idempotent_orthogonality", failures)

    def idempotent_completeness(self):
        total = sum((self.idem.e(i) for i in self.idem), self.algebra.zero())
        return self._collect(
            "idempotent_completeness", [] if total == self.algebra.one() else ["sum != 1"]
        )

    def y_idempotent_commute(self):
        failures = [
            f"y{r} e{i}"
            for r, y in enumerate(self.gens.y, 1)
            for i in self.idem
            if y * self.idem.e(i) != self.idem.e(i) * y
        ]
        return self._collect("y_idempotent_commute", failures)

    def psi_idempotent_swap(self):
        failures = [
            f"psi{r} e{i}"
            for r, psi in enumerate(self.gens.psi, 1)
            for i in self.idem
            if psi * self.idem.e(i) != self.idem.e(_swap(i, r)) * psi
        ]
        return self._collect("psi_idempotent_swap", failures)

    def y_commute(self):
        y = self.gens.y
        failures = [
            f"y{r} y{s}"
            for r in range(1, len(y) + 1)
            for s in range(r + 1, len(y) + 1)
            if y[r - 1] * y[s - 1] != y[s - 1] * y[r - 1]
        ]
        return self._collect("y_commute", failures)

    def psi_y_commute(self):
        failures = []
        for r, psi in enumerate(self.gens.psi, 1):
            for s, y in enumerate(self.gens.y, 1):
                if s in (r, r + 1):
                    continue
                if psi * y != y * psi:
                    failures.append(f"psi{r} y{s}")
        return self._collect("psi_y_commute", failures)

    def psi_commute(self):
        psi = self.gens.psi
        failures = [
            f"psi{r} psi{s}"
            for r in range(1, len(psi) + 1)
            for s in range(r + 2, len(psi) + 1)
            if psi[r - 1] * psi[s - 1] != psi[s - 1] * psi[r - 1]
        ]
        return self._collect("psi_commute", failures)

    def psi_y_next(self):
        failures = []
        for r, psi in enumerate(self.gens.psi, 1):
            for i in self.idem:
                unit = self.idem.e(i)
                lhs = psi * self.gens.y_parts[(r + 1, i)]
                rhs = self.gens.y[r - 1] * self.gens.psi_parts[(r, i)]
                if i[r - 1] == i[r]:
                    rhs = rhs + unit
                if lhs != rhs:
                    failures.append(f"r={r}, i={i}")
        return self._collect("psi_y_next", failures)

    def y_next_psi(self):
        failures = []
        for r, psi in enumerate(self.gens.psi, 1):
            for i in self.idem:
                unit = self.idem.e(i)
                lhs = self.gens.y[r] * self.gens.psi_parts[(r, i)]
                rhs = psi * self.gens.y_parts[(r, i)]
                if i[r - 1] == i[r]:
                    rhs = rhs + unit
                if lhs != rhs:
                    failures.append(f"r={r}, i={i}")
        return self._collect("y_next_psi", failures)

    def psi_quadratic(self):
        failures = []
        l = self.l
        for r, psi in enumerate(self.gens.psi, 1):
            for i in self.idem:
                a, b = i[r - 1], i[r]
                lhs = psi * self.gens.psi_parts[(r, i)]
                yr, ynext = self.gens.y_parts[(r, i)], self.gens.y_parts[(r + 1, i)]
                if a == b:
                    rhs = self.algebra.zero()
                elif b == (a + 1) % l:
                    rhs = ynext - yr
                elif b == (a - 1) % l:
                    rhs = yr - ynext
                else:
                    rhs = self.idem.e(i)
                if lhs != rhs:
                    failures.append(f"r={r}, i={i}")
        return self._collect("psi_quadratic", failures)

    def psi_braid(self):
        failures = []
        l = self.l
        psi = self.gens.psi
        for r in range(1, len(psi)):
            for i in self.idem:
                unit = self.idem.e(i)
                lhs = psi[r - 1] * psi[r] * self.gens.psi_parts[(r, i)]
                rhs = psi[r] * psi[r - 1] * self.gens.psi_parts[(r + 1, i)]
                a, b, c = i[r - 1], i[r], i[r + 1]
                if c == a and a == (b - 1) % l:
                    rhs = rhs + unit
                elif c == a and a == (b + 1) % l:
                    rhs = rhs - unit
                if lhs != rhs:
                    failures.append(f"r={r}, i={i}")
        return self._collect("psi_braid", failures)

    def cyclotomic_vanishing(self):
        report = verify_vanishing(self.algebra)
        failures = [c.name for c in report.failures()]
        return self._collect("cyclotomic_vanishing", failures)

    def jm_recovery(self):
        failures = []
        for r in range(1, self.algebra.n + 1):
            total = self.algebra.zero()
            for i in self.idem:
                part = self.idem.e(i) - self.gens.y_parts[(r, i)]
                total = total + part.scale(_xi_power(self.algebra, i[r - 1]))
            if total != jm_element(self.algebra, r):
                failures.append(f"L{r}")
        return self._collect("jm_recovery", failures)

    def hecke_recovery(self):
        failures = []
        for r, psi in enumerate(self.gens.psi, 1):
            total = self.algebra.zero()
            for i in self.idem:
                unit = self.idem.e(i)
                total = total + psi * _q_part(self.algebra, r, i, unit)
                total = total - _p_part(self.algebra, r, i, unit)
            if total != self.algebra.hecke_generator(r):
                failures.append(f"T{r}")
        return self._collect("hecke_recovery", failures)


def verify_klr_presentation(algebra: DiagramAlgebra, workers: int = 1) -> VerificationReport:
    """Check every relation of the KLR presentation as exact identities.

    Relations are independent, so they are evaluated on a thread pool; the
    report keeps the fixed relation order.
    """
    suite = _Suite(klr_generators(algebra))
    report = VerificationReport(title=f"KLR presentation of {algebra.describe()}")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(getattr(suite, name)) for name in KLR_RELATIONS]
        for future in futures:
            name, ok, witness = future.result()
            report.add(name, ok, witness)
    nonzero = len(suite.idem.idempotents)
    report.add(
        "idempotent_count",
        nonzero == len(residue_classes(algebra)),
        None,
        nonzero=nonzero,
    )
    return report

