"""Jucys-Murphy elements, their triangular action and the seminormal layer.

In b_n(m) the JM elements are L_1 = Q(1 - e) + Q^-1 e and
L_{k+1} = (U_k + q) L_k (U_k + q). In TL_n(q) they are L_1 = 1 and
L_{k+1} = (U_k + q^-1) L_k (U_k + q^-1), the image of q^-2 T_k L_k T_k
under T_k -> -q U_k - 1.
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from blobalg.core.algebra import AlgebraElement, BlobAlgebra, DiagramAlgebra
from blobalg.core.exceptions import IndexOutOfRange, InvalidTableau, SeparationFailure
from blobalg.core.interfaces import WalkTableau
from blobalg.core.reports import VerificationReport
from blobalg.core.tabcomb import Bitableau, TwoColTableau


logger = logging.getLogger(__name__)


def _shift(algebra: DiagramAlgebra) -> Any:
    """The scalar a with L_{k+1} = (U_k + a) L_k (U_k + a)."""
    q = algebra.field.q
    return q if algebra.kind == "blob" else q**-1


def _step(algebra: DiagramAlgebra, k: int) -> AlgebraElement:
    return algebra.U(k) + algebra.scalar(_shift(algebra))


def _first_jm(algebra: DiagramAlgebra) -> AlgebraElement:
    if algebra.kind == "tl":
        return algebra.one()
    Q = algebra.field.Q
    e = algebra.e()
    return (algebra.one() - e).scale(Q) + e.scale(Q**-1)


@lru_cache(maxsize=None)
def _jm_elements(algebra: DiagramAlgebra) -> tuple[AlgebraElement, ...]:
    if algebra.n == 0:
        return ()
    elements = [_first_jm(algebra)]
    for k in range(1, algebra.n):
        step = _step(algebra, k)
        elements.append(step * elements[-1] * step)
    logger.debug("Built %d JM elements of %s", len(elements), algebra.describe())
    return tuple(elements)


def jm_element(algebra: DiagramAlgebra, k: int) -> AlgebraElement:
    """The JM element L_k.

    Raises:
        IndexOutOfRange: If k is not in 1..n
    """
    if not 1 <= k <= algebra.n:
        raise IndexOutOfRange(k, algebra.n, "JM index")
    return _jm_elements(algebra)[k - 1]


def jm_by_product(algebra: BlobAlgebra, k: int) -> AlgebraElement:
    """L_k from the displayed product (U_{k-1}+q)...(U_1+q)((q-q^-1)U_0+Q)(U_1+q)...(U_{k-1}+q)."""
    q, Q = algebra.field.q, algebra.field.Q
    middle = algebra.U0().scale(q - q**-1) + algebra.scalar(Q)
    left = right = algebra.one()
    for i in range(1, k):
        left = _step(algebra, i) * left
        right = right * _step(algebra, i)
    return left * middle * right


def jm_by_hecke(algebra: DiagramAlgebra, k: int) -> AlgebraElement:
    """L_k from the recursion L_{r+1} = q^-2 T_r L_r T_r on the Hecke generator images."""
    q = algebra.field.q
    current = _first_jm(algebra)
    for r in range(1, k):
        T = algebra.hecke_generator(r)
        current = (T * current * T).scale(q**-2)
    return current


def right_multiply_jm(x: AlgebraElement, k: int) -> AlgebraElement:
    """x L_k, computed with sparse generator products only."""
    algebra = x.algebra
    if k == 1:
        if algebra.kind == "tl":
            return x
        Q = algebra.field.Q
        return x.scale(Q) + (x * algebra.e()).scale(Q**-1 - Q)
    a = _shift(algebra)
    U = algebra.U(k - 1)
    y = x * U + x.scale(a)
    y = right_multiply_jm(y, k - 1)
    return y * U + y.scale(a)


def left_multiply_jm(x: AlgebraElement, k: int) -> AlgebraElement:
    """L_k x."""
    algebra = x.algebra
    if k == 1:
        if algebra.kind == "tl":
            return x
        Q = algebra.field.Q
        return x.scale(Q) + (algebra.e() * x).scale(Q**-1 - Q)
    a = _shift(algebra)
    U = algebra.U(k - 1)
    y = U * x + x.scale(a)
    y = left_multiply_jm(y, k - 1)
    return U * y + y.scale(a)


def verify_commutation(algebra: DiagramAlgebra) -> VerificationReport:
    """Check the commutation rules between L_k and the generators."""
    report = VerificationReport(title=f"JM commutation in {algebra.describe()}")
    n = algebra.n
    if n == 0:
        return report
    a = _shift(algebra)
    b = a**-1
    L = [jm_element(algebra, k) for k in range(1, n + 1)]
    for k in range(1, n + 1):
        Lk = L[k - 1]
        for i in range(1, n):
            if k in (i, i + 1):
                continue
            U = algebra.U(i)
            ok = Lk * U == U * Lk
            report.add(f"L{k} U{i} = U{i} L{k}", ok, None if ok else f"k={k}, i={i}")
        ok = Lk.star() == Lk
        report.add(f"L{k}* = L{k}", ok, None if ok else f"k={k}")
        for j in range(1, k):
            ok = L[j - 1] * Lk == Lk * L[j - 1]
            report.add(f"L{j} L{k} = L{k} L{j}", ok, None if ok else f"j={j}, k={k}")
    for k in range(1, n):
        U = algebra.U(k)
        ok = (U + algebra.scalar(b)) * L[k] == L[k - 1] * (U + algebra.scalar(a))
        report.add(f"(U{k} + a^-1) L{k + 1} = L{k} (U{k} + a)", ok, None if ok else f"k={k}")
        ok = L[k] * (U + algebra.scalar(b)) == (U + algebra.scalar(a)) * L[k - 1]
        report.add(f"L{k + 1} (U{k} + a^-1) = (U{k} + a) L{k}", ok, None if ok else f"k={k}")
    if algebra.kind == "blob":
        e = algebra.e()
        for k in range(2, n + 1):
            ok = L[k - 1] * e == e * L[k - 1]
            report.add(f"L{k} e = e L{k}", ok, None if ok else f"k={k}")
    return report


def tableau_content(algebra: DiagramAlgebra, t: WalkTableau, k: int) -> Any:
    return t.content(k, algebra.field)


def calibrated_contents(algebra: DiagramAlgebra) -> dict[tuple[WalkTableau, int], Any]:
    """The diagonal coefficient of L_k on m_{s t^shape} modulo the cell ideal."""
    result = {}
    for shape in algebra.shapes:
        top = algebra.max_tableau(shape)
        for s in algebra.tableaux(shape):
            anchor = algebra.label_index[(s, top)]
            ms = algebra.m(s, top)
            for k in range(1, algebra.n + 1):
                image = algebra.reduce_mod_cell_ideal(left_multiply_jm(ms, k), shape)
                result[(s, k)] = image.coefficient(anchor)
    return result


def verify_triangularity(algebra: DiagramAlgebra) -> VerificationReport:
    """Check L_k m_{s t} = c_s(k) m_{s t} + higher terms modulo the cell ideal, t = t^shape."""
    report = VerificationReport(title=f"JM triangularity in {algebra.describe()}")
    equal = algebra.field.equal
    for shape in algebra.shapes:
        top = algebra.max_tableau(shape)
        failures = []
        for s in algebra.tableaux(shape):
            ms = algebra.m(s, top)
            for k in range(1, algebra.n + 1):
                image = algebra.reduce_mod_cell_ideal(left_multiply_jm(ms, k), shape)
                expected = s.content(k, algebra.field)
                if not equal(image.coefficient(algebra.label_index[(s, top)]), expected):
                    failures.append(f"content of {k} in {s}")
                    continue
                for i in image.support():
                    u, v = algebra.labels[i]
                    if v != top or (u != s and not algebra.tableau_geq(u, s)):
                        failures.append(f"L{k} m[{s}] has a lower term at {u}")
                        break
        report.add(f"triangularity on {shape}", not failures, failures[0] if failures else None)
    return report


def jm_matrix(algebra: DiagramAlgebra, shape: Any, k: int) -> list[list[Any]]:
    """Matrix of L_k on the cell module of shape."""
    return algebra.matrix_of(jm_element(algebra, k), shape)


def _extensions(prefix: WalkTableau, k: int) -> list[WalkTableau]:
    if isinstance(prefix, Bitableau):
        return [
            Bitableau(prefix.first + (k,), prefix.second),
            Bitableau(prefix.first, prefix.second + (k,)),
        ]
    result = [TwoColTableau(prefix.first + (k,), prefix.second)]
    if len(prefix.second) < len(prefix.first):
        result.append(TwoColTableau(prefix.first, prefix.second + (k,)))
    return result


@dataclass
class SeminormalData:
    """Seminormal idempotents F_t, basis f_st and norms gamma_t over Q(q, Q)."""

    algebra: DiagramAlgebra
    idempotents: dict[WalkTableau, AlgebraElement]
    _f: dict[tuple[WalkTableau, WalkTableau], AlgebraElement] = field(default_factory=dict)
    _gamma: dict[WalkTableau, Any] = field(default_factory=dict)

    def F(self, t: WalkTableau) -> AlgebraElement:
        return self.idempotents[t]

    def f(self, s: WalkTableau, t: WalkTableau) -> AlgebraElement:
        """f_st = F_s m_st F_t."""
        key = (s, t)
        if key not in self._f:
            self._f[key] = self.F(s) * self.algebra.m(s, t) * self.F(t)
        return self._f[key]

    def gamma(self, t: WalkTableau) -> Any:
        """The scalar with f_tt f_tt = gamma_t f_tt.

        Raises:
            SeparationFailure: If f_tt is zero or the ratio is not constant
        """
        if t in self._gamma:
            return self._gamma[t]
        ftt = self.f(t, t)
        square = ftt * ftt
        if ftt.is_zero():
            raise SeparationFailure(f"f_tt vanishes for t = {t}")
        i = ftt.support()[0]
        value = square.coefficient(i) / ftt.coefficient(i)
        if square != ftt.scale(value):
            raise SeparationFailure(f"f_tt is not an eigenvector of its own square for t = {t}")
        self._gamma[t] = value
        return value

    def gamma_table_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["tableau", "gamma"])
        for shape in self.algebra.shapes:
            for t in self.algebra.tableaux(shape):
                writer.writerow([str(t), self.algebra.field.format(self.gamma(t))])
        return buffer.getvalue()


@lru_cache(maxsize=None)
def seminormal(algebra: DiagramAlgebra) -> SeminormalData:
    """Seminormal idempotents by interpolation on the prefixes of each tableau.

    F_{t|k} = F_{t|k-1} (L_k - c') / (c - c'), where c is the content of k
    in t and c' the content of the other addable node of t|k-1.

    Raises:
        SeparationFailure: If the field is not generic or two addable contents coincide
    """
    scalar_field = algebra.field
    if not scalar_field.is_generic:
        raise SeparationFailure(
            "Seminormal forms require the generic field", details={"algebra": algebra.describe()}
        )
    empty: WalkTableau = Bitableau((), ()) if algebra.kind == "blob" else TwoColTableau((), ())
    layer: dict[WalkTableau, AlgebraElement] = {empty: algebra.one()}
    for k in range(1, algebra.n + 1):
        following = {}
        for prefix, F in layer.items():
            options = _extensions(prefix, k)
            if len(options) == 1:
                following[options[0]] = F
                continue
            contents = [t.content(k, scalar_field) for t in options]
            FL = right_multiply_jm(F, k)
            for j, t in enumerate(options):
                c, other = contents[j], contents[1 - j]
                if scalar_field.equal(c, other):
                    raise SeparationFailure(f"Contents of {k} coincide after {prefix}")
                following[t] = (FL - F.scale(other)).scale((c - other) ** -1)
        layer = following
    logger.info("Built %d seminormal idempotents for %s", len(layer), algebra.describe())
    return SeminormalData(algebra, layer)


def verify_hecke_images(algebra: DiagramAlgebra) -> VerificationReport:
    """Check the Hecke relations and JM recursion on the images of T_r, plus the kernel elements."""
    report = VerificationReport(title=f"Hecke images in {algebra.describe()}")
    n = algebra.n
    q = algebra.field.q
    T = {r: algebra.hecke_generator(r) for r in range(1, n)}
    one = algebra.one()
    for r in range(1, n):
        ok = ((T[r] + one) * (T[r] - algebra.scalar(q**2))).is_zero()
        report.add(f"(T{r} + 1)(T{r} - q^2) = 0", ok, None if ok else f"r={r}")
        if r + 1 < n:
            ok = T[r] * T[r + 1] * T[r] == T[r + 1] * T[r] * T[r + 1]
            report.add(f"T{r} T{r + 1} T{r} braid", ok, None if ok else f"r={r}")
        for s in range(r + 2, n):
            ok = T[r] * T[s] == T[s] * T[r]
            report.add(f"T{r} T{s} = T{s} T{r}", ok, None if ok else f"r={r}, s={s}")
        Lr, Lnext = jm_element(algebra, r), jm_element(algebra, r + 1)
        ok = Lnext == (T[r] * Lr * T[r]).scale(q**-2)
        report.add(f"L{r + 1} = q^-2 T{r} L{r} T{r}", ok, None if ok else f"r={r}")
        ok = T[r] * Lr == Lnext * (T[r] - algebra.scalar(q**2 - 1))
        report.add(f"T{r} L{r} = L{r + 1} (T{r} - q^2 + 1)", ok, None if ok else f"r={r}")
    if algebra.kind == "blob" and n >= 1:
        Q = algebra.field.Q
        L1 = jm_element(algebra, 1)
        ok = ((L1 - algebra.scalar(Q)) * (L1 - algebra.scalar(Q**-1))).is_zero()
        report.add("(L1 - Q)(L1 - Q^-1) = 0", ok, None if ok else "L1 is not semisimple")
        ok = L1 == algebra.U0().scale(q - q**-1) + algebra.scalar(Q)
        report.add("L1 = (q - q^-1) U0 + Q", ok, None if ok else repr(L1))
        if n >= 2:
            L2 = jm_element(algebra, 2)
            for name, root in (("e2^-1", Q**-1), ("e2^-2", Q)):
                kernel = (
                    (T[1] - algebra.scalar(q**2))
                    * (L1 - algebra.scalar(root))
                    * (L2 - algebra.scalar(root))
                )
                report.add(f"{name} vanishes", kernel.is_zero(), None if kernel.is_zero() else repr(kernel))
    if algebra.kind == "tl" and n >= 3:
        total = T[1] * T[2] * T[1] + T[1] * T[2] + T[2] * T[1] + T[1] + T[2] + one
        report.add("sum of T_w over S_3 vanishes", total.is_zero(), None if total.is_zero() else repr(total))
    return report


def verify_calibrated_contents(algebra: DiagramAlgebra) -> VerificationReport:
    """Compare the brute-force eigenvalues of L_k with the closed-form contents."""
    report = VerificationReport(title=f"calibrated contents in {algebra.describe()}")
    failures = [
        f"{k} in {t}"
        for (t, k), value in calibrated_contents(algebra).items()
        if not algebra.field.equal(value, t.content(k, algebra.field))
    ]
    report.add("contents match", not failures, failures[0] if failures else None)
    return report


def verify_order_property(algebra: DiagramAlgebra) -> VerificationReport:
    """Check that U_k m_{u t} lands above s_k s whenever u > s > s_k s, t = t^shape."""
    report = VerificationReport(title=f"order property in {algebra.describe()}")
    for shape in algebra.shapes:
        top = algebra.max_tableau(shape)
        tableaux = algebra.tableaux(shape)
        failures = []
        for s in tableaux:
            for k in range(1, algebra.n):
                try:
                    t = s.swap(k)
                except InvalidTableau:
                    continue
                if not algebra.tableau_geq(s, t):
                    continue
                for u in tableaux:
                    if u == s or not algebra.tableau_geq(u, s):
                        continue
                    image = algebra.reduce_mod_cell_ideal(algebra.U(k) * algebra.m(u, top), shape)
                    for i in image.support():
                        v = algebra.labels[i][0]
                        if v == t or not algebra.tableau_geq(v, t):
                            failures.append(f"U{k} m[{u}] hits {v}")
        report.add(f"order property on {shape}", not failures, failures[0] if failures else None)
    return report


def verify_seminormal(algebra: DiagramAlgebra) -> VerificationReport:
    """Check the seminormal idempotents and basis over Q(q, Q)."""
    data = seminormal(algebra)
    report = VerificationReport(title=f"seminormal basis of {algebra.describe()}")
    tableaux = [t for shape in algebra.shapes for t in algebra.tableaux(shape)]

    failures = []
    for shape in algebra.shapes:
        for s in algebra.tableaux(shape):
            for t in algebra.tableaux(shape):
                f = data.f(s, t)
                index = algebra.label_index[(s, t)]
                if not algebra.field.equal(f.coefficient(index), algebra.field.one):
                    failures.append(f"leading coefficient of f[{s}, {t}]")
                    continue
                for i in f.support():
                    u, v = algebra.labels[i]
                    if (u, v) != (s, t) and not algebra.pair_geq(u, v, s, t):
                        failures.append(f"f[{s}, {t}] has a lower term at ({u}, {v})")
                        break
    report.add("unitriangular over m", not failures, failures[0] if failures else None)

    failures = []
    for s in tableaux:
        for t in tableaux:
            product = data.F(s) * data.F(t)
            expected = data.F(s) if s == t else algebra.zero()
            if product != expected:
                failures.append(f"F[{s}] F[{t}]")
    report.add("orthogonal idempotents", not failures, failures[0] if failures else None)

    total = sum((data.F(t) for t in tableaux), algebra.zero())
    report.add("idempotents sum to 1", total == algebra.one())

    failures = []
    for t in tableaux:
        for k in range(1, algebra.n + 1):
            if left_multiply_jm(data.F(t), k) != data.F(t).scale(t.content(k, algebra.field)):
                failures.append(f"L{k} F[{t}]")
    report.add("JM eigenvectors", not failures, failures[0] if failures else None)

    failures = [f"gamma[{t}] vanishes" for t in tableaux if algebra.field.is_zero(data.gamma(t))]
    report.add("gamma nonzero", not failures, failures[0] if failures else None)

    if not failures:
        total = sum((data.f(t, t).scale(data.gamma(t) ** -1) for t in tableaux), algebra.zero())
        report.add("f_tt / gamma_t sum to 1", total == algebra.one())

    failures = [
        f"f[{s}, {s}] f[{t}, {t}]"
        for s in tableaux
        for t in tableaux
        if s != t and not (data.f(s, s) * data.f(t, t)).is_zero()
    ]
    report.add("f_ss f_tt = 0", not failures, failures[0] if failures else None)

    if algebra.kind == "blob":
        y_e = algebra.field.blob_parameter()
        failures = []
        for shape in algebra.shapes:
            top = algebra.max_tableau(shape)
            if not algebra.field.equal(data.gamma(top), y_e ** min(shape.a, shape.b)):
                failures.append(str(shape))
        report.add("gamma of maximal tableaux", not failures, failures[0] if failures else None)
    return report
