"""Combinatorics of one-line bipartitions, bitableaux and two-column tableaux.

A standard bitableau of shape ((a),(b)) is determined by which of 1..n sit in
the first component; it is encoded by its walk t(0), ..., t(n) on the
integers (step +1 into component 1, -1 into component 2). Two-column
tableaux are walks on the nonnegative integers (step +1 into column 1, -1
into column 2). Both orders used below compare walks pointwise: s >= t when
|s(j)| <= |t(j)| for every j, with s(j) <= t(j) whenever the absolute values
agree.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Any

import numpy as np

from blobalg.core.coeffs import cartan_entry, half_m
from blobalg.core.exceptions import InvalidTableau, ShapeMismatch
from blobalg.core.interfaces import ScalarField, WalkTableau


logger = logging.getLogger(__name__)

ResidueSeq = tuple[int, ...]


@dataclass(frozen=True)
class OneLineBipartition:
    """The bipartition ((a),(b)) of n = a + b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InvalidTableau(f"Negative component size in (({self.a}),({self.b}))")

    @classmethod
    def from_f(cls, n: int, f: int) -> "OneLineBipartition":
        if (n + f) % 2 or abs(f) > n:
            raise InvalidTableau(f"f={f} is not in Lambda_{n}")
        return cls((n + f) // 2, (n - f) // 2)

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def f(self) -> int:
        return self.a - self.b

    @property
    def order_key(self) -> tuple[int, int]:
        """Larger keys are higher in the order: smaller |f| first, then smaller f."""
        return (-abs(self.f), -self.f)

    def succeeds(self, other: "OneLineBipartition") -> bool:
        """Strict comparison self > other."""
        return self.order_key > other.order_key

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        return f"(({self.a}),({self.b}))"


@dataclass(frozen=True)
class TwoColumnShape:
    """A partition with at most two columns, stored by its column lengths."""

    first: int
    second: int

    def __post_init__(self):
        if self.second < 0 or self.first < self.second:
            raise InvalidTableau(f"Column lengths ({self.first},{self.second}) are not a partition")

    @classmethod
    def from_h(cls, n: int, h: int) -> "TwoColumnShape":
        return cls(n - h, h)

    @property
    def n(self) -> int:
        return self.first + self.second

    @property
    def h(self) -> int:
        """Number of rows of length two (cup/cap pairs of a half diagram)."""
        return self.second

    @property
    def v(self) -> int:
        """Number of through lines."""
        return self.first - self.second

    @property
    def partition(self) -> tuple[int, ...]:
        return (2,) * self.second + (1,) * (self.first - self.second)

    @property
    def order_key(self) -> tuple[int]:
        return (self.h,)

    def succeeds(self, other: "TwoColumnShape") -> bool:
        """Strict dominance self |> other."""
        return self.h > other.h

    def to_json(self) -> list[int]:
        return list(self.partition)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.partition) + ")"


def _walk_geq(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    return all(
        abs(x) < abs(y) or (abs(x) == abs(y) and x <= y) for x, y in zip(s, t, strict=True)
    )


def _walk_key(seq: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((-abs(v), -v) for v in seq)


def _shrinks(old: int, new: int) -> bool:
    return abs(new) > abs(old) or (abs(new) == abs(old) and old < new)


@dataclass(frozen=True)
class Bitableau(WalkTableau):
    """A standard one-line bitableau, given by the entries of each component."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))
        object.__setattr__(self, "second", tuple(self.second))
        entries = sorted(self.first + self.second)
        if entries != list(range(1, len(entries) + 1)):
            raise InvalidTableau(f"Entries {entries} are not 1..{len(entries)}")
        for row in (self.first, self.second):
            if list(row) != sorted(row):
                raise InvalidTableau(f"Row {list(row)} is not increasing")

    @classmethod
    def from_signs(cls, signs: str) -> "Bitableau":
        first = tuple(k for k, s in enumerate(signs, 1) if s == "+")
        second = tuple(k for k, s in enumerate(signs, 1) if s == "-")
        if len(first) + len(second) != len(signs):
            raise InvalidTableau(f"Invalid sign string {signs!r}")
        return cls(first, second)

    @classmethod
    def from_json(cls, data: list[list[int]]) -> "Bitableau":
        return cls(tuple(data[0]), tuple(data[1]))

    @property
    def n(self) -> int:
        return len(self.first) + len(self.second)

    @property
    def shape(self) -> OneLineBipartition:
        return OneLineBipartition(len(self.first), len(self.second))

    @cached_property
    def sequence(self) -> tuple[int, ...]:
        seq = [0]
        ones = set(self.first)
        for k in range(1, self.n + 1):
            seq.append(seq[-1] + (1 if k in ones else -1))
        return tuple(seq)

    @property
    def signs(self) -> str:
        return "".join("+" if k in self.first else "-" for k in range(1, self.n + 1))

    def component(self, k: int) -> int:
        return 1 if k in self.first else 2

    def column(self, k: int) -> int:
        row = self.first if k in self.first else self.second
        return row.index(k) + 1

    def swap(self, k: int) -> "Bitableau":
        if self.component(k) == self.component(k + 1):
            raise InvalidTableau(f"s_{k} applied to {self} is not standard")

        def image(x: int) -> int:
            return k + 1 if x == k else k if x == k + 1 else x

        return Bitableau(
            tuple(sorted(image(x) for x in self.first)),
            tuple(sorted(image(x) for x in self.second)),
        )

    def initial(self) -> "Bitableau":
        return max_tableau(self.shape)

    def restrict(self, k: int) -> "Bitableau":
        return Bitableau(
            tuple(x for x in self.first if x <= k), tuple(x for x in self.second if x <= k)
        )

    def content(self, k: int, scalar_field: ScalarField) -> Any:
        c = self.column(k)
        sign = 1 if self.component(k) == 1 else -1
        return scalar_field.q ** (2 * (c - 1)) * scalar_field.Q**sign

    def residue(self, k: int, l: int, m: int) -> int:
        k0 = half_m(l, m)
        c = self.column(k)
        base = k0 if self.component(k) == 1 else -k0
        return (base + c - 1) % l

    @property
    def order_key(self) -> tuple[tuple[int, int], ...]:
        return _walk_key(self.sequence)

    def to_json(self) -> list[list[int]]:
        return [list(self.first), list(self.second)]

    def __str__(self) -> str:
        first = " ".join(map(str, self.first)) or "∅"
        second = " ".join(map(str, self.second)) or "∅"
        return f"({first} | {second})"


@dataclass(frozen=True)
class TwoColTableau(WalkTableau):
    """A standard tableau with at most two columns, given column by column."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))
        object.__setattr__(self, "second", tuple(self.second))
        entries = sorted(self.first + self.second)
        if entries != list(range(1, len(entries) + 1)):
            raise InvalidTableau(f"Entries {entries} are not 1..{len(entries)}")
        if len(self.second) > len(self.first):
            raise InvalidTableau("Second column longer than the first")
        for column in (self.first, self.second):
            if list(column) != sorted(column):
                raise InvalidTableau(f"Column {list(column)} is not increasing")
        if any(b < a for a, b in zip(self.first, self.second)):
            raise InvalidTableau(f"Rows of {self} are not increasing")

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "TwoColTableau":
        """Build from the row notation, e.g. [[1, 3], [2]]."""
        return cls(tuple(r[0] for r in rows), tuple(r[1] for r in rows if len(r) > 1))

    @classmethod
    def from_json(cls, data: list[list[int]]) -> "TwoColTableau":
        return cls(tuple(data[0]), tuple(data[1]))

    @property
    def n(self) -> int:
        return len(self.first) + len(self.second)

    @property
    def shape(self) -> TwoColumnShape:
        return TwoColumnShape(len(self.first), len(self.second))

    @property
    def rows(self) -> list[list[int]]:
        return [
            [a, self.second[i]] if i < len(self.second) else [a]
            for i, a in enumerate(self.first)
        ]

    @cached_property
    def sequence(self) -> tuple[int, ...]:
        seq = [0]
        ones = set(self.first)
        for k in range(1, self.n + 1):
            seq.append(seq[-1] + (1 if k in ones else -1))
        return tuple(seq)

    def column(self, k: int) -> int:
        return 1 if k in self.first else 2

    def row(self, k: int) -> int:
        column = self.first if k in self.first else self.second
        return column.index(k) + 1

    def swap(self, k: int) -> "TwoColTableau":
        if self.column(k) == self.column(k + 1):
            raise InvalidTableau(f"s_{k} applied to {self} is not standard")

        def image(x: int) -> int:
            return k + 1 if x == k else k if x == k + 1 else x

        return TwoColTableau(
            tuple(sorted(image(x) for x in self.first)),
            tuple(sorted(image(x) for x in self.second)),
        )

    def initial(self) -> "TwoColTableau":
        return tl_max_tableau(self.shape)

    def content(self, k: int, scalar_field: ScalarField) -> Any:
        return scalar_field.q ** (2 * (self.column(k) - self.row(k)))

    def residue(self, k: int, l: int, m: int = 0) -> int:
        return (self.column(k) - self.row(k)) % l

    @property
    def order_key(self) -> tuple[tuple[int, int], ...]:
        return _walk_key(self.sequence)

    def to_json(self) -> list[list[int]]:
        return [list(self.first), list(self.second)]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "]"


@dataclass(frozen=True)
class Walk:
    """A path (k, t(k)) on the Bratteli diagram."""

    points: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, t: WalkTableau) -> "Walk":
        return cls(tuple(enumerate(t.sequence)))

    @property
    def signs(self) -> str:
        return "".join(
            "+" if b[1] > a[1] else "-" for a, b in zip(self.points, self.points[1:])
        )

    def to_bitableau(self) -> Bitableau:
        return Bitableau.from_signs(self.signs)


def walk(t: WalkTableau) -> Walk:
    return Walk.of(t)


def shapes(n: int) -> list[OneLineBipartition]:
    """All one-line bipartitions of n, highest in the order first."""
    return sorted(
        (OneLineBipartition(a, n - a) for a in range(n + 1)),
        key=lambda s: s.order_key,
        reverse=True,
    )


def tl_shapes(n: int) -> list[TwoColumnShape]:
    """All two-column shapes of n, most dominant first."""
    return [TwoColumnShape.from_h(n, h) for h in range(n // 2, -1, -1)]


@lru_cache(maxsize=None)
def standard_bitableaux(shape: OneLineBipartition) -> tuple[Bitableau, ...]:
    """Std(shape), with the maximal tableau first."""
    n = shape.n
    tableaux = [
        Bitableau(first, tuple(k for k in range(1, n + 1) if k not in first))
        for first in combinations(range(1, n + 1), shape.a)
    ]
    return tuple(sorted(tableaux, key=lambda t: t.order_key, reverse=True))


def all_standard_bitableaux(n: int) -> list[Bitableau]:
    return [t for shape in shapes(n) for t in standard_bitableaux(shape)]


@lru_cache(maxsize=None)
def two_column_tableaux(shape: TwoColumnShape) -> tuple[TwoColTableau, ...]:
    """Standard tableaux of a two-column shape, row reading tableau first."""
    n = shape.n
    result = []
    for second in combinations(range(1, n + 1), shape.second):
        first = tuple(k for k in range(1, n + 1) if k not in second)
        if all(b > a for a, b in zip(first, second)):
            result.append(TwoColTableau(first, second))
    return tuple(sorted(result, key=lambda t: t.order_key, reverse=True))


def all_two_column_tableaux(n: int) -> list[TwoColTableau]:
    return [t for shape in tl_shapes(n) for t in two_column_tableaux(shape)]


def pascal_count(n: int, f: int) -> int:
    """b_{n,f}: the number of walks of length n ending at f."""
    if abs(f) > n or (n + f) % 2:
        return 0
    return comb(n, (n + f) // 2)


def pascal_table(n: int) -> np.ndarray:
    """Table of b_{k,f} for 0 <= k <= n, column f + n, built by the Pascal recursion."""
    table = np.zeros((n + 1, 2 * n + 1), dtype=np.int64)
    table[0, n] = 1
    for k in range(1, n + 1):
        table[k, 1:] += table[k - 1, :-1]
        table[k, :-1] += table[k - 1, 1:]
    return table


def blob_dominates(s: Bitableau, t: Bitableau) -> bool:
    """True when s dominates t (s is at least t in the order on Std(shape)).

    Raises:
        ShapeMismatch: If s and t have different shapes
    """
    if s.shape != t.shape:
        raise ShapeMismatch(
            f"Cannot compare {s} and {t}", details={"left": str(s.shape), "right": str(t.shape)}
        )
    return _walk_geq(s.sequence, t.sequence)


def tl_dominance_geq(s: TwoColTableau, t: TwoColTableau) -> bool:
    """True when s dominates t (every restriction of s dominates that of t)."""
    if s.shape != t.shape:
        raise ShapeMismatch(
            f"Cannot compare {s} and {t}", details={"left": str(s.shape), "right": str(t.shape)}
        )
    return all(x <= y for x, y in zip(s.sequence, t.sequence, strict=True))


def walk_geq(s: WalkTableau, t: WalkTableau) -> bool:
    if isinstance(s, Bitableau) and isinstance(t, Bitableau):
        return blob_dominates(s, t)
    return tl_dominance_geq(s, t)


def max_tableau(shape: OneLineBipartition) -> Bitableau:
    """The maximal bitableau t^lambda of a shape."""
    low = min(shape.a, shape.b)
    n = shape.n
    first = [k for k in range(2, 2 * low + 1, 2)]
    second = [k for k in range(1, 2 * low, 2)]
    rest = list(range(2 * low + 1, n + 1))
    if shape.a > shape.b:
        first += rest
    else:
        second += rest
    return Bitableau(tuple(first), tuple(second))


def tl_max_tableau(shape: TwoColumnShape) -> TwoColTableau:
    """The row reading tableau, maximal in the dominance order."""
    h = shape.second
    first = [2 * i - 1 for i in range(1, h + 1)] + list(range(2 * h + 1, shape.n + 1))
    second = [2 * i for i in range(1, h + 1)]
    return TwoColTableau(tuple(first), tuple(second))


def tilde(t: Bitableau) -> TwoColTableau:
    """Two-column tableau with k in column 2 exactly when |t(k)| < |t(k-1)|."""
    seq = t.sequence
    second = tuple(k for k in range(1, t.n + 1) if abs(seq[k]) < abs(seq[k - 1]))
    first = tuple(k for k in range(1, t.n + 1) if k not in second)
    return TwoColTableau(first, second)


def _hook_moves(u: WalkTableau, target: WalkTableau) -> list[int]:
    seq = u.sequence
    moves = []
    for k in range(1, u.n):
        if seq[k - 1] != seq[k + 1]:
            continue
        new = 2 * seq[k - 1] - seq[k]
        if not _shrinks(seq[k], new):
            continue
        candidate = seq[:k] + (new,) + seq[k + 1 :]
        if _walk_geq(candidate, target.sequence):
            moves.append(k)
    return moves


def reduced_expression(t: WalkTableau) -> list[int]:
    """Indices i_1, ..., i_k in applied order such that s_{i_k}...s_{i_1} t^lambda = t.

    At every step the smallest hook position whose reflection moves strictly
    down the order while staying above t is used.
    """
    u = t.initial()
    steps: list[int] = []
    while u != t:
        moves = _hook_moves(u, t)
        if not moves:
            raise InvalidTableau(f"No hook-shrinking move from {u} towards {t}")
        steps.append(moves[0])
        u = u.swap(moves[0])
    return steps


def hook_chain(t: WalkTableau) -> list[WalkTableau]:
    """The tableaux t^lambda = t_0, t_1, ..., t_k = t visited by reduced_expression."""
    chain = [t.initial()]
    for k in reduced_expression(t):
        chain.append(chain[-1].swap(k))
    return chain


def hook_expressions(t: WalkTableau) -> list[list[int]]:
    """Every sequence of hook-shrinking moves leading from t^lambda to t."""
    results: list[list[int]] = []

    def extend(u: WalkTableau, prefix: list[int]) -> None:
        if u == t:
            results.append(prefix)
            return
        for k in _hook_moves(u, t):
            extend(u.swap(k), prefix + [k])

    extend(t.initial(), [])
    return results


def content(t: WalkTableau, k: int, scalar_field: ScalarField) -> Any:
    """c_t(k): q^{2(c-1)}Q^{+-1} for bitableaux, q^{2(col-row)} for two-column tableaux."""
    return t.content(k, scalar_field)


def residue_sequence(t: WalkTableau, l: int, m: int = 0) -> ResidueSeq:
    return tuple(t.residue(k, l, m) for k in range(1, t.n + 1))


def degree(t: WalkTableau, l: int, m: int = 0) -> int:
    """Degree of t, read off the residues along its reduced expression."""
    return word_degree(residue_sequence(t.initial(), l, m), reduced_expression(t), l)


def word_degree(residues: ResidueSeq, word: list[int], l: int) -> int:
    """Degree of psi_{word[-1]}...psi_{word[0]} e(residues)."""
    current = list(residues)
    total = 0
    for k in word:
        total -= cartan_entry(current[k - 1], current[k], l)
        current[k - 1], current[k] = current[k], current[k - 1]
    return total
