"""Planar (n,n)-bridges, blob decorations and the diagram/tableau bijections.

Boundary points are numbered 1..n along the top edge and n+1..2n along the
bottom edge, both left to right. Pairs are stored sorted, and a blob on a
line is recorded by the smallest point of that line. Planarity and blob
exposure are tested in the linear boundary order: top left to right, then
bottom right to left. A line may carry a blob exactly when no other line
encloses it in that order.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Any

from blobalg.core.constants import GEN_E, GEN_U
from blobalg.core.exceptions import IndexOutOfRange, InvalidDiagram, ShapeMismatch
from blobalg.core.tabcomb import (
    Bitableau,
    TwoColTableau,
    tl_shapes,
    two_column_tableaux,
)


logger = logging.getLogger(__name__)

Pair = tuple[int, int]


def _linear_position(p: int, n: int) -> int:
    return p if p <= n else 3 * n + 1 - p


def _exposed(pairs: tuple[Pair, ...], n: int) -> set[Pair]:
    """Pairs not enclosed by any other pair in the linear order.

    Raises:
        InvalidDiagram: If two pairs cross
    """
    intervals = {}
    for a, b in pairs:
        x, y = sorted((_linear_position(a, n), _linear_position(b, n)))
        intervals[x] = ((a, b), y)
    stack: list[tuple[Pair, int]] = []
    exposed = set()
    for position in range(1, 2 * n + 1):
        if position in intervals:
            pair, end = intervals[position]
            if not stack:
                exposed.add(pair)
            stack.append((pair, end))
        else:
            if not stack or stack[-1][1] != position:
                raise InvalidDiagram(f"Pairing {list(pairs)} is not planar")
            stack.pop()
    return exposed


@dataclass(frozen=True)
class TLDiagram:
    """A Temperley-Lieb diagram: a planar perfect matching of 2n points."""

    n: int
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        points = sorted(p for pair in pairs for p in pair)
        if points != list(range(1, 2 * self.n + 1)):
            raise InvalidDiagram(
                f"Pairs {list(pairs)} are not a perfect matching of 1..{2 * self.n}"
            )
        _exposed(pairs, self.n)

    @cached_property
    def partner(self) -> dict[int, int]:
        result = {}
        for a, b in self.pairs:
            result[a] = b
            result[b] = a
        return result

    def is_vertical(self, pair: Pair) -> bool:
        return pair[0] <= self.n < pair[1]

    @property
    def verticals(self) -> list[Pair]:
        return [p for p in self.pairs if self.is_vertical(p)]

    @property
    def through_lines(self) -> int:
        return len(self.verticals)

    @property
    def top_arcs(self) -> list[Pair]:
        return [p for p in self.pairs if p[1] <= self.n]

    @property
    def bottom_arcs(self) -> list[Pair]:
        """Arcs on the bottom edge in edge-local coordinates 1..n."""
        return [(a - self.n, b - self.n) for a, b in self.pairs if a > self.n]

    def flip(self) -> "TLDiagram":
        return TLDiagram(self.n, tuple(tuple(_flip_point(p, self.n) for p in pair) for pair in self.pairs))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs], "blobs": []}


def _flip_point(p: int, n: int) -> int:
    return p + n if p <= n else p - n


@dataclass(frozen=True)
class BlobDiagram(TLDiagram):
    """A blob diagram: a TL diagram with blobs on some exposed lines."""

    blobs: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "blobs", frozenset(self.blobs))
        exposed = _exposed(self.pairs, self.n)
        minima = {p[0]: p for p in self.pairs}
        for point in self.blobs:
            pair = minima.get(point)
            if pair is None:
                raise InvalidDiagram(f"Blob at {point} is not the smallest point of a line")
            if pair not in exposed:
                raise InvalidDiagram(f"Line {pair} is not exposed and cannot carry a blob")

    def is_decorated(self, pair: Pair) -> bool:
        return pair[0] in self.blobs

    def forget_blobs(self) -> TLDiagram:
        return TLDiagram(self.n, self.pairs)

    def flip(self) -> "BlobDiagram":
        flipped = tuple(tuple(sorted(_flip_point(p, self.n) for p in pair)) for pair in self.pairs)
        blobs = frozenset(pair[0] for pair, old in zip(flipped, self.pairs) if old[0] in self.blobs)
        return BlobDiagram(self.n, flipped, blobs)

    def to_json(self) -> dict[str, Any]:
        data = super().to_json()
        data["blobs"] = sorted(self.blobs)
        return data


def diagram_from_json(data: dict[str, Any], blob: bool = True) -> TLDiagram:
    pairs = tuple(tuple(p) for p in data["pairs"])
    if blob:
        return BlobDiagram(data["n"], pairs, frozenset(data.get("blobs", [])))
    return TLDiagram(data["n"], pairs)


def diagram_to_json(d: TLDiagram) -> dict[str, Any]:
    return d.to_json()


def forget_blobs(d: BlobDiagram) -> TLDiagram:
    return d.forget_blobs()


@dataclass(frozen=True)
class Concatenation:
    """Result of stacking two diagrams, with the loops removed."""

    result: TLDiagram
    undecorated_loops: int
    decorated_loops: int


def _concatenate(x: TLDiagram, y: TLDiagram) -> tuple[tuple[Pair, ...], frozenset[int], int, int]:
    if x.n != y.n:
        raise ShapeMismatch(f"Cannot stack diagrams on {x.n} and {y.n} points")
    n = x.n
    xblobs = x.blobs if isinstance(x, BlobDiagram) else frozenset()
    yblobs = y.blobs if isinstance(y, BlobDiagram) else frozenset()
    parts = {"x": x, "y": y}
    blobs_of = {"x": xblobs, "y": yblobs}

    def decorated(side: str, p: int) -> bool:
        return min(p, parts[side].partner[p]) in blobs_of[side]

    visited_middle: set[int] = set()
    pairs: list[Pair] = []
    blobs: set[int] = set()

    def trace(side: str, p: int) -> int:
        blob = False
        while True:
            blob = blob or decorated(side, p)
            other = parts[side].partner[p]
            if side == "x" and other <= n:
                end = other
                break
            if side == "y" and other > n:
                end = other
                break
            if side == "x":
                visited_middle.add(other - n)
                side, p = "y", other - n
            else:
                visited_middle.add(other)
                side, p = "x", other + n
        return end, blob

    starts = [("x", p) for p in range(1, n + 1)] + [("y", p) for p in range(n + 1, 2 * n + 1)]
    seen: set[int] = set()
    for side, p in starts:
        if p in seen:
            continue
        end, blob = trace(side, p)
        seen.update((p, end))
        pair = (min(p, end), max(p, end))
        pairs.append(pair)
        if blob:
            blobs.add(pair[0])

    plain = decorated_loops = 0
    for start in range(1, n + 1):
        if start in visited_middle:
            continue
        blob = False
        side, p = "y", start
        while True:
            visited_middle.add(p if side == "y" else p - n)
            blob = blob or decorated(side, p)
            other = parts[side].partner[p]
            blob = blob or decorated(side, other)
            if side == "y":
                side, p = "x", other + n
            else:
                side, p = "y", other - n
            if side == "y" and p == start:
                break
        if blob:
            decorated_loops += 1
        else:
            plain += 1
    return tuple(pairs), frozenset(blobs), plain, decorated_loops


def concat_tl(x: TLDiagram, y: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack x over y; returns the bridge and the number of closed loops."""
    pairs, _, loops, _ = _concatenate(x, y)
    return TLDiagram(x.n, pairs), loops


def concat_blob(x: BlobDiagram, y: BlobDiagram) -> Concatenation:
    """Stack x over y, collapsing repeated blobs and counting both kinds of loop."""
    pairs, blobs, plain, decorated_loops = _concatenate(x, y)
    return Concatenation(BlobDiagram(x.n, pairs, blobs), plain, decorated_loops)


def identity_diagram(n: int, blob: bool = True) -> TLDiagram:
    pairs = tuple((i, n + i) for i in range(1, n + 1))
    return BlobDiagram(n, pairs) if blob else TLDiagram(n, pairs)


def generator_diagram(kind: str, n: int, i: int | None = None, blob: bool = True) -> TLDiagram:
    """Diagram of U_i (kind "U") or of the blob generator e (kind "e").

    Raises:
        IndexOutOfRange: If i is not in 1..n-1 for U_i, or n < 1 for e
    """
    if kind == GEN_E:
        if n < 1:
            raise IndexOutOfRange(1, n, "blob generator")
        pairs = tuple((j, n + j) for j in range(1, n + 1))
        return BlobDiagram(n, pairs, frozenset({1}))
    if kind != GEN_U:
        raise ValueError(f"Unknown generator kind {kind!r}")
    if i is None or not 1 <= i < n:
        raise IndexOutOfRange(i if i is not None else 0, n, "U index")
    pairs = [(i, i + 1), (n + i, n + i + 1)]
    pairs += [(j, n + j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return BlobDiagram(n, tuple(pairs)) if blob else TLDiagram(n, tuple(pairs))


@dataclass(frozen=True)
class HalfDiagram:
    """One edge of a diagram: arcs, through-line endpoints and decorations."""

    n: int
    arcs: tuple[Pair, ...]
    verticals: tuple[int, ...]
    decorated_arcs: frozenset[int] = frozenset()
    vertical_decorated: bool = False

    def is_covered(self, arc: Pair) -> bool:
        if arc[0] in self.decorated_arcs:
            return True
        if self.vertical_decorated and arc[0] > self.verticals[0]:
            return True
        return any(
            c < arc[0] and arc[1] < d for c, d in self.arcs if c in self.decorated_arcs
        )


def _bracket_structures(n: int) -> list[tuple[tuple[Pair, ...], tuple[int, ...]]]:
    results = []

    def extend(k: int, open_: list[int], arcs: list[Pair], verticals: list[int]) -> None:
        remaining = n - k + 1
        if len(open_) > remaining:
            return
        if k > n:
            if not open_:
                results.append((tuple(sorted(arcs)), tuple(verticals)))
            return
        extend(k + 1, open_ + [k], arcs, verticals)
        if open_:
            extend(k + 1, open_[:-1], arcs + [(open_[-1], k)], verticals)
        else:
            extend(k + 1, open_, arcs, verticals + [k])

    extend(1, [], [], [])
    return results


@lru_cache(maxsize=None)
def half_diagrams(n: int, blob: bool = True) -> tuple[HalfDiagram, ...]:
    """All half diagrams on n points (decorated ones when blob is True)."""
    halves = []
    for arcs, verticals in _bracket_structures(n):
        if not blob:
            halves.append(HalfDiagram(n, arcs, verticals))
            continue
        limit = verticals[0] if verticals else n + 1
        outer = [a for a, b in arcs if b < limit and not any(c < a and b < d for c, d in arcs)]
        for mask in range(1 << len(outer)):
            chosen = frozenset(a for j, a in enumerate(outer) if mask >> j & 1)
            halves.append(HalfDiagram(n, arcs, verticals, chosen, False))
            if verticals:
                halves.append(HalfDiagram(n, arcs, verticals, chosen, True))
    return tuple(halves)


def half_to_bitableau(half: HalfDiagram) -> Bitableau:
    """Bitableau of a decorated half diagram.

    With an undecorated (or absent) leftmost through line, k goes to the
    second component when it is an uncovered right endpoint or a covered left
    endpoint, and through lines go to the first component. With a decorated
    leftmost through line, k goes to the first component when it is an
    uncovered left endpoint or a covered right endpoint, and through lines go
    to the second component.
    """
    first, second = [], []
    for arc in half.arcs:
        covered = half.is_covered(arc)
        left, right = arc
        if half.vertical_decorated:
            (first if not covered else second).append(left)
            (first if covered else second).append(right)
        else:
            (second if covered else first).append(left)
            (second if not covered else first).append(right)
    (second if half.vertical_decorated else first).extend(half.verticals)
    return Bitableau(tuple(sorted(first)), tuple(sorted(second)))


def half_to_two_column(half: HalfDiagram) -> TwoColTableau:
    right = {b for _, b in half.arcs}
    return TwoColTableau(
        tuple(k for k in range(1, half.n + 1) if k not in right), tuple(sorted(right))
    )


def two_column_to_half(tau: TwoColTableau) -> HalfDiagram:
    stack: list[int] = []
    arcs = []
    for k in range(1, tau.n + 1):
        if tau.column(k) == 1:
            stack.append(k)
        else:
            arcs.append((stack.pop(), k))
    return HalfDiagram(tau.n, tuple(sorted(arcs)), tuple(stack))


@lru_cache(maxsize=None)
def _halves_by_bitableau(n: int) -> dict[Bitableau, HalfDiagram]:
    table = {half_to_bitableau(h): h for h in half_diagrams(n)}
    if len(table) != len(half_diagrams(n)):
        raise InvalidDiagram(f"Half diagram map is not injective for n={n}")
    return table


def bitableau_to_half(t: Bitableau) -> HalfDiagram:
    return _halves_by_bitableau(t.n)[t]


def split(d: TLDiagram) -> tuple[HalfDiagram, HalfDiagram]:
    """Top and bottom halves of a diagram."""
    n = d.n
    blobs = d.blobs if isinstance(d, BlobDiagram) else frozenset()
    verticals = d.verticals
    lead_decorated = bool(verticals) and verticals[0][0] in blobs
    top = HalfDiagram(
        n,
        tuple(d.top_arcs),
        tuple(a for a, _ in verticals),
        frozenset(a for a, b in d.top_arcs if a in blobs),
        lead_decorated,
    )
    bottom = HalfDiagram(
        n,
        tuple(d.bottom_arcs),
        tuple(sorted(b - n for _, b in verticals)),
        frozenset(a for a, b in d.bottom_arcs if a + n in blobs),
        lead_decorated,
    )
    return top, bottom


def glue(top: HalfDiagram, bottom: HalfDiagram, blob: bool = True) -> TLDiagram:
    """Diagram with the given halves; through lines are joined left to right."""
    n = top.n
    if len(top.verticals) != len(bottom.verticals) or top.vertical_decorated != bottom.vertical_decorated:
        raise ShapeMismatch("Half diagrams have different through-line data")
    pairs = list(top.arcs)
    pairs += [(a + n, b + n) for a, b in bottom.arcs]
    pairs += [(a, b + n) for a, b in zip(top.verticals, bottom.verticals)]
    if not blob:
        return TLDiagram(n, tuple(pairs))
    blobs = set(top.decorated_arcs) | {a + n for a in bottom.decorated_arcs}
    if top.vertical_decorated:
        blobs.add(top.verticals[0])
    return BlobDiagram(n, tuple(pairs), frozenset(blobs))


def diagram_to_bitableaux(m: BlobDiagram) -> tuple[Bitableau, Bitableau]:
    top, bottom = split(m)
    return half_to_bitableau(top), half_to_bitableau(bottom)


def bitableaux_to_diagram(top: Bitableau, bot: Bitableau) -> BlobDiagram:
    """The unique blob diagram m with t_top(m) = top and t_bot(m) = bot.

    Raises:
        ShapeMismatch: If the bitableaux have different shapes
    """
    if top.shape != bot.shape:
        raise ShapeMismatch(
            f"Bitableaux {top} and {bot} have different shapes",
            details={"top": str(top.shape), "bottom": str(bot.shape)},
        )
    return glue(bitableau_to_half(top), bitableau_to_half(bot))


def tl_bijection(beta: TLDiagram) -> tuple[TwoColTableau, TwoColTableau]:
    top, bottom = split(beta)
    return half_to_two_column(top), half_to_two_column(bottom)


def tl_from_tableaux(top: TwoColTableau, bot: TwoColTableau) -> TLDiagram:
    if top.shape != bot.shape:
        raise ShapeMismatch(
            f"Tableaux {top} and {bot} have different shapes",
            details={"top": str(top.shape), "bottom": str(bot.shape)},
        )
    return glue(two_column_to_half(top), two_column_to_half(bot), blob=False)


def blob_diagrams(n: int) -> list[BlobDiagram]:
    """Every blob diagram on 2n points.

    Each planar matching is taken with every set of blobs on its exposed
    lines, so the list does not depend on the tableau bijection.
    """
    diagrams = []
    for matching in planar_matchings(n):
        exposed = sorted(pair[0] for pair in _exposed(matching.pairs, n))
        for k in range(len(exposed) + 1):
            for blobs in combinations(exposed, k):
                diagrams.append(BlobDiagram(n, matching.pairs, frozenset(blobs)))
    return diagrams


def tl_diagrams(n: int) -> list[TLDiagram]:
    """The Temperley-Lieb diagram basis, grouped by shape (most dominant first)."""
    return [
        tl_from_tableaux(s, t)
        for shape in tl_shapes(n)
        for s in two_column_tableaux(shape)
        for t in two_column_tableaux(shape)
    ]


def planar_matchings(n: int) -> list[TLDiagram]:
    """Every planar perfect matching on 2n points, built directly in the linear order."""

    def matchings(positions: list[int]) -> list[list[Pair]]:
        if not positions:
            return [[]]
        first, rest = positions[0], positions[1:]
        result = []
        for j in range(0, len(rest), 2):
            inside, outside = rest[:j], rest[j + 1 :]
            for left in matchings(inside):
                for right in matchings(outside):
                    result.append([(first, rest[j])] + left + right)
        return result

    def point(position: int) -> int:
        return position if position <= n else 3 * n + 1 - position

    return [
        TLDiagram(n, tuple((point(a), point(b)) for a, b in pairing))
        for pairing in matchings(list(range(1, 2 * n + 1)))
    ]


def _row(half: HalfDiagram, marks: set[int]) -> str:
    symbols = {}
    for a, b in half.arcs:
        symbols[a], symbols[b] = "(", ")"
    for v in half.verticals:
        symbols[v] = "|"
    return "".join(symbols[k] + ("*" if k in marks else " ") for k in range(1, half.n + 1)).rstrip()


def render_ascii(d: TLDiagram) -> str:
    """Two-line bracket rendering: '(' and ')' for arcs, '|' for through lines, '*' after a blob."""
    top, bottom = split(d)
    top_marks = set(top.decorated_arcs)
    if top.vertical_decorated:
        top_marks.add(top.verticals[0])
    return f"top {_row(top, top_marks)}\nbot {_row(bottom, set(bottom.decorated_arcs))}"


def _parse_row(text: str, n: int) -> tuple[list[Pair], list[int], set[int]]:
    text = text.ljust(2 * n)
    stack: list[int] = []
    arcs, verticals, marks = [], [], set()
    for k in range(1, n + 1):
        symbol, mark = text[2 * k - 2], text[2 * k - 1]
        if symbol == "(":
            stack.append(k)
        elif symbol == ")":
            arcs.append((stack.pop(), k))
        elif symbol == "|":
            verticals.append(k)
        else:
            raise InvalidDiagram(f"Unexpected symbol {symbol!r} in {text!r}")
        if mark == "*":
            marks.add(k)
    return sorted(arcs), verticals, marks


def parse_ascii(text: str, n: int, blob: bool = True) -> TLDiagram:
    """Inverse of render_ascii."""
    lines = text.splitlines()
    top_arcs, top_verticals, top_marks = _parse_row(lines[0][4:], n)
    bottom_arcs, bottom_verticals, bottom_marks = _parse_row(lines[1][4:], n)
    lead = bool(top_verticals) and top_verticals[0] in top_marks
    top = HalfDiagram(
        n, tuple(top_arcs), tuple(top_verticals), frozenset(top_marks - set(top_verticals)), lead
    )
    bottom = HalfDiagram(n, tuple(bottom_arcs), tuple(bottom_verticals), frozenset(bottom_marks), lead)
    return glue(top, bottom, blob=blob)
