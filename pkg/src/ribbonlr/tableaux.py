"""Semistandard n-ribbon tableaux stored as chains of partitions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .shapes import (
    CoreQuotient,
    Partition,
    combine_core_quotient,
    SkewShape,
    core_quotient,
    format_skew,
    horizontal_strips,
    is_horizontal_strip,
    parse_skew,
    strip_ribbons,
)

# Direction in which head diagonals are scanned by the reading word.  Pinned
# by the Yamanouchi rule for q-Littlewood-Richardson coefficients; see
# ribbonlr.domino.calibrate_orientation.
READING_ORIENTATION = "descending"


@dataclass(frozen=True)
class RibbonEntry:
    label: int
    head_diag: int
    spin: int
    runner: int


@dataclass(frozen=True)
class RibbonTableau:
    """Chain ``inner = chain[0] ⊆ ... ⊆ chain[-1] = outer``; ribbons of step k carry label k."""

    n: int
    chain: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(Partition(p) for p in self.chain))
        if not self.chain:
            raise ValueError("a tableau needs at least its inner shape")

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.chain[-1], self.chain[0])

    @property
    def max_label(self) -> int:
        return len(self.chain) - 1

    @property
    def ribbons(self) -> tuple[RibbonEntry, ...]:
        return _ribbons(self.n, self.chain)

    @property
    def weight(self) -> tuple[int, ...]:
        return tuple((b.size - a.size) // self.n for a, b in zip(self.chain, self.chain[1:]))

    def is_semistandard(self) -> bool:
        return all(is_horizontal_strip(SkewShape(b, a), self.n)
                   for a, b in zip(self.chain, self.chain[1:]))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shape": format_skew(self.shape),
            "chain": [",".join(map(str, p)) for p in self.chain],
            "ribbons": [{"label": r.label, "head_diag": r.head_diag, "spin": r.spin}
                        for r in self.ribbons],
        }

    @classmethod
    def from_json(cls, data: dict) -> RibbonTableau:
        chain = [parse_skew(p).outer for p in data["chain"]]
        t = cls(data["n"], tuple(chain))
        if format_skew(t.shape) != format_skew(parse_skew(data["shape"])):
            raise ValueError("chain does not match shape")
        return t


@lru_cache(maxsize=None)
def _ribbons(n: int, chain: tuple[Partition, ...]) -> tuple[RibbonEntry, ...]:
    out = []
    for label, (a, b) in enumerate(zip(chain, chain[1:]), start=1):
        for diag, spin in strip_ribbons(b, a, n):
            out.append(RibbonEntry(label, diag, spin, diag % n))
    return tuple(out)


@dataclass(frozen=True)
class ReadingWord:
    letters: tuple[int, ...]
    diagonals: tuple[int, ...]


def enumerate_tableaux(shape: SkewShape, n: int, max_label: int) -> list[RibbonTableau]:
    """All semistandard n-ribbon tableaux of ``shape`` with labels in [1, max_label]."""
    return [RibbonTableau(n, chain) for chain in _chains(shape.inner, shape.outer, n, max_label)]


def iter_chains(inner: Partition, outer: Partition, n: int, steps: int) -> Iterator[tuple[Partition, ...]]:
    yield from _chains(Partition(inner), Partition(outer), n, steps)


@lru_cache(maxsize=None)
def _strips(inner: Partition, bound: Partition, n: int) -> tuple[Partition, ...]:
    return tuple(horizontal_strips(inner, bound, n))


@lru_cache(maxsize=None)
def _chains(inner: Partition, outer: Partition, n: int, steps: int) -> tuple[tuple[Partition, ...], ...]:
    if steps == 0:
        return ((inner,),) if inner == outer else ()
    out = []
    for kappa in _strips(inner, outer, n):
        for rest in _chains(kappa, outer, n, steps - 1):
            out.append((inner, *rest))
    return tuple(out)


def standard_tableaux(shape: SkewShape, n: int) -> list[RibbonTableau]:
    """Tableaux with every label 1..N used exactly once (N = number of ribbons)."""
    if shape.size % n:
        return []
    count = shape.size // n
    return [t for t in enumerate_tableaux(shape, n, count) if all(w == 1 for w in t.weight)]


def spin(t: RibbonTableau) -> int:
    return sum(r.spin for r in t.ribbons)


def _is_inversion(a: RibbonEntry, b: RibbonEntry, n: int) -> bool:
    if a.label > b.label:
        a, b = b, a
    return a.label < b.label and 0 < a.head_diag - b.head_diag < n


def inversions(t: RibbonTableau) -> int:
    """Pairs of ribbons labelled a < b whose head diagonals satisfy 0 < diag(a) - diag(b) < n."""
    return sum(1 for x, y in combinations(t.ribbons, 2) if _is_inversion(x, y, t.n))


def spin_inversion_constant(shape: SkewShape, n: int) -> tuple[int, int]:
    """Return ``(e, c)`` with spin(T) = e - c * inv(T) over all standard tableaux.

    ``c`` is searched in (2, 1); 2 is reported whenever it fits.
    """
    data = {(spin(t), inversions(t)) for t in standard_tableaux(shape, n)}
    if not data:
        raise ValueError(f"no standard {n}-ribbon tableau of shape {format_skew(shape)}")
    for c in (2, 1):
        values = {s + c * i for s, i in data}
        if len(values) == 1:
            return values.pop(), c
    raise ValueError(f"relation violated for {format_skew(shape)}, n={n}: {sorted(data)}")


def _reading_key(r: RibbonEntry, orientation: str):
    d = r.head_diag if orientation == "ascending" else -r.head_diag
    return (d, -r.label, r.runner)


def reading_word(t: RibbonTableau, orientation: str | None = None) -> ReadingWord:
    """Labels by head diagonal in reading orientation, larger labels first on a diagonal."""
    orientation = orientation or READING_ORIENTATION
    if orientation not in ("ascending", "descending"):
        raise ValueError(f"unknown orientation {orientation!r}")
    rs = sorted(t.ribbons, key=lambda r: _reading_key(r, orientation))
    return ReadingWord(tuple(r.label for r in rs), tuple(r.head_diag for r in rs))


def _before(d: int, j: int, orientation: str) -> bool:
    return d < j if orientation == "ascending" else d > j


def prefix_weights(t: RibbonTableau, j: int, orientation: str | None = None):
    """Weights of the labels read strictly before diagonal ``j`` and through it."""
    orientation = orientation or READING_ORIENTATION
    size = t.max_label
    before = [0] * size
    through = [0] * size
    for r in t.ribbons:
        if _before(r.head_diag, j, orientation):
            before[r.label - 1] += 1
            through[r.label - 1] += 1
        elif r.head_diag == j:
            through[r.label - 1] += 1
    return tuple(before), tuple(through)


# ---------------------------------------------------------------------------
# Quotient view


@dataclass(frozen=True)
class QuotientCell:
    runner: int
    row: int
    col: int
    label: int
    diag: int


def quotient_cells(t: RibbonTableau) -> list[QuotientCell]:
    """Cells of quot_n(T) with their labels and diagonals ``n * content + c_i``."""
    n = t.n
    offsets = core_quotient(t.chain[0], n).offsets
    quots = [core_quotient(p, n).quotient for p in t.chain]
    cells = []
    for label in range(1, len(t.chain)):
        for i in range(n):
            a, b = quots[label - 1][i], quots[label][i]
            for row in range(len(b)):
                for col in range(a.part(row), b[row]):
                    cells.append(QuotientCell(i, row, col, label, n * (col - row) + offsets[i]))
    return cells


def tableau_from_quotient(n: int, inner: Partition, labels: dict, max_label: int) -> RibbonTableau:
    """Rebuild a ribbon tableau from quotient cells ``{(runner, row, col): label}``."""
    cq = core_quotient(Partition(inner), n)
    chain = [Partition(inner)]
    for k in range(1, max_label + 1):
        quot = []
        for i in range(n):
            rows = list(cq.quotient[i])
            for (runner, row, col), lab in labels.items():
                if runner == i and lab <= k:
                    while len(rows) <= row:
                        rows.append(0)
                    rows[row] = max(rows[row], col + 1)
            quot.append(Partition(rows))
        chain.append(combine_core_quotient(CoreQuotient(n, cq.core, tuple(quot), cq.offsets)))
    return RibbonTableau(n, tuple(chain))


def quotient_is_semistandard(labels: dict) -> bool:
    """Rows weakly increase and columns strictly increase in every quotient component."""
    for (i, r, c), lab in labels.items():
        right = labels.get((i, r, c + 1))
        if right is not None and right < lab:
            return False
        below = labels.get((i, r + 1, c))
        if below is not None and below <= lab:
            return False
    return True


def _inv_involving(cells: list[QuotientCell], x: QuotientCell, n: int) -> int:
    count = 0
    for z in cells:
        if z is x:
            continue
        a, b = (x, z) if x.label < z.label else (z, x)
        if a.label < b.label and 0 < a.diag - b.diag < n:
            count += 1
    return count


def verify_column_pair_lemma(shape: SkewShape, n: int, max_label: int) -> bool:
    """Exhaustively check inv_x + inv_y is unchanged when some other i becomes i+1."""
    return not column_pair_counterexamples(shape, n, max_label)


def column_pair_counterexamples(shape: SkewShape, n: int, max_label: int) -> list[dict]:
    failures = []
    for t in enumerate_tableaux(shape, n, max_label):
        cells = quotient_cells(t)
        at = {(c.runner, c.row, c.col): c for c in cells}
        labels = {k: c.label for k, c in at.items()}
        for x in cells:
            y = at.get((x.runner, x.row + 1, x.col))
            if y is None or y.label != x.label + 1:
                continue
            i = x.label
            before = _inv_involving(cells, x, n) + _inv_involving(cells, y, n)
            for z in cells:
                if z.label != i or z is x:
                    continue
                key = (z.runner, z.row, z.col)
                changed = dict(labels)
                changed[key] = i + 1
                if not quotient_is_semistandard(changed):
                    continue
                new_cells = [QuotientCell(c.runner, c.row, c.col, changed[(c.runner, c.row, c.col)], c.diag)
                             for c in cells]
                nx = next(c for c in new_cells if (c.runner, c.row, c.col) == (x.runner, x.row, x.col))
                ny = next(c for c in new_cells if (c.runner, c.row, c.col) == (y.runner, y.row, y.col))
                after = _inv_involving(new_cells, nx, n) + _inv_involving(new_cells, ny, n)
                if before != after:
                    failures.append({"tableau": t.to_json(), "x": [x.runner, x.row, x.col],
                                     "y": [y.runner, y.row, y.col], "changed": list(key),
                                     "before": before, "after": after})
    return failures


def weight_counter(t: RibbonTableau) -> Counter:
    return Counter(r.label for r in t.ribbons)
