"""Partitions, skew shapes and the n-abacus.

A partition ``p`` is encoded by its beta-set ``{p_j - j : j >= 1}``: a bead
sits at every position in the set and every other position is a gap.  With
this normalization the empty partition has beads exactly at the negative
integers.  Moving a bead from ``v`` to ``v + n`` adds an n-ribbon whose cells
have contents ``v + 1, ..., v + n``.

Runner ``i`` of the abacus holds the positions congruent to ``i`` modulo
``n``.  Reading a runner as a bead configuration of its own (position
``i + n*k`` becomes ``k``) and shifting it to charge zero gives the i-th
quotient partition; pushing every bead down as far as it goes gives the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-indexed), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(other[i] <= self[i] for i in range(len(other)))

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def cells(self) -> list[tuple[int, int]]:
        """Cells (row, col), 0-indexed, in row-major order."""
        return [(r, c) for r, length in enumerate(self) for c in range(length)]

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)

    @classmethod
    def parse(cls, text: str) -> Partition:
        return parse_partition(text)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``"2,2"`` (or ``""`` for the empty partition)."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        return Partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def format_partition(p: Iterable[int]) -> str:
    return ",".join(str(x) for x in p)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{format_partition(self.inner)} is not contained in "
                             f"{format_partition(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, length in enumerate(self.outer)
                for c in range(self.inner.part(r), length)]

    def __str__(self):
        return format_skew(self)

    @classmethod
    def parse(cls, text: str) -> SkewShape:
        return parse_skew(text)


def parse_skew(text: str) -> SkewShape:
    """Parse ``"4,2/2,1"``; ``"2,2/"`` and ``"2,2"`` both mean inner = empty."""
    outer, _, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner))


def format_skew(s: SkewShape) -> str:
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"


def partitions_of(size: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield EMPTY
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, first):
            yield Partition((first, *rest))


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for k in range(max_size + 1):
        yield from partitions_of(k)


def subpartitions(p: Partition) -> Iterator[Partition]:
    """Every partition contained in ``p`` (including ``p`` and the empty one)."""
    def rec(i, bound):
        if i == len(p):
            yield ()
            return
        for x in range(min(p[i], bound), -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in rec(i + 1, x):
                    yield (x, *rest)
    for parts in rec(0, p[0] if p else 0):
        yield Partition(parts)


# ---------------------------------------------------------------------------
# Edge sequences


@dataclass(frozen=True)
class EdgeSequence:
    """Bead configuration: beads at every position below ``start``, ``bits``
    on the window ``start, start+1, ...`` and gaps above the window.

    Canonical form has no leading 1 and no trailing 0 in ``bits``.
    """

    start: int
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = list(self.bits)
        start = self.start
        while bits and bits[0] == 1:
            bits.pop(0)
            start += 1
        while bits and bits[-1] == 0:
            bits.pop()
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "bits", tuple(bits))

    def bit(self, i: int) -> int:
        if i < self.start:
            return 1
        k = i - self.start
        return self.bits[k] if k < len(self.bits) else 0

    def window(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self.bit(i) for i in range(lo, hi))

    @property
    def charge(self) -> int:
        upper = self.start + len(self.bits)
        beads_above = sum(self.bit(i) for i in range(0, max(upper, 0)))
        gaps_below = sum(1 - self.bit(i) for i in range(min(self.start, 0), 0))
        return beads_above - gaps_below

    def beads(self, lo: int) -> list[int]:
        """Bead positions >= lo, ascending.  Every position below lo holds a bead."""
        hi = self.start + len(self.bits)
        return [i for i in range(lo, hi) if self.bit(i)]

    def to_partition(self) -> Partition:
        if self.charge != 0:
            raise ValueError("edge sequence does not have charge zero")
        hi = self.start + len(self.bits)
        parts = []
        j = 0
        for pos in range(hi - 1, self.start - 1, -1):
            if self.bit(pos):
                j += 1
                parts.append(pos + j)
        return Partition(parts)

    @classmethod
    def from_beads(cls, beads: Iterable[int], lo: int) -> EdgeSequence:
        """Beads everywhere below ``lo`` plus the given positions (all >= lo)."""
        beads = set(beads)
        hi = max(beads, default=lo - 1) + 1
        return cls(lo, tuple(1 if i in beads else 0 for i in range(lo, max(hi, lo))))


def edge_sequence(p: Partition) -> EdgeSequence:
    """Charge-zero edge sequence of ``p``: bit i is 1 iff i = p_j - j for some j."""
    p = Partition(p)
    ell = len(p)
    lo = -ell
    beads = {p[j] - (j + 1) for j in range(ell)}
    return EdgeSequence.from_beads(beads, lo)


def add_ribbon(e: EdgeSequence, v: int, n: int) -> tuple[EdgeSequence, int, int]:
    """Move the bead at ``v`` to ``v + n``.

    Returns the new edge sequence, the spin of the added ribbon (beads strictly
    between ``v`` and ``v + n``, i.e. height - 1) and its head diagonal
    ``v + n`` (content of the ribbon's maximal-content cell).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if e.bit(v) != 1 or e.bit(v + n) != 0:
        raise ValueError(f"no ribbon addable at {v}")
    lo = min(e.start, v)
    hi = max(e.start + len(e.bits), v + n + 1)
    bits = [e.bit(i) for i in range(lo, hi)]
    spin = sum(bits[v - lo + 1:v + n - lo])
    bits[v - lo] = 0
    bits[v + n - lo] = 1
    return EdgeSequence(lo, tuple(bits)), spin, v + n


def remove_ribbon(e: EdgeSequence, u: int, n: int) -> tuple[EdgeSequence, int, int]:
    """Inverse of :func:`add_ribbon`: move the bead at ``u`` down to ``u - n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if e.bit(u) != 1 or e.bit(u - n) != 0:
        raise ValueError(f"no ribbon removable at {u}")
    lo = min(e.start, u - n)
    hi = max(e.start + len(e.bits), u + 1)
    bits = [e.bit(i) for i in range(lo, hi)]
    spin = sum(bits[u - n - lo + 1:u - lo])
    bits[u - lo] = 0
    bits[u - n - lo] = 1
    return EdgeSequence(lo, tuple(bits)), spin, u


# ---------------------------------------------------------------------------
# Cores and quotients


@dataclass(frozen=True)
class CoreQuotient:
    n: int
    core: Partition
    quotient: tuple[Partition, ...]
    offsets: tuple[int, ...]

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple((c - i) // self.n for i, c in enumerate(self.offsets))


def _runner_partition(ks: list[int], k_lo: int) -> tuple[Partition, int]:
    """Partition and charge of a runner holding beads ``ks`` plus every k < k_lo."""
    kset = set(ks)
    charge = sum(1 for k in ks if k >= 0) - sum(1 for k in range(k_lo, 0) if k not in kset)
    parts = [k - charge + j for j, k in enumerate(sorted(ks, reverse=True), start=1)]
    return Partition(parts), charge


@lru_cache(maxsize=None)
def core_quotient(p: Partition, n: int) -> CoreQuotient:
    """n-core and n-quotient of ``p`` read off the runners of its abacus.

    ``offsets[i]`` is the integer c_i with ``head_diag = n * content + c_i``
    for every ribbon whose bead lives on runner i.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = Partition(p)
    ell = len(p)
    k_lo = -(ell // n + 1)
    lo = n * k_lo  # <= -ell, so everything below lo is a bead on every runner
    beads = {p[j] - (j + 1) for j in range(ell)} | set(range(lo, -ell))
    top = max(beads, default=lo)
    quotient, charges = [], []
    for i in range(n):
        ks = [k for k in range(k_lo, (top - i) // n + 1) if i + n * k in beads]
        q, s = _runner_partition(ks, k_lo)
        quotient.append(q)
        charges.append(s)
    base = min(k_lo, min(charges))
    core_beads = {i + n * k for i, s in enumerate(charges) for k in range(base, s)}
    core = EdgeSequence.from_beads(core_beads, n * base).to_partition()
    offsets = tuple(i + n * s for i, s in enumerate(charges))
    return CoreQuotient(n, core, tuple(quotient), offsets)


def is_core(p: Partition, n: int) -> bool:
    return not any(core_quotient(Partition(p), n).quotient)


def combine_core_quotient(cq: CoreQuotient) -> Partition:
    """Rebuild the partition with the given n-core and n-quotient."""
    n = cq.n
    core = Partition(cq.core)
    quotient = [Partition(q) for q in cq.quotient]
    if len(quotient) != n:
        raise ValueError(f"quotient must have {n} components")
    if not is_core(core, n):
        raise ValueError(f"{format_partition(core)} is not a {n}-core")
    charges = core_quotient(core, n).charges
    base = min(s - len(q) - 1 for q, s in zip(quotient, charges))
    beads = set()
    for i, (q, s) in enumerate(zip(quotient, charges)):
        beads.update(i + n * (q[j] - (j + 1) + s) for j in range(len(q)))
        beads.update(i + n * k for k in range(base, s - len(q)))
    return EdgeSequence.from_beads(beads, n * base).to_partition()


def quotient_cell_diag(n: int, offset: int, row: int, col: int) -> int:
    """Head diagonal of the ribbon for quotient cell (row, col), 0-indexed."""
    return n * (col - row) + offset


def is_ordinary_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    if not outer.contains(inner):
        return False
    return all(outer.part(r + 1) <= inner.part(r) for r in range(len(outer)))


def is_horizontal_strip(shape: SkewShape, n: int) -> bool:
    """Each quotient component gains an ordinary horizontal strip and the cores agree."""
    a = core_quotient(shape.outer, n)
    b = core_quotient(shape.inner, n)
    if a.core != b.core:
        return False
    return all(is_ordinary_horizontal_strip(x, y) for x, y in zip(a.quotient, b.quotient))


def is_tileable(shape: SkewShape, n: int) -> bool:
    """λ/μ can be tiled by n-ribbons iff the cores agree and the quotients nest."""
    a = core_quotient(shape.outer, n)
    b = core_quotient(shape.inner, n)
    return a.core == b.core and all(x.contains(y) for x, y in zip(a.quotient, b.quotient))


def ordinary_horizontal_strips(inner: Partition, bound: Partition) -> Iterator[Partition]:
    """Partitions ν with inner ⊆ ν ⊆ bound and ν/inner a horizontal strip."""
    rows = len(bound)

    def rec(r):
        if r == rows:
            yield ()
            return
        hi = bound[r] if r == 0 else min(bound[r], inner.part(r - 1))
        for x in range(inner.part(r), hi + 1):
            for rest in rec(r + 1):
                yield (x, *rest)

    for parts in rec(0):
        cand = list(parts)
        # keep it a partition: later rows are automatically <= earlier inner rows
        yield Partition(cand)


def ordinary_strip_bottoms(outer: Partition, inner: Partition):
    """κ with inner ⊆ κ ⊆ outer and outer/κ a horizontal strip."""
    rows = len(outer)

    def rec(r):
        if r == rows:
            yield ()
            return
        lo = max(inner.part(r), outer.part(r + 1))
        for x in range(lo, outer[r] + 1):
            for rest in rec(r + 1):
                yield (x, *rest)

    for parts in rec(0):
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            yield Partition(parts)


def horizontal_strips(inner: Partition, bound: Partition, n: int) -> Iterator[Partition]:
    """Partitions κ with inner ⊆ κ ⊆ bound and κ/inner a horizontal n-ribbon strip.

    Yields nothing when inner and bound have different cores.
    """
    a = core_quotient(Partition(inner), n)
    b = core_quotient(Partition(bound), n)
    if a.core != b.core or not all(y.contains(x) for x, y in zip(a.quotient, b.quotient)):
        return
    choices = [list(ordinary_horizontal_strips(x, y)) for x, y in zip(a.quotient, b.quotient)]

    def rec(i):
        if i == n:
            yield ()
            return
        for c in choices[i]:
            for rest in rec(i + 1):
                yield (c, *rest)

    for quot in rec(0):
        yield combine_core_quotient(CoreQuotient(n, a.core, quot, a.offsets))


# ---------------------------------------------------------------------------
# Horizontal strips as bead moves


def strip_steps(old: Iterable[int], new: Iterable[int], n: int) -> list[tuple[int, int, int]]:
    """Canonical tiling of a horizontal ribbon strip given as two bead sets.

    ``old`` and ``new`` list the bead positions inside a common window; the
    two configurations must agree outside it.  On each runner the k-th bead
    of ``old`` travels to the k-th bead of ``new`` one ribbon at a time.
    Among the single-ribbon moves available at each point the one with the
    smallest target is executed first.  This puts the head of every ribbon on
    the northern border of the strip, which is the unique such tiling.

    Returns ``(source, target, spin)`` per ribbon in execution order.
    """
    old, new = sorted(set(old)), sorted(set(new))
    paths = []
    for i in range(n):
        a = [b for b in old if b % n == i]
        b = [x for x in new if x % n == i]
        if len(a) != len(b):
            raise ValueError("configurations differ in charge on a runner")
        for j, (src, dst) in enumerate(zip(a, b)):
            if dst < src or (j + 1 < len(a) and dst >= a[j + 1]):
                raise ValueError("not a horizontal ribbon strip")
            if dst > src:
                paths.append([src, dst])
    occupied = set(old)
    steps = []
    while paths:
        path = min(paths, key=lambda pd: pd[0])
        src = path[0]
        spin = sum(1 for x in range(src + 1, src + n) if x in occupied)
        occupied.remove(src)
        occupied.add(src + n)
        steps.append((src, src + n, spin))
        path[0] += n
        if path[0] == path[1]:
            paths.remove(path)
    return steps


def _beads_from(p: Partition, lo: int) -> set[int]:
    ell = len(p)
    return {p[j] - (j + 1) for j in range(ell)} | set(range(lo, -ell))


@lru_cache(maxsize=None)
def strip_ribbons(outer: Partition, inner: Partition, n: int) -> tuple[tuple[int, int], ...]:
    """``(head_diag, spin)`` of each ribbon in the canonical tiling of outer/inner."""
    lo = -max(len(outer), len(inner))
    steps = strip_steps(_beads_from(inner, lo), _beads_from(outer, lo), n)
    return tuple((target, spin) for _, target, spin in steps)


def strip_spin(outer: Partition, inner: Partition, n: int) -> int:
    return sum(s for _, s in strip_ribbons(outer, inner, n))
