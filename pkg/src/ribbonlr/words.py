"""(1,2,blank)-words, n-local inversions and the two-letter symmetry identity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

from .polynomials import LaurentQ
from .shapes import Partition, SkewShape, is_horizontal_strip, strip_ribbons
from . import tableaux as tab

BLANK = None


@dataclass(frozen=True)
class Word123:
    letters: tuple
    n: int

    def __post_init__(self):
        letters = tuple(self.letters)
        if any(a not in (1, 2, BLANK) for a in letters):
            raise ValueError(f"letters must be 1, 2 or blank: {letters!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    @property
    def form(self) -> frozenset[int]:
        """1-based positions of the blanks."""
        return frozenset(i + 1 for i, a in enumerate(self.letters) if a is BLANK)

    @property
    def weight(self) -> tuple[int, int]:
        return self.letters.count(1), self.letters.count(2)

    def is_valid(self) -> bool:
        a, n = self.letters, self.n
        return not any(a[i] == 2 and a[i + n] == 1 for i in range(len(a) - n))

    def __str__(self):
        return "".join("." if a is BLANK else str(a) for a in self.letters)

    @classmethod
    def parse(cls, text: str, n: int) -> Word123:
        try:
            letters = tuple(BLANK if ch == "." else {"1": 1, "2": 2}[ch] for ch in text.strip())
        except KeyError:
            raise ValueError(f"malformed word {text!r}: use 1, 2 and '.'") from None
        return cls(letters, n)


def local_inversions(w: Word123) -> int:
    """Pairs i < j with j - i < n, a_i = 2 and a_j = 1."""
    a = w.letters
    return sum(1 for i, j in combinations(range(len(a)), 2)
               if j - i < w.n and a[i] == 2 and a[j] == 1)


def _fill(m: int, form: Iterable[int], n: int) -> Iterator[Word123]:
    form = frozenset(form)
    free = [i for i in range(m) if i + 1 not in form]
    for letters in product((1, 2), repeat=len(free)):
        word = [BLANK] * m
        for i, a in zip(free, letters):
            word[i] = a
        w = Word123(tuple(word), n)
        if w.is_valid():
            yield w


def enumerate_words(m: int, form: Iterable[int], weight: tuple[int, int], n: int) -> list[Word123]:
    """Valid words of length m with blanks exactly at ``form`` and the given weight."""
    form = frozenset(form)
    if any(not 1 <= i <= m for i in form) or len(form) + sum(weight) != m:
        return []
    return sorted((w for w in _fill(m, form, n) if w.weight == tuple(weight)), key=str)


def linv_series(m: int, form: Iterable[int], n: int) -> dict[tuple[int, int], LaurentQ]:
    """Weight -> sum of q^linv over valid words of that form."""
    out: dict = {}
    for w in _fill(m, form, n):
        out[w.weight] = out.get(w.weight, LaurentQ()) + LaurentQ.monomial(local_inversions(w))
    return out


def verify_word_identity(m: int, form: Iterable[int], n: int) -> bool:
    """The linv distribution is unchanged by swapping the two weights."""
    series = linv_series(m, form, n)
    zero = LaurentQ()
    return all(series.get((b, a), zero) == c for (a, b), c in series.items())


def reverse_complement(w: Word123) -> Word123:
    """Reverse the word and exchange 1s with 2s."""
    if w.form:
        raise ValueError("bijection defined only for empty form")
    return Word123(tuple(3 - a for a in reversed(w.letters)), w.n)


def tableau_word(t: tab.RibbonTableau) -> Word123:
    """Reversed reading word of a two-label tableau on a horizontal strip.

    Diagonals of the strip's interval carrying no head become blanks.  With
    this orientation local inversions of the word are exactly the
    inversions of the tableau.
    """
    if t.max_label != 2 or not is_horizontal_strip(t.shape, t.n):
        raise ValueError("expected a two-label filling of a horizontal ribbon strip")
    rw = tab.reading_word(t)
    if len(set(rw.diagonals)) != len(rw.diagonals):
        raise AssertionError("two ribbon heads share a diagonal")
    at = dict(zip(rw.diagonals, rw.letters))
    if not at:
        return Word123((), t.n)
    lo, hi = min(at), max(at)
    diags = range(lo, hi + 1)
    if tab.READING_ORIENTATION == "ascending":
        diags = reversed(diags)
    return Word123(tuple(at.get(d, BLANK) for d in diags), t.n)


def strip_fillings(outer: Partition, inner: Partition, n: int) -> list[tab.RibbonTableau]:
    shape = SkewShape(Partition(outer), Partition(inner))
    if not is_horizontal_strip(shape, n):
        raise ValueError("not a horizontal ribbon strip")
    return tab.enumerate_tableaux(shape, n, 2)


def strip_diagonals(outer: Partition, inner: Partition, n: int) -> list[int]:
    return sorted(d for d, _ in strip_ribbons(Partition(outer), Partition(inner), n))
