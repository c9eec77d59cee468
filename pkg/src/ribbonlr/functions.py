"""LLT ribbon functions, horizontal strip series and the nested-strip identity."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .polynomials import LaurentQ, SymPoly, is_symmetric, skew_schur_polynomial
from .shapes import (
    CoreQuotient,
    Partition,
    SkewShape,
    combine_core_quotient,
    core_quotient,
    format_partition,
    horizontal_strips,
    is_horizontal_strip,
    is_tileable,
    partitions_up_to,
    strip_ribbons,
    strip_steps,
)


def ribbon_function(shape: SkewShape, n: int, m: int) -> SymPoly:
    """sum over semistandard n-ribbon tableaux T of shape with labels <= m of q^spin(T) x^T."""
    return _ribbon_function(shape.inner, shape.outer, n, m)


@lru_cache(maxsize=None)
def _ribbon_function(inner: Partition, outer: Partition, n: int, m: int) -> SymPoly:
    # peel off the strip of 1s, then recurse on the remaining labels
    if m == 0:
        return SymPoly.constant(0) if inner == outer else SymPoly(0)
    out: dict = {}
    for kappa in horizontal_strips(inner, outer, n):
        head = strip_ribbons(kappa, inner, n)
        s = sum(sp for _, sp in head)
        tail = _ribbon_function(kappa, outer, n, m - 1)
        for exps, c in tail.terms.items():
            key = (len(head), *exps)
            out[key] = out.get(key, LaurentQ()) + c.shift(s)
    return SymPoly(m, out)


def verify_symmetry(shape: SkewShape, n: int, m: int) -> bool:
    return is_symmetric(ribbon_function(shape, n, m))


def quotient_product(shape: SkewShape, n: int, m: int) -> SymPoly:
    """Product of the skew Schur polynomials of the n-quotient components."""
    a = core_quotient(shape.outer, n)
    b = core_quotient(shape.inner, n)
    out = SymPoly.constant(m)
    for x, y in zip(a.quotient, b.quotient):
        out = out * skew_schur_polynomial(x, y, m)
    return out


def quotient_product_check(shape: SkewShape, n: int, m: int) -> bool:
    """G(X; 1) equals the product of quotient skew Schur polynomials."""
    if not is_tileable(shape, n):
        return not ribbon_function(shape, n, m)
    return ribbon_function(shape, n, m).at_q_one() == quotient_product(shape, n, m)


# ---------------------------------------------------------------------------
# Strip series


@dataclass(frozen=True)
class StripSeries:
    """Multiplicities of (ribbon count, spin) over horizontal strips."""

    terms: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, StripSeries):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, ribbons: int) -> LaurentQ:
        """Coefficient of X^ribbons as a polynomial in q."""
        return LaurentQ.from_dict({s: c for (k, s), c in self.terms.items() if k == ribbons})

    def to_json(self) -> list:
        return [{"ribbons": k, "spin": s, "count": c} for (k, s), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: list) -> StripSeries:
        return cls({(t["ribbons"], t["spin"]): t["count"] for t in data})

    def __repr__(self):
        parts = []
        for k in sorted({k for k, _ in self.terms}):
            c = self.coefficient(k)
            x = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            parts.append(f"({c}){x}" if x else repr(c))
        return " + ".join(parts)


def parse_path(text: str) -> tuple[int, ...]:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise ValueError(f"malformed lattice path {text!r}: use only 0 and 1")
    return tuple(int(ch) for ch in text)


def strip_series(path, n: int) -> StripSeries:
    """Generating function of horizontal n-ribbon strips attachable to ``path``.

    ``path`` is a 0/1 word padded by 1s on both sides.  Strips are grown on
    the bead configuration given by the reversed word (1 = bead), beads
    moving towards higher positions.
    """
    if isinstance(path, str):
        path = parse_path(path)
    word = tuple(reversed(path))
    length = len(word)
    lo, hi = -n, length + n
    beads = {i for i in range(lo, hi) if i < 0 or i >= length or word[i]}
    # every bead can slide along its runner through the gaps just above it
    options = []
    for b in sorted(beads):
        if b >= length:
            continue
        reach = [b]
        while reach[-1] + n < length and reach[-1] + n not in beads:
            reach.append(reach[-1] + n)
        options.append(reach)
    terms: dict = {}
    movers = [opt for opt in options if len(opt) > 1]
    start = [opt[0] for opt in movers]
    for targets in product(*movers):
        new = (beads - set(start)) | set(targets)
        steps = strip_steps(beads, new, n)
        key = (len(steps), sum(s for _, _, s in steps))
        terms[key] = terms.get(key, 0) + 1
    return StripSeries(terms)


def verify_path_reversal(path, n: int) -> bool:
    if isinstance(path, str):
        path = parse_path(path)
    return strip_series(path, n) == strip_series(tuple(reversed(path)), n)


# ---------------------------------------------------------------------------
# Nested strips


def strip_heads(outer: Partition, inner: Partition, n: int) -> dict[int, int]:
    """Head diagonal -> spin over the canonical tiling of outer/inner."""
    return dict(strip_ribbons(Partition(outer), Partition(inner), n))


def nested_strip_sides(lam: Partition, mu: Partition, nu: Partition, n: int) -> tuple[int, int]:
    """Both sides of spin_I(λ/ν) - spin(λ/μ) = spin_J(λ/ν) - spin(μ/ν)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    for a, b in ((lam, mu), (lam, nu), (mu, nu)):
        if not a.contains(b) or not is_horizontal_strip(SkewShape(a, b), n):
            raise ValueError("not a nested strip triple")
    outer = strip_heads(lam, mu, n)
    inner = strip_heads(mu, nu, n)
    whole = strip_heads(lam, nu, n)
    if set(whole) != set(outer) | set(inner):
        raise AssertionError("head diagonals of λ/ν are not those of λ/μ and μ/ν")
    spin_i = sum(whole[d] for d in outer)
    spin_j = sum(whole[d] for d in inner)
    return spin_i - sum(outer.values()), spin_j - sum(inner.values())


def verify_nested_strip_lemma(lam: Partition, mu: Partition, nu: Partition, n: int) -> bool:
    left, right = nested_strip_sides(lam, mu, nu, n)
    return left == right


def nested_triples(max_size: int, n: int):
    """Every ν ⊆ μ ⊆ λ with |λ| <= max_size and all three differences horizontal strips."""
    for nu in partitions_up_to(max_size):
        for mu in _strip_tops(nu, max_size, n):
            for lam in _strip_tops(mu, max_size, n):
                if is_horizontal_strip(SkewShape(lam, nu), n):
                    yield lam, mu, nu


def _strip_tops(inner: Partition, max_size: int, n: int):
    """Partitions κ ⊇ inner, |κ| <= max_size, with κ/inner a horizontal n-ribbon strip."""
    room = (max_size - inner.size) // n
    cq = core_quotient(inner, n)
    for k in range(room + 1):
        for extra in _distribute(k, n):
            for quot in product(*[_ordinary_tops(q, e) for q, e in zip(cq.quotient, extra)]):
                yield combine_core_quotient(CoreQuotient(n, cq.core, tuple(quot), cq.offsets))


def _distribute(k: int, parts: int):
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _distribute(k - first, parts - 1):
            yield (first, *rest)


def _ordinary_tops(inner: Partition, k: int):
    """Partitions obtained from ``inner`` by adding a horizontal strip of exactly k cells."""
    rows = len(inner) + 1

    def rec(r, left):
        if r == rows:
            if left == 0:
                yield ()
            return
        cap = left if r == 0 else min(left, inner[r - 1] - inner.part(r))
        for a in range(cap, -1, -1):
            for rest in rec(r + 1, left - a):
                yield (a, *rest)

    for adds in rec(0, k):
        yield Partition(inner.part(r) + a for r, a in enumerate(adds))


def describe_triple(lam, mu, nu) -> dict:
    return {"lambda": format_partition(lam), "mu": format_partition(mu), "nu": format_partition(nu)}
