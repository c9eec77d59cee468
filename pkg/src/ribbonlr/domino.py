"""Domino (n = 2) q-Littlewood-Richardson coefficients via Yamanouchi tableaux.

The coefficients c^λ_{μ/ρ,ν}(q) are defined by

    s_ν(X) G_{μ/ρ}(X; q) = sum_λ c^λ_{μ/ρ,ν}(q) s_λ(X)

and are computed two ways: by expanding the product in Schur polynomials,
and as spin generating functions of ν-Yamanouchi domino tableaux.  The
second route is justified by a sign-reversing involution on the remaining
("Bad Guy") tableaux, built from spin-preserving Bender-Knuth moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import tableaux as tab
from .functions import ribbon_function
from .polynomials import LaurentQ, SymPoly, alternant, expansion_to_json, schur_expand, schur_polynomial
from .shapes import (
    CoreQuotient,
    EMPTY,
    Partition,
    SkewShape,
    combine_core_quotient,
    core_quotient,
    format_partition,
    format_skew,
    is_tileable,
)
from .tableaux import RibbonTableau, reading_word, spin

N = 2


@dataclass(frozen=True)
class QLRTable:
    mu_rho: SkewShape
    nu: Partition
    coeffs: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, QLRTable):
            return NotImplemented
        return (self.mu_rho == other.mu_rho and self.nu == other.nu
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.mu_rho, self.nu, frozenset(self.coeffs.items())))

    def to_json(self) -> dict:
        return {
            "mu_rho": format_skew(self.mu_rho),
            "nu": format_partition(self.nu),
            "coeffs": expansion_to_json(self.coeffs),
        }


@dataclass(frozen=True)
class BadPair:
    boundary_diag: int
    row_index: int


def _padded(p, length: int) -> list[int]:
    return list(p) + [0] * (length - len(p))


def is_lambda_yamanouchi(word, lam) -> bool:
    """Every prefix satisfies wt_l + lam_l >= wt_{l+1} + lam_{l+1} for all l."""
    word = tuple(word)
    size = max([len(lam), *word], default=0) + 1
    lam = _padded(lam, size + 1)
    wt = [0] * (size + 1)
    if any(lam[i] < lam[i + 1] for i in range(size)):
        return False
    for letter in word:
        wt[letter - 1] += 1
        # only the rows next to the changed letter can break
        for l in (letter - 2, letter - 1):
            if 0 <= l < size and wt[l] + lam[l] < wt[l + 1] + lam[l + 1]:
                return False
    return True


def num_variables(mu_rho: SkewShape, nu: Partition) -> int:
    return mu_rho.size // N + Partition(nu).size


def _yamanouchi_candidates(mu_rho: SkewShape, nu: Partition) -> Iterator[RibbonTableau]:
    """Tableaux whose weight added to ν is a partition (a necessary condition)."""
    nu = Partition(nu)
    count = mu_rho.size // N
    labels = count + len(nu)
    nu_pad = _padded(nu, labels + 1)

    def rec(chain, weights):
        k = len(weights)
        if k == labels:
            if chain[-1] == mu_rho.outer:
                yield RibbonTableau(N, tuple(chain))
            return
        cap = None if k == 0 else nu_pad[k - 1] + weights[k - 1] - nu_pad[k]
        for kappa in tab._strips(chain[-1], mu_rho.outer, N):
            w = (kappa.size - chain[-1].size) // N
            if cap is not None and w > cap:
                continue
            yield from rec(chain + [kappa], weights + [w])

    yield from rec([mu_rho.inner], [])


def yamanouchi_tableaux(mu_rho: SkewShape, nu: Partition) -> list[RibbonTableau]:
    nu = Partition(nu)
    return [t for t in _yamanouchi_candidates(mu_rho, nu)
            if is_lambda_yamanouchi(reading_word(t).letters, nu)]


def qlr_yamanouchi(mu_rho: SkewShape, nu: Partition) -> QLRTable:
    """c^λ(q) = sum of q^spin(Y) over ν-Yamanouchi domino tableaux Y with ν + wt(Y) = λ."""
    nu = Partition(nu)
    coeffs: dict = {}
    if is_tileable(mu_rho, N):
        for y in yamanouchi_tableaux(mu_rho, nu):
            size = max(len(nu), len(y.weight))
            lam = Partition(a + b for a, b in zip(_padded(nu, size), _padded(y.weight, size)))
            coeffs[lam] = coeffs.get(lam, LaurentQ()) + LaurentQ.monomial(spin(y))
    return QLRTable(mu_rho, nu, {k: v for k, v in coeffs.items() if v})


def qlr_bruteforce(mu_rho: SkewShape, nu: Partition, m: int | None = None) -> QLRTable:
    """Schur expansion of s_ν · G_{μ/ρ} in enough variables that nothing is truncated."""
    nu = Partition(nu)
    m = m or max(1, num_variables(mu_rho, nu))
    product = schur_polynomial(nu, m) * ribbon_function(mu_rho, N, m)
    return QLRTable(mu_rho, nu, schur_expand(product))


def calibrate_orientation(mu_rho: SkewShape = SkewShape(Partition([2, 2])), nu: Partition = EMPTY) -> str:
    """The unique reading orientation for which the Yamanouchi rule matches brute force."""
    target = qlr_bruteforce(mu_rho, nu).coeffs
    good = []
    saved = tab.READING_ORIENTATION
    try:
        for orientation in ("ascending", "descending"):
            tab.READING_ORIENTATION = orientation
            if qlr_yamanouchi(mu_rho, nu).coeffs == target:
                good.append(orientation)
    finally:
        tab.READING_ORIENTATION = saved
    if len(good) != 1:
        raise ValueError(f"orientation not determined by {format_skew(mu_rho)}: {good}")
    return good[0]


# ---------------------------------------------------------------------------
# Bender-Knuth involutions


@lru_cache(maxsize=None)
def _bk_table(inner: Partition, outer: Partition, n: int) -> dict:
    """Map middle partition -> image middle partition for 2-label tableaux of outer/inner.

    Fillings are grouped by spin; within a group the weight (a, b) and (b, a)
    classes are sorted by reading word and matched by position.
    """
    classes: dict = {}
    for chain in tab.iter_chains(inner, outer, n, 2):
        t = RibbonTableau(n, chain)
        key = (spin(t), t.weight)
        classes.setdefault(key, []).append(chain)
    table = {}
    for (s, (a, b)), chains in classes.items():
        partner = classes.get((s, (b, a)), [])
        if len(partner) != len(chains):
            raise AssertionError(
                f"spin class {s} of {format_skew(SkewShape(outer, inner))} has "
                f"{len(chains)} fillings of weight ({a},{b}) but {len(partner)} of ({b},{a})")
        key = (lambda c: reading_word(RibbonTableau(n, c)).letters)
        for x, y in zip(sorted(chains, key=key), sorted(partner, key=key)):
            table[x[1]] = y[1]
    return table


def bender_knuth(t: RibbonTableau, k: int) -> RibbonTableau:
    """Spin-preserving involution exchanging the numbers of k's and (k+1)'s."""
    if k < 1 or k >= t.max_label:
        raise ValueError(f"k must lie in [1, {t.max_label - 1}]")
    inner, mid, outer = t.chain[k - 1], t.chain[k], t.chain[k + 1]
    image = _bk_table(inner, outer, t.n)[mid]
    chain = list(t.chain)
    chain[k] = image
    return RibbonTableau(t.n, tuple(chain))


# ---------------------------------------------------------------------------
# Bad Guys


def _diagonal_order(t: RibbonTableau) -> list[int]:
    diags = sorted({r.head_diag for r in t.ribbons})
    return diags if tab.READING_ORIENTATION == "ascending" else diags[::-1]


def find_bad_pair(d: RibbonTableau, lam: Partition) -> BadPair | None:
    """Shortest reading prefix (ending at a whole diagonal j) and least k with
    lam_k + wt_k(before j) < lam_{k+1} + wt_{k+1}(through j)."""
    lam = Partition(lam)
    size = max(len(lam), d.max_label) + 1
    lp = _padded(lam, size + 1)
    for j in _diagonal_order(d):
        before, through = tab.prefix_weights(d, j)
        before = _padded(before, size + 1)
        through = _padded(through, size + 1)
        for k in range(1, size):
            if lp[k - 1] + before[k - 1] < lp[k] + through[k]:
                return BadPair(j, k)
    return None


def is_bad(d: RibbonTableau, lam: Partition) -> bool:
    return find_bad_pair(d, lam) is not None


def _read_after(diag: int, j: int) -> bool:
    return diag > j if tab.READING_ORIENTATION == "ascending" else diag < j


def bad_involution(d: RibbonTableau, lam: Partition) -> RibbonTableau:
    """D -> D*: apply σ_k to the part of D read after diagonal j (plus the k on j)."""
    if d.n != N:
        raise ValueError("the Bad Guy involution is defined for dominoes only")
    pair = find_bad_pair(d, lam)
    if pair is None:
        raise ValueError("tableau is not a Bad Guy")
    j, k = pair.boundary_diag, pair.row_index
    if k + 1 > d.max_label:
        raise AssertionError("violating row beyond the label range")
    cells = tab.quotient_cells(d)
    labels = {(c.runner, c.row, c.col): c.label for c in cells}
    in_s = {(c.runner, c.row, c.col) for c in cells
            if _read_after(c.diag, j) or (c.diag == j and c.label == k)}

    # the {k, k+1} cells of S form α/τ runner by runner, τ = quot(λ^{k-1})
    base = core_quotient(d.chain[k - 1], N)
    alpha, kappa = [], []
    for i in range(N):
        tau = base.quotient[i]
        rows_a = list(tau)
        rows_k = list(tau)
        for (r_i, row, col), lab in labels.items():
            if r_i != i or (r_i, row, col) not in in_s or lab not in (k, k + 1):
                continue
            targets = [rows_a] if lab == k + 1 else [rows_a, rows_k]
            for rows in targets:
                while len(rows) <= row:
                    rows.append(0)
                rows[row] = max(rows[row], col + 1)
        for rows in (rows_a, rows_k):
            if any(rows[r] < rows[r + 1] for r in range(len(rows) - 1)):
                raise AssertionError("cells of S with labels k, k+1 do not form a skew shape")
        alpha.append(Partition(rows_a))
        kappa.append(Partition(rows_k))
    # every cell of S labelled k or k+1 must sit outside τ and fill α/τ exactly
    for i in range(N):
        expected = {(i, r, c) for r in range(len(alpha[i]))
                    for c in range(base.quotient[i].part(r), alpha[i][r])}
        actual = {key for key in in_s if key[0] == i and labels[key] in (k, k + 1)}
        if expected != actual:
            raise AssertionError("cells of S with labels k, k+1 do not form a skew shape")

    lo = d.chain[k - 1]
    a_part = combine_core_quotient(CoreQuotient(N, base.core, tuple(alpha), base.offsets))
    k_part = combine_core_quotient(CoreQuotient(N, base.core, tuple(kappa), base.offsets))
    new_k = _bk_table(lo, a_part, N)[k_part]
    new_kq = core_quotient(new_k, N).quotient

    new_labels = dict(labels)
    for key in in_s:
        if labels[key] not in (k, k + 1):
            continue
        i, row, col = key
        new_labels[key] = k if col < new_kq[i].part(row) else k + 1
    if not tab.quotient_is_semistandard(new_labels):
        raise AssertionError("D* is not semistandard")
    out = tab.tableau_from_quotient(N, d.chain[0], new_labels, d.max_label)
    if out.chain[-1] != d.chain[-1] or not out.is_semistandard():
        raise AssertionError("D* is not a semistandard tableau of the same shape")
    return out


def staircase_shift(weight, lam, m: int) -> tuple[int, ...]:
    """wt + λ + δ as an exponent vector of length m."""
    return tuple(a + b + (m - 1 - i)
                 for i, (a, b) in enumerate(zip(_padded(weight, m), _padded(lam, m))))


def alternant_sum(tableaux_, lam: Partition, m: int) -> dict:
    """sum_D q^spin(D) a_{wt(D)+λ+δ} in the basis of strictly decreasing alternants.

    a_α vanishes when α repeats an entry and otherwise equals sign(sort) times
    a of the decreasing rearrangement; the result maps that rearrangement to
    its LaurentQ coefficient.
    """
    out: dict = {}
    for t in tableaux_:
        alpha = staircase_shift(t.weight, lam, m)
        if len(set(alpha)) < m:
            continue
        order = sorted(range(m), key=lambda i: -alpha[i])
        sign = _perm_sign(order)
        key = tuple(alpha[i] for i in order)
        out[key] = out.get(key, LaurentQ()) + LaurentQ.monomial(spin(t), sign)
    return {k: v for k, v in out.items() if v}


def _perm_sign(order) -> int:
    sign = 1
    order = list(order)
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                sign = -sign
    return sign


def cancellation_sides(mu_rho: SkewShape, nu: Partition, m: int | None = None) -> tuple[dict, dict]:
    """Alternant sums over all tableaux and over ν-Yamanouchi tableaux only."""
    nu = Partition(nu)
    m = m or max(1, num_variables(mu_rho, nu))
    everything = tab.enumerate_tableaux(mu_rho, N, m) if is_tileable(mu_rho, N) else []
    good = [t for t in everything if is_lambda_yamanouchi(reading_word(t).letters, nu)]
    return alternant_sum(everything, nu, m), alternant_sum(good, nu, m)


def verify_cancellation(mu_rho: SkewShape, nu: Partition, m: int | None = None) -> bool:
    left, right = cancellation_sides(mu_rho, nu, m)
    return left == right


def alternant_polynomial(terms: dict, m: int) -> SymPoly:
    """Expand a map {decreasing α: coefficient} into an explicit polynomial."""
    out = SymPoly(m)
    for alpha, c in terms.items():
        out = out + alternant(alpha) * c
    return out
