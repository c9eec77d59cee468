"""Exact Laurent polynomials in q and polynomials in x_1..x_m over them."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .shapes import EMPTY, Partition, ordinary_strip_bottoms


class LaurentQ:
    """Integer Laurent polynomial sum_k coeffs[k] * q**(min_deg + k)."""

    __slots__ = ("min_deg", "coeffs")

    def __init__(self, min_deg: int = 0, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(coeffs[lo:hi])
        self.min_deg = min_deg + lo if self.coeffs else 0

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentQ:
        terms = {d: c for d, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(d, 0) for d in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, degree: int = 0, coeff: int = 1) -> LaurentQ:
        return cls(degree, [coeff])

    @classmethod
    def coerce(cls, x) -> LaurentQ:
        if isinstance(x, LaurentQ):
            return x
        if isinstance(x, int):
            return cls(0, [x])
        raise TypeError(f"cannot convert {type(x).__name__} to LaurentQ")

    def to_dict(self) -> dict[int, int]:
        return {self.min_deg + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQ.coerce(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def __add__(self, other):
        try:
            other = LaurentQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.min_deg - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.min_deg - lo + k] += c
        return LaurentQ(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ(self.min_deg, [-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            other = LaurentQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentQ.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not self or not other:
            return LaurentQ()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentQ(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers only exist for monomials")
        out = LaurentQ.monomial()
        for _ in range(k):
            out = out * self
        return out

    def at_one(self) -> int:
        return sum(self.coeffs)

    def substitute_power(self, k: int) -> LaurentQ:
        """q -> q**k."""
        if k == 0:
            return LaurentQ.monomial(0, self.at_one())
        return LaurentQ.from_dict({k * d: c for d, c in self.to_dict().items()})

    def shift(self, d: int) -> LaurentQ:
        return LaurentQ(self.min_deg + d, self.coeffs) if self else self

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentQ:
        return cls(data["min_deg"], data["coeffs"])

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        for d, c in sorted(self.to_dict().items()):
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentQ()
ONE = LaurentQ.monomial()
Q = LaurentQ.monomial(1)


class SymPoly:
    """Sparse polynomial in x_1..x_m with LaurentQ coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], LaurentQ] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        self.num_vars = num_vars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            c = LaurentQ.coerce(c)
            if c:
                clean[exps] = clean.get(exps, ZERO) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, num_vars: int, c=1) -> SymPoly:
        return cls(num_vars, {(0,) * num_vars: LaurentQ.coerce(c)})

    @classmethod
    def monomial(cls, exps: Iterable[int], c=1) -> SymPoly:
        exps = tuple(exps)
        return cls(len(exps), {exps: LaurentQ.coerce(c)})

    def _check(self, other: SymPoly):
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials live in different numbers of variables")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __add__(self, other: SymPoly) -> SymPoly:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return SymPoly(self.num_vars, out)

    def __neg__(self):
        return SymPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentQ)):
            c = LaurentQ.coerce(other)
            return SymPoly(self.num_vars, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return SymPoly(self.num_vars, out)

    __rmul__ = __mul__

    def coefficient(self, exps) -> LaurentQ:
        return self.terms.get(tuple(exps), ZERO)

    def permute(self, perm: tuple[int, ...]) -> SymPoly:
        """Substitute x_i -> x_perm[i] (0-indexed)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.num_vars
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return SymPoly(self.num_vars, out)

    def swap(self, i: int) -> SymPoly:
        """Exchange x_{i+1} and x_{i+2} (0-indexed adjacent pair i, i+1)."""
        perm = list(range(self.num_vars))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return self.permute(tuple(perm))

    def at_q_one(self) -> SymPoly:
        return SymPoly(self.num_vars, {e: LaurentQ.coerce(c.at_one()) for e, c in self.terms.items()})

    def map_coeffs(self, f) -> SymPoly:
        return SymPoly(self.num_vars, {e: f(c) for e, c in self.terms.items()})

    def drop_last_variable(self) -> SymPoly:
        """Set x_m = 0 and forget it."""
        return SymPoly(self.num_vars - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def extend(self, num_vars: int) -> SymPoly:
        pad = (0,) * (num_vars - self.num_vars)
        return SymPoly(num_vars, {e + pad: c for e, c in self.terms.items()})

    def to_json(self) -> list:
        return [{"exps": list(e), "coeff": c.to_json()} for e, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, num_vars: int, data: list) -> SymPoly:
        return cls(num_vars, {tuple(t["exps"]): LaurentQ.from_json(t["coeff"]) for t in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            coeff = repr(c)
            if not mono:
                out.append(f"({coeff})")
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"({coeff})*{mono}")
        return " + ".join(out)


def is_symmetric(f: SymPoly) -> bool:
    return all(f.swap(i) == f for i in range(f.num_vars - 1))


@lru_cache(maxsize=None)
def skew_schur_polynomial(outer: Partition, inner: Partition, m: int) -> SymPoly:
    """Skew Schur polynomial via the branching rule on the last variable."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        return SymPoly(m)
    if m == 0:
        return SymPoly.constant(0) if outer == inner else SymPoly(0)
    out = SymPoly(m)
    for kappa in ordinary_strip_bottoms(outer, inner):
        rest = skew_schur_polynomial(kappa, inner, m - 1).extend(m)
        k = outer.size - kappa.size
        out = out + rest * SymPoly.monomial((0,) * (m - 1) + (k,))
    return out


def schur_polynomial(lam: Partition, m: int) -> SymPoly:
    lam = Partition(lam)
    if len(lam) > m:
        return SymPoly(m)
    return skew_schur_polynomial(lam, EMPTY, m)


def _sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alternant(alpha: Iterable[int]) -> SymPoly:
    """sum over w in S_m of sign(w) * x^{w(alpha)}."""
    alpha = tuple(alpha)
    m = len(alpha)
    out: dict = {}
    for w in permutations(range(m)):
        exps = [0] * m
        for i, a in enumerate(alpha):
            exps[w[i]] = a
        e = tuple(exps)
        out[e] = out.get(e, 0) + _sign(w)
    return SymPoly(m, out)


def staircase(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, -1, -1))


def schur_expand(f: SymPoly) -> dict[Partition, LaurentQ]:
    """Coefficients c_λ with f = sum c_λ s_λ(x_1..x_m)."""
    if not is_symmetric(f):
        raise ValueError("cannot expand a non-symmetric polynomial in Schur polynomials")
    m = f.num_vars
    out: dict[Partition, LaurentQ] = {}
    rest = f
    while rest:
        lead = max(rest.terms)
        assert all(lead[i] >= lead[i + 1] for i in range(m - 1)), lead
        c = rest.terms[lead]
        lam = Partition(lead)
        out[lam] = c
        rest = rest - schur_polynomial(lam, m) * c
    return out


def schur_combination(coeffs: Mapping[Partition, LaurentQ], m: int) -> SymPoly:
    out = SymPoly(m)
    for lam, c in coeffs.items():
        out = out + schur_polynomial(Partition(lam), m) * c
    return out


def expansion_to_json(coeffs: Mapping[Partition, LaurentQ]) -> list:
    return [{"partition": ",".join(map(str, lam)), "coeff": c.to_json()}
            for lam, c in sorted(coeffs.items(), reverse=True)]
