"""Finite exhaustive verification sweeps shared by the command line and the tests.

Every suite is a list of picklable cases plus a checker returning the
counterexamples for one case.  Reports sort counterexamples canonically, so
the number of worker processes never changes the content of a report.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from . import domino, functions, tableaux, words
from .polynomials import is_symmetric, schur_expand, schur_polynomial
from .shapes import (
    Partition,
    SkewShape,
    format_partition,
    format_skew,
    is_horizontal_strip,
    is_tileable,
    partitions_up_to,
    subpartitions,
)


@dataclass
class RunReport:
    suite: str
    cases_run: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases_run": self.cases_run,
                "failures": self.failures, "elapsed_ms": self.elapsed_ms}


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# case domains


def skew_shapes(max_outer: int, n: int, max_skew: int | None = None, nonempty: bool = False):
    """Tileable shapes λ/μ with |λ| <= max_outer and |λ/μ| <= max_skew."""
    max_skew = max_outer if max_skew is None else max_skew
    for lam in partitions_up_to(max_outer):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            if shape.size > max_skew or (nonempty and not shape.size):
                continue
            if is_tileable(shape, n):
                yield shape


def domino_cases(max_outer: int, max_skew: int | None = None, max_nu: int = 2):
    for shape in skew_shapes(max_outer, 2, max_skew):
        for nu in partitions_up_to(max_nu):
            yield (format_skew(shape), format_partition(nu))


def _ns(n, default):
    return (n,) if n else default


def _cases(name: str, max_cells: int, n: int | None, opts: dict) -> list:
    if name in ("symmetry", "quotient-product"):
        m = opts.get("vars", 3)
        return [(format_skew(s), k, m) for k in _ns(n, (2, 3, 4))
                for s in skew_shapes(max_cells, k, opts.get("max_skew"))]
    if name == "spin-inversion":
        return [(format_skew(s), k) for k in _ns(n, (2, 3))
                for s in skew_shapes(max_cells, k, min(4 * k, opts.get("max_skew") or 4 * k), nonempty=True)]
    if name == "column-pair":
        return [(format_skew(s), k, opts.get("labels", 3)) for k in _ns(n, (2, 3))
                for s in skew_shapes(max_cells, k, opts.get("max_skew"), nonempty=True)]
    if name == "path-reversal":
        return [("".join(map(str, w)), k) for k in _ns(n, (2, 3))
                for length in range(max_cells + 1) for w in product((0, 1), repeat=length)]
    if name == "nested-strips":
        return [(format_partition(nu), max_cells, k) for k in _ns(n, (2, 3))
                for nu in partitions_up_to(max_cells)]
    if name == "word-identity":
        out = []
        for m in range(1, max_cells + 1):
            for size in range(m + 1):
                for form in combinations(range(1, m + 1), size):
                    out += [("identity", m, form, k) for k in _ns(n, range(1, m + 1)) if k <= m]
        rc = opts.get("max_reverse", max_cells)
        for m in range(rc + 1):
            out += [("reverse", m, (), k) for k in _ns(n, range(1, max(m, 1) + 1))]
        return out
    if name in DOMINO_SUITES:
        if n not in (None, 2):
            raise UsageError(f"suite {name} is defined for n = 2 only")
        max_nu = opts.get("max_nu")
        return list(domino_cases(max_cells, opts.get("max_skew"), 2 if max_nu is None else max_nu))
    raise UsageError(f"unknown suite {name!r}")


# ---------------------------------------------------------------------------
# checkers


def _check_symmetry(case):
    text, n, m = case
    g = functions.ribbon_function(SkewShape.parse(text), n, m)
    return [] if is_symmetric(g) else [{"shape": text, "n": n, "vars": m}]


def _check_quotient_product(case):
    text, n, m = case
    ok = functions.quotient_product_check(SkewShape.parse(text), n, m)
    return [] if ok else [{"shape": text, "n": n, "vars": m}]


def _check_spin_inversion(case):
    text, n = case
    try:
        e, c = tableaux.spin_inversion_constant(SkewShape.parse(text), n)
    except ValueError as exc:
        return [{"shape": text, "n": n, "error": str(exc)}]
    return [] if c == 2 else [{"shape": text, "n": n, "e": e, "c": c}]


def _check_column_pair(case):
    text, n, labels = case
    found = tableaux.column_pair_counterexamples(SkewShape.parse(text), n, labels)
    return [dict(f, n=n) for f in found]


def _check_path_reversal(case):
    path, n = case
    return [] if functions.verify_path_reversal(path, n) else [{"path": path, "n": n}]


def _check_nested(case):
    nu_text, max_cells, n = case
    nu = Partition.parse(nu_text)
    out = []
    for mu in functions._strip_tops(nu, max_cells, n):
        for lam in functions._strip_tops(mu, max_cells, n):
            if not is_horizontal_strip(SkewShape(lam, nu), n):
                continue
            try:
                ok = functions.verify_nested_strip_lemma(lam, mu, nu, n)
            except AssertionError as exc:
                ok = False
                err = str(exc)
            else:
                err = None
            if not ok:
                rec = dict(functions.describe_triple(lam, mu, nu), n=n)
                if err:
                    rec["error"] = err
                out.append(rec)
    return out


def _check_words(case):
    kind, m, form, n = case
    if kind == "identity":
        ok = words.verify_word_identity(m, form, n)
        return [] if ok else [{"m": m, "form": list(form), "n": n}]
    out = []
    for letters in product((1, 2), repeat=m):
        w = words.Word123(letters, n)
        if not w.is_valid():
            continue
        r = words.reverse_complement(w)
        good = (r.is_valid() and r.weight == w.weight[::-1]
                and words.local_inversions(r) == words.local_inversions(w)
                and words.reverse_complement(r) == w)
        if not good:
            out.append({"word": str(w), "n": n})
    return out


def _domino_case(case):
    text, nu_text = case
    shape = SkewShape.parse(text)
    nu = Partition.parse(nu_text)
    return shape, nu, domino.num_variables(shape, nu)


def _check_bender_knuth(case):
    shape, nu, m = _domino_case(case)
    out = []
    for t in tableaux.enumerate_tableaux(shape, 2, m):
        for k in range(1, m):
            try:
                s = domino.bender_knuth(t, k)
            except AssertionError as exc:
                out.append({"tableau": t.to_json(), "k": k, "error": str(exc)})
                continue
            w = list(t.weight)
            w[k - 1], w[k] = w[k], w[k - 1]
            good = (s.is_semistandard() and s.shape == t.shape and s.weight == tuple(w)
                    and tableaux.spin(s) == tableaux.spin(t)
                    and domino.bender_knuth(s, k) == t
                    and s.chain[:k] == t.chain[:k] and s.chain[k + 1:] == t.chain[k + 1:])
            if not good:
                out.append({"tableau": t.to_json(), "k": k})
    return out


def bad_guy_failures(t, nu, m) -> list:
    """Every contract of the Bad Guy involution at one tableau."""
    pair = domino.find_bad_pair(t, nu)
    yam = domino.is_lambda_yamanouchi(tableaux.reading_word(t).letters, nu)
    if (pair is None) != yam:
        return [{"tableau": t.to_json(), "nu": format_partition(nu), "error": "Bad iff not Yamanouchi"}]
    if pair is None:
        return []
    try:
        d = domino.bad_involution(t, nu)
        back = domino.bad_involution(d, nu)
    except (AssertionError, ValueError) as exc:
        return [{"tableau": t.to_json(), "nu": format_partition(nu), "error": str(exc)}]
    k = pair.row_index
    expected = list(domino.staircase_shift(t.weight, nu, m))
    expected[k - 1], expected[k] = expected[k], expected[k - 1]
    good = (d.shape == t.shape and d.is_semistandard()
            and tableaux.spin(d) == tableaux.spin(t)
            and domino.staircase_shift(d.weight, nu, m) == tuple(expected)
            and back == t)
    return [] if good else [{"tableau": t.to_json(), "nu": format_partition(nu)}]


def _check_bad_guy(case):
    shape, nu, m = _domino_case(case)
    out = []
    for t in tableaux.enumerate_tableaux(shape, 2, m):
        out += bad_guy_failures(t, nu, m)
    return out


def _check_cancellation(case):
    shape, nu, m = _domino_case(case)
    return [] if domino.verify_cancellation(shape, nu, m) else [{"mu_rho": case[0], "nu": case[1]}]


def classical_lr(shape: SkewShape, nu: Partition) -> dict:
    """Schur expansion of s_ν times the product of the quotient skew Schur polynomials."""
    m = max(1, domino.num_variables(shape, nu))
    f = schur_polynomial(nu, m) * functions.quotient_product(shape, 2, m)
    return {lam: c.at_one() for lam, c in schur_expand(f).items()}


def _check_qlr(case):
    shape, nu, _ = _domino_case(case)
    fast = domino.qlr_yamanouchi(shape, nu)
    slow = domino.qlr_bruteforce(shape, nu)
    problems = []
    if fast != slow:
        problems.append("Yamanouchi rule differs from the Schur expansion")
    if not all(c.is_nonnegative() for c in fast.coeffs.values()):
        problems.append("negative coefficient")
    if {lam: c.at_one() for lam, c in fast.coeffs.items()} != classical_lr(shape, nu):
        problems.append("q = 1 values differ from classical products")
    if not problems:
        return []
    return [{"mu_rho": case[0], "nu": case[1], "errors": problems,
             "yamanouchi": fast.to_json()["coeffs"], "bruteforce": slow.to_json()["coeffs"]}]


CHECKERS = {
    "symmetry": _check_symmetry,
    "quotient-product": _check_quotient_product,
    "spin-inversion": _check_spin_inversion,
    "column-pair": _check_column_pair,
    "path-reversal": _check_path_reversal,
    "nested-strips": _check_nested,
    "word-identity": _check_words,
    "bender-knuth": _check_bender_knuth,
    "bad-guy": _check_bad_guy,
    "cancellation": _check_cancellation,
    "qlr": _check_qlr,
}
DOMINO_SUITES = ("bender-knuth", "bad-guy", "cancellation", "qlr")
SUITES = tuple(CHECKERS)


def run_suite(name: str, max_cells: int, n: int | None = None, jobs: int = 1, **opts) -> RunReport:
    if name not in CHECKERS:
        raise UsageError(f"unknown suite {name!r}")
    if max_cells < 0 or (n is not None and n < 1) or jobs < 1:
        raise UsageError("bounds must be nonnegative and n, jobs positive")
    start = time.perf_counter()
    cases = _cases(name, max_cells, n, opts)
    check = CHECKERS[name]
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(check, cases, chunksize=max(1, len(cases) // (8 * jobs))))
    else:
        results = [check(c) for c in cases]
    failures = sorted((f for r in results for f in r), key=lambda f: json.dumps(f, sort_keys=True))
    elapsed = int((time.perf_counter() - start) * 1000)
    return RunReport(name, len(cases), failures, elapsed)
