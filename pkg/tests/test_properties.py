from hypothesis import given, settings
from hypothesis import strategies as st

from ribbonlr.domino import bad_involution, bender_knuth, find_bad_pair, is_lambda_yamanouchi
from ribbonlr.functions import ribbon_function, strip_series
from ribbonlr.polynomials import LaurentQ, SymPoly, is_symmetric, schur_combination, schur_expand
from ribbonlr.shapes import Partition, SkewShape, combine_core_quotient, core_quotient, is_tileable
from ribbonlr.tableaux import enumerate_tableaux, reading_word, spin
from ribbonlr.words import Word123, local_inversions, reverse_complement

partitions = st.lists(st.integers(1, 6), max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))
laurents = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(LaurentQ.from_dict)


@st.composite
def skew_shapes(draw, max_outer=9):
    outer = draw(partitions.filter(lambda p: p.size <= max_outer))
    inner = Partition(sorted((draw(st.integers(0, part)) for part in outer), reverse=True))
    inner = Partition(min(a, b) for a, b in zip(inner, outer))
    return SkewShape(outer, inner)


@given(partitions, st.integers(1, 5))
def test_core_quotient_round_trip(p, n):
    cq = core_quotient(p, n)
    assert combine_core_quotient(cq) == p
    assert p.size == cq.core.size + n * sum(q.size for q in cq.quotient)


@given(laurents, laurents, laurents)
def test_laurent_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).at_one() == a.at_one() * b.at_one()


@given(st.dictionaries(partitions.filter(lambda p: len(p) <= 3 and p.size <= 5), laurents, max_size=3))
def test_schur_expand_inverts_combination(coeffs):
    coeffs = {k: v for k, v in coeffs.items() if v}
    assert schur_expand(schur_combination(coeffs, 3)) == coeffs


@settings(max_examples=60, deadline=None)
@given(skew_shapes(), st.sampled_from([2, 3]))
def test_ribbon_function_symmetric_and_nonnegative(shape, n):
    g = ribbon_function(shape, n, 3)
    assert is_symmetric(g)
    assert all(c.is_nonnegative() for c in g.terms.values())
    if not is_tileable(shape, n):
        assert g == SymPoly(3)


@settings(max_examples=60, deadline=None)
@given(st.text("01", max_size=9), st.sampled_from([2, 3]))
def test_strip_series_reversal(path, n):
    assert strip_series(path, n) == strip_series(path[::-1], n)


@given(st.lists(st.sampled_from([1, 2]), max_size=12), st.integers(1, 5))
def test_reverse_complement_involution(letters, n):
    w = Word123(letters, n)
    if not w.is_valid():
        return
    r = reverse_complement(w)
    assert r.is_valid()
    assert r.weight == w.weight[::-1]
    assert local_inversions(r) == local_inversions(w)
    assert reverse_complement(r) == w


@settings(max_examples=40, deadline=None)
@given(skew_shapes(8), st.data())
def test_involutions_on_random_tableaux(shape, data):
    if shape.size % 2 or not is_tileable(shape, 2):
        return
    tableaux = enumerate_tableaux(shape, 2, 3)
    t = data.draw(st.sampled_from(tableaux))
    k = data.draw(st.sampled_from([1, 2]))
    s = bender_knuth(t, k)
    assert spin(s) == spin(t) and bender_knuth(s, k) == t
    nu = data.draw(st.sampled_from([Partition([]), Partition([1]), Partition([2]), Partition([1, 1])]))
    yam = is_lambda_yamanouchi(reading_word(t).letters, nu)
    assert (find_bad_pair(t, nu) is None) == yam
    if not yam:
        d = bad_involution(t, nu)
        assert spin(d) == spin(t)
        assert bad_involution(d, nu) == t
