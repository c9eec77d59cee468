import pytest

import oracles
from ribbonlr.shapes import EMPTY, Partition, SkewShape, is_tileable, partitions_up_to, subpartitions
from ribbonlr.tableaux import (
    RibbonTableau,
    enumerate_tableaux,
    inversions,
    prefix_weights,
    quotient_cells,
    reading_word,
    spin,
    spin_inversion_constant,
    standard_tableaux,
    tableau_from_quotient,
    verify_column_pair_lemma,
)

SQUARE = SkewShape(Partition([2, 2]))


def by_weight(shape, n, labels):
    return {t.weight: t for t in enumerate_tableaux(shape, n, labels)}


def standard_by_spin(shape, n):
    return {spin(t): t for t in standard_tableaux(shape, n)}


def test_square_tableaux():
    ts = enumerate_tableaux(SQUARE, 2, 2)
    assert sorted(t.weight for t in ts) == [(0, 2), (1, 1), (1, 1), (2, 0)]
    oracle = sorted(c for c in oracles.chains((), (2, 2), 2, 2))
    assert sorted(t.chain for t in ts) == oracle


def test_degenerate_enumerations():
    assert enumerate_tableaux(SkewShape(Partition([1])), 2, 3) == []
    (t,) = enumerate_tableaux(SkewShape(EMPTY), 2, 2)
    assert t.weight == (0, 0) and t.ribbons == ()


def test_enumeration_matches_cell_chains():
    for outer in partitions_up_to(6):
        for inner in subpartitions(outer):
            for n in (2, 3):
                shape = SkewShape(outer, inner)
                got = sorted(t.chain for t in enumerate_tableaux(shape, n, 3))
                assert got == sorted(oracles.chains(inner, outer, n, 3)), shape


@pytest.mark.parametrize("n", [2, 3, 4])
def test_single_ribbon_spins(n):
    (row,) = enumerate_tableaux(SkewShape(Partition([n])), n, 1)
    (col,) = enumerate_tableaux(SkewShape(Partition([1] * n)), n, 1)
    assert spin(row) == 0
    assert spin(col) == n - 1
    assert reading_word(row).letters == (1,)


def test_all_ones_square_spin():
    assert spin(by_weight(SQUARE, 2, 2)[(2, 0)]) == 0


def test_square_standard_inversions():
    spins = standard_by_spin(SQUARE, 2)
    assert inversions(spins[0]) == 1
    assert inversions(spins[2]) == 0


def test_equal_labels_have_no_inversions():
    for t in enumerate_tableaux(SkewShape(Partition([4, 4, 2])), 2, 1):
        assert inversions(t) == 0


def test_spin_inversion_examples():
    assert spin_inversion_constant(SQUARE, 2) == (2, 2)
    for n in (2, 3):
        e, _ = spin_inversion_constant(SkewShape(Partition([n])), n)
        assert e == 0
        e, _ = spin_inversion_constant(SkewShape(Partition([1] * n)), n)
        assert e == n - 1


def test_square_reading_words():
    spins = standard_by_spin(SQUARE, 2)
    assert reading_word(spins[2]).letters == (1, 2)
    assert reading_word(spins[0]).letters == (2, 1)


def test_reading_words_under_calibrated_orientation():
    spins = standard_by_spin(SQUARE, 2)
    assert reading_word(spins[0]).letters == (1, 2)
    assert reading_word(spins[2]).letters == (2, 1)
    assert reading_word(spins[2], "ascending").letters == (1, 2)
    with pytest.raises(ValueError):
        reading_word(spins[0], "sideways")


def test_larger_labels_first_on_a_diagonal():
    for t in enumerate_tableaux(SkewShape(Partition([4, 4, 2, 2])), 2, 3):
        w = reading_word(t)
        for i in range(len(w.letters) - 1):
            if w.diagonals[i] == w.diagonals[i + 1]:
                assert w.letters[i] >= w.letters[i + 1]


def test_prefix_weights():
    (empty,) = enumerate_tableaux(SkewShape(EMPTY), 2, 0)
    assert prefix_weights(empty, 3) == ((), ())
    vertical = standard_by_spin(SQUARE, 2)[2]
    diags = sorted(r.head_diag for r in vertical.ribbons)
    assert diags == [0, 1]
    before, through = prefix_weights(vertical, 0)
    assert sum(before) == 1 and sum(through) == 2
    assert prefix_weights(vertical, 5) == ((0, 0), (0, 0))
    assert prefix_weights(vertical, -5) == ((1, 1), (1, 1))


def test_ribbon_invariants():
    for outer in partitions_up_to(8):
        for n in (2, 3):
            shape = SkewShape(outer)
            for t in enumerate_tableaux(shape, n, 3):
                assert t.is_semistandard()
                assert sum(t.weight) == outer.size // n
                for r in t.ribbons:
                    assert 0 <= r.spin <= n - 1
                for label in range(1, 4):
                    diags = [r.head_diag for r in t.ribbons if r.label == label]
                    assert len(diags) == len(set(diags))


def test_standard_spin_parity():
    for outer in partitions_up_to(12):
        for n in (2, 3):
            shape = SkewShape(outer)
            if outer.size > 4 * n or not is_tileable(shape, n):
                continue
            assert len({spin(t) % 2 for t in standard_tableaux(shape, n)}) == 1


def test_vertical_only_shapes():
    # (1^4) and (2,2,2,2) /(1,1) only admit vertical dominoes
    for outer, inner in (((1, 1, 1, 1), ()), ((2, 2, 2, 2), (1, 1))):
        shape = SkewShape(Partition(outer), Partition(inner))
        for t in enumerate_tableaux(shape, 2, 2):
            assert spin(t) == shape.size // 2


def test_quotient_round_trip():
    for outer in partitions_up_to(8):
        for n in (2, 3):
            for t in enumerate_tableaux(SkewShape(outer), n, 2):
                labels = {(c.runner, c.row, c.col): c.label for c in quotient_cells(t)}
                assert tableau_from_quotient(n, t.chain[0], labels, t.max_label) == t


def test_quotient_cell_diagonals_are_head_diagonals():
    for outer in partitions_up_to(8):
        for t in enumerate_tableaux(SkewShape(outer), 2, 2):
            heads = sorted((r.label, r.head_diag) for r in t.ribbons)
            assert sorted((c.label, c.diag) for c in quotient_cells(t)) == heads


def test_json_round_trip():
    for t in enumerate_tableaux(SkewShape(Partition([4, 2]), Partition([1, 1])), 2, 2):
        assert RibbonTableau.from_json(t.to_json()) == t


def test_column_pair_examples():
    assert verify_column_pair_lemma(SkewShape(Partition([2, 2, 1, 1])), 2, 2)
    assert verify_column_pair_lemma(SkewShape(Partition([4])), 2, 3)
    for outer in partitions_up_to(8):
        assert verify_column_pair_lemma(SkewShape(outer), 2, 3)
