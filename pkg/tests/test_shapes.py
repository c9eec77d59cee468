import pytest

import oracles
from ribbonlr.shapes import (
    EMPTY,
    CoreQuotient,
    Partition,
    SkewShape,
    add_ribbon,
    combine_core_quotient,
    core_quotient,
    edge_sequence,
    format_skew,
    horizontal_strips,
    is_core,
    is_horizontal_strip,
    is_tileable,
    parse_partition,
    parse_skew,
    partitions_up_to,
    remove_ribbon,
    strip_ribbons,
    subpartitions,
)


def P(*parts):
    return Partition(parts)


def test_partition_validation():
    assert P(3, 1, 0, 0) == P(3, 1)
    assert P().size == 0
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(2, -1)


def test_parse_and_format():
    assert parse_partition("4,2,2") == P(4, 2, 2)
    assert parse_partition("") == EMPTY
    assert parse_skew("4,2/2,1") == SkewShape(P(4, 2), P(2, 1))
    assert parse_skew("2,2/") == SkewShape(P(2, 2))
    assert format_skew(parse_skew("3,1/1")) == "3,1/1"
    with pytest.raises(ValueError):
        parse_partition("2,x")
    with pytest.raises(ValueError):
        parse_skew("1/2")


def test_skew_shape_requires_containment():
    with pytest.raises(ValueError):
        SkewShape(P(2), P(1, 1))
    assert SkewShape(EMPTY, EMPTY).size == 0


def test_edge_sequence_examples():
    e = edge_sequence(EMPTY)
    assert [e.bit(i) for i in range(-3, 3)] == [1, 1, 1, 0, 0, 0]
    assert edge_sequence(P(1)).window(-2, 2) == (1, 0, 1, 0)
    assert set(edge_sequence(P(2, 2)).beads(-5)) == {1, 0, -3, -4, -5}


def test_edge_sequence_round_trip():
    for p in partitions_up_to(12):
        e = edge_sequence(p)
        assert e.to_partition() == p
        assert e.charge == 0


@pytest.mark.parametrize("v,expected,spin,diag", [(-1, (2,), 0, 1), (-2, (1, 1), 1, 0)])
def test_add_domino_to_empty(v, expected, spin, diag):
    e, s, d = add_ribbon(edge_sequence(EMPTY), v, 2)
    assert e.to_partition() == Partition(expected)
    assert (s, d) == (spin, diag)


def test_add_second_row_domino():
    e, s, d = add_ribbon(edge_sequence(P(2)), -2, 2)
    assert e.to_partition() == P(2, 2)
    assert (s, d) == (0, 0)


def test_add_ribbon_refuses_blocked_bead():
    with pytest.raises(ValueError):
        add_ribbon(edge_sequence(EMPTY), 0, 2)


def test_add_then_remove_restores():
    for p in partitions_up_to(7):
        e = edge_sequence(p)
        for n in (1, 2, 3):
            for v in range(-len(p) - 1, p.part(0) + 1):
                try:
                    bigger, s, d = add_ribbon(e, v, n)
                except ValueError:
                    continue
                back, s2, _ = remove_ribbon(bigger, v + n, n)
                assert back == e
                assert s2 == s
                assert cells_in_ribbon_content_range(bigger.to_partition(), p, d, n)


def cells_in_ribbon_content_range(big, small, head, n):
    contents = sorted(j - i for i, j in oracles.cells(big, small))
    return contents == list(range(head - n + 1, head + 1))


def test_core_quotient_examples():
    cq = core_quotient(P(1), 2)
    assert cq.core == P(1) and cq.quotient == (EMPTY, EMPTY)
    cq = core_quotient(P(2, 2), 2)
    assert cq.core == EMPTY and cq.quotient == (P(1), P(1))
    for n in (2, 3, 4):
        cq = core_quotient(Partition([n]), n)
        assert cq.core == EMPTY
        assert sum(q.size for q in cq.quotient) == 1


def test_combine_examples():
    offsets = core_quotient(P(2, 2), 2).offsets
    assert combine_core_quotient(CoreQuotient(2, EMPTY, (P(1), P(1)), offsets)) == P(2, 2)
    cq = core_quotient(P(1), 2)
    assert combine_core_quotient(CoreQuotient(2, P(1), (EMPTY, EMPTY), cq.offsets)) == P(1)


def test_core_matches_rim_hook_peeling():
    for p in partitions_up_to(9):
        for n in (2, 3):
            assert core_quotient(p, n).core == oracles.core(p, n)


def test_size_law_round_trip_and_fixed_cores():
    for p in partitions_up_to(12):
        for n in (2, 3, 4, 5):
            cq = core_quotient(p, n)
            assert p.size == cq.core.size + n * sum(q.size for q in cq.quotient)
            assert combine_core_quotient(cq) == p
            assert is_core(cq.core, n)
            assert all(q == EMPTY for q in core_quotient(cq.core, n).quotient)


def test_strip_examples():
    assert is_horizontal_strip(SkewShape(P(2, 2)), 2)
    assert is_horizontal_strip(SkewShape(P(1, 1)), 2)
    assert not is_horizontal_strip(SkewShape(P(1)), 2)


def test_strip_criterion_matches_cells():
    for outer in partitions_up_to(8):
        for inner in subpartitions(outer):
            for n in (2, 3):
                if (outer.size - inner.size) % n:
                    continue
                shape = SkewShape(outer, inner)
                assert is_horizontal_strip(shape, n) == oracles.is_strip(outer, inner, n), shape


def test_tileable_matches_cells():
    for outer in partitions_up_to(8):
        for inner in subpartitions(outer):
            for n in (2, 3):
                shape = SkewShape(outer, inner)
                tiled = next(oracles.tilings(oracles.cells(outer, inner), n), None) is not None
                assert is_tileable(shape, n) == tiled, shape


def test_canonical_tiling_is_the_north_border_tiling():
    # frozen from the cell oracle
    assert sorted(strip_ribbons(P(2, 2), EMPTY, 2)) == [(0, 1), (1, 1)]
    assert sorted(strip_ribbons(P(4, 2), P(2), 2)) == [(0, 0), (3, 0)]
    assert sorted(strip_ribbons(P(3, 3), EMPTY, 3)) == [(1, 1), (2, 1)]
    for inner in partitions_up_to(6):
        for n in (2, 3):
            for outer in horizontal_strips(inner, Partition([9] * 4), n):
                if outer.size > 10:
                    continue
                assert sorted(strip_ribbons(outer, inner, n)) == oracles.strip_stats(outer, inner, n)


def test_canonical_spin_is_maximal():
    for inner in partitions_up_to(5):
        for outer in horizontal_strips(inner, Partition([7] * 4), 2):
            if outer.size > 9:
                continue
            spins = [sum(oracles.ribbon_stats(r)[1] for r in t)
                     for t in oracles.tilings(oracles.cells(outer, inner), 2)]
            assert sum(s for _, s in strip_ribbons(outer, inner, 2)) == max(spins)
