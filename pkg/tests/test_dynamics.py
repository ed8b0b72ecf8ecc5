"""Chosen-path dynamics: partitions, graphs, cycles, density."""

from fractions import Fraction

import pytest

from parseval_dilate.dynamics import (
    Cycle,
    NotSubordinated,
    Unpartitionable,
    chosen_digit_pieces,
    chosen_paths,
    cycle_subrep_check,
    density_check,
    discover_partition,
    graph_cycles,
    is_qmf,
    verify_partition,
)
from parseval_dilate.filters import ExplicitSet, build_filter
from parseval_dilate.intervals import IntervalSet
from parseval_dilate.wavelets import scaling_set
from parseval_dilate.words import EPWord

I = IntervalSet.parse
HALF = Fraction(1, 2)

SHANNON_M = I("[0,1/4)u[3/4,1)")


def example_filter(a: Fraction, D: IntervalSet) -> IntervalSet:
    F = IntervalSet([(-a, a)])
    return build_filter(F, ExplicitSet(D)).M


def ex1_filter(a=Fraction(1, 8)) -> IntervalSet:
    D = IntervalSet([(Fraction(1, 4), HALF - a), (HALF + a, Fraction(3, 4))])
    return example_filter(a, D)


def ex2_filter() -> IntervalSet:
    return example_filter(Fraction(1, 8), I("[1/8,3/8)"))


# -- cycles -----------------------------------------------------------------


def test_cycle_points_from_word():
    c = Cycle.from_word("10")
    assert c.points == (Fraction(1, 3), Fraction(2, 3))
    c = Cycle.from_word("100")
    assert c.points == (Fraction(1, 7), Fraction(4, 7), Fraction(2, 7))
    # tau-chain postcondition: tau_{l_j}(theta_j) = theta_{j+1}, cyclically
    for word in ("10", "100", "1001100", "0111"):
        c = Cycle.from_word(word)
        p = len(word)
        for j in range(p):
            image = (c.points[j] + int(word[j])) / 2
            assert image == c.points[(j + 1) % p]


def test_cycle_constants():
    assert Cycle.from_word("0").points == (Fraction(0),)
    assert Cycle.from_word("1").points == (Fraction(1),)


def test_cycle_canonical_rotation():
    c = Cycle.from_word("01").canonical()
    assert c.word == "10" and c.points[0] == Fraction(1, 3)


# -- chosen digits ------------------------------------------------------------


def test_chosen_digit_pieces_shannon():
    zero, one = chosen_digit_pieces(SHANNON_M)
    assert zero == I("[0,1/2)")
    assert one == I("[1/2,1)")


def test_chosen_digit_pieces_ex1():
    a = Fraction(1, 8)
    M = ex1_filter(a)
    zero, one = chosen_digit_pieces(M)
    assert IntervalSet([(0, a)]).is_subset_of(zero)
    assert zero.measure() + one.measure() == 1
    assert zero == M.intersect(I("[0,1/2)")).affine(2)


def test_chosen_digit_pieces_empty_lower_half():
    M = I("[1/2,1)")
    assert is_qmf(M)
    zero, one = chosen_digit_pieces(M)
    assert zero.is_empty
    assert one == I("[0,1)")


def test_chosen_digit_rejects_non_qmf():
    with pytest.raises(ValueError):
        chosen_digit_pieces(I("[0,1/3)"))


# -- partitions ----------------------------------------------------------------


def test_verify_partition_ex1():
    a = Fraction(1, 8)
    M = ex1_filter(a)
    parts = [
        I("[0,1/16)"),
        IntervalSet([(Fraction(1, 4), HALF - a / 2)]),
        IntervalSet([(HALF + a / 2, Fraction(3, 4))]),
        I("[15/16,1)"),
    ]
    g = verify_partition(M, parts)
    assert g.label == [0, 1, 0, 1]
    assert g.target == [0, 2, 1, 3]


def test_verify_partition_ex2():
    M = ex2_filter()
    parts = [I("[0,1/16)"), I("[1/8,1/4)"), I("[1/4,7/16)"),
             I("[9/16,5/8)"), I("[15/16,1)")]
    g = verify_partition(M, parts)
    # loop 0, loop 1, and the 3-cycle with labels 1,0,0
    assert g.label == [0, 1, 0, 0, 1]
    assert g.target == [0, 3, 1, 2, 4]


def test_verify_partition_shannon_single_piece_fails():
    with pytest.raises(NotSubordinated) as err:
        verify_partition(SHANNON_M, [SHANNON_M])
    assert err.value.counterexample is not None
    g = verify_partition(SHANNON_M, [I("[0,1/4)"), I("[3/4,1)")])
    assert g.label == [0, 1]
    assert g.target == [0, 1]


def test_verify_partition_requires_cover():
    with pytest.raises(ValueError):
        verify_partition(SHANNON_M, [I("[0,1/4)")])


def test_discover_partition_ex1_and_shannon():
    g = discover_partition(ex1_filter())
    assert len(g.vertices) == 4
    assert sorted(c.word for c in graph_cycles(g)) == ["0", "1", "10"]
    g = discover_partition(SHANNON_M)
    assert len(g.vertices) == 2
    assert sorted(c.word for c in graph_cycles(g)) == ["0", "1"]


def test_discover_partition_budget_exhaustion():
    with pytest.raises(Unpartitionable):
        discover_partition(ex2_filter(), max_splits=0)


# -- cycles from graphs -----------------------------------------------------------


def test_graph_cycles_ex1():
    g = discover_partition(ex1_filter())
    cycles = graph_cycles(g)
    by_word = {c.word: c for c in cycles}
    assert set(by_word) == {"0", "1", "10"}
    assert by_word["10"].points == (Fraction(1, 3), Fraction(2, 3))


def test_graph_cycles_ex2():
    cycles = graph_cycles(discover_partition(ex2_filter()))
    by_word = {c.word: c for c in cycles}
    assert set(by_word) == {"0", "1", "100"}
    assert by_word["100"].points == (Fraction(1, 7), Fraction(4, 7), Fraction(2, 7))


def test_cycle_points_sit_in_their_vertices():
    g = discover_partition(ex2_filter())
    for cyc in graph_cycles(g):
        if cyc.word in ("0", "1"):
            continue
        for theta in cyc.points:
            assert any(v.contains_point(theta) for v in g.vertices)


# -- chosen paths -------------------------------------------------------------------


def test_chosen_paths_ex1():
    a = Fraction(1, 8)
    M = ex1_filter(a)
    paths = chosen_paths(M, discover_partition(M))
    expected = [
        (IntervalSet([(0, a)]), EPWord("", "0")),
        (IntervalSet([(a, HALF)]), EPWord("", "10")),
        (IntervalSet([(HALF, 1 - a)]), EPWord("", "01")),
        (IntervalSet([(1 - a, 1)]), EPWord("", "1")),
    ]
    assert paths.pieces == expected


def test_chosen_paths_ex2():
    M = ex2_filter()
    paths = chosen_paths(M, discover_partition(M))
    expected = [
        (I("[0,1/8)"), EPWord("", "0")),
        (I("[1/8,1/4)"), EPWord("", "100")),
        (I("[1/4,1/2)"), EPWord("", "010")),
        (I("[1/2,7/8)"), EPWord("", "001")),
        (I("[7/8,1)"), EPWord("", "1")),
    ]
    assert paths.pieces == expected


def test_chosen_paths_shannon():
    paths = chosen_paths(SHANNON_M, discover_partition(SHANNON_M))
    assert paths.pieces == [
        (I("[0,1/2)"), EPWord.zero()),
        (I("[1/2,1)"), EPWord.one()),
    ]


def test_chosen_paths_land_in_filter_pointwise():
    # tau_{w_n}..tau_{w_1} x stays in M for interior rationals, exact membership
    M = ex2_filter()
    paths = chosen_paths(M, discover_partition(M))
    for piece, word in paths.pieces:
        lo, hi = piece.intervals[0]
        for x in (lo + (hi - lo) / 3, lo + (hi - lo) / 2):
            y = x
            steps = 3 * (len(word.pre) + len(word.per))
            for n in range(steps):
                y = (y + word.digit(n)) / 2
                assert M.contains_point(y)


# -- density and subrepresentation checks ----------------------------------------------


def test_density_check_ex1_passes():
    a = Fraction(1, 8)
    M = ex1_filter(a)
    F = IntervalSet([(-a, a)])
    paths = chosen_paths(M, discover_partition(M))
    report = density_check(M, F, paths)
    assert report["condition_v"] and report["condition_ii"] and report["passes"]
    assert report["checked"] == ["ii", "v"]


def test_density_check_fails_without_low_pass():
    # QMF filter with no neighbourhood of 0: M = [1/4,3/4)
    M = I("[1/4,3/4)")
    assert is_qmf(M)
    paths = chosen_paths(M, discover_partition(M))
    F = IntervalSet.empty()
    report = density_check(M, F, paths)
    assert not report["condition_v"]
    assert not report["passes"]


def test_cycle_subrep_check():
    M = ex1_filter()
    assert cycle_subrep_check(M, Cycle.from_word("10"))
    assert not cycle_subrep_check(M, Cycle.from_word("100"))  # 1/7 not in M
    assert cycle_subrep_check(SHANNON_M, Cycle.from_word("0"))
    assert cycle_subrep_check(SHANNON_M, Cycle.from_word("1"))
    assert not cycle_subrep_check(SHANNON_M, Cycle.from_word("10"))
