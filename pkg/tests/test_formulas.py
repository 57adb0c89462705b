import math
from fractions import Fraction

import pytest

from permsep import formulas as fm
from permsep.partitions import (
    binomial,
    conjugacy_class_size,
    multinomial,
    partitions,
    stirling_first_unsigned,
)


def test_colored_factorization_count_examples():
    assert fm.colored_factorization_count(3, 1, 1) == 6
    assert fm.colored_factorization_count(3, 2, 2) == 3
    assert fm.colored_factorization_count(3, 3, 2) == 0  # l + l' > n + 1
    with pytest.raises(ValueError):
        fm.colored_factorization_count(3, 0, 1)


def test_separated_colored_count_examples():
    assert fm.separated_colored_count(2, 1, 1, 1, 0) == 4
    assert fm.separated_colored_count(2, 2, 1, 1, 0) == 4
    assert fm.separated_colored_count(3, 3, 3, 3, 0) == 0  # slack negative
    assert fm.separated_colored_count(4, 1, 2, 1, 5) == 0  # r > n - m


def test_marked_composition_count():
    assert fm.marked_composition_count(12, 5, 3, 2) == binomial(14, 5) == 2002
    assert fm.marked_composition_count_direct(2, (1,), 0) == 2
    for n in range(2, 7):
        for k in range(1, n + 1):
            assert fm.marked_composition_count(n, n, k, 0) == 1


def test_gen_series_table_frozen_example():
    table = fm.gen_series_table(2, 1, 1)
    assert dict(table.entries) == {
        ((2,), 0): 4,
        ((1, 1), 0): 4,
        ((2,), 1): 2,
    }
    assert fm.gen_series_table(2, 0, 0).coefficient((2,), 1) == 2


def test_gen_series_table_support_constraints():
    for (n, m, k) in [(5, 3, 2), (6, 4, 1), (6, 0, 0), (7, 7, 3)]:
        table = fm.gen_series_table(n, m, k)
        for (lam, r), value in table.entries.items():
            assert value > 0
            assert r <= n - m
            assert len(lam) <= n - k - r + 1


def test_gen_series_table_validation():
    with pytest.raises(ValueError):
        fm.gen_series_table(3, 4, 1)
    with pytest.raises(ValueError):
        fm.gen_series_table(3, 2, 0)


def test_separated_pair_count_examples():
    assert fm.separated_pair_count((2,), (1,)) == 2
    assert fm.separated_pair_count((3,), (1, 1)) == 6
    assert fm.separated_pair_count((2, 1), (1, 1)) == 12
    assert fm.separated_pair_count((2, 2), (1, 1)) == 20
    assert fm.separated_pair_count((3,), (2, 1)) == 3
    # blocks too large to fit
    assert fm.separated_pair_count((2,), (2, 1)) == 0


def test_separated_pair_count_depends_only_on_m_and_k():
    for lam in [(4,), (2, 2), (3, 1)]:
        assert fm.separated_pair_count(lam, (3, 1)) == fm.separated_pair_count(
            lam, (2, 2)
        )
        assert fm.separated_pair_count(lam, (2, 1)) == fm.separated_pair_count(
            lam, (1, 2)
        )


def test_separation_probability_examples():
    assert fm.separation_probability((3,), (1, 1)).probability == Fraction(1, 2)
    assert fm.separation_probability((2, 2), (1, 1)).probability == Fraction(5, 9)
    # one block is always separated
    for lam in [(4,), (2, 2), (2, 1, 1)]:
        assert fm.separation_probability(lam, (3,)).probability == 1


def test_p_cycles_examples():
    assert fm.separation_probability_p_cycles(3, 2, (1, 1)).probability == Fraction(2, 3)
    assert fm.separation_probability_p_cycles(3, 1, (1, 1)).probability == Fraction(1, 2)
    res = fm.separation_probability_p_cycles(5, 3, (2,))
    assert res.probability == 1  # single block
    assert res.count == binomial(5, 2) * stirling_first_unsigned(5, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_p_cycles_aggregates_class_counts(n):
    for m in range(1, n + 1):
        for alpha in partitions(m):
            for p in range(1, n + 1):
                direct = sum(
                    fm.separated_pair_count(lam, alpha)
                    for lam in partitions(n)
                    if len(lam) == p
                )
                assert fm.separated_count_p_cycles(n, p, alpha) == direct


def test_two_cycles_examples():
    assert fm.separation_probability_two_cycles(3, (1, 1)).probability == Fraction(1, 2)
    assert fm.separation_probability_two_cycles(4, (1, 1)).probability == Fraction(11, 18)
    assert fm.separation_probability_two_cycles(6, (1, 1, 1)).probability == Fraction(1, 6)
    assert fm.separation_probability_two_cycles(5, (4,)).probability == 1


def test_singleton_blocks_piecewise():
    assert fm.singleton_blocks_probability(3, 2) == Fraction(1, 2)
    assert fm.singleton_blocks_probability(4, 2) == Fraction(11, 18)
    assert fm.singleton_blocks_probability(6, 3) == Fraction(1, 6)
    for n in range(2, 10):
        for k in range(2, min(n, 6) + 1):
            closed = fm.separation_probability_two_cycles(n, (1,) * k).probability
            assert closed == fm.singleton_blocks_probability(n, k)


@pytest.mark.parametrize("n", range(2, 10))
def test_consistency_of_all_two_cycle_paths(n):
    for m in range(1, n + 1):
        for alpha in partitions(m):
            series = fm.separation_probability((n,), alpha).probability
            closed = fm.separation_probability_two_cycles(n, alpha).probability
            via_p = fm.separation_probability_p_cycles(n, 1, alpha).probability
            assert series == closed == via_p


def test_degree_ten_instance():
    # exercises the transition matrices at degree 10
    value = fm.separation_probability((10,), (1, 1)).probability
    assert value == fm.singleton_blocks_probability(10, 2) == Fraction(14, 27)


def test_degree_ten_profile_symmetry():
    # counts at n = 10 agree across block profiles of equal size and length
    for lam in [(10,), (5, 3, 2), (4, 4, 1, 1)]:
        for profiles in [((4, 2), (3, 3), (5, 1)), ((3, 2, 2), (4, 2, 1), (5, 1, 1))]:
            values = {fm.separated_pair_count(lam, alpha) for alpha in profiles}
            assert len(values) == 1


def test_involution_series_examples():
    # single pair, no blocks: the product is the identity on 2 points
    assert fm.involution_series_monomial(1, ()) == (
        Fraction(0),
        Fraction(0),
        Fraction(1),
    )
    assert fm.involution_pair_count(2, (1, 1)) == 20
    for pairs in range(1, 5):
        n = 2 * pairs
        for m in range(n + 1):
            alpha = (m,) if m else ()
            series = fm.involution_series(pairs, alpha)
            k = len(alpha)
            assert all(
                r <= min(n - m, pairs - k + 1) for r in series.coeffs
            )


def test_involution_probability_and_printed_form():
    res = fm.separation_probability_involution(2, (1, 1))
    assert res.probability == Fraction(5, 9)
    assert res.count == 20
    assert res.warnings  # the printed form disagrees here
    assert fm.involution_probability_printed_form(2, (1, 1)) == Fraction(5, 18)
    # with full coverage (m = 2N) the printed form is the true probability
    for pairs in (1, 2, 3):
        for alpha in partitions(2 * pairs):
            res = fm.separation_probability_involution(pairs, alpha)
            assert fm.involution_probability_printed_form(pairs, alpha) == res.probability
            assert not res.warnings


def test_printed_form_off_by_remainder_factorial():
    for pairs in (1, 2, 3):
        n = 2 * pairs
        for m in range(1, n + 1):
            for alpha in partitions(m):
                res = fm.separation_probability_involution(pairs, alpha)
                printed = fm.involution_probability_printed_form(pairs, alpha)
                assert printed * math.factorial(n - m) == res.probability


def test_colored_matching_count():
    assert fm.colored_matching_count(1, 1) == 1
    assert fm.colored_matching_count(1, 2) == 2
    # length N + 1 is still feasible: brute force gives 4 at two pairs
    assert fm.colored_matching_count(2, 3) == 4
    assert fm.colored_matching_count(2, 4) == 0  # length > N + 1
    assert fm.colored_matching_count(3, 1) == 15  # all matchings, forced coloring


def test_one_face_map_series():
    assert fm.one_face_map_series(1).to_monomial() == (
        Fraction(0),
        Fraction(0),
        Fraction(1),
    )
    # two edges: two planar gluings (three vertices) and one toroidal (one vertex)
    assert fm.one_face_map_series(2).to_monomial() == (
        Fraction(0),
        Fraction(1),
        Fraction(0),
        Fraction(2),
    )
    for pairs in range(1, 6):
        series = fm.one_face_map_series(pairs)
        assert dict(series.coeffs) == dict(fm.involution_series(pairs, ()).coeffs)
        assert all(c.denominator == 1 and c > 0 for c in series.coeffs.values())
        # total number of gluings is (2N-1)!!
        assert series.evaluate(1) == math.prod(range(1, 2 * pairs, 2))


def test_add_fixed_points_examples():
    assert fm.add_fixed_points_count((2,), 1, (1, 1)) == 12
    assert fm.add_fixed_points_count((2, 2), 0, (1, 1)) == 20
    assert fm.add_fixed_points_count((3,), 2, (1, 1)) == fm.separated_pair_count(
        (3, 1, 1), (1, 1)
    )
    with pytest.raises(ValueError):
        fm.add_fixed_points_count((2, 1), 1, (1, 1))  # base type has a fixed point


def test_add_fixed_points_probability_normalization():
    res = fm.add_fixed_points_probability((2,), 1, (1, 1))
    assert res.count == 12
    assert res.probability == Fraction(
        12, multinomial([1, 1, 1]) * conjugacy_class_size((2, 1))
    )


def test_add_fixed_points_blocks_larger_than_base():
    # blocks may use the added fixed points: total size up to n + r
    value = fm.add_fixed_points_count((2,), 2, (3, 1))
    assert value == fm.separated_pair_count((2, 1, 1), (3, 1))


def test_binomial_sum_identity():
    assert fm.binomial_sum_identity_holds(1, 0)
    assert fm.binomial_sum_identity_holds(0, 0)
    for a in range(7):
        for b in range(7):
            assert fm.binomial_sum_identity_holds(a, b)


def test_stirling_sum_identity():
    assert fm.stirling_sum_identity_holds(2, 1)  # 1 - 1 + 1/3 = c(3,1)/3!
    assert fm.stirling_sum_identity_holds(0, 1)
    for a in range(9):
        for p in range(a + 2):
            assert fm.stirling_sum_identity_holds(a, p)


def test_probabilities_stay_in_unit_interval():
    for n in range(1, 7):
        for lam in partitions(n):
            for m in range(1, n + 1):
                for alpha in partitions(m):
                    res = fm.separation_probability(lam, alpha)
                    assert 0 <= res.probability <= 1
                    assert res.count >= 0
