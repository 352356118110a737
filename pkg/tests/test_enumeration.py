import math
from collections import Counter

import pytest

from fishburn import (
    UnknownClass,
    UnknownPredicate,
    UnknownStatistic,
    catalan,
    distribution,
    double_factorial,
    eulerian_triangle_row,
    filter_class,
    fishburn_numbers,
    gen_ascent_sequences,
    gen_factorial_posets,
    gen_inversion_tables,
    gen_matchings,
    gen_matrices,
    gen_natural_posets,
    gen_permutations,
    generate,
    second_order_eulerian,
)
from fishburn.objects import is_factorial
from fishburn.statistics import perm_stats

from helpers import (
    CATALAN,
    FISHBURN,
    NATURAL_POSET_COUNTS,
    NO_LEFT_NESTING_N3,
    ODD_DOUBLE_FACTORIAL,
    T3_ROWS,
    naive_natural_posets_by_filter,
)


class TestGenerators:
    @pytest.mark.parametrize("n", range(6))
    def test_matching_counts(self, n):
        ms = list(gen_matchings(n))
        assert len(ms) == ODD_DOUBLE_FACTORIAL[n]
        assert len(set(ms)) == len(ms)

    def test_matchings_sorted_lexicographically(self):
        arcs = [m.arcs for m in gen_matchings(4)]
        assert arcs == sorted(arcs)

    def test_empty_matching(self):
        assert [m.arcs for m in gen_matchings(0)] == [()]

    @pytest.mark.parametrize("n", range(6))
    def test_table_and_permutation_counts(self, n):
        assert sum(1 for _ in gen_inversion_tables(n)) == math.factorial(n)
        assert sum(1 for _ in gen_permutations(n)) == math.factorial(n)

    @pytest.mark.parametrize("n", range(6))
    def test_factorial_posets(self, n):
        posets = list(gen_factorial_posets(n))
        assert len(posets) == math.factorial(n)
        assert len(set(posets)) == len(posets)
        assert all(is_factorial(p) for p in posets)

    @pytest.mark.parametrize("n", range(7))
    def test_natural_poset_counts(self, n):
        assert sum(1 for _ in gen_natural_posets(n)) == NATURAL_POSET_COUNTS[n]

    @pytest.mark.parametrize("n", range(5))
    def test_natural_posets_against_filter_oracle(self, n):
        ours = {p.less for p in gen_natural_posets(n)}
        assert ours == set(naive_natural_posets_by_filter(n))

    @pytest.mark.parametrize("n", range(6))
    def test_matrix_counts_follow_fishburn(self, n):
        ts = list(gen_matrices(n))
        assert len(ts) == FISHBURN[n]
        assert len(set(ts)) == len(ts)

    def test_t3_exactly(self):
        assert {t.rows for t in gen_matrices(3)} == T3_ROWS

    def test_matrix_structure(self):
        for t in gen_matrices(4):
            assert all(v == 0 for i, row in enumerate(t.rows)
                       for j, v in enumerate(row) if j < i)
            assert all(any(row) for row in t.rows)
            assert t.total == 4

    @pytest.mark.parametrize("n", range(8))
    def test_ascent_sequence_counts(self, n):
        assert sum(1 for _ in gen_ascent_sequences(n)) == FISHBURN[n]

    def test_ascent_sequences_n3(self):
        assert list(gen_ascent_sequences(3)) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]

    def test_determinism(self):
        for name in ("matchings", "matrices", "natural_posets", "ascent_sequences"):
            assert list(generate(name, 4)) == list(generate(name, 4))

    def test_unknown_class(self):
        with pytest.raises(UnknownClass):
            generate("widgets", 3)


class TestFilters:
    def test_no_left_nesting_n3(self):
        filtered = {
            frozenset(m.arcs)
            for m in filter_class(gen_matchings(3), "no_left_nesting")
        }
        assert filtered == NO_LEFT_NESTING_N3

    def test_catalan_filter(self):
        assert sum(1 for _ in filter_class(gen_matchings(3), "no_nesting")) == 5

    def test_dually_factorial_filter(self):
        count = sum(
            1 for _ in filter_class(gen_factorial_posets(3), "dually_factorial"))
        assert count == 5

    def test_order_preserved(self):
        everything = list(gen_matchings(3))
        filtered = list(filter_class(gen_matchings(3), "no_left_nesting"))
        positions = [everything.index(m) for m in filtered]
        assert positions == sorted(positions)

    def test_unknown_predicate(self):
        with pytest.raises(UnknownPredicate):
            list(filter_class(gen_matchings(2), "no_squiggles"))


class TestSequences:
    def test_fishburn_first_ten(self):
        assert fishburn_numbers(9) == FISHBURN

    def test_fishburn_zero(self):
        assert fishburn_numbers(0) == [1]

    @pytest.mark.parametrize("n", range(8))
    def test_fishburn_matches_ascent_sequences(self, n):
        assert fishburn_numbers(n)[n] == sum(1 for _ in gen_ascent_sequences(n))

    def test_catalan(self):
        assert [catalan(n) for n in range(8)] == CATALAN

    def test_double_factorial(self):
        assert double_factorial(5) == 15
        assert double_factorial(-1) == 1
        assert double_factorial(0) == 1
        assert [double_factorial(2 * n - 1) for n in range(8)] == ODD_DOUBLE_FACTORIAL

    def test_second_order_eulerian_rows(self):
        assert second_order_eulerian(1) == (1,)
        assert second_order_eulerian(2) == (1, 2)
        assert second_order_eulerian(3) == (1, 8, 6)
        assert second_order_eulerian(4) == (1, 22, 58, 24)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_second_order_row_sums(self, n):
        assert sum(second_order_eulerian(n)) == double_factorial(2 * n - 1)

    @pytest.mark.parametrize("n", range(7))
    def test_eulerian_row_matches_descents(self, n):
        row = eulerian_triangle_row(n)
        if n == 0:
            assert row == (1,)
            return
        des = Counter(perm_stats(pi)["des"] for pi in gen_permutations(n))
        assert row == tuple(des.get(k, 0) for k in range(n))


class TestDistribution:
    def test_mahonian_table(self):
        table = distribution(gen_permutations(3), "permutations", ["inv"])
        assert table.rows == {(0,): 1, (1,): 2, (2,): 2, (3,): 1}
        assert table.total == 6

    def test_levels_table(self):
        table = distribution(gen_factorial_posets(3), "factorial_posets", ["lev"])
        assert table.rows == {(1,): 1, (2,): 4, (3,): 1}

    def test_csv_format(self):
        table = distribution(gen_permutations(3), "permutations", ["des", "inv"])
        lines = table.to_csv().splitlines()
        assert lines[0] == "des,inv,count"
        assert lines[1] == "0,0,1"
        assert lines == [lines[0]] + sorted(lines[1:], key=lambda s: tuple(
            int(x) for x in s.split(",")))

    def test_unknown_statistic(self):
        with pytest.raises(UnknownStatistic):
            distribution(gen_permutations(2), "permutations", ["lne"])
