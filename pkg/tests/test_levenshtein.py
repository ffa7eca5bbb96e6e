import math
import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bfs_distance, brute_is_subsequence, brute_lcs
from indel_bounds import (
    Code,
    ParameterError,
    Word,
    deletion_ball,
    fixed_radius_ball,
    in_fixed_radius_ball,
    insertion_ball,
    insertion_ball_size,
    lcs,
    levenshtein_distance,
    min_levenshtein_distance,
)
from indel_bounds.errors import EnumerationCapError


def W(text, q=3):
    return Word.parse(text, q)


def words(q, max_len):
    return st.integers(0, max_len).flatmap(lambda n: st.tuples(*[st.integers(0, q - 1)] * n))


class TestLcs:
    def test_identical(self):
        assert lcs(W("012"), W("012")) == 3

    def test_empty(self):
        assert lcs(W("012"), W("")) == 0

    def test_oracle_example(self):
        assert brute_lcs((0, 1, 0, 2), (1, 2, 0, 1)) == 2
        assert lcs(W("0102"), W("1201")) == 2

    def test_alphabet_mismatch(self):
        with pytest.raises(ParameterError):
            lcs(Word((0, 1), 2), Word((0, 1), 3))

    @given(words(3, 6), words(3, 6))
    def test_matches_enumeration_and_is_symmetric(self, x, y):
        assert lcs(x, y) == lcs(y, x) == brute_lcs(x, y)


class TestDistance:
    def test_identity(self):
        assert levenshtein_distance(W("0120"), W("0120")) == 0

    def test_delete_all(self):
        assert levenshtein_distance(W("012"), W("")) == 3

    def test_bfs_example(self):
        assert bfs_distance((0, 1, 0, 2), (1, 2, 0, 1), 3) == 4
        assert levenshtein_distance(W("0102"), W("1201")) == 4

    @settings(max_examples=40, deadline=None)
    @given(words(2, 6), words(2, 6))
    def test_matches_bfs(self, x, y):
        d = levenshtein_distance(x, y)
        assert d == len(x) + len(y) - 2 * lcs(x, y)
        assert d == bfs_distance(x, y, 2)

    @given(words(3, 7), words(3, 7), words(3, 7))
    def test_triangle_inequality(self, x, y, z):
        assert levenshtein_distance(x, z) <= levenshtein_distance(x, y) + levenshtein_distance(y, z)


class TestInsertionBall:
    def test_zero_insertions(self):
        x = W("0120")
        assert insertion_ball(x, 0) == {x}

    def test_binary_example(self):
        expected = {y for y in product(range(2), repeat=4) if brute_is_subsequence((0, 0, 0), y)}
        assert len(expected) == 5
        assert {w.symbols for w in insertion_ball(Word((0, 0, 0), 2), 1)} == expected

    def test_size_formula_examples(self):
        assert insertion_ball_size(2, 3, 1) == 5
        assert insertion_ball_size(4, 3, 1) == 13
        assert insertion_ball_size(5, 7, 0) == 1
        assert len(insertion_ball(Word((1, 3, 2), 4), 1)) == 13

    @pytest.mark.parametrize("q,n,t", [(2, 4, 2), (3, 3, 2), (4, 2, 3)])
    def test_independent_of_center(self, q, n, t):
        for x in product(range(q), repeat=n):
            assert len(insertion_ball(Word(x, q), t)) == insertion_ball_size(q, n, t)

    def test_exact_big_integers(self):
        value = insertion_ball_size(50, 200, 30)
        assert isinstance(value, int)
        assert value == sum(math.comb(230, i) * 49**i for i in range(31))

    def test_negative_t(self):
        with pytest.raises(ParameterError):
            insertion_ball(W("01"), -1)

    def test_enumeration_cap(self):
        with pytest.raises(EnumerationCapError):
            insertion_ball(Word((0,) * 10, 2), 5)


class TestDeletionBall:
    def test_zero(self):
        assert deletion_ball(W("0112"), 0) == {W("0112")}

    def test_example(self):
        assert {w.symbols for w in deletion_ball(Word((0, 0, 1, 1), 2), 2)} == {(0, 0), (0, 1), (1, 1)}

    def test_too_many_deletions(self):
        with pytest.raises(ParameterError):
            deletion_ball(W("01"), 3)

    @settings(max_examples=60)
    @given(words(3, 8), st.integers(0, 4))
    def test_matches_subset_enumeration(self, y, t):
        t = min(t, len(y))
        expected = {tuple(y[i] for i in idx) for idx in combinations(range(len(y)), len(y) - t)}
        got = {w.symbols for w in deletion_ball(Word(y, 3), t)}
        assert got == expected
        assert len(got) <= math.comb(len(y), t)

    @pytest.mark.parametrize("n,t", [(4, 1), (5, 2), (6, 3)])
    def test_distinct_symbols_hit_binomial(self, n, t):
        assert len(deletion_ball(Word(tuple(range(n)), n), t)) == math.comb(n, t)


def _edit_closure(z, s, t, q):
    """Words reachable by applying up to s insertions and t deletions one at a
    time, in any interleaving."""
    frontier = {(tuple(z), 0, 0)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for w, i, d in frontier:
            if d < t:
                for k in range(len(w)):
                    nxt.add((w[:k] + w[k + 1 :], i, d + 1))
            if i < s:
                for k in range(len(w) + 1):
                    for a in range(q):
                        nxt.add((w[:k] + (a,) + w[k:], i + 1, d))
        frontier = nxt - seen
        seen |= frontier
    return {w for w, _, _ in seen}


class TestFixedRadiusBall:
    def test_trivial(self):
        z = W("012")
        assert fixed_radius_ball(z, 0, 0) == {z}

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("s,t", [(0, 1), (1, 0), (1, 1), (2, 1), (1, 2), (2, 2)])
    def test_membership_and_enumeration_agree(self, q, s, t):
        rng = random.Random(q * 100 + s * 10 + t)
        for _ in range(4):
            z = tuple(rng.randrange(q) for _ in range(rng.randrange(0, 6)))
            ball = {w.symbols for w in fixed_radius_ball(Word(z, q), s, t)}
            assert ball == _edit_closure(z, s, t, q)
            for length in range(max(0, len(z) - t), len(z) + s + 1):
                for w in product(range(q), repeat=length):
                    assert in_fixed_radius_ball(w, z, s, t) == (w in ball)

    def test_monotone(self):
        z = Word((0, 1, 1, 0), 2)
        big = fixed_radius_ball(z, 2, 2)
        assert fixed_radius_ball(z, 1, 2) | fixed_radius_ball(z, 2, 1) <= big


class TestMinDistance:
    def test_singleton(self):
        assert min_levenshtein_distance(Code.from_words([(0, 1, 2)], 3)) == math.inf

    def test_one_substitution(self):
        assert min_levenshtein_distance(Code.from_words([(0, 1, 2), (0, 2, 2)], 3)) == 2

    def test_random_codes_pairwise(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randrange(1, 6)
            ws = {tuple(rng.randrange(3) for _ in range(n)) for _ in range(rng.randrange(2, 7))}
            if len(ws) < 2:
                continue
            expected = min(2 * n - 2 * brute_lcs(a, b) for a, b in combinations(ws, 2))
            assert min_levenshtein_distance(Code.from_words(ws, 3)) == expected


class TestTypes:
    def test_word_validation(self):
        with pytest.raises(ParameterError):
            Word((0, 3), 3)

    def test_parse_forms(self):
        assert Word.parse("0,1,2", 3) == Word.parse("012", 3) == Word.parse("0 1 2", 3)
        assert Word.parse("10,11", 12).symbols == (10, 11)
        with pytest.raises(ParameterError):
            Word.parse("1011", 12)

    def test_code_uniform_length(self):
        with pytest.raises(ParameterError):
            Code.from_words([(0, 1), (0, 1, 1)], 2)

    def test_code_deduplicates(self):
        assert len(Code.from_words([(0, 1), (0, 1), (1, 1)], 2)) == 2
