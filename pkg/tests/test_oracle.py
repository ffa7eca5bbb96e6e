from fractions import Fraction
from itertools import product

import pytest

from conftest import brute_is_subsequence, brute_lcs, brute_max_code
from indel_bounds import (
    Code,
    CodeParams,
    ListParams,
    ParameterError,
    averaging_identity,
    insertion_ball_size,
    max_indel_code_exact,
    min_levenshtein_distance,
    shortening_experiment,
    verify_list_bound_everywhere,
)
from indel_bounds.config import Limits
from indel_bounds.errors import EnumerationCapError
from indel_bounds.oracle import ShorteningCollisionError, all_words, exhaustive_list_sizes

# Derived by exhaustive clique search and cross-checked where feasible
# against the unpruned enumerator in conftest.
ORACLE_VALUES = {
    (2, 3): {2: 8, 3: 2, 4: 2, 5: 2, 6: 2},
    (2, 4): {2: 16, 3: 4, 4: 4, 5: 2, 6: 2, 7: 2, 8: 2},
    (3, 3): {2: 27, 3: 5, 4: 5, 5: 3, 6: 3},
    (3, 4): {2: 81, 3: 11, 4: 11, 5: 3, 6: 3, 7: 3, 8: 3},
}


@pytest.mark.parametrize("q,n,d", [(2, 3, 4), (2, 3, 3), (2, 4, 4), (3, 2, 4), (3, 2, 2), (2, 4, 6), (3, 3, 6)])
def test_matches_unpruned_enumeration(q, n, d):
    assert max_indel_code_exact(CodeParams(q, n, d)).value == brute_max_code(q, n, d)


def test_examples():
    assert max_indel_code_exact(CodeParams(2, 3, 4)).value == 2
    assert max_indel_code_exact(CodeParams(3, 2, 4)).value == 3


@pytest.mark.parametrize("key", sorted(ORACLE_VALUES))
def test_frozen_values(key):
    q, n = key
    for d, value in ORACLE_VALUES[key].items():
        result = max_indel_code_exact(CodeParams(q, n, d))
        assert result.exact and result.value == value
        assert len(result.witness) == value
        if value > 1:
            assert min_levenshtein_distance(result.witness) >= d


def test_search_space_and_record():
    result = max_indel_code_exact(CodeParams(2, 3, 4))
    assert result.search_space_size == 8
    rec = result.to_record()
    assert rec["value_num"] == 2 and "elapsed" not in rec
    assert rec == max_indel_code_exact(CodeParams(2, 3, 4)).to_record()


def test_cap_is_refused():
    with pytest.raises(EnumerationCapError):
        max_indel_code_exact(CodeParams(4, 8, 4))
    with pytest.raises(EnumerationCapError):
        all_words(2, 5, Limits(max_enum=31))


def test_list_scan_against_brute_force():
    code = Code.from_words([(0, 0, 1, 1), (1, 1, 0, 0), (0, 1, 0, 1)], 2)
    for s, t in [(0, 1), (1, 1), (0, 2), (1, 0)]:
        scan = verify_list_bound_everywhere(code, ListParams(s, t))
        m = 4 - s + t
        best = 0
        for z in product(range(2), repeat=m):
            best = max(best, sum(brute_lcs(z, c) >= 4 - s for c in code.words))
        assert scan.max_size == best and scan.centers == 2**m


def test_exhaustive_list_sizes_small():
    # d <= 2, s = 0, t = n: every word of length n embeds in some length-2n center
    result = exhaustive_list_sizes(2, 2, 2, 0, 2)
    assert result.max_size == 4
    assert result.codes == 2**4


@pytest.mark.parametrize("seed", range(6))
def test_averaging_identity(seed):
    import random

    rng = random.Random(seed)
    q, n = rng.choice([(2, 4), (3, 3)])
    words = {tuple(rng.randrange(q) for _ in range(n)) for _ in range(4)}
    code = Code.from_words(words, q)
    s = 0
    t = rng.randrange(3)
    exact, closed = averaging_identity(code, s, t)
    assert exact == closed
    m = n - s + t
    total = sum(
        sum(brute_is_subsequence(c, y) for c in code.words) for y in product(range(q), repeat=m)
    )
    assert exact == Fraction(total, q**m)


def test_shortening_collision():
    code = Code.from_words([(0, 1, 1), (0, 1, 0)], 2)
    with pytest.raises(ShorteningCollisionError):
        averaging_identity(code, 1, 0)


def test_shortening_experiment():
    code = max_indel_code_exact(CodeParams(3, 4, 3)).witness
    stats = shortening_experiment(code, 1, 1, 4000, seed=3)
    assert stats.expected == Fraction(len(code) * insertion_ball_size(3, 3, 1), 81)
    assert abs(stats.mean - float(stats.expected)) <= 5 * stats.stderr
    assert shortening_experiment(code, 1, 1, 50, seed=3) == shortening_experiment(code, 1, 1, 50, seed=3)
    with pytest.raises(ParameterError):
        shortening_experiment(code, 1, 1, 1, seed=0)
