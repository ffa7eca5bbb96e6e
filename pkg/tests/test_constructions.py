import random
from dataclasses import replace
from itertools import combinations

import pytest

from conftest import brute_is_subsequence, brute_lcs
from indel_bounds import (
    AlphabetTooSmallError,
    Code,
    CodeParams,
    ListParams,
    ParameterError,
    Word,
    build_tightness_instance,
    encode_list_to_constant_weight,
    fixed_radius_ball,
    hamming_distance_supports,
    main_johnson_list_bound,
    min_distance,
    verify_tightness_instance,
)

CASES = [
    (5, 3, 4, 0, 2),
    (8, 4, 4, 1, 1),
    (6, 4, 6, 0, 2),
    (5, 3, 3, 1, 0),
    (7, 4, 5, 0, 3),
    (9, 5, 6, 1, 2),
    (3, 2, 1, 0, 0),
]


def build(q, n, d, s, t):
    return build_tightness_instance(CodeParams(q, n, d), ListParams(s, t))


@pytest.mark.parametrize("case", CASES)
def test_instances_verify(case):
    q, n, d, s, t = case
    inst = build(*case)
    report = verify_tightness_instance(inst)
    assert report.passed, [c for c in report if not c.passed]
    assert [c.name for c in report] == ["min_distance", "list_membership", "list_size"]
    assert len(inst.code) == len(inst.witness_family)
    assert len(inst.code) == main_johnson_list_bound(CodeParams(q, n, d), ListParams(s, t)).value


def test_example_sizes():
    assert len(build(5, 3, 4, 0, 2).code) == 2
    assert len(build(8, 4, 4, 1, 1).code) == 4


def test_trivial_instance():
    inst = build(3, 2, 1, 0, 0)
    assert inst.code.words == (inst.center.symbols,)


@pytest.mark.parametrize("case", CASES)
def test_symbols_distinct(case):
    inst = build(*case)
    center = inst.center.symbols
    assert len(set(center)) == len(center)
    markers = list(inst.markers.values())
    assert len(set(markers)) == len(markers)
    assert not set(markers) & set(center)
    assert inst.witness_family.w == case[1] - case[3]


@pytest.mark.parametrize("case", [c for c in CASES if c[3] == 0])
def test_s0_distance_equals_hamming(case):
    inst = build(*case)
    n = case[1]
    by_support = dict(zip(inst.witness_family.supports, inst.code.words))
    for e, f in combinations(inst.witness_family.supports, 2):
        d_l = 2 * n - 2 * brute_lcs(by_support[e], by_support[f])
        assert d_l == hamming_distance_supports(e, f)


def test_weaker_alphabet_assumption():
    # s = 0 with q = n + t exactly
    assert verify_tightness_instance(build(7, 4, 5, 0, 3)).passed


def test_alphabet_too_small():
    with pytest.raises(AlphabetTooSmallError) as err:
        build(4, 3, 4, 0, 2)
    assert err.value.required == 5
    with pytest.raises(AlphabetTooSmallError):
        build(7, 4, 4, 1, 1)


def test_s_too_large():
    with pytest.raises(ParameterError):
        build(9, 4, 4, 2, 0)


@pytest.mark.parametrize("case", CASES[:5])
def test_mutation_is_caught(case):
    inst = build(*case)
    words = list(inst.code.words)
    # overwrite a center-derived position (markers may legitimately vary)
    fresh = case[0] - 1
    tried = 0
    for k in range(case[3], len(words[0])):
        mutated = list(words[0])
        if mutated[k] == fresh:
            continue
        mutated[k] = fresh
        code = Code.from_words([tuple(mutated)] + words[1:], case[0])
        if len(code) != len(words):
            continue
        report = verify_tightness_instance(replace(inst, code=code))
        failed = {c.name for c in report if not c.passed}
        assert failed & {"min_distance", "list_membership"}
        tried += 1
    assert tried


@pytest.mark.parametrize("case", CASES)
def test_round_trip(case):
    q, n, d, s, t = case
    inst = build(*case)
    fam = encode_list_to_constant_weight(inst.center, inst.code, s, t)
    assert len(fam) == len(inst.code)
    assert fam.w == n - s and fam.n == n - s + t
    assert min_distance(fam) >= d - 2 * s


def test_encode_singleton():
    z = Word((0, 1, 2), 3)
    fam = encode_list_to_constant_weight(z, [z.symbols], 0, 0)
    assert fam.supports == ((1, 2, 3),)


def test_encode_rejects_non_member():
    z = Word((0, 1, 2), 4)
    with pytest.raises(ParameterError, match="not in"):
        encode_list_to_constant_weight(z, [(3, 3, 3)], 0, 0)


def test_encode_is_leftmost():
    fam = encode_list_to_constant_weight((0, 0, 1), [(0, 1)], 0, 1)
    assert fam.supports == ((1, 3),)


@pytest.mark.parametrize("seed", range(25))
def test_encode_random_lists(seed):
    rng = random.Random(seed)
    q = rng.choice([2, 3])
    s, t = rng.choice([(0, 1), (0, 2), (1, 1), (1, 0), (1, 2)])
    d = 2 * s + rng.randrange(1, 3)
    m = rng.randrange(2, 5)
    n = m + s - t
    if n < 1:
        return
    z = tuple(rng.randrange(q) for _ in range(m))
    ball = sorted(w.symbols for w in fixed_radius_ball(Word(z, q), s, t) if len(w) == n)
    rng.shuffle(ball)
    chosen = []
    for c in ball:
        if all(2 * n - 2 * brute_lcs(c, o) >= d for o in chosen):
            chosen.append(c)
    fam = encode_list_to_constant_weight(z, chosen, s, t)
    assert len(fam) == len(chosen)
    assert min_distance(fam) >= d - 2 * s
    for support in fam.supports:
        assert any(brute_is_subsequence(tuple(z[i - 1] for i in support), c) for c in chosen)
