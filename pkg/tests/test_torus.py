import math
import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circcap import (
    INFINITY,
    Code,
    ParameterError,
    PowerParams,
    Word,
    are_adjacent,
    is_independent,
    min_distance,
    tor_dist,
    word_dist,
)
from circcap.torus import first_conflict

from conftest import brute_dist, brute_independent


@pytest.mark.parametrize("a,b,n,expected", [(0, 0, 7, 0), (1, 6, 7, 2), (0, 108, 382, 108)])
def test_tor_dist_examples(a, b, n, expected):
    assert tor_dist(a, b, n) == expected


def test_tor_dist_is_a_metric_exhaustive():
    for n in range(2, 51):
        for a in range(n):
            assert tor_dist(a, a, n) == 0
            for b in range(n):
                dab = tor_dist(a, b, n)
                assert dab == tor_dist(b, a, n)
                assert dab <= n // 2
                assert (dab == 0) == (a == b)
        # triangle inequality on a subsample of triples for the larger n
        triples = product(range(n), repeat=3) if n <= 20 else (
            (random.randrange(n), random.randrange(n), random.randrange(n)) for _ in range(3000))
        for a, b, c in triples:
            assert tor_dist(a, c, n) <= tor_dist(a, b, n) + tor_dist(b, c, n)


def test_word_dist_examples():
    u = Word((0, 0), 5)
    assert word_dist(u, u) == 0
    assert word_dist(u, Word((1, 2), 5)) == 2
    # coordinate distances 56, 10, 70, 108, 8
    assert word_dist(Word((0,) * 5, 382), Word((56, 10, 70, 108, 374), 382)) == 108


def test_word_dist_mismatch():
    with pytest.raises(ParameterError):
        word_dist(Word((0, 0), 5), Word((0, 0), 7))
    with pytest.raises(ParameterError):
        word_dist(Word((0, 0), 5), Word((0,), 5))


words = st.integers(2, 30).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda d: st.tuples(*[st.tuples(*[st.integers(0, n - 1)] * d)] * 3).map(lambda t: (n, t))
    )
)


@given(words)
def test_word_dist_is_a_metric(data):
    n, (u, v, w) = data
    u, v, w = Word(u, n), Word(v, n), Word(w, n)
    assert word_dist(u, v) == word_dist(v, u)
    assert (word_dist(u, v) == 0) == (u == v)
    assert word_dist(u, w) <= word_dist(u, v) + word_dist(v, w)


def test_word_validation():
    with pytest.raises(ParameterError):
        Word((7,), 7)
    with pytest.raises(ParameterError):
        Word((0,), 1)
    with pytest.raises(ParameterError):
        Word((), 5)
    with pytest.raises(ParameterError):
        Word((0,) * 17, 5)


def test_params_validation():
    with pytest.raises(ParameterError):
        PowerParams(4, 7, 1)
    with pytest.raises(ParameterError):
        PowerParams(0, 7, 1)
    PowerParams(108, 382, 5)


def test_code_is_canonical_set():
    c = Code(5, 2, [(4, 3), (0, 0), (4, 3)])
    assert c.words == ((0, 0), (4, 3))
    assert Word((4, 3), 5) in c and (1, 1) not in c
    with pytest.raises(ParameterError):
        Code(5, 2, [(5, 0)])
    with pytest.raises(ParameterError):
        Code(5, 2, [(0, 0, 0)])


def test_min_distance_examples(c5_square_code, prop1_code):
    assert min_distance(Code(7, 2, [(1, 2)])) is INFINITY
    assert math.isinf(min_distance(Code(7, 2, [(1, 2)])))
    assert min_distance(c5_square_code) == 2
    assert min_distance(prop1_code) == 108
    with pytest.raises(ParameterError):
        min_distance(Code(7, 2))


def test_adjacency_examples():
    p = PowerParams(2, 7, 2)
    u = Word((0, 0), 7)
    assert not are_adjacent(u, u, p)
    assert are_adjacent(u, Word((1, 1), 7), p)
    assert not are_adjacent(u, Word((2, 5), 7), p)
    with pytest.raises(ParameterError):
        are_adjacent(Word((0,), 7), Word((1,), 7), p)


def test_is_independent_examples(appendix, c7_5, prop1_code):
    assert is_independent(appendix, c7_5)
    assert not is_independent(Code(7, 1, [(0,), (1,)]), PowerParams(2, 7, 1))
    assert is_independent(prop1_code, PowerParams(108, 382, 5))
    assert not is_independent(prop1_code, PowerParams(109, 382, 5))
    with pytest.raises(ParameterError):
        is_independent(appendix, PowerParams(2, 7, 4))


def test_adjacency_matches_explicit_strong_product():
    # strong power: distinct and every coordinate equal or adjacent in C_{k,n}
    for n in range(2, 10):
        for k in range(1, n // 2 + 1):
            base = {(a, b) for a in range(n) for b in range(n) if a != b and min((a - b) % n, (b - a) % n) < k}
            for d in (1, 2):
                p = PowerParams(k, n, d)
                space = list(product(range(n), repeat=d))
                for u in space:
                    for v in space:
                        explicit = u != v and all(a == b or (a, b) in base for a, b in zip(u, v))
                        assert are_adjacent(Word(u, n), Word(v, n), p) == explicit


def test_independence_matches_pairwise_oracle():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(2, 10)
        d = rng.randint(1, 3)
        k = rng.randint(1, n // 2)
        ws = [tuple(rng.randrange(n) for _ in range(d)) for _ in range(rng.randint(1, 8))]
        code = Code(n, d, ws)
        p = PowerParams(k, n, d)
        expected = brute_independent(code.words, n, k)
        assert is_independent(code, p) == expected
        assert (min_distance(code) >= k) == expected
        if len(code) > 1:
            assert min_distance(code) == min(
                brute_dist(u, v, n) for i, u in enumerate(code.words) for v in code.words[i + 1:])


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=2, max_size=12, unique=True))
def test_first_conflict_is_a_real_conflict(ws):
    code = Code(9, 2, ws)
    bad = first_conflict(code, 3)
    if bad is None:
        assert brute_independent(code.words, 9, 3)
    else:
        assert word_dist(*bad) < 3
