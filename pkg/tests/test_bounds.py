import math
from itertools import product

import pytest

from circcap import (
    Code,
    ParameterError,
    alpha_square,
    capacity_lower,
    capacity_lower_str,
    halving_upper,
    ratio_transfer_check,
    table_for,
    theta_cycle,
    theta_power_upper,
)
from circcap.bounds import CodeVerificationError, Source, render_table, upper_str


def test_theta_cycle_examples():
    assert theta_cycle(3) == pytest.approx(1.0, abs=1e-9)
    assert theta_cycle(5) == pytest.approx(math.sqrt(5), abs=1e-9)
    assert 3.3176 < theta_cycle(7) < 3.3177
    with pytest.raises(ParameterError):
        theta_cycle(6)
    with pytest.raises(ParameterError):
        theta_cycle(1)


def test_theta_cycle_increasing_and_below_half():
    prev = 0.0
    for n in range(3, 10002, 2):
        t = theta_cycle(n)
        assert prev < t < n / 2
        prev = t


@pytest.mark.parametrize("n,expected", [(7, 10), (5, 5), (3, 1)])
def test_alpha_square(n, expected):
    assert alpha_square(n) == expected


def test_halving_upper():
    assert halving_upper(33, 7) == 115
    assert halving_upper(10, 7) == 35
    assert all(halving_upper(1, n) == n // 2 for n in range(3, 30))
    with pytest.raises(ParameterError):
        halving_upper(0, 7)


def test_theta_power_upper():
    assert theta_power_upper(7, 5) == 401
    assert theta_power_upper(7, 1) == 3
    assert theta_power_upper(5, 2) == 5
    assert theta_power_upper(5, 4) == 25
    assert theta_power_upper(5, 3) == 11


def test_capacity_lower():
    assert capacity_lower(367, 5) > 3.2578
    assert capacity_lower_str(367, 5) == "3.2578"
    assert capacity_lower_str(350, 5) == "3.2271"
    assert capacity_lower_str(148, 3) == "5.2895"
    assert capacity_lower_str(4, 2) == "2.0000"
    # truncation is exact: (c/10^4)^d <= size < ((c+1)/10^4)^d
    for size, d in [(367, 5), (350, 5), (148, 3), (108, 4), (33, 3), (4009, 5)]:
        c = int(capacity_lower_str(size, d).replace(".", ""))
        assert c**d <= size * 10 ** (4 * d) < (c + 1) ** d


def test_sandwich_square_formula_vs_theta():
    for n in range(3, 102, 2):
        assert capacity_lower(alpha_square(n), 2) <= theta_cycle(n) + 1e-12


def test_upper_str_rounds_up():
    assert upper_str(theta_cycle(7)) == "3.3177"
    assert upper_str(2.5) == "2.5000"


def test_ratio_transfer():
    assert not ratio_transfer_check(108, 382, 2, 7)
    assert ratio_transfer_check(729, 4009, 2, 11)
    assert ratio_transfer_check(3, 10, 3, 10)
    with pytest.raises(ParameterError):
        ratio_transfer_check(4, 7, 2, 7)


def test_ratio_transfer_reflexive_transitive():
    tuples = [(k, n) for n in range(2, 25) for k in range(1, n // 2 + 1)]
    for a in tuples:
        assert ratio_transfer_check(*a, *a)
    for a, b, c in product(tuples[::3], repeat=3):
        if ratio_transfer_check(*a, *b) and ratio_transfer_check(*b, *c):
            assert ratio_transfer_check(*a, *c)


def test_table_for_c7(appendix):
    rows = table_for(7, 5, {5: ("appendix", appendix)})
    assert [r.lower for r in rows] == [3, 10, 30, 100, 367]
    assert [r.upper for r in rows] == [3, 10, 35, 121, 401]
    assert rows[4].lower_source is Source.CODE_FILE
    assert rows[4].upper_source is Source.THETA_POWER
    assert rows[2].lower_source is Source.PRODUCT
    assert all(r.lower <= r.upper for r in rows)
    plain = table_for(7, 5)
    assert plain[4].lower == 300


def test_table_for_c5_and_even():
    rows = table_for(5, 2)
    assert [(r.lower, r.upper) for r in rows] == [(2, 2), (5, 5)]
    rows = table_for(4, 3)
    assert [(r.lower, r.upper) for r in rows] == [(2, 2), (4, 4), (8, 8)]


def test_table_for_rejects_bad_code():
    bad = Code(7, 2, [(0, 0), (1, 1)])
    with pytest.raises(CodeVerificationError, match="bad.txt"):
        table_for(7, 2, {2: ("bad.txt", bad)})


def test_render_table():
    rows = table_for(7, 2)
    tsv = render_table(rows, "tsv").splitlines()
    assert tsv[0].split("\t")[:2] == ["d", "lower"]
    assert tsv[2].split("\t")[:5] == ["2", "10", "square-formula", "10", "halving"]
    assert "square-formula" in render_table(rows)
