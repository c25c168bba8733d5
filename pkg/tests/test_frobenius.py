from itertools import takewhile

import pytest

from diagbrauer import frobenius
from diagbrauer.errors import BadCharacteristic
from diagbrauer.fermat import characters_in_S
from diagbrauer.gaussian import GaussianInteger, iter_split_primary_primes

SPLIT = {p.norm: p for p in takewhile(lambda p: p.norm < 40, iter_split_primary_primes(5))}


def test_split_primes_found():
    assert sorted(SPLIT) == [5, 13, 17, 29, 37]


@pytest.mark.parametrize("a", [(1, 1, 1), (1, 2, -2), (3, 5, 7), (1, 2, 4)])
@pytest.mark.parametrize("q", [3, 5, 9, 13])
def test_fast_count_matches_enumeration(a, q):
    try:
        fast = frobenius.count_points(a, q)
    except BadCharacteristic:
        return
    assert fast == frobenius.count_points_naive(a, q)


def test_fermat_count_over_f3():
    # x^4 is 0 or 1 over F_3, so exactly three coordinates are nonzero: 4 * 2^3 / 2 points
    assert frobenius.count_points((1, 1, 1), 3) == 16


@pytest.mark.parametrize("a", [(1, 1, 1), (1, 2, -2), (1, 8, -8), (2, -2, -4), (3, -1, 2)])
@pytest.mark.parametrize("p", [5, 13, 17, 29, 37])
def test_character_sum_matches_count(a, p):
    pi = SPLIT[p]
    try:
        expected = frobenius.count_points(a, p)
    except BadCharacteristic:
        return
    assert frobenius.weil_count(a, pi) == expected


@pytest.mark.parametrize("p", [5, 13])
@pytest.mark.parametrize("chi", [(1, 1, 1), (1, 1, 3), (1, 2, 3), (3, 3, 3)])
def test_jacobi_via_gauss_sums(p, chi):
    pi = SPLIT[p]
    direct = frobenius.gaussian_to_cyclo(frobenius.jacobi_sum(chi, pi), 4 * p)
    assert frobenius.jacobi_via_gauss(chi, pi) == direct


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37])
def test_jacobi_absolute_value_and_orientation(p):
    pi = SPLIT[p]
    for chi in [(1, 1, 1), (1, 2, 3), (3, 3, 3)]:
        assert frobenius.jacobi_sum(chi, pi).norm() == p * p
    assert frobenius.frobenius_eigenvalue_numerator((1, 1, 1), pi) == pi.pi * pi.pi


@pytest.mark.parametrize("p", [5, 13])
def test_uniform_sign_would_fail(p):
    # a single psi(-1) factor for every character does not reproduce the count
    pi = SPLIT[p]
    psi = frobenius.quartic_character(pi)
    total = GaussianInteger(p * p + p + 1, 0)
    for chi in characters_in_S(4):
        total = total + frobenius.I_POWERS[psi.minus_one() % 4] * frobenius.jacobi_sum(chi, pi)
    uniform = total.re
    correct = frobenius.count_points((1, 1, 1), p)
    assert frobenius.weil_count((1, 1, 1), pi) == correct
    assert uniform != correct


def test_quartic_character_is_multiplicative():
    psi = frobenius.quartic_character(SPLIT[13])
    for x in range(1, 13):
        for y in range(1, 13):
            assert psi(x * y) == (psi(x) + psi(y)) % 4


def test_minus_four_twist_construction():
    assert frobenius.minus_four_twist((1, 1, 1)) == (1, -4, -4)
    assert frobenius.minus_four_twist((1, 2, -2), slots=(1, 2)) == (-4, -8, -2)


def test_minus_four_twist_counts_fermat():
    qs = [5, 9, 13, 17, 25, 29, 37, 41]
    res = frobenius.compare_minus_four_twist((1, 1, 1), qs)
    assert [r["q"] for r in res["rows"]] == qs
    assert res["all_equal"]
    assert not res["equivalent_over_Q"]


def test_minus_four_twist_counts_second_pair():
    res = frobenius.compare_minus_four_twist((1, 2, -2), [5, 9, 13, 17, 25, 29], slots=(1, 2))
    assert res["rows"] and res["all_equal"]


def test_bad_characteristic():
    with pytest.raises(BadCharacteristic):
        frobenius.count_points((1, 1, 1), 2)
    with pytest.raises(BadCharacteristic):
        frobenius.count_points((1, 5, 1), 5)
    with pytest.raises(BadCharacteristic):
        frobenius.count_points((1, 1, 1), 15)
