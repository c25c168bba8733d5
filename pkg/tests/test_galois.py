import pytest

from diagbrauer import galois
from diagbrauer.errors import HypothesisFailed, RamifiedPrime
from diagbrauer.gaussian import GaussianInteger, PrimaryPrime


def prime(re, im):
    return PrimaryPrime(GaussianInteger(re, im))


@pytest.mark.parametrize("a, field, tilde, order, cyclic", [
    ((1, 1, 1), "Q", False, 8, False),
    ((1, 1, 1), "Qi", False, 4, True),
    ((1, 1, 1), "Q", True, 16, False),
    ((1, 2, -2), "Qi", True, 8, True),
    ((1, 3, 1), "Q", False, 32, False),
    ((1, 3, 5), "Q", False, 128, False),
])
def test_group_orders_match_kummer_degree(a, field, tilde, order, cyclic):
    g = galois.build_group(a, field, tilde)
    assert g.order == order == galois.expected_group_order(a, field, tilde)
    assert g.is_cyclic() == cyclic
    g.check_axioms()


@pytest.mark.parametrize("pi, t, e2, f", [
    ((-1, 2), 5, 3, 5),
    ((5, 8), 1, 0, 4),
    ((1, 16), 1, 0, 0),
])
def test_frobenius_tuples(pi, t, e2, f):
    basis = galois.RadicalBasis((1, 1, 1), tilde=True)
    tup = galois.frobenius_tuple(prime(*pi), basis)
    assert (tup.t, tup.e[0], tup.f) == (t, e2, f)
    assert tup.is_consistent()


def test_frobenius_at_radicand_is_ramified():
    basis = galois.RadicalBasis((1, 1, 5))
    with pytest.raises(RamifiedPrime):
        galois.frobenius_tuple(prime(-1, 2), basis)


def test_tuple_composition_associative():
    basis = galois.RadicalBasis((1, 3, 1), tilde=True)
    tups = [galois.GaloisTuple(t, (e, x), f) for t in (1, 3, 5, 7) for e in range(4)
            for x in range(4) for f in range(8)]
    tups = [x for x in tups if x.is_consistent()][::7]
    for x in tups[:6]:
        for y in tups[:6]:
            for z in tups[:6]:
                assert x.compose(y).compose(z) == x.compose(y.compose(z))
    assert basis.radicands == [2, 3]


@pytest.mark.parametrize("a, field, tilde", [
    ((1, 1, 1), "Q", False), ((1, 2, 8), "Qi", False), ((1, 2, -2), "Q", True),
    ((1, 3, 1), "Q", False), ((-2, 4, 8), "Q", False), ((1, 8, -8), "Q", True),
])
def test_glue_equivariance(a, field, tilde):
    assert galois.glue_is_equivariant(galois.build_group(a, field, tilde))


@pytest.mark.parametrize("a, field, tilde, k", [
    ((1, 1, 1), "Q", False, 4), ((1, 2, 8), "Qi", True, 5), ((1, 2, -2), "Q", True, 5),
])
def test_level_action_multiplicative(a, field, tilde, k):
    assert galois.br_level_action(galois.build_group(a, field, tilde), k).is_multiplicative()


def test_level_above_group_rejected():
    with pytest.raises(HypothesisFailed):
        galois.br_level_action(galois.build_group((1, 1, 1), "Q", False), 5)


def test_generator_of_1_2_8_over_qi_acts_by_1_plus_4i():
    g = galois.build_group((1, 2, 8), "Qi")
    act = galois.br_level_action(g, 3)
    units = {act.table[x] for x in g.generators}
    assert ((1, 4), False) in units


def test_conjugation_of_minus_four_twist():
    # on the -4 twist complex conjugation acts by x -> i * conj(x)
    g = galois.build_group((1, 1, -4), "Q")
    assert galois.br_level_action(g, 3).table[g.conjugation()] == ((0, 1), True)
    g = galois.build_group((1, 1, 1), "Q")
    assert galois.br_level_action(g, 3).table[g.conjugation()] == ((1, 0), True)


@pytest.mark.parametrize("a, field, expected", [
    ((1, 1, 1), "Q", [2, 4]), ((1, 1, -4), "Q", [4]), ((1, 1, 3), "Qi", [2]),
])
def test_invariants_of_brauer(a, field, expected):
    assert galois.invariants_of_brauer(a, field) == expected


def test_tower_fixed_structures():
    assert galois.tower_fixed_structures() == {
        "k": [4, 4], "k(sqrt2)": [8, 8],
        "k(4th root of -2)": [16, 16], "k(8th root of -2)": [32, 32]}


@pytest.mark.parametrize("k, classes", [(3, 2), (4, 4), (5, 8)])
def test_sampling_well_defined(k, classes):
    assert galois.sampling_well_defined(k) == classes


def test_frobenius_unit_has_norm_one():
    p = prime(-1, 2)
    u = galois.frobenius_unit(p, 5)
    assert (u[0] ** 2 + u[1] ** 2) % 32 == 1
