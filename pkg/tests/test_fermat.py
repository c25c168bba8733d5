from fractions import Fraction
from itertools import product

import pytest

from diagbrauer import intmat
from diagbrauer.errors import NotInS, UnsupportedDegree
from diagbrauer.fermat import (alpha_pairing, alpha_pairing_direct, build_full, build_primitive,
                               build_transcendental, characters_in_S, cup_group_ring, gr_mul,
                               gr_poly, hodge_index, ideal_generators, monomial)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_rank_of_P_is_size_of_S(d):
    assert build_primitive(d).rank == len(characters_in_S(d))


def test_small_ranks():
    assert [build_primitive(d).rank for d in (2, 3, 4)] == [1, 6, 21]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_P_invariants(d):
    P = build_primitive(d)
    assert P.cup(P.one(), P.one()) == -2
    assert abs(intmat.determinant(P.gram)) == d
    assert P.gram == intmat.transpose(P.gram)
    ident = intmat.identity(P.rank)
    for A in P.g_actions + [P.tau]:
        assert intmat.matmul(intmat.matmul(intmat.transpose(A), P.gram), A) == P.gram
    for A in P.g_actions:
        M = ident
        for _ in range(d):
            M = intmat.matmul(A, M)
        assert M == ident
        # tau g = g^-1 tau
        Ainv = intmat.identity(P.rank)
        for _ in range(d - 1):
            Ainv = intmat.matmul(A, Ainv)
        assert intmat.matmul(P.tau, A) == intmat.matmul(Ainv, P.tau)
    assert intmat.matmul(P.tau, P.tau) == ident


@pytest.mark.parametrize("d", [2, 3, 4])
def test_ideal_lies_in_radical(d):
    for gen in ideal_generators(d)[:4 * d]:
        for k in range(d ** 3):
            x = [0] * d ** 3
            x[k] = 1
            assert cup_group_ring(d, gen, x) == 0


def test_unsupported_degree():
    with pytest.raises(UnsupportedDegree):
        build_primitive(9)
    with pytest.raises(UnsupportedDegree):
        build_primitive(1)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_full_lattice_is_unimodular_with_line_class(d):
    H = build_full(d)
    L, lam = H.hyperplane, H.line_class
    assert abs(H.det) == 1
    assert H.cup(L, L) == d
    assert H.cup(lam, lam) == -(d - 2)
    assert H.cup(lam, L) == 1
    x = [d * a - b for a, b in zip(lam, L)]
    assert H.cup(x, x) == -d * (d - 1) ** 2
    for k in range(H.P.rank):
        assert H.cup(L, H.from_P([int(j == k) for j in range(H.P.rank)])) == 0


def _one_minus(d, e):
    return [a - b for a, b in zip(monomial(d, 0, 0, 0), monomial(d, *e))]


def test_ev_identities_d4():
    d = 4
    H = build_full(d)
    prod = monomial(d, 0, 0, 0)
    for e in ((3, 3, 3), (1, 0, 0), (0, 1, 0), (0, 0, 1)):
        prod = gr_mul(d, prod, _one_minus(d, e))
    assert H.ev(H.from_group_ring(monomial(d, 0, 0, 0))) == [-v for v in prod]
    psi = gr_mul(d, gr_mul(d, _one_minus(d, (1, 0, 0)), _one_minus(d, (0, 0, 1))),
                 gr_poly(d, {(0, j, j): 1 for j in range(d)}))
    assert H.ev(H.from_P(H.c_P)) == [-d * v for v in psi]
    assert H.ev(H.line_class) == psi


def test_ev_is_equivariant_d3():
    d = 3
    H = build_full(d)
    x = H.from_group_ring(gr_poly(d, {(1, 0, 2): 1, (0, 1, 1): -2}))
    for j, A in enumerate(H.g_actions):
        shift = [0, 0, 0]
        shift[j] = 1
        lhs = H.ev(intmat.matvec(A, x))
        rhs = gr_mul(d, H.ev(x), monomial(d, *shift))
        assert lhs == rhs


def test_alpha_pairing_values():
    assert alpha_pairing((1, 1, 1), 4) == Fraction(1, 16)
    assert alpha_pairing((2, 2, 2), 4) == Fraction(-1, 4)
    with pytest.raises(NotInS):
        alpha_pairing((1, 1, 2), 4)


def test_alpha_pairing_two_routes_agree():
    d = 4
    for chi in [(1, 1, 1), (2, 2, 2), (1, 2, 2), (1, 3, 1), (3, 3, 3)]:
        inv = tuple((-x) % d for x in chi)
        assert alpha_pairing_direct(chi, inv, d) == alpha_pairing(chi, d)
    assert alpha_pairing_direct((1, 1, 1), (1, 1, 1), d) == 0
    assert alpha_pairing_direct((1, 1, 1), (1, 2, 2), d) == 0


def test_hodge_index():
    assert hodge_index((1, 1, 1)) == -1
    assert hodge_index((3, 3, 3)) == 1
    assert hodge_index((1, 2, 2)) == 0
    for d in (3, 4, 5):
        qs = [hodge_index(c, d) for c in characters_in_S(d)]
        assert qs.count(-1) == qs.count(1)


def test_transcendental_lattice():
    H = build_full(4)
    T = build_transcendental()
    assert T.gram == [[8, 0], [0, 8]]
    for A in H.g_actions:
        assert intmat.matvec(A, T.w1) == T.w2
        assert intmat.matvec(A, T.w2) == [-x for x in T.w1]
    assert intmat.matvec(H.tau, T.w1) == T.w1
    assert intmat.matvec(H.tau, T.w2) == [-x for x in T.w2]
    i2 = intmat.matmul(T.i_action, T.i_action)
    assert i2 == [[-1, 0], [0, -1]]
    assert abs(intmat.determinant(T.gram)) == 64
    for w in (T.w1, T.w2):
        assert H.cup(w, H.hyperplane) == 0 and H.cup(w, H.line_class) == 0


def test_full_lattice_actions_are_isometries_d4():
    H = build_full(4)
    for A in H.g_actions + [H.tau]:
        assert intmat.matmul(intmat.matmul(intmat.transpose(A), H.gram), A) == H.gram
        assert intmat.matvec(A, H.hyperplane) == H.hyperplane
