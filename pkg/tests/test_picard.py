import pytest

from diagbrauer import intmat, lines, picard
from diagbrauer.errors import NotIntegral


@pytest.fixture(scope="module")
def pic():
    return picard.build_picard()


def mult_matrix(re, im, conj=False):
    m = [[re, -im], [im, re]]
    return intmat.matmul(m, [[1, 0], [0, -1]]) if conj else m


def glue_commutes(pic, A, M):
    G = pic.glue_matrix()
    left = intmat.matmul(G, pic.dual_action(A))
    right = intmat.matmul(M, G)
    return all((x - y) % 8 == 0 for r1, r2 in zip(left, right) for x, y in zip(r1, r2))


def test_rank_and_discriminant(pic):
    assert pic.rank == 20
    assert pic.discriminant_structure() == [8, 8]


def test_hyperplane_and_line_in_pic(pic):
    H = pic.H
    assert pic.contains(H.hyperplane)
    assert pic.contains(H.line_class)
    assert not pic.contains(pic.T.w1)


def test_pic_gram_even(pic):
    assert all(pic.gram[i][i] % 2 == 0 for i in range(pic.rank))


def test_discriminant_pair():
    disc = picard.build_discriminant()
    assert disc.index == 64
    assert disc.order() == 64
    assert disc.vanishes_on_pic()
    assert disc.glue_is_isomorphism()


@pytest.mark.parametrize("t", [1, 3, 5, 7])
def test_untwisted_action_isometry(pic, t):
    A = picard.untwisted_picard_action(t)
    assert picard.is_isometry(A, pic.gram)


def test_untwisted_action_is_a_homomorphism():
    U = picard.untwisted_picard_action
    for s in (1, 3, 5, 7):
        for t in (1, 3, 5, 7):
            assert intmat.matmul(U(s), U(t)) == U(s * t % 8)


def test_untwisted_action_commutes_with_group(pic):
    U5, U7 = picard.untwisted_picard_action(5), picard.untwisted_picard_action(7)
    g = picard.g_action_pic(1, 0, 0)
    ginv = picard.g_action_pic(3, 0, 0)
    assert intmat.matmul(U5, g) == intmat.matmul(g, U5)
    assert intmat.matmul(U7, g) == intmat.matmul(ginv, U7)


def test_untwisted_action_fixes_hyperplane(pic):
    L = pic.coords(pic.H.hyperplane)
    for t in (3, 5, 7):
        assert intmat.matvec(picard.untwisted_picard_action(t), L) == L


def test_glue_equivariance(pic):
    # N = 5 mod 8 Frobenius acts on T*/T by pi/conj(pi) = 1 + 4i mod 8
    assert glue_commutes(pic, picard.untwisted_picard_action(5), mult_matrix(1, 4))
    assert not glue_commutes(pic, picard.untwisted_picard_action(5), mult_matrix(1, 0))
    assert glue_commutes(pic, picard.untwisted_picard_action(7), mult_matrix(1, 0, conj=True))
    assert glue_commutes(pic, picard.g_action_pic(1, 0, 0), mult_matrix(0, 1))
    assert glue_commutes(pic, picard.g_action_pic(0, 1, 1), mult_matrix(-1, 0))


def test_wrong_sign_on_mixed_type_is_not_integral(pic):
    A = picard._multiplication_on_H(pic.H, picard.eigen_element({(1, 1, 3, 3): -1}))
    with pytest.raises(NotIntegral):
        pic.restrict(A)


def test_line_incidence():
    assert lines.line_lattice_structure() == (20, [8, 8])
    assert len(lines.LINES) == 48


def test_line_classes_match_incidence():
    assert lines.class_gram() == lines.incidence_gram()
    assert lines.lines_span_picard()


def test_hyperplane_sections_are_four_lines():
    H = picard.build_picard().H
    for k in (1, 3, 5, 7):
        assert lines.divisor_class(lines.hyperplane_lines(k)) == H.hyperplane


def test_quadric_divisors():
    checks = lines.quadric_checks()
    assert checks["relation_in_radical"]
    assert checks["relation_in_H"]
    assert checks["d_plus_pairings"] == [0, 2]
    assert not checks["d_plus_divisible_by_two"]
    assert not checks["d_plus_even_in_H"]


def test_half_d_plus_gives_two_torsion(pic):
    # D+/2 lies in Pic* and glues to a nonzero element of Delta[2]
    dp = pic.coords(lines.divisor_class(lines.d_plus_lines()))
    y = pic.to_dual(dp)
    assert all(v % 2 == 0 for v in y)
    half = [v // 2 for v in y]
    img = pic.glue(half)
    assert img != (0, 0)
    assert all((2 * v) % 8 == 0 for v in img)
