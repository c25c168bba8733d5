import random

from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from diagbrauer import intmat


small_matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_smith_transforms_and_invariants_match_sympy(a):
    m, n = len(a), len(a[0])
    sf = intmat.smith(a)
    assert intmat.matmul(intmat.matmul(sf.U, a), sf.V) == sf.D
    assert intmat.matmul(sf.U, sf.Uinv) == intmat.identity(m)
    assert intmat.matmul(sf.V, sf.Vinv) == intmat.identity(n)
    for i in range(m):
        for j in range(n):
            if i != j:
                assert sf.D[i][j] == 0
    for x, y in zip(sf.diag, sf.diag[1:]):
        assert y % x == 0
    ref = smith_normal_form(Matrix(a), domain=ZZ)
    expected = [abs(ref[i, i]) for i in range(min(m, n)) if ref[i, i] != 0]
    assert sf.diag == expected


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_kernel_is_saturated_and_complete(a):
    n = len(a[0])
    ker = intmat.kernel(a, n)
    for k in ker:
        assert not any(intmat.matvec(a, k))
    assert len(ker) == n - intmat.smith(a).rank
    if ker:
        # saturated: the kernel basis has trivial elementary divisors
        assert all(x == 1 for x in intmat.smith(intmat.from_columns(ker, n)).diag)


def test_solver_finds_integral_solutions_only():
    a = [[2, 0], [0, 3]]
    assert intmat.solve(a, [4, 9]) == [2, 3]
    assert intmat.solve(a, [1, 0]) is None


def test_subquotient_chart_of_z_mod_4_plus_z_mod_2():
    top = [[1, 0], [0, 1]]
    bottom = [[4, 0], [0, 2]]
    q = intmat.SubQuotient(top, bottom, 2)
    assert sorted(q.factors) == [2, 4]
    assert q.order() == 8
    assert q.is_zero([4, 2]) and not q.is_zero([1, 0])
    for v in ([1, 1], [3, 0], [2, 1]):
        assert q.chart(q.lift(q.chart(v))) == q.chart(v)


def test_intersection_of_lattices():
    b = intmat.intersect_lattices([[2, 0], [0, 1]], [[1, 0], [0, 3]], 2)
    assert sorted(abs(intmat.determinant(intmat.from_columns(b, 2))) for _ in [0]) == [6]


def test_determinant_matches_sympy():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 6)
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert intmat.determinant(a) == Matrix(a).det()
