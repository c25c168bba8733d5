"""Picard lattice of the Fermat quartic, its discriminant group and the
untwisted action of Gal(Q(zeta8)/Q).

All vectors are in the coordinates of the full lattice H (see fermat.py).
Pic is the orthogonal complement of T in H.  Elements of Pic* are written in
dual-basis coordinates y_k = <x, b_k>, so Pic embeds in Pic* by y = Gram x.
The transcendental side of the discriminant group is T*/T = (1/8)T/T, which is
identified with O/8 through w1 -> 1, w2 -> i.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import intmat
from .errors import IndexInfinite, NotIntegral, RankMismatch
from .fermat import (build_full, build_transcendental, characters_in_S, gr_mul,
                     monomial, monomial_exponents)

D = 4


def character_type(chi):
    """Multiset type of the 4-tuple (l, m, n, r) with r = -(l+m+n) mod 4."""
    r = (-sum(chi)) % D
    return tuple(sorted(tuple(chi) + (r,)))


def character_projector(chars):
    """Sum of the idempotents alpha_chi over a conjugation-stable set, in Q[G]."""
    out = [Fraction(0)] * D ** 3
    re_of = {0: 1, 1: 0, 2: -1, 3: 0}
    for k in range(D ** 3):
        a, b, c = monomial_exponents(D, k)
        s = 0
        for l, m, n in chars:
            s += re_of[(-(l * a + m * b + n * c)) % 4]
        out[k] = Fraction(s, D ** 3)
    return out


def eigen_element(signs):
    """Q[G] element acting on V_chi by signs[type(chi)] (default +1)."""
    one = monomial(D, 0, 0, 0)
    out = [Fraction(x) for x in one]
    for typ, sgn in signs.items():
        if sgn == 1:
            continue
        chars = [chi for chi in characters_in_S(D) if character_type(chi) == typ]
        proj = character_projector(chars)
        out = [x + (sgn - 1) * y for x, y in zip(out, proj)]
    return out


# eigenvalues of a Frobenius with N = 5 mod 8 on the algebraic eigenspaces
PSI_MINUS_ONE_SIGNS = {(1, 2, 2, 3): -1, (2, 2, 2, 2): 1, (1, 1, 3, 3): 1}


class PicardLattice:
    """Pic = T-perp inside H, with its dual and discriminant data."""

    def __init__(self, H, T):
        self.H = H
        self.T = T
        n = H.rank
        rows = [intmat.matvec(H.gram, T.w1), intmat.matvec(H.gram, T.w2)]
        basis = intmat.kernel(rows, n)
        if len(basis) != n - 2:
            raise RankMismatch(f"Pic has rank {len(basis)}, expected {n - 2}")
        self.basis = basis
        self.rank = len(basis)
        self.B = intmat.from_columns(basis, n)
        self.gram = [[H.cup(x, y) for y in basis] for x in basis]
        self._coord_solver = intmat.Solver(self.B, n, self.rank)
        # pairing map H -> Pic*, y_k = <h, b_k>
        self.pairing = intmat.matmul(intmat.transpose(self.B), H.gram)
        self._pairing_solver = intmat.Solver(self.pairing, self.rank, n)
        self.dual_chart = intmat.SubQuotient(
            [[int(i == j) for i in range(self.rank)] for j in range(self.rank)],
            intmat.columns(self.gram), self.rank)
        self._section = None

    # -- coordinates
    def coords(self, h):
        """Pic coordinates of an H-vector lying in Pic."""
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in h):
            raise NotIntegral("vector is not integral in H")
        x = self._coord_solver.solve([int(v) for v in h])
        if x is None:
            raise NotIntegral("vector is not in Pic")
        return x

    def contains(self, h):
        try:
            self.coords(h)
            return True
        except NotIntegral:
            return False

    def to_H(self, x):
        return intmat.matvec(self.B, x)

    def to_dual(self, x):
        return intmat.matvec(self.gram, x)

    def cup(self, x, y):
        return intmat.dot(intmat.matvec(self.gram, x), y)

    def discriminant_structure(self):
        return intmat.discriminant_group(self.gram)

    # -- actions
    def restrict(self, A):
        """Matrix on Pic coordinates of an H-matrix (possibly rational) preserving Pic."""
        cols = []
        for b in self.basis:
            cols.append(self.coords(intmat.matvec(A, b)))
        return intmat.from_columns(cols, self.rank)

    def dual_action(self, A):
        """Action on Pic* dual coordinates induced by an isometry A of Pic: A^{-T}."""
        inv = inverse_unimodular(A)
        return intmat.transpose(inv)

    # -- gluing to T*/T = O/8
    def section(self):
        """Columns h_k in H with <h_k, b_j> = delta_jk (lifts of the dual basis)."""
        if self._section is None:
            cols = []
            for k in range(self.rank):
                e = [int(j == k) for j in range(self.rank)]
                h = self._pairing_solver.solve(e)
                if h is None:
                    raise IndexInfinite("pairing H -> Pic* is not surjective")
                cols.append(h)
            self._section = intmat.from_columns(cols, self.H.rank)
        return self._section

    def glue_matrix(self, modulus=8):
        """2 x rank integer matrix sending Pic* dual coordinates to (re, im) in O/8."""
        S = self.section()
        Z = [intmat.matvec(intmat.transpose(self.H.gram), self.T.w1),
             intmat.matvec(intmat.transpose(self.H.gram), self.T.w2)]
        G = intmat.matmul(Z, S)
        return [[x % modulus for x in row] for row in G]

    def glue(self, y, modulus=8):
        G = self.glue_matrix(modulus)
        return tuple(v % modulus for v in intmat.matvec(G, y))


def inverse_unimodular(A):
    n = len(A)
    solver = intmat.Solver(A, n, n)
    cols = []
    for k in range(n):
        x = solver.solve([int(i == k) for i in range(n)])
        if x is None:
            raise NotIntegral("matrix is not invertible over Z")
        cols.append(x)
    return intmat.from_columns(cols, n)


@lru_cache(maxsize=None)
def build_picard():
    H = build_full(D)
    T = build_transcendental(D)
    return PicardLattice(H, T)


def picard_from_H(H=None, T=None):
    if H is None and T is None:
        return build_picard()
    return PicardLattice(H, T)


class DiscriminantGroup:
    """Both presentations of Delta = Pic*/Pic = T*/T and the gluing map."""

    def __init__(self, pic):
        self.pic = pic
        H, T = pic.H, pic.T
        self.presentation_pic = pic.dual_chart
        self.presentation_T = intmat.SubQuotient([[1, 0], [0, 1]], [[8, 0], [0, 8]], 2)
        self.glue = pic.glue_matrix(8)
        # index [H : Pic + T]
        cols = pic.basis + [T.w1, T.w2]
        det = intmat.determinant(intmat.from_columns(cols, H.rank))
        if det == 0:
            raise IndexInfinite("Pic + T does not have full rank")
        self.index = abs(det)

    def order(self):
        return self.presentation_pic.order()

    def glue_is_isomorphism(self):
        """The gluing map is a bijection from Pic*/Pic onto O/8."""
        img = set()
        q = self.presentation_pic
        for coords in product(*[range(f) for f in q.factors]):
            y = q.lift(list(coords))
            img.add(tuple(v % 8 for v in intmat.matvec(self.glue, y)))
        return len(img) == q.order() == 64

    def vanishes_on_pic(self):
        for k in range(self.pic.rank):
            y = self.pic.to_dual([int(j == k) for j in range(self.pic.rank)])
            if any(v % 8 for v in intmat.matvec(self.glue, y)):
                return False
        return True


@lru_cache(maxsize=None)
def build_discriminant():
    return DiscriminantGroup(build_picard())


def discriminant_pair(pic=None):
    return build_discriminant() if pic is None else DiscriminantGroup(pic)


# ---------------------------------------------------------------- untwisted action

def _multiplication_on_H(H, element):
    """Rational H-matrix of multiplication by a Q[G] element on P, fixing L."""
    P = H.P
    cols = []
    for lift in P.lifts:
        img = P.project(gr_mul(D, element, lift))
        cols.append(list(img) + [Fraction(0)])
    ec = P.project(gr_mul(D, element, H.c_group_ring))
    lam = [Fraction(x - y, D) for x, y in zip(H.c_P, ec)] + [Fraction(1)]
    cols.append(lam)
    return intmat.from_columns(cols, H.rank)


@lru_cache(maxsize=None)
def untwisted_picard_action(t):
    """Matrix on Pic coordinates of the element of Gal(Q(zeta8)/Q) acting on zeta8 by t."""
    t %= 8
    if t not in (1, 3, 5, 7):
        raise ValueError("t must be a unit mod 8")
    pic = build_picard()
    H = pic.H
    if t == 1:
        return intmat.identity(pic.rank)
    if t == 7:
        return pic.restrict(H.tau)
    if t == 5:
        A = _multiplication_on_H(H, eigen_element(PSI_MINUS_ONE_SIGNS))
        return pic.restrict(A)
    return intmat.matmul(untwisted_picard_action(5), untwisted_picard_action(7))


@lru_cache(maxsize=None)
def g_action_pic(a, b, c):
    """Matrix on Pic coordinates of u1^a u2^b u3^c."""
    pic = build_picard()
    return pic.restrict(pic.H.g_action(a % D, b % D, c % D))


def is_isometry(A, gram):
    return intmat.matmul(intmat.matmul(intmat.transpose(A), gram), A) == gram
