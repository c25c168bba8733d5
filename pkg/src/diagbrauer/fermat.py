"""Cohomology lattices of the degree-d Fermat surface.

The primitive lattice P is the quotient Z[G]/I of the group ring of
G = (Z/d)^3 by the ideal generated by the norm elements of u1, u2, u3 and of
u1*u2*u3.  The full lattice H adds the hyperplane class L and the line class
(L - c)/d.  For d = 4 the transcendental lattice T is spanned by w1, w2.

Monomials u1^a u2^b u3^c are indexed by a*d*d + b*d + c.  The cup form is
the negative of the symmetrised form built from phi.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import intmat
from .cyclotomic import Cyclo
from .errors import NotInS, NotIntegral, NotUnimodular, UnsupportedDegree

MIN_DEGREE, MAX_DEGREE = 2, 8


def check_degree(d):
    if not isinstance(d, int) or not MIN_DEGREE <= d <= MAX_DEGREE:
        raise UnsupportedDegree(f"degree {d} outside {MIN_DEGREE}..{MAX_DEGREE}")


# ---------------------------------------------------------------- group ring

def monomial_index(d, a, b, c):
    return (a % d) * d * d + (b % d) * d + (c % d)


def monomial_exponents(d, k):
    return k // (d * d), (k // d) % d, k % d


def group_ring_zero(d):
    return [0] * d ** 3


def monomial(d, a, b, c, coeff=1):
    v = group_ring_zero(d)
    v[monomial_index(d, a, b, c)] = coeff
    return v


def gr_mul(d, x, y):
    """Convolution product in Z[(Z/d)^3]."""
    n = d ** 3
    out = [0] * n
    ys = [(k, v) for k, v in enumerate(y) if v]
    for i, xv in enumerate(x):
        if not xv:
            continue
        a, b, c = monomial_exponents(d, i)
        for k, yv in ys:
            e, f, g = monomial_exponents(d, k)
            out[monomial_index(d, a + e, b + f, c + g)] += xv * yv
    return out


def gr_shift(d, x, a, b, c):
    """Multiply by the monomial u1^a u2^b u3^c."""
    out = [0] * d ** 3
    for k, v in enumerate(x):
        if v:
            e, f, g = monomial_exponents(d, k)
            out[monomial_index(d, e + a, f + b, g + c)] = v
    return out


def gr_invert(d, x):
    """The involution g -> g^{-1}."""
    out = [0] * d ** 3
    for k, v in enumerate(x):
        if v:
            e, f, g = monomial_exponents(d, k)
            out[monomial_index(d, -e, -f, -g)] = v
    return out


def gr_poly(d, terms):
    """Group-ring element from {(a, b, c): coeff}."""
    v = group_ring_zero(d)
    for (a, b, c), w in terms.items():
        v[monomial_index(d, a, b, c)] += w
    return v


_OFFSETS = [((da, db, dc), (-1) ** (da + db + dc)) for da, db, dc in product((0, 1), repeat=3)]


def cup_functional(d, x):
    """Coefficients f with cup(x, y) = sum_h f[h] y[h] for y in Z[G]."""
    n = d ** 3
    f = [0] * n
    for h in range(n):
        a, b, c = monomial_exponents(d, h)
        s = 0
        for (da, db, dc), sgn in _OFFSETS:
            s += sgn * (x[monomial_index(d, a + da, b + db, c + dc)] +
                        x[monomial_index(d, a - da, b - db, c - dc)])
        f[h] = -s
    return f


def lambda_form(d, x, y):
    """The non-symmetric form Lambda on Z[G]."""
    total = 0
    for h, yv in enumerate(y):
        if yv:
            a, b, c = monomial_exponents(d, h)
            for (da, db, dc), sgn in _OFFSETS:
                total += sgn * yv * x[monomial_index(d, a + da, b + db, c + dc)]
    return total


def symmetric_form(d, x, y):
    return lambda_form(d, x, y) + lambda_form(d, y, x)


def cup_group_ring(d, x, y):
    return -symmetric_form(d, x, y)


def ideal_generators(d):
    """Generators of I as a Z-module: all G-translates of the four norm elements."""
    norms = [
        gr_poly(d, {(j, 0, 0): 1 for j in range(d)}),
        gr_poly(d, {(0, j, 0): 1 for j in range(d)}),
        gr_poly(d, {(0, 0, j): 1 for j in range(d)}),
        gr_poly(d, {(j, j, j): 1 for j in range(d)}),
    ]
    out = []
    for a, b, c in product(range(d), repeat=3):
        for v in norms:
            out.append(gr_shift(d, v, a, b, c))
    return out


# ---------------------------------------------------------------- characters

def characters_in_S(d):
    return [(l, m, n) for l, m, n in product(range(1, d), repeat=3) if (l + m + n) % d]


def _check_in_S(chi, d):
    l, m, n = chi
    if not all(1 <= x <= d - 1 for x in chi) or (l + m + n) % d == 0:
        raise NotInS(f"{chi} is not in S for d={d}")


def hodge_index(chi, d=4):
    """q(chi) = floor((l+m+n)/d) - 1."""
    _check_in_S(chi, d)
    return sum(chi) // d - 1


def alpha_pairing(chi, d=4):
    """Cup pairing of the idempotent alpha_chi with 1, which equals its cup
    pairing with alpha_{chi^-1}: -(2/d^3) Re((1-e^l)(1-e^m)(1-e^n)).

    Returns a Fraction when the value is rational, else a Cyclo element.
    """
    _check_in_S(chi, d)
    eps = Cyclo.zeta(d)
    prod = Cyclo.scalar(d, 1)
    for x in chi:
        prod = prod * (1 - eps ** x)
    val = prod.real_part() * Fraction(-2, d ** 3)
    return val.rational() if val.is_rational() else val


def alpha_idempotent(chi, d):
    """alpha_chi as a vector of Cyclo coefficients over E = Q(zeta_d)."""
    l, m, n = chi
    out = []
    for k in range(d ** 3):
        a, b, c = monomial_exponents(d, k)
        out.append(Cyclo.zeta(d, -(l * a + m * b + n * c)) / d ** 3)
    return out


def alpha_pairing_direct(chi, phi, d):
    """Cup pairing of alpha_chi and alpha_phi computed term by term on E[G]."""
    x = alpha_idempotent(chi, d)
    y = alpha_idempotent(phi, d)
    total = Cyclo.zero(d)
    for h in range(d ** 3):
        a, b, c = monomial_exponents(d, h)
        for (da, db, dc), sgn in _OFFSETS:
            g = monomial_index(d, a + da, b + db, c + dc)
            term = x[g] * y[h] + y[g] * x[h]
            total = total + (term if sgn > 0 else -term)
    total = -total
    return total.rational() if total.is_rational() else total


# ---------------------------------------------------------------- primitive lattice

def _reduce_to_R(d, x):
    """Image of x in R = Z[G]/(norms of u1, u2, u3), basis u^abc with a,b,c <= d-2."""
    t = list(x)
    for axis in range(3):
        for k in range(d ** 3):
            e = monomial_exponents(d, k)
            if e[axis] == d - 1 and t[k]:
                v = t[k]
                t[k] = 0
                for j in range(d - 1):
                    f = list(e)
                    f[axis] = j
                    t[monomial_index(d, *f)] -= v
    m = d - 1
    out = [0] * m ** 3
    for a, b, c in product(range(m), repeat=3):
        out[(a * m + b) * m + c] = t[monomial_index(d, a, b, c)]
    return out


def _R_to_group_ring(d, y):
    m = d - 1
    out = [0] * d ** 3
    for a, b, c in product(range(m), repeat=3):
        out[monomial_index(d, a, b, c)] = y[(a * m + b) * m + c]
    return out


class PrimitiveLattice:
    """P = Z[G]/I with an explicit integral basis and projection."""

    def __init__(self, d):
        check_degree(d)
        self.d = d
        m = d - 1
        v = gr_poly(d, {(j, j, j): 1 for j in range(d)})
        rel = [_reduce_to_R(d, gr_mul(d, v, monomial(d, a, b, c)))
               for a, b, c in product(range(m), repeat=3)]
        sf = intmat.smith(intmat.from_columns(rel, m ** 3), m ** 3, len(rel))
        if any(x != 1 for x in sf.diag):
            raise NotIntegral("Z[G]/I has torsion")
        r = sf.rank
        self._proj = sf.U[r:]
        ucols = intmat.columns(sf.Uinv)
        self.lifts = [_R_to_group_ring(d, ucols[k]) for k in range(r, m ** 3)]
        self.rank = len(self.lifts)
        self._functionals = [cup_functional(d, x) for x in self.lifts]
        self.gram = [[intmat.dot(f, y) for y in self.lifts] for f in self._functionals]
        self.g_actions = [self.matrix_of(lambda x, s=s: gr_shift(d, x, *s))
                          for s in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        self.tau = self.matrix_of(lambda x: gr_invert(d, x))

    def project(self, x):
        """Coordinates of the class of a group-ring element in P."""
        return intmat.matvec(self._proj, _reduce_to_R(self.d, x))

    def lift(self, coords):
        out = [0] * self.d ** 3
        for c, v in zip(coords, self.lifts):
            if c:
                for k, x in enumerate(v):
                    if x:
                        out[k] += c * x
        return out

    def matrix_of(self, linear_map):
        cols = [self.project(linear_map(x)) for x in self.lifts]
        return intmat.from_columns(cols, self.rank)

    def cup(self, x, y):
        return intmat.dot(intmat.matvec(self.gram, x), y)

    def one(self):
        return self.project(monomial(self.d, 0, 0, 0))


@lru_cache(maxsize=None)
def build_primitive(d):
    return PrimitiveLattice(d)


# ---------------------------------------------------------------- full lattice

def rho(d, x_exp, y_exp):
    """rho(x, y) = sum_{0<=i<=j<=d-2} y^i x^j for monomials x, y given as exponent triples."""
    terms = {}
    for j in range(d - 1):
        for i in range(j + 1):
            key = tuple((j * xe + i * ye) % d for xe, ye in zip(x_exp, y_exp))
            terms[key] = terms.get(key, 0) + 1
    return gr_poly(d, terms)


def line_correction(d):
    """c = rho(u0, u1) * rho(u2, u3) in Z[G], where u0 = (u1 u2 u3)^(d-1)."""
    u0 = (d - 1, d - 1, d - 1)
    return gr_mul(d, rho(d, u0, (1, 0, 0)), rho(d, (0, 1, 0), (0, 0, 1)))


class FullLattice:
    """H = P + Z*Lambda with Lambda = (L - c)/d.

    Coordinates: the first rank(P) entries are P-coordinates, the last one
    is the Lambda coefficient.
    """

    def __init__(self, d):
        P = build_primitive(d)
        self.d = d
        self.P = P
        r = P.rank
        self.rank = r + 1
        self.c_group_ring = line_correction(d)
        c = P.project(self.c_group_ring)
        self.c_P = c
        cc = P.cup(c, c)
        pc = intmat.matvec(P.gram, c)
        if any(x % d for x in pc) or (d + cc) % (d * d):
            raise NotUnimodular("line class is not integral")
        gram = [row[:] + [-pc[k] // d] for k, row in enumerate(P.gram)]
        gram.append([-x // d for x in pc] + [(d + cc) // (d * d)])
        self.gram = gram
        det = intmat.determinant(gram)
        if abs(det) != 1:
            raise NotUnimodular(f"det Gram(H) = {det}")
        self.det = det
        self.hyperplane = c + [d]
        self.line_class = [0] * r + [1]
        self.g_actions = [self._extend(A, lambda x, s=s: gr_shift(d, x, *s))
                          for A, s in zip(P.g_actions, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))]
        self.tau = self._extend(P.tau, lambda x: gr_invert(d, x))

    def _extend(self, A, gr_map):
        """Extend an action on P fixing L to H: Lambda -> Lambda + (c - g c)/d."""
        d = self.d
        gc = self.P.project(gr_map(self.c_group_ring))
        diff = [x - y for x, y in zip(self.c_P, gc)]
        if any(x % d for x in diff):
            raise NotIntegral("action does not preserve H")
        r = self.P.rank
        out = [row[:] + [diff[k] // d] for k, row in enumerate(A)]
        out.append([0] * r + [1])
        return out

    def from_P(self, x):
        return list(x) + [0]

    def from_group_ring(self, x):
        return self.P.project(x) + [0]

    def cup(self, x, y):
        return intmat.dot(intmat.matvec(self.gram, x), y)

    def ev(self, x):
        """ev(x) = sum_g cup(x, g) g as a group-ring vector."""
        d = self.d
        vals = []
        gvecs = [self.from_group_ring(monomial(d, *monomial_exponents(d, k))) for k in range(d ** 3)]
        gx = intmat.matvec(self.gram, x)
        for g in gvecs:
            vals.append(intmat.dot(gx, g))
        return vals

    def g_action(self, a, b, c):
        """Matrix of u1^a u2^b u3^c on H."""
        out = intmat.identity(self.rank)
        for A, e in zip(self.g_actions, (a, b, c)):
            for _ in range(e % self.d):
                out = intmat.matmul(A, out)
        return out


@lru_cache(maxsize=None)
def build_full(d):
    return FullLattice(d)


# ---------------------------------------------------------------- transcendental lattice

def _i_power_parts(k):
    """(Re, Im) of i^k."""
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][k % 4]


class TranscendentalLattice:
    """T = Z w1 + Z w2 inside H for d = 4, identified with O = Z[i] via w1 -> 1."""

    def __init__(self, H):
        if H.d != 4:
            raise UnsupportedDegree("the transcendental lattice is built for d = 4")
        self.H = H
        d = 4
        P = H.P
        # cup(w1, g) = Re(i^-(a+b+c)) and cup(w2, g) = -Im(i^-(a+b+c)) on monomials g
        targets = []
        for sign_pick in (0, 1):
            row = []
            for k in range(P.rank):
                lift = P.lifts[k]
                s = 0
                for idx, coeff in enumerate(lift):
                    if coeff:
                        a, b, c = monomial_exponents(d, idx)
                        re, im = _i_power_parts(-(a + b + c))
                        s += coeff * (re if sign_pick == 0 else -im)
                row.append(s)
            targets.append(row)
        # pairing with Lambda: w is orthogonal to L, so cup(w, Lambda) = -cup(w, c)/d
        solver = intmat.Solver(H.gram)
        ws = []
        for row in targets:
            wc = intmat.dot(row, H.c_P)
            if wc % d:
                raise NotIntegral("transcendental class not integral")
            rhs = row + [-wc // d]
            w = solver.solve(rhs)
            if w is None:
                raise NotIntegral("transcendental class not in H")
            ws.append(w)
        self.w1, self.w2 = ws
        self.gram = [[H.cup(x, y) for y in ws] for x in ws]
        self.basis = ws
        self.i_action = [[0, -1], [1, 0]]

    def coords(self, x):
        """(s, t) with x = s w1 + t w2, for x in the rational span of T."""
        a = [self.H.cup(x, w) for w in self.basis]
        return Fraction(a[0], self.gram[0][0]), Fraction(a[1], self.gram[1][1])


@lru_cache(maxsize=None)
def build_transcendental(d=4):
    return TranscendentalLattice(build_full(d))
