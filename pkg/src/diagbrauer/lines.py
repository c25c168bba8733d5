"""The 48 lines on the Fermat quartic, their classes in H and the divisors
pulled back from the quadric x0^2 + x1^2 + x2^2 + x3^2 = 0.

A line is a triple (family, k, m) meaning alpha = zeta8^k, beta = zeta8^m
(k, m odd) and
    family 0: x0 = alpha x1, x2 = beta x3
    family 1: x0 = alpha x2, x1 = beta x3
    family 2: x0 = alpha x3, x1 = beta x2
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import intmat
from .cyclotomic import Cyclo
from .errors import NotIntegral
from .fermat import build_full, monomial_exponents, monomial_index
from .picard import build_picard

ODD = (1, 3, 5, 7)
LINES = [(f, k, m) for f in range(3) for k in ODD for m in ODD]


def line_points(line):
    """Two points spanning the line, with entries in Q(zeta8)."""
    f, k, m = line
    one, zero = Cyclo.scalar(8, 1), Cyclo.zero(8)
    a, b = Cyclo.zeta(8, k), Cyclo.zeta(8, m)
    if f == 0:
        return [[a, one, zero, zero], [zero, zero, b, one]]
    if f == 1:
        return [[a, zero, one, zero], [zero, b, zero, one]]
    return [[a, zero, zero, one], [zero, b, one, zero]]


def _det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = Cyclo.zero(8)
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        term = entry * _det([r[:j] + r[j + 1:] for r in rows[1:]])
        total = total + term if j % 2 == 0 else total - term
    return total


def lines_meet(l1, l2):
    """Distinct lines meet iff their four spanning points are dependent."""
    return _det(line_points(l1) + line_points(l2)).is_zero()


@lru_cache(maxsize=None)
def incidence_gram():
    """Intersection matrix of the 48 lines: -2 on the diagonal, 1 when they meet."""
    n = len(LINES)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = -2
        for j in range(i + 1, n):
            if lines_meet(LINES[i], LINES[j]):
                gram[i][j] = gram[j][i] = 1
    return gram


def _permute_group_ring(x, perm):
    out = [0] * len(x)
    for idx, coeff in enumerate(x):
        if coeff:
            e = monomial_exponents(4, idx)
            ne = [0, 0, 0]
            for i in range(3):
                ne[perm[i]] = e[i]
            out[monomial_index(4, *ne)] += coeff
    return out


def permutation_action(perm, sign=-1):
    """H-matrix of a permutation of x1, x2, x3; transpositions act on P with a sign."""
    H = build_full(4)
    P = H.P
    cols = []
    for lift in P.lifts:
        cols.append([sign * v for v in P.project(_permute_group_ring(lift, perm))] + [0])
    pc = [sign * v for v in P.project(_permute_group_ring(H.c_group_ring, perm))]
    lam = [Fraction(x - y, 4) for x, y in zip(H.c_P, pc)] + [1]
    if any(Fraction(v).denominator != 1 for v in lam):
        raise NotIntegral("permutation does not preserve H")
    cols.append([int(v) for v in lam])
    return intmat.from_columns(cols, H.rank)


@lru_cache(maxsize=None)
def line_classes():
    """Classes in H of the 48 lines, keyed by line triple.

    u1^a u2^b u3^c sends Lambda (x0 = zeta8 x1, x2 = zeta8 x3) to the line with
    alpha = zeta8 i^a, beta = zeta8 i^(c-b); the swaps x1<->x2 and x1<->x3
    move family 0 to families 1 and 2.
    """
    H = build_full(4)
    swap12 = permutation_action((1, 0, 2))
    swap13 = permutation_action((2, 1, 0))
    out = {}
    for a, b, c in product(range(4), repeat=3):
        v = intmat.matvec(H.g_action(a, b, c), H.line_class)
        k, m = (1 + 2 * a) % 8, (1 + 2 * (c - b)) % 8
        out[(0, k, m)] = v
        out[(1, k, m)] = intmat.matvec(swap12, v)
        out[(2, k, (-m) % 8)] = intmat.matvec(swap13, v)
    return out


def class_gram():
    classes = line_classes()
    H = build_full(4)
    return [[H.cup(classes[x], classes[y]) for y in LINES] for x in LINES]


def line_lattice_structure():
    """(rank, nontrivial invariant factors) of the abstract line lattice."""
    facs = intmat.invariant_factors(incidence_gram())
    nonzero = [f for f in facs if f]
    return len(nonzero), [f for f in nonzero if f > 1]


def lines_span_picard():
    """True if the line classes generate Pic."""
    pic = build_picard()
    vecs = [pic.coords(v) for v in line_classes().values()]
    basis = intmat.span_basis(vecs, pic.rank)
    return len(basis) == pic.rank and abs(intmat.determinant(intmat.from_columns(basis, pic.rank))) == 1


# ---------------------------------------------------------------- quadric divisors

def _square_class(k):
    """alpha^2 = i^k for alpha = zeta8^k; returns +1 for i, -1 for -i."""
    return 1 if k % 8 in (1, 5) else -1


def quadric_line_preimage(a_sign, b_sign):
    """The four lines over the quadric line y0 = (+-i) y1, y2 = (+-i) y3."""
    return [l for l in LINES if l[0] == 0 and _square_class(l[1]) == a_sign
            and _square_class(l[2]) == b_sign]


def d_plus_lines():
    """Preimage of the quadric line y0 = i y1, y2 = -i y3."""
    return quadric_line_preimage(1, -1)


def d_minus_lines():
    """Preimage of y0 = i y1, y2 = i y3, from the other ruling."""
    return quadric_line_preimage(1, 1)


def hyperplane_lines(k=1):
    """The four lines cut out by x0 = zeta8^k x1."""
    return [l for l in LINES if l[0] == 0 and l[1] == k]


def divisor_class(lines):
    H = build_full(4)
    classes = line_classes()
    out = [0] * H.rank
    for l in lines:
        out = [x + y for x, y in zip(out, classes[l])]
    return out


def divisor_vector(lines):
    """Indicator vector of a set of lines in the abstract line lattice."""
    return [int(l in lines) for l in LINES]


def quadric_checks():
    """Dictionary of the checks on D+ and D-."""
    gram = incidence_gram()
    dp, dm, hl = (divisor_vector(x) for x in (d_plus_lines(), d_minus_lines(), hyperplane_lines()))
    rel = [p + m - 2 * h for p, m, h in zip(dp, dm, hl)]
    in_radical = all(v == 0 for v in intmat.matvec(gram, rel))
    pairings = set(intmat.matvec(gram, dp))
    # D+ in 2 * (line lattice) modulo the radical?
    half = intmat.Solver([[2 * x for x in row] for row in gram], 48, 48)
    divisible = half.solve(intmat.matvec(gram, dp)) is not None
    H = build_full(4)
    dpH, dmH, LH = divisor_class(d_plus_lines()), divisor_class(d_minus_lines()), H.hyperplane
    return {
        "relation_in_radical": in_radical,
        "relation_in_H": [x + y for x, y in zip(dpH, dmH)] == [2 * v for v in LH],
        "d_plus_pairings": sorted(pairings),
        "d_plus_divisible_by_two": divisible,
        "d_plus_even_in_H": all(v % 2 == 0 for v in dpH),
    }
