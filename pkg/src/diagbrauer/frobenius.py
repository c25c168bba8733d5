"""Point counts of diagonal quartic surfaces over F_p and F_{p^2}, quartic
Jacobi and Gauss sums, and the character-sum prediction of the counts.

For a split primary prime pi of norm p, psi is the quartic character of
F_p = Z[i]/pi with psi(x) = i^k when x^((p-1)/4) = i^k mod pi.  With b = (1, a1,
a2, a3) and characters (r, l, m, n), r = -(l+m+n), the projective count is
    p^2 + p + 1 + sum over (l, m, n) in S of
        psi(-1)^(l+m+n) J(l, m, n) psi(b0)^-r psi(a1)^-l psi(a2)^-m psi(a3)^-n.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .cyclotomic import Cyclo
from .errors import BadCharacteristic, RamifiedPrime
from .fermat import characters_in_S
from .gaussian import (GaussianInteger, PrimaryPrime, equivalent_triples, factor_int,
                       is_prime_int, parse_triple)

I_POWERS = (GaussianInteger(1, 0), GaussianInteger(0, 1),
            GaussianInteger(-1, 0), GaussianInteger(0, -1))


# ---------------------------------------------------------------- finite fields

class FiniteField:
    """F_p or F_{p^2} = F_p[w]/(w^2 - nonresidue); elements are pairs (u, v)."""

    def __init__(self, q):
        fac = factor_int(q)
        if len(fac) != 1:
            raise BadCharacteristic(f"{q} is not a prime power")
        (p, k), = fac.items()
        if k not in (1, 2) or p == 2:
            raise BadCharacteristic("only odd p and p^2 are supported")
        self.p, self.degree, self.q = p, k, q
        if k == 2:
            self.nonresidue = next(c for c in range(2, p) if pow(c, (p - 1) // 2, p) == p - 1) \
                if p > 2 else None
        else:
            self.nonresidue = None

    def elements(self):
        p = self.p
        if self.degree == 1:
            return [(u, 0) for u in range(p)]
        return [(u, v) for u in range(p) for v in range(p)]

    def mul(self, x, y):
        p = self.p
        if self.degree == 1:
            return (x[0] * y[0] % p, 0)
        n = self.nonresidue
        return ((x[0] * y[0] + n * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def embed(self, r):
        """Image of a rational number with denominator prime to p."""
        r = Fraction(r)
        if r.denominator % self.p == 0:
            raise BadCharacteristic(f"{self.p} divides a denominator")
        return (r.numerator * pow(r.denominator, -1, self.p) % self.p, 0)

    def fourth_power_table(self):
        """{c: #{x : x^4 = c}}."""
        counts = {}
        for x in self.elements():
            x2 = self.mul(x, x)
            c = self.mul(x2, x2)
            counts[c] = counts.get(c, 0) + 1
        return counts


def _check_coprime(a, p):
    for x in a:
        x = Fraction(x)
        if x.numerator % p == 0 or x.denominator % p == 0:
            raise BadCharacteristic(f"{p} divides a coefficient")


def count_points(a, q):
    """Number of F_q-points of x0^4 + a1 x1^4 + a2 x2^4 + a3 x3^4 = 0 in P^3."""
    a = parse_triple(a)
    F = FiniteField(q)
    _check_coprime(a, F.p)
    table = F.fourth_power_table()
    coeffs = [F.embed(1)] + [F.embed(x) for x in a]
    dists = []
    for b in coeffs:
        d = {}
        for c, n in table.items():
            v = F.mul(b, c)
            d[v] = d.get(v, 0) + n
        dists.append(d)
    # distribution of the sum of the first three terms, then match the fourth
    acc = dists[0]
    for d in dists[1:3]:
        nxt = {}
        for v1, n1 in acc.items():
            for v2, n2 in d.items():
                s = F.add(v1, v2)
                nxt[s] = nxt.get(s, 0) + n1 * n2
        acc = nxt
    p = F.p
    affine = 0
    for v, n in dists[3].items():
        neg = ((-v[0]) % p, (-v[1]) % p)
        affine += n * acc.get(neg, 0)
    return (affine - 1) // (q - 1)


def count_points_naive(a, q):
    """Projective count by enumerating normalised coordinates (small q only)."""
    a = parse_triple(a)
    F = FiniteField(q)
    _check_coprime(a, F.p)
    coeffs = [F.embed(1)] + [F.embed(x) for x in a]
    els = F.elements()
    zero, one = (0, 0), (1, 0)
    fourth = {x: F.mul(F.mul(x, x), F.mul(x, x)) for x in els}
    count = 0
    for lead in range(4):
        for rest in product(els, repeat=3 - lead):
            pt = [zero] * lead + [one] + list(rest)
            s = zero
            for b, x in zip(coeffs, pt):
                s = F.add(s, F.mul(b, fourth[x]))
            if s == zero:
                count += 1
    return count


# ---------------------------------------------------------------- characters

class QuarticCharacter:
    """psi on F_p = Z[i]/pi as exponents of i; psi(0) is None."""

    def __init__(self, pi):
        if not isinstance(pi, PrimaryPrime):
            pi = PrimaryPrime(GaussianInteger.of(pi))
        if not pi.split:
            raise RamifiedPrime("quartic characters on F_p need a split prime")
        self.prime = pi
        p = pi.norm
        self.p = p
        iota = pi.iota()
        logs = {pow(iota, k, p): k for k in range(4)}
        e = (p - 1) // 4
        self.table = [None] + [logs[pow(x, e, p)] for x in range(1, p)]

    def __call__(self, x):
        x = Fraction(x)
        p = self.p
        if x.numerator % p == 0 or x.denominator % p == 0:
            raise BadCharacteristic(f"{p} divides {x}")
        return self.table[x.numerator * pow(x.denominator, -1, p) % p]

    def minus_one(self):
        return self.table[self.p - 1]


@lru_cache(maxsize=None)
def _character(pi):
    return QuarticCharacter(pi)


def quartic_character(pi):
    pi = pi.pi if isinstance(pi, PrimaryPrime) else GaussianInteger.of(pi)
    return _character(pi)


def jacobi_sum(chi, pi):
    """J(l, m, n) = sum over x1+x2+x3 = 1 of psi^l(x1) psi^m(x2) psi^n(x3)."""
    l, m, n = chi
    psi = quartic_character(pi)
    p, tab = psi.p, psi.table
    counts = [0, 0, 0, 0]
    for x1 in range(1, p):
        k1 = l * tab[x1]
        for x2 in range(1, p):
            x3 = (1 - x1 - x2) % p
            if x3 == 0:
                continue
            counts[(k1 + m * tab[x2] + n * tab[x3]) % 4] += 1
    return GaussianInteger(counts[0] - counts[2], counts[1] - counts[3])


def gauss_sum(k, pi):
    """g(k) = sum_x psi^k(x) zeta_p^x in Q(zeta_4p)."""
    psi = quartic_character(pi)
    p = psi.p
    n = 4 * p
    weights = {}
    for x in range(1, p):
        e = (p * k * psi.table[x] + 4 * x) % n
        weights[e] = weights.get(e, 0) + 1
    return Cyclo.from_powers(n, weights)


def gaussian_to_cyclo(z, n):
    return Cyclo.from_powers(n, {0: z.re, n // 4: z.im})


def jacobi_via_gauss(chi, pi):
    l, m, n = chi
    num = gauss_sum(l, pi) * gauss_sum(m, pi) * gauss_sum(n, pi)
    return num / gauss_sum(l + m + n, pi)


def frobenius_eigenvalue_numerator(chi, pi):
    """psi(-1)^(l+m+n) J(chi): N times the Frobenius eigenvalue on the chi-part."""
    psi = quartic_character(pi)
    return I_POWERS[(psi.minus_one() * sum(chi)) % 4] * jacobi_sum(chi, pi)


def weil_count(a, pi):
    """The character-sum prediction of count_points(a, N(pi))."""
    a = parse_triple(a)
    if not isinstance(pi, PrimaryPrime):
        pi = PrimaryPrime(GaussianInteger.of(pi))
    psi = quartic_character(pi)
    p = psi.p
    _check_coprime(a, p)
    total = GaussianInteger(p * p + p + 1, 0)
    logs = [psi(x) for x in a]
    for chi in characters_in_S(4):
        l, m, n = chi
        twist = -(l * logs[0] + m * logs[1] + n * logs[2])
        total = total + frobenius_eigenvalue_numerator(chi, pi) * I_POWERS[twist % 4]
    if total.im != 0:
        raise ValueError("character sum is not rational")
    return total.re


# ---------------------------------------------------------------- -4 twists

def minus_four_twist(a, slots=(2, 3)):
    """Multiply two of the four coefficients (1, a1, a2, a3) by -4."""
    full = [Fraction(1)] + list(parse_triple(a))
    for s in slots:
        full[s] *= -4
    lead = full[0]
    return tuple(x / lead for x in full[1:])


def valid_prime_powers(a, qs):
    out = []
    for q in qs:
        fac = factor_int(q)
        if len(fac) != 1:
            continue
        (p, k), = fac.items()
        if p == 2 or k > 2 or not is_prime_int(p):
            continue
        try:
            _check_coprime(a, p)
        except BadCharacteristic:
            continue
        out.append(q)
    return out


def compare_minus_four_twist(a, qs, slots=(2, 3)):
    """Counts of X_a and of its -4 twist in the given slots of (1, a1, a2, a3)."""
    a = parse_triple(a)
    b = minus_four_twist(a, slots)
    rows = []
    for q in valid_prime_powers(list(a) + list(b), qs):
        x, y = count_points(a, q), count_points(b, q)
        rows.append({"q": q, "count": x, "twist_count": y, "equal": x == y})
    return {
        "a": [str(x) for x in a],
        "twist": [str(x) for x in b],
        "equivalent_over_Q": equivalent_triples(a, b, "Q"),
        "rows": rows,
        "all_equal": all(r["equal"] for r in rows),
    }
