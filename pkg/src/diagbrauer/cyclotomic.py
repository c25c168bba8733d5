"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are coefficient vectors of polynomials in zeta reduced modulo the
n-th cyclotomic polynomial.
"""
from fractions import Fraction
from functools import lru_cache


def _poly_divmod(num, den):
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            c = c // lead if lead in (1, -1) else Fraction(c, lead)
            q[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return q, num[:len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_poly(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def _power_table(n):
    """Reduced coefficient vectors of zeta^k for k in 0..n-1."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by zeta
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


class Cyclo:
    """An element of Q(zeta_n)."""
    __slots__ = ("n", "c")

    def __init__(self, n, coeffs):
        self.n = n
        self.c = tuple(coeffs)

    @staticmethod
    def degree(n):
        return len(cyclotomic_poly(n)) - 1

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * cls.degree(n))

    @classmethod
    def scalar(cls, n, x):
        deg = cls.degree(n)
        return cls(n, (x,) + (0,) * (deg - 1))

    @classmethod
    def zeta(cls, n, k=1):
        return cls(n, _power_table(n)[k % n])

    @classmethod
    def from_powers(cls, n, weights):
        """Sum of w * zeta^k over a mapping {k: w}."""
        deg = cls.degree(n)
        out = [0] * deg
        table = _power_table(n)
        for k, w in weights.items():
            if w:
                row = table[k % n]
                for j in range(deg):
                    if row[j]:
                        out[j] += w * row[j]
        return cls(n, out)

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.n != self.n:
                raise ValueError("mixing different cyclotomic fields")
            return other
        return Cyclo.scalar(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclo(self.n, [x + y for x, y in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.n, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            return Cyclo(self.n, [x * other for x in self.c])
        other = self._coerce(other)
        deg = len(self.c)
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    if y:
                        prod[i + j] += x * y
        table = _power_table(self.n)
        out = prod[:deg]
        for k in range(deg, len(prod)):
            if prod[k]:
                row = table[k]
                for j in range(deg):
                    if row[j]:
                        out[j] += prod[k] * row[j]
        return Cyclo(self.n, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            return self * other.inverse()
        return Cyclo(self.n, [Fraction(x) / other for x in self.c])

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclo.scalar(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def galois(self, k):
        """Apply zeta -> zeta^k (k coprime to n)."""
        weights = {}
        for j, x in enumerate(self.c):
            if x:
                weights[j * k] = weights.get(j * k, 0) + x
        return Cyclo.from_powers(self.n, weights)

    def conj(self):
        return self.galois(-1)

    def norm_down(self):
        """Product of all Galois conjugates (a rational number)."""
        out = Cyclo.scalar(self.n, 1)
        for k in range(1, self.n):
            if _gcd(k, self.n) == 1:
                out = out * self.galois(k)
        assert out.is_rational()
        return out.c[0]

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        others = Cyclo.scalar(self.n, 1)
        for k in range(2, self.n):
            if _gcd(k, self.n) == 1:
                others = others * self.galois(k)
        nrm = (self * others)
        assert nrm.is_rational()
        return others / nrm.c[0]

    def is_zero(self):
        return not any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.c[0])

    def real_part(self):
        return (self + self.conj()) / 2

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.n == other.n and self.c == other.c
        return self == Cyclo.scalar(self.n, other)

    def __hash__(self):
        return hash((self.n, self.c))

    def __repr__(self):
        terms = [f"{x}*z^{j}" for j, x in enumerate(self.c) if x]
        return f"Cyclo[{self.n}](" + (" + ".join(terms) or "0") + ")"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)
