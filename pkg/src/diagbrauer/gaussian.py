"""Gaussian integers, primary primes, residue symbols and fourth-power classes.

Roots of unity are reported as exponents of a fixed symbol zeta8 with
i = zeta8**2, so -i is exponent 6.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd, isqrt

from .errors import (DivisibilityViolation, EvenArgument, FactorizationTooHard,
                     NotCoprime, UnitArgument, ZeroArgument)

TRIAL_DIVISION_BOUND = 10 ** 6


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int = 0

    @staticmethod
    def of(x):
        if isinstance(x, GaussianInteger):
            return x
        if isinstance(x, complex):
            return GaussianInteger(int(x.real), int(x.imag))
        return GaussianInteger(int(x), 0)

    def __add__(self, other):
        other = GaussianInteger.of(other)
        return GaussianInteger(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInteger(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianInteger.of(other))

    def __rsub__(self, other):
        return GaussianInteger.of(other) - self

    def __mul__(self, other):
        other = GaussianInteger.of(other)
        return GaussianInteger(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussianInteger(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def divides(self, other):
        """True if self divides other in Z[i]."""
        other = GaussianInteger.of(other)
        n = self.norm()
        if n == 0:
            return other.is_zero()
        w = other * self.conj()
        return w.re % n == 0 and w.im % n == 0

    def exact_div(self, other):
        other = GaussianInteger.of(other)
        n = other.norm()
        w = self * other.conj()
        if w.re % n or w.im % n:
            raise ValueError("inexact Gaussian division")
        return GaussianInteger(w.re // n, w.im // n)

    def __mod__(self, other):
        """Remainder of nearest-rounding division."""
        other = GaussianInteger.of(other)
        n = other.norm()
        w = self * other.conj()
        q = GaussianInteger(_round_div(w.re, n), _round_div(w.im, n))
        return self - q * other

    def __pow__(self, e):
        out = GaussianInteger(1, 0)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def powmod(self, e, m):
        out = GaussianInteger(1, 0) % m
        base = self % m
        while e:
            if e & 1:
                out = (out * base) % m
            base = (base * base) % m
            e >>= 1
        return out

    def reduce_mod_int(self, m):
        return GaussianInteger(self.re % m, self.im % m)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        mag = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return ("-" if self.im < 0 else "") + mag + "i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{mag}i"

    @staticmethod
    def parse(text):
        """Parse strings such as '-1+2i', '3', '5i', '2-i'."""
        s = text.replace(" ", "").replace("I", "i").replace("j", "i")
        if not s.endswith("i"):
            return GaussianInteger(int(s), 0)
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im = 1
        elif im_part == "-":
            im = -1
        else:
            im = int(im_part)
        return GaussianInteger(int(re_part), im)


def _round_div(a, n):
    return (2 * a + n) // (2 * n)


UNITS = (GaussianInteger(1, 0), GaussianInteger(0, 1),
         GaussianInteger(-1, 0), GaussianInteger(0, -1))
ONE_PLUS_I = GaussianInteger(1, 1)
_PRIMARY_MODULUS = ONE_PLUS_I ** 3


def is_primary(z):
    z = GaussianInteger.of(z)
    return _PRIMARY_MODULUS.divides(z - 1)


def primary_associate(z):
    """The unique unit multiple of an odd non-unit z congruent to 1 mod (1+i)^3."""
    z = GaussianInteger.of(z)
    if z.norm() == 1:
        raise UnitArgument(f"{z} is a unit")
    if ONE_PLUS_I.divides(z):
        raise EvenArgument(f"{z} is divisible by 1+i")
    found = [u * z for u in UNITS if is_primary(u * z)]
    assert len(found) == 1
    return found[0]


def is_prime_int(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_gaussian_prime(z):
    z = GaussianInteger.of(z)
    n = z.norm()
    if is_prime_int(n):
        return True
    if z.re == 0 or z.im == 0:
        p = abs(z.re + z.im)
        return is_prime_int(p) and p % 4 == 3
    return False


class PrimaryPrime:
    """A primary Gaussian prime together with its residue-field data."""

    def __init__(self, pi):
        pi = GaussianInteger.of(pi)
        if not is_gaussian_prime(pi):
            raise ValueError(f"{pi} is not a Gaussian prime")
        if not is_primary(pi):
            raise ValueError(f"{pi} is not primary")
        self.pi = pi
        self.norm = pi.norm()
        self.split = pi.im != 0
        self.p = self.norm if self.split else abs(pi.re)
        self._zeta8 = None

    def __repr__(self):
        return f"PrimaryPrime({self.pi})"

    def __eq__(self, other):
        return isinstance(other, PrimaryPrime) and other.pi == self.pi

    def __hash__(self):
        return hash(self.pi)

    def reduce(self, x):
        return GaussianInteger.of(x) % self.pi

    def is_zero(self, x):
        return self.pi.divides(x)

    def iota(self):
        """The integer congruent to i modulo pi (split primes only)."""
        if not self.split:
            raise ValueError("inert prime has no rational image of i")
        a, b = self.pi.re, self.pi.im
        return (-a * pow(b, -1, self.p)) % self.p

    def zeta8(self):
        """A fixed square root of i modulo pi; requires 8 | N(pi)-1.

        Convention: for a split prime the least residue r in [0, p) with
        r^2 = i; for an inert prime the lexicographically least (a, b) with
        (a+bi)^2 = i.  Only symbols that are fourth roots of unity are
        independent of this choice.
        """
        if (self.norm - 1) % 8:
            raise DivisibilityViolation("zeta8 needs N(pi) = 1 mod 8")
        if self._zeta8 is None:
            if self.split:
                p, io = self.p, self.iota()
                g = _primitive_root(p)
                r = pow(g, (p - 1) // 8, p)
                cands = sorted(pow(r, k, p) for k in (1, 3, 5, 7))
                z = next(c for c in cands if c * c % p == io)
                self._zeta8 = GaussianInteger(z, 0)
            else:
                p = self.p
                target = GaussianInteger(0, 1)
                for a in range(p):
                    hit = None
                    for b in range(p):
                        z = GaussianInteger(a, b)
                        if self.is_zero(z * z - target):
                            hit = z
                            break
                    if hit is not None:
                        self._zeta8 = hit
                        break
        return self._zeta8


def _primitive_root(p):
    phi = p - 1
    fac = factor_int(phi)
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in fac):
            return g
    raise ValueError("no primitive root")


def power_residue(x, p, m):
    """The m-th power residue symbol of x modulo the primary prime p.

    Returns the exponent e in Z/8 with zeta8^e congruent to x^((N-1)/m).
    """
    if not isinstance(p, PrimaryPrime):
        p = PrimaryPrime(p)
    if m not in (1, 2, 4, 8):
        raise ValueError("m must be one of 1, 2, 4, 8")
    n = p.norm
    if (n - 1) % m:
        raise DivisibilityViolation(f"{m} does not divide N(pi)-1 = {n - 1}")
    x = GaussianInteger.of(x)
    if p.is_zero(x):
        raise NotCoprime(f"pi divides {x}")
    if m == 1:
        return 0
    y = x.powmod((n - 1) // m, p.pi)
    if m == 8:
        z = p.zeta8()
        for e in range(8):
            if p.is_zero(y - z.powmod(e, p.pi)):
                return e
    else:
        for e in range(0, 8, 2):
            if p.is_zero(y - GaussianInteger(0, 1) ** (e // 2)):
                return e
    raise ValueError("residue symbol not a root of unity (is pi prime?)")


def quartic_symbol(x, p):
    """Biquadratic residue symbol as an exponent of i in Z/4."""
    return power_residue(x, p, 4) // 2


def zeta8_power_name(e):
    names = ["1", "zeta8", "i", "i*zeta8", "-1", "-zeta8", "-i", "-i*zeta8"]
    return names[e % 8]


def primary_primes(bound, split_only=False, start=3):
    """Primary primes with norm in [start, bound), ordered by norm then by value."""
    out = []
    for q in range(start, bound):
        if not is_prime_int(q):
            continue
        if q % 4 == 1:
            a = _two_squares(q)
            for z in (GaussianInteger(a[0], a[1]), GaussianInteger(a[0], -a[1])):
                out.append(PrimaryPrime(primary_associate(z)))
        elif not split_only and q % 4 == 3 and q * q < bound:
            out.append(PrimaryPrime(primary_associate(GaussianInteger(q, 0))))
    out.sort(key=lambda p: (p.norm, p.pi.re, p.pi.im))
    return out


def iter_split_primary_primes(start=5):
    """Endless ascending stream of split primary primes."""
    q = start
    while True:
        if q % 4 == 1 and is_prime_int(q):
            a = _two_squares(q)
            pair = sorted((primary_associate(GaussianInteger(a[0], a[1])),
                           primary_associate(GaussianInteger(a[0], -a[1]))),
                          key=lambda z: (z.re, z.im))
            for z in pair:
                yield PrimaryPrime(z)
        q += 1


def _two_squares(p):
    """(a, b) with a^2 + b^2 = p for a prime p = 1 mod 4 (Cornacchia)."""
    g = 2
    while pow(g, (p - 1) // 2, p) != p - 1:
        g += 1
    r = pow(g, (p - 1) // 4, p)
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    c = isqrt(p - b * b)
    assert b * b + c * c == p
    return b, c


def factor_int(n, bound=TRIAL_DIVISION_BOUND):
    """Prime factorisation {p: e} of |n| by trial division up to bound."""
    n = abs(int(n))
    if n == 0:
        raise ZeroArgument("cannot factor 0")
    out = {}
    d = 2
    while d * d <= n:
        if d > bound:
            if is_prime_int(n):
                break
            raise FactorizationTooHard(f"cofactor {n} exceeds trial-division bound")
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def as_fraction(q):
    if isinstance(q, Fraction):
        return q
    if isinstance(q, str):
        return Fraction(q)
    return Fraction(q)


def integer_root(n, k):
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        return None
    r = round(n ** (1.0 / k)) if n < 2 ** 52 else _int_root_newton(n, k)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    return None


def _int_root_newton(n, k):
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def is_rational_fourth_power(q):
    q = as_fraction(q)
    if q <= 0:
        return False
    return integer_root(q.numerator, 4) is not None and integer_root(q.denominator, 4) is not None


FIELDS = ("Q", "Qi")


def normalize_field(field):
    f = str(field).replace("(", "").replace(")", "").replace(" ", "")
    if f in ("Q",):
        return "Q"
    if f in ("Qi", "Q(i)", "k"):
        return "Qi"
    raise ValueError(f"unknown field {field!r}; use Q or Qi")


def is_fourth_power(q, field="Q"):
    """True iff the nonzero rational q is a fourth power in the field."""
    q = as_fraction(q)
    if q == 0:
        raise ZeroArgument("zero is not in the multiplicative group")
    if is_rational_fourth_power(q):
        return True
    if normalize_field(field) == "Qi":
        return is_rational_fourth_power(q / -4)
    return False


def is_square(q, field="Q"):
    q = as_fraction(q)
    if q == 0:
        raise ZeroArgument("zero is not in the multiplicative group")
    if normalize_field(field) == "Qi":
        q = abs(q)
    return q > 0 and integer_root(q.numerator, 2) is not None and \
        integer_root(q.denominator, 2) is not None


@dataclass(frozen=True)
class FourthPowerClass:
    """Class in Q^x / Q^x4 stored as a sign and prime exponents mod 4."""
    sign: int
    exponents: tuple      # sorted ((p, e), ...) with e in 1..3

    @staticmethod
    def of(q):
        q = as_fraction(q)
        if q == 0:
            raise ZeroArgument("zero has no class")
        exps = {}
        for p, e in factor_int(q.numerator).items():
            exps[p] = exps.get(p, 0) + e
        for p, e in factor_int(q.denominator).items():
            exps[p] = exps.get(p, 0) - e
        items = tuple(sorted((p, e % 4) for p, e in exps.items() if e % 4))
        return FourthPowerClass(1 if q > 0 else -1, items)

    def __mul__(self, other):
        exps = dict(self.exponents)
        for p, e in other.exponents:
            exps[p] = (exps.get(p, 0) + e) % 4
        items = tuple(sorted((p, e) for p, e in exps.items() if e))
        return FourthPowerClass(self.sign * other.sign, items)

    def is_trivial(self):
        return self.sign == 1 and not self.exponents

    def exponent(self, p):
        return dict(self.exponents).get(p, 0)

    def representative(self):
        out = Fraction(self.sign)
        for p, e in self.exponents:
            out *= p ** e
        return out


def parse_triple(values):
    """Three nonzero rationals from strings, ints or Fractions."""
    if isinstance(values, str):
        values = values.split(",")
    out = tuple(as_fraction(v.strip() if isinstance(v, str) else v) for v in values)
    if len(out) != 3:
        raise ValueError("a coefficient triple has exactly three entries")
    if any(v == 0 for v in out):
        raise ZeroArgument("coefficients must be nonzero")
    return out


def equivalent_triples(a, b, field="Q", witness=False):
    """Decide whether x0^4+a1x1^4+a2x2^4+a3x3^4 and the same with b are equivalent.

    Equivalence allows permuting the four slots (1, a1, a2, a3), rescaling each
    slot by a fourth power of the field and a common nonzero scalar.  That
    holds iff for some permutation all ratios b_j / a_perm(j) agree modulo
    fourth powers of the field.
    """
    field = normalize_field(field)
    sa = (Fraction(1),) + parse_triple(a)
    sb = (Fraction(1),) + parse_triple(b)
    for perm in permutations(range(4)):
        ratios = [sb[j] / sa[perm[j]] for j in range(4)]
        if all(is_fourth_power(r / ratios[0], field) for r in ratios[1:]):
            if witness:
                return True, {"permutation": list(perm), "scale": str(ratios[0])}
            return True
    if witness:
        return False, None
    return False


def triple_product(a):
    a = parse_triple(a)
    return a[0] * a[1] * a[2]


def lcm_list(values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
