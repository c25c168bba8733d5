"""Finite Galois groups of L(i, 4th root of 2, 4th roots of a_j) and of the
octic variant with s = 8th root of -2, modelled as tuples acting on radicals.

A tuple (t, e, f) means
    sigma(zeta8) = zeta8^t,  sigma(q^(1/4)) = i^e[q] q^(1/4),  sigma(s) = zeta8^f s
for the radicands q (2 and the odd primes of a).  Radicals are normalised so
that the 4th root of -m is zeta8 times the real 4th root of m, and
s^2 = zeta8 * 2^(1/4), zeta8 = s^4 / (1+i).
"""
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import intmat
from .cohomology import FiniteGroup, Module
from .errors import (HypothesisFailed, InconsistentRelations, InconsistentSamples,
                     NotIsometry, RamifiedPrime, SamplingExhausted)
from .gaussian import (FourthPowerClass, GaussianInteger, PrimaryPrime,
                       iter_split_primary_primes, normalize_field, parse_triple,
                       quartic_symbol)
from .picard import build_picard, g_action_pic, is_isometry, untwisted_picard_action

DEFAULT_PRIME_BOUND = 10 ** 6
SAMPLES_PER_CLASS = 3


def prime_bound():
    return int(os.environ.get("BRAUER_PRIME_BOUND", DEFAULT_PRIME_BOUND))


def delta(t):
    """0 if t = +-1 mod 8, else 1: sigma(sqrt 2) = (-1)^delta sqrt 2."""
    return 0 if t % 8 in (1, 7) else 1


# ---------------------------------------------------------------- radicals

class RadicalBasis:
    """Radicands of a triple: 2 first, then the odd primes, plus per-slot data."""

    def __init__(self, a, tilde=False):
        a = parse_triple(a)
        self.a = a
        self.tilde = tilde
        classes = [FourthPowerClass.of(x) for x in a]
        odd = sorted({p for c in classes for p, _ in c.exponents if p != 2})
        self.radicands = [2] + odd
        self.negative = [c.sign < 0 for c in classes]
        self.exponents = [[c.exponent(q) for q in self.radicands] for c in classes]

    def odd_vectors(self):
        return [tuple(e[1:]) for e in self.exponents]

    def __repr__(self):
        return f"RadicalBasis(radicands={self.radicands}, tilde={self.tilde})"


@dataclass(frozen=True)
class GaloisTuple:
    t: int
    e: tuple
    f: int = None

    def compose(self, other):
        """(self o other): first other, then self."""
        t = self.t * other.t % 8
        e = tuple((x + self.t * y) % 4 for x, y in zip(self.e, other.e))
        f = None
        if self.f is not None and other.f is not None:
            f = (self.f + self.t * other.f) % 8
        return GaloisTuple(t, e, f)

    def is_consistent(self):
        if self.t % 2 == 0:
            return False
        if self.e[0] % 2 != delta(self.t):
            return False
        if self.f is not None and (2 * self.f + 1 - self.t - 2 * self.e[0]) % 8:
            return False
        return True

    def kappa(self, basis, j):
        """sigma(a_j^(1/4)) / a_j^(1/4) as an exponent of i."""
        k = (self.t - 1) // 2 if basis.negative[j] else 0
        for e, n in zip(self.e, basis.exponents[j]):
            k += e * n
        return k % 4

    def cocycle(self, basis):
        """Exponents of c_sigma = (a_j^(1/4) / sigma(a_j^(1/4)))_j in (mu_4)^3."""
        return tuple((-self.kappa(basis, j)) % 4 for j in range(3))

    def as_dict(self, basis=None):
        out = {"t": self.t, "e": list(self.e)}
        if basis is not None:
            out["e"] = {str(q): v for q, v in zip(basis.radicands, self.e)}
        if self.f is not None:
            out["f"] = self.f
        return out


def complex_conjugation(basis):
    """Real fourth roots are fixed, zeta8 -> zeta8^-1 and s -> zeta8^-1 s."""
    return GaloisTuple(7, (0,) * len(basis.radicands), 7 if basis.tilde else None)


def frobenius_tuple(p, basis):
    """Frobenius at a primary prime p (coprime to 2 and the radicands)."""
    if not isinstance(p, PrimaryPrime):
        p = PrimaryPrime(p)
    n = p.norm
    for q in basis.radicands:
        if p.is_zero(GaussianInteger(q, 0)):
            raise RamifiedPrime(f"{p.pi} divides the radicand {q}")
    t = n % 8
    e = tuple(quartic_symbol(q, p) for q in basis.radicands)
    f = None
    if basis.tilde:
        f = octic_exponent(p)
    tup = GaloisTuple(t, e, f)
    if not tup.is_consistent():
        raise InconsistentRelations(f"Frobenius tuple {tup} violates the radical relations")
    return tup


def octic_exponent(p):
    """f with Frob(s) = zeta8^f s for s = 8th root of -2."""
    n = p.norm
    if n % 8 == 1:
        # Frob(s)/s = (-2)^((N-1)/8), a fourth root of unity here
        y = GaussianInteger(-2, 0).powmod((n - 1) // 8, p.pi)
        return 2 * _i_log(y, p)
    if n % 8 == 5:
        # Frob(s)/s = (-2)^((N-5)/8) (1+i) zeta8
        y = (GaussianInteger(-2, 0).powmod((n - 5) // 8, p.pi) * GaussianInteger(1, 1)) % p.pi
        return (2 * _i_log(y, p) + 1) % 8
    raise RamifiedPrime("norm must be odd and 1 mod 4")


def _i_log(y, p):
    for k in range(4):
        if p.is_zero(y - GaussianInteger(0, 1) ** k):
            return k
    raise InconsistentRelations("value is not a fourth root of unity modulo pi")


# ---------------------------------------------------------------- groups

def expected_group_order(a, field="Q", tilde=False):
    """[L_a : L] by Kummer theory: [L(zeta8, 2^(1/4)) : L] times the odd part."""
    base = 8 if normalize_field(field) == "Q" else 4
    vecs = RadicalBasis(a).odd_vectors()
    span = {tuple(0 for _ in vecs[0])}
    frontier = list(span)
    while frontier:
        nxt = []
        for v in frontier:
            for w in vecs:
                s = tuple((x + y) % 4 for x, y in zip(v, w))
                if s not in span:
                    span.add(s)
                    nxt.append(s)
        frontier = nxt
    return base * len(span) * (2 if tilde else 1)


class GaloisGroup(FiniteGroup):
    """Gal(L_a / L) (or the octic version) with tuple representatives."""

    def __init__(self, a, field="Q", tilde=False):
        field = normalize_field(field)
        basis = RadicalBasis(a, tilde)
        self.a = basis.a
        self.field = field
        self.tilde = tilde
        self.basis = basis
        ts = (1, 3, 5, 7) if field == "Q" else (1, 5)
        nrad = len(basis.radicands)
        reps = {}
        for t in ts:
            for e in product(range(4), repeat=nrad):
                fs = range(8) if tilde else (None,)
                for f in fs:
                    tup = GaloisTuple(t, e, f)
                    if not tup.is_consistent():
                        continue
                    reps.setdefault(self.signature(tup), tup)
        sigs = sorted(reps)
        self.reps = [reps[s] for s in sigs]
        index = {s: k for k, s in enumerate(sigs)}
        table = [[index[self.signature(x.compose(y))] for y in self.reps] for x in self.reps]
        ident = index[self.signature(GaloisTuple(1, (0,) * nrad, 0 if tilde else None))]
        super().__init__(sigs, table, ident)
        if self.order != self.expected_order():
            raise InconsistentRelations(
                f"group order {self.order} differs from the Kummer degree {self.expected_order()}")

    def signature(self, tup):
        """Action on the generators zeta8, 2^(1/4), a_j^(1/4) [and s]."""
        sig = (tup.t, tup.e[0]) + tuple(tup.kappa(self.basis, j) for j in range(3))
        if self.tilde:
            sig += (tup.f,)
        return sig

    def expected_order(self):
        return expected_group_order(self.a, self.field, self.tilde)

    def element_of(self, tup):
        return self.index[self.signature(tup)]

    def conjugation(self):
        return self.element_of(complex_conjugation(self.basis))

    def cocycle(self, g):
        return self.reps[g].cocycle(self.basis)

    def t_of(self, g):
        return self.reps[g].t

    def describe(self, g):
        return self.reps[g].as_dict(self.basis)

    def image_in_kummer_2(self):
        """Image in Gal(k(2^(1/4)) / Q) as pairs (t mod 8, e_2)."""
        return {(r.t, r.e[0]) for r in self.reps}

    def check_kummer_image(self):
        """The image contains Gal(k(2^(1/4))/k): all (t, e2) with t = 1 mod 4."""
        needed = {(t, e) for t in (1, 5) for e in range(4) if e % 2 == delta(t)}
        if not needed <= self.image_in_kummer_2():
            raise HypothesisFailed("image does not contain Gal(k(2^(1/4))/k)")
        return True


@lru_cache(maxsize=None)
def _build_group_cached(a, field, tilde):
    return GaloisGroup(a, field, tilde)


def build_group(a, field="Q", tilde=False):
    return _build_group_cached(parse_triple(a), normalize_field(field), bool(tilde))


# ---------------------------------------------------------------- Frobenius units on O/2^k

def level_key(tup, k):
    """The part of a Gamma_k tuple that determines pi/conj(pi) mod 2^k."""
    if k <= 2:
        return ()
    if k == 3:
        return (tup.t,)
    if k == 4:
        return (tup.t, tup.e[0])
    if k == 5:
        if tup.f is None:
            raise HypothesisFailed("level 5 needs the octic group")
        return (tup.t, tup.e[0], tup.f)
    raise HypothesisFailed("levels above 5 are not determined by the tuple model")


def frobenius_unit(p, k):
    """pi / conj(pi) mod 2^k as (re, im)."""
    m = 2 ** k
    pi = p.pi
    sq = pi * pi
    inv = pow(p.norm, -1, m)
    return (sq.re * inv % m, sq.im * inv % m)


class FrobeniusSampler:
    """Deterministic ascending sampling of split primary primes by tuple key."""

    def __init__(self, bound=None):
        self.bound = prime_bound() if bound is None else bound
        self._stream = iter_split_primary_primes(5)
        self._seen = []          # (prime, t, e2, f)
        self._exhausted = False

    def _advance(self):
        p = next(self._stream)
        if p.norm >= self.bound:
            self._exhausted = True
            return None
        e2 = quartic_symbol(2, p)
        rec = (p, p.norm % 8, e2, octic_exponent(p))
        self._seen.append(rec)
        return rec

    def matching(self, key, count=SAMPLES_PER_CLASS):
        """The first ``count`` primes whose (t, e2, f) starts with key."""
        out = [r[0] for r in self._seen if r[1:1 + len(key)] == key]
        while len(out) < count and not self._exhausted:
            rec = self._advance()
            if rec is not None and rec[1:1 + len(key)] == key:
                out.append(rec[0])
        if len(out) < count:
            raise SamplingExhausted(f"fewer than {count} primes below {self.bound} match {key}")
        return out[:count]

    def unit(self, key, k, count=SAMPLES_PER_CLASS):
        units = {frobenius_unit(p, k) for p in self.matching(key, count)}
        if len(units) != 1:
            raise InconsistentSamples(f"primes matching {key} give different units mod 2^{k}")
        return units.pop()


_SAMPLER = None


def default_sampler():
    global _SAMPLER
    if _SAMPLER is None or _SAMPLER.bound != prime_bound():
        _SAMPLER = FrobeniusSampler()
    return _SAMPLER


def _gauss_mul(u, v, m):
    return ((u[0] * v[0] - u[1] * v[1]) % m, (u[0] * v[1] + u[1] * v[0]) % m)


def _i_power(k):
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][k % 4]


def unit_matrix(u):
    a, b = u
    return [[a, -b], [b, a]]


CONJ = [[1, 0], [0, -1]]


class BrLevelAction:
    """sigma -> (unit, conjugate?) acting on O/2^k = Br[2^k] for a twisted surface."""

    def __init__(self, group, k, sampler=None):
        if k > (5 if group.tilde else 4):
            raise HypothesisFailed(f"level {k} needs a larger Galois group")
        self.group = group
        self.k = k
        self.modulus = 2 ** k
        sampler = sampler or default_sampler()
        tau = complex_conjugation(group.basis)
        table = []
        for rep in group.reps:
            twist = _i_power(-sum(rep.kappa(group.basis, j) for j in range(3)))
            if rep.t % 4 == 1:
                u = sampler.unit(level_key(rep, k), k)
                conj = False
            else:
                u2 = sampler.unit(level_key(tau.compose(rep), k), k)
                u = (u2[0], -u2[1])
                conj = True
            u = _gauss_mul(twist, u, self.modulus)
            table.append((u, conj))
        self.table = table

    def matrix(self, g):
        u, conj = self.table[g]
        M = unit_matrix(u)
        return intmat.matmul(M, CONJ) if conj else M

    def module(self):
        m = self.modulus
        return Module(self.group, 2, [[m, 0], [0, m]],
                      [self.matrix(g) for g in range(self.group.order)], f"O/{m}")

    def is_multiplicative(self):
        G, m = self.group, self.modulus
        for x in range(G.order):
            for y in range(G.order):
                A = intmat.matmul(self.matrix(x), self.matrix(y))
                B = self.matrix(G.mul[x][y])
                if any((p - q) % m for r1, r2 in zip(A, B) for p, q in zip(r1, r2)):
                    return False
        return True


def br_level_action(group, k, sampler=None):
    return BrLevelAction(group, k, sampler)


# ---------------------------------------------------------------- Picard side

def picard_matrices(group):
    """sigma -> M(c_sigma) U(t_sigma) on Pic coordinates."""
    pic = build_picard()
    out = []
    for g in range(group.order):
        c = group.cocycle(g)
        A = intmat.matmul(g_action_pic(*c), untwisted_picard_action(group.t_of(g)))
        if not is_isometry(A, pic.gram):
            raise NotIsometry("twisted action does not preserve the Gram matrix")
        out.append(A)
    return out


def picard_action(group):
    pic = build_picard()
    return Module(group, pic.rank, [], picard_matrices(group), "Pic")


def picard_dual_action(group):
    pic = build_picard()
    return Module(group, pic.rank, [], [pic.dual_action(A) for A in picard_matrices(group)], "Pic*")


def delta_action(group):
    """Delta = O/8 with the level-3 action."""
    return br_level_action(group, 3).module()


def glue_is_equivariant(group):
    pic = build_picard()
    G = pic.glue_matrix()
    br = br_level_action(group, 3)
    for g, A in enumerate(picard_matrices(group)):
        left = intmat.matmul(G, pic.dual_action(A))
        right = intmat.matmul(br.matrix(g), G)
        if any((x - y) % 8 for r1, r2 in zip(left, right) for x, y in zip(r1, r2)):
            return False
    return True


# ---------------------------------------------------------------- invariants of Br{2}

def fixed_subgroup(matrices, k):
    """Structure of the common fixed points of 2x2 matrices on O/2^k."""
    m = 2 ** k
    rows, mods = [], []
    for M in matrices:
        for i in range(2):
            rows.append([M[i][j] - int(i == j) for j in range(2)])
            mods.append(m)
    top = intmat.congruence_kernel(rows, mods, 2)
    q = intmat.SubQuotient(top + [[m, 0], [0, m]], [[m, 0], [0, m]], 2)
    return q


def torsion_level(structure):
    """Smallest j with the group killed by 2^j."""
    e = 1
    for d in structure:
        e = intmat.lcm(e, d)
    return e.bit_length() - 1


def invariants_of_brauer(a, field="Q"):
    """Structure of Br(Xbar){2}^Gamma, computed at the lowest stabilising level."""
    field = normalize_field(field)
    for tilde, k in ((False, 3), (False, 4), (True, 5)):
        group = build_group(a, field, tilde)
        act = br_level_action(group, k)
        fixed = fixed_subgroup([act.matrix(g) for g in group.generators], k)
        # stable once the invariants are killed by 2^(k-1)
        if torsion_level(fixed.structure()) < k:
            return sorted(fixed.structure())
    raise HypothesisFailed("invariants do not stabilise below level 5")


def tower_fixed_structures(k=6, count=12, sampler=None):
    """Fixed subgroups of O/2^k under Frobenius samples of the four subgroups
    Gamma_k, Gamma_k(sqrt 2), Gamma_k(2^(1/4) zeta8), Gamma_k(s)."""
    sampler = sampler or default_sampler()
    constraints = {
        "k": lambda t, e2, f: True,
        "k(sqrt2)": lambda t, e2, f: t == 1,
        "k(4th root of -2)": lambda t, e2, f: t == 1 and e2 == 0,
        "k(8th root of -2)": lambda t, e2, f: t == 1 and e2 == 0 and f == 0,
    }
    out = {}
    for name, ok in constraints.items():
        units = []
        while True:
            units = [r[0] for r in sampler._seen if ok(*r[1:])]
            if len(units) >= count or sampler._exhausted:
                break
            sampler._advance()
        mats = [unit_matrix(frobenius_unit(p, k)) for p in units[:count]]
        out[name] = sorted(fixed_subgroup(mats, k).structure())
    return out


def sampling_well_defined(k, sampler=None):
    """For every (t, e2, f) class at level k, three primes give the same unit."""
    sampler = sampler or default_sampler()
    keys = set()
    for t in (1, 5):
        for e2 in range(4):
            if e2 % 2 != delta(t):
                continue
            for f in range(8):
                if (2 * f + 1 - t - 2 * e2) % 8:
                    continue
                keys.add(level_key(GaloisTuple(t, (e2,), f), k))
    for key in sorted(keys):
        sampler.unit(key, k)
    return len(keys)
