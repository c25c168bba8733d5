"""Exact integer matrix algebra on plain Python lists.

Matrices are lists of rows of Python ints.  Lattices are given by a list of
generating column vectors.  Everything here is infrastructure for the rest
of the package: Smith normal form with both transforms, integer kernels,
integral solving, and finite abelian subquotients with explicit charts.
"""
from math import gcd


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def transpose(a, ncols=None):
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col) if x) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def vecmat(v, a):
    n = len(a[0]) if a else 0
    out = [0] * n
    for x, row in zip(v, a):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return out


def dot(u, v):
    return sum(x * y for x, y in zip(u, v) if x)


def columns(a):
    """Columns of a row-major matrix as a list of vectors."""
    return transpose(a)


def from_columns(cols, nrows):
    if not cols:
        return [[] for _ in range(nrows)]
    return transpose(cols)


def is_zero(v):
    return not any(v)


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def determinant(a):
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class SmithForm:
    """U * A * V = D with U, V unimodular.  ``diag`` holds the nonzero
    invariant factors in divisibility order; ``rank`` is their count."""

    def __init__(self, a, nrows=None, ncols=None):
        m = len(a) if nrows is None else nrows
        n = (len(a[0]) if a else 0) if ncols is None else ncols
        self.shape = (m, n)
        M = [row[:] for row in a]
        U, Ui, V, Vi = identity(m), identity(m), identity(n), identity(n)

        def row_add(i, j, q):
            # row_i += q * row_j
            if q == 0:
                return
            Mi, Mj = M[i], M[j]
            for k in range(n):
                if Mj[k]:
                    Mi[k] += q * Mj[k]
            Ui_, Uj = U[i], U[j]
            for k in range(m):
                if Uj[k]:
                    Ui_[k] += q * Uj[k]
            for row in Ui:
                if row[i]:
                    row[j] -= q * row[i]

        def row_swap(i, j):
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

        def col_add(i, j, q):
            # col_i += q * col_j
            if q == 0:
                return
            for row in M:
                if row[j]:
                    row[i] += q * row[j]
            for row in V:
                if row[j]:
                    row[i] += q * row[j]
            Vi_, Vj = Vi[i], Vi[j]
            for k in range(n):
                if Vi_[k]:
                    Vj[k] -= q * Vi_[k]

        def col_swap(i, j):
            for row in M:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

        def row_neg(i):
            M[i] = [-x for x in M[i]]
            U[i] = [-x for x in U[i]]
            for row in Ui:
                row[i] = -row[i]

        t = 0
        while t < min(m, n):
            best = None
            for i in range(t, m):
                row = M[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                row_swap(i, t)
            if j != t:
                col_swap(j, t)
            while True:
                clean = True
                p = M[t][t]
                for i in range(t + 1, m):
                    x = M[i][t]
                    if x:
                        row_add(i, t, -(x // p))
                        if M[i][t]:
                            clean = False
                for j in range(t + 1, n):
                    x = M[t][j]
                    if x:
                        col_add(j, t, -(x // p))
                        if M[t][j]:
                            clean = False
                if not clean:
                    # move the smallest leftover entry of row/col t to the pivot
                    best = (abs(M[t][t]), t, t)
                    for i in range(t + 1, m):
                        x = M[i][t]
                        if x and abs(x) < best[0]:
                            best = (abs(x), i, t)
                    for j in range(t + 1, n):
                        x = M[t][j]
                        if x and abs(x) < best[0]:
                            best = (abs(x), t, j)
                    _, i, j = best
                    if i != t:
                        row_swap(i, t)
                    if j != t:
                        col_swap(j, t)
                    continue
                bad = None
                for i in range(t + 1, m):
                    for x in M[i][t + 1:]:
                        if x % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                row_add(t, bad, 1)
            if M[t][t] < 0:
                row_neg(t)
            t += 1
        self.rank = t
        self.diag = [M[i][i] for i in range(t)]
        self.U, self.Uinv, self.V, self.Vinv = U, Ui, V, Vi
        self.D = M


def smith(a, nrows=None, ncols=None):
    return SmithForm(a, nrows, ncols)


def invariant_factors(a):
    """Nonzero invariant factors of an integer matrix."""
    return smith(a).diag


def kernel(a, ncols=None):
    """Basis (list of column vectors) of the saturated integer kernel {x : a x = 0}."""
    n = (len(a[0]) if a else 0) if ncols is None else ncols
    basis = [[int(i == j) for i in range(n)] for j in range(n)]
    for row in a:
        support = [k for k, x in enumerate(row) if x]
        if not support:
            continue
        vals = [sum(row[k] * b[k] for k in support) for b in basis]
        nz = [j for j, v in enumerate(vals) if v]
        if not nz:
            continue
        while len(nz) > 1:
            piv = min(nz, key=lambda j: abs(vals[j]))
            pv = vals[piv]
            bp = basis[piv]
            nxt = [piv]
            for j in nz:
                if j == piv:
                    continue
                q = vals[j] // pv
                if q:
                    bj = basis[j]
                    for k in range(n):
                        if bp[k]:
                            bj[k] -= q * bp[k]
                    vals[j] -= q * pv
                if vals[j]:
                    nxt.append(j)
            nz = nxt
        basis.pop(nz[0])
    return basis


def congruence_kernel(rows, moduli, ncols, start=None):
    """Basis of {x in L : row . x = 0 mod m for every (row, m)}, m = 0 meaning exact.

    L is the lattice spanned by ``start`` (default Z^ncols).  The basis is
    updated one congruence at a time: the row values are gcd-reduced onto a
    single pivot vector, which is then scaled by m / gcd (or dropped if m = 0).
    """
    if start is None:
        basis = [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    else:
        basis = [list(v) for v in start]
    for row, m in zip(rows, moduli):
        support = [k for k, x in enumerate(row) if x]
        if not support:
            continue
        vals = [sum(row[k] * b[k] for k in support) for b in basis]
        if m:
            vals = [v % m for v in vals]
        nz = [j for j, v in enumerate(vals) if v]
        if not nz:
            continue
        while len(nz) > 1:
            piv = min(nz, key=lambda j: abs(vals[j]))
            pv = vals[piv]
            bp = basis[piv]
            nxt = [piv]
            for j in nz:
                if j == piv:
                    continue
                q = vals[j] // pv
                if q:
                    bj = basis[j]
                    for k in range(ncols):
                        if bp[k]:
                            bj[k] -= q * bp[k]
                    vals[j] -= q * pv
                if vals[j]:
                    nxt.append(j)
            nz = nxt
        j = nz[0]
        if m:
            g = gcd(vals[j], m)
            scale = m // g
            basis[j] = [scale * x for x in basis[j]]
        else:
            basis.pop(j)
    return [b for b in basis if any(b)]


class Solver:
    """Repeated integral solving of a x = b for a fixed matrix a."""

    def __init__(self, a, nrows=None, ncols=None):
        self.sf = smith(a, nrows, ncols)
        self.m, self.n = self.sf.shape

    def solve(self, b):
        c = matvec(self.sf.U, b) if self.m else []
        r = self.sf.rank
        y = [0] * self.n
        for i in range(r):
            q, rem = divmod(c[i], self.sf.diag[i])
            if rem:
                return None
            y[i] = q
        if any(c[r:]):
            return None
        return matvec(self.sf.V, y) if self.n else []


def solve(a, b):
    return Solver(a, len(b), None if a else 0).solve(b)


def span_basis(vectors, dim):
    """A basis (list of vectors) of the lattice spanned by the given vectors."""
    if not vectors:
        return []
    sf = smith(from_columns(vectors, dim), dim, len(vectors))
    cols = columns(sf.Uinv)
    return [[d * x for x in cols[i]] for i, d in enumerate(sf.diag)]


def saturation_basis(vectors, dim):
    """Basis of (Q-span of vectors) intersected with Z^dim."""
    if not vectors:
        return []
    sf = smith(from_columns(vectors, dim), dim, len(vectors))
    cols = columns(sf.Uinv)
    return [cols[i] for i in range(sf.rank)]


def intersect_lattices(b1, b2, dim):
    """Basis of the intersection of two lattices given by spanning sets."""
    if not b1 or not b2:
        return []
    mat = from_columns(list(b1) + [[-x for x in v] for v in b2], dim)
    ker = kernel(mat, len(b1) + len(b2))
    vecs = []
    for y in ker:
        v = [0] * dim
        for c, b in zip(y[:len(b1)], b1):
            if c:
                for k in range(dim):
                    v[k] += c * b[k]
        vecs.append(v)
    return span_basis(vecs, dim)


def in_span(vectors, v, dim):
    if not any(v):
        return True
    if not vectors:
        return False
    return solve(from_columns(vectors, dim), v) is not None


class SubQuotient:
    """The abelian group span(top) / span(bottom) inside Z^dim.

    ``top`` and ``bottom`` are lists of vectors with span(bottom) contained
    in span(top).  The group is put in Smith form, giving invariant factors,
    a coordinate chart and representative lifts of the chart generators.
    """

    def __init__(self, top, bottom, dim):
        self.dim = dim
        self.top = span_basis(top, dim)
        k = len(self.top)
        self.k = k
        self._solver = Solver(from_columns(self.top, dim), dim, k) if k else None
        rel = []
        for v in bottom:
            if not any(v):
                continue
            y = self._coords(v)
            if y is None:
                raise ValueError("bottom lattice is not contained in top lattice")
            rel.append(y)
        if k:
            sf = smith(from_columns(rel, k), k, len(rel)) if rel else smith(zeros(k, 0), k, 0)
        else:
            sf = None
        self._sf = sf
        factors = []
        idx = []
        if sf is not None:
            for i in range(k):
                d = sf.diag[i] if i < sf.rank else 0
                if d != 1:
                    factors.append(d)
                    idx.append(i)
        self.factors = factors          # 0 encodes a free summand Z
        self._idx = idx
        if sf is not None:
            ucols = columns(sf.Uinv)
            self.generators = [self._lift(ucols[i]) for i in idx]
        else:
            self.generators = []

    def _coords(self, v):
        if self.k == 0:
            return [] if not any(v) else None
        return self._solver.solve(v)

    def _lift(self, y):
        v = [0] * self.dim
        for c, b in zip(y, self.top):
            if c:
                for j in range(self.dim):
                    v[j] += c * b[j]
        return v

    def chart(self, v):
        """Coordinates of the class of v (a vector in span(top)) along the
        invariant-factor generators; torsion coordinates are reduced."""
        y = self._coords(v)
        if y is None:
            raise ValueError("vector not in the top lattice")
        if self.k == 0:
            return []
        z = matvec(self._sf.U, y)
        out = []
        for i, d in zip(self._idx, self.factors):
            out.append(z[i] % d if d else z[i])
        return out

    def contains_top(self, v):
        return self._coords(v) is not None

    def is_zero(self, v):
        return not any(self.chart(v))

    def order(self):
        if any(d == 0 for d in self.factors):
            return 0
        out = 1
        for d in self.factors:
            out *= d
        return out

    def structure(self):
        return list(self.factors)

    def lift(self, coords):
        v = [0] * self.dim
        for c, g in zip(coords, self.generators):
            if c:
                for j in range(self.dim):
                    v[j] += c * g[j]
        return v


def structure_of(factors):
    """Canonical invariant factor list (drop units, sort by divisibility)."""
    return [d for d in factors if d != 1]


def order_of(factors):
    out = 1
    for d in factors:
        if d == 0:
            return 0
        out *= d
    return out


def discriminant_group(gram):
    """Invariant factors of Z^n / gram Z^n (the discriminant group)."""
    return structure_of(smith(gram).diag)


def lcm(a, b):
    return a // gcd(a, b) * b if a and b else 0
