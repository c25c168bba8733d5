"""Cohomology of finite groups with coefficients in finitely presented
abelian groups.

A module is Z^n / R with R spanned by relation vectors, and a group element
acts by an integer n x n matrix preserving R.  Cocycles are recorded by their
values on a generating set; the cocycle identity c(gs) = c(g) + g c(s) along a
spanning tree of the Cayley graph determines c on every element and the
remaining edges give the linear conditions.  A full bar-resolution version
of H^1 and H^2 is kept for cross-checks on small groups.
"""
from collections import deque
from itertools import product

from . import intmat
from .errors import (ActionNotWellDefined, AmbientMismatch, NotEquivariant,
                     NotExact)


# ---------------------------------------------------------------- groups

class FiniteGroup:
    """A finite group given by labelled elements and a multiplication table."""

    def __init__(self, elements, mul_table, identity=None, generators=None):
        self.elements = list(elements)
        self.index = {e: k for k, e in enumerate(self.elements)}
        self.mul = mul_table
        n = len(self.elements)
        if identity is None:
            identity = next(k for k in range(n)
                            if all(mul_table[k][j] == j for j in range(n)))
        self.identity = identity
        self.inverse = [next(j for j in range(n) if mul_table[k][j] == identity)
                        for k in range(n)]
        self.generators = list(generators) if generators is not None else self._greedy_generators()

    @classmethod
    def from_operation(cls, elements, op, identity=None, generators=None):
        elements = list(elements)
        index = {e: k for k, e in enumerate(elements)}
        table = [[index[op(x, y)] for y in elements] for x in elements]
        ident = index[identity] if identity is not None else None
        gens = [index[g] for g in generators] if generators is not None else None
        return cls(elements, table, ident, gens)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def closure(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = self.mul[g][s]
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return seen

    def _greedy_generators(self):
        gens = []
        span = {self.identity}
        for k in range(self.order):
            if k not in span:
                gens.append(k)
                span = self.closure(gens)
        return gens

    def is_abelian(self):
        n = self.order
        return all(self.mul[i][j] == self.mul[j][i] for i in range(n) for j in range(n))

    def element_order(self, k):
        g, o = k, 1
        while g != self.identity:
            g = self.mul[g][k]
            o += 1
        return o

    def is_cyclic(self):
        return any(self.element_order(k) == self.order for k in range(self.order))

    def subgroup(self, members, generators=None):
        """The subgroup on a set of element indices, as a new FiniteGroup."""
        members = sorted(members)
        pos = {m: k for k, m in enumerate(members)}
        table = [[pos[self.mul[a][b]] for b in members] for a in members]
        gens = [pos[g] for g in generators] if generators is not None else None
        sub = FiniteGroup([self.elements[m] for m in members], table, pos[self.identity], gens)
        sub.parent_indices = members
        return sub

    def check_axioms(self):
        n = self.order
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                        return False
        return True


def cyclic_group(n):
    return FiniteGroup.from_operation(range(n), lambda x, y: (x + y) % n, 0, [1] if n > 1 else [])


def product_group(G, H):
    elems = [(g, h) for g in range(G.order) for h in range(H.order)]
    gens = [(g, H.identity) for g in G.generators] + [(G.identity, h) for h in H.generators]
    return FiniteGroup.from_operation(
        elems, lambda x, y: (G.mul[x[0]][y[0]], H.mul[x[1]][y[1]]),
        (G.identity, H.identity), gens)


# ---------------------------------------------------------------- modules

class Module:
    """Z^n / span(relations) with a group action by integer matrices."""

    def __init__(self, group, n, relations, action, name="", check=True):
        self.group = group
        self.n = n
        self.relations = intmat.span_basis([list(r) for r in relations if any(r)], n)
        self.action = [[list(row) for row in A] for A in action]
        self.name = name
        # congruence description of membership in R: U v has entry i divisible by moduli[i]
        if self.relations:
            sf = intmat.smith(intmat.from_columns(self.relations, n), n, len(self.relations))
            self._U = sf.U
            self._moduli = [sf.diag[i] if i < sf.rank else 0 for i in range(n)]
        else:
            self._U = intmat.identity(n)
            self._moduli = [0] * n
        if check:
            self.validate()

    # -- membership in R
    def in_relations(self, v):
        w = intmat.matvec(self._U, v)
        return all((x % m == 0) if m else x == 0 for x, m in zip(w, self._moduli))

    def congruences(self, rows):
        """Turn 'rows . x in R' (rows: n rows) into (row, modulus) pairs."""
        out = []
        for i in range(self.n):
            if self._moduli[i] == 1:
                continue
            r = [0] * len(rows[0])
            for k in range(self.n):
                c = self._U[i][k]
                if c:
                    row = rows[k]
                    for j, x in enumerate(row):
                        if x:
                            r[j] += c * x
            out.append((r, self._moduli[i]))
        return out

    def equal(self, u, v):
        return self.in_relations([a - b for a, b in zip(u, v)])

    def is_finite(self):
        return all(m != 0 for m in self._moduli)

    def order(self):
        if not self.is_finite():
            return 0
        out = 1
        for m in self._moduli:
            out *= m
        return out

    def act(self, g, v):
        return intmat.matvec(self.action[g], v)

    def validate(self):
        G = self.group
        n = self.n
        for A in self.action:
            for r in self.relations:
                if not self.in_relations(intmat.matvec(A, r)):
                    raise ActionNotWellDefined(f"{self.name}: action does not preserve relations")
        ident = self.action[G.identity]
        for k in range(n):
            e = [int(i == k) for i in range(n)]
            if not self.equal(intmat.matvec(ident, e), e):
                raise ActionNotWellDefined(f"{self.name}: identity acts nontrivially")
        for a in G.generators:
            for b in range(G.order):
                ab = intmat.matmul(self.action[a], self.action[b])
                C = self.action[G.mul[a][b]]
                for k in range(n):
                    if not self.in_relations([x - y for x, y in zip(intmat.columns(ab)[k], intmat.columns(C)[k])]):
                        raise ActionNotWellDefined(f"{self.name}: action is not a homomorphism")

    def restrict(self, subgroup):
        """Restriction to a subgroup built by FiniteGroup.subgroup."""
        action = [self.action[m] for m in subgroup.parent_indices]
        return Module(subgroup, self.n, self.relations, action, self.name, check=False)


def trivial_module(group, n, relations=()):
    return Module(group, n, relations, [intmat.identity(n)] * group.order, "trivial")


class ModuleMap:
    """An equivariant map M -> N given by an integer matrix (N.n x M.n)."""

    def __init__(self, source, target, matrix, check=True):
        if source.group is not target.group:
            raise AmbientMismatch("modules over different groups")
        self.source = source
        self.target = target
        self.matrix = [list(r) for r in matrix]
        if check:
            self.validate()

    def __call__(self, v):
        return intmat.matvec(self.matrix, v)

    def validate(self):
        M, N, F = self.source, self.target, self.matrix
        for r in M.relations:
            if not N.in_relations(intmat.matvec(F, r)):
                raise NotEquivariant("map does not send relations to relations")
        for g in range(M.group.order):
            left = intmat.matmul(F, M.action[g])
            right = intmat.matmul(N.action[g], F)
            for a, b in zip(intmat.columns(left), intmat.columns(right)):
                if not N.equal(a, b):
                    raise NotEquivariant("map does not commute with the action")


# ---------------------------------------------------------------- subgroups of a quotient

class Subgroup:
    """span(vectors) + bottom inside an ambient cocycle space, modulo bottom."""

    def __init__(self, space, vectors):
        self.space = space
        self.vectors = [list(v) for v in vectors if any(v)]
        self.quotient = intmat.SubQuotient(self.vectors + space.bottom, space.bottom, space.dim)

    def structure(self):
        return self.quotient.structure()

    def order(self):
        return self.quotient.order()

    def lattice(self):
        return intmat.span_basis(self.vectors + self.space.bottom, self.space.dim)


class CohomologySpace:
    """top / bottom inside Z^dim, with top the cocycle lattice."""

    def __init__(self, degree, module, dim, top, bottom, layout=None):
        self.degree = degree
        self.module = module
        self.dim = dim
        self.top = top
        self.bottom = intmat.span_basis(bottom, dim)
        self.quotient = intmat.SubQuotient(top, self.bottom, dim)
        self.layout = layout

    def structure(self):
        return self.quotient.structure()

    def order(self):
        return self.quotient.order()

    def generators(self):
        return self.quotient.generators

    def chart(self, v):
        return self.quotient.chart(v)

    def is_zero(self, v):
        return self.quotient.is_zero(v)

    def contains(self, v):
        return self.quotient.contains_top(v)

    def subgroup(self, vectors):
        for v in vectors:
            if not self.contains(v):
                raise AmbientMismatch("vector is not a cocycle of this space")
        return Subgroup(self, vectors)

    def whole(self):
        return Subgroup(self, self.top)

    def elements(self):
        """Representatives of all classes (finite spaces only)."""
        q = self.quotient
        for coords in product(*[range(f) for f in q.factors]):
            yield q.lift(list(coords))


def intersect(sub1, sub2):
    """Intersection of two subgroups of one CohomologySpace."""
    if sub1.space is not sub2.space:
        raise AmbientMismatch("subgroups of different cohomology spaces")
    space = sub1.space
    lat = intmat.intersect_lattices(sub1.lattice(), sub2.lattice(), space.dim)
    return Subgroup(space, lat)


def sum_subgroups(sub1, sub2):
    if sub1.space is not sub2.space:
        raise AmbientMismatch("subgroups of different cohomology spaces")
    return Subgroup(sub1.space, sub1.vectors + sub2.vectors)


# ---------------------------------------------------------------- H^0

def h0(module):
    G, n = module.group, module.n
    congr = []
    for s in G.generators:
        A = module.action[s]
        rows = [[A[i][j] - int(i == j) for j in range(n)] for i in range(n)]
        congr.extend(module.congruences(rows))
    top = intmat.congruence_kernel([c[0] for c in congr], [c[1] for c in congr], n)
    top = intmat.span_basis(top + module.relations, n)
    return CohomologySpace(0, module, n, top, module.relations)


# ---------------------------------------------------------------- H^1 on generators

class _Tree:
    """Spanning tree of the Cayley graph for the group's generators."""

    def __init__(self, group, gens):
        self.group = group
        self.gens = list(gens)
        parent = {group.identity: None}
        order = [group.identity]
        queue = deque([group.identity])
        tree_edges = set()
        while queue:
            g = queue.popleft()
            for si, s in enumerate(self.gens):
                h = group.mul[g][s]
                if h not in parent:
                    parent[h] = (g, si)
                    tree_edges.add((g, si))
                    order.append(h)
                    queue.append(h)
        self.parent = parent
        self.order = order
        self.tree_edges = tree_edges
        self.other_edges = [(g, si) for g in order for si in range(len(self.gens))
                            if (g, si) not in tree_edges]


def _cochain_values(module, tree):
    """c(g) as an n x (n r) matrix, linear in the generator values x."""
    G, n, r = module.group, module.n, len(tree.gens)
    N = n * r
    vals = {G.identity: intmat.zeros(n, N)}
    for h in tree.order[1:]:
        g, si = tree.parent[h]
        A = module.action[g]
        M = [row[:] for row in vals[g]]
        for i in range(n):
            for j in range(n):
                if A[i][j]:
                    M[i][si * n + j] += A[i][j]
        vals[h] = M
    return vals


def _cocycle_conditions(module, tree, vals):
    G, n = module.group, module.n
    rows_all = []
    for g, si in tree.other_edges:
        h = G.mul[g][tree.gens[si]]
        A = module.action[g]
        rows = []
        for i in range(n):
            row = [a - b for a, b in zip(vals[h][i], vals[g][i])]
            for j in range(n):
                if A[i][j]:
                    row[si * n + j] -= A[i][j]
            rows.append(row)
        rows_all.extend(module.congruences(rows))
    return rows_all


def _relations_blocks(module, r):
    out = []
    for si in range(r):
        for v in module.relations:
            w = [0] * (module.n * r)
            w[si * module.n:(si + 1) * module.n] = v
            out.append(w)
    return out


def _coboundaries(module, gens):
    n, r = module.n, len(gens)
    out = []
    for k in range(n):
        w = []
        for s in gens:
            A = module.action[s]
            w.extend(A[i][k] - int(i == k) for i in range(n))
        out.append(w)
    return out


class H1Space(CohomologySpace):
    """H^1 with cocycles recorded on the generators (concatenated values)."""

    def __init__(self, module, gens=None):
        G = module.group
        gens = list(G.generators if gens is None else gens)
        tree = _Tree(G, gens)
        if len(tree.order) != G.order:
            raise ValueError("elements do not generate the group")
        n, r = module.n, len(gens)
        self.gens = gens
        self.tree = tree
        self._vals = None
        vals = _cochain_values(module, tree)
        conds = _cocycle_conditions(module, tree, vals)
        N = n * r
        top = intmat.congruence_kernel([c[0] for c in conds], [c[1] for c in conds], N)
        rel = _relations_blocks(module, r)
        top = intmat.span_basis(top + rel, N)
        bottom = _coboundaries(module, gens) + rel
        self._vals = vals
        super().__init__(1, module, N, top, bottom)

    def value(self, x, g):
        """c(g) for the cocycle with generator values x."""
        return intmat.matvec(self._vals[g], x)

    def full_cocycle(self, x):
        return [self.value(x, g) for g in range(self.module.group.order)]

    def from_full(self, values):
        """Generator values of a cocycle given on every element."""
        out = []
        for s in self.gens:
            out.extend(values[s])
        return out


def h1(module, gens=None):
    return H1Space(module, gens)


def h(i, module):
    if i == 0:
        return h0(module)
    if i == 1:
        return h1(module)
    if i == 2:
        return h2_bar(module)
    raise ValueError("degree must be 0, 1 or 2")


# ---------------------------------------------------------------- bar resolution (small groups)

def h1_bar(module):
    """H^1 from all inhomogeneous 1-cochains; used as a cross-check."""
    G, n = module.group, module.n
    m = G.order
    N = n * m
    congr = []
    for g in range(m):
        A = module.action[g]
        for h_ in range(m):
            gh = G.mul[g][h_]
            rows = []
            for i in range(n):
                row = [0] * N
                row[gh * n + i] += 1
                row[g * n + i] -= 1
                for j in range(n):
                    if A[i][j]:
                        row[h_ * n + j] -= A[i][j]
                rows.append(row)
            congr.extend(module.congruences(rows))
    top = intmat.congruence_kernel([c[0] for c in congr], [c[1] for c in congr], N)
    rel = _relations_blocks(module, m)
    top = intmat.span_basis(top + rel, N)
    bottom = []
    for k in range(n):
        w = []
        for g in range(m):
            A = module.action[g]
            w.extend(A[i][k] - int(i == k) for i in range(n))
        bottom.append(w)
    return CohomologySpace(1, module, N, top, bottom + rel)


def h2_bar(module):
    """H^2 from all inhomogeneous 2-cochains (intended for |G| <= 16)."""
    G, n = module.group, module.n
    m = G.order
    N = n * m * m

    def pos(g, h_):
        return (g * m + h_) * n

    congr = []
    for g, h_, k in product(range(m), repeat=3):
        A = module.action[g]
        rows = []
        # g c(h,k) - c(gh,k) + c(g,hk) - c(g,h) = 0
        for i in range(n):
            row = [0] * N
            for j in range(n):
                if A[i][j]:
                    row[pos(h_, k) + j] += A[i][j]
            row[pos(G.mul[g][h_], k) + i] -= 1
            row[pos(g, G.mul[h_][k]) + i] += 1
            row[pos(g, h_) + i] -= 1
            rows.append(row)
        congr.extend(module.congruences(rows))
    top = intmat.congruence_kernel([c[0] for c in congr], [c[1] for c in congr], N)
    rel = _relations_blocks(module, m * m)
    top = intmat.span_basis(top + rel, N)
    bottom = []
    # d of 1-cochains: (df)(g,h) = g f(h) - f(gh) + f(g)
    for f_idx in range(m):
        for k in range(n):
            w = [0] * N
            for g in range(m):
                A = module.action[g]
                for h_ in range(m):
                    p = pos(g, h_)
                    if h_ == f_idx:
                        for i in range(n):
                            w[p + i] += A[i][k]
                    if G.mul[g][h_] == f_idx:
                        w[p + k] -= 1
                    if g == f_idx:
                        w[p + k] += 1
            bottom.append(w)
    return CohomologySpace(2, module, N, top, bottom + rel)


# ---------------------------------------------------------------- maps

class InducedMap:
    """The map H^i(M) -> H^i(N) induced by an equivariant map (i = 0, 1)."""

    def __init__(self, fmap, source_space, target_space):
        if source_space.degree != target_space.degree:
            raise AmbientMismatch("degrees differ")
        self.fmap = fmap
        self.source = source_space
        self.target = target_space
        if source_space.degree == 1 and source_space.gens != target_space.gens:
            raise AmbientMismatch("H^1 spaces use different generating sets")

    def apply(self, x):
        F = self.fmap.matrix
        n_src = self.fmap.source.n
        if self.source.degree == 0:
            return intmat.matvec(F, x)
        out = []
        for si in range(len(self.source.gens)):
            out.extend(intmat.matvec(F, x[si * n_src:(si + 1) * n_src]))
        return out

    def image(self):
        vecs = [self.apply(v) for v in self.source.top]
        return self.target.subgroup(vecs)

    def kernel(self):
        src, tgt = self.source, self.target
        imgs = [self.apply(v) for v in src.top]
        # combinations of top vectors whose image lies in the target bottom
        cols = imgs + [[-x for x in b] for b in tgt.bottom]
        ker = intmat.kernel(intmat.from_columns(cols, tgt.dim), len(cols)) if cols else []
        vecs = []
        for y in ker:
            v = [0] * src.dim
            for c, t in zip(y[:len(src.top)], src.top):
                if c:
                    for k in range(src.dim):
                        v[k] += c * t[k]
            vecs.append(v)
        return src.subgroup(vecs)

    def cokernel_order(self):
        img = self.image()
        return _quotient_order(self.target.order(), img.order())

    def matrix_on_charts(self):
        return [self.target.chart(self.apply(g)) for g in self.source.generators()]


def _quotient_order(total, sub):
    if total == 0 or sub == 0:
        return 0
    return total // sub


def induced_map(fmap, i, source_space=None, target_space=None, gens=None):
    if i == 0:
        src = source_space or h0(fmap.source)
        tgt = target_space or h0(fmap.target)
    elif i == 1:
        src = source_space or h1(fmap.source, gens)
        tgt = target_space or h1(fmap.target, src.gens)
    else:
        raise ValueError("induced maps are implemented for i = 0, 1")
    return InducedMap(fmap, src, tgt)


class ShortExactSequence:
    """0 -> A -> B -> C -> 0 given by equivariant maps i: A -> B and p: B -> C."""

    def __init__(self, inc, proj, check=True):
        if inc.target is not proj.source:
            raise NotExact("maps do not compose")
        self.inc = inc
        self.proj = proj
        self.A, self.B, self.C = inc.source, inc.target, proj.target
        self._p_solver = intmat.Solver(
            intmat.from_columns(intmat.columns(proj.matrix) + self.C.relations, self.C.n),
            self.C.n, self.B.n + len(self.C.relations))
        self._i_solver = intmat.Solver(
            intmat.from_columns(intmat.columns(inc.matrix) + self.B.relations, self.B.n),
            self.B.n, self.A.n + len(self.B.relations))
        if check:
            self.validate()

    def lift_to_B(self, c):
        y = self._p_solver.solve(list(c))
        if y is None:
            raise NotExact("projection is not surjective")
        return y[:self.B.n]

    def pull_to_A(self, b):
        y = self._i_solver.solve(list(b))
        if y is None:
            return None
        return y[:self.A.n]

    def validate(self):
        A, B, C = self.A, self.B, self.C
        if not (A.is_finite() and B.is_finite() and C.is_finite()):
            raise NotExact("exactness is only checked for finite modules")
        if A.order() * C.order() != B.order():
            raise NotExact("orders do not multiply")
        for k in range(A.n):
            e = [int(i == k) for i in range(A.n)]
            if not C.in_relations(self.proj(self.inc(e))):
                raise NotExact("p o i is not zero")
        for k in range(C.n):
            self.lift_to_B([int(i == k) for i in range(C.n)])
        # injectivity of i on A: kernel of A -> B is trivial
        img = intmat.SubQuotient(
            [self.inc([int(i == k) for i in range(A.n)]) for k in range(A.n)] + B.relations,
            B.relations, B.n)
        if img.order() != A.order():
            raise NotExact("inclusion is not injective")

    def connecting(self, c, h1_A):
        """Snake-lemma image in H^1(A) (generator values) of a class c in H^0(C)."""
        b = self.lift_to_B(c)
        out = []
        for s in h1_A.gens:
            diff = [x - y for x, y in zip(self.B.act(s, b), b)]
            a = self.pull_to_A(diff)
            if a is None:
                raise NotExact("coboundary of the lift does not come from A")
            out.extend(a)
        return out

    def connecting_image(self, h0_C=None, h1_A=None):
        h0_C = h0_C or h0(self.C)
        h1_A = h1_A or h1(self.A)
        vecs = [self.connecting(v, h1_A) for v in h0_C.top]
        return h1_A.subgroup(vecs)

    def six_term_orders(self, gens=None):
        """Orders in H0(A) H0(B) H0(C) H1(A) H1(B) H1(C) and a flag for exactness."""
        A, B, C = self.A, self.B, self.C
        H0 = [h0(M) for M in (A, B, C)]
        H1 = [h1(A, gens)]
        H1 += [h1(M, H1[0].gens) for M in (B, C)]
        i0 = InducedMap(self.inc, H0[0], H0[1])
        p0 = InducedMap(self.proj, H0[1], H0[2])
        i1 = InducedMap(self.inc, H1[0], H1[1])
        p1 = InducedMap(self.proj, H1[1], H1[2])
        delta_img = self.connecting_image(H0[2], H1[0])
        checks = {
            "H0A_injects": i0.kernel().order() == 1,
            "exact_H0B": i0.image().order() == p0.kernel().order(),
            "exact_H0C": p0.image().order() * delta_img.order() == H0[2].order(),
            "exact_H1A": delta_img.order() == i1.kernel().order(),
            "exact_H1B": i1.image().order() == p1.kernel().order(),
        }
        orders = [s.order() for s in H0 + H1]
        return orders, checks


# ---------------------------------------------------------------- hypercohomology

class HyperH1:
    """H^1 of the complex [A -f-> B] (A in degree 0).

    Cochains: generator values x of a 1-cochain in A and b in B with
    (x cocycle, f(x_s) = s b - b mod R_B); coboundaries from a0 in A are
    (d a0, f(a0)).
    """

    def __init__(self, fmap, gens=None):
        A, B = fmap.source, fmap.target
        G = A.group
        gens = list(G.generators if gens is None else gens)
        tree = _Tree(G, gens)
        nA, nB, r = A.n, B.n, len(gens)
        N = nA * r + nB
        self.gens = gens
        self.fmap = fmap
        self.nA, self.nB, self.r = nA, nB, r
        vals = _cochain_values(A, tree)
        congr = []
        for row, m in _cocycle_conditions(A, tree, vals):
            congr.append((row + [0] * nB, m))
        F = fmap.matrix
        for si, s in enumerate(gens):
            As = B.action[s]
            rows = []
            for i in range(nB):
                row = [0] * N
                for j in range(nA):
                    if F[i][j]:
                        row[si * nA + j] += F[i][j]
                for j in range(nB):
                    c = As[i][j] - int(i == j)
                    if c:
                        row[nA * r + j] -= c
                rows.append(row)
            congr.extend(B.congruences(rows))
        top = intmat.congruence_kernel([c[0] for c in congr], [c[1] for c in congr], N)
        rel = [v + [0] * nB for v in _relations_blocks(A, r)]
        rel += [[0] * (nA * r) + list(v) for v in B.relations]
        top = intmat.span_basis(top + rel, N)
        bottom = []
        for k in range(nA):
            w = []
            for s in gens:
                As = A.action[s]
                w.extend(As[i][k] - int(i == k) for i in range(nA))
            w.extend(F[i][k] for i in range(nB))
            bottom.append(w)
        self.space = CohomologySpace(1, None, N, top, bottom + rel)

    def structure(self):
        return self.space.structure()

    def order(self):
        return self.space.order()

    def les_orders(self):
        """(|coker(H0 A -> H0 B)|, |ker(H1 A -> H1 B)|) from the long exact sequence."""
        f = self.fmap
        i0 = induced_map(f, 0)
        h1A = h1(f.source, self.gens)
        h1B = h1(f.target, self.gens)
        i1 = InducedMap(f, h1A, h1B)
        return i0.cokernel_order(), i1.kernel().order()

    def check_les(self):
        coker, ker = self.les_orders()
        return coker * ker == self.order()

    def forget_to_h1(self, v):
        """Projection of a hypercocycle to its A-part."""
        return v[:self.nA * self.r]


def hyper_h1(fmap, gens=None):
    return HyperH1(fmap, gens)


# ---------------------------------------------------------------- helpers

def fixed_subgroup_order(module, elements=None):
    """Order of M^S for S a set of element indices (finite modules), by enumeration."""
    G = module.group
    S = range(G.order) if elements is None else elements
    q = intmat.SubQuotient([[int(i == k) for i in range(module.n)] for k in range(module.n)],
                           module.relations, module.n)
    count = 0
    for coords in product(*[range(f) for f in q.factors]):
        v = q.lift(list(coords))
        if all(module.equal(module.act(g, v), v) for g in S):
            count += 1
    return count
