import random

import pytest

from diagbrauer import intmat
from diagbrauer.cohomology import (FiniteGroup, Module, ModuleMap, ShortExactSequence,
                                   cyclic_group, h, h0, h1, h1_bar, h2_bar, hyper_h1,
                                   intersect, product_group, sum_subgroups, trivial_module)
from diagbrauer.errors import ActionNotWellDefined, AmbientMismatch, NotEquivariant, NotExact
from diagbrauer.galois import build_group, picard_action, picard_dual_action, br_level_action


def powers(M, n):
    out = [intmat.identity(len(M))]
    for _ in range(n - 1):
        out.append(intmat.matmul(M, out[-1]))
    return out


def cyclic_module(n, M, relations, name="M"):
    return Module(cyclic_group(n), len(M), relations, powers(M, n), name)


def gaussian_level_module(n, unit, k):
    a, b = unit
    m = 2 ** k
    return cyclic_module(n, [[a, -b], [b, a]], [[m, 0], [0, m]], f"O/{m}")


def klein_four():
    return product_group(cyclic_group(2), cyclic_group(2))


SIGN = [[-1]]


# ---------------------------------------------------------------- oracles

@pytest.mark.parametrize("n, m, expected", [(4, 0, []), (4, 8, [4]), (6, 4, [2]), (3, 5, [])])
def test_h1_trivial_module_is_hom(n, m, expected):
    rel = [[m]] if m else []
    M = trivial_module(cyclic_group(n), 1, rel)
    assert sorted(h1(M).structure()) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_h2_cyclic_trivial_integers(n):
    assert h2_bar(trivial_module(cyclic_group(n), 1)).structure() == [n]


def test_sign_module_on_z():
    M = cyclic_module(2, SIGN, [])
    assert h1(M).structure() == [2]
    assert h0(M).structure() == []
    assert h2_bar(M).structure() == []


def test_one_plus_4i_on_o_mod_8():
    M = gaussian_level_module(4, (1, 4), 3)
    assert sorted(h1(M).structure()) == [2, 2]
    assert sorted(h0(M).structure()) == [4, 4]


def test_klein_four_trivial_coefficients():
    V = klein_four()
    assert sorted(h1(trivial_module(V, 1, [[2]])).structure()) == [2, 2]
    assert sorted(h2_bar(trivial_module(V, 1)).structure()) == [2, 2]
    assert sorted(h2_bar(trivial_module(V, 1, [[2]])).structure()) == [2, 2, 2]


def test_dispatch_by_degree():
    M = cyclic_module(2, SIGN, [])
    assert [h(i, M).structure() for i in range(3)] == [[], [2], []]
    with pytest.raises(ValueError):
        h(3, M)


# ---------------------------------------------------------------- cross-checks

def _small_modules():
    V = klein_four()
    swap = [[0, 1], [1, 0]]
    neg = [[-1, 0], [0, -1]]
    acts = [intmat.identity(2), swap, neg, intmat.matmul(swap, neg)]
    yield Module(V, 2, [[4, 0], [0, 4]], acts, "Z/4^2")
    yield Module(V, 2, [], acts, "Z^2")
    yield gaussian_level_module(4, (1, 4), 3)
    yield gaussian_level_module(4, (0, 1), 2)
    yield cyclic_module(3, [[0, -1], [1, -1]], [], "A2")
    yield cyclic_module(6, [[0, -1], [1, 1]], [[3, 0], [0, 3]], "Z[w]/3")


@pytest.mark.parametrize("module", list(_small_modules()), ids=lambda m: m.name)
def test_h1_matches_full_bar(module):
    assert sorted(h1(module).structure()) == sorted(h1_bar(module).structure())


def test_h1_on_galois_modules_matches_full_bar():
    g = build_group((1, 1, 1), "Qi")
    for M in (picard_action(g), picard_dual_action(g), br_level_action(g, 4).module()):
        assert sorted(h1(M).structure()) == sorted(h1_bar(M).structure())


@pytest.mark.parametrize("seed", range(4))
def test_h1_independent_of_generating_set(seed):
    g = build_group((1, 2, -2), "Q", True)
    M = picard_dual_action(g)
    base = sorted(h1(M).structure())
    rng = random.Random(seed)
    gens = list(range(g.order))
    rng.shuffle(gens)
    gens = [x for x in gens if x != g.identity]
    chosen = []
    for x in gens:
        if len(g.closure(chosen)) == g.order:
            break
        chosen.append(x)
    chosen += gens[len(chosen):len(chosen) + 2]
    assert sorted(h1(M, chosen).structure()) == base


# ---------------------------------------------------------------- validation errors

def test_action_not_homomorphism_rejected():
    with pytest.raises(ActionNotWellDefined):
        Module(cyclic_group(3), 1, [], [[[1]], [[-1]], [[1]]])


def test_action_not_preserving_relations_rejected():
    with pytest.raises(ActionNotWellDefined):
        Module(cyclic_group(2), 2, [[2, 0]], [intmat.identity(2), [[0, 1], [1, 0]]])


def test_non_equivariant_map_rejected():
    A = cyclic_module(2, SIGN, [])
    B = trivial_module(A.group, 1)
    with pytest.raises(NotEquivariant):
        ModuleMap(A, B, [[1]])


def test_non_exact_sequence_rejected():
    G = cyclic_group(2)
    A = trivial_module(G, 1, [[2]])
    B = trivial_module(G, 1, [[4]])
    C = trivial_module(G, 1, [[4]])
    with pytest.raises(NotExact):
        ShortExactSequence(ModuleMap(A, B, [[2]]), ModuleMap(B, C, [[1]]))


def test_subgroups_of_different_spaces_do_not_meet():
    M = gaussian_level_module(4, (1, 4), 3)
    s1 = h1(M).whole()
    s2 = h0(M).whole()
    with pytest.raises(AmbientMismatch):
        intersect(s1, s2)
    with pytest.raises(AmbientMismatch):
        sum_subgroups(s1, s2)


# ---------------------------------------------------------------- exact sequences

def _sequences():
    G = cyclic_group(2)
    A = trivial_module(G, 1, [[2]])
    B = trivial_module(G, 1, [[4]])
    yield "Z/2-Z/4-Z/2", ShortExactSequence(ModuleMap(A, B, [[2]]), ModuleMap(B, A, [[1]]))
    for k_top in (4, 5):
        g = build_group((1, 2, 8), "Qi", True)
        top = br_level_action(g, k_top).module()
        low = br_level_action(g, 3).module()
        quot = br_level_action(g, k_top - 3).module()
        s = 2 ** (k_top - 3)
        yield f"O/8-O/{2 ** k_top}", ShortExactSequence(
            ModuleMap(low, top, [[s, 0], [0, s]]), ModuleMap(top, quot, intmat.identity(2)))


@pytest.mark.parametrize("name, seq", list(_sequences()), ids=lambda x: x if isinstance(x, str) else "")
def test_six_term_exactness(name, seq):
    orders, checks = seq.six_term_orders()
    assert all(checks.values()), checks
    assert orders[0] * orders[2] <= orders[1] * orders[3] * orders[5]


# ---------------------------------------------------------------- product splitting

def _two_torsion(structure):
    return [2 for d in structure if d % 2 == 0]


def test_product_splitting_synthetic():
    # G = Z/4 acting by 1+4i on O/8, H = Z/2 acting trivially
    G, H = cyclic_group(4), cyclic_group(2)
    P = product_group(G, H)
    M = [[1, -4], [4, 1]]
    acts = [powers(M, 4)[P.elements[x][0]] for x in range(P.order)]
    mod = Module(P, 2, [[8, 0], [0, 8]], acts)
    lhs = sorted(h1(mod).structure())
    base = gaussian_level_module(4, (1, 4), 3)
    rhs = sorted(_two_torsion(h0(base).structure()) + h1(base).structure())
    assert lhs == rhs == [2, 2, 2, 2]


def test_product_splitting_on_square_class_configuration():
    # (9, 18, 8) over Q(i): the sqrt 3 factor acts trivially on Delta
    g = build_group((9, 18, 8), "Qi")
    delta = br_level_action(g, 3).module()
    trivial_part = [x for x in range(g.order) if g.elements[x][0] == 1 and g.elements[x][1] == 0]
    two_part = [x for x in range(g.order) if g.elements[x][2] == 0]
    assert len(trivial_part) == 2 and len(two_part) * 2 == g.order
    for x in trivial_part:
        assert delta.action[x] == intmat.identity(2) or all(
            (u - v) % 8 == 0 for r1, r2 in zip(delta.action[x], intmat.identity(2))
            for u, v in zip(r1, r2))
    A = g.subgroup(two_part)
    restricted = delta.restrict(A)
    lhs = sorted(h1(delta).structure())
    rhs = sorted(_two_torsion(h0(restricted).structure()) + h1(restricted).structure())
    assert lhs == rhs


# ---------------------------------------------------------------- duality and hypercohomology

@pytest.mark.parametrize("a, field, tilde", [
    ((1, 1, 1), "Qi", False), ((1, 2, -2), "Qi", True), ((1, 1, 2), "Qi", False),
])
def test_cyclic_duality_cardinality(a, field, tilde):
    g = build_group(a, field, tilde)
    assert g.is_cyclic()
    assert h1(picard_action(g)).order() == h1(picard_dual_action(g)).order()


def test_hypercohomology_with_zero_target_is_h1():
    g = build_group((1, 1, 1), "Qi")
    A = picard_dual_action(g)
    zero = Module(g, 1, [[1]], [[[1]]] * g.order, "0")
    hyper = hyper_h1(ModuleMap(A, zero, [[0] * A.n]))
    assert sorted(hyper.structure()) == sorted(h1(A).structure())
    assert hyper.check_les()


def test_hypercohomology_of_identity_is_zero():
    M = gaussian_level_module(4, (1, 4), 3)
    hyper = hyper_h1(ModuleMap(M, M, intmat.identity(2)))
    assert hyper.order() == 1
    assert hyper.check_les()


def test_group_axioms():
    g = FiniteGroup.from_operation(range(6), lambda x, y: (x + y) % 6, 0)
    assert g.check_axioms() and g.is_cyclic() and g.is_abelian()
    assert not klein_four().is_cyclic()
