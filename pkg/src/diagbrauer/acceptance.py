"""The acceptance suite: twelve end-to-end checks with expected and computed
values, tags for filtering and a time budget each.

A criterion passes when every computed value equals its expectation and the
run finishes within its budget.
"""
import time
from dataclasses import dataclass, field

from . import frobenius, galois, intmat, lines, pipeline
from .cohomology import Module, cyclic_group, h0, h1
from .fermat import build_full, build_primitive, build_transcendental
from .gaussian import iter_split_primary_primes
from .picard import build_picard

SMALL_TRIPLES = [(1, 1, 2), (1, 1, 4), (1, 1, 8), (1, 2, 2), (1, 2, 4), (1, 4, 4), (1, 4, 8), (2, 4, 8)]
RATIONAL_CASES = [(1, 2, 8), (1, -2, -8), (2, -2, -4), (-2, 4, 8), (1, 2, -2), (1, 8, -8)]


@dataclass
class Criterion:
    number: int
    title: str
    tags: tuple
    budget: float
    run: callable


@dataclass
class Outcome:
    number: int
    title: str
    tags: tuple
    checks: list = field(default_factory=list)   # (label, expected, computed)
    seconds: float = 0.0
    budget: float = 0.0
    error: str = None

    @property
    def correct(self):
        return self.error is None and all(e == c for _, e, c in self.checks)

    @property
    def passed(self):
        return self.correct and self.seconds <= self.budget

    def as_dict(self):
        return {
            "number": self.number,
            "title": self.title,
            "tags": list(self.tags),
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "budget_seconds": self.budget,
            "error": self.error,
            "checks": [{"label": l, "expected": e, "computed": c, "ok": e == c}
                       for l, e, c in self.checks],
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


# ---------------------------------------------------------------- criteria

def lattice_ranks():
    return [("rank P for d = 2, 3, 4", [1, 6, 21], [build_primitive(d).rank for d in (2, 3, 4)])]


def unimodularity():
    out = []
    for d in range(3, 7):
        H = build_full(d)
        lam, L = H.line_class, H.hyperplane
        x = [d * a - b for a, b in zip(lam, L)]
        out.append((f"d={d}: |det|, <Lam,Lam>, <Lam,L>, <dLam-L,dLam-L>",
                    [1, -(d - 2), 1, -d * (d - 1) ** 2],
                    [abs(H.det), H.cup(lam, lam), H.cup(lam, L), H.cup(x, x)]))
    return out


def transcendental_lattice():
    H = build_full(4)
    T = build_transcendental()
    A = H.g_actions[0]
    orbit = [T.w1]
    for _ in range(4):
        orbit.append(intmat.matvec(A, orbit[-1]))
    order = next(k for k in range(1, 5) if orbit[k] == T.w1)
    neg = [-x for x in T.w2]
    return [
        ("Gram(T)", [[8, 0], [0, 8]], T.gram),
        ("order of the [i]-action on T", 4, order),
        ("tau fixes w1, negates w2", [True, True],
         [intmat.matvec(H.tau, T.w1) == T.w1, intmat.matvec(H.tau, T.w2) == neg]),
    ]


def picard_lattice():
    pic = build_picard()
    gram = lines.incidence_gram()
    return [
        ("rank Pic", 20, pic.rank),
        ("Pic*/Pic via the orthogonal complement of T", [8, 8], pic.discriminant_structure()),
        ("line lattice (rank, discriminant) from the 48x48 incidence Gram", [20, [8, 8]],
         list(lines.line_lattice_structure())),
        ("number of lines", 48, len(lines.LINES)),
        ("self-intersections", [-2], sorted({gram[i][i] for i in range(len(gram))})),
        ("line classes span Pic", True, lines.lines_span_picard()),
    ]


def quadric_divisors():
    q = lines.quadric_checks()
    pic = build_picard()
    dp = pic.coords(lines.divisor_class(lines.d_plus_lines()))
    return [
        ("pairings of D+ with the 48 lines are even", True, all(v % 2 == 0 for v in q["d_plus_pairings"])),
        ("D+ + D- = 2L in the line lattice", True, q["relation_in_radical"]),
        ("D+ + D- = 2L in H", True, q["relation_in_H"]),
        ("D+ nonzero in Pic/2 (line lattice)", False, q["d_plus_divisible_by_two"]),
        ("D+ nonzero in Pic/2 (Pic coordinates)", False, all(v % 2 == 0 for v in dp)),
    ]


def invariant_towers():
    sampler = galois.default_sampler()
    towers = galois.tower_fixed_structures(sampler=sampler)
    return [
        ("fixed subgroups of O/64", {
            "k": [4, 4], "k(sqrt2)": [8, 8], "k(4th root of -2)": [16, 16],
            "k(8th root of -2)": [32, 32]}, towers),
        ("primes per tuple class", True, galois.SAMPLES_PER_CLASS >= 3),
        ("sampling well defined at levels 3, 4, 5 (classes)", [2, 4, 8],
         [galois.sampling_well_defined(k, sampler) for k in (3, 4, 5)]),
    ]


def _split_primes(norms):
    found = {}
    for p in iter_split_primary_primes(5):
        if p.norm > max(norms):
            break
        if p.norm in norms:
            found[p.norm] = p
    return [found[n] for n in norms]


def character_sum_counts():
    norms = [5, 13, 17, 29, 37]
    primes = _split_primes(norms)
    out = []
    for a in [(1, 1, 1), (1, 2, -2), (1, 8, -8), (2, -2, -4)]:
        out.append((f"a={a}: counts at p={norms}",
                    [frobenius.count_points(a, p) for p in norms],
                    [frobenius.weil_count(a, pi) for pi in primes]))
    return out


def minus_four_twist():
    qs = [5, 9, 13, 17, 25, 29, 37, 41]
    res = frobenius.compare_minus_four_twist((1, 1, 1), qs)
    return [
        ("prime powers compared", qs, [r["q"] for r in res["rows"]]),
        ("|X(F_q)| for (1,1,1)", [r["count"] for r in res["rows"]], [r["twist_count"] for r in res["rows"]]),
    ]


def anchor_values():
    out = []
    v = pipeline.verify_case((1, 2, 8), "Qi")
    out.append(("(i) cokernel of H0(Pic*) -> H0(Delta), (1,2,8)/Q(i)", 2, v["h0_cokernel_order"]))
    g = galois.build_group((1, 2, 8), "Qi")
    act = galois.br_level_action(g, 3)
    out.append(("(ii) H1(G, Delta), (1,2,8)/Q(i)", [2, 2], v["h1_delta"]))
    out.append(("(ii) some generator acts by 1+4i", True,
                any(act.table[x] == ((1, 4), False) for x in g.generators)))
    out.append(("(ii) H1(Z/4, O/8) with 1+4i", [2, 2],
                sorted(h1(_cyclic_level_module((1, 4), 4, 3)).structure())))
    for a in [(1, 2, 2), (1, 2, 4), (1, 4, 8)]:
        out.append((f"(iii) H0 surjective for {a}/Q(i)", 1,
                    pipeline.verify_case(a, "Qi")["h0_cokernel_order"]))
    for a in [(1, 2, 8), (1, -2, -8), (2, -2, -4)]:
        w = pipeline.verify_case(a, "Q")
        out.append((f"(iv) H1(G, Delta) and intersection for {a}/Q", [[2, 2, 2, 2], []],
                    [w["h1_delta"], w["intersection"]]))
    for a in [(1, 2, -2), (1, 8, -8)]:
        w = pipeline.verify_case(a, "Q", trace=True)
        out.append((f"(v) H1(Pic*) -> H1(Delta) for {a}/Q", [[4], [2], [2]],
                    [w["trace"]["h1_dual"], w["image_h1_dual"], w["h1_delta"]]))
    w = pipeline.verify_case((-2, 4, 8), "Q")
    out.append(("(v) image for (-2,4,8)/Q is zero in Z/2", [[], [2]], [w["image_h1_dual"], w["h1_delta"]]))
    return out


def _cyclic_level_module(unit, n, k):
    a, b = unit
    m = 2 ** k
    M = [[a, -b], [b, a]]
    acts = [intmat.identity(2)]
    for _ in range(n - 1):
        acts.append(intmat.matmul(M, acts[-1]))
    return Module(cyclic_group(n), 2, [[m, 0], [0, m]], acts, f"O/{m}")


def main_classification():
    out = []
    for field_, cases in (("Qi", [(1, 2, 8), (1, 2, -2)] + SMALL_TRIPLES),
                          ("Q", RATIONAL_CASES + SMALL_TRIPLES)):
        for a in cases:
            r = pipeline.classify(a, field_, prove=True)
            expected = [2] if (field_ == "Qi" and a in [(1, 2, 8), (1, 2, -2)]) or \
                (field_ == "Q" and a in [(1, 2, -2), (1, 8, -8)]) else []
            out.append((f"{a}/{field_}: classify, verify", [expected, expected],
                        [r["transcendental_2_part"], r["verified_2_part"]]))
    return out


def supplement():
    return [
        ("(1,2,-2)/Q(i)", {"left": [2, 4], "middle": [4, 4], "right": [2]},
         pipeline.extension_structure((1, 2, -2), "Qi")),
        ("(1,2,-2)/Q", {"left": [4], "middle": [8], "right": [2]},
         pipeline.extension_structure((1, 2, -2), "Q")),
        ("(1,8,-8)/Q", {"left": [4], "middle": [8], "right": [2]},
         pipeline.extension_structure((1, 8, -8), "Q")),
    ]


def _two_torsion(structure):
    return [2 for d in structure if d % 2 == 0]


def property_suites():
    out = []
    # splitting for a product with a trivially acting factor
    g = galois.build_group((9, 18, 8), "Qi")
    delta = galois.br_level_action(g, 3).module()
    trivial_ok = all(
        all((x - y) % 8 == 0 for r1, r2 in zip(delta.action[e], intmat.identity(2)) for x, y in zip(r1, r2))
        for e in range(g.order) if g.elements[e][:2] == (1, 0))
    A = g.subgroup([e for e in range(g.order) if g.elements[e][2] == 0])
    res = delta.restrict(A)
    out.append(("product splitting on (9,18,8)/Q(i): trivial factor, H1 decomposition",
                [True, sorted(_two_torsion(h0(res).structure()) + h1(res).structure())],
                [trivial_ok, sorted(h1(delta).structure())]))
    # cyclic duality
    for a, f, tilde in [((1, 1, 1), "Qi", False), ((1, 2, -2), "Qi", True), ((1, 1, 2), "Qi", False)]:
        grp = galois.build_group(a, f, tilde)
        out.append((f"cyclic duality |H1(Pic)| = |H1(Pic*)| for {a}/{f}",
                    [True, h1(galois.picard_action(grp)).order()],
                    [grp.is_cyclic(), h1(galois.picard_dual_action(grp)).order()]))
    # glue equivariance
    for a, f, tilde in [((1, 1, 1), "Q", False), ((1, 2, 8), "Qi", False), ((1, 2, -2), "Q", True),
                        ((1, 3, 1), "Q", False), ((1, 8, -8), "Q", True)]:
        out.append((f"glue equivariance for {a}/{f}", True,
                    galois.glue_is_equivariant(galois.build_group(a, f, tilde))))
    # six-term exactness
    for a, f in [((1, 2, 8), "Qi"), ((1, 2, -2), "Q")]:
        case = pipeline.CaseModules(a, f, True)
        for k in (4, 5):
            _, checks = case.brauer_sequence(k).six_term_orders()
            out.append((f"six-term exactness for O/8 -> O/{2 ** k} on {a}/{f}",
                        {key: True for key in checks}, checks))
    # chart invariance
    keys = ["intersection", "h1_delta", "image_h1_dual", "boundary_image", "h0_cokernel_order"]
    for a, f in [((1, 2, 8), "Qi"), ((1, 2, -2), "Q"), ((2, -2, -4), "Q")]:
        runs = [pipeline.verify_case(a, f, tilde=True, chart=c) for c in range(4)]
        out.append((f"verify_case chart invariance for {a}/{f}", [[runs[0][k] for k in keys]] * 4,
                    [[r[k] for k in keys] for r in runs]))
    for a, f in [((1, 2, -2), "Qi"), ((1, 8, -8), "Q")]:
        runs = [pipeline.extension_structure(a, f, chart=c) for c in range(4)]
        out.append((f"extension_structure chart invariance for {a}/{f}", [runs[0]] * 4, runs))
    return out


CRITERIA = [
    Criterion(1, "Lattice ranks", ("lattice",), 1, lattice_ranks),
    Criterion(2, "Unimodularity and line class", ("lattice",), 5, unimodularity),
    Criterion(3, "Transcendental lattice", ("lattice",), 1, transcendental_lattice),
    Criterion(4, "Picard lattice and the 48 lines", ("lattice", "picard"), 30, picard_lattice),
    Criterion(5, "Quadric divisors D+ and D-", ("lattice", "picard"), 5, quadric_divisors),
    Criterion(6, "Invariant towers and sampling", ("galois",), 60, invariant_towers),
    Criterion(7, "Character-sum point counts", ("frobenius",), 60, character_sum_counts),
    Criterion(8, "-4 twist point counts", ("frobenius",), 120, minus_four_twist),
    Criterion(9, "Anchor cohomology values", ("cohomology",), 300, anchor_values),
    Criterion(10, "Main classification end to end", ("main",), 600, main_classification),
    Criterion(11, "Extension structures", ("main", "extension"), 300, supplement),
    Criterion(12, "Property suites", ("properties", "cohomology"), 300, property_suites),
]


def select(only=None):
    if not only:
        return list(CRITERIA)
    keys = {x.strip() for x in str(only).split(",")}
    return [c for c in CRITERIA if str(c.number) in keys or keys & set(c.tags)]


def run_criterion(crit):
    out = Outcome(crit.number, crit.title, crit.tags, budget=crit.budget)
    start = time.perf_counter()
    try:
        out.checks = [(l, _jsonable(e), _jsonable(c)) for l, e, c in crit.run()]
    except Exception as exc:  # reported, never swallowed silently
        out.error = f"{type(exc).__name__}: {exc}"
    out.seconds = time.perf_counter() - start
    return out


def run_acceptance(only=None):
    return [run_criterion(c) for c in select(only)]


def format_outcome(o, verbose=True):
    status = "PASS" if o.passed else "FAIL"
    lines_out = [f"[{status}] {o.number:>2} {o.title} ({o.seconds:.2f}s, budget {o.budget:g}s)"]
    if o.error:
        lines_out.append(f"       error: {o.error}")
    if verbose or not o.passed:
        for label, e, c in o.checks:
            mark = "ok" if e == c else "MISMATCH"
            lines_out.append(f"       {mark}: {label}: expected {e}, computed {c}")
    if o.correct and not o.passed:
        lines_out.append("       over time budget")
    return "\n".join(lines_out)
