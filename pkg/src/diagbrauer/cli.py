"""Command-line interface: ``brauer <command>``."""
import functools
import json
import sys
from fractions import Fraction

import click

from . import acceptance, frobenius, galois, lines, pipeline
from .errors import BrauerError
from .fermat import build_full, build_primitive, build_transcendental
from .gaussian import (GaussianInteger, PrimaryPrime, parse_triple, power_residue, primary_associate,
                       zeta8_power_name)
from .picard import build_picard

SCHEMA_VERSION = 1
FIELD_CHOICE = click.Choice(["Q", "Qi"], case_sensitive=False)


def _default(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GaussianInteger):
        return str(x)
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"not serialisable: {type(x).__name__}")


def emit(payload, as_json, text=None):
    if as_json:
        click.echo(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, default=_default, indent=2))
    else:
        click.echo(text if text is not None else json.dumps(payload, default=_default, indent=2))


def fail(exc, as_json):
    name = exc.name if isinstance(exc, BrauerError) else type(exc).__name__
    if as_json:
        click.echo(json.dumps({"schema_version": SCHEMA_VERSION, "error": name, "message": str(exc)}))
    else:
        click.echo(f"error: {name}: {exc}", err=True)
    sys.exit(2)


def guarded(func):
    """Run a command body and report package errors by name."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (BrauerError, ValueError) as exc:
            fail(exc, kwargs.get("as_json", False))
    return wrapper


def equation(coeffs):
    terms = ["x0^4"]
    for k, c in enumerate(coeffs, start=1):
        sign = "-" if c.startswith("-") else "+"
        terms.append(f"{sign} {c.lstrip('-')} x{k}^4")
    return " ".join(terms)


def structure_name(factors):
    if not factors:
        return "0"
    return " x ".join(f"Z/{d}" for d in factors)


@click.group()
def main():
    """Brauer groups of diagonal quartic surfaces over Q and Q(i)."""


# ---------------------------------------------------------------- classification

@main.command()
@click.option("--a", "a", required=True, help="Coefficients a1,a2,a3 (rationals as p/q).")
@click.option("--field", default="Q", type=FIELD_CHOICE)
@click.option("--prove", is_flag=True, help="Recompute the 2-part from group cohomology.")
@click.option("--extension", is_flag=True, help="Also compute Br/Br0 via hypercohomology.")
@click.option("--json", "as_json", is_flag=True)
@guarded
def classify(a, field, prove, extension, as_json):
    """Transcendental, odd and algebraic parts of the Brauer group."""
    r = pipeline.classify(a, field, prove=prove, extension=extension)
    text = [f"surface {equation(r['a'])} = 0 over {r['field']}",
            f"  (Br/Br1) 2-part : {structure_name(r['transcendental_2_part'])}",
            f"  (Br/Br1) odd    : {structure_name(r['odd_part'])}",
            "  Br1/Br0        : " + ("unavailable" if r["algebraic_part"] is None
                                     else structure_name(r["algebraic_part"]))]
    if r["exceptional_class"]:
        text.append(f"  equivalent to {tuple(r['exceptional_class'])}: {r['equivalence_witness']}")
    if prove:
        text.append(f"  verified 2-part : {structure_name(r['verified_2_part'])}"
                    f" ({'agrees' if r['verification_agrees'] else 'DISAGREES'})")
    if extension:
        e = r["extension"]
        text.append(f"  0 -> {structure_name(e['left'])} -> {structure_name(e['middle'])}"
                    f" -> {structure_name(e['right'])} -> 0")
    text.append("  provenance: " + "; ".join(r["provenance"]))
    emit(r, as_json, "\n".join(text))


@main.command("verify-case")
@click.option("--a", "a", required=True)
@click.option("--field", default="Q", type=FIELD_CHOICE)
@click.option("--tilde", is_flag=True, help="Use the octic group and the 4-torsion bound.")
@click.option("--chart", default=0, type=click.IntRange(0, 3), help="Identify T with O via i^chart.")
@click.option("--trace", is_flag=True, help="Include intermediate cohomology groups.")
@click.option("--json", "as_json", is_flag=True)
@guarded
def verify_case(a, field, tilde, chart, trace, as_json):
    """Intersection of the boundary image and the Pic* image in H^1(G, Delta)."""
    out = pipeline.verify_case(a, field, tilde=tilde, chart=chart, trace=trace)
    emit(out, as_json)


# ---------------------------------------------------------------- point counts

@main.command("count-points")
@click.option("--a", "a", required=True)
@click.option("--q", "qs", required=True, help="Comma-separated prime powers p or p^2.")
@click.option("--compare-minus-four", is_flag=True, help="Compare with the -4 twist in slots 2 and 3.")
@click.option("--json", "as_json", is_flag=True)
@guarded
def count_points(a, qs, compare_minus_four, as_json):
    """Projective point counts over finite fields."""
    qlist = [int(x) for x in qs.split(",") if x.strip()]
    if compare_minus_four:
        out = frobenius.compare_minus_four_twist(a, qlist)
        text = [f"a = {out['a']}, twist = {out['twist']}"]
        text += [f"  q={r['q']}: {r['count']} vs {r['twist_count']}" for r in out["rows"]]
        text.append(f"  all equal: {out['all_equal']}")
        emit(out, as_json, "\n".join(text))
        return
    rows = [{"q": q, "count": frobenius.count_points(a, q)} for q in qlist]
    emit({"a": [str(x) for x in parse_triple(a)], "rows": rows}, as_json,
         "\n".join(f"q={r['q']}: {r['count']}" for r in rows))


# ---------------------------------------------------------------- lattices and lines

@main.command()
@click.option("--d", "degree", default=4, type=int)
@click.option("--picard", is_flag=True, help="Picard lattice and discriminant data (d = 4).")
@click.option("--json", "as_json", is_flag=True)
@guarded
def lattice(degree, picard, as_json):
    """The cohomology lattice H of the Fermat surface of degree d."""
    if picard:
        pic = build_picard()
        disc = pic.discriminant_structure()
        out = {"rank": pic.rank, "basis": pic.basis, "gram": pic.gram,
               "discriminant": disc, "glue_matrix": pic.glue_matrix(8)}
        emit(out, as_json, f"Pic: rank {pic.rank}, Pic*/Pic = {structure_name(disc)}")
        return
    H = build_full(degree)
    out = {"d": degree, "rank": H.rank, "primitive_rank": build_primitive(degree).rank,
           "gram": H.gram, "hyperplane": H.hyperplane, "line_class": H.line_class, "det": H.det}
    if degree == 4:
        T = build_transcendental()
        out.update({"w1": T.w1, "w2": T.w2, "transcendental_gram": T.gram})
    emit(out, as_json, f"H for d={degree}: rank {H.rank}, det {H.det}")


@main.command("lines")
@click.option("--json", "as_json", is_flag=True)
@guarded
def lines_cmd(as_json):
    """The 48 lines on the Fermat quartic and their incidence."""
    gram = lines.incidence_gram()
    rank, disc = lines.line_lattice_structure()
    q = lines.quadric_checks()
    out = {
        "lines": [{"family": f, "alpha": f"zeta8^{k}", "beta": f"zeta8^{m}"} for f, k, m in lines.LINES],
        "incidence": gram,
        "rank": rank,
        "discriminant": disc,
        "quadric_checks": q,
    }
    emit(out, as_json, f"{len(lines.LINES)} lines, lattice rank {rank}, discriminant {structure_name(disc)}")


# ---------------------------------------------------------------- Galois groups

@main.command("galois")
@click.option("--a", "a", required=True)
@click.option("--field", default="Q", type=FIELD_CHOICE)
@click.option("--tilde", is_flag=True, help="Adjoin the 8th root of -2.")
@click.option("--json", "as_json", is_flag=True)
@guarded
def galois_cmd(a, field, tilde, as_json):
    """The finite Galois group and its action on O/2^k."""
    g = galois.build_group(a, field, tilde)
    levels = {}
    for k in range(1, (5 if tilde else 4) + 1):
        act = galois.br_level_action(g, k)
        levels[str(k)] = [{"element": g.describe(x), "unit": list(act.table[x][0]),
                           "conjugate": act.table[x][1]} for x in range(g.order)]
    out = {"order": g.order, "cyclic": g.is_cyclic(), "radicands": g.basis.radicands,
           "generators": [g.describe(x) for x in g.generators], "levels": levels}
    emit(out, as_json, f"order {g.order}, generators {out['generators']}")


# ---------------------------------------------------------------- acceptance

@main.command("acceptance")
@click.option("--only", default=None, help="Tag or criterion number (comma-separated).")
@click.option("--json", "as_json", is_flag=True)
@click.option("--quiet", is_flag=True, help="Only show details of failures.")
def acceptance_cmd(only, as_json, quiet):
    """Run the acceptance criteria; exit code 1 on any failure."""
    outcomes = acceptance.run_acceptance(only)
    if not outcomes:
        click.echo("no criteria selected", err=True)
        sys.exit(2)
    if as_json:
        emit({"results": [o.as_dict() for o in outcomes],
              "passed": all(o.passed for o in outcomes)}, True)
    else:
        for o in outcomes:
            click.echo(acceptance.format_outcome(o, verbose=not quiet))
        n = sum(o.passed for o in outcomes)
        click.echo(f"{n}/{len(outcomes)} criteria passed")
    sys.exit(0 if all(o.passed for o in outcomes) else 1)


# ---------------------------------------------------------------- Gaussian debugging

@main.group()
def gauss():
    """Gaussian integer helpers."""


@gauss.command("primary")
@click.option("--z", required=True, help="An odd Gaussian integer such as 3+2i.")
@click.option("--json", "as_json", is_flag=True)
@guarded
def gauss_primary(z, as_json):
    """The primary associate of z."""
    w = primary_associate(GaussianInteger.parse(z))
    emit({"z": z, "primary": str(w)}, as_json, str(w))


@gauss.command("symbol")
@click.option("--x", required=True, help="Numerator, a Gaussian integer.")
@click.option("--pi", required=True, help="A primary Gaussian prime.")
@click.option("--m", default=4, type=click.Choice(["2", "4", "8"]), help="Order of the residue symbol.")
@click.option("--json", "as_json", is_flag=True)
@guarded
def gauss_symbol(x, pi, m, as_json):
    """The m-th power residue symbol (x / pi) as a power of zeta8."""
    e = power_residue(GaussianInteger.parse(x), PrimaryPrime(GaussianInteger.parse(pi)), int(m))
    emit({"x": x, "pi": pi, "m": int(m), "zeta8_exponent": e, "value": zeta8_power_name(e)},
         as_json, zeta8_power_name(e))


if __name__ == "__main__":
    main()
