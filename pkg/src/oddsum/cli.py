"""Command-line interface: construct, solve, verify, validate, surfaces, oracle.

Exit codes: 0 success, 1 failed claim or invalid input, 2 resource cap hit.
"""

from __future__ import annotations

import inspect
import json
import sys

import click

from oddsum import families as fam
from oddsum.chios import odd_sum_chromatic, oracle_odd_sum_chromatic, validate_odd_sum_coloring
from oddsum.coloring import DEFAULT_NODE_BUDGET, NodeBudgetExceeded, brute_force_chromatic, chromatic_number
from oddsum.corpus import DEFAULT_SEED
from oddsum.domination import (
    SolutionSpaceTooLarge,
    brute_force_odd_dominating_sets,
    default_cap,
    iter_solutions,
    solve_odd_domination,
)
from oddsum.formats import format_graph, parse_graph
from oddsum.graph import Graph
from oddsum.surfaces import chios_surface_lower_bound, gap_divergence_table, heawood_number, table_csv
from oddsum.verify import VERIFIERS, run_verifier

EXIT_FAIL = 1
EXIT_CAP = 2

FORMATS = click.Choice(["graph6", "json", "dot"])


def _read_graph(source: str) -> Graph:
    text = sys.stdin.read() if source == "-" else open(source).read()
    try:
        return parse_graph(text)
    except (ValueError, KeyError) as exc:
        raise click.ClickException(f"could not parse graph: {exc}")


def _cap_exit(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_CAP)


@click.group()
def main() -> None:
    """Odd-sum colorings and odd-dominating sets."""


def construct_family(family: str, a: int, b: int, k: int, delta: int | None, g: int, t: int,
                     n: int, max_degree: int | None) -> Graph:
    if family == "gabk":
        return fam.build_G_abk(a, b, k)
    if family == "J":
        return fam.build_J(4 if delta is None else delta, k)
    if family == "Jodd":
        return fam.build_J_odd(5 if delta is None else delta, k)
    if family == "bipartite":
        return fam.build_bipartite_family(4 if delta is None else delta, g)
    if family == "thm4":
        return fam.build_theorem4_graph()
    if family == "Gt":
        return fam.build_Gt(t, max_degree)
    if family == "bowtie":
        return fam.bowtie()
    if family == "extbowtie":
        return fam.extended_bowtie()
    if family == "product-k2kn":
        return fam.product_k2_kn(n)
    raise ValueError(f"unknown family {family!r}")


@main.command()
@click.argument("family", type=click.Choice(fam.FAMILY_NAMES))
@click.option("--a", default=1, show_default=True, help="Paths of length 3k+1 (gabk).")
@click.option("--b", default=1, show_default=True, help="Paths of length 3k+2 (gabk).")
@click.option("--k", default=1, show_default=True, help="Gadget scale.")
@click.option("--delta", type=int, default=None, help="Maximum degree (J: 4, Jodd: 5, bipartite: 4).")
@click.option("--g", "girth_target", default=6, show_default=True, help="Girth target (bipartite).")
@click.option("--t", default=0, show_default=True, help="Bowtie count (Gt).")
@click.option("--n", default=3, show_default=True, help="Clique size (product-k2kn).")
@click.option("--max-degree", type=int, default=None, help="Degree budget for Gt attachment sites.")
@click.option("--format", "fmt", type=FORMATS, default="graph6", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
def construct(family, a, b, k, delta, girth_target, t, n, max_degree, fmt, output) -> None:
    """Build a graph family member and serialize it."""
    try:
        g = construct_family(family, a, b, k, delta, girth_target, t, n, max_degree)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    text = format_graph(g, fmt)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("what", type=click.Choice(["ods", "chi", "chios"]))
@click.argument("source", default="-")
@click.option("--count", "count_only", is_flag=True, help="ods: print only the number of sets.")
@click.option("--list", "list_sets", is_flag=True, help="ods: list every odd-dominating set.")
@click.option("--certificate", is_flag=True, help="Include a witness (coloring or set).")
@click.option("--cap", type=int, default=None, help="Enumeration cap (default: $ODDSUM_CAP or 2^20).")
@click.option("--node-budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def solve(what, source, count_only, list_sets, certificate, cap, node_budget, as_json) -> None:
    """Compute ods, chi or chi_os of a graph read from SOURCE (graph6 or JSON; '-' is stdin)."""
    g = _read_graph(source)
    cap = default_cap() if cap is None else cap
    try:
        if what == "ods":
            system = solve_odd_domination(g)
            if count_only:
                click.echo(json.dumps({"count": system.count}) if as_json else system.count)
                return
            out = {"count": system.count, "nullity": system.nullity, "particular": system.particular.to_list()}
            if list_sets:
                out["sets"] = [s.to_list() for s in iter_solutions(system, cap)]
            if as_json:
                click.echo(json.dumps(out))
            else:
                click.echo(f"count {out['count']} nullity {out['nullity']}")
                for s in out.get("sets", [out["particular"]] if certificate else []):
                    click.echo("{" + ",".join(map(str, s)) + "}")
        elif what == "chi":
            k, witness = chromatic_number(g, node_budget)
            if as_json:
                click.echo(json.dumps(witness.to_json_dict() if certificate else {"k": k}))
            else:
                click.echo(k)
                if certificate:
                    click.echo(json.dumps(witness.to_json_dict()))
        else:
            cert = odd_sum_chromatic(g, cap, node_budget)
            if as_json:
                click.echo(json.dumps(cert.to_json_dict() if certificate else {"chios": cert.chios}))
            else:
                click.echo(cert.chios)
                if certificate:
                    click.echo(json.dumps(cert.to_json_dict()))
    except (SolutionSpaceTooLarge, NodeBudgetExceeded) as exc:
        _cap_exit(exc)


@main.command()
@click.argument("theorem", type=click.Choice(sorted(VERIFIERS)))
@click.option("--delta", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--g", type=int, default=None, help="Girth target (thm3) or genus (thm8).")
@click.option("--g-max", type=int, default=None)
@click.option("--t-max", type=int, default=None)
@click.option("--chios-t-max", type=int, default=None)
@click.option("--max-n", type=int, default=None)
@click.option("--samples", type=int, default=None)
@click.option("--n", "ns", type=int, multiple=True, help="Clique sizes (k2kn); repeatable.")
@click.option("--seed", type=int, default=None, help=f"Random seed (default {DEFAULT_SEED}).")
@click.option("--json", "as_json", is_flag=True)
def verify(theorem, as_json, ns, **options) -> None:
    """Re-check a theorem's claims; exit 0 iff all pass."""
    accepted = inspect.signature(VERIFIERS[theorem]).parameters
    params = {key: val for key, val in options.items() if val is not None}
    if ns:
        params["ns"] = tuple(ns)
    unknown = sorted(set(params) - set(accepted))
    if unknown:
        raise click.ClickException(f"{theorem} does not take: {', '.join(unknown)}")
    try:
        report = run_verifier(theorem, **params)
    except (SolutionSpaceTooLarge, NodeBudgetExceeded) as exc:
        _cap_exit(exc)
        return
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(json.dumps(report.to_json_dict(), indent=2) if as_json else report.render())
    sys.exit(0 if report.passed else EXIT_FAIL)


def load_coloring(text: str, n: int) -> list[int]:
    """Accept a list of colors, ``{"colors": {v: c}}`` or a bare ``{v: c}`` mapping."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"coloring is not JSON: {exc}")
    if isinstance(obj, dict) and "colors" in obj:
        obj = obj["colors"]
    if isinstance(obj, list):
        colors = obj
    elif isinstance(obj, dict):
        mapping = {int(v): c for v, c in obj.items()}
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"coloring misses vertices {missing}")
        colors = [mapping[v] for v in range(n)]
    else:
        raise ValueError("coloring must be a list or an object")
    if len(colors) != n or not all(isinstance(c, int) and c >= 1 for c in colors):
        raise ValueError(f"coloring must assign a positive integer to each of {n} vertices")
    return colors


@main.command()
@click.argument("source")
@click.argument("coloring_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def validate(source, coloring_file, as_json) -> None:
    """Check that COLORING_FILE is an odd-sum coloring of the graph in SOURCE."""
    g = _read_graph(source)
    try:
        colors = load_coloring(open(coloring_file).read(), g.n)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    ok, bad = validate_odd_sum_coloring(g, colors)
    if as_json:
        click.echo(json.dumps({
            "valid": ok,
            "colors_used": len(set(colors)),
            "violations": [{"kind": v.kind, "vertices": list(v.vertices), "detail": v.detail} for v in bad],
        }))
    elif ok:
        click.echo(f"valid odd-sum coloring, {len(set(colors))} colors")
    else:
        click.echo(f"invalid: {len(bad)} violations")
        for v in bad:
            click.echo(f"  {v.kind} {list(v.vertices)}: {v.detail}")
    sys.exit(0 if ok else EXIT_FAIL)


@main.group()
def surfaces() -> None:
    """Heawood number, surface lower bound, divergence table."""


@surfaces.command()
@click.argument("genus", type=int)
def heawood(genus) -> None:
    click.echo(heawood_number(genus))


@surfaces.command()
@click.argument("genus", type=int)
@click.option("--json", "as_json", is_flag=True)
def bound(genus, as_json) -> None:
    try:
        b = chios_surface_lower_bound(genus)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    out = {"g": genus, "lower_bound": b.bound, "witness_n": b.witness_n, "formula_n": b.formula_n,
           "heawood": heawood_number(genus)}
    click.echo(json.dumps(out) if as_json else f"{b.bound:.12f} (witness K_2 box K_{b.witness_n})")


@surfaces.command()
@click.option("--g-max", type=int, default=240, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def table(g_max, as_json) -> None:
    try:
        rows = gap_divergence_table(g_max)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if as_json:
        click.echo(json.dumps([dict(zip(("g", "heawood", "lower_bound", "gap"), r)) for r in rows]))
    else:
        click.echo(table_csv(rows), nl=False)


@main.command()
@click.argument("what", type=click.Choice(["ods", "chi", "chios"]))
@click.argument("source", default="-")
def oracle(what, source) -> None:
    """Brute-force answers for small graphs (independent of the solvers)."""
    g = _read_graph(source)
    try:
        if what == "ods":
            sets = brute_force_odd_dominating_sets(g)
            click.echo(len(sets))
            for s in sets:
                click.echo(str(s))
        elif what == "chi":
            click.echo(brute_force_chromatic(g))
        else:
            click.echo(oracle_odd_sum_chromatic(g))
    except ValueError as exc:
        raise click.ClickException(str(exc))


if __name__ == "__main__":
    main()
