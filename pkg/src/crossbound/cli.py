"""Batch command-line front end.

Inputs are either graph files (graph6 or edge-list) or inline family
specs such as ``complete:5``, ``bipartite:3:3``, ``planar-plus:12:2`` and
the named graphs (petersen, dodecahedron, icosahedron, cube). Machine
output is JSON with a reproducibility header (tool version, input hash,
seed, budgets); reruns with the same configuration are byte-identical.

Exit codes: 0 success, 1 error, 2 bound-violation finding (draw),
3 budget exceeded.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import __version__
from .bounds import (
    certify_critical_bounds,
    is_k_crossing_critical,
    skewness_crossing_bound,
    verify_degree_reciprocal_bounds,
)
from .errors import BudgetExceededError, CrossboundError
from .graph import Graph, min_degree, parse_graph, serialize_graph
from .lightcycle import light_cycle_general
from .oracle import DEFAULT_MAX_EDGES, DEFAULT_MAX_K, crossing_number
from .router import build_drawing, render
from .skewness import skewness_exact
from . import generators


def _resolve_graph(spec: str, fmt: str, seed: int) -> Graph:
    if os.path.exists(spec):
        return parse_graph(Path(spec).read_bytes(), fmt)
    parts = spec.split(":")
    family, args = parts[0], parts[1:]
    rng = random.Random(seed)
    if family == "complete" and len(args) == 1:
        return generators.complete(int(args[0]))
    if family == "bipartite" and len(args) == 2:
        return generators.complete_bipartite(int(args[0]), int(args[1]))
    if family == "planar-plus" and len(args) == 2:
        return generators.planar_plus(int(args[0]), int(args[1]), rng)[0]
    if family == "maximal-planar" and len(args) == 1:
        return generators.random_maximal_planar(int(args[0]), rng)
    if family in generators.NAMED and not args:
        return generators.named(family)
    raise CrossboundError(
        f"{spec!r} is neither a readable file nor a known family spec"
    )


def _meta(spec: str, g: Graph, seed: int, **budgets) -> dict:
    canonical = serialize_graph(
        Graph(range(g.n), _relabel_edges(g)), "graph6"
    )
    return {
        "tool": "crossbound",
        "version": __version__,
        "input": spec,
        "input_sha256": hashlib.sha256(canonical).hexdigest(),
        "seed": seed,
        "budgets": dict(sorted(budgets.items())),
    }


def _relabel_edges(g: Graph):
    relabel = {v: i for i, v in enumerate(g.vertices)}
    return tuple((relabel[u], relabel[v]) for u, v in g.edges())


def _rat(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def _emit(payload: dict, out, pretty: bool):
    text = json.dumps(payload, indent=2 if pretty else None,
                      separators=None if pretty else (",", ":")) + "\n"
    if out:
        Path(out).write_bytes(text.encode("ascii"))
    else:
        click.echo(text, nl=False)


def _fail(message: str, code: int):
    click.echo(json.dumps({"error": message}), err=True)
    sys.exit(code)


@click.group()
@click.option("--jobs", type=int, envvar="CROSSBOUND_JOBS", default=1,
              help="Worker cap (current implementation runs sequentially).")
@click.pass_context
def main(ctx, jobs):
    """Crossing-number and skewness toolkit."""
    ctx.ensure_object(dict)
    ctx.obj["jobs"] = max(1, jobs)


_input_arg = click.argument("input_spec", metavar="INPUT")
_fmt_opt = click.option("--format", "fmt", type=click.Choice(["graph6", "edgelist"]),
                        default="graph6", show_default=True)
_seed_opt = click.option("--seed", type=int, default=0, show_default=True)
_out_opt = click.option("--out", type=click.Path(), default=None,
                        help="Write JSON here instead of stdout.")
_pretty_opt = click.option("--pretty", is_flag=True, help="Indented JSON.")


@main.command()
@_input_arg
@_fmt_opt
@_seed_opt
@_out_opt
@_pretty_opt
@click.option("--max-k", type=int, default=DEFAULT_MAX_K, show_default=True)
@click.option("--sk-budget", type=int, default=None,
              help="Largest removal-set size tried (default: lower bound + 4).")
def analyze(input_spec, fmt, seed, out, pretty, max_k, sk_budget):
    """Full report: skewness certificate, light-cycle witness, bounds, cr."""
    try:
        g = _resolve_graph(input_spec, fmt, seed)
        cert = skewness_exact(g, budget=sk_budget)
        report = {
            "meta": _meta(input_spec, g, seed, max_k=max_k, sk_budget=sk_budget),
            "n": g.n,
            "m": g.m,
            "min_degree": min_degree(g) if g.n else None,
            "skewness": {
                "value": cert.value,
                "removed": [list(e) for e in sorted(cert.removed)],
                "exact": cert.exact,
            },
        }
        if g.n and min_degree(g) >= 3:
            wit = light_cycle_general(g, cert.removed)
            report["light_cycle"] = {
                "cycle": list(wit.cycle),
                "apex": wit.apex,
                "mu": wit.mu,
                "fallback": wit.fallback,
            }
        else:
            report["light_cycle"] = None
        report["skewness_bound"] = _rat(skewness_crossing_bound(g.n, cert.value))
        try:
            cr = crossing_number(g, max_k=max_k)
            report["cr"] = cr
            report["cr_status"] = "exact"
        except BudgetExceededError as exc:
            report["cr"] = None
            report["cr_status"] = str(exc.established or "budget exceeded")
        _emit(report, out, pretty)
    except BudgetExceededError as exc:
        _fail(str(exc), 3)
    except CrossboundError as exc:
        _fail(str(exc), 1)


@main.command()
@_input_arg
@_fmt_opt
@_seed_opt
@_out_opt
@_pretty_opt
@click.option("--svg", "svg_path", type=click.Path(), default=None,
              help="Also write an SVG picture here.")
@click.option("--sk-budget", type=int, default=None)
def draw(input_spec, fmt, seed, out, pretty, svg_path, sk_budget):
    """Build a low-crossing drawing; exit 2 if it misses the bound."""
    try:
        g = _resolve_graph(input_spec, fmt, seed)
        cert = skewness_exact(g, budget=sk_budget)
        drawing = build_drawing(g, cert)
        payload = {
            "meta": _meta(input_spec, g, seed, sk_budget=sk_budget),
            "drawing": json.loads(render(drawing, "json")),
        }
        if svg_path:
            Path(svg_path).write_bytes(render(drawing, "svg"))
        _emit(payload, out, pretty)
        if not drawing.bound_met:
            sys.exit(2)
    except BudgetExceededError as exc:
        _fail(str(exc), 3)
    except CrossboundError as exc:
        _fail(str(exc), 1)


@main.command()
@_input_arg
@_fmt_opt
@_seed_opt
@_out_opt
@_pretty_opt
@click.option("--max-k", type=int, default=DEFAULT_MAX_K, show_default=True)
@click.option("--max-edges", type=int, default=DEFAULT_MAX_EDGES, show_default=True)
def oracle(input_spec, fmt, seed, out, pretty, max_k, max_edges):
    """Exact crossing number by exhaustive configuration search."""
    try:
        g = _resolve_graph(input_spec, fmt, seed)
        cr = crossing_number(g, max_k=max_k, max_edges=max_edges)
        if out or pretty:
            _emit({"meta": _meta(input_spec, g, seed, max_k=max_k,
                                 max_edges=max_edges), "cr": cr}, out, pretty)
        else:
            click.echo(str(cr))
    except BudgetExceededError as exc:
        _fail(f"{exc} ({exc.established})", 3)
    except CrossboundError as exc:
        _fail(str(exc), 1)


@main.command()
@_input_arg
@_fmt_opt
@_seed_opt
@_out_opt
@_pretty_opt
@click.option("--k", type=int, required=True, help="Criticality level to test.")
@click.option("--max-k", type=int, default=DEFAULT_MAX_K, show_default=True)
@click.option("--max-edges", type=int, default=DEFAULT_MAX_EDGES, show_default=True)
def critical(input_spec, fmt, seed, out, pretty, k, max_k, max_edges):
    """Test k-crossing-criticality and certify every applicable bound."""
    try:
        g = _resolve_graph(input_spec, fmt, seed)
        crit = is_k_crossing_critical(g, k, max_k=max_k, max_edges=max_edges)
        payload = {
            "meta": _meta(input_spec, g, seed, k=k, max_k=max_k, max_edges=max_edges),
            "k": k,
            "critical": crit,
        }
        if crit:
            rep = certify_critical_bounds(g, k, max_k=max_k, max_edges=max_edges,
                                          check_critical=False)
            payload["cr"] = rep.cr
            payload["bounds"] = {
                "skewness_bound": _rat(rep.skewness_bound),
                "cycle_bound": _rat(rep.cycle_bound),
                "degree_bound": _rat(rep.degree_bound),
            }
            payload["satisfied"] = rep.satisfied
        _emit(payload, out, pretty)
    except BudgetExceededError as exc:
        _fail(str(exc), 3)
    except CrossboundError as exc:
        _fail(str(exc), 1)


@main.command("verify-lemma")
@click.option("--d-max", type=int, default=60, show_default=True)
@_out_opt
@_pretty_opt
def verify_lemma(d_max, out, pretty):
    """Exhaustively verify the degree-reciprocal implications."""
    try:
        ok = verify_degree_reciprocal_bounds(d_max)
        _emit({"d_max": d_max, "holds": ok}, out, pretty)
        if not ok:
            sys.exit(1)
    except CrossboundError as exc:
        _fail(str(exc), 1)


@main.command()
@click.argument("family", metavar="FAMILY")
@_seed_opt
@click.option("--out", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["graph6", "edgelist"]),
              default="graph6", show_default=True)
def generate(family, seed, out, fmt):
    """Emit a generated graph (complete:N, bipartite:A:B, planar-plus:N:T,
    maximal-planar:N, petersen, dodecahedron, icosahedron, cube)."""
    try:
        if os.path.exists(family):
            raise CrossboundError("generate takes a family spec, not a file")
        g = _resolve_graph(family, fmt, seed)
        data = serialize_graph(g, fmt)
        if out:
            Path(out).write_bytes(data)
        else:
            click.echo(data.decode("ascii"), nl=False)
    except CrossboundError as exc:
        _fail(str(exc), 1)


if __name__ == "__main__":
    main()
