"""Command-line interface: ``argdec decide|explain|export-aba|table``."""

from __future__ import annotations

import json
import sys

import click

from . import flat
from .aba import to_text
from .classical import (
    conjunctive_select,
    lexicographic_select,
    pareto_efficient,
    pareto_from_adf,
    read_decision_table,
)
from .decision import Criterion, Pdf, select
from .dialogical import compile_source, decision_context, dialogical_explain, render_dialogue, render_dot
from .errors import ArgdecError
from .graphs import Dg, Pdg, core_dg_aba
from .io import parse_problem
from .mappings import core_adf_aba

CRITERIA = click.Choice(["sd", "d", "wd", "ps"], case_sensitive=False)


class UserError(click.ClickException):
    exit_code = 2


def _load(path):
    try:
        return parse_problem(path).framework
    except OSError as exc:
        raise UserError(f"cannot read {path}: {exc.strerror or exc}") from None
    except ArgdecError as exc:
        raise UserError(f"{path}: {exc}") from None


def _criterion(text: str, source) -> Criterion:
    criterion = Criterion.parse(text)
    if criterion is Criterion.PREFERRED_SET and not isinstance(source, (Pdf, Pdg)):
        raise UserError("criterion ps needs a problem with preferences (kind pdf or pdg)")
    return criterion


def _guard(fn):
    """Map library errors raised while running a command to exit code 2."""
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ArgdecError as exc:
            detail = exc.args[0] if exc.args else ""
            raise UserError(f"{type(exc).__name__}: {detail}") from None
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Explainable decision making with assumption-based argumentation."""


@main.command()
@click.argument("problem", type=click.Path(dir_okay=False))
@click.option("--criterion", "-c", type=CRITERIA, required=True)
@_guard
def decide(problem, criterion):
    """List the decisions meeting CRITERION, one per line."""
    source = _load(problem)
    chosen = select(decision_context(source), _criterion(criterion, source))
    for d in chosen:
        click.echo(d)


@main.command()
@click.argument("problem", type=click.Path(dir_okay=False))
@click.option("--criterion", "-c", type=CRITERIA, required=True)
@click.option("--decision", "-d", required=True)
@click.option("--format", "fmt", type=click.Choice(["flat-json", "dialogue", "dot", "tree-json"]),
              default="dialogue", show_default=True)
@_guard
def explain(problem, criterion, decision, fmt):
    """Explain why DECISION does or does not meet CRITERION."""
    source = _load(problem)
    crit = _criterion(criterion, source)
    context = decision_context(source)
    if decision not in context.decisions:
        raise UserError(f"unknown decision {decision!r}")
    if fmt == "flat-json":
        click.echo(json.dumps(flat.to_json(flat.explain(context, decision, crit)), indent=2))
        return
    expl = dialogical_explain(source, crit, decision)
    if fmt == "dialogue":
        click.echo(render_dialogue(expl))
    elif fmt == "dot":
        click.echo(render_dot(expl))
    else:
        click.echo(json.dumps(expl.to_json(), indent=2))


@main.command("export-aba")
@click.argument("problem", type=click.Path(dir_okay=False))
@click.option("--criterion", "-c", type=click.Choice(["core", "sd", "d", "wd", "ps"], case_sensitive=False),
              required=True, help="'core' exports the framework without any criterion component.")
@_guard
def export_aba(problem, criterion):
    """Print the ABA framework for PROBLEM in canonical text form."""
    source = _load(problem)
    if criterion.lower() == "core":
        if isinstance(source, (Dg, Pdg)):
            framework = core_dg_aba(source.dg if isinstance(source, Pdg) else source)
        else:
            framework = core_adf_aba(source.adf if isinstance(source, Pdf) else source)
    else:
        framework = compile_source(source, _criterion(criterion, source)).framework
    sys.stdout.write(to_text(framework))


@main.command()
@click.argument("table", type=click.Path(dir_okay=False))
@click.option("--method", type=click.Choice(["conjunctive", "pareto", "lexicographic"]), required=True)
@click.option("--min", "minima", multiple=True, metavar="COLUMN=VALUE",
              help="Treat a numeric column as met when the value is at least VALUE.")
@click.option("--order", help="Comma-separated attribute importance for lexicographic selection.")
@_guard
def table(table, method, minima, order):
    """Select alternatives from a CSV decision table."""
    limits = {}
    for item in minima:
        column, sep, value = item.partition("=")
        try:
            limits[column] = float(value)
        except ValueError:
            raise UserError(f"--min expects COLUMN=VALUE, got {item!r}") from None
        if not sep:
            raise UserError(f"--min expects COLUMN=VALUE, got {item!r}")
    try:
        dt = read_decision_table(table, limits)
    except OSError as exc:
        raise UserError(f"cannot read {table}: {exc.strerror or exc}") from None
    unknown = set(limits) - set(dt.attributes)
    if unknown:
        raise UserError(f"unknown columns {sorted(unknown)}")
    if method == "conjunctive":
        chosen = conjunctive_select(dt.to_conjunctive({x: limits.get(x, 1) for x in dt.attributes}))
    elif method == "pareto":
        chosen = pareto_efficient(pareto_from_adf(dt.to_adf(limits)))
    else:
        lf = dt.to_lex(limits)
        if order:
            ranked = tuple(x.strip() for x in order.split(","))
            if sorted(ranked) != sorted(dt.attributes):
                raise UserError("--order must list every attribute exactly once")
            lf = type(lf)(lf.alternatives, ranked, lf.has)
        chosen = lexicographic_select(lf)
    for a in chosen:
        click.echo(a)


def run():
    try:
        main(standalone_mode=True)
    except Exception as exc:  # pragma: no cover
        click.echo(f"internal error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    run()
