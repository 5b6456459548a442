"""Command-line front end: ``nsgp info | chain | order | resolve | gldim | check | verify``.

Exit codes: 0 success, 1 internal error, 2 bad input, 3 a check failed.
"""
from __future__ import annotations

import json
import sys

import click

from .chains import RadicalChain, greedy_chain, lazy_chain
from .errors import (
    AmbientMismatch, BadFamilyParameters, EmptyGenerators, FullSemigroup, IndexOutOfRange,
    LastRingNotFull, NotAChain, NotCoprime, ShapeMismatch, TruncationOverflow,
)
from .homology import TruncationContext, check_complex, resolve_simple
from .order import build_order
from .semigroup import NumericalSemigroup, family_ring
from .verify import SUITES, run_suite

EXIT_INPUT, EXIT_INTERNAL, EXIT_FAILED = 2, 1, 3

# errors caused by what the user asked for, as opposed to engine faults
INPUT_ERRORS = (
    AmbientMismatch, BadFamilyParameters, EmptyGenerators, FullSemigroup, IndexOutOfRange,
    LastRingNotFull, NotAChain, NotCoprime, ShapeMismatch, TruncationOverflow,
)


def _emit(data, fmt: str, table):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        click.echo(table)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}")


def _semigroup(gens, family) -> NumericalSemigroup:
    if (gens is None) == (family is None):
        raise click.UsageError("give exactly one of --gens or --family")
    if gens is not None:
        return NumericalSemigroup.from_generators(_ints(gens))
    parts = _ints(family)
    if len(parts) != 3:
        raise click.BadParameter("--family takes n,a,i")
    return family_ring(*parts)


def _chain(construction, gens, family, chain_file) -> RadicalChain:
    if chain_file:
        with open(chain_file, encoding="utf-8") as fh:
            return RadicalChain.from_dict(json.load(fh))
    H = _semigroup(gens, family)
    return greedy_chain(H) if construction == "greedy" else lazy_chain(H)


fmt_option = click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table",
                          show_default=True)


def chain_options(fn):
    fn = click.option("--chain-file", type=click.Path(exists=True, dir_okay=False),
                      help="JSON chain {construction, rings}.")(fn)
    fn = click.option("--family", help="Family ring n,a,i.")(fn)
    fn = click.option("--gens", help="Generators, e.g. 5,8,17,19.")(fn)
    fn = click.option("--lazy", "construction", flag_value="lazy", default=True)(fn)
    fn = click.option("--greedy", "construction", flag_value="greedy")(fn)
    return fn


def _context(truncation, field) -> TruncationContext:
    return TruncationContext.from_env(bound=truncation, field=None if field is None else _field(field))


def _field(text):
    from .field import parse_field
    return parse_field(text)


ctx_options = [
    click.option("--truncation", type=int, default=None, help="Fixed bound N (overrides NSGP_TRUNCATION)."),
    click.option("--field", "field_name", default=None, help="rational or prime:<p> (overrides NSGP_FIELD)."),
]


def with_ctx(fn):
    for opt in reversed(ctx_options):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Numerical semigroups, radical chains, endomorphism orders and their resolutions."""


@main.command()
@click.option("--gens", help="Generators, e.g. 5,8,17,19.")
@click.option("--family", help="Family ring n,a,i.")
@fmt_option
def info(gens, family, fmt):
    """Invariants of one numerical semigroup."""
    H = _semigroup(gens, family)
    data = H.to_dict()
    data.update({"gaps": list(H.gaps), "lead": list(H.lead_set())})
    table = "\n".join([
        f"semigroup    {H.label()}",
        f"frobenius    {H.frobenius}",
        f"multiplicity {H.multiplicity}",
        f"gamma        {{{', '.join(map(str, H.gamma))}}}",
        f"gaps         {{{', '.join(map(str, H.gaps))}}}",
        f"lead         {{{', '.join(map(str, H.lead_set()))}}}",
    ])
    _emit(data, fmt, table)


@main.group()
def chain():
    """Radical chains."""


@chain.command("build")
@chain_options
@fmt_option
def chain_build(construction, gens, family, chain_file, fmt):
    c = _chain(construction, gens, family, chain_file)
    data = dict(c.to_dict(), length=len(c))
    table = "\n".join([f"{c.construction} chain, length {len(c)}"]
                      + [f"  R{k}: {H.label()}  F={H.frobenius}" for k, H in enumerate(c.rings, 1)])
    _emit(data, fmt, table)


@main.group()
def order():
    """Endomorphism orders."""


def _order_output(construction, gens, family, chain_file, fmt):
    E = build_order(_chain(construction, gens, family, chain_file))
    table = "E =\n" + E.table("entries") + "\n\nJ(E) =\n" + E.table("radical")
    _emit(E.to_dict(), fmt, table)


@order.command("build")
@chain_options
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="json", show_default=True)
def order_build(construction, gens, family, chain_file, fmt):
    _order_output(construction, gens, family, chain_file, fmt)


@order.command("show")
@chain_options
@fmt_option
def order_show(construction, gens, family, chain_file, fmt):
    _order_output(construction, gens, family, chain_file, fmt)


def _resolution_table(res) -> str:
    lines = [f"S{res.simple}: projective dimension {res.length}"]
    for j, W in enumerate(res.frames):
        lines.append(f"  W{j} = {W.label()}   (degrees {list(W.shifts)})")
    for j, d in enumerate(res.maps, 1):
        lines.append(f"  d{j} = {d.pretty()}")
    if res.certificate is not None:
        lines.append(f"  certificate: {'ok' if res.certificate.ok else 'FAILED'}")
    return "\n".join(lines)


@main.command()
@chain_options
@click.option("--simple", "simple_index", type=int, required=True)
@click.option("--max-len", type=int, default=None)
@with_ctx
@fmt_option
def resolve(construction, gens, family, chain_file, simple_index, max_len, truncation, field_name, fmt):
    """Minimal projective resolution of one simple module."""
    E = build_order(_chain(construction, gens, family, chain_file))
    res = resolve_simple(E, simple_index, max_len=max_len, ctx=_context(truncation, field_name))
    _emit(res.to_dict(), fmt, _resolution_table(res))
    if not res.certificate.ok:
        sys.exit(EXIT_FAILED)


@main.command()
@chain_options
@with_ctx
@fmt_option
def gldim(construction, gens, family, chain_file, truncation, field_name, fmt):
    """Global dimension, one simple per isomorphism class."""
    E = build_order(_chain(construction, gens, family, chain_file))
    ctx = _context(truncation, field_name)
    pds = {i: resolve_simple(E, i, ctx=ctx, certify=False).length for i in E.representatives()}
    g = max(pds.values())
    data = {"length": E.length, "global_dimension": g,
            "projective_dimensions": {str(i): p for i, p in pds.items()}}
    table = "\n".join([f"global dimension {g} (chain length {E.length})"]
                      + [f"  pd S{i} = {p}" for i, p in pds.items()])
    _emit(data, fmt, table)


@main.command()
@click.option("--complex", "path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="JSON with chain (or family + construction), frames, maps, augmentation.")
@with_ctx
@fmt_option
def check(path, truncation, field_name, fmt):
    """Certify a user-supplied complex of projectives."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if "chain" in data:
        c = RadicalChain.from_dict(data["chain"])
    else:
        c = _chain(data.get("construction", "lazy"), data.get("gens"), data.get("family"), None)
    E = build_order(c)
    cert = check_complex(E, data["frames"], data["maps"], data["augmentation"],
                         _context(truncation, field_name))
    data = cert.to_dict()
    table = "\n".join(f"{k:16} {v}" for k, v in data.items())
    _emit(data, fmt, table)
    if not (cert.ok and cert.resolves_simple):
        sys.exit(EXIT_FAILED)


@main.command()
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--n", "n", type=int, default=6, show_default=True)
@click.option("--a", "a", type=int, default=10, show_default=True)
@click.option("--all-a", is_flag=True, help="Run every legal a for the given n.")
@click.option("--max-i", type=int, default=5, show_default=True)
@click.option("--timings", is_flag=True, help="Include per-check runtimes (output no longer reproducible).")
@with_ctx
@fmt_option
def verify(suite, n, a, all_a, max_i, timings, truncation, field_name, fmt):
    """Run the family verification suites."""
    report = run_suite(suite, n=n, a=a, max_i=max_i, ctx=_context(truncation, field_name), all_a=all_a)
    lines = []
    for chk in report.checks:
        params = ",".join(f"{k}={v}" for k, v in chk.params.items())
        lines.append(f"{chk.status:18} {chk.claim:28} {params}")
    counts = report.counts()
    lines.append(f"{counts['pass']} pass, {counts['fail']} fail, {counts['discrepancy-noted']} noted")
    _emit(report.to_dict(timings), fmt, "\n".join(lines))
    if not report.ok:
        sys.exit(EXIT_FAILED)


def run(argv=None):
    """Entry point mapping engine errors onto exit codes."""
    try:
        main.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INTERNAL
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INTERNAL
    except INPUT_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - last-resort mapping to the internal exit code
        click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_INTERNAL
    return 0


def entry():
    sys.exit(run())


if __name__ == "__main__":
    entry()
