"""
hilbert-cones command line.

Usage:
    python -m cli member --cone Q --n 3 --a=-1 --input '{"den_exp": 1, "numer": ["1"]}'
    python -m cli --format text betti-bounds --n 3 --m 2 --input h.json
    python -m cli --format csv cross-section --i-max 30
    python -m cli --seed 7 oracle --vars 4 --maxdeg 8 --trials 500

Exit status: 0 success or member, 1 not a member or failed trials, 2 bad input.
"""

import functools
import logging
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional

import pandas as pd
import typer

from betti.bounds import betti_bounds
from cli.io import InputError, decimal_str, emit, parse_genfun, parse_sequence, read_payload
from cones.base import ConeId, ConeKind
from cones.hilbert_cone import cross_section_frame, enumerate_q_rays, q31_cross_section, thm_one_coefficients
from cones.labels import label_to_dict, parse_label
from cones.membership import membership, r_membership_dim_restricted, r_membership_pd_restricted
from cones.positive import enumerate_p_rays
from cones.regularity import (
    dimension_restricted_rays,
    pd_restricted_rays,
    r_decompose,
    r_extreme_rays,
    r_ray_labels,
)
from modules_oracle.campaign import MacaulayCampaign
from ratcalc.rational import format_rat
from realize.construction import clear_denominators, realize_p_ray

app = typer.Typer(
    name='hilbert-cones',
    help='Exact computations with the cones of Hilbert functions.',
    no_args_is_help=True,
    add_completion=False,
)


class OutputFormat(str, Enum):
    json = 'json'
    csv = 'csv'
    text = 'text'


@dataclass
class RunConfig:
    fmt: str = 'json'
    output: Optional[Path] = None
    seed: Optional[int] = None
    decimal: bool = False


def handles_errors(command):
    """Map domain errors to exit status 2 with a one-line message on stderr."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ValueError, InputError) as exc:
            typer.echo(f"error: {exc}", err=True)
            raise typer.Exit(code=2)
    return wrapper


def _config(ctx: typer.Context) -> RunConfig:
    return ctx.obj if isinstance(ctx.obj, RunConfig) else RunConfig()


def _cone_bound(kind: ConeKind, a: Optional[int], m: Optional[int]) -> int:
    if kind is ConeKind.R:
        if m is None:
            raise InputError("--m is required for cone R")
        return m
    if a is None:
        raise InputError(f"--a is required for cone {kind.value}")
    return a


@app.callback()
def main(
    ctx: typer.Context,
    fmt: OutputFormat = typer.Option(OutputFormat.json, '--format', help='json, csv or text'),
    output: Optional[Path] = typer.Option(None, '--output', help='Write the artifact here instead of stdout'),
    seed: Optional[int] = typer.Option(None, '--seed', help='Seed for randomized commands'),
    verbose: bool = typer.Option(False, '--verbose', help='Log progress to stderr'),
    decimal: bool = typer.Option(False, '--decimal', help='Add display-only decimal columns'),
):
    if verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format='%(name)s: %(message)s')
    ctx.obj = RunConfig(fmt.value, output, seed, decimal)


@app.command()
@handles_errors
def member(
    ctx: typer.Context,
    cone: ConeKind = typer.Option(..., '--cone', case_sensitive=False),
    n: int = typer.Option(..., '--n'),
    a: Optional[int] = typer.Option(None, '--a'),
    m: Optional[int] = typer.Option(None, '--m'),
    dim: Optional[int] = typer.Option(None, '--dim', help='R only: restrict to dimension <= dim'),
    pd_max: Optional[int] = typer.Option(None, '--pd', help='R only: restrict to projective dimension <= PD'),
    source: str = typer.Option(..., '--input', help="Series JSON: path, '-' or inline"),
):
    """Decide membership and print the certificate."""
    cfg = _config(ctx)
    cone_id = ConeId(cone, n, _cone_bound(cone, a, m))
    g = parse_genfun(read_payload(source))
    if (dim is not None or pd_max is not None) and cone is not ConeKind.R:
        raise InputError("--dim and --pd apply to cone R only")
    if dim is not None and pd_max is not None:
        raise InputError("use one of --dim and --pd")
    if dim is not None:
        cert = r_membership_dim_restricted(g, n, cone_id.bound, dim)
    elif pd_max is not None:
        cert = r_membership_pd_restricted(g, n, cone_id.bound, pd_max)
    else:
        cert = membership(cone_id, g)
    payload = cert.to_dict()
    violation = cert.violation
    text = 'member' if cert.member else (
        f"not member: {violation.kind}" + ('' if violation.index is None else f" {violation.index}")
    )
    frame = pd.DataFrame([{
        'member': cert.member,
        'kind': violation.kind if violation else '',
        'index': '' if violation is None or violation.index is None else violation.index,
    }])
    emit(cfg.fmt, cfg.output, payload, frame, text)
    if not cert.member:
        raise typer.Exit(code=1)


@app.command()
@handles_errors
def rays(
    ctx: typer.Context,
    cone: ConeKind = typer.Option(..., '--cone', case_sensitive=False),
    n: int = typer.Option(..., '--n'),
    a: Optional[int] = typer.Option(None, '--a'),
    m: Optional[int] = typer.Option(None, '--m'),
    max_part: int = typer.Option(2, '--max-part', help='P/Q: largest partition entry'),
    dim: Optional[int] = typer.Option(None, '--dim', help='R only: rays of dimension <= dim'),
    pd_max: Optional[int] = typer.Option(None, '--pd', help='R only: rays of projective dimension <= PD'),
):
    """List extreme rays with their series (P/Q: every ray with partition entries <= max-part)."""
    cfg = _config(ctx)
    bound = _cone_bound(cone, a, m)
    cone_id = ConeId(cone, n, bound)
    if cone is ConeKind.P:
        listed = enumerate_p_rays(n, bound, max_part)
    elif cone is ConeKind.Q:
        listed = enumerate_q_rays(n, bound, max_part)
    elif dim is not None:
        listed = dimension_restricted_rays(n, bound, dim)
    elif pd_max is not None:
        listed = pd_restricted_rays(n, bound, pd_max)
    else:
        listed = r_extreme_rays(n, bound)
    payload = {
        'cone': str(cone_id),
        'rays': [{'label': str(lab), 'variant': label_to_dict(lab), 'series': g.to_dict()} for lab, g in listed],
    }
    frame = pd.DataFrame(
        [{'label': str(lab), 'den_exp': g.den_exp, 'numer': ' '.join(g.to_dict()['numer'])} for lab, g in listed],
        columns=['label', 'den_exp', 'numer'],
    )
    text = '\n'.join(f"{lab}\t{g}" for lab, g in listed)
    emit(cfg.fmt, cfg.output, payload, frame, text)


@app.command()
@handles_errors
def decompose(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n'),
    m: int = typer.Option(..., '--m'),
    source: str = typer.Option(..., '--input'),
):
    """Coordinates of a series against the extreme rays of R_{n,m}."""
    cfg = _config(ctx)
    g = parse_genfun(read_payload(source))
    alphas = r_decompose(g, n, m)
    labels = [str(lab) for lab in r_ray_labels(n, m)]
    rows = [{'ray': lab, 'alpha': format_rat(x)} for lab, x in zip(labels, alphas)]
    if cfg.decimal:
        for row, x in zip(rows, alphas):
            row['alpha_decimal'] = decimal_str(x)
    payload = {'cone': f"R_{{{n},{m}}}", 'alphas': rows, 'nonneg': all(x >= 0 for x in alphas)}
    frame = pd.DataFrame(rows)
    text = '\n'.join(f"{row['ray']}\t{row['alpha']}" for row in rows)
    emit(cfg.fmt, cfg.output, payload, frame, text)


@app.command()
@handles_errors
def simplicial(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n'),
    cutoff: int = typer.Option(..., '--cutoff', help='Largest power i of S/m^i'),
    source: str = typer.Option(..., '--input', help='Sequence JSON {"h": [...]}'),
):
    """Coordinates d_i of a truncated Hilbert function against the Hilbert functions of S/m^i."""
    cfg = _config(ctx)
    h = parse_sequence(read_payload(source))
    coeffs = thm_one_coefficients(h, n, cutoff)
    rows = [{'i': i, 'd': format_rat(x)} for i, x in enumerate(coeffs, start=1)]
    nonneg = all(x >= 0 for x in coeffs)
    payload = {'n': n, 'coefficients': rows, 'nonneg': nonneg}
    text = '\n'.join(f"d_{row['i']} = {row['d']}" for row in rows)
    emit(cfg.fmt, cfg.output, payload, pd.DataFrame(rows, columns=['i', 'd']), text)
    if not nonneg:
        raise typer.Exit(code=1)


@app.command('betti-bounds')
@handles_errors
def betti_bounds_command(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n'),
    m: int = typer.Option(..., '--m'),
    source: str = typer.Option(..., '--input'),
):
    """Sharp upper bounds on the Betti table of a member of R_{n,m}."""
    cfg = _config(ctx)
    g = parse_genfun(read_payload(source))
    table = betti_bounds(g, n, m)
    frame = table.to_frame(n + 2).reset_index()
    frame.columns = [str(c) for c in frame.columns]
    emit(cfg.fmt, cfg.output, table.to_dict(), frame, table.render_text(n + 2))


@app.command()
@handles_errors
def realize(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n'),
    a: int = typer.Option(..., '--a'),
    label: str = typer.Option(..., '--label', help="power:k, lambda:3,1, lambda:, mu:2"),
    integral: bool = typer.Option(False, '--integral', help='Clear denominators of the multiplicities'),
):
    """A direct sum of cyclic modules whose T-image is a positive multiple of a ray of P_{n,a}."""
    cfg = _config(ctx)
    realization = realize_p_ray(parse_label(label), n, a)
    if integral:
        realization = clear_denominators(realization)
    payload = realization.to_dict()
    frame = pd.DataFrame(realization.modules.to_list(), columns=['ell', 'power', 'mult'])
    lines = [f"scalar {payload['scalar']}, working a = {realization.working_a}"]
    lines += [f"{row['mult']} x S/<x_0..x_{row['ell'] - 1}>^{row['power']}" for row in payload['summands']]
    emit(cfg.fmt, cfg.output, payload, frame, '\n'.join(lines))


@app.command('cross-section')
@handles_errors
def cross_section(
    ctx: typer.Context,
    i_max: int = typer.Option(..., '--i-max'),
):
    """Vertices (c2, c1) of the slice h(0) = 1 of Q_{3,-1}."""
    cfg = _config(ctx)
    points = q31_cross_section(i_max)
    frame = cross_section_frame(points)
    if cfg.decimal:
        frame['c2_decimal'] = [decimal_str(p.c2) for p in points]
        frame['c1_decimal'] = [decimal_str(p.c1) for p in points]
    payload = {'points': frame.to_dict(orient='records')}
    text = '\n'.join(f"{p.label}\t({format_rat(p.c2)}, {format_rat(p.c1)})" for p in points)
    emit(cfg.fmt, cfg.output, payload, frame, text)


@app.command()
@handles_errors
def oracle(
    ctx: typer.Context,
    max_vars: int = typer.Option(4, '--vars', help='Largest number of variables'),
    maxdeg: int = typer.Option(8, '--maxdeg'),
    max_gens: int = typer.Option(6, '--gens', help='Largest number of generators drawn'),
    upto: int = typer.Option(12, '--upto', help='Check degrees 0..upto'),
    trials: int = typer.Option(100, '--trials'),
    workers: Optional[int] = typer.Option(None, '--workers'),
):
    """Seeded Macaulay-inequality campaign on brute-force Hilbert functions."""
    cfg = _config(ctx)
    if cfg.seed is None:
        raise InputError("oracle needs --seed")
    campaign = MacaulayCampaign(max_vars, maxdeg, max_gens, upto)
    table = campaign.run(trials, cfg.seed, workers)
    summary = MacaulayCampaign.summarize(table, cfg.seed)
    failures = table.loc[~table['passed'].astype(bool)]
    payload = summary.to_dict()
    payload['counterexamples'] = failures['ideal'].tolist()
    emit(cfg.fmt, cfg.output, payload, table, str(summary))
    if summary.failed:
        raise typer.Exit(code=1)
