"""Command-line front end: describe algebras, compute splittings, check
morphisms and pairs, and re-derive the full dimension <= 4 classification
against the recorded reference verdicts.

Exit codes: 0 success, 1 classification mismatch or UNKNOWN verdict,
2 usage or parse errors.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

import click

from .catalog import Catalog, OutOfDomainError, UnknownAlgebraError, default_catalog
from .existence import DimensionMismatchError, check_pair
from .liealg import (
    center,
    commutator_subalgebra,
    derived_series,
    is_nilpotent_algebra,
    is_solvable_algebra,
    lower_central_series,
    nilradical,
)
from .scalars import parse_scalar
from .splitting import build_splitting
from .transitivity import Verdict, check_simply_transitive

SAMPLING_ID = "fixed rational sample set v1 (samples.json)"


def _load_catalog(path: Optional[str]) -> Catalog:
    return Catalog(Path(path)) if path else default_catalog()


def _parse_params(pairs: tuple[str, ...]) -> dict:
    params = {}
    for item in pairs:
        if "=" not in item:
            raise click.UsageError(f"--param expects k=v, got {item!r}")
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = parse_scalar(value.strip(), {})
        except (ValueError, ZeroDivisionError) as exc:
            raise click.UsageError(f"bad parameter value {item!r}: {exc}")
    return params


def _emit(data: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            click.echo(line)


@click.group()
def cli() -> None:
    """Exact computations with solvable Lie algebras: semisimple
    splittings, nilshadows, and simply transitive affine actions."""


catalog_option = click.option("--catalog", "catalog_path", default=None, help="override catalog directory")
format_option = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
param_option = click.option("--param", "params_raw", multiple=True, help="parameter binding k=v (repeatable)")


@cli.command()
@click.option("--g", "gname", required=True, help="catalog algebra name")
@param_option
@catalog_option
@format_option
def describe(gname: str, params_raw, catalog_path, fmt) -> None:
    """Basic facts: series, nilradical, center, nilshadow class."""
    cat = _load_catalog(catalog_path)
    try:
        g = cat.algebra(gname, _parse_params(params_raw))
    except (UnknownAlgebraError, OutOfDomainError) as exc:
        raise click.UsageError(str(exc))
    lcs = [s.dim for s in lower_central_series(g)]
    ds = [s.dim for s in derived_series(g)]
    nr = nilradical(g)
    z = center(g)
    comm = commutator_subalgebra(g)
    sp = build_splitting(g)
    data = {
        "name": cat.resolve(gname),
        "dim": g.dim,
        "solvable": is_solvable_algebra(g),
        "nilpotent": is_nilpotent_algebra(g),
        "lower_central_series_dims": lcs,
        "derived_series_dims": ds,
        "commutator_dim": comm.dim,
        "nilradical": [[str(c) for c in v] for v in nr.basis],
        "center": [[str(c) for c in v] for v in z.basis],
        "nilshadow_class": sp.nilshadow_class(),
    }
    names = g.names
    _emit(
        data,
        fmt,
        [
            f"algebra       : {data['name']} (dim {g.dim})",
            f"solvable      : {data['solvable']}   nilpotent: {data['nilpotent']}",
            f"lower central : {lcs}",
            f"derived series: {ds}",
            f"nilradical    : span{{{', '.join(_vec_text(v, names) for v in nr.basis)}}}",
            f"center        : span{{{', '.join(_vec_text(v, names) for v in z.basis) or '0'}}}",
            f"nilshadow     : {data['nilshadow_class']}",
        ],
    )


def _vec_text(v, names) -> str:
    parts = []
    for c, name in zip(v, names):
        if c.is_zero():
            continue
        parts.append(name if str(c) == "1/1" else f"({c})*{name}")
    return " + ".join(parts) if parts else "0"


@cli.command()
@click.option("--g", "gname", required=True)
@param_option
@catalog_option
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json")
def splitting(gname: str, params_raw, catalog_path, fmt) -> None:
    """Semisimple splitting g' = t x| g: structure constants, torus basis,
    nilshadow basis and class (JSON by default)."""
    cat = _load_catalog(catalog_path)
    try:
        g = cat.algebra(gname, _parse_params(params_raw))
    except (UnknownAlgebraError, OutOfDomainError) as exc:
        raise click.UsageError(str(exc))
    sp = build_splitting(g)
    data = sp.to_json()
    lines = [
        f"splitting of {cat.resolve(gname)}: dim {sp.algebra.dim}, torus rank {sp.torus_dim}",
        f"nilshadow class: {data['nilshadow_class']}",
    ]
    _emit(data, fmt, lines)


@cli.command("check-morphism")
@click.argument("morphism_file", type=click.Path(exists=True, dir_okay=False))
@catalog_option
@format_option
def check_morphism(morphism_file: str, catalog_path, fmt) -> None:
    """Verify a morphism file (JSON) and decide simple transitivity."""
    from .affine import morphism_from_json

    from .affine import AffineAlgebra

    cat = _load_catalog(catalog_path)
    with open(morphism_file, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        source, _ = _resolve_algebra_ref(obj["source"], cat)
        target_h, target_name = _resolve_algebra_ref(obj["target_h"], cat)
    except (KeyError, UnknownAlgebraError, OutOfDomainError, ValueError) as exc:
        raise click.UsageError(f"bad morphism file: {exc}")
    target = cat.affine_target(target_name) if target_name else AffineAlgebra(target_h)
    phi = morphism_from_json(obj, source=source, target=target)
    rep = phi.verify()
    if not rep.is_homomorphism:
        data = {
            "is_homomorphism": False,
            "failing_pair": list(rep.failing_pair),
            "verdict": Verdict.NOT_SIMPLY_TRANSITIVE,
        }
        _emit(data, fmt, [f"not a Lie algebra morphism: bracket fails on basis pair {rep.failing_pair}"])
        return
    result = check_simply_transitive(phi)
    data = {"is_homomorphism": True, "injective": rep.injective}
    data.update(result.to_json())
    _emit(
        data,
        fmt,
        [
            f"homomorphism : yes (injective: {rep.injective})",
            f"verdict      : {result.verdict}",
            *(f"  - {r}" for r in result.reasons),
        ],
    )


def _resolve_algebra_ref(ref, cat: Catalog):
    """Returns (algebra, catalog_name_or_None)."""
    from .liealg import algebra_from_json

    if isinstance(ref, str):
        return cat.algebra(ref), cat.resolve(ref)
    if isinstance(ref, dict) and "catalog" in ref:
        entry = cat.entry(ref["catalog"])
        params = {k: parse_scalar(str(v), {}) for k, v in ref.get("params", {}).items()}
        name = entry.name if not entry.param_names else None
        return entry.build(params), name
    return algebra_from_json(ref), None


@cli.command("check-pair")
@click.option("--g", "gname", required=True)
@click.option("--h", "hname", required=True)
@param_option
@catalog_option
@format_option
def check_pair_cmd(gname, hname, params_raw, catalog_path, fmt) -> None:
    """Existence of a simply transitive action of g on h."""
    cat = _load_catalog(catalog_path)
    try:
        report = check_pair(gname, _parse_params(params_raw), hname, cat)
    except (UnknownAlgebraError, OutOfDomainError, DimensionMismatchError) as exc:
        raise click.UsageError(str(exc))
    _emit(
        report.to_json(),
        fmt,
        [f"verdict: {report.verdict}", *(f"  - {r}" for r in report.reasons)],
    )


@cli.command("verify-paper")
@catalog_option
@click.option("--jobs", default=1, show_default=True, help="parallel workers")
@click.option("--g", "only_g", default=None, help="restrict to one catalog family")
@format_option
def verify_paper(catalog_path, jobs: int, only_g, fmt) -> None:
    """Re-derive every recorded classification cell and diff the verdicts.

    Each parameterized family is sampled at its fixed, documented rational
    values (at least two inside every conditional region and one outside).
    Exits 0 iff all cells match and no UNKNOWN verdict occurs.
    """
    cat = _load_catalog(catalog_path)
    tasks = []
    for gname, hname in cat.classification_pairs():
        if only_g and cat.resolve(only_g) != gname:
            continue
        for sample in cat.samples(gname):
            tasks.append((gname, sample, hname))

    def run(task):
        gname, sample, hname = task
        expected = cat.expected_result(gname, sample, hname)
        report = check_pair(gname, sample, hname, cat)
        return task, expected, report

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]

    mismatches = 0
    unknowns = 0
    lines = [f"sampling: {SAMPLING_ID}"]
    rows = []
    for (gname, sample, hname), expected, report in results:
        got = report.verdict
        ok = got == expected
        if not ok:
            mismatches += 1
        if got == Verdict.UNKNOWN:
            unknowns += 1
        ptxt = ",".join(f"{k}={v}" for k, v in sample.items())
        status = "OK" if ok else "MISMATCH"
        lines.append(f"{status:8} {gname}[{ptxt}] -> {hname}: computed={got} expected={expected}")
        rows.append(
            {
                "g": gname,
                "params": {k: str(v) for k, v in sample.items()},
                "h": hname,
                "computed": got,
                "expected": expected,
                "match": ok,
            }
        )
    lines.append(
        f"checked {len(results)} cells: {mismatches} mismatches, {unknowns} unknown verdicts"
    )
    data = {
        "sampling": SAMPLING_ID,
        "cells": rows,
        "mismatches": mismatches,
        "unknowns": unknowns,
    }
    _emit(data, fmt, lines)
    if mismatches or unknowns:
        sys.exit(1)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
