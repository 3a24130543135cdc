"""Command-line front end tying the modules into one verification dossier."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import detrep, f2code, incidence, report as report_mod, surface
from .poly import format_poly
from .qsqrt5 import QSqrt5


@click.group()
def main() -> None:
    """Exact verification toolkit for 65-nodal sextic surfaces.

    Checked-in data files (code generators, minimal codewords, the matrix A)
    are read from the installed package; set the environment variable
    NODALSEXTIC_DATA to a directory to override them without reinstalling.
    """


# -- code subcommands ------------------------------------------------------------


@main.group()
def code() -> None:
    """The extended binary code and its bookkeeping formulas."""


def _emit(data: dict, as_json: bool, text_lines) -> None:
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            click.echo(line)


@code.command()
@click.option("--json", "as_json", is_flag=True)
def info(as_json: bool) -> None:
    """Rank, span size and weight summary of the extended code."""
    c = f2code.extended_code()
    dist = c.weight_enumerator()
    minw = min(k for k in dist if k)
    data = {
        "rank": c.DIMENSION,
        "span": len(c),
        "min_weight": minw,
        "min_weight_count": dist[minw],
        "weights": dist,
    }
    _emit(
        data,
        as_json,
        [
            f"rank: {c.DIMENSION}",
            f"span: {len(c)}",
            f"minimum nonzero weight: {minw} ({dist[minw]} words)",
        ],
    )


@code.command("enumerate")
@click.option("--weights", is_flag=True, help="print the weight distribution instead of all words")
@click.option("--json", "as_json", is_flag=True)
def enumerate_cmd(weights: bool, as_json: bool) -> None:
    """All 8192 codewords (or their weight distribution)."""
    c = f2code.extended_code()
    if weights:
        dist = c.weight_enumerator()
        _emit({"weights": dist}, as_json, (f"{k}\t{v}" for k, v in dist.items()))
        return
    words = sorted(c.enumerate())
    if as_json:
        click.echo(json.dumps([w.to_string() for w in words]))
    else:
        for w in words:
            click.echo(w.to_string())


@code.command()
@click.option("--json", "as_json", is_flag=True)
def minwords(as_json: bool) -> None:
    """The 26 minimum-weight codewords, canonically sorted."""
    words = f2code.extended_code().min_weight_words()
    _emit(
        {"count": len(words), "words": [w.to_string() for w in words]},
        as_json,
        (w.to_string() for w in words),
    )


@code.command("sum")
@click.argument("indices", nargs=-1, type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def sum_cmd(indices: tuple[int, ...], as_json: bool) -> None:
    """XOR of Table-1 words w_i for the given 1-based indices."""
    table1 = f2code.table1_words()
    for i in indices:
        if not 1 <= i <= len(table1):
            raise click.UsageError(f"index {i} outside 1..{len(table1)}")
    w = f2code.xor_sum(table1[i - 1] for i in indices)
    data = {
        "word": w.to_string(),
        "weight": w.weight(),
        "cardinality": w.cardinality(),
        "half_even": w.is_half_even(),
        "nodes": sorted(w.node_set()),
    }
    _emit(
        data,
        as_json,
        [
            w.to_string(),
            f"weight: {w.weight()}  cardinality: {w.cardinality()}  half-even: {w.is_half_even()}",
            f"nodes: {sorted(w.node_set())}",
        ],
    )


def _parse_target(spec: str) -> f2code.Codeword:
    if spec.startswith("0x"):
        return f2code.Codeword(int(spec, 16))
    if all(ch in "01|, ;" for ch in spec) and sum(ch in "01" for ch in spec) == 66:
        return f2code.Codeword.from_string(spec)
    table1 = f2code.table1_words()
    idx = [int(tok) for tok in spec.replace(",", " ").split()]
    return f2code.xor_sum(table1[i - 1] for i in idx)


@code.command()
@click.option("--target", required=True, help="hex word (0x..), 66-bit string, or Table-1 indices")
@click.option("--k", default=5, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def decompose(target: str, k: int, as_json: bool) -> None:
    """All k-subsets of the minimal words whose XOR is the target."""
    pool = f2code.table1_words()
    subsets = f2code.decompose(_parse_target(target), k, pool)
    _emit(
        {"count": len(subsets), "subsets": [list(s) for s in subsets]},
        as_json,
        (" ".join(map(str, s)) for s in subsets),
    )


@code.command()
@click.option("--m", required=True, type=int)
@click.option("--nodes", "node_count", required=True, type=int)
@click.option("--json", "as_json", is_flag=True)
def chi(m: int, node_count: int, as_json: bool) -> None:
    """Euler characteristic of the twisted half-quadratic sheaf."""
    value = f2code.euler_characteristic(m, node_count)
    _emit({"m": m, "nodes": node_count, "chi": str(value)}, as_json, [str(value)])


@code.command()
@click.option("--d", required=True, type=int)
@click.option("--json", "as_json", is_flag=True)
def bounds(d: int, as_json: bool) -> None:
    """Node-count bound, known maxima, and instability thresholds."""
    b = f2code.bounds(d)
    data = {
        "d": d,
        "miyaoka": str(b.miyaoka),
        "mu_known": b.mu_known,
        "thresholds": [str(t) for t in b.thresholds],
    }
    _emit(
        data,
        as_json,
        [
            f"miyaoka bound: {b.miyaoka}",
            f"known maximum: {b.mu_known if b.mu_known is not None else 'unknown'}",
            f"instability thresholds: {b.thresholds[0]}, {b.thresholds[1]}, {b.thresholds[2]}",
        ],
    )


# -- barth subcommands --------------------------------------------------------------


@main.group()
def barth() -> None:
    """The Barth sextic surface and its nodes."""


@barth.command()
def poly() -> None:
    """The defining sextic, expanded to canonical form."""
    click.echo(format_poly(surface.barth_polynomial()))


@barth.command()
@click.option("--seed", default=surface.SearchConfig.seed, show_default=True, type=int)
@click.option("--starts", default=surface.SearchConfig.starts_per_chart, show_default=True, type=int)
@click.option("--denbound", default=surface.SearchConfig.denominator_bound, show_default=True, type=int)
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="write nodes.json here")
def nodes(seed: int, starts: int, denbound: int, output: str | None) -> None:
    """Locate and certify all 65 nodes."""
    config = surface.SearchConfig(seed=seed, starts_per_chart=starts, denominator_bound=denbound)
    found = surface.find_nodes(config=config)
    text = surface.nodes_to_json(found)
    if output:
        Path(output).write_text(text)
        exact = sum(n.is_exact() for n in found)
        click.echo(f"wrote {len(found)} nodes ({exact} exact-certified) to {output}")
    else:
        click.echo(text)


@barth.command()
@click.argument("nodes_file", type=click.Path(exists=True, dir_okay=False))
def certify(nodes_file: str) -> None:
    """Re-certify every node in a nodes.json file."""
    loaded = surface.nodes_from_json(Path(nodes_file).read_text())
    f = surface.barth_polynomial()
    grad, hess = surface.gradient(f), surface.hessian(f)
    failures = 0
    for n in loaded:
        if not n.is_exact():
            click.echo(f"node {n.id}: numeric-approximate (residual {n.residual:.2e}), not re-certified")
            continue
        try:
            surface.certify_exact(f, n.coords, grad, hess)
            click.echo(f"node {n.id}: certified (Hessian rank 3)")
        except surface.CertificationError as exc:
            failures += 1
            click.echo(f"node {n.id}: FAILED ({exc})")
    if failures:
        sys.exit(1)


# -- detrep subcommands --------------------------------------------------------------


@main.group("detrep")
def detrep_group() -> None:
    """The symmetric linear determinantal representation."""


@detrep_group.command()
@click.option("--json", "as_json", is_flag=True)
def verify(as_json: bool) -> None:
    """Exact check of det A against the sextic."""
    a = detrep.barth_matrix_A()
    f = surface.barth_polynomial()
    rep = detrep.verify_determinant(a, f)
    ok = rep.scalar == detrep.EXPECTED_SCALAR
    data = {
        "scalar": str(rep.scalar),
        "expected": str(detrep.EXPECTED_SCALAR),
        "symmetric": rep.symmetric,
        "linear": rep.linear,
        "ok": ok,
    }
    _emit(
        data,
        as_json,
        [
            f"det A = ({rep.scalar}) * F",
            f"expected scalar (4*r5-8)/9: {'match' if ok else 'MISMATCH'}",
        ],
    )
    if not ok:
        sys.exit(1)


@detrep_group.command()
@click.option("--nodes", "nodes_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def ranks(nodes_file: str, as_json: bool) -> None:
    """Rank of A at every node in the given nodes.json."""
    loaded = surface.nodes_from_json(Path(nodes_file).read_text())
    parts = detrep.rank_partition(detrep.barth_matrix_A(), loaded)
    data = {str(r): sorted(s) for r, s in parts.items()}
    _emit(
        data,
        as_json,
        (f"rank {r}: {len(s)} nodes: {sorted(s)}" for r, s in parts.items()),
    )


# -- incidence subcommands -------------------------------------------------------------


@main.group("incidence")
def incidence_group() -> None:
    """Planes through many nodes and the code labeling."""


def _load_nodes(nodes_file: str | None) -> list[surface.Node]:
    if nodes_file:
        return surface.nodes_from_json(Path(nodes_file).read_text())
    return surface.find_nodes()


@incidence_group.command()
@click.option("--nodes", "nodes_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def planes(nodes_file: str | None, as_json: bool) -> None:
    """All planes through at least 15 nodes, with the doubled-section flag."""
    found = _load_nodes(nodes_file)
    f = surface.barth_polynomial()
    records = incidence.classify_planes(f, incidence.candidate_planes(found))
    data = [
        {
            "coeffs": [str(c) for c in r.plane.coeffs],
            "nodes": sorted(r.node_ids),
            "contact": r.contact,
        }
        for r in records
    ]
    _emit(
        {"count": len(records), "planes": data},
        as_json,
        (
            f"{'contact' if r.contact else 'plain  '} "
            f"[{', '.join(str(c) for c in r.plane.coeffs)}] nodes={sorted(r.node_ids)}"
            for r in records
        ),
    )


@incidence_group.command()
@click.option("--nodes", "nodes_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def contact(nodes_file: str | None, as_json: bool) -> None:
    """Only the contact planes (plane section a doubled cubic)."""
    found = _load_nodes(nodes_file)
    f = surface.barth_polynomial()
    records = incidence.classify_planes(f, incidence.candidate_planes(found))
    rows = [r for r in records if r.contact]
    data = [
        {
            "coeffs": [str(c) for c in r.plane.coeffs],
            "nodes": sorted(r.node_ids),
            "cubic": format_poly(incidence.is_contact_plane(f, r.plane)),
        }
        for r in rows
    ]
    _emit(
        {"count": len(rows), "planes": data},
        as_json,
        (f"[{', '.join(str(c) for c in r.plane.coeffs)}] nodes={sorted(r.node_ids)}" for r in rows),
    )


@incidence_group.command()
@click.option("--nodes", "nodes_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--all", "show_all", is_flag=True, help="print the full node permutation")
@click.option("--json", "as_json", is_flag=True)
def match(nodes_file: str | None, show_all: bool, as_json: bool) -> None:
    """Match the geometric incidence structure against the Table-1 code."""
    found = _load_nodes(nodes_file)
    f = surface.barth_polynomial()
    records = incidence.classify_planes(f, incidence.candidate_planes(found))
    geo = [r.node_ids for r in records if r.contact]
    code_rows = [frozenset(w.node_set()) for w in f2code.table1_words()]
    witness = incidence.match_labeling(geo, code_rows)
    data = {
        "plane_perm": list(witness.plane_perm),
        "node_perm": {str(k): v for k, v in sorted(witness.node_perm.items())},
    }
    lines = [f"plane -> code row: {list(witness.plane_perm)}"]
    if show_all:
        lines.append(f"node -> code column: {dict(sorted(witness.node_perm.items()))}")
    _emit(data, as_json, lines)


# -- report ---------------------------------------------------------------------------


@main.group("report")
def report_group() -> None:
    """Full verification dossier."""


@report_group.command("all")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), help="write JSON report here")
@click.option("--sections", help="comma-separated subset of sections to run")
@click.option("--seed", default=surface.SearchConfig.seed, show_default=True, type=int)
@click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False),
    help="directory for figures and the delimited report (default: no files)",
)
def report_all(json_out: str | None, sections: str | None, seed: int, out_dir: str | None) -> None:
    """Run every check and print one line per section."""
    wanted = tuple(s.strip() for s in sections.split(",")) if sections else None
    figures_dir = Path(out_dir) / "figures" if out_dir else None
    rep = report_mod.run_report(report_mod.ReportConfig(seed=seed, sections=wanted, figures_dir=figures_dir))
    for s in rep.sections:
        click.echo(f"[{s.status.upper():7s}] {s.name:17s} {s.details} ({s.runtime:.2f}s)")
    click.echo(f"overall: {'PASS' if rep.overall_pass else 'FAIL'}")
    if json_out:
        Path(json_out).write_text(rep.to_json())
    if out_dir:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.tsv").write_text(rep.to_tsv())
        (out / "report.json").write_text(rep.to_json())
    if not rep.overall_pass:
        sys.exit(1)


if __name__ == "__main__":
    main()
