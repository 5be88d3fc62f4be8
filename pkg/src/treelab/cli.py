"""Command-line interface: simulation, ingestion, analyses, and the server.

Each subcommand is a thin shell over the same library calls the HTTP API
uses, so scripted results and served results always agree.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from treelab.clustering import OrderKey, flat_clusters, hierarchical_cluster
from treelab.diffing import line_diff
from treelab.generators import make_generator
from treelab.journal import (
    MetricDirection,
    build_runsets,
    dump_journal,
    parse_journal,
    run_stats,
)
from treelab.packages import package_table
from treelab.similarity import similarity_matrix
from treelab.simulator import ImproveRule, PolicyConfig, simulate_run
from treelab.treedist import distance_matrix, labeled_tree, tree_edit_distance
from treelab.service.workspace import Workspace


def _write_matrix(path: Path, values) -> None:
    """Dense row-major numeric text format: N on the first line, then rows."""
    with path.open("w", encoding="utf-8") as fh:
        fh.write(f"{len(values)}\n")
        for row in values:
            fh.write(" ".join(repr(v) for v in row) + "\n")


def _load_journal(path: str):
    return parse_journal(Path(path).read_bytes())


@click.group()
def main():
    """Analytics for tree-based coding-agent runs."""


@main.command()
@click.option("--n", "n_steps", default=30, show_default=True, help="Nodes per run.")
@click.option("--m", "n_drafts", default=5, show_default=True, help="Initial draft count.")
@click.option("--p-debug", default=0.5, show_default=True, help="Probability of choosing debug.")
@click.option("--debug-depth", default=3, show_default=True, help="Max depth of debug targets.")
@click.option(
    "--improve-rule",
    type=click.Choice([r.value for r in ImproveRule]),
    default=ImproveRule.GREEDY.value,
    show_default=True,
)
@click.option("--temperature", default=1.0, show_default=True, help="Softmax temperature.")
@click.option("--seed", default=0, show_default=True)
@click.option(
    "--generator",
    "generator_kind",
    type=click.Choice(["fixture", "grammar"]),
    default="fixture",
    show_default=True,
)
@click.option("--buggy-rate", default=0.3, show_default=True)
@click.option("--llm", "llm_id", default="sim-llm", show_default=True)
@click.option(
    "--metric-direction",
    type=click.Choice([d.value for d in MetricDirection]),
    default=MetricDirection.LOWER_BETTER.value,
    show_default=True,
)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def simulate(
    n_steps,
    n_drafts,
    p_debug,
    debug_depth,
    improve_rule,
    temperature,
    seed,
    generator_kind,
    buggy_rate,
    llm_id,
    metric_direction,
    out_path,
):
    """Generate one journal with the seeded policy simulator."""
    cfg = PolicyConfig(
        n_steps=n_steps,
        n_drafts=n_drafts,
        p_debug=p_debug,
        debug_max_depth=debug_depth,
        improve_rule=ImproveRule(improve_rule),
        softmax_temperature=temperature,
        seed=seed,
        llm_id=llm_id,
        metric_direction=MetricDirection(metric_direction),
    )
    run = simulate_run(cfg, make_generator(generator_kind, buggy_rate=buggy_rate))
    Path(out_path).write_bytes(dump_journal(run))
    click.echo(f"wrote {run.run_id} ({len(run.nodes)} nodes) to {out_path}")


@main.command()
@click.argument("paths", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--workspace", "workspace_dir", type=click.Path(file_okay=False), required=True)
def ingest(paths, workspace_dir):
    """Validate journals and copy them into the workspace."""
    ws = Workspace(workspace_dir)
    for path in paths:
        run_id = ws.ingest(Path(path))
        click.echo(f"ingested {path} as {run_id}")


@main.command()
@click.argument("journal", type=click.Path(exists=True, dir_okay=False))
@click.option("--a", "node_a", type=int, required=True)
@click.option("--b", "node_b", type=int, required=True)
def diff(journal, node_a, node_b):
    """Line diff between two nodes of a journal."""
    run = _load_journal(journal)
    prefix = {"shared": "  ", "removed": "- ", "added": "+ "}
    for text, tag in line_diff(run.node(node_a).code, run.node(node_b).code):
        click.echo(prefix[tag] + text)


@main.command()
@click.argument("journal", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def simmatrix(journal, out_path):
    """Write the run's N x N function-level similarity matrix."""
    run = _load_journal(journal)
    matrix = similarity_matrix(run)
    _write_matrix(Path(out_path), matrix.values.tolist())
    click.echo(f"wrote {matrix.size}x{matrix.size} matrix to {out_path}")


@main.command()
@click.argument("journals", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def packages(journals, out_path):
    """Tally package usage per LLM across the given journals (CSV)."""
    runsets = build_runsets([_load_journal(p) for p in journals])
    table = package_table(runsets)
    with Path(out_path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["package", "llm_id", "use_count", "buggy_count"])
        for pkg in table.packages:
            for llm in table.llm_ids:
                cell = table.cell(pkg, llm)
                writer.writerow([pkg, llm, cell.use_count, cell.buggy_count])
    click.echo(f"wrote {len(table.packages)} packages x {len(table.llm_ids)} LLMs to {out_path}")


@main.command()
@click.argument("journal_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("journal_b", type=click.Path(exists=True, dir_okay=False))
def treedist(journal_a, journal_b):
    """Tree-edit distance between two journals' solution-trees."""
    d = tree_edit_distance(
        labeled_tree(_load_journal(journal_a)), labeled_tree(_load_journal(journal_b))
    )
    click.echo(str(d))


@main.command()
@click.argument("journal_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--llm", "llm_id", required=True)
@click.option("--clusters", "n_clusters", type=int, default=None)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def cluster(journal_dir, llm_id, n_clusters, out_path):
    """Cluster one LLM's solution-trees; writes the dendrogram as JSON."""
    runs = [
        parse_journal(path.read_bytes()) for path in sorted(Path(journal_dir).glob("*.json"))
    ]
    runsets = [rs for rs in build_runsets(runs) if rs.llm_id == llm_id]
    if not runsets:
        raise click.ClickException(f"no journals for LLM '{llm_id}' in {journal_dir}")
    matrix = distance_matrix(runsets[0])
    dend = hierarchical_cluster(matrix)
    doc = {
        "llm_id": llm_id,
        "run_ids": list(matrix.run_ids),
        "leaf_count": dend.leaf_count,
        "merges": [m._asdict() for m in dend.merges],
        "leaf_order": list(dend.leaf_order),
    }
    if n_clusters is not None:
        doc["labels"] = flat_clusters(dend, n_clusters)
    Path(out_path).write_text(json.dumps(doc, indent=2), encoding="utf-8")
    click.echo(f"wrote dendrogram over {dend.leaf_count} trees to {out_path}")


@main.command()
@click.option("--workspace", "workspace_dir", type=click.Path(file_okay=False), required=True)
@click.option("--run", "run_id", default=None, help="Run id (for --what sim).")
@click.option("--what", type=click.Choice(["sim", "dist", "packages"]), required=True)
@click.option("--llm", "llm_id", default=None, help="LLM id (for --what dist).")
def analyze(workspace_dir, run_id, what, llm_id):
    """Print one analysis for ingested runs as JSON."""
    ws = Workspace(workspace_dir)
    if what == "sim":
        if run_id is None:
            raise click.ClickException("--what sim requires --run")
        matrix = similarity_matrix(ws.load_run(run_id))
        doc = {"run_id": run_id, "values": matrix.values.tolist()}
    elif what == "dist":
        if llm_id is None:
            raise click.ClickException("--what dist requires --llm")
        matrix = distance_matrix(ws.runset(llm_id))
        doc = {"llm_id": llm_id, "run_ids": list(matrix.run_ids), "values": matrix.values.tolist()}
    else:
        table = package_table(ws.runsets())
        doc = {
            "llm_ids": list(table.llm_ids),
            "rows": {
                pkg: {
                    llm: [table.cell(pkg, llm).use_count, table.cell(pkg, llm).buggy_count]
                    for llm in table.llm_ids
                }
                for pkg in table.packages
            },
        }
    click.echo(json.dumps(doc, indent=2))


@main.command()
@click.option("--bind", default="127.0.0.1:8765", show_default=True, help="host:port")
@click.option("--workspace", "workspace_dir", type=click.Path(file_okay=False), required=True)
def serve(bind, workspace_dir):
    """Run the HTTP API over a workspace."""
    from treelab.service.app import serve as run_server

    host, _, port = bind.partition(":")
    if not port:
        raise click.ClickException("--bind must be host:port")
    run_server(Workspace(workspace_dir), host=host, port=int(port))


@main.command()
@click.option("--workspace", "workspace_dir", type=click.Path(file_okay=False), required=True)
@click.option(
    "--what",
    type=click.Choice(["stats", "similarity", "distance", "packages"]),
    default="stats",
    show_default=True,
)
@click.option("--format", "fmt", type=click.Choice(["csv", "matrix"]), required=True)
@click.option("--run", "run_id", default=None)
@click.option("--llm", "llm_id", default=None)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def export(workspace_dir, what, fmt, run_id, llm_id, out_path):
    """Export analysis artifacts for spreadsheet or matrix consumers."""
    ws = Workspace(workspace_dir)
    out = Path(out_path)
    if what == "stats":
        if fmt != "csv":
            raise click.ClickException("stats export is CSV only")
        with out.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["run_id", "llm_id", "total_time", "best_node_id", "best_metric", "n_functional", "n_buggy"]
            )
            for rid in ws.run_ids():
                run = ws.load_run(rid)
                s = run_stats(run)
                writer.writerow(
                    [rid, run.config.llm_id, s.total_time, s.best_node_id, s.best_metric, s.n_functional, s.n_buggy]
                )
    elif what == "similarity":
        if fmt != "matrix" or run_id is None:
            raise click.ClickException("similarity export needs --format matrix and --run")
        _write_matrix(out, similarity_matrix(ws.load_run(run_id)).values.tolist())
    elif what == "distance":
        if fmt != "matrix" or llm_id is None:
            raise click.ClickException("distance export needs --format matrix and --llm")
        _write_matrix(out, distance_matrix(ws.runset(llm_id)).values.tolist())
    else:
        if fmt != "csv":
            raise click.ClickException("packages export is CSV only")
        table = package_table(ws.runsets())
        with out.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["package", "llm_id", "use_count", "buggy_count"])
            for pkg in table.packages:
                for llm in table.llm_ids:
                    cell = table.cell(pkg, llm)
                    writer.writerow([pkg, llm, cell.use_count, cell.buggy_count])
    click.echo(f"wrote {what} ({fmt}) to {out_path}")


if __name__ == "__main__":
    sys.exit(main())
