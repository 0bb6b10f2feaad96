"""Command line entry point ``bei-lab``.

Exit codes: 0 when every verdict passes, 1 when any fails, 2 on a
configuration or scale-guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from bei_lab import harness
from bei_lab.closed import closedness_certificate, find_closed_labeling
from bei_lab.edge_ideals import binomial_edge_ideal, cut_point_sets, ini_lex_graph
from bei_lab.errors import ScaleGuardError
from bei_lab.fields import parse_field
from bei_lab.graph import (
    Graph,
    canonical_id,
    from_graph6,
    from_text,
    graph_stats,
    induced_matching_number,
    is_weakly_chordal,
)
from bei_lab.groebner import buchberger, initial_ideal
from bei_lab.regularity import MAX_RESOLUTION_VARS, binomial_betti_table, initial_betti_table

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def read_graph(arg: str) -> Graph:
    """A path to an edge-list or graph6 file, ``-`` for stdin, or a literal
    graph6 string."""
    if arg == "-":
        return from_text(sys.stdin.read())
    p = Path(arg)
    if p.exists():
        return from_text(p.read_text())
    return from_graph6(arg)


def _cmd_campaign(args) -> int:
    cfg = harness.CampaignConfig.load(args.config)
    names = sorted(harness.CAMPAIGNS) if args.name == "all" else [args.name]
    for name in names:
        if name not in harness.CAMPAIGNS:
            raise ValueError(f"unknown campaign {name!r}; choose from {sorted(harness.CAMPAIGNS)} or 'all'")
    fields = args.field.split(",") if args.field else cfg.fields
    fields = [parse_field(f).name for f in fields]
    jobs = args.jobs if args.jobs is not None else cfg.jobs
    out = args.out or cfg.out
    n_max = {name: (args.n_max if args.n_max is not None else cfg.n_max[name]) for name in names}
    for name in names:
        harness.check_guard(name, n_max[name])

    results, summaries = [], []
    for name in names:
        res = harness.run_campaign(name, n_max[name], fields, jobs)
        results += res
        summaries.append(harness.summary(name, res, n_max[name], fields))
    csv_text = harness.report_csv(results)
    data = summaries[0] if len(summaries) == 1 else {
        "campaigns": summaries,
        "graphs": sum(s["graphs"] for s in summaries),
        "passed": sum(s["passed"] for s in summaries),
        "failed": sum(s["failed"] for s in summaries),
    }
    if out:
        out_path = Path(out)
        out_path.write_text(csv_text)
        summary_path = Path(args.summary) if args.summary else out_path.with_suffix(".json")
        summary_path.write_text(harness.summary_json(data))
    else:
        sys.stdout.write(csv_text)
    print(f"{'+'.join(names)}: {data['graphs']} graphs, {data['passed']} passed, {data['failed']} failed",
          file=sys.stderr)
    return EXIT_FAIL if data["failed"] else EXIT_OK


def analyze(G: Graph, field_name: str = "p32003") -> dict:
    F = parse_field(field_name)
    st = graph_stats(G)
    cert = closedness_certificate(G)
    out: dict = {
        "n": G.n,
        "edges": [list(e) for e in G.edges()],
        "canonical_id": canonical_id(G) if G.n <= 10 else None,
        "connected": st.connected,
        "components": [sorted(c) for c in st.components],
        "ell": list(st.ell),
        "r": st.r,
        "chordal": st.chordal,
        "claw_free": st.claw_free,
        "tree": st.tree,
        "closedness": cert.to_dict(),
        "cut_point_sets": [sorted(S) for S in cut_point_sets(G)],
    }
    if cert.closed:
        H = ini_lex_graph(G.relabel(cert.labeling)).graph
        out["ini_graph"] = {"weakly_chordal": is_weakly_chordal(H), "indmatch": induced_matching_number(H)}
    if 2 * max((len(c) for c in st.components), default=0) <= MAX_RESOLUTION_VARS:
        table = binomial_betti_table(G, F)
        out[f"reg_JG_{F.name}"] = table.regularity
        out["betti_JG"] = table.to_csv()
        ini = initial_betti_table(G, F)
        out[f"reg_inJG_{F.name}"] = ini.regularity
        out["betti_inJG"] = ini.to_csv()
    return out


def _cmd_analyze(args) -> int:
    G = read_graph(args.graph)
    info = analyze(G, args.field)
    if args.json:
        print(json.dumps(info, indent=2, sort_keys=True))
        return EXIT_OK
    for k, v in info.items():
        if k.startswith("betti_"):
            print(f"{k}:")
            print(v, end="")
        else:
            print(f"{k}: {json.dumps(v)}")
    return EXIT_OK


def _cmd_gb(args) -> int:
    G = read_graph(args.graph)
    F = parse_field(args.field)
    if args.closed:
        lab = find_closed_labeling(G)
        if lab is None:
            print("graph has no closed labeling", file=sys.stderr)
            return EXIT_FAIL
        G = G.relabel(lab)
    J = binomial_edge_ideal(G, F)
    gb = buchberger(J.gens, J.ring)
    print(f"# reduced lex Groebner basis of J_G over {F.name} ({len(gb)} elements)")
    for g in gb:
        print(g)
    print("# initial ideal")
    for m in initial_ideal(gb).gens:
        print(J.ring.mono_str(m))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bei-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("campaign", help="run an exhaustive verification campaign")
    c.add_argument("name", help=f"one of {', '.join(sorted(harness.CAMPAIGNS))}, or 'all'")
    c.add_argument("--n-max", type=int, default=None)
    c.add_argument("--field", default=None, help="comma separated, e.g. p32003,p2,Q")
    c.add_argument("--out", default=None, help="CSV report path (stdout if omitted)")
    c.add_argument("--summary", default=None, help="JSON summary path (default: OUT with .json)")
    c.add_argument("--jobs", type=int, default=None)
    c.add_argument("--config", default=None, help=f"JSON config (default: ${harness.CONFIG_ENV})")
    c.set_defaults(func=_cmd_campaign)

    a = sub.add_parser("analyze", help="statistics, closedness and regularity of one graph")
    a.add_argument("graph", help="graph file, '-' for stdin, or a graph6 string")
    a.add_argument("--field", default="p32003")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=_cmd_analyze)

    g = sub.add_parser("gb", help="reduced lex Groebner basis and initial ideal of J_G")
    g.add_argument("graph", help="graph file, '-' for stdin, or a graph6 string")
    g.add_argument("--field", default="p32003")
    g.add_argument("--closed", action="store_true", help="relabel to the smallest closed labeling first")
    g.set_defaults(func=_cmd_gb)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScaleGuardError, ValueError, KeyError, OSError) as e:
        print(f"bei-lab: error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
