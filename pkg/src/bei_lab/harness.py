"""Exhaustive verification campaigns over small graphs.

Every campaign maps one connected graph (given by its canonical form) to a
:class:`CampaignResult` through a pure pipeline; results are sorted by
(n, canonical code) so reports are byte-for-byte reproducible for a given
configuration whatever the parallelism.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

from bei_lab.closed import (
    facets_are_intervals,
    find_closed_labeling,
    is_closed_wrt_labeling,
)
from bei_lab.edge_ideals import (
    binomial_edge_ideal,
    check_q1_q2_identities,
    cut_point_sets,
    ini_lex_graph,
    leaf_cut_vertices,
    verify_containments,
    verify_prime_decomposition,
)
from bei_lab.errors import ScaleGuardError
from bei_lab.fields import GF32003, Field, parse_field
from bei_lab.graph import (
    Graph,
    canonical_code,
    canonical_id,
    cliques_pairwise_intersect_at_most_one,
    enumerate_connected_graphs,
    from_graph6,
    induced_matching_number,
    is_chordal,
    is_path_graph,
    is_tree,
    is_weakly_chordal,
    longest_induced_path_length,
    maximal_cliques,
)
from bei_lab.groebner import is_groebner
from bei_lab.regularity import binomial_regularity, initial_regularity

CONFIG_ENV = "BEI_LAB_CONFIG"

CSV_COLUMNS = [
    "campaign", "n", "canonical_id", "edges", "closed?", "chordal?", "ell", "r",
    "reg_JG_p32003", "reg_inJG_p32003", "reg_JG_p2", "reg_JG_Q", "indmatch_H", "verdict",
]


@dataclass
class CampaignResult:
    campaign: str
    n: int
    canonical_id: str
    code: int
    edges: list[tuple[int, int]]
    measured: dict = field(default_factory=dict)
    verdict: bool = True
    seconds: float = 0.0

    def row(self) -> dict:
        m = self.measured
        out = {
            "campaign": self.campaign,
            "n": self.n,
            "canonical_id": self.canonical_id,
            "edges": " ".join(f"{i}-{j}" for i, j in self.edges),
            "closed?": _flag(m.get("closed")),
            "chordal?": _flag(m.get("chordal")),
            "ell": ";".join(str(v) for v in m["ell"]) if "ell" in m else "",
            "r": m.get("r", ""),
            "indmatch_H": m.get("indmatch_H", ""),
            "verdict": "pass" if self.verdict else "fail",
        }
        for col in ("reg_JG_p32003", "reg_inJG_p32003", "reg_JG_p2", "reg_JG_Q"):
            out[col] = m.get(col, "")
        return out


def _flag(v) -> str:
    return "" if v is None else ("yes" if v else "no")


@dataclass(frozen=True)
class Campaign:
    name: str
    run: Callable[[Graph, tuple[Field, ...]], tuple[dict, bool]]
    default_n_max: int
    guard: int
    description: str
    required_fields: tuple[str, ...] = ()
    select: Callable[[Graph], bool] = lambda G: True


# -- per-graph pipelines --------------------------------------------------------------

def _closed_form(G: Graph) -> Graph | None:
    lab = find_closed_labeling(G)
    return None if lab is None else G.relabel(lab)


def _reg_columns(G: Graph, fields, measured: dict, initial: bool = True) -> None:
    for F in fields:
        measured[f"reg_JG_{F.name}"] = binomial_regularity(G, F)
        if initial:
            measured[f"reg_inJG_{F.name}"] = initial_regularity(G, F)


def run_closed_regularity(G: Graph, fields) -> tuple[dict, bool]:
    H = _closed_form(G)
    m: dict = {"closed": H is not None, "chordal": is_chordal(G)}
    if H is None:
        return m, True
    ell = longest_induced_path_length(H)
    m["ell"] = [ell]
    m["closed_labeling"] = list(find_closed_labeling(G))
    if G.n <= 6:
        _reg_columns(H, fields, m)
    else:
        for F in fields:
            m[f"reg_inJG_{F.name}"] = initial_regularity(H, F)
    regs = [v for k, v in m.items() if k.startswith("reg_")]
    return m, all(v == ell for v in regs)


def run_mm_bounds(G: Graph, fields) -> tuple[dict, bool]:
    ell = longest_induced_path_length(G)
    m: dict = {"ell": [ell], "chordal": is_chordal(G), "closed": find_closed_labeling(G) is not None,
               "r": len(maximal_cliques(G)), "path": is_path_graph(G)}
    _reg_columns(G, fields, m)
    ok = True
    for F in fields:
        reg = m[f"reg_JG_{F.name}"]
        ok &= ell <= reg <= G.n - 1
        ok &= (reg == G.n - 1) == is_path_graph(G)
        # Gröbner degeneration can only raise the regularity
        ok &= reg <= m[f"reg_inJG_{F.name}"]
    return m, bool(ok)


def run_weakly_chordal_indmatch(G: Graph, fields) -> tuple[dict, bool]:
    H = _closed_form(G)
    m: dict = {"closed": H is not None, "chordal": is_chordal(G)}
    if H is None:
        return m, True
    ell = longest_induced_path_length(H)
    B = ini_lex_graph(H).graph
    m["ell"] = [ell]
    m["weakly_chordal_H"] = is_weakly_chordal(B)
    m["indmatch_H"] = induced_matching_number(B)
    # Woodroofe: the Hochster regularity of I(H) = in_lex(J_G) equals indmatch(H)
    m["reg_inJG_p32003"] = initial_regularity(H, GF32003)
    ok = m["weakly_chordal_H"] and m["indmatch_H"] == ell == m["reg_inJG_p32003"]
    return m, bool(ok)


def run_chordal_clique_bound(G: Graph, fields) -> tuple[dict, bool]:
    m: dict = {"chordal": is_chordal(G), "tree": is_tree(G)}
    r = len(maximal_cliques(G))
    m["r"] = r
    m["ell"] = [longest_induced_path_length(G)]
    m["closed"] = find_closed_labeling(G) is not None
    ok = True
    for F in fields:
        reg = binomial_regularity(G, F)
        m[f"reg_JG_{F.name}"] = reg
        ok &= reg <= r
        if is_tree(G):
            ok &= (reg == G.n - 1) == is_path_graph(G)
    return m, bool(ok)


def run_prime_decomposition(G: Graph, fields) -> tuple[dict, bool]:
    sets = cut_point_sets(G)
    m: dict = {"chordal": is_chordal(G), "cut_point_sets": [sorted(S) for S in sets]}
    ok = True
    for F in fields:
        if G.n <= 4:
            eq = verify_prime_decomposition(G, F)
            m[f"intersection_equal_{F.name}"] = eq
            ok &= eq
        cont = verify_containments(G, None, F)
        m[f"containment_all_S_{F.name}"] = cont
        ok &= cont
    if G.n <= 4 and is_chordal(G) and cliques_pairwise_intersect_at_most_one(G):
        verts = leaf_cut_vertices(G) or [1]
        q = {}
        for i in verts:
            checks = check_q1_q2_identities(G, i)
            q[str(i)] = checks
            ok &= all(v is not False for v in checks.values())
        m["q1_q2"] = q
    return m, bool(ok)


def run_char_independence(G: Graph, fields) -> tuple[dict, bool]:
    H = _closed_form(G)
    m: dict = {"closed": H is not None, "chordal": is_chordal(G)}
    if H is None:
        return m, True
    m["ell"] = [longest_induced_path_length(H)]
    _reg_columns(H, fields, m)
    regs = {v for k, v in m.items() if k.startswith("reg_")}
    return m, len(regs) == 1


def run_gb_closedness(G: Graph, fields) -> tuple[dict, bool]:
    total = closed = 0
    ok = True
    for perm in itertools.permutations(range(1, G.n + 1)):
        H = G.relabel(perm)
        J = binomial_edge_ideal(H)
        c = is_closed_wrt_labeling(H)
        total += 1
        closed += c
        ok &= is_groebner(list(J.gens)) == c == facets_are_intervals(H)
    m = {"labelings": total, "closed_labelings": closed, "closed": closed > 0, "chordal": is_chordal(G)}
    return m, bool(ok)


def _is_closed(G: Graph) -> bool:
    return find_closed_labeling(G) is not None


def _block_like(G: Graph) -> bool:
    if G.n > 6 and not is_tree(G):
        return False
    return is_chordal(G) and cliques_pairwise_intersect_at_most_one(G)


CAMPAIGNS: dict[str, Campaign] = {
    c.name: c
    for c in [
        Campaign("closed_regularity", run_closed_regularity, 6, 7,
                 "reg(S/J_G) = reg(S/in_lex J_G) = ell for connected closed graphs",
                 select=_is_closed),
        Campaign("mm_bounds", run_mm_bounds, 5, 5,
                 "ell <= reg(S/J_G) <= n-1, with reg = n-1 exactly for paths"),
        Campaign("weakly_chordal_indmatch", run_weakly_chordal_indmatch, 7, 7,
                 "in_lex graph of a closed graph is weakly chordal with indmatch = ell",
                 select=_is_closed),
        Campaign("chordal_clique_bound", run_chordal_clique_bound, 6, 7,
                 "reg(S/J_G) <= number of maximal cliques for block-like chordal graphs",
                 select=_block_like),
        Campaign("prime_decomposition", run_prime_decomposition, 4, 6,
                 "J_G = intersection of cut-point primes; J_G in every P_S(G)"),
        Campaign("char_independence", run_char_independence, 5, 5,
                 "regularity of J_G and in_lex J_G agree over GF(2), GF(32003), Q",
                 required_fields=("p2", "p32003", "Q"), select=_is_closed),
        Campaign("gb_closedness", run_gb_closedness, 5, 5,
                 "generators form a lex Groebner basis iff the labeling is closed"),
    ]
}


# -- configuration ----------------------------------------------------------------------

@dataclass
class CampaignConfig:
    n_max: dict[str, int] = field(default_factory=lambda: {k: c.default_n_max for k, c in CAMPAIGNS.items()})
    fields: list[str] = field(default_factory=lambda: ["p32003"])
    out: str | None = None
    jobs: int = 1

    @classmethod
    def load(cls, path: str | os.PathLike | None = None) -> CampaignConfig:
        """Defaults, overridden by the JSON file at ``path`` or at $BEI_LAB_CONFIG."""
        cfg = cls()
        path = path or os.environ.get(CONFIG_ENV)
        if not path:
            return cfg
        data = json.loads(Path(path).read_text())
        unknown = set(data) - {"n_max", "fields", "out", "jobs"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        for k, v in data.get("n_max", {}).items():
            if k not in CAMPAIGNS:
                raise ValueError(f"unknown campaign {k!r} in config")
            cfg.n_max[k] = int(v)
        if "fields" in data:
            cfg.fields = list(data["fields"])
        cfg.out = data.get("out", cfg.out)
        cfg.jobs = int(data.get("jobs", cfg.jobs))
        return cfg


def check_guard(name: str, n_max: int) -> None:
    c = CAMPAIGNS[name]
    if not 1 <= n_max <= c.guard:
        raise ScaleGuardError(f"campaign {name} supports n_max in 1..{c.guard} (got {n_max})")


# -- execution ---------------------------------------------------------------------------

def _run_one(args) -> CampaignResult:
    name, g6, field_names = args
    G = from_graph6(g6)
    fields = tuple(parse_field(f) for f in field_names)
    t0 = time.perf_counter()
    measured, verdict = CAMPAIGNS[name].run(G, fields)
    return CampaignResult(
        campaign=name,
        n=G.n,
        canonical_id=g6,
        code=canonical_code(G),
        edges=G.edges(),
        measured=measured,
        verdict=bool(verdict),
        seconds=time.perf_counter() - t0,
    )


def campaign_graphs(name: str, n_max: int, n_min: int = 1) -> list[Graph]:
    check_guard(name, n_max)
    graphs = []
    for n in range(max(1, n_min), n_max + 1):
        graphs += [G for G in enumerate_connected_graphs(n) if CAMPAIGNS[name].select(G)]
    return graphs


def run_campaign(
    name: str,
    n_max: int | None = None,
    fields: list[str] | None = None,
    jobs: int = 1,
    graphs: list[Graph] | None = None,
) -> list[CampaignResult]:
    if name not in CAMPAIGNS:
        raise KeyError(f"unknown campaign {name!r}; choose from {sorted(CAMPAIGNS)}")
    camp = CAMPAIGNS[name]
    n_max = camp.default_n_max if n_max is None else n_max
    names = [parse_field(f).name for f in (fields or ["p32003"])]
    for req in camp.required_fields:
        if req not in names:
            names.append(req)
    if graphs is None:
        graphs = campaign_graphs(name, n_max)
    else:
        for G in graphs:
            check_guard(name, G.n)
    tasks = [(name, canonical_id(G), tuple(names)) for G in graphs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=4))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda r: (r.n, r.code))
    return results


def report_csv(results: list[CampaignResult]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in results:
        w.writerow(r.row())
    return buf.getvalue()


def summary(name: str, results: list[CampaignResult], n_max: int, fields: list[str]) -> dict:
    by_n: dict[str, dict[str, int]] = {}
    for r in results:
        d = by_n.setdefault(str(r.n), {"graphs": 0, "passed": 0, "failed": 0})
        d["graphs"] += 1
        d["passed" if r.verdict else "failed"] += 1
    return {
        "campaign": name,
        "description": CAMPAIGNS[name].description,
        "n_max": n_max,
        "fields": fields,
        "graphs": len(results),
        "passed": sum(r.verdict for r in results),
        "failed": sum(not r.verdict for r in results),
        "by_n": by_n,
        "failures": [
            {"canonical_id": r.canonical_id, "n": r.n, "edges": [list(e) for e in r.edges], "measured": r.measured}
            for r in results if not r.verdict
        ],
    }


def summary_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=_jsonable) + "\n"


def _jsonable(obj):
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    raise TypeError(f"not serializable: {type(obj)!r}")


def result_dict(r: CampaignResult) -> dict:
    return asdict(r)
