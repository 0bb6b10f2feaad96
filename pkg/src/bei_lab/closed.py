"""Closed graphs: the labeling condition, the interval-facet
characterization, and an exhaustive search for a closed labeling."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from bei_lab.errors import ScaleGuardError
from bei_lab.graph import (
    Graph,
    is_chordal,
    is_claw_free,
    maximal_cliques,
)

MAX_LABELING_SEARCH = 10

Labeling = tuple  # perm[v - 1] is the new label of vertex v


def closedness_witness(G: Graph) -> tuple[int, int, int] | None:
    """First triple (i, j, k), j < k, with {i,j}, {i,k} edges on the same side
    of i and {j,k} missing; None when G is closed in its labeling."""
    for i in G.vertices:
        nb = sorted(G.neighbors(i))
        for j, k in itertools.combinations(nb, 2):
            if (j > i) == (k > i) and not G.has_edge(j, k):
                return (i, j, k)
    return None


def is_closed_wrt_labeling(G: Graph) -> bool:
    return closedness_witness(G) is None


def facets_are_intervals(G: Graph) -> bool:
    for clique in maximal_cliques(G):
        if max(clique) - min(clique) + 1 != len(clique):
            return False
    return True


def find_closed_labeling(G: Graph, prefilter: bool = True) -> Labeling | None:
    """Lexicographically smallest labeling under which G is closed.

    Vertices 1..n receive new labels in turn, smallest first; a partial
    assignment is abandoned as soon as three labeled vertices violate the
    condition, since adding more vertices cannot repair that triple.  With
    ``prefilter`` graphs that are not chordal and claw-free are rejected up
    front (closed graphs are both).
    """
    n = G.n
    if n > MAX_LABELING_SEARCH:
        raise ScaleGuardError(f"closed-labeling search limited to n <= {MAX_LABELING_SEARCH}")
    if prefilter and not (is_chordal(G) and is_claw_free(G)):
        return None
    label = [0] * (n + 1)
    taken = [False] * (n + 1)
    nbrs = [set()] + [G.neighbors(v) for v in G.vertices]

    def violates(v: int) -> bool:
        lv = label[v]
        for u in nbrs[v]:
            if u >= v:
                continue
            lu = label[u]
            # v and some w as two neighbours of u on the same side
            for w in nbrs[u]:
                if w >= v or w == v:
                    continue
                lw = label[w]
                if (lv > lu) == (lw > lu) and not G.has_edge(v, w):
                    return True
            # u and some w as two neighbours of v on the same side
            for w in nbrs[v]:
                if w >= v or w <= u:
                    continue
                lw = label[w]
                if (lu > lv) == (lw > lv) and not G.has_edge(u, w):
                    return True
        return False

    def assign(v: int) -> bool:
        if v > n:
            return True
        for lab in range(1, n + 1):
            if taken[lab]:
                continue
            label[v] = lab
            taken[lab] = True
            if not violates(v) and assign(v + 1):
                return True
            taken[lab] = False
        label[v] = 0
        return False

    if assign(1):
        return tuple(label[1:])
    return None


def is_closed(G: Graph) -> bool:
    return find_closed_labeling(G) is not None


def find_structural_obstruction(G: Graph) -> tuple[str, tuple[int, ...]] | None:
    """An induced claw ``('claw', (center, a, b, c))`` or a chordless cycle
    ``('cycle', (v1, ..., vk))`` with k ≥ 4, if one exists."""
    for c in G.vertices:
        for a, b, d in itertools.combinations(sorted(G.neighbors(c)), 3):
            if not (G.has_edge(a, b) or G.has_edge(a, d) or G.has_edge(b, d)):
                return ("claw", (c, a, b, d))
    for k in range(4, G.n + 1):
        for verts in itertools.combinations(G.vertices, k):
            H = G.induced_subgraph(verts)
            if H.num_edges == k and all(H.degree(v) == 2 for v in H.vertices) and H.is_connected():
                return ("cycle", _cycle_order(G, verts))
    return None


def _cycle_order(G: Graph, verts) -> tuple[int, ...]:
    vs = set(verts)
    order = [min(vs)]
    prev = None
    while len(order) < len(vs):
        cur = order[-1]
        nxt = min(u for u in G.neighbors(cur) & vs if u != prev and u not in order)
        prev = cur
        order.append(nxt)
    return tuple(order)


@dataclass(frozen=True)
class ClosednessCertificate:
    closed: bool
    labeling: Labeling | None = None
    obstruction: tuple[str, tuple[int, ...]] | None = None

    def to_dict(self) -> dict:
        out: dict = {"closed": self.closed}
        if self.labeling is not None:
            out["labeling"] = list(self.labeling)
        if self.obstruction is not None:
            out["obstruction"] = {"kind": self.obstruction[0], "vertices": list(self.obstruction[1])}
        return out


def closedness_certificate(G: Graph) -> ClosednessCertificate:
    lab = find_closed_labeling(G)
    if lab is not None:
        return ClosednessCertificate(True, labeling=lab)
    return ClosednessCertificate(False, obstruction=find_structural_obstruction(G))


def closed_relabeling(G: Graph) -> Graph | None:
    """G relabelled by its smallest closed labeling, or None."""
    lab = find_closed_labeling(G)
    return None if lab is None else G.relabel(lab)
