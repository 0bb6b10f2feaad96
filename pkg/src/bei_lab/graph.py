"""Simple graphs on vertices 1..n stored as adjacency bitsets.

All public functions speak 1-based vertex labels; bit ``v - 1`` of
``adj[u - 1]`` is set iff ``{u, v}`` is an edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from bei_lab import _kernels
from bei_lab.errors import ScaleGuardError

MAX_VERTICES = 16
MAX_ENUMERATION = 8
MAX_CANONICAL = 10

VertexSet = frozenset  # of 1-based vertex labels


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _members(mask: int) -> VertexSet:
    return frozenset(b + 1 for b in _bits(mask))


def sort_key(vs: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(vs))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ScaleGuardError(f"graphs are limited to {MAX_VERTICES} vertices (got {self.n})")
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length differs from n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or (row >> u) & 1:
                raise ValueError(f"bad adjacency row for vertex {u + 1}")
            for v in _bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError("adjacency is not symmetric")

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i},{j}}} outside 1..{n}")
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """K_{1,leaves} with center 1."""
        return cls.from_edges(leaves + 1, [(1, j) for j in range(2, leaves + 2)])

    @classmethod
    def from_code(cls, n: int, code: int) -> Graph:
        """Inverse of the canonical bitstring (column-major upper triangle)."""
        pairs = [(i, j) for j in range(n) for i in range(j)]
        total = len(pairs)
        edges = [(i + 1, j + 1) for k, (i, j) in enumerate(pairs) if (code >> (total - 1 - k)) & 1]
        return cls.from_edges(n, edges)

    # -- queries -----------------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i - 1] >> (j - 1)) & 1)

    def neighbors(self, v: int) -> VertexSet:
        return _members(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph on ``vertices`` relabelled 1..k in increasing order."""
        vs = sorted(vertices)
        pos = {v: k for k, v in enumerate(vs, start=1)}
        return Graph.from_edges(
            len(vs), [(pos[i], pos[j]) for i, j in self.edges() if i in pos and j in pos]
        )

    def relabel(self, perm) -> Graph:
        """``perm[v]`` (dict or 1-indexed sequence with perm[0] unused) is the
        new label of vertex v.  A tuple of length n is read as perm[v-1]."""
        if isinstance(perm, dict):
            new = perm
        else:
            new = {v: perm[v - 1] for v in self.vertices}
        if sorted(new.values()) != list(self.vertices):
            raise ValueError("relabeling is not a permutation of 1..n")
        return Graph.from_edges(self.n, [(new[i], new[j]) for i, j in self.edges()])

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def __str__(self):
        return to_text(self).strip()


# -- components and structure ---------------------------------------------------

def _component_masks(G: Graph, within: int) -> list[int]:
    comps = []
    rest = within
    while rest:
        low = rest & -rest
        seen = frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= G.adj[v]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def connected_components(G: Graph) -> list[VertexSet]:
    """Partition of 1..n into connected vertex sets, sorted by minimum element."""
    return [_members(m) for m in _component_masks(G, (1 << G.n) - 1)]


def count_components(G: Graph, removed: Iterable[int] = ()) -> int:
    """Number of connected components of G with ``removed`` deleted."""
    within = ((1 << G.n) - 1) & ~_mask(removed)
    return len(_component_masks(G, within))


def is_chordal(G: Graph) -> bool:
    """Maximum cardinality search, then check the reverse visit order is a
    perfect elimination ordering."""
    n = G.n
    weight = [0] * n
    order: list[int] = []
    visited = 0
    for _ in range(n):
        v = max((u for u in range(n) if not (visited >> u) & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in _bits(G.adj[v] & ~visited):
            weight[u] += 1
    pos = {v: k for k, v in enumerate(order)}
    # in MCS order each vertex's earlier neighbours must form a clique
    for v in order:
        earlier = [u for u in _bits(G.adj[v]) if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        rest = _mask(u + 1 for u in earlier if u != parent)
        if rest & ~G.adj[parent]:
            return False
    return True


def is_claw_free(G: Graph) -> bool:
    for c in range(G.n):
        nb = list(_bits(G.adj[c]))
        for a, b, d in itertools.combinations(nb, 3):
            if not ((G.adj[a] >> b) & 1 or (G.adj[a] >> d) & 1 or (G.adj[b] >> d) & 1):
                return False
    return True


def maximal_cliques(G: Graph) -> list[VertexSet]:
    """Bron-Kerbosch with pivoting; sorted by their sorted vertex lists."""
    out: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(_bits(P | X), key=lambda u: (G.adj[u] & P).bit_count())
        for v in list(_bits(P & ~G.adj[pivot])):
            expand(R | (1 << v), P & G.adj[v], X & G.adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        expand(0, (1 << G.n) - 1, 0)
    return sorted((_members(m) for m in out), key=sort_key)


def cliques_pairwise_intersect_at_most_one(G: Graph) -> bool:
    cl = maximal_cliques(G)
    return all(len(a & b) <= 1 for a, b in itertools.combinations(cl, 2))


def longest_induced_path_length(G: Graph) -> int:
    """ℓ(G) for connected G by exhaustive scan of vertex subsets."""
    if not G.is_connected():
        raise ValueError("longest_induced_path_length expects a connected graph")
    if G.n <= 1:
        return 0
    return _kernels.longest_induced_path(G.adj, G.n)


def longest_induced_cycle_length(G: Graph) -> int:
    return _kernels.longest_induced_cycle(G.adj, G.n) if G.n >= 3 else 0


def is_weakly_chordal(G: Graph) -> bool:
    """No induced cycle of length ≥ 5 in G or in its complement."""
    return longest_induced_cycle_length(G) < 5 and longest_induced_cycle_length(G.complement()) < 5


def induced_matching_number(G: Graph) -> int:
    """Size of a largest induced matching (branch and bound over edges)."""
    edges = [(i - 1, j - 1) for i, j in G.edges()]
    # edge e blocks f when they share or are joined by an edge
    closed = [G.adj[i] | G.adj[j] | (1 << i) | (1 << j) for i, j in edges]
    ends = [(1 << i) | (1 << j) for i, j in edges]
    m = len(edges)
    best = 0

    def search(start: int, blocked: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (m - start) <= best:
            return
        for k in range(start, m):
            if ends[k] & blocked:
                continue
            if size + (m - k) <= best:
                return
            search(k + 1, blocked | closed[k], size + 1)

    search(0, 0, 0)
    return best


def matching_number(G: Graph) -> int:
    """Maximum matching size by exhaustive search (small graphs only)."""
    edges = G.edges()
    best = 0

    def search(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        for k in range(start, len(edges)):
            i, j = edges[k]
            bit = (1 << i) | (1 << j)
            if not used & bit:
                search(k + 1, used | bit, size + 1)

    search(0, 0, 0)
    return best


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.is_connected() and G.num_edges == G.n - 1


def is_path_graph(G: Graph) -> bool:
    """True when G is a single simple path through all its vertices."""
    if G.n <= 1:
        return G.n == 1
    return is_tree(G) and max(G.degree(v) for v in G.vertices) <= 2


@dataclass(frozen=True)
class GraphStats:
    ell: tuple[int, ...]
    r: int
    chordal: bool
    claw_free: bool
    tree: bool
    connected: bool
    components: tuple[VertexSet, ...] = field(default=())


def graph_stats(G: Graph) -> GraphStats:
    comps = connected_components(G)
    ell = tuple(longest_induced_path_length(G.induced_subgraph(c)) for c in comps)
    return GraphStats(
        ell=ell,
        r=len(maximal_cliques(G)),
        chordal=is_chordal(G),
        claw_free=is_claw_free(G),
        tree=is_tree(G),
        connected=len(comps) <= 1,
        components=tuple(comps),
    )


# -- canonical forms and enumeration ---------------------------------------------

def canonical_code(G: Graph) -> int:
    """Lexicographically minimal adjacency bitstring over all relabelings
    (upper triangle read column by column), as an integer."""
    if G.n > MAX_CANONICAL:
        raise ScaleGuardError(f"canonical form limited to n <= {MAX_CANONICAL}")
    return _kernels.canonical_code(G.adj, G.n)


def canonical_form(G: Graph) -> Graph:
    return Graph.from_code(G.n, canonical_code(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.num_edges == H.num_edges and canonical_code(G) == canonical_code(H)


def canonical_id(G: Graph) -> str:
    """graph6 string of the canonical form."""
    return to_graph6(canonical_form(G))


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs
    on n vertices, sorted by canonical code.

    Every connected graph has a vertex whose removal leaves it connected, so
    the classes on n vertices are obtained by attaching a new vertex to the
    classes on n - 1 vertices in every nonempty way.
    """
    if not 1 <= n <= MAX_ENUMERATION:
        raise ScaleGuardError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION} (got {n})")
    codes = {0}
    for k in range(2, n + 1):
        nxt = set()
        for code in sorted(codes):
            base = Graph.from_code(k - 1, code)
            for nb in range(1, 1 << (k - 1)):
                adj = list(base.adj) + [nb]
                for u in _bits(nb):
                    adj[u] |= 1 << (k - 1)
                nxt.add(_kernels.canonical_code(adj, k))
        codes = nxt
    return [Graph.from_code(n, c) for c in sorted(codes)]


# -- text formats ---------------------------------------------------------------------

def to_text(G: Graph) -> str:
    lines = [str(G.n)] + [f"{i} {j}" for i, j in G.edges()]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    """Read the edge-list format (first line n, then ``i j`` pairs, ``#``
    comments) or a graph6 line."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty graph description")
    if not lines[0][0].isdigit():
        if len(lines) != 1:
            raise ValueError("graph6 input must be a single line")
        return from_graph6(lines[0])
    n = int(lines[0])
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if not i < j:
            raise ValueError(f"edge {line!r} must be written with i < j")
        edges.append((i, j))
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> str:
    n = G.n
    if n > 62:
        raise ValueError("graph6 long form not supported")
    bits = [int(G.has_edge(i, j)) for j in range(2, n + 1) for i in range(1, j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or not 63 <= ord(s[0]) <= 125:
        raise ValueError(f"bad graph6 string {s!r}")
    n = ord(s[0]) - 63
    bits = []
    for ch in s[1:]:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    pairs = [(i, j) for j in range(2, n + 1) for i in range(1, j)]
    if len(bits) < len(pairs):
        raise ValueError("graph6 string too short")
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
