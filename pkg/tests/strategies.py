import itertools

from hypothesis import strategies as st

from bei_lab.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])
    if connected and not G.is_connected():
        # chain the components together through their smallest vertices
        from bei_lab.graph import connected_components

        reps = sorted(min(c) for c in connected_components(G))
        G = Graph.from_edges(n, G.edges() + list(zip(reps, reps[1:])))
    return G


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(1, n + 1)))))
