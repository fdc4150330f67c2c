import pytest

from strongodd import Graph


@pytest.fixture(scope="session")
def connected_small_graphs():
    """All connected graphs on 1..6 vertices (one per isomorphism class)."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if 1 <= n <= 6 and nx.is_connected(G):
            out.append(Graph(n, [tuple(sorted(e)) for e in G.edges()]))
    # 1 + 1 + 2 + 6 + 21 + 112 isomorphism classes
    assert len(out) == 143
    return out
