"""Shared test utilities: seeded random graphs and a first-fit proper coloring."""

import random

from strongodd import Coloring, Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def greedy_proper_coloring(g: Graph) -> Coloring:
    colors = [0] * g.n
    for v in range(g.n):
        used = {colors[w] for w in g.adj[v] if colors[w]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(colors)
