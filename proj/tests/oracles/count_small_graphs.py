#!/usr/bin/env python3
"""Independent counts of connected triangle-free planar graphs, n <= 7.

Source of truth: the networkx Graph Atlas (all 1253 graphs on up to seven
vertices, An Atlas of Graphs, Read & Wilson).  The counts printed here are
frozen into tests/test_generators.cpp; rerun this script to regenerate them.

Usage: python3 count_small_graphs.py
"""

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main():
    counts = {}
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n < 1:
            continue
        if not nx.is_connected(g) if n > 0 else True:
            continue
        if any(nx.triangles(g).values()):
            continue
        planar, _ = nx.check_planarity(g)
        if not planar:
            continue
        counts[n] = counts.get(n, 0) + 1
    for n in sorted(counts):
        print(f"n={n}: {counts[n]}")


if __name__ == "__main__":
    main()
