#!/usr/bin/env python3
"""Write every graph of the networkx atlas (orders 0..7) as graph6, one per line."""
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main(path):
    graphs = graph_atlas_g()
    with open(path, "wb") as out:
        for g in graphs:
            if g.number_of_nodes() == 0:
                continue  # graph6 cannot express the null graph
            out.write(nx.to_graph6_bytes(g, header=False))
    print(f"{len(graphs)} atlas graphs, {len(graphs) - 1} written to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/graph_atlas_n7.g6")
