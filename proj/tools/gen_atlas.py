"""Writes every graph on at most 7 vertices (one per isomorphism class) as graph6."""
import sys

import networkx as nx


def main(path):
    with open(path, "w") as out:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 0:
                continue
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/atlas7.g6")
