"""Embed cubic graphs into the 3D grid and report sizes and subdivision counts."""
import argparse
from dataclasses import dataclass

import networkx as nx

from widthforge.graph import Graph
from widthforge.special import check_grid_embedding, embed_3d_grid, suppress_to_source


@dataclass
class EmbedConfig:
    sizes: tuple = (4, 6, 8, 10)
    seed: int = 0


def run(cfg: EmbedConfig) -> None:
    print("n  dims          host  longest  bound  problems  iso")
    for n in cfg.sizes:
        g = Graph.from_networkx(nx.random_regular_graph(3, n, seed=cfg.seed))
        emb = embed_3d_grid(g)
        longest = max(len(p) for p in emb.edge_paths.values())
        iso = nx.is_isomorphic(suppress_to_source(emb).to_networkx(), g.to_networkx())
        dims = "x".join(map(str, emb.dims))
        print(f"{n:<3}{dims:<14}{emb.host_graph.n:<6}{longest:<9}{12 * n + 5:<7}"
              f"{len(check_grid_embedding(emb)):<10}{iso}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("sizes", nargs="*", type=int, default=[4, 6, 8, 10])
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    run(EmbedConfig(tuple(args.sizes), args.seed))


if __name__ == "__main__":
    main()
