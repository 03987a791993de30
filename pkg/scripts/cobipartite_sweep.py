"""Check tw(F(G)) = pw(F(G)) = n + pw(G) over every small connected graph."""
import argparse
import time
from dataclasses import dataclass

import networkx as nx

from widthforge.cobipartite import build_cobipartite
from widthforge.graph import Graph
from widthforge.solvers import exact_pathwidth, exact_treewidth


@dataclass
class SweepConfig:
    max_vertices: int = 5
    connected_only: bool = True


def run(cfg: SweepConfig) -> int:
    mismatches = 0
    start = time.perf_counter()
    print("n  m  pw(G)  tw(F)  pw(F)")
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > cfg.max_vertices:
            break
        g = Graph.from_networkx(h)
        if g.n == 0 or (cfg.connected_only and not g.is_connected()):
            continue
        f = build_cobipartite(g).graph
        pw = exact_pathwidth(g).width
        tw_f, pw_f = exact_treewidth(f).width, exact_pathwidth(f).width
        flag = "" if tw_f == pw_f == g.n + pw else "  MISMATCH"
        mismatches += bool(flag)
        print(f"{g.n}  {g.m:<2} {pw:<6} {tw_f:<6} {pw_f}{flag}")
    print(f"mismatches={mismatches} elapsed={time.perf_counter() - start:.1f}s")
    return mismatches


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    args = p.parse_args()
    raise SystemExit(1 if run(SweepConfig(args.max_vertices, not args.all)) else 0)


if __name__ == "__main__":
    main()
