"""Tabulate column-sweep width against exact treewidth for small brick walls.

The sweep starts and ends on full columns, so its width is the number of rows;
it meets a bound of "columns" only on walls that are at least as wide as tall.
"""
import argparse
from dataclasses import dataclass

from widthforge.certificates import verify_path_decomposition
from widthforge.cubic import brick_wall_pathdec, build_brick_wall
from widthforge.solvers import exact_pathwidth, exact_treewidth


@dataclass
class WallConfig:
    max_side: int = 6
    max_cells: int = 20


def run(cfg: WallConfig) -> None:
    print("rows cols sweep  tw  pw  sweep<=cols")
    for r in range(2, cfg.max_side + 1):
        for c in range(2, cfg.max_side + 1):
            wall = build_brick_wall(r, c)
            sweep = verify_path_decomposition(wall.graph, brick_wall_pathdec(wall))
            if r * c <= cfg.max_cells:
                tw, pw = exact_treewidth(wall.graph).width, exact_pathwidth(wall.graph).width
            else:
                tw = pw = "-"
            print(f"{r:<5}{c:<5}{sweep:<7}{tw!s:<4}{pw!s:<4}{sweep <= c}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-side", type=int, default=6)
    p.add_argument("--max-cells", type=int, default=20)
    args = p.parse_args()
    run(WallConfig(args.max_side, args.max_cells))


if __name__ == "__main__":
    main()
