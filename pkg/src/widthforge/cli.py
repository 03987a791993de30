"""Command-line entry point.

Every command prints one summary line ``width=<w> valid=<bool>``.  Exit codes:
0 success, 1 verification failure, 2 usage or input error, 3 solver budget
exceeded.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import formats
from .certificates import (DecompositionError, OrderingError, PathDecomposition, cutwidth_of_ordering,
                           verify_path_decomposition, verify_tree_decomposition)
from .cobipartite import build_cobipartite, lift_pathdec, project_pathdec
from .cubic import brick_wall_pathdec, build_brick_wall, reduce_cutwidth_to_treewidth
from .solvers import BudgetExceeded, exact_cutwidth, exact_pathwidth, exact_treewidth
from .special import check_grid_embedding, embed_3d_grid, reduce_to_d_regular

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_graph(path):
    return formats.parse_graph(Path(path).read_text())


def _summary(width, valid) -> None:
    print(f"width={width} valid={str(bool(valid)).lower()}")


def _out_dir(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _ordering(args, g):
    if args.ordering and args.random_ordering:
        raise UsageError("--ordering and --random-ordering are exclusive")
    if args.ordering:
        return formats.parse_ordering(Path(args.ordering).read_text(), g)
    order = sorted(g.vertices)
    if args.random_ordering:
        random.Random(args.seed).shuffle(order)
    return tuple(order)


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    solver = {"tw": exact_treewidth, "pw": exact_pathwidth, "cw": exact_cutwidth}[args.kind]
    res = solver(g, args.budget)
    if args.output:
        if args.kind == "cw":
            text = formats.write_ordering(res.certificate, g)
        else:
            cert = res.certificate
            text = formats.write_td(cert.to_tree() if isinstance(cert, PathDecomposition) else cert, g)
        Path(args.output).write_text(text)
    _summary(res.width, True)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    text = Path(args.certificate).read_text()
    try:
        if args.kind == "ordering":
            width = cutwidth_of_ordering(g, formats.parse_ordering(text, g))
        else:
            td = formats.parse_td(text, g)
            if args.kind == "pd":
                width = verify_path_decomposition(g, PathDecomposition.from_tree(td))
            else:
                width = verify_tree_decomposition(g, td)
    except (DecompositionError, OrderingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _summary("none", False)
        return EXIT_INVALID
    ok = args.width is None or width <= args.width
    _summary(width, ok)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    out = _out_dir(args)
    kind = args.kind
    if kind == "cobipartite":
        inst = build_cobipartite(g)
        if args.pd:
            pd = PathDecomposition.from_tree(formats.parse_td(Path(args.pd).read_text(), g))
        else:
            pd = exact_pathwidth(g, args.budget).certificate
        lifted = lift_pathdec(inst, pd)
        width = verify_path_decomposition(inst.graph, lifted)
        (out / "cobipartite.gr").write_text(formats.write_graph(inst.graph))
        (out / "cobipartite.td").write_text(formats.write_td(lifted.to_tree(), inst.graph))
        _summary(width, width == g.n + pd.width)
        return EXIT_OK
    if kind == "grid3d":
        emb = embed_3d_grid(g)
        (out / "grid3d.gr").write_text(formats.write_graph(emb.host_graph))
        (out / "grid3d.coords").write_text(formats.write_coordinates(emb.coords, emb.host_graph))
        _summary("none", not check_grid_embedding(emb))
        return EXIT_OK
    order = _ordering(args, g)
    if kind == "cubic":
        res = reduce_cutwidth_to_treewidth(g, order, cols=args.cols)
        name = "g4"
    else:
        if args.d is None:
            raise UsageError("reduce dregular needs -d")
        res = reduce_to_d_regular(g, order, args.d, cols=args.cols)
        name = "dregular"
    width = verify_tree_decomposition(res.graph, res.certificate)
    (out / f"{name}.gr").write_text(formats.write_graph(res.graph))
    (out / "cert.td").write_text(formats.write_td(res.certificate, res.graph))
    _summary(width, res.validity_flag)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    """Lift an optimal path decomposition into the co-bipartite graph and project it back."""
    g = _read_graph(args.graph)
    inst = build_cobipartite(g)
    pd = exact_pathwidth(g, args.budget).certificate
    lifted = lift_pathdec(inst, pd)
    width = verify_path_decomposition(inst.graph, lifted)
    back = project_pathdec(inst, lifted)
    ok = verify_path_decomposition(g, back) == pd.width and width == g.n + pd.width
    _summary(width, ok)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_wall(args) -> int:
    wall = build_brick_wall(args.rows, args.cols, args.lattice)
    pd = brick_wall_pathdec(wall)
    width = verify_path_decomposition(wall.graph, pd)
    out = _out_dir(args)
    (out / "wall.gr").write_text(formats.write_graph(wall.graph))
    (out / "wall.td").write_text(formats.write_td(pd.to_tree(), wall.graph))
    _summary(width, True)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="widthforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact treewidth, pathwidth or cutwidth")
    s.add_argument("kind", choices=["tw", "pw", "cw"])
    s.add_argument("graph")
    s.add_argument("-o", "--output", help="write the certificate here")
    s.add_argument("--budget", type=int, help="maximum vertex count (default from WIDTHFORGE_BUDGET)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a decomposition or ordering")
    s.add_argument("kind", choices=["td", "pd", "ordering"])
    s.add_argument("graph")
    s.add_argument("certificate")
    s.add_argument("--width", type=int, help="also require width at most this")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reduce", help="build a reduction instance with its certificate")
    s.add_argument("kind", choices=["cobipartite", "cubic", "dregular", "grid3d"])
    s.add_argument("graph")
    s.add_argument("-o", "--out-dir", default=".")
    s.add_argument("--ordering", help="linear ordering file (cubic, dregular)")
    s.add_argument("--random-ordering", action="store_true", help="shuffle the vertex order")
    s.add_argument("--seed", type=int, default=0, help="seed for --random-ordering")
    s.add_argument("--pd", help="path decomposition of the source (.td, path-shaped) for cobipartite")
    s.add_argument("-d", type=int, help="target degree for dregular")
    s.add_argument("--cols", type=int, help="override the wall width (voids the validity flag)")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("roundtrip", help="co-bipartite lift/project round trip")
    s.add_argument("graph")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("wall", help="brick wall with its column-sweep path decomposition")
    s.add_argument("rows", type=int)
    s.add_argument("cols", type=int)
    s.add_argument("--lattice", choices=["brick", "grid"], default="brick")
    s.add_argument("-o", "--out-dir", default=".")
    s.set_defaults(func=cmd_wall)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, formats.FormatError, OrderingError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
