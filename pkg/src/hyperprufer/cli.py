"""Command-line front end.

Subcommands: validate, encode, decode, enumerate, count, orbits, perm
and dot.  Files are read from a path or from standard input via ``-``.
Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .classic import CLASSIC, STAR, decode_classic, encode_classic
from .core import RootedHypertree, leaves, mark, nonleaves, star_reduce
from .enumeration import count_all_hypertrees, count_hypertrees, enumerate_hypertrees
from .errors import HypertreeError, OutOfRange, ParseError
from .files import emit_code, emit_tree, parse_code, parse_tree
from .permline import FiniteSupportPermutation, orbits, perm_encode_star
from .star import decode_star, encode_star_incremental


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_validate(args) -> int:
    tree = parse_tree(_read(args.path))
    leafset = ",".join(map(str, leaves(tree)))
    size_sum = sum(len(e) - 1 for e in tree.edges)
    degree_sum = sum(len(e) for e in tree.edges) - tree.n  # sum(deg - 1)
    print(f"n={tree.n} k={tree.k} leaves={{{leafset}}} OK")
    print(f"sum(size-1)={size_sum}=n-1 sum(deg-1)={degree_sum}=k-1")
    return 0


def _cmd_encode(args) -> int:
    tree = parse_tree(_read(args.path))
    code = encode_classic(tree) if args.codec == CLASSIC else encode_star_incremental(tree)
    sys.stdout.write(emit_code(code))
    return 0


def _cmd_decode(args) -> int:
    code = parse_code(_read(args.path))
    tree = decode_classic(code) if code.variant == CLASSIC else decode_star(code)
    sys.stdout.write(emit_tree(tree))
    return 0


def _cmd_enumerate(args) -> int:
    if args.count_only:
        if args.k is None:
            print(count_all_hypertrees(args.n))
        else:
            print(count_hypertrees(args.n, args.k))
        return 0
    if args.n > 6:
        raise OutOfRange("full enumeration is limited to n <= 6")
    first = True
    for tree in enumerate_hypertrees(args.n, args.k):
        if not first:
            print()
        sys.stdout.write(emit_tree(tree))
        first = False
    return 0


def _cmd_count(args) -> int:
    print(count_hypertrees(args.n, args.k))
    return 0


def _cmd_orbits(args) -> int:
    for orbit in orbits(args.n):
        members = sorted("".join(map(str, p)) for p in orbit)
        print(" ".join(members))
    return 0


def _cmd_perm(args) -> int:
    try:
        vals = [int(t) for t in args.sigma.split()]
    except ValueError:
        raise ParseError(f"--sigma expects integers, got {args.sigma!r}") from None
    sigma = FiniteSupportPermutation.from_values(vals)
    image = perm_encode_star(sigma)
    print(" ".join(map(str, image.one_line(len(vals)))))
    return 0


def _dot_graph(tree: RootedHypertree, name: str) -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in tree.vertices:
        lines.append(f"  {v};")
    aux = 0
    for m in mark(tree):
        if len(m.reduced) == 1:
            lines.append(f"  {m.reduced[0]} -- {m.marked};")
        else:
            h = f"h{aux}"
            aux += 1
            lines.append(f'  {h} [shape=polygon, sides={len(m.reduced) + 1}, label="{m}"];')
            for v in m.reduced:
                lines.append(f"  {h} -- {v};")
            lines.append(f"  {h} -- {m.marked} [style=bold];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_dot(args) -> int:
    tree = parse_tree(_read(args.path))
    if not args.steps:
        sys.stdout.write(_dot_graph(tree, "hypertree"))
        return 0
    stages = [tree]
    current = tree
    for v in nonleaves(tree):
        current = star_reduce(current, v)
        stages.append(current)
    for i, stage in enumerate(stages):
        if i:
            print()
        sys.stdout.write(_dot_graph(stage, f"step{i}"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperprufer", description="Prüfer codecs for rooted hypertrees")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a tree file and report n, k, leaves")
    p.add_argument("path")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("encode", help="encode a tree file to a code file")
    p.add_argument("path")
    p.add_argument("--codec", choices=(CLASSIC, STAR), required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="decode a code file back to a tree file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("enumerate", help="stream every tree on {1..n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="closed-form tree count for given n and k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("orbits", help="orbits of the S_n word bijection")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("perm", help="image of one permutation under the word bijection")
    p.add_argument("--sigma", required=True, help='one-line notation, e.g. "2 1"')
    p.set_defaults(func=_cmd_perm)

    p = sub.add_parser("dot", help="Graphviz rendering of a tree file")
    p.add_argument("path")
    p.add_argument("--steps", action="store_true", help="one graph per star-reduction stage")
    p.set_defaults(func=_cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except HypertreeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
