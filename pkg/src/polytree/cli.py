"""Command-line front end.

Exit codes: 0 success, 1 parse/usage error, 2 domain error, 3 consistency
mismatch found by ``verify``.
"""

import argparse
import contextlib
import io
import json
import sys

from . import criteria, tree
from .errors import DomainError, ParseError
from .polynomial import compose, parse_polynomial, render

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _poly(text):
    try:
        return parse_polynomial(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    parser = _Parser(prog="polytree", description="Integer polynomials acting on rooted trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, formats=("text", "json"), base=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default="text")
        if base:
            p.add_argument("--base", "-d", type=int, default=2)
        return p

    p = add("check", "permutational and ergodic criteria (d = 2)", base=True)
    p.add_argument("poly", type=_poly)

    p = add("sections", "sections at a vertex or at every vertex up to a depth", base=True)
    p.add_argument("poly", type=_poly)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--vertex")
    g.add_argument("--depth", type=int)

    p = add("portrait", "portrait with first-level actions and switch counts",
            formats=("text", "json", "dot"), base=True)
    p.add_argument("poly", type=_poly)
    p.add_argument("--depth", type=int, required=True)

    p = add("act", "action on a level", base=True)
    p.add_argument("poly", type=_poly)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--value", type=int)

    p = add("orbit", "orbit of a point on a level", base=True)
    p.add_argument("poly", type=_poly)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--start", type=int, required=True)

    p = add("compose", "x -> B(A(x)); A acts first")
    p.add_argument("poly_a", type=_poly)
    p.add_argument("poly_b", type=_poly)

    p = add("verify", "cross-check the criteria against brute force", base=True)
    p.add_argument("poly", type=_poly)
    p.add_argument("--levels", type=int, default=10)

    p = add("automaton", "finite section automaton of a linear polynomial",
            formats=("text", "json", "dot"), base=True)
    p.add_argument("poly", type=_poly)
    return parser


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def cmd_check(args):
    perm = criteria.is_permutational_2adic(args.poly, d=args.base)
    ergodic = criteria.is_ergodic_2adic(args.poly, d=args.base)
    if args.format == "json":
        return EXIT_OK, _dump({"polynomial": render(args.poly),
                               "permutational": perm.to_dict(),
                               "ergodic": ergodic.to_dict()})
    out = f"polynomial: {render(args.poly)}\n" + perm.text() + ergodic.text()
    if ergodic.failed:
        out += "failing: " + "; ".join(c.description for c in ergodic.failed) + "\n"
    return EXIT_OK, out


def cmd_sections(args):
    d = args.base
    if args.vertex is not None:
        try:
            vertices = [tree.Vertex.parse(args.vertex, d)]
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        depth = 1 if args.depth is None else args.depth
        vertices = [node.vertex for node in tree.portrait(args.poly, d, depth).nodes
                    if len(node.vertex) == depth]
    rows = [(v, tree.section_at(args.poly, v)) for v in vertices]
    if args.format == "json":
        return EXIT_OK, _dump([{"vertex": v.word(), "section": render(g),
                                "coefficients": list(g.coefficients)} for v, g in rows])
    return EXIT_OK, "".join(f"{v.word()}: {render(g)}\n" for v, g in rows)


def cmd_portrait(args):
    p = tree.portrait(args.poly, args.base, args.depth)
    if args.format == "dot":
        return EXIT_OK, tree.portrait_dot(p)
    if args.format == "json":
        return EXIT_OK, _dump({
            "polynomial": render(args.poly),
            "base": p.d,
            "depth": p.depth,
            "nodes": [{"vertex": n.vertex.word(), "section": render(n.section),
                       "action": list(n.action)} for n in p.nodes],
            "switch_counts": p.switch_counts,
        })
    return EXIT_OK, tree.portrait_text(p)


def cmd_act(args):
    d, n = args.base, args.level
    if args.value is not None:
        try:
            image = tree.apply_mod(args.poly, d, args.value, n)
        except ValueError as exc:
            raise UsageError(str(exc))
        if args.format == "json":
            return EXIT_OK, _dump({"level": n, "value": args.value, "image": image})
        return EXIT_OK, f"{image}\n"
    table = tree.level_map(args.poly, d, n)
    if args.format == "json":
        return EXIT_OK, _dump({"level": n, "base": d, "images": list(table.images)})
    return EXIT_OK, "".join(f"{v} -> {y}\n" for v, y in enumerate(table.images))


def cmd_orbit(args):
    try:
        o = tree.orbit(args.poly, args.base, args.level, args.start)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc))
    if args.format == "json":
        return EXIT_OK, _dump({"points": list(o.points), "cycle_start": o.cycle_start,
                               "cycle_length": len(o.cycle)})
    out = " ".join(str(x) for x in o.tail)
    cycle = "(" + " ".join(str(x) for x in o.cycle) + ")"
    out = f"{out} {cycle}" if out else cycle
    return EXIT_OK, f"{out}\ncycle length: {len(o.cycle)}\n"


def cmd_compose(args):
    h = compose(args.poly_a, args.poly_b)
    if args.format == "json":
        return EXIT_OK, _dump({"polynomial": render(h), "coefficients": list(h.coefficients)})
    return EXIT_OK, render(h) + "\n"


def cmd_verify(args):
    if args.base != 2:
        raise criteria.UnsupportedBase("verify is only available for d = 2")
    try:
        report = criteria.verify_consistency(args.poly, args.levels)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc))
    out = _dump(report.to_dict()) if args.format == "json" else report.text()
    return (EXIT_OK if report.agree else EXIT_MISMATCH), out


def cmd_automaton(args):
    a = tree.linear_section_closure(args.poly, args.base)
    if args.format == "dot":
        return EXIT_OK, tree.automaton_dot(a)
    if args.format == "json":
        return EXIT_OK, _dump({
            "base": a.d,
            "initial": a.initial,
            "states": [render(g) for g in a.states],
            "transitions": [list(t) for t in a.transitions],
            "outputs": [list(o) for o in a.outputs],
        })
    return EXIT_OK, tree.automaton_text(a)


COMMANDS = {
    "check": cmd_check,
    "sections": cmd_sections,
    "portrait": cmd_portrait,
    "act": cmd_act,
    "orbit": cmd_orbit,
    "compose": cmd_compose,
    "verify": cmd_verify,
    "automaton": cmd_automaton,
}


def run(argv):
    """Run the CLI; return ``(exit_code, stdout_bytes, stderr_bytes)``."""
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:  # --help
        return int(exc.code or 0), captured.getvalue().encode(), b""
    except UsageError as exc:
        return EXIT_USAGE, b"", (str(exc) + "\n").encode()
    try:
        code, out = COMMANDS[args.command](args)
    except UsageError as exc:
        return EXIT_USAGE, b"", (f"polytree: error: {exc}\n").encode()
    except DomainError as exc:
        return EXIT_DOMAIN, b"", (f"polytree: {exc}\n").encode()
    err = b""
    if code == EXIT_MISMATCH:
        err = b"polytree: criterion and brute force disagree\n"
    return code, out.encode(), err


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(out)
    sys.stderr.buffer.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
