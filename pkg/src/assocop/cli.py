"""Command-line front end.  Exit codes: 0 ok, 1 suite failure, 2 usage, 3 degree cap."""
from __future__ import annotations

import argparse
import json
import sys

from . import combinatorics as cb
from . import lie
from . import operads as op
from .algebra import LinearCombo, dumps, from_json, to_basis
from .config import LIMITS, DegreeCapExceeded
from .order import poset, save_cached_tables
from .suites import SUITES, Bounds, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
DEFAULT_CAP = LIMITS.max_degree


class UsageError(Exception):
    pass


# -- input parsing ---------------------------------------------------------------

def parse_label(family: str, text: str, n: int | None = None):
    text = text.strip()
    if family == "S":
        if not text:
            raise UsageError("empty permutation")
        try:
            return cb.check_permutation(int(v) for v in text.split(","))
        except ValueError as exc:
            raise UsageError(f"bad permutation {text!r}: {exc}") from None
    if family == "Q":
        if n is None:
            raise UsageError("subset labels need an explicit degree (--n / --m)")
        members = tuple(int(v) for v in text.split(",") if v.strip())
        return cb.SubsetLabel(n, members)
    return cb.parse_tree(text)


def parse_combo(family: str, basis: str, text: str, n: int | None = None) -> LinearCombo:
    """A bare label (in the requested basis) or a JSON combination."""
    if text.lstrip().startswith("{"):
        try:
            x = from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad JSON combination: {exc}") from None
        if x.family != family:
            raise UsageError(f"JSON combination is of family {x.family}, expected {family}")
        return to_basis(x, basis)
    return LinearCombo.single(family, basis, parse_label(family, text, n))


# -- DOT -------------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace('"', r'\"') + '"'


def hasse_dot(P, bold_pairs=frozenset(), name: str | None = None) -> str:
    lines = [f"digraph {_quote(name or P.name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in P.elements:
        lines.append(f"  {_quote(P.label(x))};")
    for x, y in P.hasse_covers():
        style = ' [style=bold, penwidth=3]' if (x, y) in bold_pairs else ""
        lines.append(f"  {_quote(P.label(x))} -> {_quote(P.label(y))}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fibers_text(n: int, m: int, i: int) -> str:
    out = []
    for fb in op.fibers(n, m, i):
        pair = f"({','.join(map(str, fb.sigma))}) x ({','.join(map(str, fb.tau))})"
        members = " ".join("".join(map(str, r)) if len(r) < 10 else ",".join(map(str, r))
                           for r in fb.members)
        out.append(f"{pair}  bottom={','.join(map(str, fb.bottom))}"
                   f"  top={','.join(map(str, fb.top))}  [{len(fb.members)}] {members}")
    return "\n".join(out) + "\n"


def fibers_dot(n: int, m: int, i: int) -> str:
    P = poset("S", n + m - 1)
    which = {}
    for k, fb in enumerate(op.fibers(n, m, i)):
        for r in fb.members:
            which[r] = k
    bold = {(x, y) for x, y in P.hasse_covers() if which[x] == which[y]}
    return hasse_dot(P, bold, name=f"fibers_P{i}_S{n + m - 1}")


# -- commands --------------------------------------------------------------------

def cmd_compose(a) -> int:
    x = parse_combo(a.family, a.basis, a.x, a.n)
    y = parse_combo(a.family, a.basis, a.y, a.m)
    print(dumps(op.compose(x, y, a.i)))
    return EXIT_OK


def cmd_convert(a) -> int:
    # a bare label is read in the source basis; JSON carries its own basis
    src = a.source or ("M" if a.to == "F" else "F")
    x = parse_combo(a.family, src, a.x, a.n)
    print(dumps(to_basis(x, a.to)))
    return EXIT_OK


def cmd_fibers(a) -> int:
    LIMITS.check(a.n + a.m - 1)
    sys.stdout.write(fibers_dot(a.n, a.m, a.i) if a.dot else fibers_text(a.n, a.m, a.i))
    return EXIT_OK


def cmd_hasse(a) -> int:
    sys.stdout.write(hasse_dot(poset(a.family, a.n)))
    return EXIT_OK


def cmd_check(a) -> int:
    bounds = Bounds() if a.max_degree is None else Bounds().capped(a.max_degree)
    names = SUITES if a.suite == "all" else (a.suite,)
    ok = True
    for name in names:
        rep = run_suite(name, bounds, jobs=a.jobs)
        print(rep)
        if not rep.ok:
            ok = False
            print(json.dumps({"suite": name, "failures": [repr(f) for f in rep.failures]}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dynkin(a) -> int:
    print(dumps(to_basis(lie.dynkin_m(a.n), a.basis)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="assocop", description=__doc__)
    p.add_argument("--max-n", type=int, default=DEFAULT_CAP,
                   help=f"degree cap (default {DEFAULT_CAP}); raising it needs --allow-large")
    p.add_argument("--allow-large", action="store_true",
                   help="acknowledge factorial blowup when raising --max-n")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compose", help="partial composition x o_i y")
    c.add_argument("--family", choices=("S", "Q", "Y"), default="S")
    c.add_argument("--basis", choices=("F", "M"), default="F")
    c.add_argument("--x", required=True)
    c.add_argument("--y", required=True)
    c.add_argument("--i", type=int, required=True)
    c.add_argument("--n", type=int, help="degree of x (subset labels)")
    c.add_argument("--m", type=int, help="degree of y (subset labels)")
    c.set_defaults(func=cmd_compose)

    v = sub.add_parser("convert", help="change basis of a label or JSON combination")
    v.add_argument("--family", choices=("S", "Q", "Y"), default="S")
    v.add_argument("--to", choices=("F", "M"), required=True)
    v.add_argument("--from", dest="source", choices=("F", "M"),
                   help="basis of a bare label (default: the other one)")
    v.add_argument("--x", required=True)
    v.add_argument("--n", type=int)
    v.set_defaults(func=cmd_convert)

    f = sub.add_parser("fibers", help="fibers of P_i on S_{n+m-1}")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--i", type=int, required=True)
    f.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    f.set_defaults(func=cmd_fibers)

    h = sub.add_parser("hasse", help="Hasse diagram of an order as DOT")
    h.add_argument("--family", choices=("S", "Q", "Y"), default="S")
    h.add_argument("--n", type=int, required=True)
    h.set_defaults(func=cmd_hasse)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=SUITES + ("all",))
    k.add_argument("--max-degree", type=int)
    k.add_argument("--jobs", type=int, default=1)
    k.set_defaults(func=cmd_check)

    d = sub.add_parser("dynkin", help="Dynkin element theta_n")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--basis", choices=("F", "M"), default="M")
    d.set_defaults(func=cmd_dynkin)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if a.max_n > DEFAULT_CAP and not a.allow_large:
        parser.error(f"--max-n above {DEFAULT_CAP} requires --allow-large")
    old = LIMITS.max_degree
    LIMITS.max_degree = a.max_n
    try:
        code = a.func(a)
        save_cached_tables()
        return code
    except DegreeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        LIMITS.max_degree = old


if __name__ == "__main__":
    sys.exit(main())
