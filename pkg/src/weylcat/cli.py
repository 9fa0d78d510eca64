"""Command-line front end.

Exit codes: 0 on success, 1 when an input violates a mathematical
invariant (the message names it), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import quiver as qv
from .blocks import WeightModule, block_of, dual, std_module
from .errors import DomainError
from .exactla import to_q
from .io import dumps, read_module, write_module
from .localization import parse_directions, twisted_localize
from .sp4_catalog import LEGEND, catalog, figure1, parse_coset_type, support_diagram
from .sp_bridge import sp_support

GLYPHS = LEGEND


def _rationals(text: str) -> list:
    try:
        return [to_q(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational list {text!r}") from exc


def _emit(m: WeightModule, out: str | None) -> None:
    if out:
        write_module(m, out)
    else:
        sys.stdout.write(dumps(m))


def _pretty_label(lab) -> str:
    # V_1 labels print with superscript signs
    text = str(lab).replace("(1,1)+", "(1,1)⁺").replace("(1,1)-", "(1,1)⁻")
    return f"V{lab.k} label {text}"


# --------------------------------------------------------------------------
# verbs


def cmd_construct(args) -> int:
    if args.kind == "random":
        if args.mu is None:
            raise DomainError("random modules need --mu to fix the block")
        block = block_of(_rationals(args.mu))
        m = WeightModule(block, qv.random_rep(block.k, random.Random(args.seed), max_dim=args.max_dim))
    else:
        mu = _rationals(args.mu) if args.mu is not None else None
        s = [int(x) for x in args.s.split(",")] if args.s else None
        m = std_module(args.kind, mu, s=s)
    if args.n is not None and m.n != args.n:
        raise DomainError(f"--mu has {m.n} coordinates but -n is {args.n}")
    _emit(m, args.output)
    return 0


def cmd_decompose(args) -> int:
    m = read_module(args.file)
    parts = qv.decompose(m.rep, args.seed)
    if not parts:
        print("zero module")
        return 0
    if len(parts) == 1 and parts[0][1] == 1:
        lab = qv.classify(parts[0][0], args.seed)
        print(f"indecomposable: {_pretty_label(lab)}")
        if lab.notice:
            print(f"note: {lab.notice}")
        return 0
    total = sum(mult for _, mult in parts)
    print(f"{total} indecomposable summands in {len(parts)} isomorphism classes")
    for x, mult in parts:
        lab = qv.classify(x, args.seed)
        dims = " ".join(f"{qv.vertex_bits(v)}:{d}" for v, d in x.dims.items())
        print(f"  {mult} x {_pretty_label(lab)}  dims {dims}")
    return 0


def cmd_dual(args) -> int:
    _emit(dual(read_module(args.file)), args.output)
    return 0


def cmd_localize(args) -> int:
    m = read_module(args.file)
    gamma = parse_directions(args.gamma)
    x = _rationals(args.x) if args.x else [0] * len(gamma)
    _emit(twisted_localize(m, gamma, x), args.output)
    return 0


def cmd_sp_support(args) -> int:
    m = read_module(args.file)
    coset = args.coset if args.coset in ("even", "odd") else _rationals(args.coset)
    table = sp_support(m, coset, [(-args.radius, args.radius)] * m.n)
    for w, d in sorted(table.items()):
        print("(" + ", ".join(str(c) for c in w) + f"): {d}")
    return 0


def cmd_catalog(args) -> int:
    ctype = parse_coset_type(args.type)
    x = _rationals(args.x)
    entries = catalog(ctype, kmax=args.kmax, x=x, full=args.full)
    if args.json:
        print(json.dumps([e.to_json() for e in entries], indent=2, sort_keys=True))
        return 0
    for e in entries:
        dims = " ".join(f"{qv.vertex_bits(v)}:{d}" for v, d in e.module.rep.dims.items())
        print(f"{e.name:<22} {e.support:<24} {e.label or '-':<40} {dims}")
    return 0


def cmd_diagram(args) -> int:
    if args.figure1:
        sys.stdout.write(figure1(args.radius))
        return 0
    if not args.file:
        raise DomainError("diagram needs a module file or --figure1")
    sys.stdout.write(support_diagram(read_module(args.file), args.radius, args.coset))
    return 0


def cmd_selftest(args) -> int:
    from .acceptance import CHECKS

    failed = 0
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        ok, detail = fn()
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} [{time.perf_counter() - t0:5.2f}s] {name}: {detail}")
    return 1 if failed else 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="weylcat",
        description="Bounded weight modules of Weyl algebras as cube-quiver representations.",
        epilog=GLYPHS,
    )
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized search (default 0)")
    # also accepted after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="as the global --seed")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    c = sub.add_parser("construct", parents=[common], help="write a standard or random module")
    c.add_argument("--kind", required=True, choices=["F", "P", "L", "Ps", "random"])
    c.add_argument("--mu", help="weight, e.g. 0,1/2")
    c.add_argument("-n", type=int, help="number of variables (checked against --mu)")
    c.add_argument("--s", help="corner for Ps, e.g. 0,-1")
    c.add_argument("--max-dim", type=int, default=3, help="vertex dimension cap for random modules")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("decompose", parents=[common], help="Krull-Schmidt decomposition with labels")
    d.add_argument("file")
    d.set_defaults(func=cmd_decompose)

    du = sub.add_parser("dual", parents=[common], help="restricted dual")
    du.add_argument("file")
    du.add_argument("-o", "--output")
    du.set_defaults(func=cmd_dual)

    lo = sub.add_parser("localize", parents=[common], help="(twisted) localization")
    lo.add_argument("file")
    lo.add_argument("--gamma", required=True, help="directions, e.g. t1,d2")
    lo.add_argument("--x", help="twist per direction, e.g. 1/2,0 (default all 0)")
    lo.add_argument("-o", "--output")
    lo.set_defaults(func=cmd_localize)

    sp = sub.add_parser("sp-support", parents=[common], help="sp-weights and multiplicities on one coset")
    sp.add_argument("file")
    sp.add_argument("--coset", default="even", help="even, odd, or a weight in the coset")
    sp.add_argument("--radius", type=int, default=3)
    sp.set_defaults(func=cmd_sp_support)

    ca = sub.add_parser("catalog", parents=[common], help="sp(4) indecomposables of one coset type")
    ca.add_argument("--type", default="hw", help="hw, nw-es, ne-sw or cuspidal")
    ca.add_argument("--kmax", type=int, default=1)
    ca.add_argument("--x", default="1/2,1/3", help="twist parameters for non-integral cosets")
    ca.add_argument("--full", action="store_true", help="add rotations and duals")
    ca.add_argument("--json", action="store_true")
    ca.set_defaults(func=cmd_catalog)

    di = sub.add_parser("diagram", parents=[common], help="ASCII support picture", epilog=GLYPHS)
    di.add_argument("file", nargs="?")
    di.add_argument("--radius", type=int, default=8)
    di.add_argument("--coset", default="odd")
    di.add_argument("--figure1", action="store_true", help="region layout of the four compass simples")
    di.set_defaults(func=cmd_diagram)

    st = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
