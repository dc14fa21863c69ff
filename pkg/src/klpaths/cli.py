"""Command line entry point.  Exit codes: 0 ok, 1 usage or input error, 2 verification mismatch."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import words as W
from .bruhat_graph import b_table, c_counts
from .coxeter import CoxeterError, load_group
from .kl import kl_classical, kl_slalom
from .lattice import omega, paths_with_signs, slaloms, step_string, upsilon
from .ncpoly import NotExpressible, complete_ab_index, to_cd
from .qsym import d_basis, f_tilde
from .reflection_order import OrderError, parse_order
from .threecomplete import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bits(text: str) -> W.Word:
    text = text.strip()
    return () if text in ("", "e") else W.parse(text)


def _word_label(E: W.Word) -> str:
    return W.fmt(E) or "e"


def _interval_args(p: argparse.ArgumentParser, order: bool = True) -> None:
    p.add_argument("--group", required=True, help="preset A<n>, B<n>, K<n> or a Coxeter matrix file")
    p.add_argument("--u", default="", help='1-based word, e.g. "1 2 1"; empty for the identity')
    p.add_argument("--v", required=True, help="1-based word")
    if order:
        p.add_argument("--order", default="height", help="height | good:<s> | biparabolic:<r>,<s>")
        p.add_argument("--conj", action="append", type=int, default=[], metavar="S",
                       help="apply the lower conjugate by generator S (repeatable, left to right)")


def _load(args):
    grp = load_group(args.group)
    u, v = grp.parse_word(args.u), grp.parse_word(args.v)
    order = parse_order(grp, args.order, args.conj) if hasattr(args, "order") else None
    return grp, u, v, order


def _need_below(grp, u, v, strict=False):
    if not grp.bruhat_leq(u, v) or (strict and u == v):
        rel = "strictly below" if strict else "below"
        raise UsageError(f"u = {u!r} is not {rel} v = {v!r}")


def cmd_kl(args, out) -> int:
    grp, u, v, order = _load(args)
    _need_below(grp, u, v)
    results = {}
    if args.method in ("slalom", "both"):
        results["slalom"] = kl_slalom(grp, u, v, order)
    if args.method in ("classical", "both"):
        results["classical"] = kl_classical(grp, u, v)
    for name, P in results.items():
        out.write(f"{name}: P = {P}\n")
    if args.method == "both":
        same = results["slalom"] == results["classical"]
        out.write("MATCH\n" if same else "MISMATCH\n")
        return EXIT_OK if same else EXIT_MISMATCH
    return EXIT_OK


def cmd_btable(args, out) -> int:
    grp, u, v, order = _load(args)
    _need_below(grp, u, v, strict=True)
    table = b_table(grp, order, u, v)
    ell = len(v) - len(u)
    if args.k is not None:
        if args.k < 1:
            raise UsageError("--k must be positive")
        lengths = [args.k]
    else:
        lengths = [k for k in range(1, ell + 1) if (ell - k) % 2 == 0]
    out.write("E\tb\tc\n")
    for k in lengths:
        b = {E: table.get(E, 0) for E in W.words(k - 1)}
        c = c_counts(b)
        for E in b:
            out.write(f"{_word_label(E)}\t{b[E]}\t{c[E]}\n")
    return EXIT_OK


def cmd_cdindex(args, out) -> int:
    grp, u, v, order = _load(args)
    _need_below(grp, u, v, strict=True)
    ab = complete_ab_index(grp, order, u, v)
    cd = to_cd(ab)
    if args.json:
        obj = cd.to_json()
        if args.ab:
            obj["ab"] = [[w, c] for w, c in sorted(ab.terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))]
        out.write(json.dumps(obj) + "\n")
        return EXIT_OK
    out.write(f"{cd}\n")
    if args.ab:
        out.write(f"{ab}\n")
    return EXIT_OK


def cmd_omega(args, out) -> int:
    T = _bits(args.t)
    if T and not W.is_sparse(T):
        raise UsageError(f"{W.fmt(T)} is not a sparse word")
    out.write(f"{omega(T)}\n")
    if args.paths:
        for p in slaloms(T):
            out.write(f"{step_string(p)}\n")
    return EXIT_OK


def cmd_upsilon(args, out) -> int:
    E = _bits(args.e)
    out.write(f"{upsilon(E)}\n")
    if args.paths:
        for p in paths_with_signs(E):
            out.write(f"{step_string(p)}\n")
    return EXIT_OK


def cmd_dbasis(args, out) -> int:
    out.write(f"{d_basis(_bits(args.t))}\n")
    return EXIT_OK


def cmd_ftilde(args, out) -> int:
    grp, u, v, order = _load(args)
    _need_below(grp, u, v)
    for deg, part in f_tilde(grp, order, u, v).items():
        out.write(f"degree {deg}: {part}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rep = run_suite(args.suite, args.n)
    if args.json:
        out.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
    else:
        out.write(rep.table() + "\n")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="klpaths", description="Kazhdan-Lusztig polynomials from Bruhat path counts")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    q = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P(u,v)")
    _interval_args(q)
    q.add_argument("--method", choices=["slalom", "classical", "both"], default="slalom")
    q.set_defaults(func=cmd_kl)

    q = sub.add_parser("btable", help="path counts b(u,v)_E and their partial sums, as TSV")
    _interval_args(q)
    q.add_argument("--k", type=int, help="path length (default: every length with the right parity)")
    q.set_defaults(func=cmd_btable)

    q = sub.add_parser("cdindex", help="complete cd-index of [u,v]")
    _interval_args(q)
    q.add_argument("--ab", action="store_true", help="also print the a,b-expansion")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_cdindex)

    q = sub.add_parser("omega", help="slalom polynomial of a sparse word")
    q.add_argument("--t", required=True)
    q.add_argument("--paths", action="store_true", help="list the contributing lattice paths")
    q.set_defaults(func=cmd_omega)

    q = sub.add_parser("upsilon", help="lattice path polynomial of a binary word")
    q.add_argument("--e", required=True)
    q.add_argument("--paths", action="store_true", help="list the contributing lattice paths")
    q.set_defaults(func=cmd_upsilon)

    q = sub.add_parser("dbasis", help="L-expansion of the peak basis element D_T")
    q.add_argument("--t", required=True)
    q.set_defaults(func=cmd_dbasis)

    q = sub.add_parser("ftilde", help="graded slices of the path quasisymmetric function")
    _interval_args(q)
    q.set_defaults(func=cmd_ftilde)

    q = sub.add_parser("verify", help="run a verification suite")
    q.add_argument("--suite", required=True, choices=sorted(SUITES))
    q.add_argument("--n", type=int, help="size parameter of the suite")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, CoxeterError, OrderError, NotExpressible, ValueError) as exc:
        sys.stderr.write(f"klpaths: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
