"""Command-line front end.

Verbs:
  dims      dimension tables for the bigraded spaces
  basis     basis of one (n, r) cell
  check     predicate suite or named identity on an input
  identity  named identity checks (alias of `check --identity`)
  apply     a unary mould operator applied to a JSON mould
  section   the krv -> krv_ell section of a word-polynomial input
  dump      named moulds and fixtures

Exit codes: 0 success, 1 verification failure, 2 usage error.
The environment variable MOULDE_THREADS caps parallelism for table
computations (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import ari as ari_mod
from . import maps as maps_mod
from . import mould as mould_mod
from . import spaces as spaces_mod
from . import words as words_mod
from .maps import GateError
from .poly import poly_to_text

SPACES = ("lkv", "ls", "vkrv", "gr_krv", "krv_ell", "ds_ell")
NAMED_MOULDS = ("pic", "poc", "lopil", "pil", "pal", "lopal")
UNARY_OPS = {
    "swap": mould_mod.swap,
    "push": mould_mod.push,
    "circ": mould_mod.circ,
    "neg": mould_mod.neg_op,
    "mantar": mould_mod.mantar,
    "pari": mould_mod.pari,
    "dar": mould_mod.dar,
    "dar_inv": mould_mod.dar_inv,
    "delta": mould_mod.delta_op,
    "delta_inv": mould_mod.delta_inv,
    "teru": mould_mod.teru,
}
IDENTITIES = ("fundamental", "goodfund", "senary", "ganit_inverse")


class UsageError(Exception):
    pass


def _threads():
    try:
        return max(1, int(os.environ.get("MOULDE_THREADS", "1")))
    except ValueError:
        return 1


def _parse_range(text):
    """'3..10' -> range(3, 11); '5' -> range(5, 6)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _read_input(path):
    """Mould from .json, word polynomial otherwise."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return mould_mod.mould_from_json_text(text)
    return words_mod.ncpoly_from_text(text.strip())


def _as_mould(obj, cap=None):
    if isinstance(obj, mould_mod.Mould):
        return obj if cap is None else obj.with_cap(cap)
    M = mould_mod.ma(obj)
    return M if cap is None else M.with_cap(cap)


def _mould_text(M):
    lines = []
    for r in M.depths():
        lines.append("depth %d: %s" % (r, M.get(r)))
    if not lines:
        lines = ["0"]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

def cmd_dims(args, out):
    if args.space not in SPACES:
        raise UsageError("unknown space %r" % args.space)
    if args.space == "vkrv":
        raise UsageError("vkrv is graded by weight only; use basis")
    table = spaces_mod.dimension_table(
        args.space, _parse_range(args.n), _parse_range(args.r),
        threads=_threads())
    out.write(table.to_json() if args.format == "json" else table.to_text())
    return 0


def cmd_basis(args, out):
    if args.space not in SPACES:
        raise UsageError("unknown space %r" % args.space)
    n = int(args.n)
    if args.space == "vkrv":
        cell = spaces_mod.solve_vkrv(n)
    elif args.space == "gr_krv":
        raise UsageError("gr_krv has dimensions only; use dims")
    else:
        if args.r is None:
            raise UsageError("--r required for space %r" % args.space)
        solver = {"lkv": spaces_mod.solve_lkv, "ls": spaces_mod.solve_ls,
                  "krv_ell": spaces_mod.solve_krv_ell,
                  "ds_ell": spaces_mod.solve_ds_ell}[args.space]
        cell = solver(n, int(args.r))
    if args.format == "json":
        items = []
        for b in cell.basis:
            if isinstance(b, mould_mod.Mould):
                items.append(mould_mod.mould_to_json(b))
            else:
                items.append(words_mod.ncpoly_to_text(b))
        out.write(json.dumps({"space": cell.space, "n": cell.n, "r": cell.r,
                              "dim": cell.dim, "basis": items},
                             indent=2, sort_keys=True) + "\n")
    else:
        out.write("%s n=%s r=%s dim=%d\n"
                  % (cell.space, cell.n, cell.r, cell.dim))
        for b in cell.basis:
            if isinstance(b, mould_mod.Mould):
                out.write(_mould_text(b))
            else:
                out.write(words_mod.ncpoly_to_text(b) + "\n")
    return 0


def _run_identity(name, obj, depth, out):
    M = _as_mould(obj, cap=depth)
    if name == "fundamental":
        ok = ari_mod.fundamental_identity_check(M, depth)
    elif name == "goodfund":
        ok = ari_mod.goodfund_check(M, depth)
    elif name == "senary":
        ok = mould_mod.is_senary(M)
    elif name == "ganit_inverse":
        pic = ari_mod.named_mould("pic", depth)
        poc = ari_mod.named_mould("poc", depth)
        T = mould_mod.swap(M).with_cap(depth)
        ok = ari_mod.ganit_bar(pic, ari_mod.ganit_bar(-poc, T)).eq(T) \
            and ari_mod.ganit_bar(-poc, ari_mod.ganit_bar(pic, T)).eq(T)
    else:
        raise UsageError("unknown identity %r" % name)
    out.write("OK\n" if ok else "FAIL\n")
    return 0 if ok else 1


def cmd_check(args, out):
    obj = _read_input(args.input)
    if args.identity:
        return _run_identity(args.identity, obj, args.depth, out)
    if args.space:
        if args.space == "wkrv":
            if isinstance(obj, mould_mod.Mould):
                raise UsageError("wkrv check expects a word polynomial")
            report = maps_mod.w_krv_gate(obj)
            ok = report.verdicts.get("in_w_krv", False)
            if args.format == "json":
                out.write(report.to_json_text())
            else:
                for k, v in report.verdicts.items():
                    out.write("%s: %s\n" % (k, v))
            return 0 if ok else 1
        raise UsageError("unknown membership check %r" % args.space)
    # bare predicate battery
    M = _as_mould(obj, cap=args.depth)
    report = mould_mod.predicates(M)
    ok = True
    for k, v in report.items():
        if isinstance(v, bool):
            ok = ok and v
        out.write("%s: %s\n" % (k, v))
    return 0 if ok else 1


def cmd_identity(args, out):
    obj = _read_input(args.input)
    return _run_identity(args.name, obj, args.depth, out)


def cmd_apply(args, out):
    if args.op not in UNARY_OPS:
        raise UsageError("unknown operator %r" % args.op)
    obj = _read_input(args.input)
    M = _as_mould(obj)
    result = UNARY_OPS[args.op](M)
    text = (mould_mod.mould_to_json_text(result) if args.format == "json"
            else _mould_text(result))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_section(args, out):
    obj = _read_input(args.input)
    if isinstance(obj, mould_mod.Mould):
        raise UsageError("section expects a word-polynomial input")
    image = maps_mod.krv_section(obj, args.depth)
    text = (mould_mod.mould_to_json_text(image) if args.format == "json"
            else _mould_text(image))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_dump(args, out):
    if args.mould not in NAMED_MOULDS:
        raise UsageError("unknown mould %r" % args.mould)
    M = ari_mod.named_mould(args.mould, args.depth)
    out.write(mould_mod.mould_to_json_text(M) if args.format == "json"
              else _mould_text(M))
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="moulde", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="verb")

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("dims")
    sp.add_argument("--space", required=True)
    sp.add_argument("--n", required=True, help="weight or range, e.g. 3..10")
    sp.add_argument("--r", required=True, help="depth or range, e.g. 1..3")
    common(sp)
    sp.set_defaults(fn=cmd_dims)

    sp = sub.add_parser("basis")
    sp.add_argument("--space", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--r")
    common(sp)
    sp.set_defaults(fn=cmd_basis)

    sp = sub.add_parser("check")
    sp.add_argument("--input", required=True)
    sp.add_argument("--identity", choices=IDENTITIES)
    sp.add_argument("--space")
    sp.add_argument("--depth", type=int, default=4)
    common(sp)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("identity")
    sp.add_argument("--name", required=True, choices=IDENTITIES)
    sp.add_argument("--input", required=True)
    sp.add_argument("--depth", type=int, default=4)
    common(sp)
    sp.set_defaults(fn=cmd_identity)

    sp = sub.add_parser("apply")
    sp.add_argument("--op", required=True)
    sp.add_argument("--input", required=True)
    sp.add_argument("--output")
    common(sp)
    sp.set_defaults(fn=cmd_apply)

    sp = sub.add_parser("section")
    sp.add_argument("--input", required=True)
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--output")
    common(sp)
    sp.set_defaults(fn=cmd_section)

    sp = sub.add_parser("dump")
    sp.add_argument("--mould", required=True)
    sp.add_argument("--depth", type=int, default=4)
    common(sp)
    sp.set_defaults(fn=cmd_dump)

    return p


def run(argv, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "verb", None):
            raise UsageError("a verb is required "
                             "(dims, basis, check, identity, apply, "
                             "section, dump)")
        return args.fn(args, out)
    except UsageError as e:
        err.write("usage error: %s\n" % e)
        return 2
    except GateError as e:
        err.write("gate failure: %s\n" % e)
        return 1
    except (OSError, ValueError) as e:
        err.write("error: %s\n" % e)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
