"""Command line front end.

Exit codes: 0 when every applicable law passes, 1 when at least one law
fails, 2 on unreadable or malformed input and unknown names.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus
from .fileformat import ParseError, dump, parse, write
from .laws import FAIL, SUITES, run_suites
from .ortho import classify
from .residuation import build_table
from .structure import TooSmallError, horizontal_sum

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path, names=None):
    try:
        structures = parse(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    except ParseError as e:
        raise InputError(f"{path}: {e}") from e
    if names:
        by_name = {s.name: s for s in structures}
        unknown = [n for n in names if n not in by_name]
        if unknown:
            raise InputError(f"{path}: no block named {unknown[0]!r}")
        structures = [by_name[n] for n in names]
    return structures


def _witness(flag, s, witness):
    P = s.poset
    L = P.label
    if flag == "antitone":
        x, y = witness
        return f"{L(x)}≤{L(y)}, {L(y)}′≰{L(x)}′"
    if flag == "involution":
        (x,) = witness
        return f"{L(x)}″={L(s.c(s.c(x)))}≠{L(x)}"
    if flag == "cond_i":
        x, y = witness
        return f"{L(x)}≤{L(y)}′ but {L(x)}∨{L(y)} undefined"
    if flag in ("cond_ii", "cond_A", "cond_B"):
        x, y = witness
        return f"{L(x)}≤{L(y)}"
    return "(" + ",".join(L(v) for v in witness) + ")"


def _flag_name(field):
    for prefix in ("is_", "has_"):
        if field.startswith(prefix):
            return field[len(prefix):]
    return field


def cmd_classify(args, out):
    for s in _load(args.file, args.name):
        print(f"== {s.name} ==", file=out)
        for field, check in classify(s).items():
            flag = _flag_name(field)
            if check.ok:
                print(f"{flag}: PASS", file=out)
            else:
                print(f"{flag}: FAIL witness {_witness(flag, s, check.witness)}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    failed = False
    for s in _load(args.file, args.name):
        reports = run_suites(s, args.suite)
        if args.format == "text":
            print(f"== {s.name} ==", file=out)
        for r in reports:
            failed |= r.status == FAIL
            cx = r.render_counterexample(s.poset)
            if args.format == "json-lines":
                print(json.dumps({"structure": s.name, "law": r.law, "status": r.status,
                                  "counterexample": cx, "checked": r.checked},
                                 ensure_ascii=False), file=out)
            else:
                line = f"{r.law}: {r.status.upper()} ({r.checked} checked)"
                if cx is not None:
                    line += " counterexample (" + ", ".join(cx) + ")"
                elif r.status != "pass" and r.note:
                    line += f" [{r.note}]"
                print(line, file=out)
    return EXIT_FAIL if failed else EXIT_OK


def format_table(s, kind):
    P = s.poset
    table = build_table(s, kind)
    rows = [[("⊙" if kind == "odot" else "→"), *P.labels]]
    for x in P.elements:
        rows.append([P.label(x), *(P.fmt(table(x, y)) for y in P.elements)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join(" ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def cmd_table(args, out):
    for s in _load(args.file, args.name):
        print(f"== {s.name} ==", file=out)
        print(format_table(s, args.op), file=out)
    return EXIT_OK


def cmd_hsum(args, out):
    parts = _load(args.file, args.names)
    name = args.as_name or "+".join(args.names)
    try:
        s = horizontal_sum(parts, name)
    except TooSmallError as e:
        raise InputError(str(e)) from e
    write(args.out, [s])
    print(f"wrote {s.name} ({s.n} elements) to {args.out}", file=out)
    return EXIT_OK


def cmd_corpus(args, out):
    os.makedirs(args.out, exist_ok=True)
    entries = corpus.all_entries()
    for e in entries:
        path = os.path.join(args.out, f"{e.name}.oms")
        with open(path, "w", encoding="utf-8") as f:
            f.write(dump(e.structure, e.name))
    write(os.path.join(args.out, "all.oms"), [e.structure.renamed(e.name) for e in entries])
    print(f"wrote {len(entries)} structures to {args.out}", file=out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="omposet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="print structural flags with witnesses")
    c.add_argument("file")
    c.add_argument("--name", action="append", help="only this block (repeatable)")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run law suites")
    v.add_argument("file")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--format", choices=["text", "json-lines"], default="text")
    v.add_argument("--name", action="append")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print the ⊙ or → table")
    t.add_argument("file")
    t.add_argument("--op", choices=["odot", "arrow"], required=True)
    t.add_argument("--name", action="append")
    t.set_defaults(func=cmd_table)

    h = sub.add_parser("hsum", help="write the horizontal sum of named blocks")
    h.add_argument("file")
    h.add_argument("names", nargs="+")
    h.add_argument("--out", required=True)
    h.add_argument("--as", dest="as_name", help="name of the new block")
    h.set_defaults(func=cmd_hsum)

    k = sub.add_parser("corpus", help="export the built-in structures")
    k.add_argument("--out", required=True)
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"omposet: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
