"""Command line front end: ``reachlab <command> [options]``.

Exit status is 0 on success, 1 when an analysis fails and 2 on malformed
input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .core import BinaryDfa, StateSet, format_dfa, is_circular_normalized, is_standardized
from .core import parse_a_map, parse_dfa_file, to_dot
from .counterexamples import build_A_n, build_B_8, verify_counterexample
from .enumeration import CSV_HEADER, table1
from .errors import ParseError, ReachlabError
from .orbit import orbit, orbit_subgroup, subgroup_chain
from .reachability import is_completely_reachable, reach_table, witnesses
from .words import bounds_report, construct_reaching_word, don_check, find_expanding_word

COMMANDS = ("check", "shortest-word", "construct-word", "expand", "enumerate",
            "counterexample", "export-dot", "bounds")


@dataclass
class CliConfig:
    command: str
    fmt: str = "text"
    options: dict = field(default_factory=dict)


def _add_automaton_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--a-map", help="images of 0..n-1 under a, e.g. 1,3,5,7,6,4,2,4")
    src.add_argument("--file", help="automaton file, one 'n=..; a=..' per line")
    src.add_argument("--builtin", help="B8 or A<n> for even n >= 10")
    p.add_argument("--index", type=int, default=0, help="which automaton of --file (0-based)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reachlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", dest="fmt", choices=choices, default="text")

    p = sub.add_parser("check", help="CR status, chain, orbit subgroup, witnesses, Don violations")
    _add_automaton_args(p)
    fmt(p)

    for name in ("shortest-word", "construct-word"):
        p = sub.add_parser(name)
        _add_automaton_args(p)
        p.add_argument("--set", required=True, help="target subset, e.g. 1,2,3,5,6,7")
        fmt(p)

    p = sub.add_parser("expand", help="shortest word expanding a subset")
    _add_automaton_args(p)
    p.add_argument("--set", required=True)
    p.add_argument("--max-len", type=int, default=None, help="default n + 1")
    fmt(p)

    p = sub.add_parser("enumerate", help="count Don violators among all automata of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("binary", "standardized"), default="binary")
    p.add_argument("--long", action="store_true", help="allow n = 9, 10")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", help="directory for per-shard results")
    p.add_argument("--emit-violators", help="write violating automata to this file")
    fmt(p, ("text", "json", "csv"))

    p = sub.add_parser("counterexample", help="verify the A_n family at one n")
    p.add_argument("--n", type=int, required=True)
    fmt(p, ("text", "json", "dot"))

    p = sub.add_parser("export-dot")
    _add_automaton_args(p)
    p.add_argument("--letters", default="ab", choices=("ab", "a", "b"))
    p.add_argument("--omit-fixed", action="store_true", help="drop a-loops on fixed states")

    p = sub.add_parser("bounds", help="reaching-word length bounds for n and s")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="subset size (default: all)")
    p.add_argument("--k", type=int, default=None, help="standardization shift")
    fmt(p, ("text", "json", "csv"))
    return parser


def load_automaton(opts: dict) -> BinaryDfa:
    if opts.get("a_map") is not None:
        values = parse_a_map(opts["a_map"])
        return BinaryDfa(len(values), values)
    if opts.get("builtin") is not None:
        name = opts["builtin"].upper()
        if name == "B8":
            return build_B_8()
        if name.startswith("A") and name[1:].isdigit():
            return build_A_n(int(name[1:]))
        raise ParseError(f"unknown builtin {opts['builtin']!r}")
    path = Path(opts["file"])
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    dfas = parse_dfa_file(text)
    if not 0 <= opts["index"] < len(dfas):
        raise ParseError(f"{path} has {len(dfas)} automata, no index {opts['index']}")
    return dfas[opts["index"]]


def _set_list(s: StateSet) -> list[int]:
    return list(s)


def cmd_check(dfa: BinaryDfa, opts: dict) -> dict:
    table = reach_table(dfa)
    cr = is_completely_reachable(dfa, table)
    chain = subgroup_chain(dfa)
    report = {
        "automaton": format_dfa(dfa),
        "n": dfa.n,
        "circular_normalized": is_circular_normalized(dfa),
        "standardized": is_standardized(dfa),
        "completely_reachable": cr,
        "reachable_subsets": table.reachable_count(),
        "chain": [str(h) for h in chain.levels],
        "chain_complete": chain.complete,
        "orbit": _set_list(orbit(dfa)),
        "orbit_subgroup_order": orbit_subgroup(dfa).order,
        "witnesses": [_set_list(w) for w in witnesses(dfa, table)],
    }
    if cr:
        report["don_violations"] = [
            {"set": _set_list(v.s), "shortest": v.shortest_len, "bound": v.bound}
            for v in don_check(dfa, table)
        ]
    return report


def cmd_shortest(dfa: BinaryDfa, opts: dict) -> dict:
    s = StateSet.parse(dfa.n, opts["set"])
    table = reach_table(dfa)
    w = table.word_to(s)
    return {"set": _set_list(s), "word": str(w), "length": len(w),
            "don_bound": dfa.n * (dfa.n - len(s))}


def cmd_construct(dfa: BinaryDfa, opts: dict) -> dict:
    s = StateSet.parse(dfa.n, opts["set"])
    if not is_standardized(dfa):
        raise ReachlabError("construct-word needs a standardized automaton")
    w = construct_reaching_word(dfa, s)
    best = reach_table(dfa).distance(s)
    return {"set": _set_list(s), "word": str(w), "length": len(w), "bfs_length": best,
            "bound": dfa.n * (dfa.n - len(s)) + dfa.n - 1}


def cmd_expand(dfa: BinaryDfa, opts: dict) -> dict:
    s = StateSet.parse(dfa.n, opts["set"])
    max_len = opts["max_len"] if opts["max_len"] is not None else dfa.n + 1
    w = find_expanding_word(dfa, s, max_len)
    return {"set": _set_list(s), "max_len": max_len, "expandable": w is not None,
            "word": None if w is None else str(w), "length": None if w is None else len(w)}


def cmd_enumerate(opts: dict) -> dict:
    summary = table1(opts["n"], opts["mode"], workers=opts["workers"],
                     checkpoint=opts["checkpoint"], allow_long=opts["long"])
    if opts["emit_violators"]:
        lines = [format_dfa(BinaryDfa(summary.n, a)) for a in summary.violator_list]
        Path(opts["emit_violators"]).write_text("".join(line + "\n" for line in lines))
    return {"n": summary.n, "mode": summary.mode, "candidates": summary.total_candidates,
            "cr": summary.cr_count, "violators": summary.violators,
            "published": summary.expected, "matches_published": summary.matches_published,
            "witness_failures": summary.witness_failures}


def cmd_counterexample(opts: dict) -> dict:
    r = verify_counterexample(opts["n"])
    return {"n": r.n, "completely_reachable": r.is_cr, "target": _set_list(r.target),
            "shortest": r.shortest_len, "lower_bound": r.lower_bound,
            "don_bound": r.don_bound, "violates": r.violates}


def cmd_bounds(opts: dict) -> dict:
    n = opts["n"]
    sizes = [opts["s"]] if opts["s"] is not None else list(range(1, n + 1))
    rows = []
    for s in sizes:
        b = bounds_report(n, s, opts["k"])
        rows.append({"s": s, "don": b.don, "thm1": b.thm1, "fs": round(b.fs, 4),
                     "std_transfer": b.std_transfer})
    return {"n": n, "k": opts["k"], "rows": rows}


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "don_violations":
            lines.append(f"don violations: {len(value)}")
            lines += [f"  {{{','.join(map(str, v['set']))}}}: {v['shortest']} > {v['bound']}" for v in value]
        elif key == "rows":
            lines.append("s\tdon\tthm1\tfs\tstd_transfer")
            lines += [f"{r['s']}\t{r['don']}\t{r['thm1']}\t{r['fs']}\t{r['std_transfer']}" for r in value]
        else:
            if isinstance(value, bool):
                value = "yes" if value else "no"
            lines.append(f"{key.replace('_', ' ')}: {value}")
    return "\n".join(lines) + "\n"


def run(config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    opts = config.options
    try:
        cmd = config.command
        if cmd == "enumerate":
            report = cmd_enumerate(opts)
        elif cmd == "counterexample":
            if config.fmt == "dot":
                out.write(to_dot(build_A_n(opts["n"]), letters="a", omit_fixed=True))
                return 0
            report = cmd_counterexample(opts)
        elif cmd == "bounds":
            report = cmd_bounds(opts)
        else:
            dfa = load_automaton(opts)
            if cmd == "export-dot":
                out.write(to_dot(dfa, letters=opts["letters"], omit_fixed=opts["omit_fixed"]))
                return 0
            handler = {"check": cmd_check, "shortest-word": cmd_shortest,
                       "construct-word": cmd_construct, "expand": cmd_expand}[cmd]
            report = handler(dfa, opts)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: 1:1: {exc}", file=sys.stderr)
        return 2
    except ReachlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if config.fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    elif config.fmt == "csv":
        if cmd == "enumerate":
            out.write(CSV_HEADER + "\n")
            out.write(",".join(str(report[k]) for k in ("n", "mode", "candidates", "cr", "violators")) + "\n")
        else:
            out.write("n,s,don,thm1,fs,std_transfer\n")
            for r in report["rows"]:
                out.write(f"{report['n']},{r['s']},{r['don']},{r['thm1']},{r['fs']},{'' if r['std_transfer'] is None else r['std_transfer']}\n")
    else:
        out.write(render_text(report))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(message)s")
    opts = {k: v for k, v in vars(args).items() if k not in ("command", "fmt", "verbose")}
    return run(CliConfig(args.command, getattr(args, "fmt", "text") or "text", opts))


if __name__ == "__main__":
    sys.exit(main())
