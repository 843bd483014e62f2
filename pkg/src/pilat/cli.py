"""Command line interface.

Subcommands: enumerate, chains, antichains, complements, ortho, cardinal,
hasse.  Exit codes: 0 success, 1 a requested verification came back false,
2 usage errors (bad flags, malformed input, caps exceeded).  Output is
deterministic byte for byte; the PILAT_MAX_N environment variable replaces
the built-in size caps.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import antichains as ac
from . import cardinal as card
from . import chains as ch
from . import complements as co
from . import ortho
from .enumeration import atoms, bell, coatoms, iter_partitions
from .partitions import Partition, covers, effective_cap

HASSE_CAP = 7
CENSUS_VERSION = "# pilat census v1"
HASSE_VERSION = "// pilat hasse v1"


@dataclass
class RunConfig:
    """Resolved invocation: where output goes and how wide to fan out."""

    out_path: str | None = None
    jobs: int = 1


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_partition_file(path: str) -> list[Partition]:
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    lines = [line for line in lines if line.strip()]
    if not lines:
        raise ValueError(f"{path}: no partition literals")
    n = len(lines[0].replace("|", " ").split())
    return [Partition.parse(line, n) for line in lines]


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# -- subcommands ------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    cfg = RunConfig(out_path=args.output)
    if args.counts:
        _emit(f"n={args.n} bell={bell(args.n)} atoms={len(atoms(args.n))} "
              f"coatoms={len(coatoms(args.n))}\n", cfg)
        return 0
    lines = [p.format() for p in iter_partitions(args.n)]
    _emit("".join(line + "\n" for line in lines), cfg)
    return 0


def _cmd_chains(args) -> int:
    cfg = RunConfig(out_path=getattr(args, "output", None))
    if args.chains_cmd == "keyframe":
        chain = ch.keyframe_chain(args.k)
        _emit("".join(p.format() + "\n" for p in chain), cfg)
        return 0
    # verify
    chain = _read_partition_file(args.file)
    report = ch.verify_chain(chain)
    out = [f"chain: {_yesno(report.is_chain)}",
           f"saturated: {_yesno(report.is_saturated)}",
           f"maximal: {_yesno(report.is_maximal)}"]
    if report.witness is not None:
        out.append(f"witness: {report.witness}")
    _emit("".join(line + "\n" for line in out), cfg)
    return 0 if report.is_chain else 1


def _cmd_antichains(args) -> int:
    cfg = RunConfig(out_path=args.output)
    members = (ac.doubleton_antichain(args.n) if args.antichain_kind == "doubleton"
               else ac.bipartition_antichain(args.n))
    if not args.verify:
        _emit("".join(p.format() + "\n" for p in members), cfg)
        return 0
    check_max = args.n <= effective_cap(ac.ANTICHAIN_CAP)
    report = ac.verify_antichain(members, args.n, check_maximal=check_max)
    out = [f"size: {len(members)}",
           f"antichain: {_yesno(report.is_antichain)}",
           f"maximal: {'skipped' if report.is_maximal is None else _yesno(report.is_maximal)}"]
    if report.witness is not None:
        out.append(f"witness: {report.witness}")
    _emit("".join(line + "\n" for line in out), cfg)
    ok = report.is_antichain and report.is_maximal is not False
    return 0 if ok else 1


def _cmd_complements(args) -> int:
    cfg = RunConfig(out_path=args.output, jobs=args.jobs)
    rows = co.complement_census(args.n, jobs=cfg.jobs)
    buf = io.StringIO()
    buf.write(CENSUS_VERSION + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["partition", "m", "block_sizes", "total", "count_nm1", "grieser"])
    for row in rows:
        writer.writerow([row.partition, row.m,
                         "+".join(str(s) for s in row.block_sizes),
                         row.total, row.count_nm1, row.grieser])
    _emit(buf.getvalue(), cfg)
    return 0


def _cmd_ortho(args) -> int:
    cfg = RunConfig(out_path=getattr(args, "output", None))
    if args.ortho_cmd == "witness":
        w = ortho.non_ortho_witness(args.n)
        _emit(f"n={w.n} atoms={w.atom_count} coatoms={w.coatom_count}\n"
              f"no orthocomplementation: {w.reason}\n", cfg)
        return 0
    found = ortho.search_orthocomplementation(args.n, exhaustive=args.exhaustive)
    if found is None:
        _emit("none\n", cfg)
        return 0
    lines = ["found"]
    for p in iter_partitions(args.n):
        lines.append(f"{p.format()} -> {found[p].format()}")
    _emit("".join(line + "\n" for line in lines), cfg)
    return 0


def _load_model(source: str) -> card.ContinuumModel:
    if source == "gch":
        return card.GCH
    with open(source, encoding="utf-8") as fh:
        return card.ContinuumModel.from_json(json.load(fh))


def _cmd_cardinal(args) -> int:
    model = _load_model(args.model)
    result = card.evaluate(args.expr, model)
    sys.stdout.write(card.format_result(result) + "\n")
    return 0


def _hasse_dot(parts: list[Partition]) -> str:
    lines = [HASSE_VERSION, "digraph partitions {", "  rankdir=BT;"]
    for p in parts:
        lines.append(f'  "{p.format()}";')
    for p in parts:
        for q in parts:
            if covers(p, q):
                lines.append(f'  "{p.format()}" -> "{q.format()}";')
    lines.append("}")
    return "".join(line + "\n" for line in lines)


def _cmd_hasse(args) -> int:
    cfg = RunConfig(out_path=args.output)
    sources = [src for src in (args.n, args.chain, args.antichain) if src is not None]
    if len(sources) != 1:
        raise ValueError("give exactly one of --n, --chain, --antichain")
    if args.n is not None:
        limit = effective_cap(HASSE_CAP)
        if args.n > limit:
            raise ValueError(f"n={args.n} exceeds hasse cap {limit}")
        parts = list(iter_partitions(args.n, cap=limit))
    else:
        parts = _read_partition_file(args.chain or args.antichain)
    _emit(_hasse_dot(parts), cfg)
    return 0


# -- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="pilat",
                                  description="partition lattice toolkit")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("enumerate", help="list a lattice or its counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--counts", action="store_true", help="print counts only")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("chains", help="keyframe chains; verify chain files")
    chains_sub = p.add_subparsers(dest="chains_cmd", required=True)
    kf = chains_sub.add_parser("keyframe", help="maximal chain through the dyadic keyframes")
    kf.add_argument("--k", type=int, required=True, help="ground set has 2^k elements")
    kf.add_argument("--output", default=None)
    vf = chains_sub.add_parser("verify", help="check a file of one literal per line")
    vf.add_argument("file")
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("antichains", help="antichain constructions")
    p.add_argument("antichain_kind", choices=["doubleton", "bipartition"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_antichains)

    p = sub.add_parser("complements", help="complement census")
    comp_sub = p.add_subparsers(dest="complements_cmd", required=True)
    cs = comp_sub.add_parser("census", help="CSV census over all of Pi_n")
    cs.add_argument("--n", type=int, required=True)
    cs.add_argument("--out", choices=["csv"], default="csv", help="output format")
    cs.add_argument("--jobs", type=int, default=1)
    cs.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_complements)

    p = sub.add_parser("ortho", help="orthocomplementation search and witnesses")
    ortho_sub = p.add_subparsers(dest="ortho_cmd", required=True)
    se = ortho_sub.add_parser("search", help="exhaustive search (small n)")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--exhaustive", action="store_true",
                    help="allow the n=5 search instead of the counting witness")
    wi = ortho_sub.add_parser("witness", help="counting witness for n >= 5")
    wi.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_ortho)

    p = sub.add_parser("cardinal", help="symbolic cardinal arithmetic")
    card_sub = p.add_subparsers(dest="cardinal_cmd", required=True)
    ev = card_sub.add_parser("eval", help="evaluate an expression under a model")
    ev.add_argument("expr")
    ev.add_argument("--model", default="gch", help="'gch' or a JSON model file")
    p.set_defaults(func=_cmd_cardinal)

    p = sub.add_parser("hasse", help="DOT diagram of a lattice or a file of partitions")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--chain", default=None)
    p.add_argument("--antichain", default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_hasse)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
