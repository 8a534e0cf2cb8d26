"""Command-line interface.

Subcommands: anonymize, covers, attack-gen, audit, oracle, experiment.
Exit codes: 0 success, 1 usage error, 2 data error, 3 infeasible oracle
enumeration.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .anonymize import disassociate
from .audit import DEFAULT_ENUMERATION_LIMIT, audit, breach_oracle
from .covers import detect_all_covers, detect_covers
from .errors import DataError, InfeasibleEnumerationError
from .experiment import ExperimentConfig, build_knowledge, run_experiment
from .io import (
    COVER_HEADER,
    ORACLE_HEADER,
    cover_rows,
    format_rows,
    parse_transactions,
    parse_tstar,
    serialize_audit_report,
    serialize_knowledge,
    serialize_tstar,
)
from .model import Dataset


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on bad usage instead of argparse's 2
        raise UsageError(f"{self.prog}: {message}")


def _sizes(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def build_parser() -> _Parser:
    shared = _Parser(add_help=False)
    shared.add_argument("--input", required=True, help="input file")
    shared.add_argument("--output", default=".", help="output directory")
    shared.add_argument("-k", type=int, default=3, help="anonymity threshold (default 3)")
    shared.add_argument("-m", type=int, default=2, help="attacker knowledge size (default 2)")
    shared.add_argument(
        "--max-cluster-size",
        type=_sizes,
        default=(),
        metavar="N[,N...]",
        help="cluster size bound(s); experiment takes a list, other commands one value",
    )
    shared.add_argument("--attacker", choices=("strong", "moderate", "weak"), default="strong")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--z", type=int, default=None, help="moderate knowledge size")
    shared.add_argument("--lexicon", default=None, help="lexicon file for the weak attacker")
    shared.add_argument("--format", choices=("csv", "json-lines"), default="csv", dest="fmt")

    parser = _Parser(prog="disassoc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("anonymize", parents=[shared], help="disassociate a transaction file")
    sub.add_parser("covers", parents=[shared], help="detect cover problems in a serialized dataset")
    sub.add_parser("attack-gen", parents=[shared], help="generate attacker background knowledge")
    sub.add_parser("audit", parents=[shared], help="run the privacy-breach detection pipeline")
    oracle = sub.add_parser("oracle", parents=[shared], help="exhaustive reconstruction oracle")
    oracle.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_ENUMERATION_LIMIT,
        help=f"alignment enumeration bound (default {DEFAULT_ENUMERATION_LIMIT})",
    )
    sub.add_parser("experiment", parents=[shared], help="cluster-size sweep with CSV report")
    return parser


def _single_size(args) -> int:
    if len(args.max_cluster_size) != 1:
        raise UsageError(
            f"disassoc {args.command}: --max-cluster-size needs exactly one value"
        )
    return args.max_cluster_size[0]


def _outdir(args) -> Path:
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _config(args, sizes) -> ExperimentConfig:
    config = ExperimentConfig(
        input_path=args.input,
        output_dir=args.output,
        max_cluster_sizes=tuple(sizes),
        k=args.k,
        m=args.m,
        attacker=args.attacker,
        seed=args.seed,
        z=args.z,
        lexicon_path=args.lexicon,
        fmt=args.fmt,
    )
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return config


def _cmd_anonymize(args) -> int:
    size = _single_size(args)
    _config(args, [size])
    dataset = parse_transactions(args.input)
    tstar = disassociate(dataset, args.k, args.m, size)
    path = _outdir(args) / "tstar.txt"
    path.write_text(serialize_tstar(tstar, dataset.vocabulary), "utf-8")
    print(f"{len(tstar.clusters)} clusters -> {path}")
    return 0


def _cmd_covers(args) -> int:
    tstar, vocab = parse_tstar(Path(args.input).read_text("utf-8"))
    covers = detect_all_covers(tstar)
    suffix = "csv" if args.fmt == "csv" else "jsonl"
    path = _outdir(args) / f"covers.{suffix}"
    path.write_text(format_rows(COVER_HEADER, cover_rows(covers, vocab), args.fmt), "utf-8")
    print(f"{len(covers)} cover problems -> {path}")
    return 0


def _pipeline(args, size):
    config = _config(args, [size])
    dataset = parse_transactions(args.input)
    tstar = disassociate(dataset, args.k, args.m, size)
    covers = detect_all_covers(tstar)
    knowledge = build_knowledge(config, dataset, covers)
    return dataset, tstar, covers, knowledge


def _cmd_attack_gen(args) -> int:
    size = _single_size(args)
    dataset, _tstar, _covers, knowledge = _pipeline(args, size)
    path = _outdir(args) / "knowledge.txt"
    path.write_text(serialize_knowledge(knowledge, dataset.vocabulary), "utf-8")
    print(f"{len(knowledge)} itemsets ({args.attacker}) -> {path}")
    return 0


def _cmd_audit(args) -> int:
    size = _single_size(args)
    dataset, tstar, covers, knowledge = _pipeline(args, size)
    report = audit(tstar, knowledge, covers=covers)
    outdir = _outdir(args)
    (outdir / "knowledge.txt").write_text(
        serialize_knowledge(knowledge, dataset.vocabulary), "utf-8"
    )
    meta = {
        "attacker": args.attacker,
        "k": args.k,
        "m": args.m,
        "maxClusterSize": size,
        "seed": args.seed,
    }
    path = outdir / "audit_report.txt"
    path.write_text(
        serialize_audit_report(report, dataset.vocabulary, knowledge.extra_labels, meta),
        "utf-8",
    )
    print(f"total vulnerable records: {report.total} -> {path}")
    return 0


def _cmd_oracle(args) -> int:
    size = _single_size(args)
    _config(args, [size])
    dataset = parse_transactions(args.input)
    tstar = disassociate(dataset, args.k, args.m, size)
    vocab = dataset.vocabulary
    rows = []
    refused = 0
    for ci, cluster in enumerate(tstar.clusters):
        for inst in detect_covers(cluster, ci):
            for y in sorted(inst.covered):
                pair = frozenset((inst.target_item, y))
                label = " ".join(sorted(vocab.label(i) for i in pair))
                try:
                    verdict = breach_oracle(cluster, pair, args.k, limit=args.limit)
                except InfeasibleEnumerationError as exc:
                    refused += 1
                    rows.append((ci, label, f"refused:{exc.count}", "", "", ""))
                    continue
                rows.append(
                    (
                        ci,
                        label,
                        "ok",
                        int(verdict.vulnerable),
                        int(verdict.deanonymized),
                        " ".join(sorted(vocab.label(i) for i in verdict.linked_items)),
                    )
                )
    suffix = "csv" if args.fmt == "csv" else "jsonl"
    path = _outdir(args) / f"oracle.{suffix}"
    path.write_text(format_rows(ORACLE_HEADER, rows, args.fmt), "utf-8")
    print(f"{len(rows)} oracle verdicts ({refused} refused) -> {path}")
    return 3 if refused else 0


def _cmd_experiment(args) -> int:
    if not args.max_cluster_size:
        config = _config(args, [])
    else:
        config = _config(args, args.max_cluster_size)
    rows = run_experiment(config)
    suffix = "csv" if args.fmt == "csv" else "jsonl"
    print(f"{len(rows)} sweep points -> {Path(args.output) / ('sweep.' + suffix)}")
    return 0


_COMMANDS = {
    "anonymize": _cmd_anonymize,
    "covers": _cmd_covers,
    "attack-gen": _cmd_attack_gen,
    "audit": _cmd_audit,
    "oracle": _cmd_oracle,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleEnumerationError as exc:
        print(f"infeasible enumeration: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
