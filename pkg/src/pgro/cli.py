"""Command-line interface: ``pgro info|grobner|experiment|corpus``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .basis import InternalError, NotGenerating, build_context, radical_layers
from .corpus import CorpusError, corpus_entry, load_corpus
from .dumps import basis_text, nontips_text
from .experiment import (bucket_counts, compare_orderings, comparison_tsv, reports_tsv,
                         run_experiment)
from .groupfile import GroupFileError, load_group
from .groups import GroupError, PGroup, Selection
from .jennings import jennings_basis_size, jennings_series, layer_polynomial
from .orderings import Ordering, WordError
from .pipeline import run

EXIT_INPUT = 2
EXIT_INTERNAL = 3

ORDERINGS = [o.value for o in Ordering]
SELECTIONS = [s.value for s in Selection]


class InputError(Exception):
    pass


def resolve_sources(specs: list[str]) -> list[tuple[str, PGroup]]:
    """Files, directories of group files, ``corpus`` or ``corpus:<label>``."""
    out = []
    for spec in specs:
        if spec == "corpus" or spec.startswith("corpus:"):
            label = spec.partition(":")[2]
            entries = load_corpus()
            if label:
                try:
                    entries = [corpus_entry(label)]
                except KeyError as exc:
                    raise InputError(str(exc.args[0])) from None
            out += [(e.label, e.group()) for e in entries]
            continue
        path = Path(spec)
        if path.is_dir():
            files = sorted(f for f in path.iterdir() if f.is_file() and not f.name.startswith("."))
            out += [(f.stem, load_group(f)) for f in files]
        elif path.is_file():
            out.append((path.stem, load_group(path)))
        else:
            raise InputError(f"no such file or directory: {spec}")
    if not out:
        raise InputError("no groups given")
    return out


def _single(spec: str) -> tuple[str, PGroup]:
    groups = resolve_sources([spec])
    if len(groups) != 1:
        raise InputError(f"{spec} names {len(groups)} groups, expected one")
    return groups[0]


def cmd_info(args) -> int:
    label, G = _single(args.group)
    ctx = build_context(G, G.gens)
    d = jennings_series(G).layer_counts(G.p)
    print(f"group: {label}")
    print(f"order: {G.order} = {G.p}^{G.n}")
    print(f"prime: {G.p}")
    print(f"degree: {G.degree}")
    print(f"defining generators: {len(G.gens)}")
    print(f"nilpotency degree N: {ctx.nilpotency}")
    print("Jennings layer counts d_r: " + " ".join(map(str, d)))
    print("radical layer dims: " + " ".join(map(str, radical_layers(ctx))))
    print("Jennings layer polynomial: " + " ".join(map(str, layer_polynomial(d, G.p))))
    print(f"Je(G) = n(n+1)/2: {jennings_basis_size(G.n)}")
    return 0


def cmd_grobner(args) -> int:
    label, G = _single(args.group)
    pres = run(G, args.ordering, args.selection, seed=args.seed,
               use_given=args.use_given_generators)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    (out / "nontips.txt").write_text(
        nontips_text(pres.tree, G.p, G.n, pres.ctx.nilpotency))
    (out / "basis.txt").write_text(basis_text(pres.basis))
    print(f"{label}: ordering {args.ordering}, {pres.ctx.alphabet_size} generators, "
          f"N = {pres.ctx.nilpotency}, {len(pres.basis)} basis elements -> {out}")
    return 0


def cmd_experiment(args) -> int:
    groups = resolve_sources(args.groups)
    orderings = args.ordering or ["ll", "rll"]
    reports = []
    for label, G in groups:
        for o in dict.fromkeys(orderings):
            sels = [None] if o == "jennings" or not args.selection else dict.fromkeys(args.selection)
            for sel in sels:
                reports.append(run_experiment(G, label, o, sel, args.attempts, args.seed))
    orders = {label: G.order for label, G in groups}
    comparisons = compare_orderings(reports, orders)

    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.tsv").write_text(reports_tsv(reports))
        if comparisons:
            (out / "comparison.tsv").write_text(comparison_tsv(comparisons))
        if not args.no_figures:
            from .plotting import plot_comparison, plot_sizes
            plot_sizes(reports, out / "sizes.png")
            if comparisons:
                plot_comparison(comparisons, out / "comparison.png")

    if args.json:
        doc = {"reports": [r.as_dict() for r in reports],
               "comparison": [dict(group=c.group, order=c.order, eLL=c.ell, eRLL=c.erll, d=c.d)
                              for c in comparisons]}
        json.dump(doc, sys.stdout, indent=2)
        print()
        return 0

    print(f"{'group':<10} {'ordering':<9} {'selection':<10} {'min':>5} {'max':>5} "
          f"{'mean':>8} {'sd':>7}")
    for r in reports:
        print(f"{r.group:<10} {r.ordering:<9} {r.selection:<10} {r.min:>5} {r.max:>5} "
              f"{r.mean:>8.2f} {r.stddev:>7.2f}")
    if comparisons:
        print()
        print(f"{'group':<10} {'eLL':>5} {'eRLL':>5} {'d':>4}")
        for c in comparisons:
            print(f"{c.group:<10} {c.ell:>5} {c.erll:>5} {c.d:>4}")
        for order in sorted({c.order for c in comparisons}):
            cells = ", ".join(f"{name}: {k}" for name, k in bucket_counts(comparisons, order))
            print(f"order {order}: {cells}")
    return 0


def cmd_corpus(args) -> int:
    entries = load_corpus()
    if args.action == "list":
        for e in entries:
            G = e.group()
            print(f"{e.label:<10} {e.order:>4} = {G.p}^{G.n}")
        return 0
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    wanted = set(args.labels) if args.labels else None
    for e in entries:
        if wanted is None or e.label in wanted:
            (out / f"{e.label}.grp").write_text(e.text)
    if wanted:
        missing = wanted - {e.label for e in entries}
        if missing:
            raise InputError("unknown corpus labels: " + ", ".join(sorted(missing)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgro", description="Groebner bases for modular p-group algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="statistics about a group")
    p.add_argument("group", help="group file or corpus:<label>")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("grobner", help="compute one Groebner basis and dump it")
    p.add_argument("group", help="group file or corpus:<label>")
    p.add_argument("--ordering", choices=ORDERINGS, required=True)
    p.add_argument("--selection", choices=SELECTIONS,
                   help="generator selection (default: smallest for ll, arbitrary for rll)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--use-given-generators", action="store_true",
                   help="use the file's generators (deterministic Jennings choice)")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.set_defaults(func=cmd_grobner)

    p = sub.add_parser("experiment", help="repeat runs with random generators")
    p.add_argument("groups", nargs="+", help="group files, directories, corpus or corpus:<label>")
    p.add_argument("--ordering", choices=ORDERINGS, action="append",
                   help="may be repeated (default: ll and rll)")
    p.add_argument("--selection", choices=SELECTIONS, action="append",
                   help="may be repeated (default: the ordering's default method)")
    p.add_argument("--attempts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="print JSON instead of a table")
    p.add_argument("-o", "--output", help="write report.tsv, comparison.tsv and figures here")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("corpus", help="the bundled groups")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("labels", nargs="*", help="labels to dump (default: all)")
    p.add_argument("-o", "--output", default=".", help="directory for dump")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "attempts", 1) < 1:
        print("pgro: --attempts must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"pgro: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CorpusError as exc:
        print(f"pgro: corrupted corpus: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, GroupFileError, GroupError, NotGenerating, WordError,
            OSError) as exc:
        print(f"pgro: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
