"""Command-line front end: inclusion queries, poset export, crystal ops.

Subcommands
-----------
inclusion   decide how J(first) compares to J(second)
aug-poset   enumerate the augmentation-ideal poset of gl(m|1)
crystal     apply a crystal operator or read off a statistic
kl          build (and cache) a classical KL table, optionally query a pair
super-kl    canonical-basis table of the block of the given weights
counts      class counts of augmentation posets over a range of ranks
components  irreducible components of an augmentation poset

All machine output is JSON on stdout (DOT for ``--format dot``); identical
invocations against an unchanged cache print identical bytes.  Exit codes:
0 decided/ok, 1 parse or bound errors, 2 undecidable regime.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import aug_poset, brundan_kl, crystal, kl_classical, super_inclusion
from .errors import PrimspecError, UnsupportedRegimeError
from .weights import SuperWeight

__all__ = ["Config", "main"]


@dataclass(frozen=True)
class Config:
    """Run-wide knobs, assembled from flags and the environment."""

    cache_dir: Path
    kl_rank_bound: int = kl_classical.DEFAULT_KL_BOUND
    tensor_rank_bound: int = brundan_kl.DEFAULT_RANK_BOUND
    output_format: str = "json"

    def __post_init__(self):
        if self.kl_rank_bound <= 0 or self.tensor_rank_bound <= 0:
            raise ValueError("bounds must be positive")


def _config(args) -> Config:
    cache = args.cache_dir or os.environ.get("PRIMSPEC_CACHE")
    cache_dir = Path(cache) if cache else kl_classical.default_cache_dir()
    return Config(
        cache_dir=cache_dir,
        kl_rank_bound=args.kl_bound,
        output_format=getattr(args, "format", "json"),
    )


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _table_kwargs(cfg: Config) -> dict:
    return {"bound": cfg.kl_rank_bound, "cache_dir": cfg.cache_dir}


def cmd_inclusion(args) -> int:
    cfg = _config(args)
    first = SuperWeight.parse(args.weights[0])
    second = SuperWeight.parse(args.weights[1])
    for w in (first, second):
        if args.m is not None and w.m != args.m:
            raise ValueError(f"{w} has {w.m} left labels, --m says {args.m}")
        if args.n is not None and w.n != args.n:
            raise ValueError(f"{w} has {w.n} right labels, --n says {args.n}")
    decision = super_inclusion.decide(first, second, **_table_kwargs(cfg))
    _emit(decision.to_json_dict())
    return 2 if decision.relation == "unsupported" else 0


def cmd_aug_poset(args) -> int:
    cfg = _config(args)
    poset = aug_poset.enumerate_X(args.m, **_table_kwargs(cfg))
    assignments = aug_poset.strata(poset)
    if cfg.output_format == "dot":
        text = aug_poset.to_dot(poset, assignments, cluster=args.cluster)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    else:
        doc = aug_poset.to_json_dict(poset, assignments)
        if args.out:
            Path(args.out).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        else:
            _emit(doc)
    return 0


def cmd_crystal(args) -> int:
    weight = SuperWeight.parse(args.weight)
    i = args.i
    if args.op in ("e", "f"):
        moved = (crystal.e_tilde if args.op == "e" else crystal.f_tilde)(weight, i)
        _emit(
            {
                "weight": str(weight),
                "op": args.op,
                "i": i,
                "result": None if moved is None else str(moved),
            }
        )
    elif args.op in ("eps", "phi"):
        value = (crystal.epsilon if args.op == "eps" else crystal.phi)(weight, i)
        _emit({"weight": str(weight), "op": args.op, "i": i, "result": value})
    else:  # signature
        sig = crystal.reduce(crystal.i_signature(weight, i))
        _emit({"weight": str(weight), "op": "signature", "i": i, "result": str(sig)})
    return 0


def cmd_kl(args) -> int:
    cfg = _config(args)
    table = kl_classical.kl_table(args.m, **_table_kwargs(cfg))
    doc = {
        "m": args.m,
        "comparable_pairs": len(table),
        "cache_file": str(cfg.cache_dir / f"kl_m{args.m}.jsonl"),
    }
    if args.pair:
        x_text, y_text = args.pair.split(";")
        x = tuple(int(t) for t in x_text.split(","))
        y = tuple(int(t) for t in y_text.split(","))
        doc["pair"] = {
            "x": list(x),
            "y": list(y),
            "polynomial": table.kl_polynomial(x, y).to_pairs(),
            "mu": table.mu(x, y),
        }
    _emit(doc)
    return 0


def cmd_super_kl(args) -> int:
    cfg = _config(args)
    block = [SuperWeight.parse(text) for text in args.weights]
    interval = None
    if args.interval:
        lo, hi = args.interval.split(":")
        interval = (int(lo), int(hi))
    table = brundan_kl.canonical_basis(
        block, interval, rank_bound=cfg.tensor_rank_bound, interval_bound=args.interval_bound
    )
    doc = table.to_json_dict()
    order = brundan_kl.kl_left_order(table.weights, table)
    doc["order"] = sorted(
        [str(b), str(a)] for b, a in order.relations()
    )
    _emit(doc)
    return 0


def cmd_counts(args) -> int:
    cfg = _config(args)
    if ".." in args.m:
        lo, hi = (int(t) for t in args.m.split(".."))
    else:
        lo = hi = int(args.m)
    rows = []
    for m in range(lo, hi + 1):
        s_m = aug_poset.involution_count(m)
        row = {"m": m, "s": s_m, "t": (m + 1) * s_m // 2}
        if args.enumerate and m <= cfg.kl_rank_bound:
            poset = aug_poset.enumerate_X(m, **_table_kwargs(cfg))
            report = aug_poset.counts(poset)
            row["enumerated"] = report.total
            row["strata"] = report.stratum_sizes
        rows.append(row)
    _emit({"counts": rows})
    return 0


def cmd_components(args) -> int:
    cfg = _config(args)
    poset = aug_poset.enumerate_X(args.m, **_table_kwargs(cfg))
    assignments = aug_poset.strata(poset)
    reports = aug_poset.irreducible_components(poset, assignments)
    _emit(
        {
            "m": args.m,
            "components": [
                {
                    "k": r.k,
                    "classes": [str(poset.classes[c].representative) for c in r.class_indices],
                    "order_isomorphic_to_regular_stratum": r.order_isomorphic,
                }
                for r in reports
            ],
        }
    )
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primspec",
        description="Inclusion order on primitive ideals of gl(m|n).",
    )
    parser.add_argument("--cache-dir", help="KL table cache directory (or $PRIMSPEC_CACHE)")
    parser.add_argument(
        "--kl-bound", type=int, default=kl_classical.DEFAULT_KL_BOUND,
        help="largest symmetric-group rank for KL tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inclusion", help="compare two primitive ideals")
    p.add_argument("--weights", nargs=2, required=True, metavar="W")
    p.add_argument("--m", type=int, default=None, help="expected left rank (validation)")
    p.add_argument("--n", type=int, default=None, help="expected right rank (validation)")
    p.set_defaults(func=cmd_inclusion)

    p = sub.add_parser("aug-poset", help="augmentation-ideal poset of gl(m|1)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--cluster", choices=["x", "z"], default=None)
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_aug_poset)

    p = sub.add_parser("crystal", help="crystal operators and statistics")
    p.add_argument("--weight", required=True)
    p.add_argument("--op", choices=["e", "f", "eps", "phi", "signature"], required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("kl", help="build/cache a classical KL table")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pair", help="one-line words 'x1,..,xm;y1,..,ym' to query")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("super-kl", help="canonical-basis table of a block")
    p.add_argument("--weights", nargs="+", required=True, metavar="W")
    p.add_argument("--interval", help="label interval 'lo:hi'")
    p.add_argument(
        "--interval-bound", type=int, default=brundan_kl.DEFAULT_INTERVAL_BOUND
    )
    p.set_defaults(func=cmd_super_kl)

    p = sub.add_parser("counts", help="class counts over a rank range")
    p.add_argument("--m", required=True, help="a rank or a range like 1..6")
    p.add_argument("--enumerate", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("components", help="irreducible components of the poset")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_components)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedRegimeError as exc:
        print(f"undecidable: {exc}", file=sys.stderr)
        return 2
    except (PrimspecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
