"""Command-line interface.

Exit codes: 0 success, 1 failed mathematical assertion, 2 usage or cap error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Dict, List, Optional

from . import __version__
from .errors import CapExceeded, InvalidParameter, ParityError, VerificationError
from .limits import DEFAULT_MAX_BITS, DEFAULT_MAX_TABLES
from .partitions import (
    Composition,
    Partition,
    enumerate_tables,
    parse_parts,
    staircase_families,
    staircase_family,
    transpose,
)
from .relations import relation_system, relevance_system, solve_relevance
from .staircase import flat_relevance_system, verify_parity_theorem
from .tabloids import end_dimension_oracle

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_USAGE = 2


def _support_digest(support: List[List[List[int]]]) -> str:
    blob = json.dumps(support, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    elif fmt == "csv":
        if isinstance(obj, dict):
            keys = sorted(obj)
            print(",".join(keys))
            print(",".join(str(obj[k]) for k in keys))
        else:
            for item in obj:
                print(",".join(str(v) for v in item))
    else:
        print(obj)


def _family_from_args(args) -> Optional[object]:
    if args.a is not None or args.m is not None or args.b is not None:
        if None in (args.a, args.m, args.b):
            raise InvalidParameter("--a, --m and --b must be given together")
        return staircase_family(args.a, args.m, args.b)
    return None


def cmd_tables(args) -> int:
    alpha = Composition(parse_parts(args.alpha))
    beta = Composition(parse_parts(args.beta))
    tabs = enumerate_tables(alpha, beta, max_tables=args.max_tables)
    out = [
        {"alpha": list(alpha.parts), "beta": list(beta.parts), "entries": A.to_lists()}
        for A in tabs
    ]
    if args.format == "json":
        _emit(out, "json")
    elif args.format == "csv":
        _emit([(len(out),)], "csv")
    else:
        print(len(out))
        for A in tabs:
            print(A.to_lists())
    return EXIT_OK


def _build_system(args):
    fam = _family_from_args(args)
    if fam is not None:
        return flat_relevance_system(fam, args.max_tables), fam
    if args.lam is None:
        raise InvalidParameter("give either --lambda or --a/--m/--b")
    lam = Partition(parse_parts(args.lam))
    return relevance_system(lam, args.max_tables), None


def cmd_rel_dim(args) -> int:
    sysm, fam = _build_system(args)
    rel = solve_relevance(sysm)
    support = sorted(A.to_lists() for A in rel.support)
    out = {
        "rel_dim": rel.dim,
        "num_tables": len(sysm.tables),
        "support": support,
        "support_digest": _support_digest(support),
    }
    if fam is not None:
        out.update({"a": fam.a, "m": fam.m, "b": fam.b, "r": fam.r})
    _emit(out, args.format)
    return EXIT_OK


def cmd_end_dim(args) -> int:
    if args.lam is None:
        fam = _family_from_args(args)
        if fam is None:
            raise InvalidParameter("give either --lambda or --a/--m/--b")
        lam = fam.lam
    else:
        lam = Partition(parse_parts(args.lam))
    dim = end_dimension_oracle(lam, args.max_bits)
    _emit({"lambda": list(lam.parts), "end_dim": dim}, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    fam = _family_from_args(args)
    if fam is None:
        raise InvalidParameter("verify needs --a --m --b")
    report = verify_parity_theorem(fam, args.max_tables, args.max_bits)
    _emit(report.to_json_dict(), args.format)
    return EXIT_OK


def _load_cache(path: str) -> Dict[str, dict]:
    cache: Dict[str, dict] = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    cache[rec["key"]] = rec
                except (json.JSONDecodeError, KeyError, TypeError):
                    print(
                        f"warning: skipping corrupt cache line {lineno}",
                        file=sys.stderr,
                    )
    except FileNotFoundError:
        pass
    return cache


def _scan_record(fam, args) -> dict:
    sysm = flat_relevance_system(fam, args.max_tables)
    rel = solve_relevance(sysm)
    end_dim: Optional[int] = None
    try:
        end_dim = end_dimension_oracle(fam.lam, args.max_bits)
    except CapExceeded:
        end_dim = None
    support = sorted(A.to_lists() for A in rel.support)
    return {
        "key": ",".join(str(p) for p in fam.lam.parts),
        "a": fam.a,
        "m": fam.m,
        "b": fam.b,
        "r": fam.r,
        "parity": fam.parity_ok,
        "rel_dim": rel.dim,
        "end_dim": end_dim,
        "num_tables": len(sysm.tables),
        "support_digest": _support_digest(support),
        "version": __version__,
        "timestamp": int(time.time()),
    }


def cmd_scan(args) -> int:
    cache = _load_cache(args.cache) if args.cache else {}
    fams = staircase_families(args.max_r)
    if args.parity == "match":
        fams = [f for f in fams if f.parity_ok]
    elif args.parity == "mismatch":
        fams = [f for f in fams if not f.parity_ok]
    new_records = []
    for fam in fams:
        key = ",".join(str(p) for p in fam.lam.parts)
        if not args.force and key in cache:
            rec = cache[key]
        else:
            rec = _scan_record(fam, args)
            new_records.append(rec)
            cache[key] = rec
        print(json.dumps(rec, sort_keys=True))
    if args.cache and new_records:
        with open(args.cache, "a") as fh:
            for rec in new_records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_dump_relations(args) -> int:
    sysm, _ = _build_system(args)
    out = {
        "alpha": list(sysm.alpha.parts),
        "beta": list(sysm.beta.parts),
        "tables": [A.to_lists() for A in sysm.tables],
        "rows": [sorted(row) for row in sysm.rows],
        "provenance": sysm.provenance,
    }
    _emit(out, args.format)
    return EXIT_OK


def cmd_paper_examples(args) -> int:
    from .worked_examples import run_all

    _emit(run_all(), args.format)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    _emit(run_selftest(), args.format)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--max-tables", type=int, default=DEFAULT_MAX_TABLES)
    p.add_argument("--max-bits", type=int, default=DEFAULT_MAX_BITS)
    p.add_argument("--threads", type=int, default=1)


def _add_partition_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", default=None, metavar="PARTS")
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--b", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spechtend",
        description="Exact GF(2) computation of Specht endomorphism spaces",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("tables", help="enumerate Tab(alpha, beta)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("rel-dim", help="dimension of the relevant space")
    _add_partition_flags(p)
    _add_common(p)
    p.set_defaults(fn=cmd_rel_dim)

    p = sub.add_parser("end-dim", help="oracle endomorphism dimension")
    _add_partition_flags(p)
    _add_common(p)
    p.set_defaults(fn=cmd_end_dim)

    p = sub.add_parser("verify", help="verify the parity theorem for a family")
    _add_partition_flags(p)
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("scan", help="scan staircase families")
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--parity", choices=["match", "mismatch", "all"], default="match")
    p.add_argument("--cache", default=None)
    p.add_argument("--force", action="store_true")
    _add_common(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("dump-relations", help="dump a relation system as JSON")
    _add_partition_flags(p)
    _add_common(p)
    p.set_defaults(fn=cmd_dump_relations)

    p = sub.add_parser("paper-examples", help="run the frozen worked examples")
    _add_common(p)
    p.set_defaults(fn=cmd_paper_examples)

    p = sub.add_parser("selftest", help="run the built-in invariant suite")
    _add_common(p)
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except (VerificationError, AssertionError) as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERT
    except (CapExceeded, ParityError, InvalidParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
