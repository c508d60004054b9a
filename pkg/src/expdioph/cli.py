"""Command-line frontend.

    expdioph classify --n 2 --p 3
    expdioph search --a 2 --b 5 --x-max 10 --y-max 10
    expdioph sweep --n 1..4 --p-max 257 --x-max 6 --y-max 12
    expdioph family-primes --n 2 --k-max 12
    expdioph catalan --max-base 30 --max-exp 12
    expdioph frenicle --p 3 --max-value 10^12

Exit status: 0 success, 1 usage error, 2 a sweep found a disagreement,
3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import re
import sys
from typing import Iterable, Iterator, Optional, TextIO

from . import records
from .cache import CACHE_ENV, ResultCache
from .classifier import CatalanBox, catalan_box_search, classify, family_prime_scan, frenicle_box_search
from .model import FamilyFourN, Generic
from .search import Checkpoint, CheckpointError, SearchBox, advance, load_checkpoint
from .validate import sweep

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("expdioph")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_NUMBER = re.compile(r"^(\d+)(?:\^(\d+))?$")


def natural(text: str) -> int:
    """Parse ``123`` or ``10^12``."""
    m = _NUMBER.match(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    base, exp = m.groups()
    return int(base) ** int(exp) if exp else int(base)


def positive(text: str) -> int:
    value = natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def int_list(text: str) -> list[int]:
    """``3``, ``1..4`` or ``2,3,5``."""
    out = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        if sep:
            a, b = natural(lo), natural(hi)
            if a > b:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(a, b + 1))
        else:
            out.append(natural(part))
    return out


def worker_count(text: str) -> Optional[int]:
    if text == "auto":
        return None
    return positive(text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("jsonl", "csv", "human"), default="jsonl")
    common.add_argument("--cache", metavar="PATH", default=os.environ.get(CACHE_ENV),
                        help=f"result cache file (default: ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--workers", type=worker_count, default=1, metavar="N|auto")

    parser = _Parser(prog="expdioph", description="Solutions of (4^n)^x + p^y = z^2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="closed-form solution set for (n, p)")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--p", type=natural, required=True)
    p.add_argument("--certificate", action="store_true", help="also emit derivation steps")

    p = sub.add_parser("search", parents=[common], help="brute-force a finite box")
    p.add_argument("--n", type=positive)
    p.add_argument("--p", type=natural)
    p.add_argument("--a", type=natural)
    p.add_argument("--b", type=natural)
    p.add_argument("--x-max", type=natural, required=True)
    p.add_argument("--y-max", type=natural, required=True)
    p.add_argument("--checkpoint", metavar="PATH", help="resume from / save progress to this file")

    p = sub.add_parser("sweep", parents=[common], help="cross-validate many (n, p) pairs")
    p.add_argument("--n", type=int_list, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--p-max", type=natural)
    group.add_argument("--p", type=int_list)
    p.add_argument("--x-max", type=natural, required=True)
    p.add_argument("--y-max", type=natural, required=True)

    p = sub.add_parser("family-primes", parents=[common], help="primality of 1 + 2^(nk+1)")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--k-max", type=natural, required=True)

    p = sub.add_parser("catalan", parents=[common], help="a^x - b^y = 1 in a finite box")
    p.add_argument("--max-base", type=natural, required=True)
    p.add_argument("--max-exp", type=natural, required=True)

    p = sub.add_parser("frenicle", parents=[common], help="x^2 - 1 = p^e, e >= 2, up to a bound")
    p.add_argument("--p", type=natural, required=True)
    p.add_argument("--max-value", type=natural, required=True)
    return parser


def request_of(args: argparse.Namespace) -> dict:
    """Canonical request: everything that determines the records, nothing else."""
    skip = {"format", "cache", "no_cache", "workers", "checkpoint"}
    params = {k: v for k, v in vars(args).items() if k not in skip and v is not None and k != "command"}
    return {"command": args.command, "params": json.loads(json.dumps(params, default=str), parse_int=str)}


def _odd_primes_upto(limit: int) -> list[int]:
    from .ntheory import is_prime

    return [q for q in range(3, limit + 1, 2) if is_prime(q)]


def _search_instance(args):
    if args.n is not None or args.p is not None:
        if args.n is None or args.p is None or args.a is not None or args.b is not None:
            raise UsageError("search takes either --n and --p, or --a and --b")
        return FamilyFourN(args.n, args.p)
    if args.a is None or args.b is None:
        raise UsageError("search takes either --n and --p, or --a and --b")
    return Generic(args.a, args.b)


def produce(args: argparse.Namespace) -> Iterator[dict]:
    cmd = args.command
    if cmd == "classify":
        desc = classify(args.n, args.p)
        for t in desc.sporadic:
            yield records.solution_record(desc.instance, t)
        if args.certificate:
            for family in desc.families:
                yield records.family_record(family)
            for step in desc.certificate.steps:
                yield records.step_record(step)
            for note in desc.certificate.notes:
                yield records.note_record(note)
        yield records.completeness_record(desc)
    elif cmd == "search":
        inst = _search_instance(args)
        box = SearchBox(args.x_max, args.y_max)
        cp = Checkpoint(inst, box)
        if args.checkpoint and os.path.exists(args.checkpoint):
            cp = load_checkpoint(args.checkpoint)
            if cp.instance != inst or cp.box != box:
                raise CheckpointError(f"checkpoint {args.checkpoint} is for {cp.instance} in {cp.box}")
        cp = advance(cp, args.workers, checkpoint_path=args.checkpoint)
        for t in cp.found:
            yield records.solution_record(inst, t)
    elif cmd == "sweep":
        primes = args.p if args.p is not None else _odd_primes_upto(args.p_max)
        for report in sweep(args.n, primes, SearchBox(args.x_max, args.y_max), workers=args.workers):
            yield records.report_record(report)
    elif cmd == "family-primes":
        for row in family_prime_scan(args.n, args.k_max):
            yield records.family_prime_record(args.n, row)
    elif cmd == "catalan":
        box = CatalanBox(args.max_base, args.max_base, args.max_exp, args.max_exp)
        for w in catalan_box_search(box):
            yield records.catalan_record(w)
    elif cmd == "frenicle":
        for w in frenicle_box_search(args.p, args.max_value):
            yield records.frenicle_record(args.p, w)
    else:
        raise UsageError(f"unknown command {cmd}")


def format_human(rec: dict) -> str:
    kind = rec["type"]
    tag = " (cached)" if rec.get("cached") else ""
    if kind == "solution":
        inst = records.parse_instance(rec)
        a, b = inst.bases
        x, y, z = (int(rec[k]) for k in "xyz")
        return f"({x}, {y}, {z}): {a ** x} + {b ** y} = {z * z} = {z}^2{tag}"
    if kind == "report":
        inst = records.parse_instance(rec)
        both = ", ".join("(" + ",".join(t) + ")" for t in rec["oracle"]) or "none"
        line = f"{inst} [x<={rec['x_max']}, y<={rec['y_max']}]: {rec['verdict']}; oracle {both}"
        for label in ("missing_from_classifier", "extra_in_classifier"):
            for t in rec[label]:
                line += f"\n  {label.replace('_', ' ')}: ({','.join(t)})"
        return line + tag
    if kind == "witness" and rec["kind"] == "catalan":
        return f"{rec['a']}^{rec['x']} - {rec['b']}^{rec['y']} = 1{tag}"
    if kind == "witness":
        return f"{rec['x']}^2 - 1 = {rec['p']}^{rec['exponent']}{tag}"
    if kind == "family" and rec.get("kind") == "prime_scan":
        e = int(rec["n"]) * int(rec["k"]) + 1
        verdict = "prime" if rec["is_prime"] else "composite"
        if rec["probabilistic"]:
            verdict = "probable prime"
        return f"k={rec['k']}: 1 + 2^{e} = {rec['p']} {verdict}{tag}"
    if kind == "family":
        return f"family ({rec['x_of_k']}, {rec['y_of_k']}, {rec['z_of_k']}) for {rec['admissibility']}{tag}"
    if kind == "note" and rec.get("kind") == "step":
        step = records.parse_record(rec)
        status = "ok" if step.holds() else "FAILS"
        return f"[{rec['step']}: {status}] {_step_identity(rec)} {rec['text']}".rstrip() + tag
    return f"{rec.get('text', '')}{tag}"


def _step_identity(rec: dict) -> str:
    kind = rec["step"]
    if kind == "FactorSplit":
        x, y, z = rec["triple"]
        e = int(rec["n"]) * int(x)
        return f"(z - 2^{e})(z + 2^{e}) = {rec['p']}^{y} with z = {z}, v = {rec['split_exponent']};"
    if kind == "CatalanApplication":
        return f"{rec['a']}^{rec['x']} - {rec['b']}^{rec['y']} = 1;"
    if kind == "FrenicleApplication":
        return f"w^2 - 1 = {rec['p']}^e unsolvable for 2 <= e <= {rec['exponent']};"
    return f"{rec['p']} - 1 = 2^{rec['m']};"


def _csv_cell(value) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_csv(recs: list[dict], out: TextIO) -> None:
    columns: list[str] = []
    for rec in recs:
        for key in rec:
            if key not in columns:
                columns.append(key)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for rec in recs:
        writer.writerow([_csv_cell(rec[c]) if c in rec else "" for c in columns])


def read_csv(text: str) -> list[dict]:
    """Inverse of ``write_csv``, for round-trip checks."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec = {}
        for key, cell in row.items():
            if cell == "":
                continue
            if cell[:1] in "[{":
                rec[key] = json.loads(cell)
            elif cell in ("true", "false"):
                rec[key] = cell == "true"
            elif key == "v":
                rec[key] = int(cell)
            else:
                rec[key] = cell
        out.append(rec)
    return out


def emit(recs: Iterable[dict], fmt: str, out: TextIO) -> list[dict]:
    seen = []
    if fmt == "csv":
        seen = list(recs)
        write_csv(seen, out)
        return seen
    for rec in recs:
        seen.append(rec)
        if fmt == "jsonl":
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            out.write(format_human(rec) + "\n")
        out.flush()
    return seen


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cache = None
        if args.cache and not args.no_cache:
            cache = ResultCache(args.cache)
            try:
                cache.check_writable()
            except OSError as exc:
                raise UsageError(str(exc)) from exc
        request = request_of(args)
        recs = cache.lookup(request) if cache else None
        if recs is not None:
            emit(recs, args.format, out)
        else:
            recs = emit(produce(args), args.format, out)
            if cache:
                cache.store(request, recs)
    except (UsageError, CheckpointError, ValueError) as exc:
        print(f"expdioph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error: %s", exc)
        return EXIT_INTERNAL
    if any(r.get("type") == "report" and r.get("verdict") != "Agree" for r in recs):
        return EXIT_DISAGREE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
