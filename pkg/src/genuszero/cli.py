"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exhausted.  JSON output is canonical (sorted keys, two-space indent) so
emitted reports round-trip byte-for-byte through a parse/re-emit cycle.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import classify as _classify
from .actions import enumerate_vectors, validate
from .fuchsian import geometry_type, parse_signature, rh_genus
from .groups import (
    FiniteGroup,
    GroupConstructionError,
    check_conditions,
    dump_table,
    parse_group,
    prime_order_subgroups_up_to_conjugacy,
)
from .quotients import quotient_genus

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_ENUM_CAP_THRESHOLD = 64  # above this order, enumerate requires --cap


def _emit_json(obj: object, out) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load_group(spec: str) -> FiniteGroup:
    return parse_group(spec)


def _cmd_info(args, out) -> int:
    G = _load_group(args.group)
    spectrum = sorted(G.order_spectrum())
    payload = {
        "group": G.family,
        "order": G.order,
        "element_order_spectrum": spectrum,
        "conditions": {
            "p2": check_conditions(G, "p2"),
            "pq": check_conditions(G, "pq"),
            "sylow": check_conditions(G, "sylow"),
        },
    }
    if args.dump_table:
        dump_table(G, args.dump_table)
        payload["table_file"] = args.dump_table
    if args.output == "json":
        _emit_json(payload, out)
    else:
        out.write(f"group {G.family}, order {G.order}\n")
        out.write(f"element orders: {{{','.join(map(str, spectrum))}}}\n")
        for key, val in payload["conditions"].items():
            out.write(f"{key} conditions: {'true' if val else 'false'}\n")
    return EXIT_OK


def _cmd_signatures(args, out) -> int:
    G = _load_group(args.group)
    rows = [
        {"signature": str(sig), "genus": g, "geometry": geometry_type(sig)}
        for sig, g in _classify.enumerate_signatures(G, args.max_genus)
    ]
    if args.output == "json":
        _emit_json({"group": G.family, "max_genus": args.max_genus,
                    "signatures": rows}, out)
    else:
        for row in rows:
            out.write(f"{row['signature']}  g={row['genus']}  {row['geometry']}\n")
    return EXIT_OK


def _cmd_enumerate(args, out) -> int:
    G = _load_group(args.group)
    sig = parse_signature(args.signature)
    cap = args.cap
    if cap is None and G.order > DEFAULT_ENUM_CAP_THRESHOLD:
        raise UsageError(
            f"groups of order > {DEFAULT_ENUM_CAP_THRESHOLD} require --cap"
        )
    vectors = list(enumerate_vectors(G, sig, cap=cap, dedup=args.dedup))
    partial = cap is not None and len(vectors) >= cap
    if args.output == "json":
        _emit_json(
            {
                "group": G.family,
                "signature": str(sig),
                "vectors": [v.to_json_dict() for v in vectors],
                "count": len(vectors),
                "partial": partial,
            },
            out,
        )
    else:
        for v in vectors:
            out.write(f"({', '.join(v.words())})\n")
        out.write(f"{len(vectors)} vector(s){' [partial]' if partial else ''}\n")
    return EXIT_BUDGET if partial else EXIT_OK


def _cmd_quotient(args, out) -> int:
    G = _load_group(args.group)
    sig = parse_signature(args.signature)
    witness = next(enumerate_vectors(G, sig, cap=1), None)
    if witness is None:
        raise UsageError(f"no generating vector realizes {sig} for {G.family}")
    ok, reason = validate(witness)
    assert ok, reason
    reports = [
        quotient_genus(witness, H)
        for H in prime_order_subgroups_up_to_conjugacy(G)
    ]
    payload = {
        "group": G.family,
        "signature": str(sig),
        "genus": rh_genus(G.order, sig),
        "witness": witness.to_json_dict(),
        "quotients": [r.to_json_dict() for r in reports],
    }
    if args.output == "json":
        _emit_json(payload, out)
    else:
        out.write(f"witness: ({', '.join(witness.words())}), g={payload['genus']}\n")
        for r in reports:
            out.write(
                f"p={r.prime}: fixed points {r.fixed_points}, "
                f"quotient genus {r.quotient_genus}, "
                f"Gamma' signature {r.gamma_prime_signature}\n"
            )
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    G = _load_group(args.group)
    report = _classify.classify_group(G, args.max_genus, cap=args.cap)
    if args.output == "json":
        _emit_json(report.to_json_dict(), out)
    else:
        out.write(f"group {G.family}, order {G.order}, verdict {report.verdict}\n")
        for e in report.admissible:
            out.write(
                f"  {e.signature}  g={e.genus}  "
                f"witness ({', '.join(e.witness.words())})  "
                f"raw vectors {e.raw_vector_count}\n"
            )
        for t in report.theorems:
            out.write(
                f"  [{'PASS' if t.passed else 'FAIL'}] {t.name}: {t.details}\n"
            )
    if report.budget_exhausted:
        return EXIT_BUDGET
    if any(not t.passed for t in report.theorems):
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def verification_manifest() -> list[tuple[str, callable]]:
    """Versioned built-in scales for the full verification suite."""
    c = _classify
    entries: list[tuple[str, callable]] = [
        ("cyclic_Z8", lambda: c.verify_cyclic_prime_power(2, 3, max_r=5)),
        ("cyclic_Z9", lambda: c.verify_cyclic_prime_power(3, 2, max_r=4)),
        ("cyclic_Z5", lambda: c.verify_cyclic_prime_power(5, 1, max_r=5)),
        ("quaternion_Q8", lambda: c.verify_quaternion(3, max_r=5)),
        ("quaternion_Q16", lambda: c.verify_quaternion(4, max_r=3)),
        ("pq_Z6", lambda: c.verify_pq(2, 3)),
        ("pq_Z10", lambda: c.verify_pq(2, 5)),
        ("pq_Z15", lambda: c.verify_pq(3, 5)),
        ("zm_p3", lambda: c.verify_zm(3)),
        ("zm_p5", lambda: c.verify_zm(5)),
        ("zm_p7", lambda: c.verify_zm(7)),
        ("diophantine", c.verify_icosahedral),
        ("sphere_torus", c.verify_sphere_and_torus),
        ("theorem_one", c.verify_theorem_one),
    ]
    for n, bound in ((12, 6), (18, 8), (20, 10), (30, 8), (45, 10)):
        entries.append(
            (
                f"no_positive_genus_Z{n}",
                lambda n=n, bound=bound: c.verify_no_positive_genus(
                    _classify.build_cyclic(n), bound
                ),
            )
        )
    return entries


def _cmd_verify_paper(args, out) -> int:
    only = set(args.only.split(",")) if args.only else None
    results = []
    for label, runner in verification_manifest():
        if only is not None and label not in only:
            continue
        check = runner()
        results.append((label, check))
        out.write(f"[{'PASS' if check.passed else 'FAIL'}] {label}: {check.details}\n")
    if only is not None and not results:
        raise UsageError(f"no manifest entries match --only {args.only}")
    failed = [label for label, check in results if not check.passed]
    if failed:
        out.write(f"{len(failed)} verifier(s) failed: {', '.join(failed)}\n")
        return EXIT_VERIFY_FAIL
    out.write(f"all {len(results)} verifiers passed\n")
    return EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genuszero",
        description="Genus-zero actions of small finite groups on Riemann surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", choices=("text", "json"), default="text")

    p = sub.add_parser("info", help="order, element orders, subgroup conditions")
    p.add_argument("group")
    p.add_argument("--dump-table", metavar="FILE", default=None)
    add_output(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("signatures", help="candidate signatures up to a genus bound")
    p.add_argument("group")
    p.add_argument("--max-genus", type=int, default=4)
    add_output(p)
    p.set_defaults(func=_cmd_signatures)

    p = sub.add_parser("enumerate", help="generating vectors for one signature")
    p.add_argument("group")
    p.add_argument("--signature", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--dedup", action="store_true",
                   help="one vector per conjugation orbit")
    add_output(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("quotient", help="quotient reports for a witness vector")
    p.add_argument("group")
    p.add_argument("--signature", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("classify", help="full genus-zero classification report")
    p.add_argument("group")
    p.add_argument("--max-genus", type=int, default=4)
    p.add_argument("--cap", type=int, default=None)
    add_output(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--only", default=None,
                   help="comma-separated manifest labels to run")
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "max_genus", 0) < 0:
        print("error: --max-genus must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, GroupConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(parser.format_usage(), end="", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
