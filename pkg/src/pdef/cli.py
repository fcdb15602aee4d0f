"""Command-line front end.

Exit codes: 0 when a value was computed or a certificate issued, 1 when a
search was inconclusive or a coset bound was exceeded, 2 on usage, parse,
or resource errors.  Output is deterministic byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import certificates as certs
from .abelian import abelian_invariants
from .cosets import DEFAULT_MAX_COSETS, CosetTable, Exhausted, is_normal, todd_coxeter
from .lowindex import SubgroupRecord, low_index_normal, low_index_subgroups
from .presentations import (
    DEFAULT_TIETZE_BUDGET,
    ParseError,
    Presentation,
    deficiency_count,
    p_deficiency,
    parse_presentation,
    parse_word,
    print_presentation,
    print_word,
    tietze_simplify,
)
from .rewriting import reidemeister_schreier, schreier_generators
from .words import is_prime


class CliError(Exception):
    pass


def _read_presentation(path: str) -> Presentation:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise CliError(str(e)) from e
    return parse_presentation(text)


def _subgroup_words(P: Presentation, arg: str | None):
    if not arg:
        return []
    return [parse_word(part, P.generator_names) for part in arg.split(";") if part.strip()]


def _enumerate(P: Presentation, args):
    words = _subgroup_words(P, args.subgroup_gens)
    return todd_coxeter(P, words, args.max_cosets)


def _print_exhausted(bound: int, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"kind": "Exhausted", "max_cosets": bound, "reason": "coset bound exceeded"}, sort_keys=True))
    else:
        print(f"coset bound exceeded: more than {bound} cosets required or collapse not found")
    return 1


def _emit_certificate(cert: certs.Certificate, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(certs.to_json(cert))
    else:
        print(f"kind: {cert.kind}")
        for key in sorted(cert.parameters):
            print(f"  {key}: {cert.parameters[key]}")
        for key in sorted(cert.witness):
            value = cert.witness[key]
            if key == "table":
                print("  table:")
                for row in value:
                    print("    " + " ".join(str(x) for x in row))
            else:
                print(f"  {key}: {value}")
        for con in cert.conclusions:
            print(f"  conclusion: {con.claim}  [{con.by}]")
        print(f"  verified: {str(cert.verified).lower()}")
    return 0 if cert.kind != certs.INCONCLUSIVE else 1


def _cmd_def(args) -> int:
    P = _read_presentation(args.presentation)
    report = p_deficiency(P, args.p)
    print(f"def_{args.p} = {report.value}")
    for idx, nu, contrib in report.per_relator:
        word = print_word(P.relators[idx], P.generator_names)
        nu_text = "inf" if nu == float("inf") else str(nu)
        print(f"  relator {idx + 1}: {word}  nu_{args.p} = {nu_text}  contributes {contrib}")
    return 0


def _cmd_deficiency(args) -> int:
    P = _read_presentation(args.presentation)
    print(f"deficiency = {deficiency_count(P)}")
    return 0


def _cmd_lowindex(args) -> int:
    P = _read_presentation(args.presentation)
    records = (low_index_normal if args.normal else low_index_subgroups)(P, args.max_index)
    if args.json:
        payload = [
            {
                "index": rec.index,
                "normal": rec.normal,
                "table": [list(row) for row in rec.table.rows],
            }
            for rec in records
        ]
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"{len(records)} records")
        for i, rec in enumerate(records, start=1):
            tag = "normal" if rec.normal else "not normal"
            print(f"  {i}: index {rec.index} ({tag})")
    return 0


def _cmd_rewrite(args) -> int:
    P = _read_presentation(args.presentation)
    result = _enumerate(P, args)
    if isinstance(result, Exhausted):
        return _print_exhausted(result.max_cosets, args.json)
    sys.stdout.write(print_presentation(reidemeister_schreier(P, result)))
    return 0


def _cmd_abelianize(args) -> int:
    P = _read_presentation(args.presentation)
    print(str(abelian_invariants(P)))
    return 0


def _cmd_simplify(args) -> int:
    P = _read_presentation(args.presentation)
    sys.stdout.write(print_presentation(tietze_simplify(P, args.tietze_budget)))
    return 0


def _cmd_dump_table(args) -> int:
    P = _read_presentation(args.presentation)
    result = _enumerate(P, args)
    if isinstance(result, Exhausted):
        return _print_exhausted(result.max_cosets, args.json)
    sys.stdout.write(result.dump())
    return 0


def _record_from_table(P: Presentation, table) -> SubgroupRecord:
    gens = tuple(w for _, w in schreier_generators(table))
    full = CosetTable(P.n_generators, table.rows, complete=True, subgroup_words=gens)
    return SubgroupRecord(full, full.n_cosets, is_normal(full), gens)


def _cmd_certify(args) -> int:
    if args.what == "power-quotient":
        cert = certs.power_quotient_largeness(args.rank, args.count, args.exponent)
        return _emit_certificate(cert, args.json)
    P = _read_presentation(args.presentation)
    if args.what == "p-large-def":
        _require_p(args)
        cert = certs.certify_p_large_by_deficiency(P, args.p)
    elif args.what == "p-large":
        _require_p(args)
        cert = certs.certify_p_large_witness(
            P, args.p, args.max_index, args.kill_budget, args.tietze_budget
        )
    elif args.what == "z-surjection":
        cert = certs.find_z_surjection(P, args.max_index, args.tietze_budget)
    elif args.what == "free-quotient":
        cert = certs.certify_free_quotient(P, args.kill_budget, args.tietze_budget)
    elif args.what == "allcock":
        result = _enumerate(P, args)
        if isinstance(result, Exhausted):
            return _print_exhausted(result.max_cosets, args.json)
        rec = _record_from_table(P, result)
        if not rec.normal:
            raise CliError("the given subgroup is not normal")
        cert = certs.allcock_rank_bound(P, rec, args.tietze_budget)
    else:  # pragma: no cover
        raise CliError(f"unknown certify target {args.what!r}")
    return _emit_certificate(cert, args.json)


def _require_p(args) -> None:
    if args.p is None:
        raise CliError("-p PRIME is required")
    if not is_prime(args.p):
        raise CliError(f"p must be prime, got {args.p}")


def _cmd_verify(args) -> int:
    try:
        with open(args.certificate, "r", encoding="utf-8") as f:
            cert = certs.from_json(f.read())
    except OSError as e:
        raise CliError(str(e)) from e
    ok = certs.verify(cert)
    print("verified: " + ("true" if ok else "false"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdef", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, presentation=True):
        sp.add_argument("-p", type=int, default=None, help="prime for p-deficiency")
        sp.add_argument("--max-index", type=int, default=3)
        sp.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
        sp.add_argument("--kill-budget", type=int, default=3)
        sp.add_argument("--tietze-budget", type=int, default=DEFAULT_TIETZE_BUDGET)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--subgroup-gens", default=None, help="semicolon-separated words")
        if presentation:
            sp.add_argument("presentation", help="presentation file, or - for stdin")

    sp = sub.add_parser("def", help="p-deficiency report")
    add_common(sp)
    sp.set_defaults(fn=_cmd_def, needs_p=True)

    sp = sub.add_parser("deficiency", help="generators minus relators")
    add_common(sp)
    sp.set_defaults(fn=_cmd_deficiency)

    sp = sub.add_parser("lowindex", help="subgroups of index <= N")
    add_common(sp)
    sp.add_argument("--normal", action="store_true")
    sp.set_defaults(fn=_cmd_lowindex)

    sp = sub.add_parser("rewrite", help="subgroup presentation via rewriting")
    add_common(sp)
    sp.set_defaults(fn=_cmd_rewrite)

    sp = sub.add_parser("abelianize", help="abelian invariants")
    add_common(sp)
    sp.set_defaults(fn=_cmd_abelianize)

    sp = sub.add_parser("simplify", help="Tietze-simplify a presentation")
    add_common(sp)
    sp.set_defaults(fn=_cmd_simplify)

    sp = sub.add_parser("dump-table", help="coset table for a subgroup")
    add_common(sp)
    sp.set_defaults(fn=_cmd_dump_table)

    sp = sub.add_parser("certify", help="issue a certificate")
    what = sp.add_subparsers(dest="what", required=True)
    for name in ("p-large-def", "p-large", "z-surjection", "free-quotient", "allcock"):
        wp = what.add_parser(name)
        add_common(wp)
        wp.set_defaults(fn=_cmd_certify)
    wp = what.add_parser("power-quotient")
    wp.add_argument("rank", type=int)
    wp.add_argument("count", type=int)
    wp.add_argument("exponent", type=int)
    wp.add_argument("--json", action="store_true")
    wp.set_defaults(fn=_cmd_certify)

    sp = sub.add_parser("verify", help="re-check a JSON certificate")
    sp.add_argument("certificate")
    sp.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if getattr(args, "needs_p", False):
            _require_p(args)
        return args.fn(args)
    except (CliError, ParseError, ValueError, certs.MalformedCertificate) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
