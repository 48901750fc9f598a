"""Command-line interface.

Subcommands mirror the library: genetic-code, enumerate, cohomology,
ktheory, nonimmersion, immersion-4m2, table1, report, and verify.  Output is
JSON by default (TSV where a table shape makes sense), written to stdout or
--out.  Exit codes: 0 success, 2 validation error, 3 internal invariant
failure.  Rationals are serialized as strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cohomology as coh
from . import immersion as imm
from . import ktheory as kt
from . import verify as verify_mod
from .errors import InternalInvariantError
from .exact import format_rational, parse_rational
from .genetics import (
    GeneticCode,
    LengthVector,
    Unrealizable,
    enumerate_codes,
    format_code,
    genetic_code,
    indices_desc,
    parse_code,
    realize,
)

SCHEMA_VERSION = 1


def _parse_lengths(text: str) -> LengthVector:
    parts = text.split(",")
    values = []
    offset = 0
    for part in parts:
        try:
            values.append(parse_rational(part))
        except ValueError:
            raise ValueError(
                f"invalid rational {part.strip()!r} at position {offset} of --lengths"
            ) from None
        offset += len(part) + 1
    return LengthVector(values)


def _parse_range(text: str) -> range:
    """lo:hi (inclusive) or a single value."""
    if ":" in text:
        lo_s, _, hi_s = text.partition(":")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ValueError(f"malformed range {text!r}, expected lo:hi") from None
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return range(lo, hi + 1)
    try:
        v = int(text)
    except ValueError:
        raise ValueError(f"malformed range {text!r}") from None
    return range(v, v + 1)


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _coh_mono_str(mono) -> str:
    r, mask = mono
    factors = []
    if r:
        factors.append("R" if r == 1 else f"R^{r}")
    for i in sorted(indices_desc(mask)):
        factors.append(f"V{i}")
    return "*".join(factors) if factors else "1"


# -- subcommand handlers -----------------------------------------------------


def _cmd_genetic_code(args) -> str:
    lv = _parse_lengths(args.lengths)
    code = genetic_code(lv)
    if args.format == "tsv":
        return format_code(code) + "\n"
    return _dumps(code.to_json_dict())


def _cmd_enumerate(args) -> str:
    codes = enumerate_codes(args.n)
    if args.format == "tsv":
        return "".join(format_code(c) + "\n" for c in codes)
    payload = {
        "schema": SCHEMA_VERSION,
        "n": args.n,
        "count": len(codes),
        "codes": [c.to_json_dict() for c in codes],
    }
    return _dumps(payload)


def _cmd_cohomology(args) -> str:
    code = parse_code(args.code)
    ctx = coh.CohContext(code)
    payload = {
        "schema": SCHEMA_VERSION,
        "code": code.to_json_dict(),
        "m": ctx.m,
        "betti": ctx.betti_numbers(),
        "basis": {
            str(2 * d): [_coh_mono_str(mono) for mono in ctx.basis_monomials(d)]
            for d in range(ctx.m + 1)
        },
    }
    try:
        report = coh.relation_check_family(code, ctx)
        payload["family_presentation"] = {
            "family": report.family,
            "ok": report.ok,
            "failures": report.failures,
        }
    except ValueError:
        payload["family_presentation"] = None
    if args.format == "tsv":
        lines = ["\t".join(str(b) for b in ctx.betti_numbers())]
        return "\n".join(lines) + "\n"
    return _dumps(payload)


def _cmd_ktheory(args) -> str:
    code = parse_code(args.code)
    mode = args.mode or imm.strongest_mode(code)
    kctx = kt.KContext(code, mode)
    cctx = coh.CohContext(code)
    ch = kt.ChernCharacter(kctx, cctx)
    relations = []
    for rel in kt.context_relations(kctx):
        entry = {"relation": rel.name, "ch_is_zero": ch.of_raw(rel.raw).is_zero()}
        relations.append(entry)
    payload = {
        "schema": SCHEMA_VERSION,
        "code": code.to_json_dict(),
        "mode": mode,
        "truncation_degree": kctx.truncation,
        "basis": [kt.mono_str(mono) for mono in kctx.basis],
    }
    if args.dump_relations:
        payload["relations"] = relations
    payload["ch_oracle_ok"] = all(r["ch_is_zero"] for r in relations)
    return _dumps(payload)


def _cmd_nonimmersion(args) -> str:
    code = parse_code(args.code)
    kctx = kt.KContext(code, imm.strongest_mode(code))
    gap, mode = imm.gamma_gap(code, kctx)
    m = code.n - 3
    lattice = kctx.lattice
    payload = {
        "schema": SCHEMA_VERSION,
        "code": code.to_json_dict(),
        "m": m,
        "s": lattice.s,
        "gamma_gap": gap,
        "nonimmersion_dim": 2 * m + 2 * gap - 1,
        "m_formula_dim": imm.M_formula_dim(m, lattice.s),
        "sw_dim": imm.sw_nonimmersion_dim(m, lattice.s),
        "mode": mode,
    }
    return _dumps(payload)


def _cmd_immersion_4m2(args) -> str:
    code = parse_code(args.code)
    verdict = imm.immerses_in_4m_minus_2(code)
    m = code.n - 3
    payload = {
        "schema": SCHEMA_VERSION,
        "code": code.to_json_dict(),
        "dimension": 4 * m - 2,
        "verdict": verdict,
    }
    return _dumps(payload)


def _cmd_table1(args) -> str:
    m_range = _parse_range(args.m)
    s_range = _parse_range(args.s)
    grid = imm.table1(m_range, s_range)
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "m": list(m_range),
            "s": list(s_range),
            "dimensions": grid,
        }
        return _dumps(payload)
    lines = ["m/s\t" + "\t".join(str(s) for s in s_range)]
    for m, row in zip(m_range, grid):
        lines.append(str(m) + "\t" + "\t".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def _cmd_report(args) -> str:
    codes = enumerate_codes(args.n)
    entries = []
    for code in codes:
        witness = realize(code)
        if isinstance(witness, Unrealizable):
            raise InternalInvariantError(
                f"enumerated code {format_code(code)} failed realize(): {witness.reason}"
            )
        rep = imm.build_report(code, witness)
        entries.append(rep.to_json_dict())
    payload = {"schema": SCHEMA_VERSION, "n": args.n, "count": len(entries), "entries": entries}
    return _dumps(payload)


def _cmd_verify(args) -> str:
    results = verify_mod.run_checks(args.level)
    lines = []
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    failed = [name for name, ok, _ in results if not ok]
    lines.append(
        f"{len(results) - len(failed)}/{len(results)} checks passed"
        + (f"; FAILED: {', '.join(failed)}" if failed else "")
    )
    text = "\n".join(lines) + "\n"
    if failed:
        raise InternalInvariantError(text)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyspace",
        description="Exact invariants of spatial polygon spaces",
    )
    default_threads = os.environ.get("POLYSPACE_THREADS", "1")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--format", choices=["json", "tsv"], default=fmt_default)
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument(
            "--threads",
            type=int,
            default=None,
            help=f"worker threads (default from POLYSPACE_THREADS, currently {default_threads}); "
            "results are canonical regardless",
        )

    p = sub.add_parser("genetic-code", help="genetic code of a length vector")
    p.add_argument("--lengths", required=True, metavar="a,b,c", help="comma-separated rationals")
    common(p)
    p.set_defaults(handler=_cmd_genetic_code)

    p = sub.add_parser("enumerate", help="all realizable codes for a given n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("cohomology", help="Betti numbers, bases, family presentation check")
    p.add_argument("--code", required=True, metavar='"{{7,4}}"')
    common(p)
    p.set_defaults(handler=_cmd_cohomology)

    p = sub.add_parser("ktheory", help="K-ring basis, relations, Chern-character oracle")
    p.add_argument("--code", required=True)
    p.add_argument(
        "--mode",
        choices=[kt.FAMILY_NK, kt.FAMILY_NK1, kt.GENERAL],
        default=None,
        help="presentation to use (default: strongest available)",
    )
    p.add_argument("--dump-relations", action="store_true")
    common(p)
    p.set_defaults(handler=_cmd_ktheory)

    p = sub.add_parser("nonimmersion", help="Gamma-class nonimmersion dimensions")
    p.add_argument("--code", required=True)
    common(p)
    p.set_defaults(handler=_cmd_nonimmersion)

    p = sub.add_parser("immersion-4m2", help="decide the immersion in R^(4m-2)")
    p.add_argument("--code", required=True)
    common(p)
    p.set_defaults(handler=_cmd_immersion_4m2)

    p = sub.add_parser("table1", help="grid of nonimmersion dimensions 2m+2M-1")
    p.add_argument("--m", required=True, metavar="lo:hi")
    p.add_argument("--s", required=True, metavar="lo:hi")
    common(p, fmt_default="tsv")
    p.set_defaults(handler=_cmd_table1)

    p = sub.add_parser("report", help="full catalog of reports for a given n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_report)

    p = sub.add_parser("verify", help="run the full paper-regression suite")
    p.add_argument("--level", choices=["quick", "full"], default="full")
    common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.handler(args)
    except InternalInvariantError as exc:
        sys.stderr.write(f"internal invariant failure: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
