"""Command-line front end: every analysis as a subcommand.

Each run builds one OutputDocument (a plain JSON-serializable dict with exact
rationals rendered as "numerator/denominator" strings); --format json prints
it verbatim, --format table renders it through a pure function of the
document, so the two modes always agree.

Exit codes: 0 success, 2 invalid input or usage, 1 internal consistency
failure (which is always a bug, never bad user input).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hodge, quantum, screen, section
from .errors import InternalConsistencyError, InvalidInputError, UndeterminedProductError
from .partitions import Box, core_search, snow_witnesses
from .polynomials import UniPoly
from .rootdata import GrassmannianId, dimension, fano_index, parse_type, poincare_polynomial

SCHEMA_VERSION = "1"


def _rat(value) -> int | str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return int(value)


def _poly(poly: UniPoly) -> list:
    return [_rat(c) for c in poly.coeffs]


def _document(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


# -- subcommand handlers ------------------------------------------------------


def _cmd_betti(args) -> dict:
    g = GrassmannianId(parse_type(args.type), args.node)
    poly = poincare_polynomial(g)
    return _document(
        "betti",
        {"type": args.type.upper(), "node": args.node},
        {
            "label": str(g),
            "dim": dimension(g),
            "index": fano_index(g),
            "even_betti": _poly(poly),
        },
    )


def _verdict_payload(profile: screen.BettiProfile) -> dict:
    verdict = screen.screen(profile)
    payload = {
        "label": profile.label,
        "index": profile.index,
        "even_betti": list(profile.even_betti),
        "outcome": verdict.outcome,
    }
    if verdict.witness:
        i, d, lhs, rhs = verdict.witness
        payload["witness"] = {"i": i, "d": d, "lhs": lhs, "rhs": rhs}
    return payload


def _cmd_screen(args) -> dict:
    if args.section:
        if args.k is None or args.n is None:
            raise InvalidInputError("screen --section requires --k and --n")
        profile = hodge.section_profile(args.k, args.n, seed=args.seed)
        inputs = {"section": True, "k": args.k, "n": args.n, "seed": args.seed}
    else:
        if args.type is None or args.node is None:
            raise InvalidInputError("screen requires --type and --node (or --section)")
        profile = screen.profile_of(GrassmannianId(parse_type(args.type), args.node))
        inputs = {"section": False, "type": args.type.upper(), "node": args.node}
    return _document("screen", inputs, _verdict_payload(profile))


def _cmd_exceptional_table(args) -> dict:
    rows = [
        {
            "label": row.label,
            "dim": row.dim,
            "index": row.index,
            "i": row.residue,
            "tilde_b": row.tilde_b,
            "tilde_b_neg": row.tilde_b_neg,
            "verdict": row.verdict,
        }
        for row in screen.exceptional_table()
    ]
    return _document("exceptional-table", {}, {"rows": rows})


def _cmd_core_search(args) -> dict:
    found = core_search(Box(args.k, args.n))
    return _document(
        "core-search",
        {"k": args.k, "n": args.n},
        {"witnesses": [{"partition": list(lam), "i": i} for lam, i in found]},
    )


def _cmd_snow(args) -> dict:
    found = snow_witnesses(Box(args.k, args.n), args.p, args.twist)
    return _document(
        "snow",
        {"k": args.k, "n": args.n, "p": args.p, "twist": args.twist},
        {"witnesses": [{"partition": list(lam), "j": j} for lam, j in found]},
    )


def _cmd_hodge(args) -> dict:
    inputs = {"k": args.k, "n": args.n, "section": args.section, "seed": args.seed}
    genus = hodge.chi_y(args.k, args.n, section=args.section, seed=args.seed)
    results = {"chi_y": _poly(genus)}
    if args.section:
        dia = hodge.diamond(args.k, args.n, seed=args.seed)
        results["diamond_column"] = dia.column()
        results["middle_off_diagonal"] = [
            {"p": p, "q": q, "h": v} for p, q, v in dia.middle_off_diagonal()
        ]
        results["hodge_tate"] = dia.is_hodge_tate()
    return _document("hodge", inputs, results)


def _cmd_qh_charpoly(args) -> dict:
    inputs = {
        "k": args.k,
        "n": args.n,
        "section": args.section,
        "power": args.power,
        "with_e2": args.with_e2,
    }
    if args.section:
        poly = section.section_charpoly(args.k, args.n, args.power, with_e2=args.with_e2)
    else:
        box = Box(args.k, args.n)
        from . import linalg

        op = linalg.mat_pow([list(r) for r in quantum.pieri_matrix(box, 1, 1)], args.power)
        if args.with_e2:
            op = linalg.mat_mul(op, [list(r) for r in quantum.pieri_matrix(box, 2, 1)])
        poly = quantum.char_poly_on_piece(op, quantum.graded_pieces(box)[0], box)
    return _document("qh charpoly", inputs, {"charpoly": _poly(poly)})


def _cmd_qh_presentation(args) -> dict:
    ok = quantum.presentation_check(Box(args.k, args.n))
    return _document(
        "qh presentation", {"k": args.k, "n": args.n}, {"holds": bool(ok)}
    )


def _cmd_qh_lefschetz(args) -> dict:
    ok = section.lefschetz_relation_check(args.n)
    return _document("qh lefschetz", {"n": args.n}, {"holds": bool(ok)})


def _cmd_qh_semisimple(args) -> dict:
    inputs = {"k": args.k, "n": args.n, "section": args.section}
    if args.section:
        report = section.section_semisimplicity(args.k, args.n)
        results = {
            "semisimple": report.semisimple,
            "method": report.method,
            "detail": report.detail,
        }
    else:
        ok = quantum.qh_semisimple(Box(args.k, args.n))
        results = {"semisimple": bool(ok), "method": "trace-form", "detail": ""}
    return _document("qh semisimple", inputs, results)


# -- table rendering (a pure function of the document) ------------------------


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _render_rows(headers: list[str], rows: list[list]) -> list[str]:
    table = [headers] + [[_format_cell(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    lines = []
    for r, row in enumerate(table):
        lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
        if r == 0:
            lines.append("  ".join("-" * widths[i] for i in range(len(headers))))
    return lines


def render_table(doc: dict) -> str:
    command = doc["command"]
    inputs = doc["inputs"]
    results = doc["results"]
    lines = [f"# {command}"]
    if inputs:
        lines.append("inputs: " + ", ".join(f"{k}={_format_cell(v)}" for k, v in inputs.items()))
    if command == "betti":
        lines.append(f"{results['label']}: dim={results['dim']} index={results['index']}")
        lines += _render_rows(
            ["2j", "b_2j"], [[2 * j, b] for j, b in enumerate(results["even_betti"])]
        )
    elif command == "screen":
        lines.append(f"{results['label']}: index={results['index']}")
        lines.append("even betti: " + " ".join(str(b) for b in results["even_betti"]))
        lines.append(f"outcome: {results['outcome']}")
        if "witness" in results:
            w = results["witness"]
            lines.append(
                f"witness: tilde_b({w['i']}) = {w['lhs']} > {w['rhs']} = "
                f"tilde_b({w['d']}*{w['i']})"
            )
    elif command == "exceptional-table":
        lines += _render_rows(
            ["case", "dim", "r", "i", "tilde_b(i)", "tilde_b(-i)", "verdict"],
            [
                [r["label"], r["dim"], r["index"], r["i"], r["tilde_b"], r["tilde_b_neg"], r["verdict"]]
                for r in results["rows"]
            ],
        )
    elif command in ("core-search", "snow"):
        key = "i" if command == "core-search" else "j"
        rows = [[str(tuple(w["partition"])), w[key]] for w in results["witnesses"]]
        lines += _render_rows(["partition", key], rows) if rows else ["(no witnesses)"]
    elif command == "hodge":
        lines += _render_rows(
            ["p", "chi(Omega^p)"], [[p, c] for p, c in enumerate(results["chi_y"])]
        )
        if "diamond_column" in results:
            lines.append(
                "diamond column: " + " ".join(str(h) for h in results["diamond_column"])
            )
            if results["middle_off_diagonal"]:
                for entry in results["middle_off_diagonal"]:
                    lines.append(f"h^({entry['p']},{entry['q']}) = {entry['h']}")
            lines.append("hodge-tate: " + _format_cell(results["hodge_tate"]))
    elif command == "qh charpoly":
        lines.append(
            "charpoly (lowest degree first): "
            + " ".join(str(c) for c in results["charpoly"])
        )
    elif command in ("qh presentation", "qh lefschetz"):
        lines.append("holds: " + _format_cell(results["holds"]))
    elif command == "qh semisimple":
        lines.append("semisimple: " + _format_cell(results["semisimple"]))
        lines.append(f"method: {results['method']}")
        if results["detail"]:
            lines.append(f"detail: {results['detail']}")
    else:
        lines.append(json.dumps(results, indent=2))
    return "\n".join(lines) + "\n"


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhgrass",
        description="Exact quantum cohomology and Hodge-theoretic invariants of "
        "Grassmannians and their hyperplane sections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("betti", help="Betti numbers, dimension and Fano index of G/P_k")
    p.add_argument("--type", required=True, help="Dynkin type, e.g. E7 or C5")
    p.add_argument("--node", required=True, type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_betti)

    p = sub.add_parser("screen", help="semisimplicity obstruction from Betti numbers")
    p.add_argument("--type")
    p.add_argument("--node", type=int)
    p.add_argument("--section", action="store_true", help="screen a Gr(k,n) hyperplane section")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=hodge.DEFAULT_SEED)
    add_format(p)
    p.set_defaults(handler=_cmd_screen)

    p = sub.add_parser("exceptional-table", help="the 13 exceptional screen witnesses")
    add_format(p)
    p.set_defaults(handler=_cmd_exceptional_table)

    p = sub.add_parser("core-search", help="large core partitions in the k x (n-k) box")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_core_search)

    p = sub.add_parser("snow", help="nonvanishing witnesses for twisted forms on Gr(k,n)")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--twist", required=True, type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_snow)

    p = sub.add_parser("hodge", help="chi_y genus (and Hodge diamond of the section)")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--section", action="store_true")
    p.add_argument("--seed", type=int, default=hodge.DEFAULT_SEED)
    add_format(p)
    p.set_defaults(handler=_cmd_hodge)

    qh = sub.add_parser("qh", help="quantum cohomology computations")
    qh_sub = qh.add_subparsers(dest="qh_command", required=True)

    p = qh_sub.add_parser("charpoly", help="characteristic polynomial on the residue-0 piece")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--section", action="store_true")
    p.add_argument("--power", required=True, type=int)
    p.add_argument("--with-e2", dest="with_e2", action="store_true")
    add_format(p)
    p.set_defaults(handler=_cmd_qh_charpoly)

    p = qh_sub.add_parser("presentation", help="verify the quantum presentation relations")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_qh_presentation)

    p = qh_sub.add_parser("lefschetz", help="quantum Lefschetz identities for sections")
    p.add_argument("--n", required=True, type=int, choices=(7, 8))
    add_format(p)
    p.set_defaults(handler=_cmd_qh_lefschetz)

    p = qh_sub.add_parser("semisimple", help="trace-form semisimplicity verdicts")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--section", action="store_true")
    add_format(p)
    p.set_defaults(handler=_cmd_qh_semisimple)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        doc = args.handler(args)
    except (InvalidInputError, UndeterminedProductError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(render_table(doc))
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
