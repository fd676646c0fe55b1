"""Command-line interface: classification, colorings, verification, matrix
traces, and the sweep harness.

Exit codes are a stable contract: 0 success, 1 a verification or
consistency failure, 2 invalid input.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from math import gcd

from .errors import CertificationError, InvalidInputError, QuotientLoopsError
from .intmat import build_heuberger_matrix, collapse_rows, hermite_reduce_step
from .periodic import certify, find_periodic_coloring, word_is_proper
from .zhu import (
    ChiBranch,
    DistanceTriple,
    chi_formula,
    normalize_triple,
    orient_for_matrix,
)

BRANCH_TEXT = {
    ChiBranch.ALL_ODD: "all odd",
    ChiBranch.A1_B2_3DIVC: "a=1, b=2, 3|c",
    ChiBranch.SUM_NOT_CONG_MOD3: "a+b=c, a != b (mod 3)",
    ChiBranch.OTHERWISE: "otherwise",
}

CSV_FIELDS = ["a", "b", "c", "chi_formula", "chi_certified", "period", "ees_bound", "agree"]


@dataclass(frozen=True)
class SweepRow:
    """One sweep result: the classification value against the certified
    one, the certified period, and the generic q*k^q period bound
    (q = max distance, k = chi) for contrast."""

    a: int
    b: int
    c: int
    chi_formula: int
    chi_certified: "int | None"
    period: "int | None"
    ees_bound: int
    agree: bool

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "chi_formula": self.chi_formula,
            "chi_certified": self.chi_certified,
            "period": self.period,
            "ees_bound": self.ees_bound,
            "agree": self.agree,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SweepRow":
        return cls(**{key: data[key] for key in CSV_FIELDS})

    def to_csv_values(self) -> list:
        return [
            self.a,
            self.b,
            self.c,
            self.chi_formula,
            "" if self.chi_certified is None else self.chi_certified,
            "" if self.period is None else self.period,
            self.ees_bound,
            "true" if self.agree else "false",
        ]


def iter_triples(max_c: int):
    """Normalized triples a <= b <= c <= max_c with coprime entries, in
    lexicographic order."""
    for a in range(1, max_c + 1):
        for b in range(a, max_c + 1):
            for c in range(b, max_c + 1):
                if gcd(a, b, c) == 1:
                    yield DistanceTriple(a, b, c)


def sweep_rows(max_c: int) -> list[SweepRow]:
    """Certify every normalized triple up to max_c and tabulate the outcome.

    A certification failure is recorded as a disagreeing row instead of
    aborting the sweep, so one bad triple cannot hide the rest.
    """
    rows = []
    for t in iter_triples(max_c):
        fchi, _ = chi_formula(t)
        bound = t.c * fchi**t.c
        try:
            cert = certify(t)
        except CertificationError:
            rows.append(SweepRow(t.a, t.b, t.c, fchi, None, None, bound, False))
            continue
        rows.append(
            SweepRow(
                t.a, t.b, t.c, fchi, cert.chi, cert.upper.period, bound, cert.chi == fchi
            )
        )
    return rows


def format_rows_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        writer.writerow(row.to_csv_values())
    return buf.getvalue()


def format_rows_json(rows: list[SweepRow]) -> str:
    return json.dumps([row.to_json_dict() for row in rows], indent=2) + "\n"


def _normalized_or_none(args) -> "DistanceTriple | None":
    try:
        return normalize_triple(args.a, args.b, args.c)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def _note_normalization(args, t: DistanceTriple) -> None:
    if t.scale > 1:
        print(
            f"normalized ({args.a}, {args.b}, {args.c}) -> {t.distances()} with scale {t.scale}"
        )


def _cmd_chi(args) -> int:
    t = _normalized_or_none(args)
    if t is None:
        return 2
    if args.json:
        try:
            cert = certify(t)
        except CertificationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(json.dumps(cert.to_json_dict(), indent=2))
        return 0
    _note_normalization(args, t)
    chi, branch = chi_formula(t)
    print(f"{chi} ({BRANCH_TEXT[branch]})")
    return 0


def _cmd_color(args) -> int:
    t = _normalized_or_none(args)
    if t is None:
        return 2
    chi, _ = chi_formula(t)
    k = chi if args.k is None else args.k
    if k < 1:
        print("error: number of colors must be positive", file=sys.stderr)
        return 2
    _note_normalization(args, t)
    pc = find_periodic_coloring(t, k)
    if pc is None:
        print(
            f"no periodic {k}-coloring with period <= {t.b + t.c} "
            f"(chromatic number is {chi})",
            file=sys.stderr,
        )
        return 1
    print(f"period {pc.period}")
    print(" ".join(str(color) for color in pc.colors))
    return 0


def _cmd_verify(args) -> int:
    # The word is checked against the distances exactly as given; scaled
    # inputs have different edges than their normalized form.
    if min(args.a, args.b, args.c) < 1:
        print("error: distances must be positive integers", file=sys.stderr)
        return 2
    if args.period < 1:
        print("error: period must be positive", file=sys.stderr)
        return 2
    try:
        colors = tuple(int(part) for part in args.colors.split(","))
    except ValueError:
        print("error: --colors must be a comma-separated list of integers", file=sys.stderr)
        return 2
    if len(colors) != args.period:
        print(
            f"error: expected {args.period} colors, got {len(colors)}", file=sys.stderr
        )
        return 2
    if word_is_proper((args.a, args.b, args.c), colors):
        print("proper")
        return 0
    print("improper")
    return 1


def _print_stage(stage: str, matrix) -> None:
    print(f"  [{stage}] {json.dumps(matrix.to_json_dict())}")
    for j, total in enumerate(matrix.label_column_products()):
        if matrix.modulus:
            reduced = total % matrix.modulus
            detail = f"label.col{j} = {total} = {reduced} (mod {matrix.modulus})"
        else:
            reduced = total
            detail = f"label.col{j} = {total}"
        mark = "ok" if reduced == 0 else "VIOLATED"
        print(f"  [{stage}] {detail} {mark}")


def _cmd_matrix(args) -> int:
    t = _normalized_or_none(args)
    if t is None:
        return 2
    _note_normalization(args, t)
    a1, a2, a3 = orient_for_matrix(t)
    print(f"oriented: ({a1}, {a2}, {a3})")
    m = build_heuberger_matrix(a1, a2, a3)
    print(f"M: {_fmt_matrix(m)}")
    if args.steps:
        _print_stage("build", m)
    q, r, reduced = hermite_reduce_step(m)
    print(f"reduction: q={q} r={r}")
    print(f"M1: {_fmt_matrix(reduced)}")
    if args.steps:
        _print_stage("reduce", reduced)
    for i in range(3):
        for j in range(i + 1, 3):
            for sign in (-1, 1):
                try:
                    quotient = collapse_rows(m, i, j, sign)
                except QuotientLoopsError as exc:
                    print(f"collapse rows ({i},{j}) sign {sign:+d}: rejected ({exc})")
                    continue
                conn = ",".join(str(v) for v in quotient.label)
                print(
                    f"collapse rows ({i},{j}) sign {sign:+d}: "
                    f"C_{quotient.modulus}({conn})  {_fmt_matrix(quotient)}"
                )
                if args.steps:
                    _print_stage(f"collapse({i},{j},{sign:+d})", quotient)
    return 0


def _fmt_matrix(m) -> str:
    rows = " / ".join(",".join(str(e) for e in row) for row in m.entries)
    label = ",".join(str(v) for v in m.label)
    return f"({rows})  label ({label})  modulus {m.modulus}"


def _cmd_sweep(args) -> int:
    if args.max < 1:
        print("error: --max must be positive", file=sys.stderr)
        return 2
    rows = sweep_rows(args.max)
    payload = format_rows_json(rows) if args.format == "json" else format_rows_csv(rows)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(payload)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        print(payload, end="")
    return 0 if all(row.agree for row in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distchroma",
        description=(
            "Chromatic numbers of integer distance graphs with three "
            "distances: classification, certified periodic colorings, and "
            "relation-matrix traces."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="chromatic number of the {a,b,c} distance graph")
    _add_triple(p_chi)
    p_chi.add_argument("--json", action="store_true", help="emit the full certificate as JSON")
    p_chi.set_defaults(func=_cmd_chi)

    p_color = sub.add_parser("color", help="construct a periodic coloring")
    _add_triple(p_color)
    p_color.add_argument("--k", type=int, default=None, help="colors to use (default: the chromatic number)")
    p_color.set_defaults(func=_cmd_color)

    p_verify = sub.add_parser("verify", help="check a periodic color word")
    _add_triple(p_verify)
    p_verify.add_argument("--period", type=int, required=True)
    p_verify.add_argument("--colors", type=str, required=True, help="comma-separated color word")
    p_verify.set_defaults(func=_cmd_verify)

    p_matrix = sub.add_parser("matrix", help="show the relation-matrix pipeline")
    _add_triple(p_matrix)
    p_matrix.add_argument("--steps", action="store_true", help="trace each stage as JSON with annihilation checks")
    p_matrix.set_defaults(func=_cmd_matrix)

    p_sweep = sub.add_parser("sweep", help="cross-validate all triples up to a bound")
    p_sweep.add_argument("--max", type=int, required=True, help="largest distance to sweep")
    p_sweep.add_argument("--out", type=str, default=None, help="write the table to a file instead of stdout")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def _add_triple(sub_parser: argparse.ArgumentParser) -> None:
    sub_parser.add_argument("a", type=int)
    sub_parser.add_argument("b", type=int)
    sub_parser.add_argument("c", type=int)


def main(argv: "list[str] | None" = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
