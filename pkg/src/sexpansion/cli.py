"""Command-line surface: census, classification, expansion reports,
template completion, the fixture reproduction suite, and the exhaustive
non-reachability scan.

Exit codes: 0 success, 1 assertion mismatch against the recorded values,
2 input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fixtures
from .cayley import (
    ISO,
    ISO_ANTI,
    CayleyTable,
    apply_perm,
    are_isomorphic,
    find_zero,
    format_table,
    parse_table,
)
from .census import CensusRequest, count_semigroups, enumerate_semigroups
from .expand import is_monomial, pipeline, report, s_expand
from .liealg import (
    STANDARD_2D_GRADING,
    abelian_2d,
    classify3,
    parse_structure_constants,
    solvable_2d,
)
from .resonance import ResonantDecomposition, find_resonances, is_resonant
from .templates import complete, completion_count_raw, parse_problem

FORBIDDEN_TYPES = frozenset({"IV", "VI", "VII1", "VII2", "VIII", "IX"})
SCAN_MAX_ORDER = 5


def _resolve_input(name: str) -> Path:
    """Accept a real path or a bundled fixture name (with or without a
    leading fixtures/ prefix)."""
    path = Path(name)
    if path.is_file():
        return path
    try:
        return fixtures.fixture_path(path.name)
    except FileNotFoundError:
        raise FileNotFoundError(f"no such file or fixture: {name}")


def _parse_labels(csv: str) -> frozenset[int]:
    try:
        out = frozenset(int(x) for x in csv.split(",") if x.strip())
    except ValueError:
        raise ValueError(f"bad label list {csv!r}; expected comma-separated integers")
    if not out:
        raise ValueError("label list must be nonempty")
    return out


# -- subcommands ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    convention = ISO_ANTI if args.convention == "iso-anti" else ISO
    req = CensusRequest(
        order=args.order,
        abelian_only=args.abelian,
        convention=convention,
        hard_cap=6 if args.allow_order_6 else 5,
    )
    if args.out is None:
        count = count_semigroups(req)
    else:
        tables = enumerate_semigroups(req)
        count = len(tables)
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        width = max(4, len(str(count)))
        for rank, t in enumerate(tables, start=1):
            (outdir / f"{rank:0{width}d}").write_text(format_table(t))
    manifest = (
        f"order={req.order} abelian={'true' if req.abelian_only else 'false'} "
        f"convention={req.convention} count={count}"
    )
    if args.out is not None:
        (Path(args.out) / "MANIFEST").write_text(manifest + "\n")
    print(manifest)
    return 0


def cmd_classify(args) -> int:
    algebra = parse_structure_constants(_resolve_input(args.file).read_text())
    print(classify3(algebra))
    return 0


def cmd_resonances(args) -> int:
    table = parse_table(_resolve_input(args.file).read_text())
    decomps = find_resonances(table, zero_in_both=args.zero_in_both)
    print(f"count={len(decomps)}")
    for d in decomps:
        print(d.render())
    return 0


def cmd_expand(args) -> int:
    table = parse_table(_resolve_input(args.semigroup).read_text())
    g = abelian_2d() if args.algebra == "abelian" else solvable_2d()
    if (args.s0 is None) != (args.s1 is None):
        raise ValueError("--s0 and --s1 must be given together")
    print(f"semigroup: {Path(args.semigroup).name}")
    for line in format_table(table).strip().splitlines():
        print(f"  {line}")
    if args.s0 is None:
        if args.reduce:
            raise ValueError("--reduce needs a resonant decomposition (--s0/--s1)")
        labeled = s_expand(g, table)
        print(report(labeled, heading=f"expansion of the {args.algebra} algebra:"))
    else:
        d = ResonantDecomposition(_parse_labels(args.s0), _parse_labels(args.s1))
        print(f"decomposition: {d.render()}")
        labeled = pipeline(g, STANDARD_2D_GRADING, table, d, args.reduce)
        stage = "reduced resonant subalgebra" if args.reduce else "resonant subalgebra"
        print(report(labeled, heading=f"{stage} of the {args.algebra} expansion:"))
    if labeled.dim == 3:
        print(f"classification: {classify3(labeled.underlying)}")
    else:
        print(f"classification: n/a (dimension {labeled.dim})")
    return 0


def cmd_complete(args) -> int:
    problem = parse_problem(_resolve_input(args.file).read_text())
    d = problem.required_decomposition
    print(
        f"problem: zero={problem.required_zero} {d.render()} "
        f"commutative={'true' if problem.require_commutative else 'false'}"
    )
    raw = completion_count_raw(problem)
    classes = complete(problem)
    print(f"raw completions: {raw}")
    print(f"classes: {len(classes)}")
    for rank, t in enumerate(classes, start=1):
        print(f"-- class {rank}")
        for row in t.rows:
            print("  " + " ".join(str(v) for v in row))
    return 0


# -- reproduction of the recorded results --------------------------------------


def run_reproduce() -> tuple[str, bool]:
    """Check every recorded fixture fact; returns (report text, all ok)."""
    lines: list[str] = []
    failures: list[str] = []
    by_type: dict[str, list[str]] = {}
    abelian_names: list[str] = []
    solv, abel = solvable_2d(), abelian_2d()

    for ks in fixtures.KNOWN_SEMIGROUPS:
        try:
            table = fixtures.load_table(ks.name)
            zero = find_zero(table)
            resonant = is_resonant(table, ks.decomposition)
            got = str(classify3(pipeline(solv, STANDARD_2D_GRADING, table, ks.decomposition, True).underlying))
            got_abelian = str(classify3(pipeline(abel, STANDARD_2D_GRADING, table, ks.decomposition, True).underlying))
        except (ValueError, OSError) as exc:
            failures.append(f"{ks.name}: {exc}")
            lines.append(f"{ks.name}: FAILED ({exc})")
            continue
        lines.append(
            f"{ks.name}: zero=λ{zero} {ks.decomposition.render()} "
            f"resonant={'yes' if resonant else 'no'} solvable→{got} abelian→{got_abelian}"
        )
        if zero != ks.zero:
            failures.append(f"{ks.name}: zero is {zero}, recorded {ks.zero}")
        if not resonant:
            failures.append(f"{ks.name}: recorded decomposition is not resonant")
        if got != ks.bianchi_from_solvable:
            failures.append(f"{ks.name}: solvable start gives {got}, recorded {ks.bianchi_from_solvable}")
        if got_abelian != "I":
            failures.append(f"{ks.name}: abelian start gives {got_abelian}, recorded I")
        by_type.setdefault(got, []).append(ks.name)
        abelian_names.append(ks.name)

    lines.append(f"Type I: {' '.join(abelian_names)} (abelian start)")
    for tag in ("II", "III", "V"):
        if tag in by_type:
            lines.append(f"Type {tag}: {' '.join(by_type[tag])}")

    for name, census_name, witness in fixtures.KNOWN_ISOMORPHISMS:
        try:
            hand = fixtures.load_table(name)
            ref = fixtures.load_table(census_name)
        except (ValueError, OSError) as exc:
            failures.append(f"{name}: {exc}")
            continue
        found = are_isomorphic(hand, ref)
        ok = found == witness and apply_perm(ref, witness) == hand
        lines.append(f"{name} ≅ {census_name} via {witness.notation()}" + ("" if ok else " [MISMATCH]"))
        if not ok:
            failures.append(
                f"{name}: witness {witness.notation()} does not map {census_name} onto it "
                f"(search found {found.notation() if found else 'none'})"
            )

    ok = not failures
    lines.append("reproduce: OK" if ok else "reproduce: FAIL")
    lines.extend(f"  {f}" for f in failures)
    return "\n".join(lines), ok


def cmd_reproduce(_args) -> int:
    text, ok = run_reproduce()
    print(text)
    return 0 if ok else 1


# -- exhaustive scan ------------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    table: CayleyTable
    decomposition: ResonantDecomposition
    start: str
    reduced: bool
    dim: int
    bianchi: str | None


@dataclass(frozen=True)
class ScanResult:
    max_order: int
    start: str
    records: tuple[ScanRecord, ...]
    violations: tuple[str, ...]

    def dim3_records(self) -> tuple[ScanRecord, ...]:
        return tuple(r for r in self.records if r.dim == 3)

    def reachable_3d(self, start: str | None = None) -> frozenset[str]:
        return frozenset(
            r.bianchi
            for r in self.dim3_records()
            if start is None or r.start == start
        )

    def forbidden_records(self) -> tuple[ScanRecord, ...]:
        return tuple(r for r in self.dim3_records() if r.bianchi in FORBIDDEN_TYPES)


def run_scan(max_order: int, start: str = "both") -> ScanResult:
    """Every (abelian semigroup of order ≤ max_order, resonant
    decomposition, start algebra, reduce flag) pipeline run.

    Alongside the records, three structural facts are checked on every
    expansion: the bracket of two labeled elements is 0 or ±1 times one
    labeled element (so no sums and no scalings can ever appear), and
    every 3-dimensional result has at least one vanishing pair bracket.
    """
    if not 1 <= max_order <= SCAN_MAX_ORDER:
        raise ValueError(f"max_order must be in 1..{SCAN_MAX_ORDER}")
    starts = {
        "abelian": (("abelian", abelian_2d()),),
        "nonabelian": (("nonabelian", solvable_2d()),),
        "both": (("abelian", abelian_2d()), ("nonabelian", solvable_2d())),
    }.get(start)
    if starts is None:
        raise ValueError("start must be abelian, nonabelian, or both")

    records: list[ScanRecord] = []
    violations: list[str] = []
    for order in range(1, max_order + 1):
        for table in enumerate_semigroups(CensusRequest(order, abelian_only=True)):
            zero = find_zero(table)
            for tag, g in starts:
                full = s_expand(g, table)
                if not is_monomial(full.underlying):
                    violations.append(f"non-monomial expansion: order={order} table={table.flat()} start={tag}")
            for d in find_resonances(table):
                for tag, g in starts:
                    for reduced in (False, True) if zero is not None else (False,):
                        labeled = pipeline(g, STANDARD_2D_GRADING, table, d, reduced)
                        if not is_monomial(labeled.underlying):
                            violations.append(
                                f"non-monomial result: table={table.flat()} {d.render()} start={tag} reduce={reduced}"
                            )
                        bianchi = None
                        if labeled.dim == 3:
                            bianchi = str(classify3(labeled.underlying))
                            pair_brackets = [
                                labeled.underlying.c[i][j]
                                for i in range(3)
                                for j in range(i + 1, 3)
                            ]
                            if all(any(row) for row in pair_brackets):
                                violations.append(
                                    f"no vanishing pair bracket: table={table.flat()} "
                                    f"{d.render()} start={tag} reduce={reduced}"
                                )
                        records.append(ScanRecord(table, d, tag, reduced, labeled.dim, bianchi))

    for r in records:
        if r.dim == 3 and r.bianchi in FORBIDDEN_TYPES:
            violations.append(
                f"forbidden type {r.bianchi}: table={r.table.flat()} "
                f"{r.decomposition.render()} start={r.start} reduce={r.reduced}"
            )
    return ScanResult(max_order, start, tuple(records), tuple(violations))


def render_scan(result: ScanResult) -> str:
    lines = [
        f"scan: max_order={result.max_order} start={result.start}",
        f"records: {len(result.records)}",
        f"3-dimensional results: {len(result.dim3_records())}",
        "reachable 3-dim types: " + " ".join(sorted(result.reachable_3d())),
        f"forbidden types found: {len(result.forbidden_records())}",
    ]
    if result.violations:
        lines.append("scan: FAIL")
        lines.extend(f"  {v}" for v in result.violations)
    else:
        lines.append("scan: OK")
    return "\n".join(lines)


def cmd_scan(args) -> int:
    result = run_scan(args.max_order, args.start)
    print(render_scan(result))
    return 0 if not result.violations else 1


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sexpansion",
        description="Finite-semigroup expansions of the 2-dimensional isometry algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="census of semigroups up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--abelian", action="store_true", help="commutative tables only")
    p.add_argument("--convention", choices=["iso", "iso-anti"], default="iso")
    p.add_argument("--out", help="write one table file per class into this directory")
    p.add_argument("--allow-order-6", action="store_true", help="lift the order-5 cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="Bianchi type of a structure-constants file")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("resonances", help="resonant decompositions of a table file")
    p.add_argument("file")
    p.add_argument("--zero-in-both", action="store_true",
                   help="keep only decompositions with the zero in both blocks")
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("expand", help="expansion / resonant subalgebra / reduction report")
    p.add_argument("--algebra", choices=["abelian", "solvable"], required=True)
    p.add_argument("--semigroup", required=True, metavar="FILE")
    p.add_argument("--s0", help="comma-separated labels of S0")
    p.add_argument("--s1", help="comma-separated labels of S1")
    p.add_argument("--reduce", action="store_true", help="apply the zero reduction")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("complete", help="complete a partial-table problem file")
    p.add_argument("file")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("reproduce", help="check every recorded fixture fact")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("scan", help="exhaustive pipeline scan over the abelian census")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--start", choices=["abelian", "nonabelian", "both"], default="both")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
