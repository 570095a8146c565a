"""Command-line front end: group parsing, discriminants, verification suites,
table regression, and the conjecture scanner."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

from .groups import (
    ReflectionGroupData,
    build_coxeter,
    build_series,
    class_stats,
    data_dir,
    load_generator_group,
)
from .krammer import build_krammer, check_braid_relations, cubic_specialization_check
from .matrices import char_poly
from .quadratic import check_n_c, conjecture_scan, discriminant, gram_matrix
from .rep import (
    DIHEDRAL_CHARACTER_NOTE,
    build_rep,
    check_T_scalar,
    check_equivariance,
    check_integrability,
    dihedral_m0_check,
    parabolic_restriction_check,
    spectrum_check,
)
from .tensor import (
    _EXCLUDED_POINTS,
    _TENSOR_CLASS_LIMIT,
    ds_table_check,
    psu_membership_check,
    tensor_square_check,
)

COXETER_FIXED = ("H3", "H4", "F4", "E6", "E7", "E8")
ALIASES = {23: "H3", 28: "F4", 30: "H4", 35: "E6", 36: "E7", 37: "E8"}
SYMBOLIC_SIZE_LIMIT = 60


@dataclass(frozen=True)
class Series:
    m: int
    p: int
    r: int

    def render(self) -> str:
        return f"G({self.m},{self.p},{self.r})"


@dataclass(frozen=True)
class Coxeter:
    kind: str
    rank: int | None = None

    def render(self) -> str:
        if self.kind == "I2":
            return f"I2({self.rank})"
        if self.kind in COXETER_FIXED:
            return self.kind
        return f"{self.kind}{self.rank}"


@dataclass(frozen=True)
class Exceptional:
    index: int

    def render(self) -> str:
        return f"G{self.index}"


GroupSpec = Union[Series, Coxeter, Exceptional]


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ValueError(f"syntax error at position {self.pos}: {message}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int(self.text[start : self.pos])

    def done(self) -> None:
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")


def parse_group(text: str) -> GroupSpec:
    p = _Parser(text.strip())
    head = p.peek()
    if head == "G":
        p.pos += 1
        if p.peek() == "(":
            p.pos += 1
            m = p.integer()
            p.expect(",")
            pp = p.integer()
            p.expect(",")
            r = p.integer()
            p.expect(")")
            p.done()
            if pp < 1 or m % pp or m // pp not in (1, 2):
                raise ValueError("pseudo-reflection series unsupported")
            return Series(m, pp, r)
        k = p.integer()
        p.done()
        if k in ALIASES:
            return Coxeter(ALIASES[k])
        if not (data_dir() / f"G{k}.json").exists():
            raise ValueError(f"no generator data for G{k}")
        return Exceptional(k)
    if head in ("A", "B", "D"):
        p.pos += 1
        rank = p.integer()
        p.done()
        return Coxeter(head, rank)
    if head == "I":
        p.pos += 1
        p.expect("2")
        p.expect("(")
        e = p.integer()
        p.expect(")")
        p.done()
        return Coxeter("I2", e)
    if head in ("H", "F", "E"):
        token = p.text[p.pos : p.pos + 2]
        if token in COXETER_FIXED:
            p.pos += 2
            p.done()
            return Coxeter(token)
        p.fail("unknown group token")
    p.fail("expected a group specification")


def build_group(spec: GroupSpec) -> ReflectionGroupData:
    if isinstance(spec, Series):
        return build_series(spec.m, spec.p, spec.r)
    if isinstance(spec, Exceptional):
        return load_generator_group(spec.render())
    if spec.kind in COXETER_FIXED:
        return build_coxeter(spec.kind)
    return build_coxeter(spec.kind, spec.rank)


def _factored_text(sign: int, factors, remainder) -> str:
    bits = []
    if sign < 0:
        bits.append("-")
    for root, mult in factors:
        if root == 0:
            base = "m"
        elif root > 0:
            base = f"(m-{root})"
        else:
            base = f"(m+{-root})"
        bits.append(base if mult == 1 else f"{base}^{mult}")
    if remainder.degree > 0:
        terms = []
        for k in range(remainder.degree, -1, -1):
            coef = remainder.coeffs[k] if k < len(remainder.coeffs) else 0
            if not coef:
                continue
            mono = "1" if k == 0 else ("m" if k == 1 else f"m^{k}")
            terms.append(f"{coef}*{mono}" if k else f"{coef}")
        bits.append("(" + "+".join(terms).replace("+-", "-") + ")")
    if not bits or bits == ["-"]:
        bits.append("1")
    return "".join(bits)


def _remainder_list(remainder) -> list:
    return [int(c) if c.denominator == 1 else str(c) for c in remainder.coeffs]


def cmd_discriminants(spec: GroupSpec, fmt: str) -> int:
    g = build_group(spec)
    lines = []
    for c in range(len(g.classes)):
        d = discriminant(g, c)
        if fmt == "json":
            lines.append(
                json.dumps(
                    {
                        "sign": d.sign,
                        "factors": [list(f) for f in d.factors],
                        "remainder": _remainder_list(d.remainder),
                    },
                    separators=(",", ":"),
                )
            )
        elif fmt == "csv":
            factors = ";".join(f"{root}:{mult}" for root, mult in d.factors)
            remainder = ";".join(str(x) for x in _remainder_list(d.remainder))
            lines.append(f"{c},{len(g.classes[c])},{d.sign},{factors},{remainder}")
        else:
            lines.append(
                f"class {c} (size {len(g.classes[c])}): "
                + _factored_text(d.sign, d.factors, d.remainder)
            )
    if fmt == "csv":
        lines.insert(0, "class,size,sign,factors,remainder")
    print("\n".join(lines))
    return 0


@dataclass
class CheckOutcome:
    name: str
    status: str  # pass | fail | skipped
    detail: str
    elapsed: float


@dataclass
class VerifyReport:
    group: GroupSpec
    checks: list[CheckOutcome]

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)


def _run_check(report: VerifyReport, name: str, fn) -> None:
    start = time.perf_counter()
    try:
        result = fn()
    except ValueError as exc:
        report.checks.append(
            CheckOutcome(name, "fail", str(exc), time.perf_counter() - start)
        )
        return
    elapsed = time.perf_counter() - start
    if result is None:
        report.checks.append(CheckOutcome(name, "skipped", "not applicable", elapsed))
    elif result:
        report.checks.append(CheckOutcome(name, "pass", "", elapsed))
    else:
        detail = getattr(result, "detail", None)
        report.checks.append(CheckOutcome(name, "fail", repr(detail or ""), elapsed))


def _first_admissible(bundle, c: int, start: int) -> Fraction:
    from .tensor import _excluded

    m0 = Fraction(start)
    while _excluded(bundle, c, m0):
        m0 += 1
    return m0


def _core_checks(report: VerifyReport, g: ReflectionGroupData, sample: Fraction | None) -> None:
    bundle = build_rep(g)
    if g.size <= SYMBOLIC_SIZE_LIMIT:
        _run_check(report, "integrability", lambda: check_integrability(bundle))
    else:
        m0 = sample if sample is not None else Fraction(7)
        _run_check(
            report, "integrability", lambda: check_integrability(bundle, m0)
        )
    _run_check(report, "equivariance", lambda: check_equivariance(bundle))
    for c in range(len(g.classes)):
        _run_check(report, f"T-scalar[{c}]", lambda c=c: check_T_scalar(bundle, c))
    for c in range(len(g.classes)):
        def disc_identity(c=c):
            d = discriminant(g, c)
            return d.poly() == char_poly(gram_matrix(g, c).a_matrix)

        _run_check(report, f"discriminant[{c}]", disc_identity)
    for c in range(len(g.classes)):
        _run_check(report, f"N(c)[{c}]", lambda c=c: check_n_c(g, c))


def _spectral_checks(report: VerifyReport, g: ReflectionGroupData, sample: Fraction | None) -> None:
    bundle = build_rep(g)
    m0 = sample if sample is not None else Fraction(5)
    for c, members in enumerate(g.classes):
        _run_check(
            report, f"spectrum[{c}]", lambda s=members[0]: spectrum_check(bundle, s, m0)
        )


def _tensor_checks(
    report: VerifyReport, g: ReflectionGroupData, sample: Fraction | None, force: bool
) -> None:
    bundle = build_rep(g)
    for c, members in enumerate(g.classes):
        name = f"ds-table[{c}]"
        if len(members) > _TENSOR_CLASS_LIMIT and not force:
            report.checks.append(
                CheckOutcome(name, "skipped", "class too large; pass --force", 0.0)
            )
        else:
            _run_check(report, name, lambda c=c, s=members[0]: ds_table_check(bundle, s, c))
        start = int(sample) if sample is not None else 7
        name = f"tensor-square[{c}]"
        if len(members) > _TENSOR_CLASS_LIMIT and not force:
            report.checks.append(
                CheckOutcome(name, "skipped", "class too large; pass --force", 0.0)
            )
        else:
            def squares(c=c):
                m0 = _first_admissible(bundle, c, start)
                return tensor_square_check(bundle, c, m0)["ok"]

            _run_check(report, name, squares)
        name = f"psu-membership[{c}]"
        if len(members) < 2:
            report.checks.append(CheckOutcome(name, "skipped", "singleton class", 0.0))
        elif len(members) > _TENSOR_CLASS_LIMIT and not force:
            report.checks.append(
                CheckOutcome(name, "skipped", "class too large; pass --force", 0.0)
            )
        else:
            def membership(c=c, members=members):
                m0 = Fraction(start)
                while m0 in _EXCLUDED_POINTS:
                    m0 += 1
                return psu_membership_check(bundle, c, members[0], members[1], m0)

            _run_check(report, name, membership)


def _parabolic_checks(report: VerifyReport, g: ReflectionGroupData) -> None:
    if g.size < 2:
        report.checks.append(
            CheckOutcome("parabolic-restriction", "skipped", "no proper seed", 0.0)
        )
        return
    bundle = build_rep(g)

    def restriction():
        try:
            return parabolic_restriction_check(bundle, [0, 1])
        except ValueError:
            return parabolic_restriction_check(bundle, [0])

    _run_check(report, "parabolic-restriction", restriction)


def _dihedral_checks(report: VerifyReport, spec: GroupSpec) -> None:
    e = None
    if isinstance(spec, Coxeter) and spec.kind == "I2" and spec.rank % 2 == 1:
        e = spec.rank
    if isinstance(spec, Coxeter) and spec.kind == "A" and spec.rank == 2:
        e = 3
    if isinstance(spec, Series) and spec.m == spec.p and spec.r == 2 and spec.m % 2:
        e = spec.m
    if e is None or e < 3:
        report.checks.append(
            CheckOutcome("dihedral-zero-point", "skipped", "not an odd dihedral group", 0.0)
        )
        return
    _run_check(report, "dihedral-zero-point", lambda: dihedral_m0_check(e))
    report.checks.append(
        CheckOutcome("dihedral-character-note", "pass", DIHEDRAL_CHARACTER_NOTE, 0.0)
    )


def _krammer_checks(report: VerifyReport, spec: GroupSpec) -> None:
    n = None
    if isinstance(spec, Coxeter) and spec.kind == "A":
        n = spec.rank + 1
    if isinstance(spec, Series) and (spec.m, spec.p) == (1, 1):
        n = spec.r
    if n is None or n < 2:
        report.checks.append(
            CheckOutcome("krammer-braid", "skipped", "not a type-A group", 0.0)
        )
        report.checks.append(
            CheckOutcome("krammer-cubic", "skipped", "not a type-A group", 0.0)
        )
        return
    model = build_krammer(n)
    _run_check(report, "krammer-braid", lambda: check_braid_relations(model))
    _run_check(report, "krammer-cubic", lambda: cubic_specialization_check(model))


SUITES = ("core", "spectral", "tensor", "parabolic", "dihedral", "krammer", "all")


def cmd_verify(spec: GroupSpec, suite: str, sample: Fraction | None, force: bool) -> int:
    report = VerifyReport(spec, [])
    wanted = SUITES[:-1] if suite == "all" else (suite,)
    g = build_group(spec)
    for name in wanted:
        if name == "core":
            _core_checks(report, g, sample)
        elif name == "spectral":
            _spectral_checks(report, g, sample)
        elif name == "tensor":
            _tensor_checks(report, g, sample, force)
        elif name == "parabolic":
            _parabolic_checks(report, g)
        elif name == "dihedral":
            _dihedral_checks(report, spec)
        elif name == "krammer":
            _krammer_checks(report, spec)
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names)), "duplicate check name"
    for c in report.checks:
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[c.status]
        detail = f"  {c.detail}" if c.detail else ""
        print(f"{tag} {c.name} ({c.elapsed:.3f}s){detail}")
    failed = sum(1 for c in report.checks if c.status == "fail")
    passed = sum(1 for c in report.checks if c.status == "pass")
    skipped = sum(1 for c in report.checks if c.status == "skipped")
    print(f"{spec.render()}: {passed} passed, {failed} failed, {skipped} skipped")
    return 1 if report.failed else 0


def _table_section(group: str) -> str:
    if group.startswith("G("):
        m, p, _ = (int(x) for x in group[2:-1].split(","))
        return "1" if m == p else "2"
    if group[0] in ("A", "B", "D") or group.startswith("I2("):
        return "prop81"
    return "1"


def cmd_tables(which: str, fixture_path: str | None) -> int:
    path = Path(fixture_path) if fixture_path else data_dir() / "tables.json"
    with open(path) as fh:
        rows = json.load(fh)
    selected: dict[str, list[dict]] = {}
    for row in rows:
        if _table_section(row["group"]) == which:
            selected.setdefault(row["group"], []).append(row)
    failures = 0
    skips = 0
    for group in selected:
        try:
            spec = parse_group(group)
            g = build_group(spec)
        except ValueError as exc:
            print(f"SKIP {group}: {exc}")
            skips += len(selected[group])
            continue
        computed = sorted(
            (
                len(g.classes[c]),
                d.sign,
                tuple(tuple(f) for f in d.factors),
                tuple(_remainder_list(d.remainder)),
            )
            for c in range(len(g.classes))
            for d in [discriminant(g, c)]
        )
        expected = sorted(
            (
                row["class_size"],
                row["sign"],
                tuple(tuple(f) for f in row["factors"]),
                (1,),
            )
            for row in selected[group]
        )
        if computed == expected:
            print(f"PASS {group}: {len(selected[group])} row(s)")
        else:
            failures += 1
            print(f"FAIL {group}: computed {computed} expected {expected}")
    total = sum(len(v) for v in selected.values())
    print(f"table {which}: {total} rows, {failures} group failures, {skips} rows skipped")
    return 1 if failures else 0


def cmd_conjecture(e_max: int, r_max: int) -> int:
    report = conjecture_scan(e_max, r_max)
    print(json.dumps(report, separators=(",", ":"), sort_keys=True))
    return 0


def cmd_list_groups() -> int:
    print("series: G(e,e,r) and G(2e,e,r)")
    print("coxeter: A<n> B<n> D<n> I2(e) " + " ".join(COXETER_FIXED))
    shipped = sorted(
        (p.stem for p in data_dir().glob("G*.json")),
        key=lambda s: int(s[1:]),
    )
    print("exceptional data: " + " ".join(shipped))
    print(
        "aliases: "
        + " ".join(f"G{k}={v}" for k, v in sorted(ALIASES.items()))
    )
    return 0


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crg")
    sub = parser.add_subparsers(dest="command", required=True)

    disc = sub.add_parser("discriminants", help="factored class discriminants")
    disc.add_argument("--group", required=True)
    disc.add_argument("--format", choices=("text", "json", "csv"), default="text")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--group", required=True)
    verify.add_argument("--suite", choices=SUITES, default="core")
    verify.add_argument("--m", dest="sample", default=None)
    verify.add_argument("--force", action="store_true")

    tables = sub.add_parser("tables", help="regression-check shipped table rows")
    tables.add_argument("--which", choices=("1", "2", "prop81"), required=True)
    tables.add_argument("--fixture", default=None)

    conj = sub.add_parser("conjecture", help="scan the odd-e discriminant formula")
    conj.add_argument("--e-max", type=int, default=9)
    conj.add_argument("--r-max", type=int, default=5)

    sub.add_parser("list-groups", help="supported group specifications")
    return parser


def main(argv=None) -> int:
    parser = _build_arg_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "discriminants":
            return cmd_discriminants(parse_group(args.group), args.format)
        if args.command == "verify":
            sample = Fraction(args.sample) if args.sample is not None else None
            return cmd_verify(parse_group(args.group), args.suite, sample, args.force)
        if args.command == "tables":
            return cmd_tables(args.which, args.fixture)
        if args.command == "conjecture":
            return cmd_conjecture(args.e_max, args.r_max)
        if args.command == "list-groups":
            return cmd_list_groups()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
