"""
Command-line entry point.

    asorbits canonicalize FILE
    asorbits poset --n N --format text|json|dot [--out PATH]
    asorbits verify --n N [--checks c1,c2,...] [--seed S] [--trials T] [--jobs J]
    asorbits rank --n N INVOLUTION

Exit codes: 0 success, 1 input or usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from pathlib import Path

from . import bruhat
from .canonical_form import (
    Involution, canonicalize, congruence, involution_to_monomial,
    random_borel, random_orbit_element,
)
from .exact_linalg import (
    ASMatrix, NotAntiSymmetricError, ParseError, det, format_matrix,
    parse_matrix, pfaffian,
)
from .involution_poset import (
    build_poset, canonic_word, check_graded, dim_by_A, dim_by_secfm,
    enumerate_involutions, fixed_point_sum, interval_violations, inversions,
    involution_rank_control, orbit_dimension_oracle,
)
from .rank_control import count_A, rank_control

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

CHECKS = ("grading", "dimension", "secfm", "bruhat", "invariance", "pfaffian", "intervals")
# largest n each check accepts; the Bruhat oracle stores n! bitmasks of n! bits
MAX_N = {"dimension": 6, "bruhat": 6}
EXHAUSTIVE_BRUHAT_N = 4
RANDOM_BRUHAT_PAIRS = 500
ENTRY_BOUND = 5
POSET_WARN_N = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _trial_seed(seed: int, index: int, trial: int) -> int:
    return (seed * 1_000_003 + index) * 1_009 + trial


def check_grading(n: int, seed: int, trials: int) -> CheckResult:
    poset = build_poset(n)
    bad = [(lo, hi) for lo, hi in poset.covers
           if poset.nodes[hi].rank != poset.nodes[lo].rank + 1]
    ok = check_graded(poset) and not bad
    detail = f"{len(poset.covers)} covers over {len(poset.nodes)} nodes, {len(bad)} violations"
    return CheckResult("grading", ok, detail)


def check_dimension(n: int, seed: int, trials: int) -> CheckResult:
    invs = enumerate_involutions(n)
    bad = [str(p) for p in invs if dim_by_A(p) != orbit_dimension_oracle(p)]
    return CheckResult("dimension", not bad,
                       f"{len(invs)} involutions vs tangent oracle, mismatches: {bad or 'none'}")


def check_secfm(n: int, seed: int, trials: int) -> CheckResult:
    invs = enumerate_involutions(n)
    bad = [str(p) for p in invs if dim_by_A(p) != dim_by_secfm(p)]
    return CheckResult("secfm", not bad,
                       f"{len(invs)} involutions, mismatches: {bad or 'none'}")


def check_bruhat(n: int, seed: int, trials: int) -> CheckResult:
    if n <= EXHAUSTIVE_BRUHAT_N:
        perms = [bruhat.Permutation(p) for p in permutations(range(1, n + 1))]
        pairs = [(a, b) for a in perms for b in perms]
        mode = "exhaustive"
    else:
        pairs = bruhat.random_pairs(n, RANDOM_BRUHAT_PAIRS, seed)
        mode = f"random (seed {seed})"
    disagree = sum(bruhat.bruhat_leq_rc(a, b) != bruhat.bruhat_leq_oracle(a, b)
                   for a, b in pairs)
    ok = not disagree
    detail = f"{len(pairs)} {mode} pairs, {disagree} disagreements"
    if n % 2 == 0:
        report = bruhat.compare_fpf_with_bruhat(n)
        ok = ok and report.ok
        detail += (f"; fixed-point-free vs reversed Bruhat: {report.checked_pairs} pairs, "
                   f"{len(report.violations)} violations")
    witness = bruhat.full_poset_not_bruhat_witness(n)
    if witness:
        detail += f"; full poset differs from Bruhat at {witness[0]} vs {witness[1]}"
    return CheckResult("bruhat", ok, detail)


def check_invariance(n: int, seed: int, trials: int) -> CheckResult:
    invs = enumerate_involutions(n)
    failures = 0
    for idx, p in enumerate(invs):
        rc = involution_rank_control(p)
        for t in range(trials):
            a = random_orbit_element(p, _trial_seed(seed, idx, t), ENTRY_BOUND)
            m, b = canonicalize(a)
            if (rank_control(a) != rc or m != involution_to_monomial(p)
                    or congruence(b, m.to_matrix()) != a.underlying):
                failures += 1
    return CheckResult("invariance", not failures,
                       f"{len(invs)} involutions x {trials} congruences, {failures} failures")


def check_pfaffian(n: int, seed: int, trials: int) -> CheckResult:
    fpf = [p for p in enumerate_involutions(n) if p.is_fixed_point_free()]
    failures = 0
    for idx, p in enumerate(fpf):
        mono = involution_to_monomial(p).to_matrix()
        for t in range(trials):
            b = random_borel(n, random.Random(_trial_seed(seed, idx, t)), ENTRY_BOUND)
            x = congruence(b, mono)
            pf = pfaffian(x)
            diag = _abs_prod(b.diagonal())
            _, wb = canonicalize(x)
            if abs(pf) != diag or pf * pf != det(x) or abs(pf) != _abs_prod(wb.diagonal()):
                failures += 1
    return CheckResult("pfaffian", not failures,
                       f"{len(fpf)} fixed-point-free involutions x {trials} Borel matrices, "
                       f"{failures} failures")


def check_intervals(n: int, seed: int, trials: int) -> CheckResult:
    bad = interval_violations(build_poset(n))
    detail = f"orbit poset non-intervals: {bad or 'none'}"
    if n <= MAX_N["bruhat"]:
        witnesses = bruhat.bruhat_interval_witnesses(n)
        detail += f"; Bruhat non-intervals (reported): {witnesses or 'none'}"
    return CheckResult("intervals", not bad, detail)


def _abs_prod(xs) -> Fraction:
    out = 1
    for x in xs:
        out *= abs(x)
    return out


_CHECK_FUNCS = {
    "grading": check_grading, "dimension": check_dimension, "secfm": check_secfm,
    "bruhat": check_bruhat, "invariance": check_invariance,
    "pfaffian": check_pfaffian, "intervals": check_intervals,
}


def _run_check(args: tuple[str, int, int, int]) -> CheckResult:
    name, n, seed, trials = args
    return _CHECK_FUNCS[name](n, seed, trials)


def cmd_canonicalize(ns: argparse.Namespace) -> int:
    try:
        m = parse_matrix(Path(ns.file).read_text())
    except OSError as e:
        raise UsageError(f"cannot read {ns.file}: {e.strerror}") from None
    try:
        a = ASMatrix.from_matrix(m)
    except NotAntiSymmetricError:
        bad = next((i, j) for i in range(m.n_rows) for j in range(m.n_cols)
                   if m[i, j] != -m[j, i])
        raise UsageError(f"matrix is not anti-symmetric at entry ({bad[0] + 1},{bad[1] + 1})") from None
    mono, b = canonicalize(a)
    p = Involution.from_cycles(mono.n, mono.pairs)
    print(f"involution: {p}")
    print("monomial form:")
    print(format_matrix(mono.to_matrix()))
    print("witness B (B^t M B = A):")
    print(format_matrix(b))
    print("rank-control matrix:")
    print(rank_control(a).to_text())
    return EXIT_OK


def cmd_poset(ns: argparse.Namespace) -> int:
    if ns.n < 1:
        raise UsageError("--n must be positive")
    if ns.n > POSET_WARN_N:
        print(f"warning: n={ns.n} is large; the poset may take a long time", file=sys.stderr)
    poset = build_poset(ns.n)
    if ns.format == "json":
        out = json.dumps(poset.to_json(), indent=2) + "\n"
    elif ns.format == "dot":
        out = poset.to_dot()
    else:
        out = poset.to_text()
    if ns.out:
        Path(ns.out).write_text(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_verify(ns: argparse.Namespace) -> int:
    if ns.n < 1:
        raise UsageError("--n must be positive")
    if ns.trials < 1:
        raise UsageError("--trials must be positive")
    checks = [c.strip() for c in ns.checks.split(",") if c.strip()] if ns.checks else list(CHECKS)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    for c in checks:
        if ns.n > MAX_N.get(c, ns.n):
            raise UsageError(f"check {c!r} supports n <= {MAX_N[c]}")
    jobs = [(c, ns.n, ns.seed, ns.trials) for c in checks]
    if ns.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=ns.jobs) as ex:
            results = list(ex.map(_run_check, jobs))
    else:
        results = [_run_check(j) for j in jobs]
    print(f"verify n={ns.n} seed={ns.seed} trials={ns.trials}")
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_rank(ns: argparse.Namespace) -> int:
    if ns.n < 1:
        raise UsageError("--n must be positive")
    p = Involution.parse(ns.involution, ns.n)
    a = count_A(involution_rank_control(p))
    inv = inversions(canonic_word(p))
    fps = fixed_point_sum(p)
    d1, d2 = dim_by_A(p), dim_by_secfm(p)
    print(f"involution: {p}")
    print(f"n: {p.n}")
    print(f"A: {a}")
    print(f"inversions: {inv}")
    print(f"fixed_point_sum: {fps}")
    print(f"dim_by_A: {d1}")
    print(f"dim_by_secfm: {d2}")
    if d1 != d2:
        print(f"error: formulas disagree ({d1} != {d2})", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="asorbits",
                     description="Borel congruence orbits of anti-symmetric matrices")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("canonicalize", help="reduce a matrix file to its orbit label")
    p.add_argument("file")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("poset", help="emit the orbit poset of S_n involutions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rank", help="orbit dimension of one involution by both formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("involution")
    p.set_defaults(func=cmd_rank)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        return ns.func(ns)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
