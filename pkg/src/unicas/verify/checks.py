"""The cross-check matrix: every identity the library asserts, run as data.

Each check produces an expected and an actual string; a check passes exactly
when the strings are identical.  All arithmetic is exact, so there are no
tolerances anywhere, and a report for a given seed is byte-reproducible.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .. import __version__
from ..exact.polynomial import Polynomial
from ..ppduality import (
    ABProfile,
    YoungDiagram,
    ab_from_diagram,
    c2_closed,
    duality_check_c2,
    duality_check_series,
    normalization_convert,
    pp_series,
    random_profiles,
)
from ..rootdata import (
    AlgebraId,
    adjoint_weight,
    build_root_datum,
    casimir2,
    casimir_poly_kn,
    weight_from_partition,
    weyl_dim,
    x2_weight,
)
from ..vogel import (
    SLOTS,
    VogelPoint,
    casimir_scaled,
    cohen_de_man_value,
    deligne_lambda2_check,
    deligne_s2_check,
    dim_adjoint_universal,
    dim_y2_universal,
    symbolic_point,
    universal_casimir_kn,
    vogel_params,
)
from .tables import FAMILY_RANK_SWEEP, TABLE_IDS, build_table, family_casimir_polynomial

SUITES = ("casimir", "vogel", "deligne", "duality")

_EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

# representative concrete points, one per parameter-table row
_NINE_POINTS = ("A4", "B4", "C4", "D5", "G2", "F4", "E6", "E7", "E8")

_CDM_ALGEBRAS = ("A1", "A2", "G2", "D4", "F4", "E6", "E7", "E8")

_CN_EXCEPTION_REASON = (
    "the direct X2-power coefficient for the C family is 5*k^2 while the "
    "universal form gives 6*k^2; they agree only at k <= 1"
)


class SkipCheck(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    subject: str
    run: Callable[[], tuple[str, str]]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    subject: str
    status: str  # pass | fail | skipped
    expected: str
    actual: str
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "subject": self.subject,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "reason": self.reason,
        }


@dataclass
class Report:
    version: str
    suites: tuple[str, ...]
    seed: int
    profiles: int
    order: int
    results: list[CheckResult] = field(default_factory=list)
    tables: list[dict] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return self.counts["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "suites": list(self.suites),
            "seed": self.seed,
            "profiles": self.profiles,
            "order": self.order,
            "summary": self.counts,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
            "tables": self.tables,
        }

    def summary_line(self) -> str:
        c = self.counts
        return f"== {c['pass']} pass, {c['fail']} fail, {c['skipped']} skipped =="


def _sweep_algebras(scope: Sequence[str] | None) -> list[AlgebraId]:
    algebras: list[AlgebraId] = []
    for family, ranks in FAMILY_RANK_SWEEP.items():
        algebras.extend(AlgebraId(family, r) for r in ranks)
    algebras.extend(AlgebraId.parse(name) for name in _EXCEPTIONAL)
    if scope is None:
        return algebras
    wanted = {s.strip().upper() for s in scope}
    return [a for a in algebras if a.family in wanted or a.name.upper() in wanted]


# -- casimir suite -----------------------------------------------------------


def _casimir_suite(scope) -> list[CheckSpec]:
    checks: list[CheckSpec] = []
    for alg in _sweep_algebras(scope):
        t = vogel_params(alg).t

        def x2_runner(alg=alg, t=t):
            datum = build_root_datum(alg)
            values = sorted({str(casimir2(datum, w)) for w in x2_weight(alg)})
            return str(4 * t), "|".join(values)

        checks.append(CheckSpec(f"casimir/x2-4t/{alg.name}", alg.name, x2_runner))

        def adjoint_runner(alg=alg, t=t):
            datum = build_root_datum(alg)
            return str(2 * t), str(casimir2(datum, adjoint_weight(alg)))

        checks.append(CheckSpec(f"casimir/adjoint-2t/{alg.name}", alg.name, adjoint_runner))
    return checks


# -- vogel suite --------------------------------------------------------------


def _expected_table4_row(family: str) -> Polynomial:
    """The direct Casimir rows for the classical families."""
    k, n, N = Polynomial.var("k"), Polynomial.var("n"), Polynomial.var("N")
    if family == "A":
        return 6 * k**2 + k * (4 * N - 2) + 2 * n * (n + N) + 6 * k * n
    if family == "B":
        return 6 * k**2 + k * (8 * N - 10) + 2 * n * (n + 2 * N - 2) + 6 * k * n
    if family == "C":
        return 5 * k**2 + k * (4 * N - 1) + 2 * n * (n + N) + 6 * k * n
    if family == "D":
        return 6 * k**2 + k * (8 * N - 14) + 2 * n * (n + 2 * N - 3) + 6 * k * n
    raise ValueError(family)


def _symbolic_family_point(family: str) -> VogelPoint:
    N = Polynomial.var("N")
    return {
        "A": VogelPoint(-2, 2, N + 1),
        "B": VogelPoint(-2, 4, 2 * N - 3),
        "C": VogelPoint(-2, 1, N + 2),
        "D": VogelPoint(-2, 4, 2 * N - 4),
    }[family]


def _vogel_suite(scope) -> list[CheckSpec]:
    checks: list[CheckSpec] = []

    # scaled-Casimir conformity, both column groups computed independently
    for name in _CDM_ALGEBRAS:
        for label, (k, n) in (("H", (2, 0)), ("C", (1, 1)), ("G", (1, 2))):

            def runner(name=name, label=label, k=k, n=n):
                p = vogel_params(AlgebraId.parse(name))
                return (
                    str(cohen_de_man_value(label, 1 / p.t)),
                    str(casimir_scaled(p, k, n)),
                )

            checks.append(
                CheckSpec(f"vogel/scaled/{name}/{label}", f"{name} ({k},{n})", runner)
            )

    # dimension identities
    for name in _NINE_POINTS + ("A2",):

        def dim_runner(name=name):
            alg = AlgebraId.parse(name)
            p = vogel_params(alg)
            return (
                str(weyl_dim(build_root_datum(alg), adjoint_weight(alg))),
                str(dim_adjoint_universal(p)),
            )

        checks.append(CheckSpec(f"vogel/dim-adjoint/{name}", name, dim_runner))

        def s2_runner(name=name):
            p = vogel_params(AlgebraId.parse(name))
            d = dim_adjoint_universal(p)
            total = 1 + sum(dim_y2_universal(p, s) for s in SLOTS)
            return str(d * (d + 1) / 2), str(total)

        checks.append(CheckSpec(f"vogel/dim-s2-sum/{name}", name, s2_runner))

    def y2_zero_runner():
        p = vogel_params(AlgebraId("A", 2))
        return "0", str(dim_y2_universal(p, "beta"))

    checks.append(CheckSpec("vogel/dim-y2-beta-zero/A2", "A2", y2_zero_runner))

    # direct rows vs the universal form, fully symbolic in (k, n, N)
    for family in ("A", "B", "C", "D"):

        def row_runner(family=family):
            return (
                str(_expected_table4_row(family)),
                str(family_casimir_polynomial(family)),
            )

        checks.append(CheckSpec(f"vogel/table4-row/{family}", f"{family}_N", row_runner))

        def universal_runner(family=family):
            if family == "C":
                raise SkipCheck(_CN_EXCEPTION_REASON)
            point = _symbolic_family_point(family)
            universal = universal_casimir_kn(point, Polynomial.var("k"), Polynomial.var("n"))
            return str(universal), str(family_casimir_polynomial(family))

        checks.append(
            CheckSpec(
                f"vogel/universal-vs-direct/{family}", f"{family}_N symbolic", universal_runner
            )
        )

    def cn_margin_runner():
        point = _symbolic_family_point("C")
        k = Polynomial.var("k")
        universal = universal_casimir_kn(point, k, Polynomial.var("n"))
        margin = universal - family_casimir_polynomial("C")
        return str(k**2 - k), str(margin)

    checks.append(CheckSpec("vogel/cn-exception-margin", "C_N", cn_margin_runner))

    for name in _EXCEPTIONAL:

        def exc_runner(name=name):
            alg = AlgebraId.parse(name)
            datum = build_root_datum(alg)
            direct = casimir_poly_kn(datum, x2_weight(alg)[0], adjoint_weight(alg))
            universal = universal_casimir_kn(
                vogel_params(alg), Polynomial.var("k"), Polynomial.var("n")
            )
            return str(universal), str(direct)

        checks.append(CheckSpec(f"vogel/universal-vs-direct/{name}", name, exc_runner))

    # grid agreement against the root-data oracle
    for alg in _sweep_algebras(scope):

        def grid_runner(alg=alg):
            datum = build_root_datum(alg)
            point = vogel_params(alg)
            poly = casimir_poly_kn(datum, x2_weight(alg)[0], adjoint_weight(alg))
            k_max = 1 if alg.family == "C" else 4
            mismatches = 0
            total = 0
            for k in range(k_max + 1):
                for n in range(5):
                    total += 1
                    if poly.evaluate({"k": k, "n": n}) != universal_casimir_kn(point, k, n):
                        mismatches += 1
            return f"0/{total} mismatches", f"{mismatches}/{total} mismatches"

        checks.append(CheckSpec(f"vogel/universal-grid/{alg.name}", alg.name, grid_runner))
        if alg.family == "C":

            def cn_skip_runner():
                raise SkipCheck(_CN_EXCEPTION_REASON)

            checks.append(
                CheckSpec(
                    f"vogel/universal-grid-k2plus/{alg.name}", alg.name, cn_skip_runner
                )
            )
    return checks


# -- deligne suite -------------------------------------------------------------


def _deligne_suite(scope) -> list[CheckSpec]:
    checks: list[CheckSpec] = []
    for name in _NINE_POINTS + ("A2",):

        def s2_runner(name=name):
            return "0", str(deligne_s2_check(vogel_params(AlgebraId.parse(name))))

        checks.append(CheckSpec(f"deligne/s2/{name}", name, s2_runner))

        def l2_runner(name=name):
            return "0", str(deligne_lambda2_check(vogel_params(AlgebraId.parse(name))))

        checks.append(CheckSpec(f"deligne/lambda2/{name}", name, l2_runner))

    def s2_symbolic():
        residual = deligne_s2_check(symbolic_point())
        return "0", "0" if residual.is_zero else str(residual.num)

    checks.append(CheckSpec("deligne/s2-symbolic", "generic (alpha,beta,gamma)", s2_symbolic))

    def l2_symbolic():
        residual = deligne_lambda2_check(symbolic_point())
        return "0", "0" if residual.is_zero else str(residual.num)

    checks.append(
        CheckSpec("deligne/lambda2-symbolic", "generic (alpha,beta,gamma)", l2_symbolic)
    )

    off_plane = (
        VogelPoint(Fraction(3, 7), Fraction(-5, 2), Fraction(11, 3)),
        VogelPoint(Fraction(-2), Fraction(9, 4), Fraction(13, 5)),
    )
    for i, point in enumerate(off_plane):

        def off_runner(point=point):
            return "0", str(deligne_s2_check(point))

        checks.append(CheckSpec(f"deligne/s2-offplane/{i}", str(point), off_runner))
    return checks


# -- duality suite --------------------------------------------------------------


def _duality_suite(scope, seed: int, profiles: int, order: int) -> list[CheckSpec]:
    checks: list[CheckSpec] = []

    table6 = (
        ("so", YoungDiagram((2, 1, 1)), "16*n - 16", "8*n - 8"),
        ("sp", YoungDiagram((3, 1)), "16*n + 16", "4*n + 4"),
    )
    for family, diagram, raw_text, converted_text in table6:

        def closed_runner(family=family, diagram=diagram, raw_text=raw_text):
            return raw_text, str(c2_closed(family, ab_from_diagram(diagram)))

        checks.append(
            CheckSpec(f"duality/table6-closed/{family}-{diagram}", str(diagram), closed_runner)
        )

        def series_runner(family=family, diagram=diagram):
            profile = ab_from_diagram(diagram)
            return str(c2_closed(family, profile)), str(pp_series(family, profile, 4).c2)

        checks.append(
            CheckSpec(f"duality/table6-series/{family}-{diagram}", str(diagram), series_runner)
        )

        def convert_runner(family=family, diagram=diagram, converted_text=converted_text):
            raw = c2_closed(family, ab_from_diagram(diagram))
            return converted_text, str(normalization_convert(family, raw, "fund_to_ck"))

        checks.append(
            CheckSpec(
                f"duality/table6-normalized/{family}-{diagram}", str(diagram), convert_runner
            )
        )

    # the rectangular family (2k, k, k) and its conjugate, symbolically in k
    k = Polynomial.var("k")
    n = Polynomial.var("n")
    family_profile = ABProfile((1, 3), (k, 2 * k))
    symbolic_cases = (
        ("so-raw", lambda: (str(12 * k**2 + k * (16 * n - 28)), str(c2_closed("so", family_profile)))),
        (
            "sp-swapped-raw",
            lambda: (
                str(-12 * k**2 + k * (16 * n + 28)),
                str(c2_closed("sp", family_profile.swap())),
            ),
        ),
        (
            "residual",
            lambda: ("0", str(duality_check_c2(family_profile))),
        ),
        (
            "so-ck",
            lambda: (
                str(6 * k**2 + k * (8 * n - 14)),
                str(normalization_convert("so", c2_closed("so", family_profile), "fund_to_ck")),
            ),
        ),
        (
            "sp-ck",
            lambda: (
                str(-3 * k**2 + k * (4 * n + 7)),
                str(
                    normalization_convert(
                        "sp", c2_closed("sp", family_profile.swap()), "fund_to_ck"
                    )
                ),
            ),
        ),
        (
            "minus-two-relation",
            lambda: (
                str(normalization_convert("so", c2_closed("so", family_profile), "fund_to_ck")),
                str(
                    -2
                    * normalization_convert(
                        "sp", c2_closed("sp", family_profile.swap()), "fund_to_ck"
                    ).substitute({"n": -n})
                ),
            ),
        ),
    )
    for label, runner in symbolic_cases:
        checks.append(CheckSpec(f"duality/symbolic-family/{label}", "(2k,k,k)", runner))

    for idx, profile in enumerate(random_profiles(profiles, seed)):

        def profile_runner(profile=profile):
            return "0", str(duality_check_c2(profile))

        checks.append(
            CheckSpec(f"duality/profile/{idx:04d}", str(profile), profile_runner)
        )

        def series_vs_closed_runner(profile=profile):
            return str(c2_closed("so", profile)), str(pp_series("so", profile, 3).c2)

        # series/closed-form agreement piggybacks on the same sample
        if idx % 20 == 0:
            checks.append(
                CheckSpec(
                    f"duality/profile-series/{idx:04d}", str(profile), series_vs_closed_runner
                )
            )

    for rows in range(1, 5):
        for cols in range(1, 5):
            diagram = YoungDiagram((cols,) * rows)

            def rect_runner(diagram=diagram):
                residuals = duality_check_series(diagram, order)
                nonzero = [p for p, r in residuals.items() if not r.is_zero]
                return "all residuals 0", (
                    "all residuals 0" if not nonzero else f"nonzero at orders {nonzero}"
                )

            checks.append(
                CheckSpec(f"duality/series-rect/{rows}x{cols}", str(diagram), rect_runner)
            )

    def nonrect_c2_runner():
        residuals = duality_check_series(YoungDiagram((2, 1, 1)), 3, experimental=True)
        return "0", str(residuals[2])

    checks.append(
        CheckSpec("duality/series-nonrect-c2/[2,1,1]", "[2,1,1]", nonrect_c2_runner)
    )

    # triangulation against the root-data eigenvalues
    for family, algebras in (("so", ("D5", "D6", "D7")), ("sp", ("C3", "C4", "C5"))):
        for name in algebras:

            def tri_runner(family=family, name=name):
                alg = AlgebraId.parse(name)
                datum = build_root_datum(alg)
                mismatches = 0
                total = 0
                for rows in _box_partitions(alg.rank - 2, 4):
                    diagram = YoungDiagram(rows)
                    value = c2_closed(family, ab_from_diagram(diagram)).evaluate(
                        {"n": alg.rank}
                    ) / (2 if family == "so" else 4)
                    oracle = casimir2(datum, weight_from_partition(alg, rows))
                    total += 1
                    if value != oracle:
                        mismatches += 1
                return f"0/{total} mismatches", f"{mismatches}/{total} mismatches"

            checks.append(
                CheckSpec(
                    f"duality/triangulation/{family}-{name}",
                    f"{name} tensor diagrams",
                    tri_runner,
                )
            )
    return checks


def _box_partitions(max_rows: int, max_cols: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cap: int):
        if len(prefix) == max_rows:
            return
        for length in range(min(cap, max_cols), 0, -1):
            out.append(tuple(prefix + [length]))
            rec(prefix + [length], length)

    rec([], max_cols)
    return out


# -- runner --------------------------------------------------------------------


def build_checks(
    suites: Iterable[str],
    seed: int = 0,
    profiles: int = 200,
    order: int = 6,
    scope: Sequence[str] | None = None,
) -> tuple[tuple[str, ...], list[CheckSpec]]:
    requested: list[str] = []
    for name in suites:
        if name == "all":
            requested.extend(SUITES)
        elif name in SUITES:
            requested.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {('all',) + SUITES}")
    seen = tuple(dict.fromkeys(requested))
    checks: list[CheckSpec] = []
    for name in seen:
        if name == "casimir":
            checks.extend(_casimir_suite(scope))
        elif name == "vogel":
            checks.extend(_vogel_suite(scope))
        elif name == "deligne":
            checks.extend(_deligne_suite(scope))
        elif name == "duality":
            checks.extend(_duality_suite(scope, seed, profiles, order))
    return seen, checks


def run_checks(checks: Sequence[CheckSpec], max_workers: int = 8) -> list[CheckResult]:
    """Run checks on a bounded pool; results merge in check_id order."""

    def run_one(spec: CheckSpec) -> CheckResult:
        try:
            expected, actual = spec.run()
        except SkipCheck as skip:
            return CheckResult(spec.check_id, spec.subject, "skipped", "", "", skip.reason)
        except Exception as exc:  # a crash is a failing check, not a crash of the run
            return CheckResult(
                spec.check_id, spec.subject, "fail", "", f"error: {exc!r}"
            )
        status = "pass" if expected == actual else "fail"
        return CheckResult(spec.check_id, spec.subject, status, expected, actual)

    workers = max(1, min(max_workers, len(checks) or 1))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run_one, checks))
    return sorted(results, key=lambda r: r.check_id)


def verify(
    suites: Iterable[str] = ("all",),
    seed: int = 0,
    profiles: int = 200,
    order: int = 6,
    scope: Sequence[str] | None = None,
) -> Report:
    names, checks = build_checks(suites, seed=seed, profiles=profiles, order=order, scope=scope)
    report = Report(
        version=__version__, suites=names, seed=seed, profiles=profiles, order=order
    )
    report.results = run_checks(checks)
    report.tables = [build_table(i).to_dict() for i in TABLE_IDS]
    return report
