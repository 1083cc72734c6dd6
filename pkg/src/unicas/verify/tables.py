"""Reference tables, generated from first principles on every call.

Nothing here is a stored copy: every cell is computed through the root-data,
Vogel-plane or corner-coordinate machinery, so these renderings double as
end-to-end checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exact.polynomial import Polynomial
from ..ppduality import (
    YoungDiagram,
    ab_from_diagram,
    c2_closed,
    normalization_convert,
)
from ..rootdata import (
    AlgebraId,
    adjoint_weight,
    build_root_datum,
    casimir_poly_kn,
    x2_weight,
)
from ..vogel import (
    CDM_POWERS,
    VogelPoint,
    casimir_scaled,
    cohen_de_man_value,
    family_line,
    line_relation,
    universal_casimir_kn,
    vogel_params,
)

TABLE_IDS = (1, 2, 3, 4, 5, 6)

# exceptional algebras in the order used by the scaled-Casimir comparison
_CDM_ALGEBRAS = ("A1", "A2", "G2", "D4", "F4", "E6", "E7", "E8")

# classical families with the ranks at which the non-adjoint
# antisymmetric-square weight is available
FAMILY_RANK_SWEEP = {
    "A": (3, 4, 5, 6, 7),
    "B": (4, 5, 6, 7, 8),
    "C": (3, 4, 5, 6, 7),
    "D": (5, 6, 7, 8, 9),
}

_EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


@dataclass(frozen=True)
class Table:
    table_id: int
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def to_dict(self) -> dict:
        return {
            "table_id": self.table_id,
            "title": self.title,
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
        }


def _point_cells(p: VogelPoint) -> tuple[str, str, str, str]:
    return (str(p.alpha), str(p.beta), str(p.gamma), str(p.t))


def _table_1() -> Table:
    rows = []
    for family, line_name in (("A", "sl"), ("B", "so"), ("C", "sp"), ("D", "so")):
        symbolic = _family_point_symbolic(family)
        label = {"A": "A_n", "B": "B_n", "C": "C_n", "D": "D_n"}[family]
        algebra = {"A": "sl(n+1)", "B": "so(2n+1)", "C": "sp(2n)", "D": "so(2n)"}[family]
        rows.append((label, algebra) + _point_cells(symbolic))
    for name in _EXCEPTIONAL:
        alg = AlgebraId.parse(name)
        rows.append((name, alg.classical_name) + _point_cells(vogel_params(alg)))
    return Table(
        1,
        "Vogel parameters (alpha, beta, gamma, t) of the simple Lie algebras",
        ("root system", "algebra", "alpha", "beta", "gamma", "t"),
        tuple(rows),
    )


def _family_point_symbolic(family: str) -> VogelPoint:
    """Family parameters as polynomials in the rank symbol n."""
    n = Polynomial.var("n")
    if family == "A":
        return VogelPoint(-2, 2, n + 1)
    if family == "B":
        return VogelPoint(-2, 4, 2 * n - 3)
    if family == "C":
        return VogelPoint(-2, 1, n + 2)
    if family == "D":
        return VogelPoint(-2, 4, 2 * n - 4)
    raise ValueError(family)


def _table_2() -> Table:
    rows = []
    for name, label in (("sl", "sl(N)"), ("so", "so(N)"), ("sp", "sp(N)"), ("exc", "Exc(n)")):
        p = family_line(name)
        rows.append((label,) + _point_cells(p) + (line_relation(name),))
    return Table(
        2,
        "Vogel-plane family lines",
        ("family", "alpha", "beta", "gamma", "t", "line"),
        tuple(rows),
    )


def _weight_pattern(rank: int, coords: tuple[int, ...], relative: bool) -> str:
    """Render a weight, optionally naming the top nodes rank-relatively.

    The A family patterns move with the rank (w(n-1), wn); the tensor
    families pin to fixed low nodes, so their names stay absolute.
    """
    names = {i: f"w{i}" for i in range(1, rank + 1)}
    if relative:
        names[rank - 1] = "w(n-1)"
        names[rank] = "wn"
    parts = []
    for i, c in enumerate(coords, start=1):
        if not c:
            continue
        name = names[i]
        parts.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(parts) if parts else "0"


def _table_3() -> Table:
    rows = []
    for family in ("A", "B", "C", "D"):
        rank = FAMILY_RANK_SWEEP[family][0]
        alg = AlgebraId(family, rank)
        relative = family == "A"
        x2s = x2_weight(alg)
        x2_text = " (+) ".join(_weight_pattern(rank, w.coords, relative) for w in x2s)
        adj_text = _weight_pattern(rank, adjoint_weight(alg).coords, relative)
        label = f"{family}_n (n >= {rank})"
        rows.append((label, x2_text, adj_text))
    for name in _EXCEPTIONAL:
        alg = AlgebraId.parse(name)
        x2_text = " (+) ".join(str(w) for w in x2_weight(alg))
        rows.append((name, x2_text, str(adjoint_weight(alg))))
    return Table(
        3,
        "Highest weights of the antisymmetric-square component X2 and the adjoint",
        ("algebra", "X2 weight", "adjoint weight"),
        tuple(rows),
    )


def family_casimir_polynomial(family: str) -> Polynomial:
    """Casimir of the (k, n) Cartan-power pair with the rank symbolic (N).

    Built by evaluating the exact per-rank polynomial at the family's rank
    sweep and interpolating each (k, n) coefficient linearly in N; the last
    three ranks verify that linear dependence.
    """
    ranks = FAMILY_RANK_SWEEP[family]
    per_rank = []
    for rank in ranks:
        alg = AlgebraId(family, rank)
        datum = build_root_datum(alg)
        polys = [
            casimir_poly_kn(datum, w, adjoint_weight(alg)) for w in x2_weight(alg)
        ]
        for p in polys[1:]:
            if p != polys[0]:
                raise AssertionError(f"{alg}: the two square-component weights disagree")
        per_rank.append(polys[0])
    monomials = {mono for poly in per_rank for mono in poly.terms}
    big_n = Polynomial.var("N")
    result = Polynomial.zero()
    for mono in sorted(monomials):
        values = [poly.terms.get(mono, Fraction(0)) for poly in per_rank]
        slope = (values[1] - values[0]) / Fraction(ranks[1] - ranks[0])
        intercept = values[0] - slope * ranks[0]
        for rank, value in zip(ranks, values):
            if intercept + slope * rank != value:
                raise AssertionError(
                    f"coefficient of {mono} is not linear in the rank for family {family}"
                )
        coeff_poly = big_n * slope + intercept
        result = result + coeff_poly * Polynomial({mono: Fraction(1)})
    return result


def universal_casimir_form() -> Polynomial:
    """The universal Casimir in plane coordinates, symbolic in k and n."""
    point = VogelPoint(
        Polynomial.var("alpha"), Polynomial.var("beta"), Polynomial.var("gamma")
    )
    return universal_casimir_kn(point, Polynomial.var("k"), Polynomial.var("n"))


def _table_4() -> Table:
    rows = []
    for family in ("A", "B", "C", "D"):
        label = f"{family}_N (N in {list(FAMILY_RANK_SWEEP[family])})"
        rows.append((label, str(family_casimir_polynomial(family))))
    for name in _EXCEPTIONAL:
        alg = AlgebraId.parse(name)
        datum = build_root_datum(alg)
        poly = casimir_poly_kn(datum, x2_weight(alg)[0], adjoint_weight(alg))
        rows.append((name, str(poly)))
    rows.append(("universal", str(universal_casimir_form())))
    return Table(
        4,
        "Casimir eigenvalues on the (k, n) Cartan-power pair",
        ("algebra", "C(k, n)"),
        tuple(rows),
    )


def _table_5() -> Table:
    rows = []
    for name in _CDM_ALGEBRAS:
        alg = AlgebraId.parse(name)
        p = vogel_params(alg)
        a = 1 / p.t
        cells = [name, str(a)]
        for label in ("H", "C", "G"):
            cells.append(str(cohen_de_man_value(label, a)))
        cells.append(str(p.t))
        for label in ("H", "C", "G"):
            k, n = CDM_POWERS[label]
            cells.append(str(casimir_scaled(p, k, n)))
        rows.append(tuple(cells))
    return Table(
        5,
        "Scaled Casimir values: published linear forms in a = 1/t vs the universal formula",
        (
            "algebra",
            "a",
            "gamma(H) = 4+6a",
            "gamma(C) = 3+3a",
            "gamma(G) = 4+8a",
            "t",
            "C(2,0)",
            "C(1,1)",
            "C(1,2)",
        ),
        tuple(rows),
    )


def _table_6() -> Table:
    rows = []
    for family, diagram in (("so", YoungDiagram((2, 1, 1))), ("sp", YoungDiagram((3, 1)))):
        profile = ab_from_diagram(diagram)
        raw = c2_closed(family, profile)
        converted = normalization_convert(family, raw, "fund_to_ck")
        rows.append(
            (f"{family}(2n)", str(diagram), str(profile), str(raw), str(converted))
        )
    return Table(
        6,
        "Second Casimir of the so/sp antisymmetric-square diagrams in corner coordinates",
        ("algebra", "diagram", "profile", "C2(A,B)", "C2"),
        tuple(rows),
    )


_BUILDERS = {1: _table_1, 2: _table_2, 3: _table_3, 4: _table_4, 5: _table_5, 6: _table_6}


def build_table(table_id: int) -> Table:
    if table_id not in _BUILDERS:
        raise ValueError(f"unknown table id {table_id}; valid ids are 1..6")
    return _BUILDERS[table_id]()


def render_text(table: Table) -> str:
    widths = [len(c) for c in table.columns]
    for row in table.rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [f"[table {table.table_id}] {table.title}"]
    header = "  ".join(c.ljust(widths[i]) for i, c in enumerate(table.columns))
    lines.append(header)
    lines.append("-" * len(header))
    for row in table.rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)


def render_csv(table: Table) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    writer.writerows(table.rows)
    return buf.getvalue()
