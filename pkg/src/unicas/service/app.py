"""HTTP service exposing the exact-arithmetic library.

Every computation is pure and deterministic, so the service is stateless;
domain errors (bad algebra names, non-dominant weights, poles) surface as
HTTP 400 with the exception message.
"""

from __future__ import annotations


from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..exact.rational import parse_rational
from ..ppduality import (
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
    Weight,
    adjoint_weight,
    build_root_datum,
    casimir2,
    combine_weights,
    weight_from_partition,
    weyl_dim,
    x2_weight,
)
from ..vogel import (
    SLOTS,
    VogelPoint,
    deligne_lambda2_check,
    deligne_s2_check,
    dim_adjoint_universal,
    dim_y2_universal,
    universal_casimir_kn,
    vogel_params,
)
from ..verify import build_table, verify
from . import models

# families whose fundamental-trace normalization factor is pinned here
_TRACE_FACTOR_FAMILY = {"D": "so", "C": "sp"}


def create_app() -> FastAPI:
    app = FastAPI(
        title="unicas",
        version=__version__,
        description="Exact universal Casimir eigenvalues for simple Lie algebras.",
    )

    @app.exception_handler(ValueError)
    async def value_error_handler(_: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(ZeroDivisionError)
    async def pole_handler(_: Request, exc: ZeroDivisionError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=models.HealthResponse)
    def health():
        return models.HealthResponse(status="ok", version=__version__)

    @app.get("/tables/{table_id}", response_model=models.TableResponse)
    def table(table_id: int):
        return models.TableResponse(**build_table(table_id).to_dict())

    @app.post("/verify", response_model=models.VerifyResponse)
    def run_verify(req: models.VerifyRequest):
        report = verify(
            suites=req.suites,
            seed=req.seed,
            profiles=req.profiles,
            order=req.order,
            scope=req.scope,
        )
        return models.VerifyResponse(**report.to_dict())

    @app.post("/casimir", response_model=models.CasimirResponse)
    def casimir(req: models.CasimirRequest):
        algebra = AlgebraId.parse(req.algebra)
        datum = build_root_datum(algebra)
        universal_text = None
        matches = None
        if req.kn is not None:
            k, n = req.kn
            if k and not algebra.x2_supported:
                raise ValueError(
                    f"{algebra} has no supported antisymmetric-square weight; k must be 0"
                )
            adjoint = adjoint_weight(algebra)
            if k:
                weights = [combine_weights(k, w, n, adjoint) for w in x2_weight(algebra)]
            else:
                weights = [combine_weights(0, adjoint, n, adjoint)]
            values = {casimir2(datum, w) for w in weights}
            if len(values) != 1:
                raise AssertionError("square-component weights disagree")
            value = values.pop()
            weight = weights[0]
            universal = universal_casimir_kn(vogel_params(algebra), k, n)
            universal_text = str(universal)
            matches = universal == value
        elif req.weight is not None:
            weight = Weight(algebra, tuple(req.weight))
            value = casimir2(datum, weight)
        else:
            weight = weight_from_partition(algebra, tuple(req.diagram))
            value = casimir2(datum, weight)
        t = vogel_params(algebra).t
        trace_family = _TRACE_FACTOR_FAMILY.get(algebra.family)
        trace_text = (
            str(normalization_convert(trace_family, value, "ck_to_fund"))
            if trace_family
            else None
        )
        return models.CasimirResponse(
            algebra=algebra.name,
            classical_name=algebra.classical_name,
            weight=str(weight),
            casimir_ck=str(value),
            casimir_fundamental_trace=trace_text,
            casimir_scaled=str(value / (2 * t)),
            universal_ck=universal_text,
            matches_universal=matches,
        )

    @app.post("/dims", response_model=models.DimsResponse)
    def dims(req: models.DimsRequest):
        weyl_text = None
        if req.algebra is not None:
            algebra = AlgebraId.parse(req.algebra)
            point = vogel_params(algebra)
            weyl_text = str(weyl_dim(build_root_datum(algebra), adjoint_weight(algebra)))
        else:
            point = VogelPoint(*(parse_rational(x) for x in req.point))
        d = dim_adjoint_universal(point)
        y2 = {slot: dim_y2_universal(point, slot) for slot in SLOTS}
        return models.DimsResponse(
            point=point.to_dict(),
            dim_adjoint_universal=str(d),
            dim_adjoint_weyl=weyl_text,
            dim_y2={s: str(v) for s, v in y2.items()},
            symmetric_square_dimension=str(d * (d + 1) / 2),
            symmetric_square_sum=str(1 + sum(y2.values())),
            s2_trace_residual=str(deligne_s2_check(point)),
            lambda2_trace_residual=str(deligne_lambda2_check(point)),
        )

    @app.post("/duality", response_model=models.DualityResponse)
    def duality(req: models.DualityRequest):
        if req.diagram is not None:
            diagram = YoungDiagram(tuple(req.diagram))
            residuals = duality_check_series(diagram, req.order, experimental=req.experimental)
            text = {str(p): str(r) for p, r in residuals.items()}
            nonzero = [f"order {p}" for p, r in residuals.items() if not r.is_zero]
            return models.DualityResponse(
                mode="series", all_zero=not nonzero, failures=nonzero, residuals=text
            )
        failures = []
        for idx, profile in enumerate(random_profiles(req.profiles, req.seed)):
            residual = duality_check_c2(profile)
            if not residual.is_zero:
                failures.append(f"{idx:04d} {profile}: {residual}")
        return models.DualityResponse(
            mode="profiles",
            all_zero=not failures,
            profiles_checked=req.profiles,
            failures=failures,
        )

    @app.post("/series", response_model=models.SeriesResponse)
    def series(req: models.SeriesRequest):
        diagram = YoungDiagram(tuple(req.diagram))
        profile = ab_from_diagram(diagram)
        spectrum = pp_series(req.family, profile, req.order)
        raw = {
            str(p): str(spectrum.series.coefficient(p))
            for p in range(spectrum.series.min_degree, req.order + 1)
        }
        calibrated = {str(p): str(spectrum.calibrated(p)) for p in range(1, req.order + 1)}
        closed = c2_closed(req.family, profile)
        return models.SeriesResponse(
            family=req.family,
            diagram=str(diagram),
            profile=str(profile),
            min_degree=spectrum.series.min_degree,
            truncation_order=req.order,
            raw_coefficients=raw,
            calibrated_coefficients=calibrated,
            c2_series=str(spectrum.c2),
            c2_closed=str(closed),
            c2_ck=str(normalization_convert(req.family, closed, "fund_to_ck")),
        )

    return app


app = create_app()
