"""Thin command-line client for the unicas service.

Every subcommand builds an HTTP request and renders the JSON response.  By
default the requests run against an in-process instance of the service; pass
--url to target a running server instead.  Exit codes: 0 success, 1 a
verification reported failures, 2 usage errors.
"""

from __future__ import annotations

import asyncio
import csv
import io
import json
import sys

import click
import httpx


def _dispatch(url: str | None, method: str, path: str, payload: dict | None) -> httpx.Response:
    if url:
        with httpx.Client(base_url=url, timeout=300.0) as client:
            return client.request(method, path, json=payload)

    from .service.app import create_app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://unicas") as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _request(ctx: click.Context, method: str, path: str, payload: dict | None = None) -> dict:
    response = _dispatch(ctx.obj.get("url"), method, path, payload)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except Exception:
            detail = response.text
        raise click.UsageError(f"{path}: {detail}")
    return response.json()


def _emit_kv(data: dict, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for key, value in data.items():
            if value is None:
                continue
            writer.writerow([key, json.dumps(value) if isinstance(value, (dict, list)) else value])
        click.echo(buf.getvalue(), nl=False)
        return
    for key, value in data.items():
        if value is None:
            continue
        if isinstance(value, dict):
            click.echo(f"{key}:")
            for k, v in value.items():
                click.echo(f"  {k}: {v}")
        elif isinstance(value, list):
            click.echo(f"{key}: {', '.join(str(v) for v in value)}")
        else:
            click.echo(f"{key}: {value}")


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text"
)


@click.group()
@click.option("--url", default=None, help="Base URL of a running service (default: in-process).")
@click.version_option(package_name="unicas")
@click.pass_context
def main(ctx: click.Context, url: str | None):
    """Exact universal Casimir eigenvalues for simple Lie algebras."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@main.command()
@click.argument("table_id", type=int)
@_FORMAT
@click.pass_context
def tables(ctx, table_id: int, fmt: str):
    """Reproduce one of the reference tables (ids 1..6)."""
    if not 1 <= table_id <= 6:
        raise click.UsageError("table id must be between 1 and 6")
    data = _request(ctx, "GET", f"/tables/{table_id}")
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(data["columns"])
        writer.writerows(data["rows"])
        click.echo(buf.getvalue(), nl=False)
    else:
        widths = [len(c) for c in data["columns"]]
        for row in data["rows"]:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))
        click.echo(f"[table {data['table_id']}] {data['title']}")
        header = "  ".join(c.ljust(widths[i]) for i, c in enumerate(data["columns"]))
        click.echo(header)
        click.echo("-" * len(header))
        for row in data["rows"]:
            click.echo("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))


@main.command()
@click.argument(
    "suites",
    nargs=-1,
    type=click.Choice(["all", "casimir", "vogel", "deligne", "duality"]),
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--profiles", type=int, default=200, show_default=True)
@click.option("--order", type=int, default=6, show_default=True)
@click.option("--scope", default=None, help="Comma-separated families or algebra names.")
@_FORMAT
@click.pass_context
def verify(ctx, suites, seed, profiles, order, scope, fmt):
    """Run the exact cross-check matrix; exits 1 on any failure."""
    payload = {
        "suites": list(suites) or ["all"],
        "seed": seed,
        "profiles": profiles,
        "order": order,
        "scope": [s for s in scope.split(",") if s] if scope else None,
    }
    data = _request(ctx, "POST", "/verify", payload)
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check_id", "subject", "status", "expected", "actual", "reason"])
        for c in data["checks"]:
            writer.writerow(
                [c["check_id"], c["subject"], c["status"], c["expected"], c["actual"], c["reason"]]
            )
        click.echo(buf.getvalue(), nl=False)
    else:
        for c in data["checks"]:
            click.echo(json.dumps(c, sort_keys=True))
        s = data["summary"]
        click.echo(f"== {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped ==")
    if not data["passed"]:
        sys.exit(1)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        return [int(x) for x in body.split(",") if x.strip() != ""]
    except ValueError:
        raise click.UsageError(f"cannot parse {what} {text!r}")


@main.command()
@click.argument("algebra")
@click.option("--kn", default=None, help="Cartan powers 'k,n' of the X2/adjoint pair.")
@click.option("--weight", default=None, help="Fundamental-weight coordinates, e.g. '1,0,1'.")
@click.option("--diagram", default=None, help="Young diagram rows, e.g. '[3,1]'.")
@_FORMAT
@click.pass_context
def casimir(ctx, algebra, kn, weight, diagram, fmt):
    """Second Casimir eigenvalue of a representation, in all normalizations."""
    payload: dict = {"algebra": algebra}
    if kn is not None:
        values = _parse_int_list(kn, "--kn")
        if len(values) != 2:
            raise click.UsageError("--kn needs exactly two integers, e.g. '1,0'")
        payload["kn"] = values
    if weight is not None:
        payload["weight"] = _parse_int_list(weight, "--weight")
    if diagram is not None:
        payload["diagram"] = _parse_int_list(diagram, "--diagram")
    data = _request(ctx, "POST", "/casimir", payload)
    _emit_kv(data, fmt)


@main.command()
@click.argument("algebra", required=False)
@click.option("--point", default=None, help="Explicit plane point 'a,b,c' (exact rationals).")
@_FORMAT
@click.pass_context
def dims(ctx, algebra, point, fmt):
    """Universal dimension formulas and trace identities at a point."""
    payload: dict = {}
    if algebra:
        payload["algebra"] = algebra
    if point:
        payload["point"] = [x.strip() for x in point.split(",")]
    if not payload:
        raise click.UsageError("give an algebra name or --point a,b,c")
    data = _request(ctx, "POST", "/dims", payload)
    _emit_kv(data, fmt)


@main.command()
@click.option("--profiles", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--diagram", default=None, help="Check the full series duality of one diagram.")
@click.option("--order", type=int, default=6, show_default=True)
@click.option("--experimental", is_flag=True, help="Allow non-rectangular series checks.")
@_FORMAT
@click.pass_context
def duality(ctx, profiles, seed, diagram, order, experimental, fmt):
    """Rank-negation duality checks; exits 1 if any residual is nonzero."""
    payload: dict = {"profiles": profiles, "seed": seed, "order": order, "experimental": experimental}
    if diagram is not None:
        payload["diagram"] = _parse_int_list(diagram, "--diagram")
    data = _request(ctx, "POST", "/duality", payload)
    _emit_kv(data, fmt)
    if not data["all_zero"]:
        sys.exit(1)


@main.command()
@click.argument("family", type=click.Choice(["so", "sp"]))
@click.option("--diagram", required=True, help="Young diagram rows, e.g. '[2,1,1]'.")
@click.option("--order", type=int, default=6, show_default=True)
@_FORMAT
@click.pass_context
def series(ctx, family, diagram, order, fmt):
    """Casimir generating series of a diagram, raw and calibrated."""
    payload = {"family": family, "diagram": _parse_int_list(diagram, "--diagram"), "order": order}
    data = _request(ctx, "POST", "/series", payload)
    _emit_kv(data, fmt)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("unicas.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
