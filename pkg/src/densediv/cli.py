"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 resource limit, 4 verification failure.
All output is deterministic: identical configuration gives identical bytes.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import families, gzero, reference, rho
from ._constants import EULER_GAMMA
from .errors import DenseDivError, ResourceLimitError
from .families import FamilySpec
from .integers import factorize

EXIT_RESOURCE = 3
EXIT_VERIFY = 4


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, rationals parsed exactly from 'p/q' or decimal strings."""

    command: str
    family: str | None = None
    y: Fraction | None = None
    i: int | None = None
    a: Fraction | None = None
    beta: Fraction | None = None
    x: int | None = None
    squarefree: bool = False
    fmt: str = "plain"


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(f"not a rational: {text}") from exc


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        return _fraction(str(value))


RATIONAL = RationalParam()

_FAMILY_CHOICES = ["smooth", "dense", "strongdense", "thetalower", "thetaupper", "bpower", "bstar"]


def _make_spec(family: str, y: Fraction, i: int | None, a: Fraction | None, squarefree: bool) -> FamilySpec:
    kwargs = {"squarefree": squarefree}
    if family in ("dense", "strongdense", "thetalower", "thetaupper"):
        if i is None:
            raise click.UsageError(f"--i is required for family {family}")
        kwargs["i"] = i
    if family in ("bpower", "bstar"):
        if a is None:
            raise click.UsageError(f"--a is required for family {family}")
        kwargs["a"] = a
    try:
        return FamilySpec(family, y, **kwargs)
    except DenseDivError as exc:
        raise click.UsageError(str(exc)) from exc


def _emit(fmt: str, header: list[str], rows: list[list], plain_fn=None):
    if fmt == "csv":
        click.echo(",".join(header))
        for r in rows:
            click.echo(",".join(str(c) for c in r))
    elif fmt == "json":
        click.echo(json.dumps({"schema": 1, "columns": header, "rows": rows}, default=str))
    else:
        if plain_fn is not None:
            plain_fn(rows)
        else:
            for r in rows:
                click.echo(" ".join(str(c) for c in r))


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ResourceLimitError as exc:
        click.echo(f"resource limit: {exc}", err=True)
        sys.exit(EXIT_RESOURCE)


@click.group()
def main():
    """Densely divisible integer families and their counting asymptotics."""


_family_opts = [
    click.option("--family", type=click.Choice(_FAMILY_CHOICES), required=True),
    click.option("--y", "y_", type=RATIONAL, required=True, help="rational, e.g. 2 or 5/2 or 2.5"),
    click.option("--i", "i_", type=int, default=None),
    click.option("--a", "a_", type=RATIONAL, default=None),
    click.option("--squarefree", is_flag=True, default=False),
]


def _with_family_opts(fn):
    for opt in reversed(_family_opts):
        fn = opt(fn)
    return fn


@main.command()
@_with_family_opts
@click.option("--n", type=int, required=True)
def member(family, y_, i_, a_, squarefree, n):
    """Is n a member of the family?"""
    spec = _make_spec(family, y_, i_, a_, squarefree)
    ok = _guard(families.is_member, factorize(n), spec)
    click.echo("true" if ok else "false")


@main.command("enumerate")
@_with_family_opts
@click.option("--x", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default="plain")
def enumerate_cmd(family, y_, i_, a_, squarefree, x, fmt):
    """List all members up to x."""
    spec = _make_spec(family, y_, i_, a_, squarefree)
    members = _guard(families.enumerate_members, spec, x)
    if fmt == "plain":
        click.echo(" ".join(str(m) for m in members))
    else:
        _emit(fmt, ["n"], [[m] for m in members])


@main.command()
@_with_family_opts
@click.option("--x", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default="plain")
def count(family, y_, i_, a_, squarefree, x, fmt):
    """Count members up to x, with the x*rho_a(u) model when available."""
    spec = _make_spec(family, y_, i_, a_, squarefree)
    rep = _guard(families.count_family, spec, x)
    model = f"{rep.model:.6f}" if rep.model else ""
    ratio = f"{rep.ratio:.6f}" if rep.ratio else ""
    rows = [[rep.x, rep.count, f"{rep.u:.6f}", model, ratio]]
    _emit(fmt, ["x", "count", "u", "model", "ratio"], rows,
          plain_fn=lambda rs: click.echo(rep.count))


@main.command()
@click.option("--which", type=click.Choice(["lambda", "constants"]), required=True)
@click.option("--i-max", type=int, default=10)
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default="plain")
def table(which, i_max, fmt):
    """Reproduce the exponent (lambda) or constant (C) table for a = 1/i."""
    if i_max > 25:
        raise click.UsageError("--i-max must be <= 25")
    rows = []
    for i in range(1, i_max + 1):
        cert = _guard(gzero.find_lambda, Fraction(1, i))
        if which == "lambda":
            ref = reference.LAMBDA_TABLE.get(i, "")
            val = cert.lam
        else:
            ref = reference.C_TABLE.get(i, "")
            val = cert.C
        delta = f"{val - float(ref):+.2e}" if ref else ""
        rows.append([i, f"{val:.7f}", ref, delta])
    _emit(fmt, ["i", "computed", "reference", "delta"], rows)


@main.command()
@click.option("--a", "a_", type=RATIONAL, required=True)
def certificate(a_):
    """JSON zero certificate (lambda_a, C_a, bracket, residual)."""
    cert = _guard(gzero.find_lambda, a_)
    click.echo(cert.to_json())


@main.command("rho-table")
@click.option("--a", "a_", type=RATIONAL, required=True)
@click.option("--u-max", type=float, default=30.0)
@click.option("--step", type=RATIONAL, default=Fraction(1, 128))
@click.option("--out", type=click.Path(), default="-")
def rho_table(a_, u_max, step, out):
    """Tabulate rho_a and export CSV (u, rho, model, ratio)."""
    table_ = _guard(rho.build_rho_table, a_, u_max=u_max, step=step)
    cert = gzero.find_lambda(a_) if a_ > 0 else None
    if out == "-":
        import os
        import tempfile

        with tempfile.NamedTemporaryFile("r+", suffix=".csv", delete=False) as fh:
            path = fh.name
        table_.export_csv(path, cert)
        with open(path) as fh:
            click.echo(fh.read(), nl=False)
        os.unlink(path)
    else:
        table_.export_csv(out, cert)


@main.command("question-scan")
@click.option("--i", "i_", type=int, required=True)
@click.option("--y", "y_", type=RATIONAL, required=True)
@click.option("--m-max", type=int, default=2000)
@click.option("--p-max", type=int, default=200)
def question_scan(i_, y_, m_max, p_max):
    """Exploratory search for evidence against a chain description of the
    strongly densely divisible family: looks for m and primes p2 < p1 (both
    >= the largest prime of m) with m*p1 a member but m*p2 not."""
    from .families import FamilyOracle
    from .integers import factorize, primes_upto

    orc = FamilyOracle(y_)
    primes = primes_upto(p_max)
    findings = []
    for m in range(1, m_max + 1):
        pp = factorize(m).p_plus
        allowed = [p for p in primes if p >= pp]
        in_flags = [(p, orc.strong(m * p, i_)) for p in allowed]
        seen_out = None
        for p, flag in in_flags:
            if not flag and seen_out is None:
                seen_out = p
            if flag and seen_out is not None:
                findings.append({"m": m, "p_out": seen_out, "p_in": p})
                break
    click.echo(json.dumps({"schema": 1, "i": i_, "y": str(y_), "m_max": m_max,
                           "p_max": p_max, "counterexamples": findings}))


@main.command("ratio-scan")
@_with_family_opts
@click.option("--x-list", required=True, help="comma-separated x values")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "plain"]), default="csv")
def ratio_scan(family, y_, i_, a_, squarefree, x_list, fmt):
    """CSV of (x, count, x*rho_a(u) model, ratio); squarefree divides by zeta(2)."""
    spec = _make_spec(family, y_, i_, a_, squarefree)
    xs = [int(float(t)) for t in x_list.split(",")]
    if xs != sorted(xs):
        raise click.UsageError("--x-list must be increasing")
    rows = []
    for x in xs:
        rep = _guard(families.count_family, spec, x)
        rows.append([x, rep.count, f"{rep.model:.4f}" if rep.model else "",
                     f"{rep.ratio:.6f}" if rep.ratio else ""])
    _emit(fmt, ["x", "count", "model", "ratio"], rows)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_sandwich(nmax: int) -> list[dict]:
    results = []
    ys = [Fraction(2), Fraction(5, 2), Fraction(3), Fraction(10)]
    imax = 4
    for y in ys:
        t = families.membership_tables(nmax, y, imax)
        sm, tl, tu = t["smooth"], t["thetalower"], t["thetaupper"]
        de, st = t["dense"], t["strongdense"]
        bad = 0
        for i in range(1, imax + 1):
            for n in range(1, nmax + 1):
                if sm[n] and not tl[i][n]:
                    bad += 1
                elif tl[i][n] and not st[i][n]:
                    bad += 1
                elif st[i][n] and not de[i][n]:
                    bad += 1
                elif de[i][n] and not tu[i][n]:
                    bad += 1
        results.append({"name": f"sandwich chain y={y}", "passed": bad == 0,
                        "detail": f"violations={bad} over n<={nmax}, i<={imax}"})
        nest = all(
            not de[i + 1][n] or de[i][n]
            for i in range(imax)
            for n in range(1, nmax + 1)
        ) and all(
            not st[i + 1][n] or st[i][n]
            for i in range(imax)
            for n in range(1, nmax + 1)
        )
        results.append({"name": f"nesting y={y}", "passed": nest, "detail": ""})
        eq12 = all(de[i][n] == st[i][n] for i in (1, 2) for n in range(1, nmax + 1))
        results.append({"name": f"dense==strong for i<=2, y={y}", "passed": eq12, "detail": ""})
    return results


def _suite_identities(xmax: int) -> list[dict]:
    results = []
    configs = [
        FamilySpec("bpower", Fraction(2), a=Fraction(1)),
        FamilySpec("bpower", Fraction(3), a=Fraction(1)),
        FamilySpec("bpower", Fraction(3), a=Fraction(1, 2)),
    ]
    for spec in configs:
        for sf in (False, True):
            s = FamilySpec(spec.kind, spec.y, a=spec.a, squarefree=sf)
            ok = families.check_phi_identity_range(xmax, s)
            results.append({
                "name": f"phi identity theta=y*n^{s.a} y={s.y} sf={sf}",
                "passed": ok, "detail": f"all x<={xmax}",
            })
    for beta in (Fraction(1), Fraction(2)):
        for y in (Fraction(2), Fraction(3)):
            ok = families.check_ssf_identity(xmax, y, beta)
            results.append({"name": f"ssf identity beta={beta} y={y}", "passed": ok,
                            "detail": f"x={xmax}"})
    from .integers import sieve_spf

    spf = sieve_spf(max(min(xmax, 10**4), 2))
    for y in (Fraction(2), Fraction(3)):
        bad = sum(
            0 if families.check_theta2(n, y, spf) else 1 for n in range(1, min(xmax, 10**4) + 1)
        )
        results.append({"name": f"theta2 characterization y={y}", "passed": bad == 0,
                        "detail": f"violations={bad}"})
    return results


def _suite_rho() -> list[dict]:
    results = []
    for a in (Fraction(0), Fraction(1, 2), Fraction(1)):
        t = rho.cached_rho_table(a, u_max=4.0)
        errs = [
            abs(float(t(u)) - rho.rho_closed_form_12(a, u))
            for u in [1.0 + k / 64 for k in range(65)]
        ]
        results.append({"name": f"rho closed form [1,2] a={a}", "passed": max(errs) < 1e-7,
                        "detail": f"max err={max(errs):.2e}"})
    t1 = rho.cached_rho_table(Fraction(1), u_max=30.0)
    c1 = 1.0 / (1.0 - math.exp(-EULER_GAMMA))
    v = float(t1(20.0)) * 21.0
    results.append({"name": "rho_1(20)*(21) near C_1", "passed": abs(v / c1 - 1) < 0.005,
                    "detail": f"{v:.5f} vs {c1:.5f}"})
    t0 = rho.cached_rho_table(Fraction(0), u_max=30.0)
    mono = bool((t1.values[1:] <= t1.values[:-1] + 1e-12).all())
    sandw = bool(((t0.values <= t1.values + 1e-9) & (t1.values <= 1.0 + 1e-12)).all())
    results.append({"name": "rho_1 monotone and sandwiched", "passed": mono and sandw, "detail": ""})
    return results


def _suite_zeros() -> list[dict]:
    results = []
    for i in (1, 2, 3):
        cert = gzero.find_lambda(Fraction(1, i))
        ok = reference.truncate_matches(cert.lam, reference.LAMBDA_TABLE[i]) and cert.residual < 1e-9
        results.append({"name": f"lambda_1/{i}", "passed": ok,
                        "detail": f"{cert.lam:.7f} residual={cert.residual:.1e}"})
    z = gzero.locate_zero_in_rect(1, (-3.6, -2.5, 10.8, 11.9), resolution=0.01)
    d = abs(z - complex(*reference.COMPLEX_POLE[1]))
    results.append({"name": "complex zero a=1", "passed": d < 0.05,
                    "detail": f"at {z:.4f}, dist {d:.4f}"})
    n0 = gzero.count_zeros_rect(1, (-3.02, -0.99, 0.1, 11.3))
    results.append({"name": "zero-free strip a=1", "passed": n0 == 0, "detail": f"count={n0}"})
    return results


def _suite_saddle() -> list[dict]:
    from .specfun import k_oscillatory, k_zeros

    results = []
    zs = k_zeros(4)
    for k, (val, ref) in enumerate(zip(zs, reference.K_ZEROS)):
        ok = reference.truncate_matches(val, ref)
        if k == 0:
            ok = ok and abs(val - float(ref)) < 1e-5
        results.append({"name": f"K zero nu_{k}", "passed": ok, "detail": f"{val:.7f}"})
    v0 = zs[0]
    quad_ok = abs(k_oscillatory(v0)) < 1e-3
    results.append({"name": "nu_0 confirmed by quadrature", "passed": quad_ok,
                    "detail": f"|K(nu_0)|={abs(k_oscillatory(v0)):.1e}"})
    return results


@main.command()
@click.option("--suite", type=click.Choice(["sandwich", "identities", "rho", "zeros", "saddle", "all"]),
              required=True)
@click.option("--nmax", type=int, default=100_000)
@click.option("--xmax", type=int, default=10_000)
def verify(suite, nmax, xmax):
    """Run a verification suite; exit code 4 on any failure."""
    runners = {
        "sandwich": lambda: _suite_sandwich(nmax),
        "identities": lambda: _suite_identities(xmax),
        "rho": _suite_rho,
        "zeros": _suite_zeros,
        "saddle": _suite_saddle,
    }
    names = list(runners) if suite == "all" else [suite]
    results = []
    for nm in names:
        results.extend(_guard(runners[nm]))
    report = {
        "schema": 1,
        "suite": suite,
        "results": results,
        "passed": all(r["passed"] for r in results),
        "counts": {"total": len(results), "failed": sum(not r["passed"] for r in results)},
    }
    click.echo(json.dumps(report, indent=2, default=str))
    if not report["passed"]:
        sys.exit(EXIT_VERIFY)


if __name__ == "__main__":
    main()
