"""
Command-line interface for dyaniso.
"""

import logging
import math
import sys
from typing import List, Optional, Tuple

import click
import numpy as np

from dyaniso import PairInteractionClient, __version__
from dyaniso.core.config import get_settings
from dyaniso.core.run_config import RunConfig, load_run_config
from dyaniso.core.units import Unit, from_au
from dyaniso.exceptions import ConfigurationError, DyAnisoError
from dyaniso.models import Parity
from dyaniso.services import export_service

logger = logging.getLogger(__name__)

# Energy at which `rates` reports the total universal rate
REFERENCE_ENERGY_KELVIN = 500e-6


class OmegaParamType(click.ParamType):
    """A non-negative projection quantum number or the word ``all``."""

    name = "omega"

    def convert(self, value, param, ctx):
        if value is None or isinstance(value, int):
            return value
        if str(value).lower() == "all":
            return "all"
        try:
            omega = int(value)
        except ValueError:
            self.fail(f"{value!r} is neither an integer nor 'all'", param, ctx)
        if omega < 0:
            self.fail(f"Omega must be non-negative, got {omega}", param, ctx)
        return omega


OMEGA = OmegaParamType()

symmetry_option = click.option(
    "--symmetry",
    type=click.Choice(["g", "u", "both"]),
    default="both",
    help="gerade, ungerade or both",
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default=None,
    help="csv writes CSV plus a JSON mirror; json writes JSON only",
)


def _parities(symmetry: str) -> List[Parity]:
    if symmetry == "both":
        return [Parity.GERADE, Parity.UNGERADE]
    return [Parity(symmetry)]


def _omegas(omega, j: int) -> Optional[List[int]]:
    if omega == "all":
        return None
    if omega > 2 * j:
        raise click.BadParameter(
            f"Omega must lie in 0..{2 * j}, got {omega}", param_hint="--omega"
        )
    return [omega]


def _run_config(ctx) -> RunConfig:
    path = ctx.obj.get("config_path")
    return load_run_config(path) if path else RunConfig()


def _client(ctx, run_config: Optional[RunConfig] = None) -> PairInteractionClient:
    return PairInteractionClient(
        run_config=run_config or _run_config(ctx),
        output_dir=ctx.obj.get("output_dir"),
    )


def _override(run_config: RunConfig, section: str, **values) -> RunConfig:
    """Flag values over file values; a rejected flag combination is a usage error."""
    try:
        return run_config.with_overrides(section, **values)
    except ConfigurationError as exc:
        raise click.UsageError(str(exc)) from exc


def _fail(exc: Exception) -> None:
    click.echo(f"❌ Error: {str(exc)}", err=True)
    sys.exit(1)


def _report_written(paths) -> None:
    for path in paths:
        click.echo(f"✅ Wrote {path}")


def _parse_fields(raw: str) -> List[float]:
    try:
        fields = [float(item) for item in raw.split(",") if item.strip()]
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--bfields") from exc
    if not fields:
        raise click.BadParameter("need at least one field", param_hint="--bfields")
    if any(b <= 0 for b in fields):
        raise click.BadParameter("fields must be positive", param_hint="--bfields")
    return fields


def _radial_range(r_min: float, r_max: float, points: int) -> Tuple[float, float]:
    if r_min <= 0:
        raise click.BadParameter("must be positive", param_hint="--rmin")
    if points > 1 and r_max <= r_min:
        raise click.BadParameter("must exceed --rmin", param_hint="--rmax")
    return r_min, r_max


@click.group()
@click.version_option(version=__version__, prog_name="dyaniso")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    help="Run configuration file (sectioned key = value)",
)
@click.option(
    "--output-dir",
    envvar="DYANISO_OUTPUT_DIR",
    help="Directory for CSV/JSON output (can also be set via DYANISO_OUTPUT_DIR)",
)
@click.pass_context
def cli(ctx, config_path, output_dir):
    """dyaniso - anisotropic long-range interactions and loss rates of Dy pairs."""
    logging.basicConfig(
        level=get_settings().LOG_LEVEL.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["output_dir"] = output_dir


@cli.command()
@symmetry_option
@click.option("--omega", type=OMEGA, default="all", help="Omega in 0..2j or 'all'")
@format_option
@click.pass_context
def c6(ctx, symmetry, omega, fmt):
    """Adiabatic C6 coefficients of every requested (Omega, parity) block."""
    try:
        client = _client(ctx)
        spectra = client.c6_spectra(_omegas(omega, client.j), _parities(symmetry))
        summary = client.summarize(spectra)
        paths = client.write(
            export_service.spectra_frame(spectra),
            "c6_spectrum",
            fmt,
            extra={
                "summary": summary.model_dump() if summary else None,
                "isotropic_c6": client.isotropic_c6(),
                "qq_to_dispersion_ratio_50a0": client.quadrupole_ratio(50.0),
            },
        )
        _report_written(paths)

        if summary is None:
            click.echo("No adiabats in the requested blocks.")
            return
        values = [v for s in spectra for v in s.eigenvalues]
        if len(values) == 1:
            click.echo(f"C6 = {values[0]:.8e} a.u.")
        click.echo(
            f"C6 [a.u.]: {summary.count_gerade} gerade, {summary.count_ungerade} "
            f"ungerade, min {summary.minimum:.8e}, max {summary.maximum:.8e}, "
            f"spread {summary.spread:.8e}"
        )
        if summary.max_gerade_ungerade_difference is not None:
            click.echo(
                "   largest g/u difference at equal Omega: "
                f"{summary.max_gerade_ungerade_difference:.8e}"
            )
    except DyAnisoError as exc:
        _fail(exc)


@cli.command()
@symmetry_option
@click.option("--omega", type=OMEGA, default="all", help="Omega in 0..2j or 'all'")
@format_option
@click.pass_context
def c3(ctx, symmetry, omega, fmt):
    """Adiabatic C3 (magnetic dipole-dipole) coefficients."""
    try:
        client = _client(ctx)
        spectra = client.c3_spectra(_omegas(omega, client.j), _parities(symmetry))
        summary = client.summarize(spectra)
        paths = client.write(
            export_service.spectra_frame(spectra),
            "c3_spectrum",
            fmt,
            extra={"summary": summary.model_dump() if summary else None},
        )
        _report_written(paths)

        if summary is None:
            click.echo("No adiabats in the requested blocks.")
            return
        click.echo(
            f"C3 [a.u.]: {summary.positive} positive, {summary.negative} negative, "
            f"min {summary.minimum:.8e}, max {summary.maximum:.8e}"
        )
        click.echo(f"   full-space eigenvalue sum: {summary.full_space_sum:.8e}")
    except DyAnisoError as exc:
        _fail(exc)


@cli.command()
@click.option("--rmin", type=float, default=20.0, show_default=True, help="a0")
@click.option("--rmax", type=float, default=400.0, show_default=True, help="a0")
@click.option("--points", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--omega", type=OMEGA, default="0", show_default=True)
@click.option(
    "--symmetry", type=click.Choice(["g", "u", "both"]), default="g", show_default=True
)
@click.option("--energy-unit", type=click.Choice(["au", "mK"]), default=None)
@format_option
@click.pass_context
def adiabats(ctx, rmin, rmax, points, omega, symmetry, energy_unit, fmt):
    """Combined C6 + C3 adiabatic potential curves."""
    _radial_range(rmin, rmax, points)
    try:
        client = _client(ctx)
        unit = energy_unit or client.config.output.energy_unit
        r_grid = client.radial_grid(rmin, rmax, points)
        curve_sets = client.adiabats(
            r_grid, _omegas(omega, client.j), _parities(symmetry)
        )
        paths = client.write(export_service.curves_frame(curve_sets, unit), "adiabats", fmt)
        _report_written(paths)
        for curve_set in curve_sets:
            click.echo(
                f"Omega={curve_set.omega}{curve_set.parity.value}: "
                f"{len(curve_set.labels)} curves on {len(r_grid)} radii, "
                f"min overlap {curve_set.min_overlap:.3f}"
            )
    except DyAnisoError as exc:
        _fail(exc)


@cli.command()
@click.option("--bfields", default=None, help="Comma-separated fields in gauss, e.g. 10,100")
@click.option("--rmin", type=float, default=5.0, show_default=True, help="a0")
@click.option("--rmax", type=float, default=200.0, show_default=True, help="a0")
@click.option("--points", type=click.IntRange(min=1), default=400, show_default=True)
@format_option
@click.pass_context
def scales(ctx, bfields, rmin, rmax, points, fmt):
    """Zeeman, rotational, MDD and AD splitting scales and their crossings."""
    fields = _parse_fields(bfields) if bfields is not None else None
    _radial_range(rmin, rmax, points)
    try:
        client = _client(ctx)
        r_grid = client.radial_grid(rmin, rmax, points)
        names, curves = client.scale_curves(r_grid, fields)
        crossings = client.crossings(fields)
        paths = client.write(export_service.scales_frame(curves, names), "scales", fmt)
        paths += client.write(export_service.crossings_frame(crossings), "crossings", fmt)
        _report_written(paths)

        click.echo("Crossing radii [a0]:")
        for crossing in crossings:
            radius = "none" if crossing.radius is None else f"{crossing.radius:.3f}"
            click.echo(f"   {crossing.curve_a:>4} x {crossing.curve_b:<16} {radius}")
    except DyAnisoError as exc:
        _fail(exc)


def _rate_at(energies_k: List[float], totals: List[float], target: float) -> float:
    """Log-log interpolation of the total rate; NaN outside the grid."""
    if not energies_k or not energies_k[0] <= target <= energies_k[-1]:
        return math.nan
    if len(energies_k) == 1:
        return totals[0]
    return float(
        np.exp(np.interp(np.log(target), np.log(energies_k), np.log(totals)))
    )


@cli.command()
@click.option("--emin", type=click.FloatRange(min=0, min_open=True), help="Kelvin")
@click.option("--emax", type=click.FloatRange(min=0, min_open=True), help="Kelvin")
@click.option("--points", type=click.IntRange(min=1), default=None)
@click.option("--lmax", type=click.IntRange(min=0), default=None)
@click.option("--rc", type=click.FloatRange(min=0, min_open=True), help="Absorbing radius, a0")
@click.option(
    "--bfield",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Field for the Born rates in gauss; defaults to the first configured field",
)
@format_option
@click.pass_context
def rates(ctx, emin, emax, points, lmax, rc, bfield, fmt):
    """Universal per-partial-wave loss rates and Born dipolar relaxation."""
    try:
        run_config = _override(
            _run_config(ctx),
            "scattering",
            emin_kelvin=emin,
            emax_kelvin=emax,
            energy_points=points,
            l_max=lmax,
            r_match_inner=rc,
        )
        client = _client(ctx, run_config)
        b_gauss = bfield if bfield is not None else run_config.fields.b_fields_gauss[0]
        table = client.rate_table(b_field_gauss=b_gauss)
        frames = export_service.rate_frames(table)
        extra = {
            "b_field_gauss": b_gauss,
            "warnings": table.warnings,
            "barriers": [b.model_dump() for b in client.barriers()],
        }
        paths: List = []
        for stem, frame in frames.items():
            paths += client.write(frame, stem, fmt, extra)
        _report_written(paths)

        energies_k = [from_au(e, Unit.KELVIN) for e in table.energies]
        beta = _rate_at(energies_k, table.total_rate, REFERENCE_ENERGY_KELVIN)
        if not math.isnan(beta):
            click.echo(
                f"beta(500 uK) = {from_au(beta, Unit.RATE):.8e} cm^3/s "
                f"(l <= {run_config.scattering.l_max})"
            )
        if table.born is not None:
            gamma = _rate_at(energies_k, table.born.gamma_total, REFERENCE_ENERGY_KELVIN)
            if not math.isnan(gamma):
                click.echo(
                    f"gamma(500 uK, {b_gauss:g} G) = {from_au(gamma, Unit.RATE):.8e} cm^3/s"
                )
        for warning in table.warnings:
            click.echo(f"⚠️  {warning}", err=True)
    except DyAnisoError as exc:
        _fail(exc)


@cli.command()
@format_option
@click.pass_context
def barriers(ctx, fmt):
    """Centrifugal barrier heights for l = 1 ... l_max."""
    try:
        client = _client(ctx)
        infos = client.barriers()
        frame = export_service.barriers_frame(infos)
        _report_written(client.write(frame, "barriers", fmt))
        for info in infos:
            click.echo(
                f"l={info.l}: R = {info.r_barrier:.3f} a0, "
                f"height = {1e3 * info.height_kelvin:.4f} mK"
            )
    except DyAnisoError as exc:
        _fail(exc)


@cli.command("validate-c6")
@click.argument("linelist", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def validate_c6(ctx, linelist):
    """Compare the closed-form C6 matrix with the direct second-order sum."""
    try:
        client = _client(ctx)
        report = client.validate_c6(linelist)
        frame = export_service.deviations_frame(report)
        paths = client.write(
            frame, "validate_c6", "csv", extra={"report": report.model_dump(mode="json")}
        )
        _report_written(paths)
        click.echo(
            f"max relative deviation {report.max_relative_deviation:.3e} "
            f"(tolerance {report.tolerance:.1e})"
        )
        if not report.agrees:
            click.echo(f"❌ Closed form disagrees: {report.note}", err=True)
            sys.exit(1)
        click.echo("✅ Closed form and direct sum agree")
    except DyAnisoError as exc:
        _fail(exc)


def main():
    """Entry point for the CLI."""
    cli(obj={})


if __name__ == "__main__":
    main()
