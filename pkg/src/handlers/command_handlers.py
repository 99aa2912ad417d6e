"""
Command handlers: one function per CLI subcommand, each returning an exit code
"""

import logging
import sys
from pathlib import Path

from src.core.config import Config
from src.core.exceptions import DomainError
from src.models.channel import GAD_CLOSED_FORM_P, ChannelKind, ChannelSpec
from src.models.measurement import MeasurementDirection, WeakStrength
from src.models.report import GadRow, WernerRow
from src.models.state import CorrelationTriple, WernerParams
from src.services.channels import depolarize_then_project_equivalence, measures_under_channel
from src.services.correlations import build_report
from src.services.scheduler import SweepScheduler
from src.services.sweeps import gad_rows, grid_from_spec, werner_rows
from src.services.verification import run_verification
from src.utils.decorators import EXIT_OK, EXIT_VERIFICATION_FAILED, handle_errors
from src.utils.formatters import format_csv, format_json, parse_float_list, parse_grid

logger = logging.getLogger(__name__)


def _emit(text: str, out: str = None):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8", newline="\n")
        logger.info(f"Wrote {len(text)} bytes to {out}")
    else:
        sys.stdout.write(text)


def _input_triple(args) -> CorrelationTriple:
    if args.werner_z is not None:
        if not 0.0 <= args.werner_z <= 1.0:
            raise DomainError(f"--werner-z must lie in [0, 1], got {args.werner_z}")
        return WernerParams(args.werner_z).triple()
    if args.werner_alpha is not None:
        return WernerParams.from_alpha(args.werner_alpha).triple()
    return CorrelationTriple.from_sequence(parse_float_list(args.c, expected=3))


def _weak_strength(x, config: Config):
    if x is None:
        return None
    if x > config.MAX_X:
        logger.warning(f"x={x} exceeds the cap {config.MAX_X}; using the cap")
        return WeakStrength(config.MAX_X, saturated=True)
    return WeakStrength(x)


def _channel_spec(args):
    if args.channel is None:
        return None
    kind = ChannelKind(args.channel)
    if kind is ChannelKind.GAD:
        p = GAD_CLOSED_FORM_P if args.p is None else args.p
        return ChannelSpec(kind, p, args.gamma)
    if args.p is None:
        raise DomainError(f"--channel {args.channel} needs --p")
    return ChannelSpec(kind, args.p, side=args.side)


@handle_errors
def measures_command(args, config: Config) -> int:
    c = _input_triple(args)
    x = _weak_strength(args.x, config)
    spec = _channel_spec(args)
    if spec is not None:
        report = measures_under_channel(c, spec, x, allow_unphysical=args.allow_unphysical)
    else:
        report = build_report(c, x, allow_unphysical=args.allow_unphysical)

    data = report.to_dict()
    data["x_saturated"] = None if x is None else x.saturated
    if spec is not None:
        data["input_c"] = list(c.as_tuple())
        data["channel"] = {"kind": spec.kind.value, "p": spec.p, "gamma": spec.gamma, "side": spec.side}
    _emit(format_json(data), args.out)
    return EXIT_OK


@handle_errors
def equivalence_command(args, config: Config) -> int:
    c = CorrelationTriple.from_sequence(parse_float_list(args.c, expected=3))
    z = MeasurementDirection.normalized(parse_float_list(args.direction, expected=3))
    if args.p is None:
        raise DomainError("equivalence needs --p")
    report = depolarize_then_project_equivalence(c, z, args.p, side=args.side, max_x=config.MAX_X)
    _emit(format_json(report.to_dict()), args.out)
    return EXIT_OK


@handle_errors
def sweep_werner_command(args, config: Config) -> int:
    z_values = grid_from_spec(*(parse_grid(args.z_grid) if args.z_grid else config.WERNER_Z_GRID))
    x_values = args.x_list or config.WERNER_X_LIST
    with SweepScheduler(config.THREADS) as scheduler:
        rows = werner_rows(z_values, x_values, scheduler)
    _emit(format_csv(WernerRow._fields, rows), args.out)
    return EXIT_OK


@handle_errors
def gad_surface_command(args, config: Config) -> int:
    z_values = grid_from_spec(*(parse_grid(args.z_grid) if args.z_grid else config.GAD_Z_GRID))
    gammas = grid_from_spec(*(parse_grid(args.gamma_grid) if args.gamma_grid else config.GAD_GAMMA_GRID))
    x_values = args.x_list or config.GAD_X_LIST
    with SweepScheduler(config.THREADS) as scheduler:
        rows = gad_rows(z_values, gammas, x_values, scheduler)
    _emit(format_csv(GadRow._fields, rows), args.out)
    return EXIT_OK


@handle_errors
def verify_command(args, config: Config) -> int:
    seed = config.VERIFY_SEED if args.seed is None else args.seed
    samples = config.VERIFY_SAMPLES if args.samples is None else args.samples
    grid_points = args.grid_points or config.GRID_POINTS
    fault_scale = 1.001 if args.inject_fault else 1.0

    with SweepScheduler(config.THREADS) as scheduler:
        report = run_verification(seed, samples, grid_points, scheduler, fault_scale)

    _emit(format_json(report.to_dict()), args.out)
    if not report.passed:
        print(f"verification failed: {format_json(report.first_failure()).strip()}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK
