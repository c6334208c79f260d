"""Command-line interface: point evaluation, parameter sweeps, figure-style
sweeps with shape assertions, and the closed-form/oracle crosscheck.

Exit codes: 0 success, 1 usage or I/O error, 2 failed shape assertion,
failed crosscheck, or strict-mode degeneracy.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .closedform import (
    frame_moments_closed_form,
    second_moments_closed_form,
    squeezing_literal,
    squeezing_standard,
)
from .crosscheck import CrosscheckReport, default_grid, run_crosscheck
from .frame import (
    FrameStatus,
    compute_frame,
    mean_spin_closed_form,
    mean_spin_length,
    mean_spin_length_closed_form,
)
from .oracle import evaluate_oracle
from .spincore import SqueezeParams

SWEEP_COLUMNS = (
    "beta",
    "mu",
    "nu",
    "jx_cf",
    "jy_cf",
    "jz_cf",
    "jx_or",
    "jy_or",
    "jz_or",
    "r_eq9",
    "r_eq10",
    "theta",
    "phi",
    "jn1sq",
    "jn2sq",
    "anticomm",
    "lambda_min",
    "chi_min",
    "xi2_std",
    "xi2_literal",
    "concurrence",
    "frame_status",
    "method",
)

CONVENTIONS = ("standard", "paper-literal")

FIG1_MUS = (0.0, math.pi / 3, math.pi / 2)
FIG1_NU_STEPS = 121
FIG1_BETA_STEPS = 101
FIG2_MUS = (0.0, math.pi / 2, math.pi)
FIG2_NU = -math.pi / 3
FIG2_BETA_STEPS = 201

# strictly below one beyond numerical noise; a coherent point computes to
# 1 - O(1e-16) and must not count as squeezed
SQUEEZED_MARGIN = 1e-12
_SHAPE_SLACK = 1e-12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # bad arguments are usage errors (exit 1), not assertion failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# value parsing and formatting

_PI_FORM = re.compile(
    r"^(?P<sign>[+-]?)(?P<coeff>\d+(?:\.\d*)?)?\s*\*?\s*pi(?:\s*/\s*(?P<den>\d+(?:\.\d*)?))?$"
)


def parse_angle(text: str) -> float:
    """Parse a float, accepting pi forms like 'pi', '-pi/3', '2pi/3'."""
    text = text.strip()
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_FORM.match(text)
    if not m:
        raise UsageError(f"cannot parse number {text!r}")
    value = math.pi * float(m.group("coeff") or 1.0)
    if m.group("den"):
        value /= float(m.group("den"))
    return -value if m.group("sign") == "-" else value


def parse_float_list(text: str) -> list[float]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError(f"empty list {text!r}")
    return [parse_angle(t) for t in items]


def parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"cannot parse boolean {text!r}")


def fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def read_config(path: str) -> dict[str, str]:
    """Plain key=value lines; '#' starts a comment; flags override these."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


class Options:
    """Flag/config/default resolution: flags win, then config, then default."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config: dict[str, str] = {}
        if getattr(args, "config", None):
            self.config = read_config(args.config)

    def get(self, name: str, parse, default=None, required: bool = False):
        raw = getattr(self.args, name.replace("-", "_"), None)
        if raw is None and name in self.config:
            raw = self.config[name]
        if raw is None:
            if required:
                raise UsageError(f"missing required option --{name}")
            return default
        return parse(raw) if isinstance(raw, str) else raw


# ---------------------------------------------------------------------------
# row evaluation

_NAN = float("nan")


def evaluate_row(params: SqueezeParams) -> dict:
    """All sweep columns for one parameter point."""
    cf = mean_spin_closed_form(params)
    point = evaluate_oracle(params)
    res = point.result
    fm = point.frame_moments
    return {
        "beta": params.beta,
        "mu": params.mu,
        "nu": params.nu,
        "jx_cf": cf.jx,
        "jy_cf": cf.jy,
        "jz_cf": cf.jz,
        "jx_or": point.moments.mean.jx,
        "jy_or": point.moments.mean.jy,
        "jz_or": point.moments.mean.jz,
        "r_eq9": mean_spin_length(cf),
        "r_eq10": mean_spin_length_closed_form(params),
        "theta": point.frame.theta,
        "phi": point.frame.phi,
        "jn1sq": fm.jn1_sq if fm is not None else _NAN,
        "jn2sq": fm.jn2_sq if fm is not None else _NAN,
        "anticomm": fm.anticomm if fm is not None else _NAN,
        "lambda_min": res.lambda_min,
        "chi_min": res.chi_min,
        "xi2_std": res.xi2_std,
        "xi2_literal": res.xi2_literal,
        "concurrence": res.concurrence,
        "frame_status": res.frame_status.value,
        "method": res.method,
    }


def evaluate_rows(points: list[SqueezeParams], threads: int = 1) -> list[dict]:
    """Rows in input order; thread count must not affect the result."""
    if threads <= 1:
        return [evaluate_row(p) for p in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(evaluate_row, points))


def write_rows_csv(rows: list[dict], handle) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow([fmt(row[c]) for c in SWEEP_COLUMNS])


def write_rows_json(rows: list[dict], handle) -> None:
    payload = {
        "columns": list(SWEEP_COLUMNS),
        "rows": [[row[c] for c in SWEEP_COLUMNS] for row in rows],
    }
    json.dump(payload, handle, indent=2)
    handle.write("\n")


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


# ---------------------------------------------------------------------------
# shape checks shared by the figure command and the acceptance tests


def monotone_nonincreasing(values, slack: float = _SHAPE_SLACK) -> bool:
    arr = np.asarray(values, dtype=float)
    return bool(np.all(np.diff(arr) <= slack))


def rise_then_fall(values, slack: float = _SHAPE_SLACK) -> bool:
    """Interior maximum with nondecreasing approach and nonincreasing exit."""
    arr = np.asarray(values, dtype=float)
    peak = int(np.argmax(arr))
    if peak == 0 or peak == len(arr) - 1:
        return False
    if arr[peak] <= arr[0] + slack or arr[peak] <= arr[-1] + slack:
        return False
    return bool(
        np.all(np.diff(arr[: peak + 1]) >= -slack)
        and np.all(np.diff(arr[peak:]) <= slack)
    )


def squeezed_interval_width(betas, xi2_values) -> float:
    """Width of the beta range where xi^2 sits strictly below one.

    Points within SQUEEZED_MARGIN of one do not count; a coherent endpoint
    evaluates to one only up to rounding and must not be called squeezed.
    """
    betas = np.asarray(betas, dtype=float)
    mask = np.asarray(xi2_values, dtype=float) < 1.0 - SQUEEZED_MARGIN
    if not mask.any():
        return 0.0
    selected = betas[mask]
    return float(selected[-1] - selected[0])


def run_fig1(
    threads: int = 1,
    nu_steps: int = FIG1_NU_STEPS,
    beta_steps: int = FIG1_BETA_STEPS,
):
    """Mean-spin-length sweeps: three mu slices over a (nu, beta) grid.

    Returns (slices, violations, report_lines); slices maps mu to its rows.
    """
    nus = np.linspace(0.0, 2.0 * math.pi, nu_steps)
    betas = np.linspace(0.0, 1.0, beta_steps)
    slices: dict[float, list[dict]] = {}
    violations: list[str] = []
    lines: list[str] = []
    for mu in FIG1_MUS:
        points = [
            SqueezeParams(beta=float(b), mu=mu, nu=float(v)) for v in nus for b in betas
        ]
        rows = evaluate_rows(points, threads)
        slices[mu] = rows
        r = np.array([row["r_eq10"] for row in rows]).reshape(len(nus), len(betas))
        if mu == 0.0:
            for i, nu in enumerate(nus):
                curve = r[i]
                ok = (
                    monotone_nonincreasing(curve)
                    and abs(curve[0] - 1.0) <= 1e-12
                    and abs(curve[-1]) <= 1e-12
                )
                if not ok:
                    violations.append(
                        f"fig1 mu=0 nu={nu!r}: r must fall monotonically from 1 to 0"
                    )
            lines.append(f"fig1 mu=0: monotone decrease, endpoints 1 and 0: "
                         f"{'PASS' if not violations else 'FAIL'}")
        elif mu == FIG1_MUS[2]:
            bad = []
            for i, nu in enumerate(nus):
                if abs(math.sin(nu)) <= 1e-9:
                    continue        # r vanishes identically on these slices
                curve = r[i]
                peak_beta = betas[int(np.argmax(curve))]
                if not rise_then_fall(curve) or abs(peak_beta - 1.0 / math.sqrt(2.0)) > 0.01:
                    bad.append(nu)
                    violations.append(
                        f"fig1 mu=pi/2 nu={nu!r}: r must peak at beta=1/sqrt(2)"
                    )
            lines.append(
                f"fig1 mu=pi/2: unimodal with peak at 1/sqrt(2): "
                f"{'PASS' if not bad else 'FAIL'}"
            )
    return slices, violations, lines


def run_fig2(threads: int = 1, beta_steps: int = FIG2_BETA_STEPS):
    """Squeezing sweeps at nu = -pi/3 for mu in {0, pi/2, pi}.

    Shape expectations: the mu=0 curve decreases toward a minimum, the
    mu=pi/2 and mu=pi curves rise to an interior maximum and then fall, and
    the squeezed beta interval at mu=pi/2 is strictly the widest.  Checked
    for both squeezing normalizations.
    """
    betas = np.linspace(0.0, 1.0, beta_steps)
    slices: dict[float, list[dict]] = {}
    violations: list[str] = []
    lines: list[str] = []
    for mu in FIG2_MUS:
        points = [SqueezeParams(beta=float(b), mu=mu, nu=FIG2_NU) for b in betas]
        slices[mu] = evaluate_rows(points, threads)

    mu_tags = {FIG2_MUS[0]: "mu=0", FIG2_MUS[1]: "mu=pi/2", FIG2_MUS[2]: "mu=pi"}
    for column in ("xi2_std", "xi2_literal"):
        widths = {}
        for mu in FIG2_MUS:
            curve = np.array([row[column] for row in slices[mu]])
            tag = mu_tags[mu]
            if mu == 0.0:
                ok = monotone_nonincreasing(curve) and curve[0] > curve[-1]
                desc = "decrease toward a minimum"
            else:
                ok = rise_then_fall(curve)
                desc = "rise to an interior maximum, then fall"
            lines.append(f"fig2 {tag} ({column}): {desc}: {'PASS' if ok else 'FAIL'}")
            if not ok:
                violations.append(f"fig2 {tag} ({column}): expected {desc}")
            widths[mu] = squeezed_interval_width(betas, curve)
        wide = (
            widths[FIG2_MUS[1]] > widths[FIG2_MUS[0]]
            and widths[FIG2_MUS[1]] > widths[FIG2_MUS[2]]
        )
        lines.append(
            f"fig2 squeezed-interval widths ({column}): "
            + ", ".join(f"{mu_tags[mu]}={widths[mu]:.6g}" for mu in FIG2_MUS)
            + f": {'PASS' if wide else 'FAIL'}"
        )
        if not wide:
            violations.append(
                f"fig2 ({column}): squeezed interval at mu=pi/2 must be strictly widest"
            )
    return slices, violations, lines


# ---------------------------------------------------------------------------
# subcommands


def cmd_point(opts: Options) -> int:
    beta = opts.get("beta", parse_angle, required=True)
    mu = opts.get("mu", parse_angle, required=True)
    nu = opts.get("nu", parse_angle, required=True)
    convention = opts.get("convention", str, default="standard")
    if convention not in CONVENTIONS:
        raise UsageError(f"unknown convention {convention!r}")
    out_format = opts.get("format", str, default="text")

    params = SqueezeParams(beta=beta, mu=mu, nu=nu)
    record: dict[str, object] = {
        "beta": params.beta,
        "mu": params.mu,
        "nu": params.nu,
        "alpha": params.alpha,
    }

    cf = mean_spin_closed_form(params)
    raising_cf = second_moments_closed_form(params)
    record.update(
        {
            "jx_cf": cf.jx,
            "jy_cf": cf.jy,
            "jz_cf": cf.jz,
            "r_eq9": mean_spin_length(cf),
            "r_eq10": mean_spin_length_closed_form(params),
            "jplus_sq_cf": raising_cf.jplus_sq,
            "jz_sq_cf": raising_cf.jz_sq,
            "jplus_2jz1_cf": raising_cf.jplus_2jz1,
        }
    )
    cf_frame = compute_frame(cf)
    if cf_frame.status is not FrameStatus.FULLY_DEGENERATE:
        fm_cf = frame_moments_closed_form(params, cf_frame)
        record.update(
            {
                "jn1sq_cf": fm_cf.jn1_sq,
                "jn2sq_cf": fm_cf.jn2_sq,
                "anticomm_cf": fm_cf.anticomm,
                "xi2_std_cf": squeezing_standard(fm_cf),
                "xi2_literal_cf": squeezing_literal(fm_cf),
            }
        )

    point = evaluate_oracle(params)
    res = point.result
    record.update(
        {
            "jx_or": point.moments.mean.jx,
            "jy_or": point.moments.mean.jy,
            "jz_or": point.moments.mean.jz,
            "r_or": mean_spin_length(point.moments.mean),
            "jplus_sq_or": point.moments.raising.jplus_sq,
            "jz_sq_or": point.moments.raising.jz_sq,
            "jplus_2jz1_or": point.moments.raising.jplus_2jz1,
            "theta": point.frame.theta,
            "phi": point.frame.phi,
            "frame_status": res.frame_status.value,
            "method": res.method,
        }
    )
    if point.frame_moments is not None:
        record.update(
            {
                "jn1sq_or": point.frame_moments.jn1_sq,
                "jn2sq_or": point.frame_moments.jn2_sq,
                "anticomm_or": point.frame_moments.anticomm,
            }
        )
    record.update(
        {
            "lambda_min": res.lambda_min,
            "chi_min": res.chi_min,
            "xi2_std": res.xi2_std,
            "xi2_literal": res.xi2_literal,
            "xi2": res.xi2_std if convention == "standard" else res.xi2_literal,
            "convention": convention,
            "concurrence": res.concurrence,
            "one_minus_concurrence": 1.0 - res.concurrence,
        }
    )

    handle, close = _open_out(opts.get("out", str))
    try:
        if out_format == "json":
            serializable = {
                k: ([v.real, v.imag] if isinstance(v, complex) else v)
                for k, v in record.items()
            }
            json.dump(serializable, handle, indent=2)
            handle.write("\n")
        else:
            for key, value in record.items():
                if isinstance(value, complex):
                    imag = fmt(value.imag)
                    sign = "" if imag.startswith("-") else "+"
                    handle.write(f"{key} = {fmt(value.real)}{sign}{imag}j\n")
                else:
                    handle.write(f"{key} = {fmt(value)}\n")
    finally:
        if close:
            handle.close()
    return 0


def cmd_sweep(opts: Options) -> int:
    beta_min = opts.get("beta-min", parse_angle, default=0.0)
    beta_max = opts.get("beta-max", parse_angle, default=1.0)
    beta_steps = opts.get("beta-steps", int, default=101)
    mus = opts.get("mu-list", parse_float_list, required=True)
    nus = opts.get("nu-list", parse_float_list, required=True)
    out_format = opts.get("format", str, default="csv")
    threads = opts.get("threads", int, default=1)
    strict = opts.get("strict", parse_bool, default=False)
    if beta_steps < 2:
        raise UsageError("beta-steps must be at least 2")
    if threads < 1:
        raise UsageError("threads must be at least 1")
    if out_format not in ("csv", "json"):
        raise UsageError(f"unknown format {out_format!r}")

    betas = np.linspace(beta_min, beta_max, beta_steps)
    points = [
        SqueezeParams(beta=float(b), mu=float(m), nu=float(v))
        for m in mus
        for v in nus
        for b in betas
    ]
    rows = evaluate_rows(points, threads)

    handle, close = _open_out(opts.get("out", str))
    try:
        if out_format == "csv":
            write_rows_csv(rows, handle)
        else:
            write_rows_json(rows, handle)
    finally:
        if close:
            handle.close()

    if strict:
        degenerate = sum(
            1 for row in rows if row["frame_status"] == FrameStatus.FULLY_DEGENERATE.value
        )
        if degenerate:
            print(
                f"strict mode: {degenerate} fully-degenerate points in sweep",
                file=sys.stderr,
            )
            return 2
    return 0


def cmd_figure(opts: Options) -> int:
    name = opts.args.name
    outdir = opts.get("outdir", str, required=True)
    threads = opts.get("threads", int, default=1)
    os.makedirs(outdir, exist_ok=True)

    if name == "fig1":
        slices, violations, lines = run_fig1(threads)
    else:
        slices, violations, lines = run_fig2(threads)

    written = []
    for index, (mu, rows) in enumerate(slices.items()):
        path = os.path.join(outdir, f"{name}_mu{index}.csv")
        with open(path, "w", encoding="utf-8", newline="") as handle:
            write_rows_csv(rows, handle)
        written.append(path)
        lines.insert(index, f"{name} slice {index}: mu = {fmt(float(mu))} -> {path}")

    if name == "fig2":
        # squeezing versus concurrence diagnostic, reported but never asserted
        diag_path = os.path.join(outdir, "fig2_xi2_concurrence.csv")
        max_gap = 0.0
        with open(diag_path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(
                ["beta", "mu", "nu", "xi2_std", "concurrence",
                 "one_minus_concurrence", "abs_diff"]
            )
            for rows in slices.values():
                for row in rows:
                    gap = abs(row["xi2_std"] - (1.0 - row["concurrence"]))
                    max_gap = max(max_gap, gap)
                    writer.writerow(
                        [fmt(row["beta"]), fmt(row["mu"]), fmt(row["nu"]),
                         fmt(row["xi2_std"]), fmt(row["concurrence"]),
                         fmt(1.0 - row["concurrence"]), fmt(gap)]
                    )
        written.append(diag_path)
        lines.append(f"fig2 diagnostic: max |xi2_std - (1 - concurrence)| = {max_gap:.6g}")

    summary_path = os.path.join(outdir, f"{name}_shapes.txt")
    with open(summary_path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
    written.append(summary_path)

    for line in lines:
        print(line)
    if violations:
        for violation in violations:
            print(f"shape assertion failed: {violation}", file=sys.stderr)
        return 2
    return 0


def _render_crosscheck_text(report: CrosscheckReport, handle) -> None:
    data = report.as_dict()
    for key in (
        "samples",
        "tol",
        "nu_sign_hypothesis",
        "factor_hypothesis",
        "nu_discrimination",
        "factor_discrimination",
        "regular_points",
        "polar_degenerate_points",
        "fully_degenerate_points",
        "independent_ok",
    ):
        handle.write(f"{key} = {fmt(data[key])}\n")
    for label, diff in sorted(report.nu_candidate_max_diff.items()):
        handle.write(f"nu_candidate_max_diff[{label}] = {fmt(diff)}\n")
    for label, diff in sorted(report.factor_candidate_max_diff.items()):
        handle.write(f"factor_candidate_max_diff[{label}] = {fmt(diff)}\n")
    for name, diff in sorted(report.max_abs_diff_per_quantity.items()):
        handle.write(f"max_abs_diff[{name}] = {fmt(diff)}\n")
    handle.write(f"failures = {len(report.failures)}\n")
    for failure in report.failures:
        handle.write(
            f"FAIL beta={fmt(failure.beta)} mu={fmt(failure.mu)} nu={fmt(failure.nu)} "
            f"quantity={failure.quantity} closed={failure.closed!r} "
            f"oracle={failure.oracle!r} diff={fmt(failure.diff)}\n"
        )


def cmd_crosscheck(opts: Options) -> int:
    tol = opts.get("tol", parse_angle, default=1e-10)
    out_format = opts.get("format", str, default="text")
    mus = opts.get("mu-list", parse_float_list)
    nus = opts.get("nu-list", parse_float_list)
    beta_min = opts.get("beta-min", parse_angle)
    beta_max = opts.get("beta-max", parse_angle)
    beta_steps = opts.get("beta-steps", int)

    if any(v is not None for v in (mus, nus, beta_min, beta_max, beta_steps)):
        betas = np.linspace(
            beta_min if beta_min is not None else 0.0,
            beta_max if beta_max is not None else 1.0,
            beta_steps if beta_steps is not None else 21,
        )
        mus = mus if mus is not None else [
            0.0, math.pi / 6, math.pi / 3, math.pi / 2,
            2 * math.pi / 3, 5 * math.pi / 6, math.pi,
        ]
        nus = nus if nus is not None else [
            -math.pi / 2, -math.pi / 3, 0.0, math.pi / 4, math.pi / 2, math.pi,
        ]
        grid = [
            SqueezeParams(beta=float(b), mu=float(m), nu=float(v))
            for b in betas
            for m in mus
            for v in nus
        ]
    else:
        grid = default_grid()

    report = run_crosscheck(grid, tol)
    handle, close = _open_out(opts.get("out", str))
    try:
        if out_format == "json":
            json.dump(report.as_dict(), handle, indent=2)
            handle.write("\n")
        else:
            _render_crosscheck_text(report, handle)
    finally:
        if close:
            handle.close()

    if not report.independent_ok:
        print("crosscheck: convention-independent quantities disagree", file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="biaxbell",
        description=(
            "Mean-spin direction, mean-spin length, and spin squeezing of the "
            "two-qubit biaxial plus Bell superposition."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key=value file; explicit flags override it")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", help="output format")
        p.add_argument("--threads", type=int, help="worker threads (default 1)")

    p_point = sub.add_parser("point", help="evaluate one parameter point")
    p_point.add_argument("--beta", help="Bell weight in [0, 1]")
    p_point.add_argument("--mu", help="shape angle in [0, pi]; accepts pi forms")
    p_point.add_argument("--nu", help="relative phase in radians; accepts pi forms")
    p_point.add_argument("--convention", help="standard or paper-literal")
    common(p_point)
    p_point.set_defaults(func=cmd_point)

    p_sweep = sub.add_parser("sweep", help="grid sweep over (mu, nu, beta)")
    p_sweep.add_argument("--beta-min", help="smallest beta (default 0)")
    p_sweep.add_argument("--beta-max", help="largest beta (default 1)")
    p_sweep.add_argument("--beta-steps", type=int, help="number of beta points (default 101)")
    p_sweep.add_argument("--mu-list", help="comma-separated mu values")
    p_sweep.add_argument("--nu-list", help="comma-separated nu values")
    p_sweep.add_argument("--convention", help="standard or paper-literal")
    p_sweep.add_argument(
        "--strict", nargs="?", const="true",
        help="exit 2 when fully-degenerate points occur",
    )
    common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_fig = sub.add_parser("figure", help="preset sweeps with shape assertions")
    p_fig.add_argument("name", choices=("fig1", "fig2"))
    p_fig.add_argument("--outdir", help="directory for the emitted files")
    p_fig.add_argument("--convention", help="standard or paper-literal")
    common(p_fig)
    p_fig.set_defaults(func=cmd_figure)

    p_check = sub.add_parser("crosscheck", help="closed forms versus operator oracle")
    p_check.add_argument("--beta-min", help="grid override")
    p_check.add_argument("--beta-max", help="grid override")
    p_check.add_argument("--beta-steps", type=int, help="grid override")
    p_check.add_argument("--mu-list", help="grid override")
    p_check.add_argument("--nu-list", help="grid override")
    p_check.add_argument("--tol", help="comparison tolerance (default 1e-10)")
    common(p_check)
    p_check.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        opts = Options(args)
        return args.func(opts)
    except UsageError as exc:
        print(f"biaxbell: error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"biaxbell: error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"biaxbell: internal check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
