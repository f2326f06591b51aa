"""Command-line driver.

Subcommands: eval-spherical, eval-polya, eval-mixture, orbital, heat-kernel,
laplacian-check, sweep, validate.

Conventions (stable contract):
* --format json prints one JSON object per run on a single line with sorted
  keys; --format csv prints the documented columns.  --out writes the same
  bytes to a file instead of stdout.
* --config FILE supplies defaults from a flat JSON object keyed by flag
  names (dashes or underscores); explicit flags win.
* --seed defaults to 0; identical argv (plus config) gives byte-identical
  output, independent of thread count.
* Exit codes: 0 success, 1 usage or schema problem, 2 numeric/domain
  problem (including failed checks).  Every failure prints a single-line
  JSON object {"error": kind, "message": text} on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import spherical as sph
from .errors import (
    ConvergenceError,
    DegeneracyError,
    DomainError,
    RangeError,
    ShapeError,
    SphericaError,
    ValidationError,
)
from .limits import (
    powersum_convergence,
    spherical_convergence,
    sweep_to_text,
    weyl_concentration_sweep,
)
from .polya import MixtureParam, OmegaParam, mixture_eval, phi_omega, polya_eval
from .validate import render_report, validate_all


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1 with a machine-parsable reason
    def error(self, message):
        _print_error("usage", message)
        raise SystemExit(1)


def _print_error(kind: str, message) -> None:
    line = json.dumps({"error": kind, "message": str(message)}, sort_keys=True)
    print(line, file=sys.stderr)


def _floats(value, flag: str) -> tuple[float, ...]:
    if value is None:
        raise _UsageError(f"missing required value for {flag}")
    if isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [p for p in str(value).split(",") if p.strip() != ""]
    try:
        out = tuple(float(v) for v in items)
    except (TypeError, ValueError):
        raise _UsageError(f"{flag} expects a comma-separated list of numbers")
    if not out:
        raise _UsageError(f"{flag} must contain at least one number")
    return out


def _ints(value, flag: str) -> tuple[int, ...]:
    vals = _floats(value, flag)
    out = tuple(int(v) for v in vals)
    if any(float(i) != v for i, v in zip(out, vals)):
        raise _UsageError(f"{flag} expects integers")
    return out


def _float(value, flag: str) -> float:
    if value is None:
        raise _UsageError(f"missing required value for {flag}")
    try:
        return float(value)
    except (TypeError, ValueError):
        raise _UsageError(f"{flag} expects a number")


def _require(value, flag: str):
    if value is None:
        raise _UsageError(f"missing required value for {flag}")
    return value


def _emit(text: str, out_path) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _render_json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _render_kv_csv(pairs) -> str:
    lines = ["key,value"]
    lines.extend(f"{k},{v!r}" if isinstance(v, float) else f"{k},{v}" for k, v in pairs)
    return "\n".join(lines) + "\n"


def _eval_result_text(result, fmt: str) -> str:
    if fmt == "csv":
        return (
            "value,abs_error,terms_used,path\n"
            f"{result.value!r},{result.abs_error!r},{result.terms_used},"
            f"{result.path}\n"
        )
    return _render_json(
        {
            "value": result.value,
            "abs_error": result.abs_error,
            "terms_used": result.terms_used,
            "path": result.path,
        }
    )


def _add_common(sp, samples_default=None):
    sp.add_argument("--format", choices=["json", "csv"], default=None)
    sp.add_argument("--out", default=None)
    sp.add_argument("--config", default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--samples", type=int, default=None)
    sp.set_defaults(_samples_default=samples_default)


def build_parser() -> _Parser:
    p = _Parser(
        prog="spherica",
        description="Spherical-function evaluations, limit sweeps, and "
        "self-validation.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval-spherical", help="spherical function at (x, xi)")
    sp.add_argument("--x", default=None)
    sp.add_argument("--xi", default=None)
    sp.add_argument("--path", choices=["auto", "det", "series"], default=None)
    _add_common(sp)

    sp = sub.add_parser("eval-polya", help="pointwise values and product")
    sp.add_argument("--omega", default=None)
    sp.add_argument("--lam", default=None)
    _add_common(sp)

    sp = sub.add_parser("eval-mixture", help="mixture of products")
    sp.add_argument("--mixture", default=None)
    sp.add_argument("--lam", default=None)
    _add_common(sp)

    sp = sub.add_parser("orbital", help="exponential orbital integral")
    sp.add_argument("--lam", default=None)
    sp.add_argument("--theta", default=None)
    sp.add_argument("--path", choices=["auto", "det", "series"], default=None)
    _add_common(sp)

    sp = sub.add_parser("heat-kernel", help="radial heat kernel value")
    sp.add_argument("--t", default=None)
    sp.add_argument("--lam", default=None)
    sp.add_argument("--theta", default=None)
    _add_common(sp)

    sp = sub.add_parser(
        "laplacian-check",
        help="finite-difference eigenvalue identity for the radial Laplacian",
    )
    sp.add_argument("--x", default=None)
    sp.add_argument("--xi", default=None)
    sp.add_argument("--fd-step", dest="fd_step", default=None)
    sp.add_argument("--tol", default=None)
    _add_common(sp)

    sp = sub.add_parser("sweep", help="finite-size to limit comparison")
    sp.add_argument("--kind", choices=["spherical", "powersum", "weyl"], default=None)
    sp.add_argument("--omega", default=None)
    sp.add_argument("--xi", default=None)
    sp.add_argument("--m", default=None)
    sp.add_argument("--n-list", dest="n_list", default=None)
    sp.add_argument("--method", choices=["series", "mc"], default=None)
    _add_common(sp, samples_default=100_000)

    sp = sub.add_parser("validate", help="built-in consistency suite")
    sp.add_argument(
        "--suite",
        choices=["special", "symfunc", "spherical", "polya", "mc", "limits", "all"],
        default=None,
    )
    _add_common(sp, samples_default=1000)

    return p


def _merge_config(args: argparse.Namespace) -> None:
    if not args.config:
        return
    try:
        raw = Path(args.config).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read config file: {exc}")
    try:
        cfg = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config file is not valid JSON: {exc}")
    if not isinstance(cfg, dict):
        raise ValidationError("config file must hold a JSON object")
    known = vars(args)
    for key, value in cfg.items():
        dest = str(key).replace("-", "_")
        if dest in ("command", "config") or dest not in known:
            raise _UsageError(f"unknown config field {key!r}")
        if known[dest] is None:
            setattr(args, dest, value)


def _fmt(args) -> str:
    return args.format if args.format else "json"


def _seed(args) -> int:
    return 0 if args.seed is None else int(args.seed)


def _samples(args) -> int:
    if args.samples is not None:
        return int(args.samples)
    return int(args._samples_default) if args._samples_default else 1000


def _cmd_eval_spherical(args) -> int:
    x = _floats(args.x, "--x")
    xi = _floats(args.xi, "--xi")
    path = args.path or "auto"
    result = sph.spherical_eval(x, xi, path=path)
    _emit(_eval_result_text(result, _fmt(args)), args.out)
    return 0


def _cmd_eval_polya(args) -> int:
    omega = OmegaParam.from_file(_require(args.omega, "--omega"))
    lam = _floats(args.lam, "--lam")
    pi_values = [polya_eval(omega, v) for v in lam]
    product = phi_omega(omega, lam)
    if _fmt(args) == "csv":
        pairs = [(f"lambda_{i}", v) for i, v in enumerate(lam)]
        pairs += [(f"pi_{i}", v) for i, v in enumerate(pi_values)]
        pairs.append(("phi_product", product))
        text = _render_kv_csv(pairs)
    else:
        text = _render_json(
            {"lambda": list(lam), "pi_values": pi_values, "phi_product": product}
        )
    _emit(text, args.out)
    return 0


def _cmd_eval_mixture(args) -> int:
    mix = MixtureParam.from_file(_require(args.mixture, "--mixture"))
    lam = _floats(args.lam, "--lam")
    comps = [
        {"weight": w, "value": phi_omega(om, lam)} for w, om in mix.components
    ]
    value = mixture_eval(mix, lam)
    if _fmt(args) == "csv":
        pairs = [(f"component_{i}_weight", c["weight"]) for i, c in enumerate(comps)]
        pairs += [(f"component_{i}_value", c["value"]) for i, c in enumerate(comps)]
        pairs.append(("value", value))
        text = _render_kv_csv(pairs)
    else:
        text = _render_json(
            {"lambda": list(lam), "value": value, "components": comps}
        )
    _emit(text, args.out)
    return 0


def _cmd_orbital(args) -> int:
    lam = _floats(args.lam, "--lam")
    theta = _floats(args.theta, "--theta")
    path = args.path or "auto"
    result = sph.orbital_integral(lam, theta, path=path)
    _emit(_eval_result_text(result, _fmt(args)), args.out)
    return 0


def _cmd_heat_kernel(args) -> int:
    t = _float(args.t, "--t")
    lam = _floats(args.lam, "--lam")
    theta = _floats(args.theta, "--theta")
    value = sph.heat_kernel(t, lam, theta)
    if _fmt(args) == "csv":
        text = f"value\n{value!r}\n"
    else:
        text = _render_json({"value": value})
    _emit(text, args.out)
    return 0


def _cmd_laplacian_check(args) -> int:
    x = _floats(args.x, "--x")
    xi = _floats(args.xi, "--xi")
    fd_step = None if args.fd_step is None else _float(args.fd_step, "--fd-step")
    tol = 1e-3 if args.tol is None else _float(args.tol, "--tol")
    tight = sph.SphericalOptions(rel_tol=1e-13)
    g = lambda v: sph.spherical_series(x, v, opts=tight).value
    lap = sph.radial_laplacian(g, xi, fd_step=2e-3 if fd_step is None else fd_step)
    eigen = -math.fsum(v * v for v in x) * g(xi)
    rel = abs(lap - eigen) / max(1.0, abs(eigen))
    passed = rel <= tol
    payload = {
        "laplacian_value": lap,
        "eigen_value": eigen,
        "rel_error": rel,
        "tol": tol,
        "passed": passed,
    }
    if _fmt(args) == "csv":
        text = _render_kv_csv(sorted(payload.items()))
    else:
        text = _render_json(payload)
    _emit(text, args.out)
    if not passed:
        _print_error("check_failed", f"rel_error {rel:.9e} exceeds tol {tol:.9e}")
        return 2
    return 0


def _cmd_sweep(args) -> int:
    kind = _require(args.kind, "--kind")
    n_list = _ints(args.n_list, "--n-list")
    if kind == "spherical":
        omega = OmegaParam.from_file(_require(args.omega, "--omega"))
        u = _float(args.xi, "--xi")
        method = args.method or "series"
        report = spherical_convergence(
            omega, u, n_list, method=method, n_samples=_samples(args), seed=_seed(args)
        )
    elif kind == "powersum":
        omega = OmegaParam.from_file(_require(args.omega, "--omega"))
        m = int(_float(args.m, "--m"))
        report = powersum_convergence(omega, m, n_list)
    else:
        m = int(_float(args.m, "--m"))
        report = weyl_concentration_sweep(
            m, n_list, n_samples=_samples(args), seed=_seed(args)
        )
    _emit(sweep_to_text(report, _fmt(args)), args.out)
    return 0


def _cmd_validate(args) -> int:
    suite = args.suite or "all"
    names = None if suite == "all" else [suite]
    results = validate_all(names, samples=_samples(args), seed=_seed(args))
    # default (no --format) is the human pass/fail table
    if args.format == "json":
        text = _render_json(
            {
                "results": [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                "passed": sum(r.passed for r in results),
                "total": len(results),
            }
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "passed", "detail"])
        for r in results:
            writer.writerow([r.name, str(r.passed).lower(), r.detail])
        text = buf.getvalue()
    else:
        text = render_report(results)
    _emit(text, args.out)
    failed = [r for r in results if not r.passed]
    if failed:
        _print_error(
            "checks_failed", f"{len(failed)} of {len(results)} checks failed"
        )
        return 2
    return 0


_COMMANDS = {
    "eval-spherical": _cmd_eval_spherical,
    "eval-polya": _cmd_eval_polya,
    "eval-mixture": _cmd_eval_mixture,
    "orbital": _cmd_orbital,
    "heat-kernel": _cmd_heat_kernel,
    "laplacian-check": _cmd_laplacian_check,
    "sweep": _cmd_sweep,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _merge_config(args)
        return _COMMANDS[args.command](args)
    except ValidationError as exc:
        _print_error("schema", exc)
        return 1
    except _UsageError as exc:
        _print_error("usage", exc)
        return 1
    except DegeneracyError as exc:
        _print_error("degeneracy", exc)
        return 2
    except ShapeError as exc:
        _print_error("shape", exc)
        return 2
    except RangeError as exc:
        _print_error("range", exc)
        return 2
    except ConvergenceError as exc:
        _print_error("convergence", exc)
        return 2
    except DomainError as exc:
        _print_error("domain", exc)
        return 2
    except SphericaError as exc:
        _print_error("error", exc)
        return 2
    except OSError as exc:
        _print_error("io", exc)
        return 1
    except ValueError as exc:
        _print_error("usage", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
