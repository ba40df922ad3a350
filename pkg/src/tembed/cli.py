"""Command-line interface: verification suites, figure export and benchmarks.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import json
import sys
import time
import tracemalloc

import click

from . import kernels
from .embedding import base_embedding, run_recurrence, step
from .render import csv_text, svg_text
from .rings import rational_from_str, rational_to_str
from .verify import SUITES, run_suite
from .wavefield import fundamental


def _parse_a(ctx, param, value):
    try:
        a = rational_from_str(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"cannot parse rational {value!r}")
    if a <= 0:
        raise click.BadParameter("a must be positive")
    return a


def _check_n(ctx, param, value):
    if value is not None and value < 1:
        raise click.BadParameter("n must be >= 1")
    return value


def _check_tol(ctx, param, value):
    if value <= 0:
        raise click.BadParameter("tol must be positive")
    return value


def _write_output(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as handle:
            handle.write(text)
    except OSError as exc:
        click.echo(f"cannot write {out}: {exc}", err=True)
        sys.exit(3)


@click.group()
def main():
    """Exact recurrences for perfect t-embeddings of the two-periodic
    Aztec diamond."""


@main.command()
@click.argument("suite_arg", required=False, default=None,
                metavar="[SUITE]")
@click.option("--suite", default=None, help="Suite name (alternative to the "
              "positional argument).")
@click.option("--n", type=int, default=None, callback=_check_n,
              help="Depth / maximum stage (suite-specific default).")
@click.option("--a", default="1", callback=_parse_a,
              help="Parameter a as 'p/q' or a decimal.")
@click.option("--mode", type=click.Choice(["exact", "float"]),
              default="exact", show_default=True)
@click.option("--tol", type=float, default=1e-9, callback=_check_tol,
              show_default=True, help="Float-mode tolerance.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for randomized property checks.")
@click.option("--out", type=click.Path(), default=None,
              help="Write the JSON report here instead of stdout.")
def verify(suite_arg, suite, n, a, mode, tol, seed, out):
    """Run a verification suite and emit a JSON report.

    SUITE is one of: theorem, oracle, geometry, lemmas, all (default: all).
    """
    name = suite_arg or suite or "all"
    if name not in SUITES:
        raise click.UsageError(
            f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = run_suite(name, a, n=n, mode=mode, tol=tol, seed=seed)
    _write_output(json.dumps(report, indent=2, sort_keys=True) + "\n", out)
    sys.exit(0 if report["passed"] else 1)


@main.command()
@click.option("--n", type=int, required=True, callback=_check_n,
              help="Stage to emit.")
@click.option("--a", default="1", callback=_parse_a,
              help="Parameter a as 'p/q' or a decimal.")
@click.option("--mode", type=click.Choice(["exact", "float"]), default=None,
              help="Arithmetic mode (default: exact for csv, float for svg).")
@click.option("--format", "fmt", type=click.Choice(["csv", "svg"]),
              default="csv", show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Output path (default: stdout).")
def emit(n, a, mode, fmt, out):
    """Export the stage-n embedding and origami as CSV or SVG."""
    if mode is None:
        mode = "exact" if fmt == "csv" else "float"
    emb = run_recurrence(a, n, mode=mode)
    text = csv_text(emb) if fmt == "csv" else svg_text(emb)
    _write_output(text, out)
    sys.exit(0)


def _bench_wavefield(a, n: int, mode: str) -> dict:
    layer_times = []
    tracemalloc.start()
    started = time.perf_counter()
    field = fundamental(a, (0, 0), n, mode=mode,
                        on_layer=lambda m, dt: layer_times.append(dt))
    total = time.perf_counter() - started
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    report = {
        "total_seconds": total,
        "layer_seconds": layer_times,
        "peak_bytes": peak,
    }
    if mode == "exact":
        bits = []
        for m in range(1, n + 1):
            layer = field.layers[m]
            bits.append(max(
                (int(v.numerator).bit_length() + int(v.denominator).bit_length()
                 for v in layer.values()), default=0))
        report["max_bits_per_layer"] = bits
    return report


def _bench_embedding(a, n: int, mode: str) -> dict:
    layer_times = []
    tracemalloc.start()
    started = time.perf_counter()
    if mode == "exact":
        emb = base_embedding(a, mode="exact")
        while emb.stage < n:
            t0 = time.perf_counter()
            emb = step(emb)
            layer_times.append(time.perf_counter() - t0)
    else:
        run_recurrence(a, n, mode="float")
    total = time.perf_counter() - started
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    report = {"total_seconds": total, "peak_bytes": peak}
    if layer_times:
        report["layer_seconds"] = layer_times
    return report


def _float_backends():
    from . import _kernels_py

    backends = {"python": _kernels_py}
    try:
        from . import _kernels

        backends["cython"] = _kernels
    except ImportError:
        pass
    return backends


@main.command()
@click.option("--n", type=int, required=True, callback=_check_n)
@click.option("--a", default="1", callback=_parse_a,
              help="Parameter a as 'p/q' or a decimal.")
@click.option("--mode", type=click.Choice(["exact", "float", "both"]),
              default="both", show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write the JSON report here instead of stdout.")
def bench(n, a, mode, out):
    """Time the wavefield and embedding computations.

    Float mode is run once per available kernel backend so the compiled
    extension can be compared against the pure-Python fallback.
    """
    report = {"schema": 1, "n": n, "a": rational_to_str(a),
              "default_backend": kernels.BACKEND}
    if mode in ("exact", "both"):
        exact_n = min(n, 32)
        report["exact"] = {
            "n": exact_n,
            "wavefield": _bench_wavefield(a, exact_n, "exact"),
            "embedding": _bench_embedding(a, exact_n, "exact"),
        }
    if mode in ("float", "both"):
        saved = (kernels.wave_step, kernels.embedding_step_interior)
        per_backend = {}
        try:
            for name, module in _float_backends().items():
                kernels.wave_step = module.wave_step
                kernels.embedding_step_interior = module.embedding_step_interior
                per_backend[name] = {
                    "wavefield": _bench_wavefield(a, n, "float"),
                    "embedding": _bench_embedding(a, n, "float"),
                }
        finally:
            kernels.wave_step, kernels.embedding_step_interior = saved
        report["float"] = per_backend
    _write_output(json.dumps(report, indent=2) + "\n", out)
    sys.exit(0)


if __name__ == "__main__":
    main()
