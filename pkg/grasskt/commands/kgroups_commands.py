# Command-line framework
import click

from config import config, logger
from grasskt.commands import apply_budget, budget_options, output_options, parse_range, run_cases, timed, write_report
from grasskt.services.errors import InvalidParameters
from grasskt.services.ktheory_service import ENGINES, GrassmannParams, compute_kgroups, hopf_class_order, hopf_order_bounds
from grasskt.services.zgb_service import ORDERS
from grasskt.utils.report_manager import Report


def supported_cases(low: int, high: int):
    """Every (n, k) with n in [low, high], n ≡ 0 mod 4, odd k, 3 ≤ k ≤ n/2."""
    return [(n, k) for n in range(low, high + 1) if n % 4 == 0 for k in range(3, n // 2 + 1, 2)]


@timed
def _kgroups_case(item):
    n, k, engine, order, structure = item
    return compute_kgroups(n, k, engine, order, structure).to_json()


@click.command("kgroups")
@click.option("--n", type=int, default=None, help="Ambient dimension.")
@click.option("--k", type=int, default=None, help="Plane dimension.")
@click.option("--range", "n_range", default=None, help='All supported (n, k) with n in "n1..n2".')
@click.option("--engine", type=click.Choice(ENGINES), default=config.DEFAULT_ENGINE, show_default=True)
@click.option("--order", type=click.Choice(ORDERS), default=config.DEFAULT_ORDER, show_default=True)
@click.option("--structure-constants/--no-structure-constants", default=None,
              help="Emit the K⁰ multiplication table (default: only for configured cases).")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@budget_options
@output_options
def kgroups(n, k, n_range, engine, order, structure_constants, jobs, budget_ms, max_steps, fmt, out, timing):
    """
    K⁰ and K¹ of G(n,k) for n ≡ 0 mod 4 and odd k.

    Steps:
    - Resolve the case list from --n/--k, --range or the configured cases.
    - Compute every case (optionally in a worker pool).
    - Emit the report.
    """
    apply_budget(budget_ms, max_steps)
    if n is not None or k is not None:
        if n is None or k is None:
            raise InvalidParameters("--n and --k must be given together")
        GrassmannParams.of(n, k)
        cases = [(n, k)]
    elif n_range:
        cases = supported_cases(*parse_range(n_range))
    else:
        cases = list(config.THEOREM_CASES)

    logger.info(f"kgroups for {len(cases)} case(s) with engine {engine}")
    report = Report("kgroups", {"engine": engine, "order": order, "cases": [list(c) for c in cases],
                                "budget_ms": config.GB_BUDGET_MS, "max_steps": config.GB_MAX_STEPS})
    outcomes = run_cases(_kgroups_case, [(a, b, engine, order, structure_constants) for a, b in cases],
                         jobs, desc="kgroups")
    timings = {}
    for (a, b), (result, elapsed) in zip(cases, outcomes):
        report.add(result)
        timings[f"{a},{b}"] = round(elapsed, 1)
    if timing:
        report.timing_ms = timings
    write_report(report, fmt, out)


@click.command("hopf-order")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@output_options
def hopf_order(n, k, fmt, out, timing):
    """Order 2^r of [θ]−1: exact for n ≡ 0 mod 4 with odd k, bounds otherwise."""
    params = GrassmannParams.of(n, k, theorem_case=False)
    if params.j == 0:
        exact = hopf_class_order(GrassmannParams.of(n, k))
        result = {"n": n, "k": k, "mode": "exact", "r": exact, "bounds": [2 * params.l - 1, params.m - 1]}
    else:
        low, high = hopf_order_bounds(n, k)
        result = {"n": n, "k": k, "mode": "bounds", "r": None, "bounds": [low, high]}
    report = Report("hopf-order", {"n": n, "k": k})
    report.add(result)
    write_report(report, fmt, out)
