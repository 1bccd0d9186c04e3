# Wall-clock timing for --timing
import time

# Command-line framework
import click

from config import config, logger
from grasskt.commands import apply_budget, budget_options, output_options, run_cases, write_report
from grasskt.services import chern_service, charring_service, ktheory_service
from grasskt.services.errors import ResourceCapExceeded, VerificationFailed
from grasskt.services.poly_service import Polynomial
from grasskt.utils.report_manager import Report

SUITES = ("charring", "barB", "chern", "knk", "all")

# Values of u_1⋯u_m at z0
Z0_PRODUCTS = {8: 1, 12: -1, 16: 1}


def _identity_case(item):
    case, params = item
    return charring_service.verify_identity(case, params).to_json()


def _z0_product(n: int) -> dict:
    m = n // 2
    product = Polynomial.monomial({f"u{j}": 1 for j in range(1, m + 1)})
    value = charring_service.evaluate_at_z0(product, n)
    expected = Z0_PRODUCTS[n]
    return {"case": "z0_product", "params": {"n": n}, "pass": value.x == expected and value.y == 0,
            "value": f"{value.x}+{value.y}i"}


def charring_items(max_m: int, max_st: int, cases=None):
    chosen = cases or charring_service.IDENTITY_CASES
    return [(case, params) for case in chosen
            for params in charring_service.identity_parameter_sets(case, max_m, max_st)]


def _barB_case(item):
    n, k = item
    params = ktheory_service.GrassmannParams.of(n, k)
    checks = ktheory_service.verify_barB(params)
    r = ktheory_service.hopf_class_order(params)
    return [
        {"case": "barB", "params": {"n": n, "k": k}, "pass": all(checks.values()), "checks": checks},
        {"case": "annihilator", "params": {"n": n, "k": k}, "pass": ktheory_service.verify_annihilator(params)},
        {"case": "hopf_squeeze", "params": {"n": n, "k": k}, "pass": 2 * params.l - 1 <= r <= params.m - 1, "r": r},
    ]


def _chern_case(item):
    n, k = item
    checks = (chern_service.verify_ch_surjectivity, chern_service.verify_whitney_sum,
              chern_service.verify_duality, chern_service.verify_vandermonde_recovery)
    return [check(n, k).to_json() for check in checks]


def _vandermonde_dets():
    out = []
    for d in range(1, config.VANDERMONDE_MAX_D + 1):
        det = chern_service.vandermonde_matrix(d).det()
        out.append({"case": "vandermonde_det", "params": {"d": d}, "pass": det != 0, "det": det})
    return out


def _chain_case(item):
    s, t = item
    result = chern_service.verify_eq22_chain(s, t)
    return {"case": "eq22_chain", "params": {"s": s, "t": t}, "pass": result.pop("pass"), **result}


def _compare_case(item):
    n, k = item
    result = chern_service.compare_Knk_K0(n, k)
    return {"case": "knk_vs_k0", "params": {"n": n, "k": k}, "pass": result.pop("pass"),
            **{key: v for key, v in result.items() if key not in ("n", "k")}}


def _flatten(groups):
    return [entry for group in groups for entry in (group if isinstance(group, list) else [group])]


@click.command("verify")
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--max-m", type=click.IntRange(min=1), default=config.CHARRING_MAX_M, show_default=True,
              help="Largest rank m in the character identity suite.")
@click.option("--max-st", type=click.IntRange(min=1), default=config.CHARRING_MAX_ST, show_default=True,
              help="Largest s and t in the character and K̄ suites.")
@click.option("--case", "cases", multiple=True, type=click.Choice(charring_service.IDENTITY_CASES),
              help="Restrict the charring suite to these identity cases.")
@click.option("--cap", type=click.IntRange(min=0), default=None,
              help="Degree cap for subring expressions.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@budget_options
@output_options
def verify(suite, max_m, max_st, cases, cap, jobs, budget_ms, max_steps, fmt, out, timing):
    """
    Runs verification suites and exits with 2 when any case fails.

    Suites: charring (character identities), barB (relations in K⁰),
    chern (rational cohomology and Chern character), knk (the ring K_{n,k}).
    """
    apply_budget(budget_ms, max_steps)
    if max_m > config.CHARRING_MAX_M or max_st > config.CHARRING_MAX_ST:
        raise ResourceCapExceeded(f"--max-m {max_m} / --max-st {max_st} exceed the configured caps "
                                  f"CHARRING_MAX_M={config.CHARRING_MAX_M}, CHARRING_MAX_ST={config.CHARRING_MAX_ST}")
    started = time.monotonic()
    if cap is not None:
        config.SUBRING_DEGREE_CAP = cap
    report = Report("verify", {"suite": suite, "max_m": max_m, "max_st": max_st, "cases": list(cases),
                               "cap": config.SUBRING_DEGREE_CAP})
    chosen = ["charring", "barB", "chern", "knk"] if suite == "all" else [suite]

    if "charring" in chosen:
        for entry in run_cases(_identity_case, charring_items(max_m, max_st, cases), jobs, desc="charring"):
            report.add(entry)
        for n in sorted(Z0_PRODUCTS):
            report.add(_z0_product(n))
    if "barB" in chosen:
        for entry in _flatten(run_cases(_barB_case, config.THEOREM_CASES, jobs, desc="barB")):
            report.add(entry)
    if "chern" in chosen:
        for entry in _flatten(run_cases(_chern_case, config.CHERN_CASES, jobs, desc="chern")):
            report.add(entry)
        for entry in _vandermonde_dets():
            report.add(entry)
    if "knk" in chosen:
        pairs = [(s, t) for s in range(1, max_st + 1) for t in range(1, max_st + 1)]
        for entry in run_cases(_chain_case, pairs, jobs, desc="eq22"):
            report.add(entry)
        for entry in run_cases(_compare_case, config.THEOREM_CASES, jobs, desc="knk"):
            report.add(entry)

    if timing:
        report.timing_ms = {"total": round((time.monotonic() - started) * 1000, 1)}
    write_report(report, fmt, out)
    failures = report.failures
    if failures:
        labels = ", ".join(f"{f['case']} {f.get('params', {})}" for f in failures[:5])
        raise VerificationFailed(f"{len(failures)} case(s) failed: {labels}")
    logger.info(f"All {len(report.results)} verification cases passed")
