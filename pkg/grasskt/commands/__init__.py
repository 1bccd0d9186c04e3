# Helpers shared by the command modules: output options, budgets and case runners
import functools
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, Tuple

# Command-line framework
import click

# Progress bars on stderr for multi-case runs
from tqdm import tqdm

from config import config, logger
from grasskt.services.errors import InvalidParameters
from grasskt.utils.report_manager import FORMATS, Report, emit_report


def output_options(command):
    """--format, --out and --timing for every report-producing command."""
    command = click.option("--timing", is_flag=True, default=False,
                           help="Add wall-clock timings (the report is then no longer byte-stable).")(command)
    command = click.option("--out", type=click.Path(dir_okay=False), default=None,
                           help="Write the report here instead of stdout.")(command)
    command = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)(command)
    return command


def budget_options(command):
    command = click.option("--max-steps", type=click.IntRange(min=1), default=None,
                           help="Gröbner pair-reduction budget.")(command)
    command = click.option("--budget-ms", type=click.IntRange(min=1), default=None,
                           help="Gröbner wall-clock budget per computation.")(command)
    return command


def apply_budget(budget_ms: Optional[int], max_steps: Optional[int]):
    if budget_ms is not None:
        config.GB_BUDGET_MS = budget_ms
    if max_steps is not None:
        config.GB_MAX_STEPS = max_steps


# Settings a command may override for one run; workers start from the same values
RUN_SETTINGS = ("GB_BUDGET_MS", "GB_MAX_STEPS", "SUBRING_DEGREE_CAP")


def _init_worker(settings: dict):
    for name, value in settings.items():
        setattr(config, name, value)


def run_cases(func: Callable, items: Iterable, jobs: int = 1, desc: str = "cases") -> List:
    """
    Runs func over items, serially or in a process pool; results keep input order.

    Args:
        func: picklable top-level callable taking one item.
        items: the cases.
        jobs: worker count (1 runs in-process).
        desc: progress bar label.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in tqdm(items, desc=desc, disable=len(items) <= 1)]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                             initargs=({name: getattr(config, name) for name in RUN_SETTINGS},)) as pool:
        return list(tqdm(pool.map(func, items), total=len(items), desc=desc))


def write_report(report: Report, fmt: str, out: Optional[str]):
    text = emit_report(report, fmt)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"Report written to {out}")
    else:
        click.echo(text, nl=False)


def parse_range(text: str) -> Tuple[int, int]:
    """"n1..n2" as an inclusive pair."""
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError:
        raise InvalidParameters(f"range {text!r} is not of the form n1..n2")
    if low > high:
        raise InvalidParameters(f"empty range {text!r}")
    return low, high


def timed(func: Callable):
    """Wraps a case function so it returns (result, milliseconds)."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        started = time.monotonic()
        result = func(*args, **kwargs)
        return result, (time.monotonic() - started) * 1000

    return wrapper
