# JSON serialization of reports with a fixed field order
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

# Flattening nested case results into CSV rows
import pandas as pd

from config import config
from grasskt.services.errors import InvalidParameters

FORMATS = ("json", "md", "csv")


@dataclass
class Report:
    """Everything one CLI invocation produced, in input order."""

    command: str
    settings: Dict[str, object]
    results: List[dict] = field(default_factory=list)
    timing_ms: Optional[Dict[str, float]] = None

    def add(self, result: dict):
        self.results.append(result)

    @property
    def failures(self) -> List[dict]:
        return [r for r in self.results if r.get("pass") is False]

    def summary(self) -> dict:
        return {"cases": len(self.results), "passed": len(self.results) - len(self.failures),
                "failed": len(self.failures)}

    def to_json(self) -> dict:
        out = {
            "tool_version": config.TOOL_VERSION,
            "command": self.command,
            "config": dict(self.settings),
            "results": list(self.results),
            "summary": self.summary(),
        }
        if self.timing_ms is not None:
            out["timing_ms"] = dict(self.timing_ms)
        return out


def _cell(value) -> str:
    if isinstance(value, bool):
        return "pass" if value else "FAIL"
    if isinstance(value, dict):
        return ", ".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return "" if value is None else str(value)


def _markdown_table(headers: List[str], rows: List[List[str]]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines)


def _markdown(report: Report) -> str:
    title = f"# {report.command} (grasskt {config.TOOL_VERSION})"
    settings = ", ".join(f"{k}={v}" for k, v in report.settings.items())
    if report.command == "kgroups":
        headers = ["n", "k", "rank K⁰", "torsion", "r"]
        rows = [[str(r["n"]), str(r["k"]), str(r["K0"]["rank"]),
                 _cell(r["K0"]["invariant_factors"]), str(r["hopf_order_exponent"])] for r in report.results]
    elif report.results and all("case" in r for r in report.results):
        headers = ["case", "params", "pass"]
        rows = [[r["case"], _cell(r.get("params", {})), _cell(r.get("pass"))] for r in report.results]
    else:
        headers = sorted({key for r in report.results for key in r}, key=lambda key: (key not in ("n", "k"), key))
        rows = [[_cell(r.get(h)) for h in headers] for r in report.results]
    summary = report.summary()
    parts = [title, "", f"config: {settings}", ""]
    parts.append(_markdown_table(headers, rows) if headers else "_no results_")
    parts += ["", f"{summary['passed']} of {summary['cases']} cases passed"]
    return "\n".join(parts) + "\n"


def _csv(report: Report) -> str:
    if not report.results:
        return ""
    frame = pd.json_normalize(report.results, sep=".")
    for column in frame.columns:
        frame[column] = frame[column].map(lambda v: _cell(v) if isinstance(v, (list, tuple, dict)) else v)
    return frame.to_csv(index=False)


def emit_report(report: Report, fmt: str = "json") -> str:
    """
    Serializes a report.

    Args:
        report: the accumulated report.
        fmt: json (stable key order), md (tables) or csv (one flattened row per case).

    Returns:
        The serialized text; identical inputs give identical output.
    """
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, ensure_ascii=False, sort_keys=False) + "\n"
    if fmt == "md":
        return _markdown(report)
    if fmt == "csv":
        return _csv(report)
    raise InvalidParameters(f"unknown report format {fmt!r}; choose from {', '.join(FORMATS)}")
