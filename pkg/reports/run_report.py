"""
Run Reports for Verification Sweeps

Every verify command produces the same shape of result:
1. CaseReport - one parameter tuple and its check result
2. RunReport - command, parameters, overall pass, ordered details, timing
3. run_sweep - evaluates cases in order, optionally across processes
4. write_report / summary_table - JSON output and a pandas summary

Student Guide:
--------------
Why a common report?
- One JSON format for every check, so scripts can read any of them
- pass is ALWAYS the conjunction of the case passes
- Details keep the input order, whatever the parallelism

Determinism:
- ProcessPoolExecutor.map returns results in submission order
- timing_ms is kept off the JSON unless asked for, so two runs of the
  same command write byte-identical files
"""

import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import pandas as pd
from tqdm import tqdm

logger = logging.getLogger(__name__)

Case = Tuple[Callable[..., Dict], Dict[str, Any]]


@dataclass
class CaseReport:
    """One parameter tuple and what its check returned."""

    params: Dict[str, Any]
    result: Dict[str, Any]

    @property
    def passed(self) -> bool:
        return bool(self.result.get("pass", False))

    def to_json(self) -> dict:
        data = {"params": self.params}
        data.update({k: v for k, v in self.result.items() if k != "params"})
        data["pass"] = self.passed
        return data


@dataclass
class RunReport:
    """
    Result of one command.

    Example usage:
        report = RunReport("verify duality", {"kmax": 5})
        report.add(CaseReport({"k": 0, "r": 0}, {"pass": True}))
        report.passed   # True
    """

    command: str
    parameters: Dict[str, Any]
    details: List[CaseReport] = field(default_factory=list)
    timing_ms: float = 0.0

    def add(self, case: CaseReport) -> None:
        self.details.append(case)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.details)

    def first_failure(self) -> Optional[CaseReport]:
        return next((case for case in self.details if not case.passed), None)

    def to_json(self, include_timing: bool = False) -> dict:
        data = {
            "command": self.command,
            "parameters": self.parameters,
            "pass": self.passed,
            "cases": len(self.details),
            "details": [case.to_json() for case in self.details],
        }
        failure = self.first_failure()
        if failure is not None:
            data["first_failure"] = failure.to_json()
        if include_timing:
            data["timing_ms"] = round(self.timing_ms, 3)
        return data


def _run_case(case: Case) -> Dict:
    func, kwargs = case
    return func(**kwargs)


def run_sweep(
    command: str,
    parameters: Dict[str, Any],
    cases: Sequence[Case],
    jobs: int = 1,
    progress: bool = False,
) -> RunReport:
    """
    Evaluate every case and collect an ordered RunReport.

    Args:
        command: Command name for the report
        parameters: The flags that defined the sweep
        cases: (check function, keyword arguments) pairs; the functions
            must be importable module-level functions when jobs > 1
        jobs: Worker processes (1 = in-process)
        progress: Show a tqdm bar on stderr

    Returns:
        RunReport with details in the order of cases
    """
    logger.info(f"🚀 {command}: {len(cases)} case(s), jobs={jobs}")
    report = RunReport(command, parameters)
    start = time.perf_counter()

    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = tqdm(pool.map(_run_case, cases), total=len(cases), desc=command, disable=not progress)
            for (_, kwargs), result in zip(cases, results):
                report.add(CaseReport(dict(kwargs), result))
    else:
        for case in tqdm(cases, desc=command, disable=not progress):
            report.add(CaseReport(dict(case[1]), _run_case(case)))

    report.timing_ms = (time.perf_counter() - start) * 1000
    failed = sum(1 for case in report.details if not case.passed)
    if failed:
        logger.warning(f"❌ {command}: {failed} of {len(report.details)} case(s) failed")
    else:
        logger.info(f"✅ {command}: all {len(report.details)} case(s) passed")
    logger.info(f"📊 {command} finished in {report.timing_ms:.0f} ms")
    return report


def write_json(data: dict, out: Optional[str] = None, stream: TextIO = None) -> None:
    """Write JSON to a file path, or to stdout when out is None or '-'."""
    text = json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"💾 Wrote {out}")
    else:
        (stream or sys.stdout).write(text)


def read_json(path: str) -> Any:
    """
    Load UTF-8 JSON from a path, or from stdin when path is '-'.

    Raises:
        OSError: If the file cannot be read
        json.JSONDecodeError: On malformed JSON
    """
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def write_report(report: RunReport, out: Optional[str] = None, include_timing: bool = False) -> None:
    write_json(report.to_json(include_timing), out)


def summary_table(report: RunReport) -> pd.DataFrame:
    """
    One row per case: the parameters, pass, and the residual size if any.

    Example:
        print(summary_table(report).to_string(index=False))
    """
    rows = []
    for case in report.details:
        row = {key: (str(value) if isinstance(value, (list, tuple)) else value) for key, value in case.params.items()}
        row["pass"] = case.passed
        if "residual_terms" in case.result:
            row["residual_terms"] = case.result["residual_terms"]
        rows.append(row)
    return pd.DataFrame(rows)
