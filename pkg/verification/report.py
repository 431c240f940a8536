"""Errata report assembly and serialisation."""
from __future__ import annotations

import json
from importlib.metadata import PackageNotFoundError, version

from utils.models import CheckResult, ErrataReport, ReportHeader
from verification.compare import RATIO_BAND
from verification.suite import SuiteConfig

ENGINE = "bargraph-corners"
ERRATA_COLUMNS = ["formula_id", "kind", "status", "index", "part", "expected", "got", "title"]


def engine_version() -> str:
    try:
        return version(ENGINE)
    except PackageNotFoundError:
        return "1.0.0"


def classifier_policy(window: int) -> str:
    return (
        f"ASYMPTOTIC-ONLY when exact and formula values are non-zero on [n_hi-{window}, n_hi], "
        f"the ratios exact/formula are monotone and each lies within {RATIO_BAND} of the last ratio "
        "(relative); otherwise a failed identity is MISMATCH"
    )


def build_report(config: SuiteConfig, results: list[CheckResult]) -> ErrataReport:
    header = ReportHeader(
        engine=ENGINE,
        version=engine_version(),
        configuration=config.as_dict(),
        classifier_policy=classifier_policy(config.asymptotic_window),
    )
    return ErrataReport(header=header, results=results)


def render_json(report: ErrataReport) -> str:
    """Stable text: sorted keys, fixed indentation, no timestamps."""
    return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_rows(report: ErrataReport) -> list[dict[str, str]]:
    """One flat row per check, for CSV and table output."""
    rows = []
    for result in report.results:
        d = result.first_discrepancy
        rows.append(
            {
                "formula_id": result.formula_id,
                "kind": result.kind.value,
                "status": result.status.value,
                "index": "" if d is None else ",".join(map(str, d.index)),
                "part": "" if d is None or d.part is None else d.part,
                "expected": "" if d is None else d.expected,
                "got": "" if d is None else d.got,
                "title": result.title,
            }
        )
    return rows
