"""Machine-readable and human-readable rendering of check results.

The JSON schema is deliberately frozen: residues are decimal strings so
no consumer ever sees integer-width surprises, and key order is fixed so
byte-identical reruns produce byte-identical reports (timestamps can be
suppressed for that purpose).
"""

from __future__ import annotations

import csv
import io
import json
from datetime import datetime, timezone
from typing import Dict, List, Optional, Sequence

from .congruences import CheckResult

CSV_COLUMNS = [
    "check_id",
    "prime",
    "modulus",
    "lhs_residue",
    "rhs_residue",
    "pass",
    "status",
    "strategy",
    "elapsed_ms",
]


def _res_str(r) -> str:
    return "" if r is None else str(int(r))


def result_row(r: CheckResult) -> Dict[str, object]:
    return {
        "check_id": r.check_id,
        "prime": r.prime,
        "modulus": str(r.modulus),
        "lhs_residue": _res_str(r.lhs_residue),
        "rhs_residue": _res_str(r.rhs_residue),
        "pass": r.passed,
        "status": r.status,
        "strategy": r.strategy,
        "elapsed_ms": round(r.elapsed * 1000.0, 3),
    }


def summarize(results: Sequence[CheckResult]) -> Dict[str, object]:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    by_status: Dict[str, Dict[str, int]] = {}
    for r in results:
        key = "skip" if r.passed is None else ("pass" if r.passed else "fail")
        counts[key] += 1
        slot = by_status.setdefault(r.status, {"pass": 0, "fail": 0, "skip": 0})
        slot[key] += 1
    out: Dict[str, object] = dict(counts)
    out["by_status"] = {k: by_status[k] for k in sorted(by_status)}
    return out


def render_json(
    results: Sequence[CheckResult],
    run_info: Optional[Dict[str, object]] = None,
    timestamp: bool = True,
) -> str:
    run: Dict[str, object] = dict(run_info or {})
    if timestamp:
        run["timestamp"] = datetime.now(timezone.utc).isoformat()
    doc = {
        "run": run,
        "results": [result_row(r) for r in results],
        "summary": summarize(results),
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def render_csv(results: Sequence[CheckResult]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in results:
        row = result_row(r)
        row["pass"] = "" if row["pass"] is None else str(row["pass"]).lower()
        w.writerow(row)
    return buf.getvalue()


def render_table(results: Sequence[CheckResult]) -> str:
    headers = ["check", "p", "mod", "status", "strategy", "verdict", "detail"]
    rows: List[List[str]] = []
    for r in results:
        if r.passed is None:
            verdict, detail = "skip", r.skip_reason
        elif r.passed:
            verdict, detail = "pass", r.detail
        else:
            verdict = "FAIL"
            detail = r.detail or f"lhs={_res_str(r.lhs_residue)} rhs={_res_str(r.rhs_residue)}"
        rows.append(
            [r.check_id, str(r.prime), f"p^{r.modulus_exponent}", r.status,
             r.strategy, verdict, detail]
        )
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
        "  ".join("-" * widths[i] for i in range(len(headers))),
    ]
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(row))))
    s = summarize(results)
    lines.append("")
    lines.append(f"pass={s['pass']} fail={s['fail']} skip={s['skip']}")
    return "\n".join(lines) + "\n"


def exit_code(results: Sequence[CheckResult]) -> int:
    """0 if nothing failed; 2 if only conjecture-status checks failed;
    1 if anything with established status failed."""
    failed = [r for r in results if r.passed is False]
    if not failed:
        return 0
    if all(r.status == "conjecture" for r in failed):
        return 2
    return 1
