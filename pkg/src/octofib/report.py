"""Audit reports: the machine-readable outcome of checking one claim."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from octofib.rationals import format_rational

PASS = "pass"
FAIL = "fail"
FINDING = "finding"


def _render(value: Any) -> Any:
    """Render exact values for JSON: every number becomes a canonical string."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return value


@dataclass
class AuditReport:
    """Outcome of checking one claim over a finite domain.

    ``failures`` hold counterexamples to identities that must hold;
    ``findings`` hold places where an exact computation disagrees with a
    printed statement without contradicting the checked identity itself.
    """

    claim_id: str
    domain_description: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failures:
            return FAIL
        if self.findings:
            return FINDING
        return PASS

    def add_failure(self, inputs: dict, lhs: Any, rhs: Any) -> None:
        self.failures.append({"inputs": inputs, "lhs": lhs, "rhs": rhs})

    def add_finding(self, what: str, stated: Any, computed: Any) -> None:
        self.findings.append({"what": what, "stated": stated, "computed": computed})

    def check(self, inputs: dict, lhs: Any, rhs: Any) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.add_failure(inputs, lhs, rhs)
            return False
        return True

    def sort_failures(self) -> None:
        self.failures.sort(key=lambda f: sorted((k, str(v)) for k, v in f["inputs"].items()))

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "domain_description": self.domain_description,
            "checked": self.checked,
            "failures": _render(self.failures),
            "findings": _render(self.findings),
            "status": self.status,
        }


def merge(reports: Iterable[AuditReport]) -> AuditReport:
    """Merge partial reports for the same claim (e.g. from sharded ranges)."""
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    ids = {r.claim_id for r in reports}
    if len(ids) != 1:
        raise ValueError(f"cannot merge reports for different claims: {sorted(ids)}")
    out = AuditReport(reports[0].claim_id, reports[0].domain_description)
    for r in reports:
        out.checked += r.checked
        out.failures.extend(r.failures)
        out.findings.extend(r.findings)
    out.sort_failures()
    return out


def summary_line(report: AuditReport) -> str:
    tail = ""
    if report.failures:
        tail = f" ({len(report.failures)} failures)"
    elif report.findings:
        tail = f" ({len(report.findings)} findings)"
    return f"{report.status.upper():8s} {report.claim_id:22s} checked={report.checked}{tail}  [{report.domain_description}]"


def reports_to_json(reports: list[AuditReport], timestamp: str | None = None) -> str:
    doc: dict[str, Any] = {}
    if timestamp is not None:
        doc["timestamp"] = timestamp
    doc["reports"] = [r.to_dict() for r in reports]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def reports_to_markdown(reports: list[AuditReport], timestamp: str | None = None) -> str:
    lines = ["# Audit report", ""]
    if timestamp is not None:
        lines += [f"Generated: {timestamp}", ""]
    lines += ["| claim | status | checked | domain |", "|---|---|---|---|"]
    for r in reports:
        lines.append(f"| {r.claim_id} | {r.status} | {r.checked} | {r.domain_description} |")
    for r in reports:
        if not (r.failures or r.findings):
            continue
        lines += ["", f"## {r.claim_id}", ""]
        for f in _render(r.failures):
            lines.append(f"- failure at {json.dumps(f['inputs'])}: lhs={f['lhs']} rhs={f['rhs']}")
        for f in _render(r.findings):
            lines.append(f"- finding: {f['what']}; stated: {json.dumps(f['stated'])}; computed: {json.dumps(f['computed'])}")
    return "\n".join(lines) + "\n"
