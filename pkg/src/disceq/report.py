"""Machine-readable reports: plain JSON with a fixed schema.

Everything except ``generated_at`` is a deterministic function of the
instance, so two runs differ only in that field.
"""
from __future__ import annotations

import json
from collections import Counter
from datetime import datetime, timezone

import jsonschema

from .instances import load_schema
from .modules import QuotientReport
from .rings import RingPresentation
from .solver import SolutionReport, fmt_poly

SCHEMA_VERSION = 1
TIMESTAMP_FIELD = "generated_at"


def text(x) -> str:
    if hasattr(x, "fmt"):
        return x.fmt()
    return str(x)


def ring_block(A: RingPresentation) -> dict:
    return {"names": list(A.var_names),
            "relations": [r.fmt(list(A.var_names)) for r in A.relations]}


def quotient_block(qr: QuotientReport) -> dict:
    w = qr.witness
    steps = []
    for st in w.get("steps", []):
        layers = [{"prime": L.prime, "multiplier": L.multiplier, "size": L.size}
                  for L in st.layers]
        steps.append({"generator": text(st.generator),
                      "colon": [text(j) for j in st.colon_gens],
                      "integer": st.integer,
                      "primes": list(st.primes),
                      "size": st.size,
                      "layers": layers})
    out = {"finite": qr.finite,
           "representatives": [text(r) for r in qr.representatives],
           "primes": sorted(set(qr.primes)),
           "steps": steps}
    if "scale" in w:
        out["scale"] = text(w["scale"])
    if "intersection" in w:
        out["intersection"] = [text(x) for x in w["intersection"]]
    return out


def verdict_counts(report: SolutionReport) -> dict:
    return dict(sorted(Counter(t.verdict for t in report.trace).items()))


def solution_block(report: SolutionReport, trace: bool = False, strategy: str = "") -> dict:
    A = report.ring
    if report.kind == "poly":
        reps = [fmt_poly(A, F) for F in report.representatives]
        coeffs = [[text(c) for c in F] for F in report.representatives]
    else:
        reps = [text(a) for a in report.representatives]
        coeffs = [[text(c) for c in a.coords] for a in report.representatives]
    out = {"kind": report.kind,
           "representatives": reps,
           "coefficients": coeffs,
           "class_count": len(reps),
           "complete": report.complete,
           "strategy": strategy,
           "candidates": [text(e) for e in report.candidates.elements],
           "quotient": quotient_block(report.quotient_report),
           "verdicts": verdict_counts(report),
           "notes": list(report.notes)}
    if trace:
        out["trace"] = [{"gammas": list(t.gammas), "verdict": t.verdict,
                         "base": list(t.base) if t.base is not None else None,
                         "shifts": list(t.shifts), "produced": list(t.produced)}
                        for t in report.trace]
    return out


def build_report(command: str, status: str, exit_code: int, *, instance=None, name: str = "",
                 ring: RingPresentation | None = None, result=None, message=None,
                 condition=None, self_check=None) -> dict:
    rep = {"schema_version": SCHEMA_VERSION,
           "command": command,
           "instance": instance,
           "status": status,
           "exit_code": exit_code,
           TIMESTAMP_FIELD: datetime.now(timezone.utc).isoformat(timespec="seconds")}
    if name:
        rep["name"] = name
    if ring is not None:
        rep["ring"] = ring_block(ring)
    if result is not None:
        rep["result"] = result
    if message is not None:
        rep["message"] = message
    if condition is not None:
        rep["condition"] = condition
    if self_check is not None:
        rep["self_check"] = self_check
    return rep


def validate_report(rep: dict) -> None:
    jsonschema.validate(rep, load_schema("report.schema.json"))


def dumps(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(rep: dict, path: str) -> None:
    validate_report(rep)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(rep))


def strip_timestamp(rep: dict) -> dict:
    return {k: v for k, v in rep.items() if k != TIMESTAMP_FIELD}
