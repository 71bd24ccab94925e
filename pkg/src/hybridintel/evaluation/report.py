"""Report serialization and the terminal summary table."""

from __future__ import annotations

import json
import math
import os
from typing import TextIO

from .experiment import EvaluationReport


def _sanitize(value):
    """Make every float JSON-strict (inf/nan become strings)."""
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {k: _sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_sanitize(v) for v in value]
    return value


def report_to_json_text(report: EvaluationReport) -> str:
    """Canonical JSON form: identical reports serialize byte-identically."""
    return json.dumps(_sanitize(report.to_obj()), sort_keys=True, indent=2) + "\n"


def save_report(report: EvaluationReport, target: str | os.PathLike | TextIO) -> None:
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(report_to_json_text(report))
        return
    target.write(report_to_json_text(report))


def load_report_obj(source: str | os.PathLike | TextIO) -> dict:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as handle:
            return json.load(handle)
    return json.load(source)


_GROUP_TITLES = (
    ("machine", "Machine predictors"),
    ("crowd", "Crowd predictors"),
    ("strategy", "Aggregation strategies"),
)


def render_text(report_obj: dict | EvaluationReport) -> str:
    """Plain-text summary table for terminals."""
    obj = report_obj.to_obj() if isinstance(report_obj, EvaluationReport) else report_obj
    lines = []
    labels = obj["labels"]
    lines.append(
        f"{obj['n_records']} records "
        f"({labels['positive']} funded / {labels['negative']} not funded), "
        f"{obj['k']}-fold cross-validation"
        f"{' (stratified)' if obj['stratified'] else ''}, seed {obj['seed']}"
    )
    lines.append("")
    header = f"{'method':<34} {'MCC':>8} {'+/-':>7} {'accuracy':>9} {'+/-':>7}"
    for group, title in _GROUP_TITLES:
        rows = [m for m in obj["methods"] if m["group"] == group]
        if not rows:
            continue
        lines.append(title)
        lines.append(header)
        lines.append("-" * len(header))
        for m in rows:
            name = m["method_id"] + (" (baseline)" if m.get("is_baseline") else "")
            lines.append(
                f"{name:<34} {m['mean_mcc']:>8.4f} {m['sd_mcc']:>7.4f} "
                f"{m['mean_accuracy']:>9.4f} {m['sd_accuracy']:>7.4f}"
            )
        lines.append("")

    a = obj["anova"]
    lines.append("Two-way ANOVA on fold MCC (method x fold)")
    lines.append(f"{'source':<10} {'SS':>12} {'df':>5} {'MS':>12} {'F':>10} {'p':>12}")
    lines.append("-" * 66)
    lines.append(
        f"{'method':<10} {a['ss_method']:>12.6f} {a['df_method']:>5} "
        f"{a['ms_method']:>12.6f} {_fmt(a['f_method']):>10} {_fmt(a['p_method'], 4):>12}"
    )
    lines.append(
        f"{'fold':<10} {a['ss_fold']:>12.6f} {a['df_fold']:>5} "
        f"{a['ms_fold']:>12.6f} {_fmt(a['f_fold']):>10} {_fmt(a['p_fold'], 4):>12}"
    )
    lines.append(
        f"{'error':<10} {a['ss_error']:>12.6f} {a['df_error']:>5} {a['ms_error']:>12.6f}"
    )
    lines.append("")
    return "\n".join(lines)


def _fmt(value, digits: int = 3) -> str:
    if isinstance(value, str):  # sanitized inf/nan
        return value
    if isinstance(value, float) and value != 0 and abs(value) < 10 ** -digits:
        return f"{value:.2e}"
    return f"{value:.{digits}f}"
