"""Report assembly: deterministic JSON and a markdown rendering.

Reports are byte-identical for identical (problem, seed) inputs: keys are
sorted, ordering of all lists is deterministic, and wall-clock timings are
only included when explicitly requested (they are the one intentionally
nondeterministic field).
"""

from __future__ import annotations

import json

from . import __version__


def report_skeleton(field_desc: str, seed: int) -> dict:
    return {
        "engine_version": __version__,
        "field": field_desc,
        "seed": seed,
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _md_table(headers, rows):
    out = ["| " + " | ".join(headers) + " |"]
    out.append("|" + "|".join(" --- " for _ in headers) + "|")
    for row in rows:
        out.append("| " + " | ".join(str(x) for x in row) + " |")
    return out


def _interval_text(lo, hi):
    left = "(-inf" if lo is None else f"[{lo}"
    right = "inf)" if hi is None else f"{hi})"
    return f"{left}, {right}"


def run_report_markdown(report: dict) -> str:
    lines = [
        "# lclab report",
        "",
        f"- engine version: {report['engine_version']}",
        f"- field: {report['field']}",
        f"- seed: {report['seed']}",
        "",
    ]
    for result in report.get("results", []):
        task = result["task"]
        lines.append(f"## task `{task}`")
        lines.append("")
        if result["status"] != "ok":
            err = result["error"]
            lines.append(f"**{result['status']}** ({err['kind']}): {err['message']}")
            lines.append("")
            continue
        data = result["data"]
        if task == "local_cohomology":
            lines += _md_table(
                ["j", "nonzero", "witness degree"],
                [
                    [v["j"], v["nonzero"], v["witness"]]
                    for v in data["verdicts"]
                ],
            )
            lines.append("")
            lines.append(f"cohomological dimension: **{data['cd']}**")
            if "chambers" in data:
                lines.append("")
                lines += _md_table(
                    ["chamber", "dims h^0..h^i"],
                    [
                        [
                            " x ".join(
                                _interval_text(lo, hi)
                                for lo, hi in ch["intervals"]
                            ),
                            ch["dims"],
                        ]
                        for ch in data["chambers"]
                    ],
                )
        elif task == "saturation":
            lines.append(f"- rank: {data['rank']}")
            lines.append(f"- saturated: {data['saturated']}")
            lines.append(f"- witness: {data['witness']}")
            lines.append(f"- Hilbert basis: {data['hilbert_basis']}")
        else:
            for key in sorted(data):
                lines.append(f"- {key}: {data[key]}")
        lines.append("")
    return "\n".join(lines) + "\n"


def battery_report_markdown(report: dict) -> str:
    lines = [
        "# lclab verification battery",
        "",
        f"- engine version: {report['engine_version']}",
        f"- field: {report['field']}",
        f"- seed: {report['seed']}",
        f"- all passed: **{report['all_passed']}**",
        "",
    ]
    lines += _md_table(
        ["check", "result", "details"],
        [
            [c["name"], "pass" if c["passed"] else "FAIL", c["details"]]
            for c in report["checks"]
        ],
    )
    lines.append("")
    for c in report["checks"]:
        if not c["passed"] and "counterexample" in c:
            lines.append(f"counterexample for `{c['name']}`:")
            lines.append("")
            lines.append("```json")
            lines.append(json.dumps(c["counterexample"], indent=2, sort_keys=True))
            lines.append("```")
            lines.append("")
    return "\n".join(lines) + "\n"
