"""Instance files, solution records, and the iteration table renderer.

Instance files are comma-separated text::

    job,p,d[,w]
    1,4,6
    2,1,8

Blank lines and lines starting with ``#`` are ignored; a missing weight is 1.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .algorithm import Trace
from .errors import InstanceError, ParseError
from .model import Instance, Job, Sequence, Solution

HEADER = "job,p,d"
WEIGHTED_HEADER = "job,p,d,w"
_INT = re.compile(r"[0-9]+")


def parse_instance(text: str) -> Instance:
    header = None
    columns = 0
    jobs: dict[int, Job] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.replace(" ", "")
            if header not in (HEADER, WEIGHTED_HEADER):
                raise ParseError(f"expected header {HEADER!r} or {WEIGHTED_HEADER!r}, got {line!r}", lineno)
            columns = header.count(",") + 1
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) not in (3, 4):
            raise ParseError(f"expected 3 or 4 fields, got {len(fields)}", lineno)
        if len(fields) != columns:
            raise ParseError(f"{len(fields)}-column record under a {columns}-column header", lineno)
        for f in fields:
            if not _INT.fullmatch(f):
                raise ParseError(f"{f!r} is not a non-negative decimal integer", lineno)
        try:
            job = Job(*(int(f) for f in fields))
        except InstanceError as exc:
            raise ParseError(str(exc), lineno) from None
        if job.id in jobs:
            raise ParseError(f"duplicate job id {job.id}", lineno)
        jobs[job.id] = job
    if header is None:
        raise ParseError("missing header line")
    return Instance(jobs.values(), weighted_format=columns == 4)


def write_instance(instance: Instance) -> str:
    weighted = instance.weighted_format or any(j.w != 1 for j in instance.jobs)
    lines = [WEIGHTED_HEADER if weighted else HEADER]
    for j in instance.jobs:
        lines.append(f"{j.id},{j.p},{j.d},{j.w}" if weighted else f"{j.id},{j.p},{j.d}")
    return "\n".join(lines) + "\n"


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read())


def solution_to_record(solution: Solution) -> dict[str, Any]:
    return {
        "on_time": list(solution.on_time),
        "rejected": list(solution.rejected),
        "completions": {str(k): v for k, v in solution.completion_times.items()},
        "num_late": solution.num_late,
        "weighted_late": solution.weighted_late,
    }


def solution_from_record(record: dict[str, Any]) -> Solution:
    return Solution(
        on_time=Sequence(record["on_time"]),
        rejected=tuple(record["rejected"]),
        completion_times={int(k): v for k, v in record["completions"].items()},
        num_late=record["num_late"],
        weighted_late=record["weighted_late"],
    )


def solution_to_json(solution: Solution) -> str:
    """One-line JSON object; key order is fixed."""
    return json.dumps(solution_to_record(solution), separators=(",", ":"))


def render_trace(instance: Instance, trace: Trace) -> str:
    """Render the trace as the iteration table.

    Column j shows the completion time of the j-th EDD job when the row
    computed it, ``*`` once the job has been rejected, and is blank otherwise.
    """
    edd = list(trace.edd)
    by_id = instance.by_id
    if sorted(edd) != [j.id for j in instance.jobs] or any(
        by_id[j].p != p for j, p in zip(edd, trace.processing)
    ):
        raise InstanceError("trace does not belong to this instance")

    table: list[tuple[str, list[str], str]] = [
        ("EDD sequence:", [str(j) for j in edd], "Rejected Jobs"),
        ("Due date d_j:", [str(by_id[j].d) for j in edd], ""),
        ("Processing time p_j:", [str(by_id[j].p) for j in edd], ""),
    ]
    for i, row in enumerate(trace.rows):
        gone = set(row.rejected_so_far)
        cells = []
        for pos, j in enumerate(edd):
            if j in gone:
                cells.append("*")
            elif pos < row.scanned_positions:
                cells.append(str(row.completions[j]))
            else:
                cells.append("")
        label = "Completion time C_j:" if i == 0 else "C_j:"
        table.append((label, cells, ", ".join(map(str, row.rejected_so_far))))

    label_w = max(len(label) for label, _, _ in table)
    widths = [max(len(cells[c]) for _, cells, _ in table) for c in range(len(edd))]
    lines = []
    for idx, (label, cells, note) in enumerate(table):
        body = " ".join(c.rjust(w) for c, w in zip(cells, widths))
        lines.append(f"{label.rjust(label_w)} | {body} | {note}".rstrip())
        if idx == 2:
            lines.append("-" * len(lines[-1]))
    return "\n".join(lines) + "\n"
