import json

import pytest
from hypothesis import given

from moorehodgson import Instance, InstanceError, Job, ParseError, completion_times, solve
from moorehodgson.generator import GenSpec, generate
from moorehodgson.instance_io import (
    parse_instance,
    render_trace,
    solution_from_record,
    solution_to_json,
    write_instance,
)

from conftest import MOORE_CSV
from strategies import instances


class TestParse:
    def test_moore(self, moore):
        assert parse_instance(MOORE_CSV) == moore

    def test_header_only(self):
        assert parse_instance("job,p,d\n").n == 0

    def test_comments_and_blank_lines(self, moore):
        text = "# Moore 1968\n\n" + MOORE_CSV.replace("\n", "\n\n", 2) + "# end\n"
        assert parse_instance(text) == moore

    def test_weights(self):
        inst = parse_instance("job,p,d,w\n1,4,6,7\n2,1,8,10\n")
        assert [j.w for j in inst.jobs] == [7, 10]
        assert inst.weighted_format

    def test_duplicate_id(self):
        with pytest.raises(ParseError, match="duplicate") as err:
            parse_instance("job,p,d\n1,4,6\n1,2,3\n")
        assert err.value.line == 3

    @pytest.mark.parametrize(
        "text, line",
        [
            ("job,p,d\n1,4\n", 2),
            ("job,p,d\n1,4,x\n", 2),
            ("job,p,d\n1,-4,6\n", 2),
            ("job,p,d\n0,4,6\n", 2),
            ("job,p,d\n1,4,6,2\n", 2),
            ("job,p,d,w\n1,4,6,1\n2,4,6\n", 3),
            ("id,p,d\n", 1),
        ],
    )
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_instance(text)
        assert err.value.line == line
        assert f"line {line}" in str(err.value)

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_instance("")

    def test_overflow(self):
        big = 2**63
        with pytest.raises(InstanceError, match="overflow"):
            parse_instance(f"job,p,d\n1,{big},0\n2,{big},0\n")


class TestWrite:
    def test_moore(self, moore):
        assert write_instance(moore) == MOORE_CSV
        assert len(MOORE_CSV.splitlines()) == 9

    def test_empty(self):
        assert write_instance(Instance()) == "job,p,d\n"

    def test_weight_column(self):
        assert write_instance(Instance([Job(1, 2, 3, 4)])) == "job,p,d,w\n1,2,3,4\n"
        assert write_instance(parse_instance("job,p,d,w\n1,2,3,1\n")) == "job,p,d,w\n1,2,3,1\n"

    def test_ascending_ids(self):
        inst = Instance([Job(5, 1, 1), Job(2, 1, 1)])
        assert write_instance(inst).splitlines()[1:] == ["2,1,1", "5,1,1"]

    @given(instances(max_n=12, max_value=2**40))
    def test_round_trip(self, inst):
        text = write_instance(inst)
        assert parse_instance(text) == inst
        assert write_instance(parse_instance(text)) == text


class TestSolutionRecord:
    def test_json_round_trip(self, moore):
        solution, _ = solve(moore)
        line = solution_to_json(solution)
        assert "\n" not in line
        record = json.loads(line)
        assert record == {
            "on_time": [1, 2, 4, 5, 7, 8],
            "rejected": [3, 6],
            "completions": {"1": 4, "2": 5, "4": 8, "5": 14, "7": 21, "8": 31},
            "num_late": 2,
            "weighted_late": 2,
        }
        assert solution_from_record(record) == solution


def table_rows(text):
    """Cells between the pipes of each completion-time row, whitespace-normalized."""
    rows = []
    for line in text.splitlines():
        if line.strip().startswith(("Completion time", "C_j")):
            _, cells, note = line.split("|")
            rows.append((cells.split(), note.strip()))
    return rows


class TestRenderTrace:
    def test_moore_table(self, moore):
        solution, trace = solve(moore)
        text = render_trace(moore, trace)
        assert table_rows(text) == [
            ("4 5 11".split(), ""),
            ("4 5 *".split(), "3"),
            ("4 5 * 8 14 22 29".split(), "3"),
            ("4 5 * 8 14 * 21".split(), "3, 6"),
            ("4 5 * 8 14 * 21 31".split(), "3, 6"),
        ]
        header = text.splitlines()[:3]
        assert header[0].split("|")[1].split() == "1 2 3 4 5 6 7 8".split()
        assert header[1].split("|")[1].split() == "6 8 9 11 20 25 28 35".split()
        assert header[2].split("|")[1].split() == "4 1 6 3 6 8 7 10".split()
        assert "Rejected Jobs" in header[0]

    def test_no_late(self):
        inst = Instance.from_columns([1, 2], [5, 5])
        rows = table_rows(render_trace(inst, solve(inst)[1]))
        assert rows == [(["1", "3"], "")]

    def test_mismatch(self, moore):
        _, trace = solve(moore)
        with pytest.raises(InstanceError):
            render_trace(moore.without(1), trace)

    def test_columns_are_aligned(self, moore):
        lines = render_trace(moore, solve(moore)[1]).splitlines()
        bars = {tuple(i for i, ch in enumerate(line) if ch == "|") for line in lines if "|" in line}
        assert len(bars) == 1

    @pytest.mark.parametrize("seed", range(30))
    def test_final_row_consistent(self, seed):
        inst = generate(GenSpec(seed, 9, 20, "tight"))
        solution, trace = solve(inst)
        cells, note = table_rows(render_trace(inst, trace))[-1]
        assert len(cells) == inst.n
        assert cells.count("*") == solution.num_late
        numbers = [int(c) for c in cells if c != "*"]
        assert numbers == list(completion_times(inst, solution.on_time).values())
        assert note == ", ".join(map(str, solution.rejected))
