import json
import math

import pytest

import spchain
from spchain.solver.reports import (
    RunConfig,
    RunReport,
    ValidationRecord,
    render_csv,
    render_json,
    render_report,
)
from spchain.utils.chain_geometry import detect_staircase, line_instance
from spchain.utils.exceptions import BadCardinality, ConfigError, NonPositiveQ
from spchain.utils.selection import Objective, select_mpd, select_sp

FRONT = [(0, 5), (2, 3), (2.5, 2.5), (4, 0.5), (5, 0)]


def selection_report(objective: Objective, k: int, output_format: str = "json") -> RunReport:
    red, inst = line_instance(FRONT, q=1.0)
    select = select_sp if objective is Objective.SP else select_mpd
    config = RunConfig(input_path="front.csv", objective=objective, k=k, output_format=output_format)
    return RunReport(config=config, reduction=red, selection=select(inst, k))


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(input_path="front.csv")
        assert config.objective is Objective.SP
        assert config.k is None
        assert config.q == 1.0
        assert config.index_base == 1
        assert config.as_dict()["version"] == spchain.__version__

    @pytest.mark.parametrize(
        "kwargs, error",
        [
            ({"k": 0}, BadCardinality),
            ({"q": 0.0}, NonPositiveQ),
            ({"q": -2.0}, NonPositiveQ),
            ({"objective": "hv"}, ConfigError),
            ({"output_format": "xml"}, ConfigError),
            ({"max_brute_n": 0}, ConfigError),
        ],
    )
    def test_rejects(self, kwargs, error):
        with pytest.raises(error) as excinfo:
            RunConfig(input_path="front.csv", **kwargs)
        assert excinfo.value.exit_code == 2


class TestValidationRecord:
    def test_pass(self):
        record = ValidationRecord.compare(2.5, 2.5 + 1e-12, 1e-9)
        assert record.passed
        assert record.as_dict()["pass"] is True

    def test_fail(self):
        record = ValidationRecord.compare(2.5, 2.6, 1e-9)
        assert not record.passed
        assert record.abs_delta == pytest.approx(0.1)

    def test_infinite(self):
        record = ValidationRecord.compare(math.inf, math.inf, 1e-9)
        assert record.passed
        assert record.abs_delta == 0.0
        assert record.as_dict()["oracle_value"] == "inf"


class TestRender:
    def test_json(self):
        data = json.loads(render_json(selection_report(Objective.SP, 3)))
        assert data["selection"]["rows"] == [1, 3, 5]
        assert data["selection"]["reduced_indices"] == [1, 3, 5]
        assert data["selection"]["value"] == pytest.approx(1.0 + 2.0 * math.tanh(2.5), abs=1e-12)
        assert data["selection"]["objective"] == "sp"
        assert data["reduction"]["sigma"] == [1, -1]
        assert data["reduction"]["t"] == [-5.0, -1.0, 0.0, 3.5, 5.0]
        assert data["reduction"]["order"] == [1, 2, 3, 4, 5]
        assert data["validation"] is None

    def test_json_round_trips_floats(self):
        report = selection_report(Objective.SP, 3)
        data = json.loads(render_json(report))
        assert data["selection"]["value"] == report.selection.value

    def test_json_floats_use_shortest_repr(self):
        tokens = []
        json.loads(render_json(selection_report(Objective.SP, 3)), parse_float=tokens.append)
        assert tokens
        for token in tokens:
            assert token == repr(float(token))
            mantissa = token.lower().split("e")[0].replace("-", "").replace(".", "")
            assert len(mantissa.lstrip("0")) <= 17

    def test_mpd_singleton(self):
        data = json.loads(render_json(selection_report(Objective.MPD, 1)))
        assert data["selection"]["value"] == "inf"
        assert data["selection"]["gap_contributions"] == []

    def test_rows_follow_input_order(self):
        shuffled = [FRONT[i] for i in (4, 2, 0, 3, 1)]
        red, inst = line_instance(shuffled)
        config = RunConfig(input_path="front.csv", k=3)
        report = RunReport(config=config, reduction=red, selection=select_sp(inst, 3))
        assert report.rows == [3, 2, 1]

    def test_csv_selection(self):
        lines = render_csv(selection_report(Objective.SP, 3)).splitlines()
        assert lines[0] == "rank,row,reduced_index,t,gap_contribution,objective,value"
        assert len(lines) == 4
        first = lines[1].split(",")
        assert first[:4] == ["1", "1", "1", "-5"]
        assert first[4] == ""
        assert float(lines[2].split(",")[4]) == pytest.approx(math.tanh(2.5), abs=1e-15)

    def test_csv_reduction(self):
        report = RunReport(config=RunConfig(input_path="front.csv"), reduction=detect_staircase(FRONT))
        assert render_csv(report).splitlines() == [
            "position,row,t",
            "1,1,-5",
            "2,2,-1",
            "3,3,0",
            "4,4,3.5",
            "5,5,5",
        ]

    def test_dispatch(self):
        assert render_report(selection_report(Objective.SP, 3, "csv")).startswith("rank,")
        assert render_report(selection_report(Objective.SP, 3)).startswith("{")

    def test_deterministic(self):
        assert render_json(selection_report(Objective.SP, 3)) == render_json(
            selection_report(Objective.SP, 3)
        )
