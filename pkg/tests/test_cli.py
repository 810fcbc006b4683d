import json

import pytest

from mapquot import jsonio
from mapquot.cli import main
from mapquot.maps import PlaneMap, unrooted_code

from fixtures import hexagon_wheel, square_map, w_fan


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestSeriesCommand:
    def test_q_development(self, capsys):
        code, out = run_cli(capsys, "series", "--name", "q", "--order", "8")
        assert code == 0
        payload = json.loads(out)
        assert payload["coeffs"][-2:] == ["408", "1938"]

    def test_two_point(self, capsys):
        code, out = run_cli(
            capsys, "two-point", "--family", "tri_simple", "--i", "2", "--order", "6"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["coeffs"] == ["0", "1", "5", "28", "172", "1129", "7782"]

    def test_deterministic_output(self, capsys):
        _, out1 = run_cli(capsys, "series", "--name", "t", "--order", "10")
        _, out2 = run_cli(capsys, "series", "--name", "t", "--order", "10")
        assert out1 == out2


class TestEnumerateCommand:
    def test_count_only(self, capsys):
        code, out = run_cli(
            capsys,
            "enumerate",
            "--inner-degree", "4", "--outer-degree", "4",
            "--size", "4", "--simple", "--count-only",
        )
        assert code == 0
        assert json.loads(out.strip().splitlines()[-1])["count"] == 6

    def test_streams_valid_records(self, capsys):
        code, out = run_cli(
            capsys,
            "enumerate",
            "--inner-degree", "4", "--outer-degree", "4",
            "--size", "3", "--simple",
        )
        lines = out.strip().splitlines()
        assert json.loads(lines[-1])["count"] == 2
        for line in lines[:-1]:
            jsonio.parse_map(json.loads(line))

    def test_cap_is_a_usage_error(self, capsys):
        code, _ = run_cli(
            capsys,
            "enumerate",
            "--inner-degree", "4", "--outer-degree", "4",
            "--size", "9", "--simple", "--count-only",
        )
        assert code == 2


class TestQuotientCommands:
    def test_unroll_then_classic_round_trip(self, capsys, monkeypatch):
        import io, sys

        fan = w_fan()
        record = jsonio.dumps(jsonio.map_record(fan, pointed=fan.vertex_of[5]))
        monkeypatch.setattr(sys, "stdin", io.StringIO(record))
        code, out = run_cli(capsys, "quotient", "unroll", "--k", "3")
        assert code == 0
        sym_record = json.loads(out)
        assert sym_record["k"] == 3
        m = PlaneMap(sym_record["sigma"], sym_record["root"])
        wheel = hexagon_wheel()
        assert unrooted_code(m, pointed=sym_record["pointed"]) == unrooted_code(
            wheel, pointed=wheel.inner_vertices()[0]
        )

        monkeypatch.setattr(sys, "stdin", io.StringIO(out))
        code, out2 = run_cli(capsys, "quotient", "classic")
        assert code == 0
        back = json.loads(out2)
        m2 = PlaneMap(back["sigma"], back["root"])
        assert unrooted_code(m2, pointed=back["pointed"]) == unrooted_code(
            fan, pointed=fan.vertex_of[5]
        )

    def test_orient(self, capsys, monkeypatch):
        import io, sys

        record = jsonio.dumps(jsonio.map_record(square_map()))
        monkeypatch.setattr(sys, "stdin", io.StringIO(record))
        code, out = run_cli(capsys, "orient")
        assert code == 0
        assert json.loads(out)["orient"] == [None, None, None, None]


class TestVerifyCommand:
    def test_single_fast_check(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--suite", "series_golden", "--max-size", "small"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["results"][0]["check"] == "series_golden"

    def test_unknown_check_is_usage_error(self, capsys):
        code, _ = run_cli(capsys, "verify", "--suite", "nonsense")
        assert code == 2


class TestRenderCommand:
    def test_square_renders_polygon(self, capsys, monkeypatch):
        import io, sys

        record = jsonio.dumps(jsonio.map_record(square_map()))
        monkeypatch.setattr(sys, "stdin", io.StringIO(record))
        code, out = run_cli(capsys, "render")
        assert code == 0
        assert out.startswith("<svg")
        assert out.count("<line") == 4

    def test_degenerate_map_gets_schematic(self, capsys, monkeypatch):
        import io, sys

        record = jsonio.dumps(jsonio.map_record(PlaneMap([1, 0], 0)))
        monkeypatch.setattr(sys, "stdin", io.StringIO(record))
        code, out = run_cli(capsys, "render")
        assert code == 0
        assert "<text" in out
