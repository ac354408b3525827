"""CLI tests: command output, exit codes, determinism, format agreement."""

from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

from pibounds.cli import main


def run_cli(*argv: str, capsys) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestBounds:
    def test_text_96(self, capsys):
        code, out = run_cli("bounds", "--doublings", "5", "--digits", "8",
                            capsys=capsys)
        assert code == 0
        assert "n = 96" in out
        assert "3.14103195" in out
        assert "3.14271460" in out

    def test_text_deep(self, capsys):
        code, out = run_cli("bounds", "--doublings", "13", "--digits", "12",
                            capsys=capsys)
        assert code == 0
        assert "3.141592645034" in out
        assert "3.141592670702" in out

    def test_csv_columns(self, capsys):
        code, out = run_cli("bounds", "--doublings", "1", "--digits", "8",
                            "--format", "csv", capsys=capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["n"] == "6"
        assert set(rows[0]) == {"n", "c_lo", "c_hi", "C_lo", "C_hi"}
        # outward-rounded endpoints straddle the exact perimeter 3
        assert rows[0]["c_lo"] == "2.99999999"
        assert rows[0]["c_hi"] == "3.00000001"
        assert rows[0]["C_lo"] == "3.46410161"

    def test_json_matches_csv(self, capsys):
        code, csv_out = run_cli("bounds", "--doublings", "5", "--format",
                                "csv", capsys=capsys)
        assert code == 0
        code, json_out = run_cli("bounds", "--doublings", "5", "--format",
                                 "json", capsys=capsys)
        assert code == 0
        row = list(csv.DictReader(io.StringIO(csv_out)))[0]
        obj = json.loads(json_out)
        for key in ("c_lo", "c_hi", "C_lo", "C_hi"):
            assert obj[key] == row[key]


class TestTable:
    def test_six_rows_with_symbolic_towers(self, capsys):
        code, out = run_cli("table", "--max-doublings", "5", "--digits", "8",
                            capsys=capsys)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7  # header + six rows
        assert "2.59807621" in out and "3.10582854" in out
        assert "3.14103195" in out and "3.14271460" in out
        assert "48·√(2−√(2+√(2+√3)))/2" in out

    def test_enclosures_bracket_the_classical_prints(self, capsys):
        """Each numeric cell is a two-endpoint enclosure containing the
        classical 8-decimal value within one ulp."""
        from fractions import Fraction
        classical = {"3": ("2.59807621", "5.19615242"),
                     "6": ("3.00000000", "3.46410161"),
                     "12": ("3.10582854", "3.21539031"),
                     "96": ("3.14103195", "3.14271460")}
        code, out = run_cli("table", "--max-doublings", "5", "--digits", "8",
                            "--format", "csv", capsys=capsys)
        assert code == 0
        ulp = Fraction(1, 10**8)
        for row in csv.DictReader(io.StringIO(out)):
            if row["n"] not in classical:
                continue
            c_dec, t_dec = classical[row["n"]]
            assert Fraction(row["c_lo"]) - ulp <= Fraction(c_dec) <= Fraction(row["c_hi"]) + ulp
            assert Fraction(row["C_lo"]) - ulp <= Fraction(t_dec) <= Fraction(row["C_hi"]) + ulp

    def test_single_row(self, capsys):
        code, out = run_cli("table", "--max-doublings", "0", capsys=capsys)
        assert code == 0
        assert len(out.splitlines()) == 2
        assert "3√3/2" in out

    def test_format_agreement(self, capsys):
        """csv, json and text renderings carry identical numeric strings."""
        code, text_out = run_cli("table", "--max-doublings", "5",
                                 "--digits", "8", capsys=capsys)
        code_csv, csv_out = run_cli("table", "--max-doublings", "5",
                                    "--digits", "8", "--format", "csv",
                                    capsys=capsys)
        code_json, json_out = run_cli("table", "--max-doublings", "5",
                                      "--digits", "8", "--format", "json",
                                      capsys=capsys)
        assert code == code_csv == code_json == 0
        csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
        json_rows = json.loads(json_out)["rows"]
        assert len(csv_rows) == len(json_rows) == 6
        for crow, jrow in zip(csv_rows, json_rows):
            for key in ("n", "c_form", "c_lo", "c_hi", "C_form", "C_lo", "C_hi"):
                assert crow[key] == str(jrow[key])
            assert crow["c_lo"] in text_out and crow["c_hi"] in text_out
            assert crow["C_lo"] in text_out and crow["C_hi"] in text_out
            assert crow["c_form"] in text_out
            assert crow["C_form"] in text_out


class TestCf:
    def test_value_157_50(self, capsys):
        code, out = run_cli("cf", "--value", "3.14", capsys=capsys)
        assert code == 0
        assert "[3; 7, 7]" in out
        assert "3/1" in out and "22/7" in out and "157/50" in out

    def test_from_lower_bound(self, capsys):
        code, out = run_cli("cf", "--from-bound", "lower", "--doublings", "5",
                            "--digits", "8", capsys=capsys)
        assert code == 0
        assert "[3; 7, 11, 25, 1, 25, 1, 27, 13]" in out
        assert "below" in out and "above" in out

    def test_zu_chongzhi_convergents(self, capsys):
        code, out = run_cli("cf", "--value", "3.14159267", capsys=capsys)
        assert code == 0
        assert "333/106" in out and "355/113" in out

    def test_malformed_decimal_exits_2(self, capsys):
        assert main(["cf", "--value", "3.14.5"]) == 2

    def test_requires_exactly_one_source(self, capsys):
        assert main(["cf", "--value", "3.14", "--from-bound", "lower"]) == 2
        assert main(["cf"]) == 2


class TestApprox:
    def test_classic(self, capsys):
        code, out = run_cli("approx", "--doublings", "5", "--digits", "8",
                            "--den-cap", "100", capsys=capsys)
        assert code == 0
        assert "245/78 < pi < 22/7" in out
        assert "below" in out and "above" in out

    def test_cap_7(self, capsys):
        code, out = run_cli("approx", "--doublings", "5", "--digits", "8",
                            "--den-cap", "7", capsys=capsys)
        assert code == 0
        assert "3/1 < pi < 22/7" in out

    def test_deep(self, capsys):
        code, out = run_cli("approx", "--doublings", "13", "--digits", "8",
                            "--den-cap", "200", capsys=capsys)
        assert code == 0
        assert "upper = 355/113" in out

    def test_no_valid_bound_exits_4(self, capsys):
        assert main(["approx", "--doublings", "0", "--digits", "8",
                     "--den-cap", "1"]) == 4


class TestSeriesCmd:
    def test_leibniz_3(self, capsys):
        code, out = run_cli("series", "--series", "leibniz", "--terms", "3",
                            capsys=capsys)
        assert code == 0
        assert "3.46666667 (52/15)" in out
        assert len(out.splitlines()) == 3

    def test_viete_interval_row(self, capsys):
        code, out = run_cli("series", "--series", "viete", "--terms", "2",
                            "--digits", "8", capsys=capsys)
        assert code == 0
        assert "3.0614674" in out

    def test_bad_terms_exit_2(self, capsys):
        assert main(["series", "--series", "leibniz", "--terms", "0"]) == 2

    def test_unknown_series_exit_2(self, capsys):
        assert main(["series", "--series", "machin", "--terms", "3"]) == 2


class TestExportFig3:
    def test_row_counts_and_references(self, capsys):
        code, out = run_cli("export-fig3", "--max-doublings", "5",
                            "--digits", "8", capsys=capsys)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,c_n,c_n_hi,C_n,C_n_hi"
        assert len(lines) == 1 + 6 + 4
        labels = [line.split(",")[0] for line in lines[7:]]
        assert labels == ["22/7", "223/71", "245/78", "pi_reference"]

    def test_96_row_matches_classical_values(self, capsys):
        code, out = run_cli("export-fig3", "--max-doublings", "5",
                            "--digits", "8", capsys=capsys)
        row96 = [line for line in out.splitlines()
                 if line.startswith("96,")][0]
        assert "3.14103195" in row96
        assert "3.14271460" in row96

    def test_reference_values(self, capsys):
        code, out = run_cli("export-fig3", "--max-doublings", "0",
                            "--digits", "8", capsys=capsys)
        ref = {line.split(",")[0]: line.split(",")[1]
               for line in out.splitlines()[2:]}
        assert ref["22/7"] == "3.14285714"
        assert ref["223/71"] == "3.14084507"
        assert ref["245/78"] == "3.14102564"
        assert ref["pi_reference"] == "3.14159265"


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert main(["bounds"]) == 2
        assert main(["nonsense"]) == 2

    def test_precision_failure_exits_3(self, capsys):
        assert main(["bounds", "--doublings", "0", "--digits", "8",
                     "--max-precision", "5"]) == 3

    def test_negative_doublings_exit_2(self, capsys):
        assert main(["bounds", "--doublings", "-1"]) == 2


class TestDeterminism:
    def _run(self, *argv: str) -> bytes:
        proc = subprocess.run([sys.executable, "-m", "pibounds", *argv],
                              capture_output=True, check=True)
        return proc.stdout

    def test_table_runs_are_byte_identical(self):
        first = self._run("table", "--max-doublings", "5", "--digits", "8")
        second = self._run("table", "--max-doublings", "5", "--digits", "8")
        assert first == second

    def test_bounds_runs_are_byte_identical(self):
        first = self._run("bounds", "--doublings", "5", "--digits", "8",
                          "--format", "json")
        second = self._run("bounds", "--doublings", "5", "--digits", "8",
                           "--format", "json")
        assert first == second
