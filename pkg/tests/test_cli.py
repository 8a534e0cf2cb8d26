from pathlib import Path

import pytest

from disassoc.cli import main

from _fixtures import MEDICAL_ROWS, SHOWCASE_ROWS


def write_input(tmp_path, rows=MEDICAL_ROWS, name="data.txt"):
    path = tmp_path / name
    path.write_text("\n".join(" ".join(r) for r in rows) + "\n", "utf-8")
    return str(path)


class TestExitCodes:
    def test_usage_error_missing_input(self, capsys):
        assert main(["anonymize"]) == 1
        assert "required" in capsys.readouterr().err

    def test_usage_error_bad_size_list(self, tmp_path, capsys):
        data = write_input(tmp_path)
        assert main(["anonymize", "--input", data, "--max-cluster-size", "six"]) == 1

    def test_usage_error_multiple_sizes_for_single_commands(self, tmp_path):
        data = write_input(tmp_path)
        assert main(["anonymize", "--input", data, "--max-cluster-size", "4,8"]) == 1

    def test_usage_error_size_below_k(self, tmp_path):
        data = write_input(tmp_path)
        assert main(["anonymize", "--input", data, "-k", "3", "--max-cluster-size", "2"]) == 1

    def test_data_error_missing_file(self, tmp_path, capsys):
        assert (
            main(
                [
                    "anonymize",
                    "--input",
                    str(tmp_path / "missing.txt"),
                    "--max-cluster-size",
                    "6",
                    "--output",
                    str(tmp_path),
                ]
            )
            == 2
        )
        assert "data error" in capsys.readouterr().err

    def test_infeasible_oracle_exit_code(self, tmp_path):
        # chunk2 holds five 'e' sub-records against ten records:
        # C(10,5) = 252 alignments, over the tiny limit
        rows = [["a", "b", "c"]] * 5 + [["a", "b", "e"]] + [["e"]] * 4
        data = write_input(tmp_path, rows)
        code = main(
            [
                "oracle",
                "--input",
                data,
                "-k",
                "2",
                "--max-cluster-size",
                "12",
                "--limit",
                "2",
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 3
        assert (tmp_path / "out" / "oracle.csv").exists()


class TestPipelines:
    def test_anonymize_then_covers(self, tmp_path, capsys):
        data = write_input(tmp_path)
        out = tmp_path / "out"
        assert (
            main(
                [
                    "anonymize",
                    "--input",
                    data,
                    "-k",
                    "3",
                    "-m",
                    "2",
                    "--max-cluster-size",
                    "6",
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        tstar_path = out / "tstar.txt"
        assert tstar_path.exists()
        assert (
            main(
                [
                    "covers",
                    "--input",
                    str(tstar_path),
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        covers_csv = (out / "covers.csv").read_text("utf-8")
        assert "SideEffects" in covers_csv and "Cancer" in covers_csv

    def test_attack_gen_strong(self, tmp_path):
        data = write_input(tmp_path)
        out = tmp_path / "out"
        assert (
            main(
                [
                    "attack-gen",
                    "--input",
                    data,
                    "--attacker",
                    "strong",
                    "--max-cluster-size",
                    "6",
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        text = (out / "knowledge.txt").read_text("utf-8")
        assert text.startswith("#knowledge attacker=strong")
        assert "0\tSideEffects Cancer" in text  # cover pair, items in id order

    def test_audit_command(self, tmp_path, capsys):
        data = write_input(tmp_path)
        out = tmp_path / "out"
        assert (
            main(
                [
                    "audit",
                    "--input",
                    data,
                    "-k",
                    "3",
                    "--max-cluster-size",
                    "6",
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        report = (out / "audit_report.txt").read_text("utf-8")
        assert "total: 1" in report
        assert "total vulnerable records: 1" in capsys.readouterr().out

    def test_oracle_command_ok(self, tmp_path):
        data = write_input(tmp_path, SHOWCASE_ROWS)
        out = tmp_path / "out"
        assert (
            main(
                [
                    "oracle",
                    "--input",
                    data,
                    "-k",
                    "2",
                    "--max-cluster-size",
                    "4",
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        body = (out / "oracle.csv").read_text("utf-8")
        assert "ok,1,1" in body  # vulnerable + deanonymized verdict row

    def test_experiment_command(self, tmp_path):
        data = write_input(tmp_path)
        out = tmp_path / "out"
        assert (
            main(
                [
                    "experiment",
                    "--input",
                    data,
                    "-k",
                    "3",
                    "--max-cluster-size",
                    "4,6",
                    "--seed",
                    "1",
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        lines = (out / "sweep.csv").read_text("utf-8").splitlines()
        assert len(lines) == 3

    def test_weak_attacker_needs_lexicon(self, tmp_path):
        data = write_input(tmp_path)
        assert (
            main(
                [
                    "attack-gen",
                    "--input",
                    data,
                    "--attacker",
                    "weak",
                    "--max-cluster-size",
                    "6",
                    "--output",
                    str(tmp_path / "out"),
                ]
            )
            == 1
        )

    def test_weak_pool_exceeding_vocabulary_is_data_error(self, tmp_path):
        # the medical vocabulary has 7 items, below the weak attacker's
        # default internal pool of 10
        data = write_input(tmp_path)
        lex = tmp_path / "lex.txt"
        lex.write_text("\n".join(f"ext{i}" for i in range(15)) + "\n", "utf-8")
        code = main(
            [
                "attack-gen",
                "--input",
                data,
                "--attacker",
                "weak",
                "--max-cluster-size",
                "6",
                "--lexicon",
                str(lex),
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 2

    def test_weak_attacker_with_lexicon(self, tmp_path):
        rows = [[f"w{i}", f"w{i + 1}", f"w{i + 2}"] for i in range(12)]
        data = write_input(tmp_path, rows)
        lex = tmp_path / "lex.txt"
        lex.write_text("\n".join(f"ext{i}" for i in range(15)) + "\n", "utf-8")
        out = tmp_path / "out"
        assert (
            main(
                [
                    "attack-gen",
                    "--input",
                    data,
                    "--attacker",
                    "weak",
                    "--max-cluster-size",
                    "6",
                    "--lexicon",
                    str(lex),
                    "--seed",
                    "5",
                    "--output",
                    str(out),
                ]
            )
            == 0
        )
        text = (out / "knowledge.txt").read_text("utf-8")
        assert text.startswith("#knowledge attacker=weak m=2 seed=5\n")
        assert len(text.splitlines()) == 1 + 190
