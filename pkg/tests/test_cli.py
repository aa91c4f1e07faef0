"""Command-line interface: behaviour, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from superelliptic.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_text(capsys) -> None:
    code, out, _ = run(capsys, "list", "--genus", "3")
    assert code == 0
    assert "genus 3 (5 rows" in out
    assert out.count("*") >= 2          # two highlighted rows
    assert "V_4 × C_4" in out


def test_list_blue_only_json(capsys) -> None:
    code, out, _ = run(capsys, "list", "--blue-only", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 32              # all highlighted rows, genus 3..10
    assert all(r["highlighted"] for r in rows)
    assert all(r["verdict"] == "possibly_not_definable" for r in rows)


def test_list_is_deterministic(capsys) -> None:
    first = run(capsys, "list")
    second = run(capsys, "list")
    assert first == second


def test_verify_ok_exit_zero(capsys) -> None:
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "total: 224 rows, 0 failure(s), 14 warning(s)" in out


def test_verify_strict_exit_one(capsys) -> None:
    code, out, _ = run(capsys, "verify", "--strict")
    assert code == 1
    assert "14 failure(s)" in out


def test_verify_json(capsys) -> None:
    code, out, _ = run(capsys, "verify", "--genus", "9", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["rows_checked"] == 50
    assert len(payload["warnings"]) == 5


def test_classify_text_and_json(capsys) -> None:
    code, out, _ = run(capsys, "classify", "--genus", "5", "--nr", "12")
    assert code == 0
    assert out == "definable (unique-subgroup descent criterion)\n"
    code, out, _ = run(capsys, "classify", "--genus", "6", "--nr", "9",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "verdict": "possibly_not_definable",
        "reason": None,
        "theorem": "no applicable sufficiency criterion",
    }


def test_classify_uses_repaired_signature(capsys) -> None:
    # the printed signature of this row is unrepairable by one edit; the
    # documented correction makes the verdict negative
    code, out, _ = run(capsys, "classify", "--genus", "6", "--nr", "11")
    assert code == 0
    assert out.startswith("possibly not definable")


def test_levels(capsys) -> None:
    code, out, _ = run(capsys, "levels", "--genus", "5")
    assert code == 0
    assert out.splitlines() == [
        "level 2: 12 branch points",
        "level 3: 7 branch points  (no normal form)",
        "level 6: 4 branch points  (no normal form)",
        "level 11: 3 branch points",
    ]


def test_row_detail(capsys) -> None:
    code, out, _ = run(capsys, "row", "--genus", "9", "--nr", "9",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["signature"] == "4,7^2"
    assert payload["effective_signature"] == "4,7,28"
    assert payload["signature_status"] == "corrected"
    assert payload["branch_points"] == 8
    assert payload["verdict"] == "definable"


def test_unknown_row_is_usage_error(capsys) -> None:
    code, _, err = run(capsys, "classify", "--genus", "3", "--nr", "99")
    assert code == 2
    assert "genus-3" in err


def test_export_dataset_and_reload(capsys, tmp_path) -> None:
    path = tmp_path / "dataset.json"
    code, out, _ = run(capsys, "export", "--what", "dataset", "--out", str(path))
    assert code == 0 and out == ""
    text = path.read_text(encoding="utf-8")
    assert json.loads(text)["version"] == "v1"
    # the exported dataset round-trips through --data
    code, out, _ = run(capsys, "verify", "--data", str(path))
    assert code == 0
    assert "224 rows" in out


def test_export_csv(capsys, tmp_path) -> None:
    path = tmp_path / "g7.csv"
    code, _, _ = run(capsys, "export", "--what", "csv", "--genus", "7",
                     "--out", str(path))
    assert code == 0
    raw = path.read_bytes()
    assert raw.count(b"\r\n") == 28     # header + 27 rows
    assert raw.startswith(b"Nr,reduced_group,")


def test_export_csv_requires_genus(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["export", "--what", "csv"])
    assert exc.value.code == 2


def test_export_blue(capsys) -> None:
    code, out, _ = run(capsys, "export", "--what", "blue")
    assert code == 0
    payload = json.loads(out)
    assert payload["6"] == [9, 10, 13, 15]
    assert payload["10"] == [2, 3, 16, 17, 19, 20, 23]


def test_export_errata(capsys) -> None:
    code, out, _ = run(capsys, "export", "--what", "errata")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["signature_misprints"]) == 11
    assert payload["manual_signature_corrections"][0]["genus"] == 6
    assert len(payload["equation_corrections"]) == 17
    assert payload["label_discrepancies"][0] == {
        "genus": 6, "nr": 20,
        "reason": payload["label_discrepancies"][0]["reason"]}


def test_missing_data_file_is_io_error(capsys) -> None:
    code, _, err = run(capsys, "list", "--data", "/nonexistent/file.json")
    assert code == 3
    assert "error" in err


def test_corrupt_data_file_is_io_error(capsys, tmp_path) -> None:
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "list", "--data", str(path))
    assert code == 3
    assert "invalid dataset" in err


def test_timestamps_flag_adds_marker(capsys) -> None:
    code, out, _ = run(capsys, "levels", "--genus", "2", "--timestamps")
    assert code == 0
    assert out.startswith("# generated 20")
