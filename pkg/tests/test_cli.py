import shlex
from pathlib import Path

import pytest

from perfcone.cli import main

GOLDEN_DIR = Path(__file__).parent / "goldens"

DOCUMENTED = [
    ("betti_perf_12_breakdown.txt", "betti --space perf --max-degree 12 --breakdown"),
    ("betti_beta2_8.txt", "betti --space beta2 --max-degree 8"),
    ("betti_matr_12.txt", "betti --space matr --max-degree 12"),
    ("betti_perf_6_csv.csv", "betti --space perf --max-degree 6 --format csv"),
    ("brackets_enum_5.txt", "brackets enum -d 5"),
    ("brackets_multiply_cube.txt", "brackets multiply {1}^3"),
    ("brackets_of_cone_K4-1.txt", "brackets of-cone K4-1"),
    ("brackets_bounds_12.txt", "brackets bounds -d 12"),
    ("strata_count_12.txt", "strata-count -d 12"),
    ("stabilizer_K3.txt", "stabilizer K3"),
    ("molien_C4_6.txt", "molien C4 --max-degree 6"),
    ("koszul_1+1_4.txt", "koszul 1+1 --max-total 4"),
    ("catalog_show_NS.txt", "catalog show NS"),
    ("satake_0.txt", "betti --space satake --max-degree 0"),
]


@pytest.mark.parametrize("golden,command", DOCUMENTED, ids=[g for g, _ in DOCUMENTED])
def test_documented_command_matches_golden(capsys, golden, command):
    code = main(shlex.split(command))
    out = capsys.readouterr().out
    assert code == 0
    assert out == (GOLDEN_DIR / golden).read_text()


def test_quintic_enumeration_prints_16_lines(capsys):
    assert main(["brackets", "enum", "-d", "5"]) == 0
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 16


def test_unknown_space_fails(capsys):
    assert main(["betti", "--space", "everything", "--max-degree", "4"]) == 1
    assert "unknown space" in capsys.readouterr().err


def test_unknown_cone_fails(capsys):
    assert main(["stabilizer", "Zeta"]) == 1
    assert "unknown catalog cone" in capsys.readouterr().err


def test_depth_beyond_catalog_fails(capsys):
    assert main(["betti", "--space", "perf", "--max-degree", "14"]) == 1
    assert "catalog incomplete beyond degree 12" in capsys.readouterr().err


def test_placeholder_has_no_generators(capsys):
    assert main(["stabilizer", "6d-g4-a"]) == 1
    assert "placeholder" in capsys.readouterr().err


def test_json_format(capsys):
    import json

    assert main(["betti", "--space", "satake", "--max-degree", "4", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["space"] == "satake"
    assert doc["entries"][0]["degree"] == 0
    assert {"space", "degree", "stratum", "value"} <= set(doc["entries"][0])


def test_catalog_check_flags(capsys):
    assert main(["catalog", "show", "NS", "--check-flags"]) == 0
    out = capsys.readouterr().out
    assert "recomputed matroidal = False: ok" in out


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "NS" in out and "6d-g6-y" in out


def test_oracle_command(capsys):
    assert main(["brackets", "oracle", "-g", "3", "{1}*{1}"]) == 0
    out = capsys.readouterr().out
    assert "agrees with multiply" in out


def test_voronoi_enumerate(capsys):
    assert main(["voronoi", "enumerate", "-g", "2"]) == 0
    out = capsys.readouterr().out
    assert "1 perfect form class(es)" in out


def test_voronoi_faces_g2(capsys):
    assert main(["voronoi", "faces", "-g", "2", "--max-dim", "6"]) == 0
    out = capsys.readouterr().out
    assert "3 inequivalent face class(es)" in out


@pytest.mark.slow
def test_verify_command_exits_zero(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "result: all checks pass (2 expected discrepancy flagged)" in out
    assert "[FLAG]" in out and "[FAIL]" not in out


def _readme_commands():
    readme = Path(__file__).parent.parent / "README.md"
    commands = []
    for line in readme.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line.startswith("perfcone "):
            commands.append(line[len("perfcone ") :])
    return commands


@pytest.mark.oracle
def test_every_readme_command_runs(capsys):
    commands = _readme_commands()
    assert commands
    for command in commands:
        code = main(shlex.split(command))
        capsys.readouterr()
        assert code == 0, command
