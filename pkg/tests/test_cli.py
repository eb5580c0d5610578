"""Command-line interface, run in-process."""

import pytest

from isozono.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_builtin(capsys):
    code, out, err = run(capsys, "validate", "--graph", "linf:2")
    assert code == 0
    assert "valid PL graph" in out
    assert "degree\t8" in out


def test_validate_spec_file(capsys, tmp_path):
    f = tmp_path / "demo.graph"
    f.write_text("name demo\ndim 2\ngenerator 1 0\ngenerator 0 1\n")
    code, out, _ = run(capsys, "validate", "--spec", str(f))
    assert code == 0
    assert "demo" in out


def test_validate_bad_spec_file_exits_2(capsys, tmp_path):
    f = tmp_path / "bad.graph"
    f.write_text("name bad\ndim 2\ngenerator 2 4\ngenerator 0 1\n")
    code, _, err = run(capsys, "validate", "--spec", str(f))
    assert code == 2
    assert "error:" in err and "primitive" in err


def test_boundary_grid(capsys, tmp_path):
    pts = tmp_path / "grid.txt"
    pts.write_text("\n".join(f"{x} {y}" for x in range(3) for y in range(3)) + "\n")
    code, out, _ = run(capsys, "boundary", "--graph", "l1:2", "--set", str(pts))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "12"
    assert lines[1] == "generator\tprojections\tgaps"
    assert any(line.startswith("identity\t12\tok") for line in lines)


def test_boundary_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "boundary", "--graph", "l1:2",
                       "--set", str(tmp_path / "nope.txt"))
    assert code == 2
    assert "error:" in err


def test_zonotope_fvector_and_volume(capsys):
    code, out, _ = run(capsys, "zonotope", "--graph", "linf:3", "--fvector")
    assert code == 0
    assert out.strip() == "96 144 50"
    code, out, _ = run(capsys, "zonotope", "--graph", "linf:2", "--volume")
    assert code == 0
    assert out.strip() == "28"


def test_zonotope_support_and_summary(capsys):
    code, out, _ = run(capsys, "zonotope", "--graph", "linf:3",
                       "--support", "1 0 0")
    assert code == 0
    assert out.strip() == "9"
    code, out, _ = run(capsys, "zonotope", "--graph", "linf:2")
    assert code == 0
    assert "vertices\t8" in out and "volume\t28" in out


def test_zonotope_original_coords_d4(capsys):
    code, out, _ = run(capsys, "zonotope", "--graph", "d4cross",
                       "--original-coords")
    assert code == 0
    assert "vertices\t192" in out
    assert "volume\t10176" in out


def test_section_central_homothetic(capsys):
    code, out, _ = run(capsys, "section", "--graph", "linf:3",
                       "--axis", "1", "--level", "0")
    assert code == 0
    assert "homothetic to linf:2 zonotope\tyes\tscale 3" in out


def test_section_interior_not_homothetic(capsys):
    code, out, _ = run(capsys, "section", "--graph", "linf:3",
                       "--axis", "1", "--level", "3")
    assert code == 0
    assert "vertices\t16" in out
    assert "homothetic to linf:2 zonotope\tno" in out


def test_section_axis_out_of_range(capsys):
    code, _, err = run(capsys, "section", "--graph", "linf:3",
                       "--axis", "4", "--level", "0")
    assert code == 2
    assert "error:" in err


def test_section_empty_exits_2(capsys):
    code, _, err = run(capsys, "section", "--graph", "linf:3",
                       "--axis", "1", "--level", "10")
    assert code == 2
    assert "error:" in err


def test_search_exhaustive(capsys):
    code, out, _ = run(capsys, "search", "--graph", "linf:2", "--m", "4",
                       "--box-radius", "2")
    assert code == 0
    assert "min_boundary\t20" in out
    assert "exhaustive\ttrue" in out


def test_search_local_mode(capsys):
    code, out, _ = run(capsys, "search", "--graph", "tri", "--m", "7",
                       "--mode", "local", "--iterations", "2000", "--seed", "1")
    assert code == 0
    assert "min_boundary\t18" in out
    assert "exhaustive\tfalse" in out


def test_search_budget_exceeded_exits_2(capsys):
    code, _, err = run(capsys, "search", "--graph", "linf:2", "--m", "12",
                       "--box-radius", "6", "--budget", "100")
    assert code == 2
    assert "error:" in err


def test_search_out_prefix_writes_files(capsys, tmp_path):
    prefix = tmp_path / "run"
    code, out, _ = run(capsys, "search", "--graph", "l1:2", "--m", "4",
                       "--box-radius", "2", "--out", str(prefix))
    assert code == 0
    assert (tmp_path / "run.tsv").exists()
    witnesses = list(tmp_path.glob("run.witness-*.txt"))
    assert witnesses


def test_converge_rows(capsys):
    code, out, _ = run(capsys, "converge", "--graph", "l1:2",
                       "--alphas", "10,50")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("alpha\tpoints\tvolume")
    row10 = lines[1].split("\t")
    assert row10[0] == "10" and row10[1] == "441"


def test_converge_alpha_range_syntax(capsys):
    code, out, _ = run(capsys, "converge", "--graph", "l1:2",
                       "--alphas", "1:3")
    assert code == 0
    assert len(out.splitlines()) == 4  # header + 3 rows


def test_render_svg_file(capsys, tmp_path):
    out_path = tmp_path / "z.svg"
    code, out, _ = run(capsys, "render", "--graph", "linf:2",
                       "--out", str(out_path))
    assert code == 0
    assert f"wrote {out_path}" in out
    assert out_path.read_text().startswith("<svg")


def test_render_off_file(capsys, tmp_path):
    out_path = tmp_path / "z.off"
    code, out, _ = run(capsys, "render", "--graph", "linf:3",
                       "--out", str(out_path))
    assert code == 0
    assert out_path.read_text().startswith("OFF")


def test_render_4d_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "render", "--graph", "d4cross",
                       "--out", str(tmp_path / "z.off"))
    assert code == 2
    assert "error:" in err


def test_reproduce_single_item(capsys):
    code, out, _ = run(capsys, "reproduce", "--only", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS   5")
    assert lines[-1] == "1/1 items passed"


def test_reproduce_unknown_item_exits_2(capsys):
    code, _, err = run(capsys, "reproduce", "--only", "99")
    assert code == 2
    assert "error:" in err


def test_graph_and_spec_mutually_exclusive(capsys, tmp_path):
    f = tmp_path / "g.graph"
    f.write_text("name g\ndim 2\ngenerator 1 0\ngenerator 0 1\n")
    with pytest.raises(SystemExit):
        main(["validate", "--graph", "l1:2", "--spec", str(f)])
