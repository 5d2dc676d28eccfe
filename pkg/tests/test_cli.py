import subprocess
import sys

import pytest

from grundyb.cli import main
from grundyb.families import atom_coloring
from grundyb.io import parse_graph_file, serialize_coloring


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def atom10(tmp_path, capsys):
    g = tmp_path / "t10.txt"
    assert run(capsys, "gen", "Atom", "k=10", "-o", str(g))[0] == 0
    c = tmp_path / "t10.col"
    c.write_text(serialize_coloring(atom_coloring(10)))
    return g, c


def test_gen_writes_provenance(tmp_path, capsys):
    code, out, _ = run(capsys, "--seed", "3", "gen", "RandomTree", "n=9")
    assert code == 0 and out.startswith("# family: RandomTree n=9 seed=3\n9 8\n")
    assert run(capsys, "gen", "RandomTree", "n=9", "--seed", "3")[1] == out
    G, spec = parse_graph_file(out)
    assert G.n == 9 and spec.seed == 3


def test_compute(tmp_path, capsys):
    g = tmp_path / "g.txt"
    run(capsys, "gen", "Gmn", "m=3", "n=2", "-o", str(g))
    assert run(capsys, "compute", "grundy", str(g))[1] == "grundy 4\n"
    cert = tmp_path / "b.col"
    assert run(capsys, "compute", "b", str(g), "--certificate", str(cert))[1] == "b 3\n"
    code, out, _ = run(capsys, "check", "b-valid", str(g), str(cert))
    assert code == 0 and out.startswith("b-valid true witness {1: ")
    assert run(capsys, "compute", "m", str(g))[1] == "m 3\n"
    assert run(capsys, "compute", "girth", str(g))[1] == "girth 3\n"
    run(capsys, "gen", "Atom", "k=3", "-o", str(g))
    assert run(capsys, "compute", "girth", str(g))[1] == "girth inf\n"


def test_check_verdicts(tmp_path, capsys):
    g = tmp_path / "g.txt"
    run(capsys, "gen", "Gmn", "m=2", "n=3", "-o", str(g))
    code, out, _ = run(capsys, "check", "b-monotone", str(g))
    assert code == 1 and out.startswith("b-monotone false witness ")
    code, out, _ = run(capsys, "check", "k4ec4", str(g))
    assert code == 1 and "C4" in out
    run(capsys, "gen", "Fig2", "-o", str(g))
    assert run(capsys, "check", "cactus", str(g))[0] == 0
    assert run(capsys, "check", "pivoted", str(g))[0] == 2  # not a tree
    assert run(capsys, "check", "grundy-valid", str(g))[0] == 2  # coloring missing


def test_recolor_trace(atom10, capsys):
    g, c = atom10
    code, out, _ = run(capsys, "recolor", "cactus", str(g), str(c), "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[-4] == "colors 4" and lines[-1].startswith("dominating ")
    assert any(x.startswith("RECOLOR ") for x in lines)
    again = run(capsys, "recolor", "cactus", str(g), str(c), "--trace")[1]
    assert again == out


def test_recolor_precondition(atom10, tmp_path, capsys):
    g, _ = atom10
    bad = tmp_path / "bad.col"
    bad.write_text(" ".join(["1"] * 512) + "\n")
    code, _, err = run(capsys, "recolor", "cactus", str(g), str(bad))
    assert code == 2 and "Grundy" in err


def test_usage_errors(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text("3 1\n0 3\n")
    code, _, err = run(capsys, "compute", "m", str(g))
    assert code == 2 and "line 2" in err
    assert run(capsys, "compute", "m", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "gen", "Atom", "k")[0] == 2
    run(capsys, "gen", "Atom", "k=10", "-o", str(g))
    code, _, err = run(capsys, "compute", "grundy", str(g))
    assert code == 2 and "search limit" in err
    with pytest.raises(SystemExit) as info:
        main(["verify", "nope"])
    assert info.value.code == 2


def test_verify_and_dot(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "prop4", "kmax=6")
    assert code == 0 and out.endswith("PASS prop4 (10/10 cases)\n")
    assert run(capsys, "verify", "prop4", "bogus=1")[0] == 2
    g = tmp_path / "g.txt"
    run(capsys, "gen", "Gt", "t=3", "-o", str(g))
    dot = tmp_path / "g.dot"
    assert run(capsys, "export-dot", str(g), "-o", str(dot))[0] == 0
    assert dot.read_text().startswith("graph G {")


def test_console_script_module():
    done = subprocess.run([sys.executable, "-m", "grundyb.cli", "verify", "fig2"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and "PASS fig2" in done.stdout
