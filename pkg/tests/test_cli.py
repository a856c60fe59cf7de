import json

import pytest

from sphtrop.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


@pytest.fixture()
def corpus(tmp_path, capsys):
    for name in ("table1", "table2", "blowup-a4", "p1xp1", "e3"):
        assert main(["examples", name, "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    return tmp_path


E3 = ("2*t + (t^-1 + 3*t^3)*x1 + (7 - t^1000)*x2 - 6*x1^2"
      " + 4*t^-2*x1*x2")


def test_validate_ok_and_invalid(corpus, capsys, tmp_path):
    rc, out = run(capsys, "validate",
                  "--datum", str(corpus / "table1.datum.json"),
                  "--fan", str(corpus / "table1.P2.fan.json"))
    assert rc == 0 and json.loads(out)["ok"]
    # fan missing the origin face
    bad = tmp_path / "bad.fan.json"
    fan = json.loads((corpus / "table1.P2.fan.json").read_text())
    fan["cones"] = [c for c in fan["cones"] if c["generators"]]
    bad.write_text(json.dumps(fan))
    rc, out = run(capsys, "validate",
                  "--datum", str(corpus / "table1.datum.json"),
                  "--fan", str(bad))
    assert rc == 1
    assert any("face-closure" in f for f in json.loads(out)["failures"])


def test_malformed_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    rc, _ = run(capsys, "validate", "--datum", str(bad), "--fan", str(bad))
    assert rc == 2


def test_trop_modes_and_compare(corpus, capsys, tmp_path):
    datum = str(corpus / "blowup-a4.datum.json")
    fan = str(corpus / "blowup-a4.fan.json")
    rc, out = run(capsys, "trop", "--datum", datum, "--fan", fan,
                  "--mode", "both")
    assert rc == 0
    payload = json.loads(out)
    assert len(payload["strata"]) == 4
    assert payload["comparison"]["equal"]

    gr = tmp_path / "gr.json"
    rc, _ = run(capsys, "grtrop", "--datum", datum, "--fan", fan,
                "--out", str(gr))
    assert rc == 0
    rc, out = run(capsys, "compare", str(corpus / "blowup-a4.trop.json"),
                  str(gr))
    assert rc == 0 and json.loads(out)["equal"]
    # unequal comparison exits 1
    rc, _ = run(capsys, "compare", str(corpus / "table2.A4.trop.json"),
                str(gr))
    assert rc == 1


def test_poly_commands(capsys):
    rc, out = run(capsys, "poly", "trop", "--poly", E3, "--weight", "(-2,0)")
    assert rc == 0 and out.strip() == "-4"
    rc, out = run(capsys, "poly", "trop", "--poly", E3, "--weight", "(0,2)")
    assert rc == 0 and out.strip() == "-1"
    rc, out = run(capsys, "poly", "init", "--poly", E3, "--weight", "(-2,0)")
    assert rc == 0 and out.strip() == "-6*x1^2 + 4*x1*x2"
    rc, out = run(capsys, "poly", "hypersurface", "--poly", "x1 + x2 + 1",
                  "--ordinary")
    assert rc == 0 and len(json.loads(out)["cells"]) == 3
    # infinite weight on a Laurent polynomial is an input error
    rc, _ = run(capsys, "poly", "trop", "--poly", "x1^-1 + x2",
                "--weight", "inf,0")
    assert rc == 2


def test_ftt_command(capsys):
    rc, out = run(capsys, "ftt", "--poly", "x1 + x2 + 1", "--ordinary",
                  "--weight", "0,0", "--weight", "inf,0",
                  "--witness", "t; -1 - t")
    assert rc == 0
    data = json.loads(out)
    assert data["ok"]
    assert data["witnesses"][0]["valuations"] == ["1", "0"]


def test_examples_unknown_name(capsys):
    with pytest.raises(SystemExit):
        main(["examples", "nope"])


def test_render(corpus, capsys):
    rc, out = run(capsys, "render", "--trop",
                  str(corpus / "blowup-a4.trop.json"), "--format", "ascii")
    assert rc == 0 and "*" in out
    rc, out = run(capsys, "render", "--trop",
                  str(corpus / "table1.P2.trop.json"))
    assert rc == 0 and out.startswith("<svg")


def test_render_rank3_refused(tmp_path, capsys):
    import sphtrop.jsonio as jsonio
    from sphtrop.polyhedra import Cone
    from sphtrop.spherical import ColoredCone, ColoredFan, SphericalDatum
    from sphtrop.troposphere import tropicalize_embedding

    datum = SphericalDatum(3, Cone.full_space(3), ())
    t = tropicalize_embedding(
        datum, ColoredFan((ColoredCone(Cone.zero(3)),)))
    path = tmp_path / "t3.json"
    path.write_text(jsonio.dumps(jsonio.trop_to_json(t)))
    rc, _ = run(capsys, "render", "--trop", str(path))
    assert rc == 1


def test_golden_corpus_matches_committed_trop(corpus, capsys):
    import sphtrop.jsonio as jsonio
    from sphtrop.examples import all_fans
    from sphtrop.troposphere import tropicalize_embedding

    for name, datum, fan, _ in all_fans():
        if name == "p1xp1":
            path = corpus / "p1xp1.trop.json"
        else:
            table, fname = name.split("/")
            path = corpus / f"{table}.{fname}.trop.json"
        committed = path.read_text()
        fresh = jsonio.dumps(jsonio.trop_to_json(
            tropicalize_embedding(datum, fan)))
        assert committed == fresh, name
