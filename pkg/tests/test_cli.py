import json
import subprocess
import sys

import pytest

from semiinf import affine_weyl as aw
from semiinf import schubert as sb
from semiinf import verify
from semiinf.cli import main
from semiinf.rootsystem import build_root_system


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_order_cmp_chamber(capsys):
    code, out = run(capsys, "order", "cmp", "--type", "A1", "--rel", "chamber:e",
                    '{"translation":[0],"word":[1]}', '{"translation":[1],"word":[1]}')
    assert code == 0 and out["leq"] is True and out["schema"] == 1
    rs = build_root_system("A1")
    from semiinf import orders
    from semiinf.affine_weyl import AffineRoot
    chain = [AffineRoot(rs.root_index[tuple(a["root"])], a["level"]) for a in out["witness_chain"]]
    top = aw.from_json(rs, {"translation": [1], "word": [1]})
    assert orders.replay(rs, top, chain) == aw.finite(rs, 1)


@pytest.mark.parametrize("rel,expected", [("bruhat", False), ("psi:0", True), ("alpha:1", True),
                                          ("chamber:1", False)])
def test_order_cmp_relations(capsys, rel, expected):
    code, out = run(capsys, "order", "cmp", "--type", "A1", "--rel", rel,
                    '{"translation":[0],"word":[1]}', '{"translation":[1],"word":[1]}')
    assert code == 0 and out["leq"] is expected


def test_verify_thm_sch(capsys):
    code, out = run(capsys, "verify", "thm-sch", "--type", "A1", "--max-length", "8")
    assert code == 0 and out["failures"] == [] and out["cases"] == 17


def test_verify_lemma_uses_the_library(capsys):
    code, out = run(capsys, "verify", "lemma", "--name", "k-reg", "--type", "A2",
                    "--window", "samples=20", "--seed", "3")
    assert code == 0
    direct = verify.run("A2", "k-reg", {"samples": 20}, seed=3)
    assert out == direct


def test_verify_reports_failures_with_exit_1(capsys):
    def cases(rs, win, rng):
        return [[0]]

    verify.sweep("cli-fails", {}, "test double")((cases, lambda rs, case, win: {"bad": True}))
    try:
        code, out = run(capsys, "verify", "lemma", "--name", "cli-fails", "--type", "A1")
        assert code == 1 and out["failures"] == [{"bad": True}]
    finally:
        del verify.REGISTRY["cli-fails"]


def test_root_describe(capsys):
    code, out = run(capsys, "root", "describe", "--type", "A2")
    assert code == 0 and len(out["roots"]) == 6


def test_element(capsys):
    code, out = run(capsys, "element", "--type", "A2", '{"translation":[0,0],"word":[1,2,1,2]}')
    assert code == 0 and out["element"] == {"translation": [0, 0], "word": [1, 2]} or out["length"] == 2


def test_malformed_input_exits_2(capsys):
    assert main(["element", "--type", "A2", "{not json"]) == 2
    assert main(["element", "--type", "A2", '{"translation":[1],"word":[]}']) == 2
    assert main(["order", "cmp", "--type", "A2", "--rel", "sideways", '{"translation":[0,0]}',
                 '{"translation":[0,0]}']) == 2
    assert main(["verify", "lemma", "--name", "order", "--type", "A2", "--window", "samples=0"]) == 2
    assert main(["verify", "lemma", "--name", "order", "--type", "A2", "--window", "oops"]) == 2
    assert main(["bogus"]) == 2
    capsys.readouterr()


def test_tuple_commands(capsys):
    code, out = run(capsys, "tuple", "check", "--type", "A1", '{"coords":{"0":1,"1":1}}')
    assert code == 0 and out["admissible"] and out["regularity"] == 2
    bad = '{"entries":{"e":{"translation":[0],"word":[1]},"1":{"translation":[0],"word":[]}}}'
    code, out = run(capsys, "tuple", "check", "--type", "A1", bad)
    assert code == 1 and out["violations"]
    code, out = run(capsys, "tuple", "check", "--type", "A1", "--quasi", bad)
    assert code == 0
    code, out = run(capsys, "tuple", "meet", "--type", "A1", '{"coords":[3,1]}', '{"coords":[2,5]}')
    assert out["coords"] == {"0": 2, "1": 1}
    code, out = run(capsys, "tuple", "coords", "--type", "A1",
                    '{"entries":{"e":{"translation":[1],"word":[]},"1":{"translation":[0],"word":[1]}}}')
    assert code == 0 and out["coords"] == {"0": 1, "1": 0}


def test_schubert_tuple(capsys):
    code, out = run(capsys, "schubert", "tuple", "--type", "A1", '{"translation":[1],"word":[]}')
    assert code == 0 and out["admissible"]
    assert out["entries"] == {"e": {"translation": [1], "word": []}, "1": {"translation": [0], "word": [1]}}


def test_monoid_commands(capsys):
    code, out = run(capsys, "monoid", "hilbert", "--type", "A1", "--sublattice", "[[1]]", "--bound", "6")
    assert code == 0 and len(out["basis"]) == 4 and out["stable"]
    code, out = run(capsys, "monoid", "trunc-check", "--type", "A2", "--sublattice", "[[1,0]]")
    assert code == 2 and out["detail"]["usable_psis"] == []
    code, out = run(capsys, "monoid", "trunc-check", "--type", "A2", "--sublattice", "[[2,1]]")
    assert code == 0 and out["failures"] == [] and out["nonregular_difference"] is not None


def test_plot(capsys, tmp_path):
    svg = tmp_path / "a.svg"
    w = '{"translation":[0,0],"word":[1,2,1]}'
    code, out = run(capsys, "plot", "lower-set", "--type", "A2", "--element", w, "-o", str(svg))
    rs = build_root_system("A2")
    assert code == 0 and out["shaded"] == len(aw.lower_interval(rs, aw.from_word(rs, [1, 2, 1])))
    assert svg.read_text().count('fill="#4a7ab5"') == out["shaded"]
    code, out = run(capsys, "plot", "lower-set", "--type", "A1", "-o", str(tmp_path / "b.svg"))
    assert code == 2
    code, out = run(capsys, "plot", "lower-set", "--type", "A2", "-o", str(tmp_path / "c.svg"))
    assert code == 0 and out["shaded"] == 0


def test_plot_tuple(capsys, tmp_path):
    rs = build_root_system("A2")
    wt = sb.schubert_tuple(rs, aw.from_word(rs, [1, 2], (1, 0)))
    from semiinf import tuples as tp
    code, out = run(capsys, "plot", "lower-set", "--type", "A2", "--tuple",
                    json.dumps(tp.weyl_tuple_to_json(rs, wt)), "-o", str(tmp_path / "t.svg"))
    assert code == 0 and out["shaded"] == len(sb.tuple_fixed_points(rs, wt))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "semiinf", "root", "describe", "--type", "A1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["type"] == "A1"
