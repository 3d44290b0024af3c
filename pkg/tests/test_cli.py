import json

from leafcat.cli import main
from leafcat.graph import read_edge_list, wheel, write_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_roundtrip(capsys):
    code, out, err = run(capsys, "generate", "--family", "wheel", "--param", "10")
    assert code == 0 and err == ""
    assert read_edge_list(out) == wheel(10)


def test_generate_caterpillar(capsys):
    code, out, _ = run(capsys, "generate", "--family", "caterpillar", "--param", "3,1,2")
    assert code == 0
    g = read_edge_list(out)
    assert g.n == 9


def test_generate_dot(capsys):
    code, out, _ = run(capsys, "generate", "--family", "chain", "--param", "3",
                       "--dot", "--highlight", "0,2")
    assert code == 0
    assert "0 [color=blue];" in out and "2 [color=blue];" in out


def test_leaf_function_wheel(capsys):
    code, out, err = run(capsys, "leaf-function", "--family", "wheel", "--param", "10")
    assert code == 0 and err == ""
    assert out.strip().endswith("10 -> -inf, 11 -> -inf")


def test_leaf_function_caterpillar_json(capsys):
    code, out, _ = run(capsys, "--json", "leaf-function", "--caterpillar", "3,1,2")
    assert code == 0
    data = json.loads(out)
    assert data == {"n": 9, "values": [0, 0, 2, 2, 3, 4, 4, 5, 5, 6]}


def test_leaf_function_trivial_caterpillar(capsys):
    code, out, _ = run(capsys, "--json", "leaf-function", "--caterpillar", "2")
    assert json.loads(out)["values"] == [0, 0, 2, 2]


def test_leaf_function_from_file(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(write_edge_list(wheel(4)))
    code, out, _ = run(capsys, "--json", "leaf-function", str(path))
    assert code == 0
    assert json.loads(out)["values"] == [0, 0, 2, 2, "-inf", "-inf"]


def test_leaf_word_wheel(capsys):
    code, out, _ = run(capsys, "leaf-word", "--family", "wheel", "--param", "10")
    assert code == 0
    assert out.strip() == "1,1,1,-3,0,0,w,w"


def test_rc_and_word_of_roundtrip(capsys):
    code, out, _ = run(capsys, "rc", "110101")
    assert code == 0 and out.strip() == "3,1,2"
    code, out, _ = run(capsys, "word-of", "3,1,2")
    assert code == 0 and out.strip() == "110101"


def test_rc_empty(capsys):
    code, out, _ = run(capsys, "rc", "--empty")
    assert code == 0 and out.strip() == "2"


def test_pnf(capsys):
    code, out, _ = run(capsys, "pnf", "00110101100")
    assert code == 0 and out.strip() == "11010110000"


def test_check_pn_pass(capsys):
    code, out, err = run(capsys, "check-pn", "110101")
    assert code == 0 and err == ""


def test_check_pn_fail_cites_witness(capsys):
    code, out, _ = run(capsys, "check-pn", "1101011011")
    assert code == 1
    assert "11010" in out and "11011" in out


def test_check_pn_k(capsys):
    code, _, _ = run(capsys, "check-pn", "1101011011", "--k", "1")
    assert code == 0
    code, _, _ = run(capsys, "check-pn", "1110010011100111", "--k", "1")
    assert code == 1


def test_equiv(capsys):
    assert run(capsys, "equiv", "01", "10")[0] == 0
    assert run(capsys, "equiv", "01", "11")[0] == 1


def test_realize_accepts(capsys):
    code, out, _ = run(capsys, "realize", "0,0,2,2,3,4,4,5,5,6")
    assert code == 0 and out.strip() == "3,1,2"


def test_realize_rejects_with_witness(capsys):
    values = "0,0,2,2,3,4,4,5,5,6,7,7,8,9"  # induced by 1101011011
    code, out, _ = run(capsys, "realize", values)
    assert code == 1
    assert "not-prefix-normal" in out and "11010" in out and "11011" in out


def test_realize_json(capsys):
    code, out, _ = run(capsys, "--json", "realize", "0,0,2,2,3,4,4,5,5,6")
    assert code == 0
    assert json.loads(out) == {"realizable": True, "sequence": "3,1,2"}


def test_poset(capsys):
    code, out, _ = run(capsys, "poset", "--max-size", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert "1,1 < 1,2" in lines and "3 < 2,1" in lines


def test_poset_dot(capsys):
    code, out, _ = run(capsys, "poset", "--max-size", "5", "--dot")
    assert code == 0 and out.startswith("digraph hasse {")


def test_verify_roundtrip_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "roundtrip", "--max-n", "8")
    assert code == 0 and err == ""
    assert "FAIL" not in out
    # the alternate spelling selects the same suite
    code, out2, _ = run(capsys, "verify", "--suite", "theorem53", "--max-n", "8")
    assert code == 0 and out2 == out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--json", "verify", "--suite", "poset", "--max-n", "6")
    assert code == 0
    reports = json.loads(out)
    assert all(r["failures"] == [] for r in reports)
    assert {r["claim"] for r in reports} == {
        "poset-reflexivity", "poset-antisymmetry", "poset-transitivity"}


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "rc", "012")[0] == 2
    assert run(capsys, "leaf-function")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "leaf-function", "/nonexistent/path")[0] == 2


def test_machine_outputs_reparse(capsys):
    # values printed in machine format re-parse to equal values
    from leafcat import catseq as cs
    from leafcat.subtrees import LeafFunction

    code, out, _ = run(capsys, "--json", "leaf-function", "--family", "wheel", "--param", "6")
    lf = LeafFunction.from_json(out)
    from leafcat.graph import wheel as mk
    from leafcat.subtrees import leaf_function_bruteforce

    assert lf == leaf_function_bruteforce(mk(6))
    code, out, _ = run(capsys, "rc", "0101")
    assert cs.parse_sequence(out.strip()) == (1, 1, 2)
