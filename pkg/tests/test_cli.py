import json

import pytest

from plactic_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_object_text(capsys):
    code, out, _ = run(capsys, "object", "--monoid", "stal", "--word", "3613151265")
    assert code == 0
    assert "family: stal" in out
    # insertion memoizes the building word, which is itself a reading word
    assert "reading word: 3613151265" in out


def test_object_json(capsys):
    code, out, _ = run(capsys, "object", "--monoid", "stal", "--word", "3613151265",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["columns"][0] == {"letter": 3, "mult": 2}


def test_object_free_monogenic(capsys):
    code, out, _ = run(capsys, "object", "--monoid", "free1", "--word", "111",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == {"exponent": 3}


def test_render_text_and_dot(capsys):
    code, out, _ = run(capsys, "render", "--monoid", "taig", "--word", "3613151265")
    assert code == 0
    assert "5^2" in out
    code, out, _ = run(capsys, "render", "--monoid", "sylv", "--word", "212",
                       "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    code, out, _ = run(capsys, "render", "--monoid", "baxt", "--word", "212",
                       "--format", "dot")
    assert code == 0
    assert out.count("digraph") == 2
    code, _, err = run(capsys, "render", "--monoid", "stal", "--word", "21",
                       "--format", "dot")
    assert code == 2
    assert "no dot rendering" in err


def test_equiv_exit_codes(capsys):
    code, out, _ = run(capsys, "equiv", "--monoid", "sylv", "--lhs", "212",
                       "--rhs", "212")
    assert code == 0 and "equivalent" in out
    code, out, _ = run(capsys, "equiv", "--monoid", "sylv", "--lhs", "212",
                       "--rhs", "122")
    assert code == 1 and "not equivalent" in out


def test_stats_json(capsys):
    code, out, _ = run(capsys, "stats", "--word", "3613151265", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ip"] == "36152"
    assert data["fp"] == "31265"
    assert data["mix"] == "361351265"
    assert data["ev"]["1"] == 3


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check-identity", "--monoid", "sylv", "--id",
                       "xyxy = yxxy")
    assert code == 0 and "holds" in out
    code, out, _ = run(capsys, "check-identity", "--monoid", "baxt", "--id",
                       "xyxy = yxxy")
    assert code == 1 and "does not hold" in out


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--monoid", "sylv", "--word", "yxsxty")
    assert code == 0
    assert out.strip() == "xysxty"
    code, out, _ = run(capsys, "nf", "--monoid", "sylv", "--word", "212212")
    assert code == 0
    assert out.strip() == "222112"


def test_nf_rejects_families_without_one(capsys):
    code, _, err = run(capsys, "nf", "--monoid", "l21", "--word", "xy")
    assert code == 2
    assert "error" in err


def test_oracle_holds_and_counterexample(capsys):
    code, out, _ = run(capsys, "oracle", "--monoid", "stal", "--id", "xyx = yxx",
                       "--rank", "2", "--max-len", "2")
    assert code == 0 and "holds within bound (49" in out
    code, out, _ = run(capsys, "oracle", "--monoid", "sylv", "--id", "xyx = yxx",
                       "--rank", "2", "--max-len", "1", "--format", "json")
    assert code == 1
    assert json.loads(out) == {"verdict": "counterexample", "sub": {"x": "2", "y": "1"}}


def test_oracle_random_mode(capsys):
    code, out, _ = run(capsys, "oracle", "--monoid", "sylv", "--id", "x = x",
                       "--trials", "5", "--seed", "3")
    assert code == 0 and "holds within bound (5" in out


def test_oracle_rank_violation(capsys):
    code, _, err = run(capsys, "oracle", "--monoid", "free1", "--id", "xy = yx",
                       "--rank", "2")
    assert code == 2 and "error" in err


def test_derive_certificate(capsys):
    code, out, _ = run(capsys, "derive", "--monoid", "sylv", "--id", "xyxy = yxxy")
    assert code == 0
    assert "=>" in out and "rule 0" in out
    code, out, _ = run(capsys, "derive", "--monoid", "sylv", "--id", "xyxy = yxxy",
                       "--format", "json")
    assert code == 0
    steps = json.loads(out)
    assert steps[0]["before"] == "xyxy" and steps[-1]["after"] == "yxxy"


def test_derive_unsatisfied_identity(capsys):
    code, _, err = run(capsys, "derive", "--monoid", "sylv", "--id", "xy = yx")
    assert code == 1
    assert "does not satisfy" in err


def test_derive_trivial_identity(capsys):
    code, out, _ = run(capsys, "derive", "--monoid", "sylv", "--id", "x = x")
    assert code == 0
    assert "empty derivation" in out


def test_derive_search_with_sigma_file(tmp_path, capsys):
    sigma = tmp_path / "rules.txt"
    sigma.write_text("xyx = yxx\n")
    code, out, _ = run(capsys, "derive", "--sigma", str(sigma), "--lhs", "xyxx",
                       "--rhs", "yxxx")
    assert code == 0
    assert "=>" in out
    code, _, err = run(capsys, "derive", "--sigma", str(sigma), "--lhs", "xy",
                       "--rhs", "yx", "--max-steps", "3")
    assert code == 1
    assert "no derivation" in err
    code, _, err = run(capsys, "derive", "--sigma", str(sigma))
    assert code == 2


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["equiv", "--monoid", "nope", "--lhs", "1", "--rhs", "1"])
    assert exc.value.code == 2
    capsys.readouterr()
    code, _, err = run(capsys, "equiv", "--monoid", "sylv", "--lhs", "x1",
                       "--rhs", "11")
    assert code == 2 and "error" in err


def test_missing_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    capsys.readouterr()
