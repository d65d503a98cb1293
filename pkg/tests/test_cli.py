import json
import random
from fractions import Fraction

import pytest

from symop import cli, identities as idn, partitions as pt, symfunc as sf
from symop.reporting import Failure


def test_parse_product_ast():
    node = cli.parse("s[2,1]*s[1]")
    assert node == ("mul", ("s", (2, 1)), ("s", (1,)))


def test_parse_kron_ast():
    node = cli.parse("kron(s[2,1], s[2,1])")
    assert node[0] == "kron"


def test_parse_rejects_bad_partition():
    with pytest.raises(cli.ParseError) as err:
        cli.parse("s[1,2]")
    assert "weakly decreasing" in str(err.value)


def test_parse_reports_position():
    with pytest.raises(cli.ParseError) as err:
        cli.parse("s[2,1] + + s[1]")
    assert "position" in str(err.value)


def test_evaluate_examples():
    assert cli.evaluate_text("s[1]*s[1]") == sf.SymFunc("s", {(2,): 1, (1, 1): 1})
    assert cli.evaluate_text("kron(s[2,1], s[2,1])") == sf.SymFunc(
        "s", {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    )
    assert cli.evaluate_text("sk[2,1/1]") == sf.SymFunc("s", {(2,): 1, (1, 1): 1})
    assert cli.evaluate_text("s[0]") == sf.one()
    assert cli.evaluate_text("2 - 1/2") == sf.scale(Fraction(3, 2), sf.one())
    assert cli.evaluate_text("h[2,1] - e[2]*p[1]") == sf.add(
        sf.to_basis(sf.h((2, 1)), "s"),
        sf.scale(-1, sf.mul(sf.to_basis(sf.e(2), "s"), sf.schur((1,)))),
    )
    assert cli.evaluate_text("s[1]^3") == sf.mul(
        sf.schur((1,)), sf.mul(sf.schur((1,)), sf.schur((1,)))
    )


def test_parse_operator():
    expr = cli.parse_operator("U[1]D[1] - Id")
    got = expr.apply(sf.schur((2, 1)))
    want = sf.SymFunc("s", {(2, 1): 1, (3,): 1, (1, 1, 1): 1})
    assert got == want
    kp = cli.parse_operator("K(p[2])U(p[1])")
    assert kp.apply(sf.schur((2,))).is_zero()
    scaled = cli.parse_operator("1/2*(U[1] + U[1])")
    assert scaled.apply(sf.one()) == sf.schur((1,))


def test_cmd_expand(capsys):
    assert cli.main(["expand", "s[2,1]*s[1]"]) == 0
    assert capsys.readouterr().out.strip() == "s[3,1] + s[2,2] + s[2,1,1]"
    assert cli.main(["expand", "s[0]"]) == 0
    assert capsys.readouterr().out.strip() == "s[0]"


def test_cmd_expand_json_round_trip(capsys):
    assert cli.main(["expand", "kron(s[2,1], s[2,1])", "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert sf.from_json(blob) == cli.evaluate_text("kron(s[2,1], s[2,1])")


def test_cmd_kron(capsys):
    assert cli.main(["kron", "s[2,1]", "s[2,1]"]) == 0
    assert capsys.readouterr().out.strip() == "s[3] + s[2,1] + s[1,1,1]"


def test_cmd_skew(capsys):
    assert cli.main(["skew", "3,1/1"]) == 0
    assert capsys.readouterr().out.strip() == "s[3] + s[2,1]"


def test_cmd_lrcoeff(capsys):
    assert cli.main(["lrcoeff", "3,2,1", "2,1", "2,1"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cmd_kroncoeff(capsys):
    assert cli.main(["kroncoeff", "2,1", "2,1", "2,1"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_cmd_char(capsys):
    assert cli.main(["char", "2,1", "1,1,1"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cmd_verify_pass(capsys):
    assert cli.main(["verify", "kb1", "--max-g", "8"]) == 0
    out = capsys.readouterr().out
    assert "kb1: PASS" in out


def test_cmd_verify_json(capsys):
    assert cli.main(["verify", "gessel_1", "--max-ab", "2", "--max-g", "2",
                     "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob[0]["identity"] == "gessel_1" and blob[0]["passed"]


def test_cmd_verify_failure_exit_code(monkeypatch, capsys):
    entry = idn.Entry(
        "always_fails",
        "test fixture",
        lambda bounds: [{}],
        lambda prm: (1, [Failure({}, sf.one(), sf.zero())]),
    )
    monkeypatch.setitem(idn.CATALOG, "always_fails", entry)
    assert cli.main(["verify", "always_fails"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cmd_apply(capsys):
    assert cli.main(["apply", "U[1]D[1] - Id", "s[2,1]"]) == 0
    assert capsys.readouterr().out.strip() == "s[3] + s[2,1] + s[1,1,1]"


def test_cmd_matrix(capsys):
    assert cli.main(["matrix", "K(p[2])U(p[1])", "--max-deg", "2",
                     "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert all(x == "0" for row in blob["entries"] for x in row)


def test_cmd_rank(capsys):
    assert cli.main(["rank", "U[1]D[1];D[1]U[1];Id", "--max-deg", "3"]) == 0
    assert "rank 2 of 3: dependent at this truncation" in capsys.readouterr().out
    assert cli.main(["rank", "U[1];U[2]", "--max-deg", "3"]) == 0
    assert "rank 2 of 2: independent" in capsys.readouterr().out


def test_cmd_skewlr(capsys):
    assert cli.main(["skewlr", "1/0", "2,1/1"]) == 0
    assert capsys.readouterr().out.strip() == "s[3] + 2*s[2,1] + s[1,1,1]"
    assert cli.main(["skewlr", "1/0", "2,1/1", "--terms"]) == 0
    out = capsys.readouterr().out
    assert "- sk[2,1/0]" in out and "+ sk[3,1/1]" in out


def test_cmd_skewpieri(capsys):
    assert cli.main(["skewpieri", "1", "2,1/1"]) == 0
    assert capsys.readouterr().out.strip() == "s[3] + 2*s[2,1] + s[1,1,1]"


def test_cmd_skewcorners(capsys):
    assert cli.main(["skewcorners", "2,1", "1"]) == 0
    assert capsys.readouterr().out.strip() == "s[2] + s[1,1]"


def test_cmd_jdt(capsys):
    blob = json.dumps(
        {"shape": "2,2/2", "entries": [[1, 0, 5], [1, 1, 5]], "holes": [[0, 1]]}
    )
    assert cli.main(["jdt", blob, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    step = out["steps"][0]
    assert step["vacated"] == [1, 1]
    assert step["shape"] == "2,1/1"
    assert step["entries"] == [[0, 1, 5], [1, 0, 5]]
    assert cli.main(["jdt", "{bad json"]) == 2


def test_cmd_jdt_text(capsys):
    blob = json.dumps(
        {"shape": "2,2/2", "entries": [[1, 0, 5], [1, 1, 5]], "holes": [[0, 1]]}
    )
    assert cli.main(["jdt", blob]) == 0
    assert "vacated [1, 1]" in capsys.readouterr().out


def test_usage_errors_exit_2(capsys):
    assert cli.main(["expand", "s[1,2]"]) == 2
    assert "weakly decreasing" in capsys.readouterr().err
    assert cli.main(["expand", "s[2,1"]) == 2
    capsys.readouterr()
    assert cli.main(["lrcoeff", "1,2", "1", "1"]) == 2
    capsys.readouterr()
    assert cli.main(["no_such_command"]) == 2
    capsys.readouterr()


def _random_symfunc(rng):
    basis = rng.choice("shep")
    terms = {}
    for _ in range(rng.randint(1, 5)):
        lam = rng.choice(pt.partitions_upto(6))
        coef = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        terms[lam] = terms.get(lam, 0) + coef
    return sf.SymFunc(basis, terms)


def test_parse_render_identity_on_random_values():
    rng = random.Random(20240517)
    for _ in range(100):
        f = _random_symfunc(rng)
        back = cli.evaluate_text(sf.render(f))
        assert back == sf.to_basis(f, "s")


def test_json_round_trip_on_random_values():
    rng = random.Random(99)
    for _ in range(50):
        f = _random_symfunc(rng)
        assert sf.from_json(json.loads(json.dumps(sf.to_json(f)))) == f
