import pytest

import negbeta


def test_expand_golden_half():
    r = negbeta.expand("phi", "-1/2", kind="greedy")
    assert r["schema"] == 1
    assert r["expansion"]["digits"] == "(111000)"
    assert r["round_trip"] is True
    assert r["x"]["coeffs"] == ["-1/2", "0"]


def test_expand_kinds():
    assert negbeta.expand("phi", "-1/2", kind="lazy")["expansion"]["digits"] == "1(001110)"
    assert negbeta.expand("phi", "-1/2", kind="is")["expansion"]["digits"] == "(100)"
    assert negbeta.expand("phi", "0")["expansion"]["digits"] == "01(10)"


def test_depth_mode_has_no_round_trip():
    r = negbeta.expand("7/4", "1/3", depth=20)
    assert r["expansion"]["periodic"] is False
    assert len(r["expansion"]["digits"]) == 20
    assert r["round_trip"] is None


def test_compare_chain():
    r = negbeta.compare("phi", "-1/2")
    assert (r["lazy_vs_is"], r["is_vs_greedy"]) == ("LT", "LT")


def test_admissible():
    assert negbeta.admissible("1:1.0:0", "pairs-greedy", base="phi")["verdict"] == "REJECT"
    assert negbeta.admissible("(100)", "binary-is")["verdict"] == "ACCEPT"


def test_alphabet():
    assert [d["value"] for d in negbeta.alphabet("phi")["greedy"]] == ["-phi", "-phi+1", "0"]
    assert negbeta.alphabet("tribonacci")["full"] is True


def test_unique():
    r = negbeta.unique("2.8", depth=10, samples=5)
    assert r["all_unique"] is True
    assert len(r["samples"]) == 5


def test_errors_raise():
    with pytest.raises(ValueError):
        negbeta.expand("phi", "2")
    with pytest.raises(ValueError):
        negbeta.expand("3", "0")
    with pytest.raises(ValueError):
        negbeta.expand("phi", "1/(b-b)")
