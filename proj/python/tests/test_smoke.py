import json

import pytest

import qhcurve

EX_3_2 = "t^4+t^5, t^7, t^8, t^9"
EX_3_3 = "t^5, t^6, t^8+t^9"


def test_example_3_2():
    report = qhcurve.analyze(EX_3_2)
    assert report["semigroup"]["conductor"] == 7
    assert report["valuation_criterion"]["met"]
    assert report["quasihomogeneous"] is True
    assert report["reparametrization"]["exponents"] == [4, 7, 8, 9]


def test_example_3_3():
    report = qhcurve.analyze(EX_3_3)
    assert report["semigroup"]["gaps"] == [1, 2, 3, 4, 7, 9]
    assert report["trace_criterion"]["quasihomogeneous"] is False
    assert report["h_invariant"] == 6
    assert qhcurve.h_invariant(EX_3_3) == 6
    assert not qhcurve.is_quasihomogeneous(EX_3_3)


def test_semigroup_and_membership():
    sg = qhcurve.semigroup("t^4, t^5, t^6")
    assert sg["conductor"] == 8 and sg["genus"] == 4
    assert qhcurve.contains(EX_3_2, "t^10")
    assert not qhcurve.contains(EX_3_2, "t^6")
    assert qhcurve.contains(EX_3_2, "1 + t^8")


def test_inverse_valuation():
    assert qhcurve.inverse_valuation("t^4, t^5, t^6", ["4*t^3", "5*t^4", "6*t^5"]) == 1
    assert qhcurve.inverse_valuation("t^4, t^5, t^6", ["t^2"]) == -2


def test_errors():
    with pytest.raises(qhcurve.ParseError) as info:
        qhcurve.analyze("t^4, 1/0*t^5")
    assert info.value.kind == "ZeroDenominator"
    assert (info.value.line, info.value.column) == (1, 8)
    with pytest.raises(qhcurve.Error) as info:
        qhcurve.analyze("t^2")
    assert info.value.kind == "RegularRing"
    with pytest.raises(ValueError):
        qhcurve.analyze("t^4, t^6")


def test_cli():
    code, out, err = qhcurve.run_cli(["analyze", EX_3_3, "--json"])
    assert code == 0 and err == ""
    assert json.loads(out)["quasihomogeneous"] is False
    code, _, err = qhcurve.run_cli(["analyze"], stdin="t^2")
    assert code == 1 and "error" in err
