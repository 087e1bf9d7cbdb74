import pytest

import jcas


def test_poly_arithmetic():
    f = jcas.Poly("x + y")
    g = f ** 2
    assert str(g) == "x^2 + 2*x*y + y^2"
    assert g - f * f == jcas.Poly("0")
    assert jcas.Poly.from_json(g.to_json()) == g
    assert f.vars == ["x", "y"]


def test_bracket():
    x, y = jcas.Poly("x"), jcas.Poly("y")
    assert jcas.bracket(x, y) == jcas.Poly("1")


def test_params_stage():
    p = jcas.params(2, 3, 4, 8, delta=1, i=15)
    assert (p["u"], p["d"], p["e"], p["L"]) == (1, 12, 18, "x+y")
    assert (p["u_E"], p["v_E"], p["u_F"], p["v_F"]) == (2, 6, 4, 7)


def test_decompose():
    d = jcas.decompose("(3*x^2+y)^12 + (3*x^2+y)^4 + 1")
    assert d["E"] == "3*x^2 + y"
    assert d["alpha"]["text"] == "z^12 + z^4 + 1"


def test_generated_pair_and_pipeline():
    ex = jcas.generate("bracket_zero_pair", 2, 3, 2, 4, seed=4)
    F, G = ex["F_text"], ex["G_text"]
    assert jcas.conditions(F, G, 2, 3, 2, 4)["all"]
    run = jcas.pipeline(F, G, 2, 3, 2, 4)
    assert any("vanishes" in c for c in run["conclusions"])
    assert jcas.extract_q(F, 2, 2, 4) == jcas.remainder(F, 2, 2, 4)["Q_text"]


def test_dc_and_shapes():
    assert not jcas.check_dc("x*y", 4, 8, 0, "DSC")["ok"]
    assert jcas.shape_check("(x+1)^2*(x+y)^4", 2, 4, "both") == (True, True)


def test_valqui():
    r = jcas.valqui("x^3", "x^2", 2, 3, order=-4)
    assert r["all"] and r["root_ok"]


def test_reduce_pk():
    assert jcas.reduce_pk(jcas.Poly("x^2 + 2*x*y + y^2"), True, 2).is_zero()


def test_errors_carry_category():
    with pytest.raises(jcas.Error) as info:
        jcas.params(2, 4, 4, 8)
    assert info.value.args[0] == "parameter"
