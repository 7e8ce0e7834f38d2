import json
import math
from fractions import Fraction

from polyode.algebra import Polynomial
from polyode.output import document, dumps, poly_latex, solve_csv


def test_dumps_sorted_and_terminated():
    text = dumps({"b": 1, "a": [Fraction(-3, 2), 2.5]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": ["-3/2", 2.5], "b": 1}


def test_float_rendering():
    d = json.loads(dumps({"x": 0.1, "z": -0.0, "i": math.inf, "n": math.nan}))
    assert d == {"x": 0.1, "z": 0, "i": "inf", "n": "nan"}
    assert "0.10000000000000001" in dumps(0.1)


def test_polynomial_and_document():
    d = json.loads(dumps(document("solve", {"n": 1}, {"p": Polynomial([1, -2])}, [])))
    assert d["results"]["p"] == ["1/1", "-2/1"]
    assert d["schema_version"] == "1"
    assert d["diagnostics"] == []


def test_text_formats():
    p = Polynomial([Fraction(-1, 2), 0, 3])
    assert poly_latex(p) == "3x^{2} - \\frac{1}{2}"
    assert poly_latex(Polynomial()) == "0"
    assert solve_csv({"b": Polynomial([1]), "a": Polynomial([0, 1])}).splitlines() == [
        "method,power,coefficient", "a,0,0/1", "a,1,1/1", "b,0,1/1"]
