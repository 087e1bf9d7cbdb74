"""Exact polynomial algebra for Jacobian-pair reduction experiments.

Polynomials in x, y are passed as strings such as ``"(x+1)*(x+y)^2"`` or as
:class:`Poly` values. Structured results come back as plain dicts.
"""

import json

from . import _jcas
from ._jcas import Error, Poly, bracket, extract_q, reduce_pk, shape_check

__all__ = [
    "Error",
    "Poly",
    "bracket",
    "check_dc",
    "conditions",
    "decompose",
    "extract_q",
    "generate",
    "magnus",
    "params",
    "pipeline",
    "reduce_pk",
    "remainder",
    "shape_check",
    "valqui",
]


def _text(p):
    return str(p)


def params(a, b, m, n, delta=1, i=0):
    return json.loads(_jcas.params_json(a, b, m, n, delta, i))


def conditions(F, G, a, b, m, n):
    return json.loads(_jcas.conditions_json(_text(F), _text(G), a, b, m, n))


def decompose(Q):
    return json.loads(_jcas.decompose_json(_text(Q)))


def remainder(F, a, m, n):
    return json.loads(_jcas.remainder_json(_text(F), a, m, n))


def magnus(F, G, w="(1,1)"):
    return json.loads(_jcas.magnus_json(_text(F), _text(G), w))


def check_dc(Fcirc, m, n, i, mode="DC"):
    return json.loads(_jcas.check_dc_json(_text(Fcirc), m, n, i, mode))


def generate(kind="bracket_zero_pair", a=2, b=3, m=2, n=4, delta=1, density=0.5, seed=0):
    return json.loads(_jcas.generate_json(kind, a, b, m, n, delta, density, seed))


def pipeline(F, G, a, b, m, n, only_i=None):
    return json.loads(_jcas.pipeline_json(_text(F), _text(G), a, b, m, n, only_i))


def valqui(F, G, a, b, order=-6):
    return json.loads(_jcas.valqui_json(_text(F), _text(G), a, b, order))
