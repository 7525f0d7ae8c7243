"""Numerical checks of sufficient conditions for starlikeness and related classes.

Function, criterion and scan documents are plain dicts in the same JSON shape
the ``gft`` command line accepts.
"""

import json as _json

from . import _gft
from ._gft import GftError, series_div, series_exp_integral, series_mul

__all__ = [
    "GftError",
    "series_mul",
    "series_div",
    "series_exp_integral",
    "normalize_function",
    "function_coeffs",
    "evaluate",
    "count_zeros",
    "synthesize_C",
    "synthesize_Sstar",
    "criterion_value",
    "criterion_bound",
    "circle_extremum",
    "check_hypothesis",
    "check_conclusion",
    "verify_implication",
    "jack_probe",
    "corpus_run",
    "random_polynomial_corpus",
    "standard_criteria",
]


def _doc(d):
    return _json.dumps(d)


def _scan(scan):
    return "" if scan is None else _json.dumps(scan)


def normalize_function(spec):
    return _json.loads(_gft.normalize_function(_doc(spec)))


def function_coeffs(spec):
    return _gft.function_coeffs(_doc(spec))


def evaluate(spec, z):
    """f, f', f'' and (away from poles) G = z f'/f and G' at z."""
    return _gft.evaluate(_doc(spec), complex(z))


def count_zeros(spec, r):
    """(winding number, zeros besides the origin, min |f|) on |z| = r."""
    return _gft.count_zeros(_doc(spec), r)


def synthesize_C(w):
    return _json.loads(_gft.synthesize_C([complex(c) for c in w]))


def synthesize_Sstar(w, alpha):
    return _json.loads(_gft.synthesize_Sstar([complex(c) for c in w], alpha))


def criterion_value(function, criterion, z):
    """(value, flag names) of a criterion functional or membership margin at z."""
    return _gft.criterion_value(_doc(function), _doc(criterion), complex(z))


def criterion_bound(criterion):
    return _gft.criterion_bound(_doc(criterion))


def circle_extremum(function, criterion, r, maximize=True, scan=None):
    """(value, theta, witness) of the criterion quantity on |z| = r."""
    return _gft.circle_extremum(_doc(function), _doc(criterion), r, maximize, _scan(scan))


def check_hypothesis(function, criterion, scan=None):
    return _json.loads(_gft.check_hypothesis(_doc(function), _doc(criterion), _scan(scan)))


def check_conclusion(function, class_spec, scan=None):
    return _json.loads(_gft.check_conclusion(_doc(function), _doc(class_spec), _scan(scan)))


def verify_implication(function, criterion, scan=None):
    return _json.loads(_gft.verify_implication(_doc(function), _doc(criterion), _scan(scan)))


def jack_probe(w, r, scan=None):
    return _json.loads(_gft.jack_probe([complex(c) for c in w], r, _scan(scan)))


def corpus_run(functions, criteria=None, scan=None, workers=0):
    crit = "" if criteria is None else _doc(criteria)
    return _json.loads(_gft.corpus_run(_doc(functions), crit, _scan(scan), workers))


def random_polynomial_corpus(count, rho, seed):
    return _json.loads(_gft.random_polynomial_corpus(count, rho, seed))


def standard_criteria():
    return _json.loads(_gft.standard_criteria())
