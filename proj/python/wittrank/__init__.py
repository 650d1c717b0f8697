"""Witt-rank lower bounds for hermitian forms over Q(t).

Every function takes and returns plain Python data (dicts, lists, strings);
rationals are exact strings such as "-1/4".
"""

import json

from . import _wittrank
from ._wittrank import Error, InputError, MathError

__all__ = [
    "Error",
    "InputError",
    "MathError",
    "diagonalize",
    "signature",
    "rank",
    "realize",
    "norm_ball",
    "knot",
    "normalize_expr",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def diagonalize(form):
    return json.loads(_wittrank.diagonalize(_text(form)))


def signature(form, plot=0):
    return json.loads(_wittrank.signature(_text(form), plot))


def rank(form):
    return json.loads(_wittrank.rank(_text(form)))


def realize(step):
    return json.loads(_wittrank.realize(_text(step)))


def norm_ball(form1, form2, norm="s"):
    return json.loads(_wittrank.norm_ball(_text(form1), _text(form2), norm))


def knot(fixtures, expr=None):
    return json.loads(_wittrank.knot(_text(fixtures), expr))


def normalize_expr(text):
    return _wittrank.normalize_expr(text)
