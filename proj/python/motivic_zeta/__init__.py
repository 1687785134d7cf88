"""Zeta functions of motives, point counts over finite fields and motivic measures.

Arguments accept either JSON text or plain Python objects (dicts and lists in
the CLI input format); results come back as Python objects.
"""

import json

from . import _core
from ._core import InputParseError, MotivicError, PoleError, ResourceError

__all__ = [
    "MotivicError",
    "ResourceError",
    "PoleError",
    "InputParseError",
    "zeta_series",
    "zeta_rational",
    "functional_equation",
    "determinant",
    "traces_to_zeta",
    "count_points",
    "weil_check",
    "hasse_weil",
    "num_grothendieck",
    "measure_eval",
    "non_factoring_witness",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def zeta_series(motive, precision=8):
    return json.loads(_core.zeta_series(_text(motive), precision))


def zeta_rational(motive):
    return json.loads(_core.zeta_rational(_text(motive)))


def functional_equation(motive):
    return json.loads(_core.functional_equation(_text(motive)))


def determinant(motive):
    """Determinant as an "a/b" string."""
    return _core.determinant(_text(motive))


def traces_to_zeta(traces):
    return json.loads(_core.traces_to_zeta([str(t) for t in traces]))


def count_points(variety, n=1, budget=None):
    return int(_core.count_points(_text(variety), n, budget))


def weil_check(variety, dim, n_max=8, budget=None):
    return json.loads(_core.weil_check(_text(variety), dim, n_max, budget))


def hasse_weil(motive, q, s):
    return _core.hasse_weil(_text(motive), q, complex(s))


def num_grothendieck(gram):
    return json.loads(_core.num_grothendieck(_text(gram)))


def measure_eval(cls, q):
    return json.loads(_core.measure_eval(_text(cls), q))


def non_factoring_witness(n, q):
    return json.loads(_core.non_factoring_witness(n, q))
