"""Frobenius splitting numbers of quotients of polynomial rings.

Every function takes the text of a ring file and returns the same JSON
document the ``fsplit`` command prints, decoded into a dict.
"""

import json
from fractions import Fraction

from ._fsplit import SCHEMA, FsplitError
from . import _fsplit

__all__ = ["SCHEMA", "FsplitError", "se", "signature", "probe", "gorenstein", "fraction"]


def se(spec, e, *, budget=None, oracle=False):
    return json.loads(_fsplit.se(spec, e, budget=budget, oracle=oracle))


def signature(spec, e_max, *, budget=None):
    """s_0 .. s_emax. A budget stop returns the finished part plus an "error" entry."""
    return json.loads(_fsplit.signature(spec, e_max, budget=budget))


def probe(spec, primes=None, *, chains=(), e=1, thresholds="0,1/2,1", budget=None):
    return json.loads(_fsplit.probe(spec, primes, list(chains), e, thresholds, budget=budget))


def gorenstein(spec, *, sop=None, socle=None, e=1, budget=None):
    return json.loads(_fsplit.gorenstein(spec, sop, socle, e, budget=budget))


def fraction(value):
    """Rational string from a report, e.g. "1/4", as a Fraction."""
    return Fraction(value)
