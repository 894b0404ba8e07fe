"""Twist models of elliptic curves from p-torsion points.

Thin wrapper over the C++ core: arguments are ints, Fractions, or
"n/m" strings; reports come back as plain dicts mirroring the CLI JSON.
"""

import json

from twistlib import _core

__all__ = [
    "quartic_model",
    "cubic_model",
    "quartic_local",
    "cubic_local",
    "scan_quartic",
    "scan_cubic",
    "els_candidates_quartic",
    "els_candidates_cubic",
    "bad_primes",
    "verify",
    "TwistError",
    "ResourceError",
]

TwistError = _core.TwistError
ResourceError = _core.ResourceError


def _arg(x):
    return x if isinstance(x, str) else str(x)


def _places(places):
    return [_arg(q) for q in places] if places else []


def quartic_model(a, b, d):
    """The model d*y^2 = A*x^4 + B*x^2 + C twisting y^2 = x^3 + a*x^2 + b*x."""
    return json.loads(_core.quartic_model_json(_arg(a), _arg(b), _arg(d)))


def cubic_model(a, d):
    """The model d*z^3 + 3*d*alpha*z*w + d^2*w^3 + beta = 0 at parameter a."""
    return json.loads(_core.cubic_model_json(_arg(a), _arg(d)))


def quartic_local(a, b, d, q, precision=6):
    """Local verdict at the rational prime q, or at q="real"."""
    return json.loads(_core.quartic_local_json(_arg(a), _arg(b), _arg(d), _arg(q), precision))


def cubic_local(a, d, q, precision=4):
    """Local verdicts at every place above q, or at q="complex"."""
    return json.loads(_core.cubic_local_json(_arg(a), _arg(d), _arg(q), precision))


def scan_quartic(a, b, precision=6, verify_good_primes_below=0, places=None):
    """Full ELS report over the finite candidate set of square-free d."""
    return json.loads(
        _core.scan_quartic_json(_arg(a), _arg(b), precision, verify_good_primes_below,
                                _places(places)))


def scan_cubic(a, precision=4, verify_good_primes_below=0, places=None):
    """Full ELS report over cube-free positive d built from bad primes."""
    return json.loads(
        _core.scan_cubic_json(_arg(a), precision, verify_good_primes_below, _places(places)))


def els_candidates_quartic(a, b):
    return [int(d) for d in _core.els_candidates_quartic(_arg(a), _arg(b))]


def els_candidates_cubic(a):
    return [int(d) for d in _core.els_candidates_cubic(_arg(a))]


def bad_primes(a):
    return [int(q) for q in _core.bad_primes(_arg(a))]


def verify(what="all"):
    """Exact symbolic verifications with a and d symbolic; takes a while."""
    return dict(_core.verify(what))
