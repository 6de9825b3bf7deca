"""Python access to the sharphardy checks.

Reports come back as dicts with the same fields the CLI prints as JSON.
"""

import json
import math

from . import _core
from ._core import Error, InputError, NumericError, bliss_star, case_ids, run, sharp_constant

__version__ = _core.__version__

__all__ = [
    "Error",
    "InputError",
    "NumericError",
    "bliss_star",
    "case_ids",
    "equality",
    "lorentz",
    "run",
    "sharp_constant",
    "verify",
]


def _one(text):
    rows = json.loads(text)
    return rows[0] if isinstance(rows, list) else rows


def verify(case_id, f, p, *, q=2.0, alpha=1.0, beta=1.0, a=0.0, ell=math.nan, tol=1e-5,
           log_weight="corrected", bliss_form="corrected", seed=None):
    """Checks one catalogue inequality at the function spec f ('random' draws one from seed)."""
    return _one(_core.verify_json(case_id, f, p, q, alpha, beta, a, ell, tol, log_weight, bliss_form, seed))


def equality(case_id, c, p, *, q=2.0, alpha=1.0, beta=1.0, a=0.0, ell=math.nan):
    """Checks the case at its extremal family member with scale c."""
    return _one(_core.equality_json(case_id, c, p, q, alpha, beta, a, ell))


def lorentz(which, f, p, q, *, ell=math.inf, tol=1e-5):
    """Compares Lorentz quasi-norms; which is 'plain', 'target' or 'dual'."""
    return _one(_core.lorentz_json(which, f, p, q, ell, tol))
