"""Eigenvalues and spectral radius of weighted uniform hypertrees.

Every function takes a hypertree document: a dict in the input schema
({"k", "n", "edges", "vertex_weights", "edge_weights", "weighting"}), a JSON
string, or a path to a JSON file.
"""

import json
import os

from . import _core
from ._core import DomainError, NumericError

__all__ = [
    "DomainError",
    "NumericError",
    "apply",
    "matching_polynomial",
    "mu_tilde",
    "phi",
    "power_spectral_radius",
    "residual",
    "spectral_radius",
    "spectrum",
    "subtrees",
    "validate",
    "verify",
]


def _doc(doc):
    if isinstance(doc, dict):
        return json.dumps(doc)
    if isinstance(doc, (str, os.PathLike)) and os.path.exists(doc):
        with open(doc, encoding="utf-8") as fh:
            return fh.read()
    return doc


def validate(doc):
    return json.loads(_core.validate(_doc(doc)))


def matching_polynomial(doc, enumerate_matchings=False):
    """{"backend", "degree", "coeffs"}, coefficients in ascending degree."""
    fn = _core.matching_polynomial_enumerated if enumerate_matchings else _core.matching_polynomial
    return json.loads(fn(_doc(doc)))


def phi(doc):
    return json.loads(_core.phi(_doc(doc)))


def subtrees(doc):
    return json.loads(_core.subtrees(_doc(doc)))


def spectrum(doc, tol=1e-8, vectors=False):
    return json.loads(_core.spectrum(_doc(doc), tol, vectors))


def verify(doc, report, tol=1e-8):
    if not isinstance(report, str):
        report = json.dumps(report)
    return json.loads(_core.verify(_doc(doc), report, tol))


def spectral_radius(doc):
    return _core.spectral_radius(_doc(doc))


def power_spectral_radius(doc):
    rho, lower, upper, iterations = _core.power_spectral_radius(_doc(doc))
    return {"rho": rho, "lower": lower, "upper": upper, "iterations": iterations}


def apply(doc, x):
    return _core.apply(_doc(doc), [complex(v) for v in x])


def residual(doc, lam, x):
    return _core.residual(_doc(doc), complex(lam), [complex(v) for v in x])


def mu_tilde(doc, lam):
    return _core.mu_tilde(_doc(doc), complex(lam))
