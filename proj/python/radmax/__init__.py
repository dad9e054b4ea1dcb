"""Lower bounds for centered maximal operators of radial measures."""

import json

from . import _core
from ._core import (
    BracketError,
    DomainError,
    NoBalancedRadius,
    NonFiniteMeasure,
    NumericalError,
    log_ball_measure,
    log_off_center_ball_measure,
    log_T_exact,
    maximal_function_at,
    run_cli,
)

__all__ = [
    "BracketError",
    "DomainError",
    "NoBalancedRadius",
    "NonFiniteMeasure",
    "NumericalError",
    "gaussian_construction",
    "log_T_exact",
    "log_ball_measure",
    "log_off_center_ball_measure",
    "maximal_function_at",
    "monte_carlo_ball_measure",
    "p0",
    "run_cli",
    "theorem1",
    "unitball_construction",
]


def p0(target, grid=2048, tol=1e-12):
    """Critical exponent search result as a dict."""
    return json.loads(_core.p0_json(target, grid, tol))


def theorem1(measure, n, p, lam, exact_threshold=10_000):
    return json.loads(_core.theorem1_json(measure, n, p, lam, exact_threshold))


def gaussian_construction(n, p, lam, exact_threshold=10_000):
    return json.loads(_core.gaussian_construction_json(n, p, lam, exact_threshold))


def unitball_construction(n, p, R, lam, exact_threshold=10_000):
    return json.loads(_core.unitball_construction_json(n, p, R, lam, exact_threshold))


def monte_carlo_ball_measure(measure, n, d, t, samples=1_000_000, seed=12345):
    return json.loads(_core.monte_carlo_json(measure, n, d, t, samples, seed))
