"""Correlation coefficient of symmetric vortex polygons.

Closed forms return exact rationals as :class:`fractions.Fraction`; the
quantities that are multiples of pi return the rational factor q of q*pi.
"""

import json
from fractions import Fraction

from . import _glcorr
from ._glcorr import (
    GlcorrError,
    II_by_gamma,
    I_by_f_bracket,
    I_by_series,
    a0_numeric,
    alpha,
    alpha_prime_at_vortex,
    beta_direct,
    counterterm,
    energy_gradient_norm,
    gamma_at_one,
    gamma_by_angular_quadrature,
    gamma_by_residue,
    gamma_closed,
    landscape_sweep,
    minimize_model,
    minimize_model_golden,
    model_energy,
    power_sum,
    raw_integrand,
    regularized_integral,
    rho_gamma_integral,
    set_thread_count,
    tail_integral_check,
    thread_count,
)


def _fraction(pair):
    return Fraction(*pair)


def beta(n):
    return _fraction(_glcorr.beta(n))


def I_value(n):
    """q with I = q*pi."""
    return _fraction(_glcorr.I_value(n))


def II_value(n):
    """q with II = q*pi."""
    return _fraction(_glcorr.II_value(n))


def correlation_coefficient(n, m=1):
    """q with A_0 = q*pi (always 0)."""
    return _fraction(_glcorr.correlation_coefficient(n, m))


def ovsi_partial(n, m=1):
    """q with m^4 I / 4 = q*pi."""
    return _fraction(_glcorr.ovsi_partial(n, m))


def symmetric_config(n, m=1):
    return [(pos, _fraction(q)) for pos, q in _glcorr.symmetric_config(n, m)]


def identity_report(max_n=6, tol=1e-8):
    return json.loads(_glcorr.identity_report_json(max_n, tol))


def quadrature_report(max_n=5):
    return json.loads(_glcorr.quadrature_report_json(max_n))


def landscape_report():
    return json.loads(_glcorr.landscape_report_json())
