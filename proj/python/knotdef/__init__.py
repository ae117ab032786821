"""Exact knot invariants, definiteness certificates and periodicity checks.

Matrices are lists of integer rows. Laurent polynomials are lists of
``(exponent, coefficient)`` pairs in ascending exponent order. Curves are
closed vertex lists ``[[r, theta_turns, z], ...]`` whose entries may be
``int``, ``fractions.Fraction`` or ``"p/q"`` strings.
"""

from fractions import Fraction

from . import _knotdef
from ._knotdef import (
    KnotdefError,
    __version__,
    alexander_polynomial,
    alexander_width,
    burau_alexander,
    certify_definite,
    check_theorem,
    classify_form,
    det,
    direct_sum,
    inertia,
    knot_report,
    parse_braid,
    seifert_matrix_from_braid,
    signature,
    surface_genus,
    symmetrize,
    validate,
)

__all__ = [
    "KnotdefError",
    "__version__",
    "alexander_polynomial",
    "alexander_width",
    "burau_alexander",
    "certify_definite",
    "check_lk_scaling",
    "check_self_lk_scaling",
    "check_theorem",
    "classify_form",
    "det",
    "direct_sum",
    "inertia",
    "knot_report",
    "lift_curve",
    "linking_number",
    "parse_braid",
    "seifert_matrix_from_braid",
    "signature",
    "surface_genus",
    "symmetrize",
    "validate",
]


def _entry(x):
    if isinstance(x, bool):
        raise TypeError("curve coordinates must be rational, not bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, str):
        return x
    raise TypeError(f"curve coordinates must be int, Fraction or 'p/q' strings, got {type(x).__name__}")


def _curve(vertices):
    return [[_entry(x) for x in v] for v in vertices]


def linking_number(a, b, max_segments=1 << 14):
    """Linking number of two disjoint closed curves."""
    return _knotdef.linking_number(_curve(a), _curve(b), max_segments)


def lift_curve(curve, period):
    """Components of the preimage under the period-fold cover, with Fraction coordinates."""
    return [[[Fraction(x) for x in v] for v in comp] for comp in _knotdef.lift_curve(_curve(curve), period)]


def check_lk_scaling(a, b, period, max_segments=1 << 14):
    """Linking number of the lifts compared with period times the base linking number."""
    return _knotdef.check_lk_scaling(_curve(a), _curve(b), period, max_segments)


def check_self_lk_scaling(a, period, max_segments=1 << 14):
    """As check_lk_scaling with the radial pushoff of ``a`` as the second curve."""
    return _knotdef.check_self_lk_scaling(_curve(a), period, max_segments)
