"""Standard presentations, in the plain-text presentation format."""
from __future__ import annotations

from .terms import PropPresentation, parse_presentation

MONOID = """\
# commutative monoids
gen mu 2 1
gen eta 0 1
rel comp braid 1 1 mu = mu
rel comp (sum eta id 1) mu = id 1
rel comp (sum mu id 1) mu = comp (sum id 1 mu) mu
"""

COMONOID = """\
# commutative comonoids
gen delta 1 2
gen epsilon 1 0
rel comp delta braid 1 1 = delta
rel comp delta (sum epsilon id 1) = id 1
rel comp delta (sum delta id 1) = comp delta (sum id 1 delta)
"""

FROBENIUS = MONOID + COMONOID.split("\n", 1)[1] + """\
rel comp (sum delta id 1) (sum id 1 mu) = comp mu delta
rel comp (sum id 1 delta) (sum mu id 1) = comp mu delta
rel comp delta mu = id 1
"""

SELF_DUAL = """\
# self-duals: cup creates a pair of points, cap annihilates one
gen cup 0 2
gen cap 2 0
rel cap = comp braid 1 1 cap
rel cup = comp cup braid 1 1
rel comp (sum id 1 cup) (sum cap id 1) = id 1
rel comp (sum cup id 1) (sum id 1 cap) = id 1
"""

INVOLUTION = """\
gen i 1 1
rel comp i i = id 1
"""

POINTED = """\
# a single point eta with no equations
gen eta 0 1
"""

COPOINTED = """\
gen epsilon 1 0
"""

SYMMETRIES = """\
# no generators: the initial prop of bijections
"""


def monoid() -> PropPresentation:
    return parse_presentation(MONOID, "monoid")


def comonoid() -> PropPresentation:
    return parse_presentation(COMONOID, "comonoid")


def frobenius() -> PropPresentation:
    return parse_presentation(FROBENIUS, "frobenius")


def self_dual() -> PropPresentation:
    return parse_presentation(SELF_DUAL, "self-dual")


def involution() -> PropPresentation:
    return parse_presentation(INVOLUTION, "involution")


def pointed() -> PropPresentation:
    return parse_presentation(POINTED, "pointed")


def copointed() -> PropPresentation:
    return parse_presentation(COPOINTED, "copointed")


def symmetries() -> PropPresentation:
    return parse_presentation(SYMMETRIES, "symmetries")
