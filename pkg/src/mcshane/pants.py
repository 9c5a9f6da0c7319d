"""Pair-of-pants trigonometry behind the gap widths.

For the pants P(D0, a, b) with a non-cusp D0, ``delta_a`` is the common
perpendicular from D0 to the end a.  The foot width x is the angle (cone D0)
or distance along D0 (geodesic D0) between ``delta_a`` and the simple ray from
D0 spiralling towards a; y is the same for b.  The combined gap is what is left
of half the boundary measure once the widths of the interior ends are removed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernel
from .errors import DomainError, InvalidCombinationError
from .gapcat import BOUNDARY, CONE, CUSP, INTERIOR, BoundarySpec, EndDescriptor


@dataclass(frozen=True)
class PantsSpec:
    delta0: BoundarySpec
    end_a: EndDescriptor
    end_b: EndDescriptor

    def __post_init__(self):
        if self.delta0.kind == CUSP:
            raise InvalidCombinationError("foot widths need a cone or geodesic D0")
        if self.delta0.kind == CONE and self.delta0.magnitude > math.pi:
            raise InvalidCombinationError("pants cone angle must lie in (0, pi]")
        if self.end_a.kind != INTERIOR and self.end_b.kind != INTERIOR:
            raise InvalidCombinationError("at most one end may be a boundary component")

    def swapped(self) -> PantsSpec:
        return PantsSpec(self.delta0, self.end_b, self.end_a)


@dataclass(frozen=True)
class FootLayout:
    perp_a: float
    perp_b: float
    width_a: float
    width_b: float
    main_gap: float
    full_measure: float


def _ch(e: EndDescriptor) -> float:
    return math.cos(e.magnitude / 2) if e.kind == CONE else math.cosh(e.magnitude / 2)


def _perp(delta0: BoundarySpec, near: EndDescriptor, far: EndDescriptor) -> float:
    """Length of the common perpendicular from D0 to ``near``.

    Cone points enter through the substitution cosh(L/2) -> cos(phi/2),
    sinh(L/2) -> i sin(phi/2) of their complex length; a cusp end lies at
    infinite distance.
    """
    if near.kind == CUSP:
        return math.inf
    h = delta0.magnitude / 2
    num = _ch(far)
    if delta0.kind == CONE:
        c0, s0 = math.cos(h), math.sin(h)
        if near.kind == CONE:
            den = s0 * math.sin(near.magnitude / 2)
            value, inverse = (num + c0 * _ch(near)) / _nonzero(den), math.acosh
        else:
            den = s0 * math.sinh(near.magnitude / 2)
            value, inverse = (num + c0 * _ch(near)) / _nonzero(den), math.asinh
    else:
        c0, s0 = math.cosh(h), math.sinh(h)
        if near.kind == CONE:
            den = s0 * math.sin(near.magnitude / 2)
            value, inverse = (num + c0 * _ch(near)) / _nonzero(den), math.asinh
        else:
            den = s0 * math.sinh(near.magnitude / 2)
            value, inverse = (num + c0 * _ch(near)) / _nonzero(den), math.acosh
    if inverse is math.acosh and value < 1:
        raise DomainError(f"cosh of perpendicular {value!r} < 1")
    return inverse(value)


def _nonzero(den: float) -> float:
    if den == 0:
        raise DomainError("degenerate pants: vanishing sine in perpendicular formula")
    return den


def perpendicular_lengths(p: PantsSpec) -> tuple[float, float]:
    """(|delta_a|, |delta_b|); ``inf`` for a cusp end."""
    return _perp(p.delta0, p.end_a, p.end_b), _perp(p.delta0, p.end_b, p.end_a)


def _width(delta0: BoundarySpec, near: EndDescriptor, far: EndDescriptor) -> float:
    # the ray towards a cone point or cusp runs along the perpendicular itself
    if near.kind in (CONE, CUSP):
        return 0.0
    h = delta0.magnitude / 2
    sn = math.sinh(near.magnitude / 2)
    if delta0.kind == CONE:
        return math.atan2(math.sin(h) * sn, _ch(far) + math.cos(h) * _ch(near))
    return math.atanh(math.sinh(h) * sn / (_ch(far) + math.cosh(h) * _ch(near)))


def foot_widths(p: PantsSpec) -> FootLayout:
    perp_a, perp_b = perpendicular_lengths(p)
    x = _width(p.delta0, p.end_a, p.end_b)
    y = _width(p.delta0, p.end_b, p.end_a)
    full = p.delta0.magnitude
    # widths on the side of a boundary end belong to the combined gap
    main = full / 2
    if p.end_a.kind == INTERIOR:
        main -= x
    if p.end_b.kind == INTERIOR:
        main -= y
    if p.delta0.kind == CONE and full == math.pi and any(
            e.kind == CONE and e.magnitude == math.pi for e in (p.end_a, p.end_b)):
        main = 0.0  # no gap between two angle-pi cone points
    return FootLayout(perp_a, perp_b, x, y, main, full)


def partition_widths(p: PantsSpec) -> tuple[float, float, float]:
    """Split the geodesic D0 into (two main gaps, projection of a, projection of b).

    Returns (2G, 2S(l/2, |a|/2, |b|/2), 2S(l/2, |b|/2, |a|/2)); the three add up
    to l.  Only geodesic (or cusp) ends keep all three quantities real.
    """
    if p.delta0.kind != BOUNDARY:
        raise InvalidCombinationError("partition widths need a geodesic D0")
    if CONE in (p.end_a.kind, p.end_b.kind):
        raise InvalidCombinationError("partition widths need geodesic or cusp ends")
    x = p.delta0.magnitude / 2
    ha, hb = p.end_a.magnitude / 2, p.end_b.magnitude / 2
    g = kernel.g_func(x, ha, hb).real
    sa = kernel.s_func(x, ha, hb).real
    sb = kernel.s_func(x, hb, ha).real
    return 2 * g, 2 * sa, 2 * sb

