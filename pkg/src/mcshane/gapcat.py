"""Gap functions for an embedded pair of pants P(D0, a, b).

``gap`` covers a distinguished boundary D0 that is a cone point (result in
radians) or a boundary geodesic (result a length); ``gap_prime`` is the
normalized version for a cusp.  ``gap_via_gs`` recomputes the same widths
through the complex G/S kernel so the two presentations can be checked against
each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernel
from .errors import InvalidCombinationError, RangeError

CUSP = "cusp"
CONE = "cone-point"
BOUNDARY = "boundary-geodesic"
INTERIOR = "interior-geodesic"

END_KINDS = (CUSP, CONE, BOUNDARY, INTERIOR)
BOUNDARY_KINDS = (CUSP, CONE, BOUNDARY)


@dataclass(frozen=True)
class EndDescriptor:
    """One of the two non-distinguished ends of a pair of pants.

    ``magnitude`` is the cone angle for a cone point, the length for a
    geodesic and 0 for a cusp.  A degenerate interior geodesic (the double of
    an arc joining two angle-pi cone points) carries twice the arc length.
    """

    kind: str
    magnitude: float = 0.0

    def __post_init__(self):
        if self.kind not in END_KINDS:
            raise InvalidCombinationError(f"unknown end kind {self.kind!r}")
        m = float(self.magnitude)
        object.__setattr__(self, "magnitude", m)
        if self.kind == CUSP:
            if m != 0:
                raise RangeError("a cusp has no magnitude")
        elif self.kind == CONE:
            if not 0 < m <= math.pi:
                raise RangeError(f"cone angle {m!r} outside (0, pi]")
        elif not m > 0:
            raise RangeError(f"geodesic length {m!r} must be positive")

    @classmethod
    def cusp(cls) -> EndDescriptor:
        return cls(CUSP, 0.0)

    @classmethod
    def cone(cls, angle: float) -> EndDescriptor:
        return cls(CONE, angle)

    @classmethod
    def boundary(cls, length: float) -> EndDescriptor:
        return cls(BOUNDARY, length)

    @classmethod
    def interior(cls, length: float) -> EndDescriptor:
        return cls(INTERIOR, length)

    @property
    def is_geometric_boundary(self) -> bool:
        return self.kind in (CONE, BOUNDARY)

    @property
    def complex_length(self) -> complex:
        if self.kind == CONE:
            return complex(0.0, self.magnitude)
        return complex(self.magnitude, 0.0)


@dataclass(frozen=True)
class BoundarySpec:
    """The distinguished geometric boundary component D0.

    Cone angles up to 2*pi are accepted because the one-cone torus identity
    holds on that whole range; single-pants evaluation further restricts to
    (0, pi] where required.
    """

    kind: str
    magnitude: float = 0.0
    complex_length: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in BOUNDARY_KINDS:
            raise RangeError(f"unknown boundary kind {self.kind!r}")
        m = float(self.magnitude)
        object.__setattr__(self, "magnitude", m)
        if self.kind == CUSP:
            if m != 0:
                raise RangeError("a cusp has no magnitude")
            cl = 0j
        elif self.kind == CONE:
            if not 0 < m < 2 * math.pi:
                raise RangeError(f"cone angle {m!r} outside (0, 2pi)")
            cl = complex(0.0, m)
        else:
            if not (m > 0 and math.isfinite(m)):
                raise RangeError(f"boundary length {m!r} must be positive")
            cl = complex(m, 0.0)
        object.__setattr__(self, "complex_length", cl)

    @classmethod
    def cusp(cls) -> BoundarySpec:
        return cls(CUSP, 0.0)

    @classmethod
    def cone(cls, angle: float) -> BoundarySpec:
        return cls(CONE, angle)

    @classmethod
    def hole(cls, length: float) -> BoundarySpec:
        return cls(BOUNDARY, length)

    @property
    def full_measure(self) -> float:
        """theta0, l0, or 1 for the normalized cusp measure."""
        return self.magnitude if self.kind != CUSP else 1.0


def _order(a: EndDescriptor, b: EndDescriptor):
    """Put the non-interior end (if any) first; reject undefined pairs."""
    if a.kind == INTERIOR and b.kind != INTERIOR:
        a, b = b, a
    if b.kind != INTERIOR:
        if a.kind == CUSP and b.kind == CUSP:
            return a, b
        raise InvalidCombinationError(
            f"no gap function for ends ({a.kind}, {b.kind}): at least one "
            "must be an interior geodesic")
    return a, b


def _half_cosh(e: EndDescriptor) -> float:
    """cosh(|e|/2), with cos(phi/2) standing in for a cone point."""
    if e.kind == CONE:
        return math.cos(e.magnitude / 2)
    return math.cosh(e.magnitude / 2)


def gap_prime(a: EndDescriptor, b: EndDescriptor) -> float:
    """Normalized gap Gap'(D0; a, b) for a cusp D0."""
    a, b = _order(a, b)
    hb = b.magnitude / 2
    if a.kind in (INTERIOR, CUSP):
        # 0.1; 0.4 is its |a| = 0 value
        u = math.exp(-(a.magnitude + b.magnitude) / 2)
        return u / (1.0 + u)
    return 0.5 - 0.5 * math.sinh(hb) / (_half_cosh(a) + math.cosh(hb))


def _check_delta0(delta0: BoundarySpec, a: EndDescriptor, b: EndDescriptor):
    if delta0.kind == CUSP:
        raise InvalidCombinationError("cusp D0 uses gap_prime")
    if delta0.kind == CONE and delta0.magnitude > math.pi and not (
            a.kind in (INTERIOR, CUSP) and b.kind in (INTERIOR, CUSP)):
        raise RangeError("cone angles above pi are only defined for the torus "
                         "summand (both ends interior)")


def gap(delta0: BoundarySpec, a: EndDescriptor, b: EndDescriptor) -> float:
    """Gap(D0; a, b) for a cone-point or boundary-geodesic D0.

    Argument order does not matter.  When one end is a cusp the |a| = 0 form
    is used, which every other subcase reduces to.
    """
    _check_delta0(delta0, a, b)
    a, b = _order(a, b)
    hb = b.magnitude / 2
    if delta0.kind == CONE:
        theta = delta0.magnitude
        st, ct = math.sin(theta / 2), math.cos(theta / 2)
        if a.kind in (INTERIOR, CUSP):
            u = math.exp(-(a.magnitude + b.magnitude) / 2)
            return 2 * math.atan2(st * u, ct * u + 1.0)
        if a.kind == CONE and theta == math.pi and a.magnitude == math.pi:
            return 0.0
        return theta / 2 - math.atan2(st * math.sinh(hb),
                                      _half_cosh(a) + ct * math.cosh(hb))
    length = delta0.magnitude
    sl, cl = math.sinh(length / 2), math.cosh(length / 2)
    if a.kind in (INTERIOR, CUSP):
        u = math.exp(-(a.magnitude + b.magnitude) / 2)
        return 2 * math.atanh(sl * u / (cl * u + 1.0))
    return length / 2 - math.atanh(sl * math.sinh(hb) / (_half_cosh(a) + cl * math.cosh(hb)))


def gap_via_gs(delta0: BoundarySpec, a: EndDescriptor, b: EndDescriptor) -> complex:
    """The same gap written as G, or G + S when one end is a boundary component.

    Arguments are half complex lengths, so a cone D0 yields ``gap * i``.
    """
    _check_delta0(delta0, a, b)
    a, b = _order(a, b)
    x = delta0.complex_length / 2
    y = a.complex_length / 2
    z = b.complex_length / 2
    value = kernel.g_func(x, y, z)
    if a.is_geometric_boundary:
        value += kernel.s_func(x, y, z)
    return value
