"""Scalar complex kernel: principal branches, the G/S pair and trace lengths.

G and S each have two closed forms, an inverse-tanh form and a log form.
Both share the same branch cut: the atanh argument ``w`` real with
``|w| >= 1``, equivalently the ratio ``(1 + w)/(1 - w)`` on the non-positive
real axis.  The standalone forms reject arguments within ``BRANCH_EPS`` of that cut
(measured as the angular distance of the ratio from the negative real axis) or
of ``w = +-1``.  ``g_func`` and ``s_func`` hand points near ``w = +-1`` to the
log form, which is exact there, and reject only the cut itself.
"""
import cmath
import math

from .errors import DomainError, PoleError, SingularConfigurationError

BRANCH_EPS = 1e-3
# above this |w| the log form is better conditioned than atanh
LOG_FORM_SWITCH = 1.0 - 1e-8


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SingularConfigurationError(f"{what} is not finite: {z!r}")
    return z


def principal_atanh(w) -> complex:
    """Inverse hyperbolic tangent with imaginary part in (-pi/2, pi/2].

    On the cut (real ``|w| > 1``) the upper side is taken, i.e. the imaginary
    part is ``+pi/2`` regardless of the sign of a zero imaginary component.
    """
    w = complex(w)
    if w == 1 or w == -1:
        raise PoleError(f"atanh has a pole at {w.real:+g}")
    if w.imag == 0 and abs(w.real) > 1:
        return complex(math.atanh(1.0 / w.real), math.pi / 2)
    v = _finite(cmath.atanh(w), "atanh")
    if v.imag <= -math.pi / 2:  # rounded onto the excluded end of the strip
        v = complex(v.real, math.pi / 2)
    return v


def principal_log(w) -> complex:
    """Logarithm with imaginary part in (-pi, pi]."""
    w = complex(w)
    if w == 0:
        raise PoleError("log has a pole at 0")
    if w.imag == 0 and w.real < 0:
        return complex(math.log(-w.real), math.pi)
    v = _finite(cmath.log(w), "log")
    if v.imag <= -math.pi:
        v = complex(v.real, math.pi)
    return v


def _guard_ratio(q: complex, name: str) -> None:
    if not (math.isfinite(q.real) and math.isfinite(q.imag)):
        raise SingularConfigurationError(f"{name}: closed form overflows")
    if abs(q) == 0:
        raise SingularConfigurationError(f"{name}: log argument vanishes")
    if math.pi - abs(cmath.phase(q)) < BRANCH_EPS:
        raise SingularConfigurationError(f"{name}: argument on or near the branch cut")


def _guard_w(w: complex, name: str) -> None:
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise SingularConfigurationError(f"{name}: atanh argument is not finite")
    if abs(1 - w) < BRANCH_EPS or abs(1 + w) < BRANCH_EPS:
        raise SingularConfigurationError(f"{name}: atanh argument near +-1")
    _guard_ratio((1 + w) / (1 - w), name)


def _div(num: complex, den: complex, name: str) -> complex:
    if den == 0:
        raise SingularConfigurationError(f"{name}: zero denominator")
    return num / den


def g_argument(x, y, z) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    return _div(cmath.sinh(x), cmath.cosh(x) + cmath.exp(y + z), "G")


def s_argument(x, y, z) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    return _div(cmath.sinh(x) * cmath.sinh(y),
                cmath.cosh(z) + cmath.cosh(x) * cmath.cosh(y), "S")


def g_atanh_form(x, y, z) -> complex:
    w = g_argument(x, y, z)
    _guard_w(w, "G")
    return 2 * principal_atanh(w)


def g_log_form(x, y, z) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    e = cmath.exp(y + z)
    q = _div(cmath.exp(x) + e, cmath.exp(-x) + e, "G")
    _guard_ratio(q, "G")
    return principal_log(q)


def s_atanh_form(x, y, z) -> complex:
    w = s_argument(x, y, z)
    _guard_w(w, "S")
    return principal_atanh(w)


def s_log_form(x, y, z) -> complex:
    x, y, z = complex(x), complex(y), complex(z)
    cz = cmath.cosh(z)
    q = _div(cz + cmath.cosh(x + y), cz + cmath.cosh(x - y), "S")
    _guard_ratio(q, "S")
    return 0.5 * principal_log(q)


def _prefer_log(w: complex) -> bool:
    # near w = +-1 the atanh form loses digits while the log form stays exact
    # unless the ratio actually sits on its cut, which _guard_ratio catches
    return (abs(w) > LOG_FORM_SWITCH or abs(1 - w) < BRANCH_EPS
            or abs(1 + w) < BRANCH_EPS)


def g_func(x, y, z) -> complex:
    """G(x, y, z) = 2 atanh(sinh x / (cosh x + exp(y + z))).

    For real x > 0 and real y, z this is the width of a main gap on the
    boundary of length 2x in the pants with boundary lengths (2x, 2y, 2z).
    """
    w = g_argument(x, y, z)
    if _prefer_log(w):
        return g_log_form(x, y, z)
    _guard_w(w, "G")
    return 2 * principal_atanh(w)


def s_func(x, y, z) -> complex:
    """S(x, y, z) = atanh(sinh x sinh y / (cosh z + cosh x cosh y)).

    For positive reals this is half the length of the orthogonal projection of
    the boundary of length 2y onto the boundary of length 2x.
    """
    w = s_argument(x, y, z)
    if _prefer_log(w):
        return s_log_form(x, y, z)
    _guard_w(w, "S")
    return principal_atanh(w)


def length_from_trace(t: float) -> float:
    """Translation length 2 arccosh(t/2) of a hyperbolic element of trace t."""
    if not t >= 2:
        raise DomainError(f"trace {t!r} < 2 is not hyperbolic")
    return 2.0 * math.acosh(t / 2.0)


def trace_from_length(length: float) -> float:
    if length < 0:
        raise DomainError(f"negative length {length!r}")
    return 2.0 * math.cosh(length / 2.0)


def mirzakhani_d(a, b, c) -> complex:
    """Mirzakhani's D(a, b, c) = 2 G(a/2, b/2, c/2)."""
    return 2 * g_func(complex(a) / 2, complex(b) / 2, complex(c) / 2)


def mirzakhani_r(a, b, c) -> complex:
    """Mirzakhani's R(a, b, c) = a/2 - 2 S(a/2, c/2, b/2)."""
    a = complex(a)
    return a / 2 - 2 * s_func(a / 2, complex(c) / 2, complex(b) / 2)
