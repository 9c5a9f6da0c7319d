"""Simple closed geodesics on a one-cusp / one-cone / one-hole torus.

Traces (x, y, z) of a Farey triangle of simple closed curves satisfy

    x^2 + y^2 + z^2 - x y z = mu,    mu = 2 + tr[A, B],

and the neighbouring triangle across the edge {x, y} has third trace xy - z
(Vieta flip).  Starting from one triangle and flipping outward visits every
slope exactly once.  Boundary trace convention: tr[A, B] = -2 (cusp),
-2 cos(theta/2) (cone), -2 cosh(l/2) (hole), so the cusp case is the classical
Markoff equation with root (3, 3, 3).
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from scipy.optimize import brentq

from .errors import (DegenerateStructureError, InvalidStructureError, RangeError,
                     SeedMismatchError)
from .gapcat import BOUNDARY, CONE, CUSP, BoundarySpec
from .kernel import length_from_trace, trace_from_length

MU_TOL = 1e-9
ROOT_SLOPES = ((0, 1), (1, 1), (1, 0))


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if gcd(abs(p), abs(q)) != 1:
            raise ValueError(f"slope {p}/{q} is not primitive")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class TraceTriple:
    traces: tuple[float, float, float]
    slopes: tuple[Slope, Slope, Slope] = tuple(Slope(*s) for s in ROOT_SLOPES)
    # (slot, triple) this one was flipped from; flipping that slot again
    # hands the original back untouched instead of recomputing it
    _source: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "traces", tuple(float(t) for t in self.traces))
        object.__setattr__(self, "slopes", tuple(
            s if isinstance(s, Slope) else Slope(*s) for s in self.slopes))
        s = self.slopes
        for i in range(3):
            a, b = s[i], s[(i + 1) % 3]
            if abs(a.p * b.q - a.q * b.p) != 1:
                raise ValueError(f"slopes {a} and {b} are not Farey neighbours")

    @property
    def mu(self) -> float:
        x, y, z = self.traces
        return x * x + y * y + z * z - x * y * z


@dataclass(frozen=True)
class GeodesicRecord:
    slope: Slope
    trace: float
    length: float
    wclass: str


def boundary_invariant(b: BoundarySpec) -> float:
    """Fricke invariant mu = x^2 + y^2 + z^2 - xyz forced by the boundary."""
    if b.kind == CUSP:
        return 0.0
    if b.kind == CONE:
        if not 0 < b.magnitude < 2 * math.pi:
            raise RangeError("cone angle outside (0, 2pi)")
        return 2.0 - 2.0 * math.cos(b.magnitude / 2)
    if not b.magnitude > 0:
        raise RangeError("hole length must be positive")
    return 2.0 - 2.0 * math.cosh(b.magnitude / 2)


def symmetric_seed(mu: float) -> TraceTriple:
    """The structure with all three root traces equal: t^3 - 3t^2 + mu = 0, t > 2."""
    if not mu < 4:
        raise DegenerateStructureError(f"mu = {mu!r} >= 4 admits no hyperbolic structure")

    def f(t):
        return t * t * (t - 3.0) + mu

    # f(2) = mu - 4 < 0 and f is increasing on t > 2
    hi = 4.0 + abs(mu) ** (1.0 / 3.0)
    t = brentq(f, 2.0, hi, xtol=1e-15, maxiter=200)
    for _ in range(2):  # polish to the last ulp
        d = 3.0 * t * (t - 2.0)
        t -= f(t) / d
    if not t > 2:
        raise DegenerateStructureError(f"largest root {t!r} is not above 2")
    return TraceTriple((t, t, t))


def seed_from_traces(mu: float, x: float, y: float) -> TraceTriple:
    """Complete (x, y) to a triple with Fricke invariant mu, taking the larger z."""
    disc = (x * y) ** 2 - 4.0 * (x * x + y * y - mu)
    if disc < 0:
        raise InvalidStructureError(f"no real z for traces ({x}, {y}) at mu = {mu}")
    z = 0.5 * (x * y + math.sqrt(disc))
    return TraceTriple((x, y, z))


def _other_partner(a: Slope, b: Slope, c: Slope) -> Slope:
    plus = (a.p + b.p, a.q + b.q)
    minus = (a.p - b.p, a.q - b.q)
    cand = Slope(*plus)
    if cand == c:
        cand = Slope(*minus)
    return cand


def vieta_flip(tr: TraceTriple, slot: int) -> TraceTriple:
    """Replace the trace in ``slot`` (1, 2 or 3) by the product of the others minus it.

    The slope in that slot moves to the other Farey partner of the kept edge.
    Undoing a flip returns the stored pre-image, so walks back towards the
    root are exact.
    """
    if slot not in (1, 2, 3):
        raise IndexError(f"slot must be 1, 2 or 3, got {slot!r}")
    if tr._source is not None and tr._source[0] == slot:
        return tr._source[1]
    i = slot - 1
    j, k = (i + 1) % 3, (i + 2) % 3
    t, s = list(tr.traces), list(tr.slopes)
    t[i] = t[j] * t[k] - t[i]
    s[i] = _other_partner(s[j], s[k], s[i])
    return TraceTriple(tuple(t), tuple(s), (slot, tr))


def weierstrass_class(s: Slope) -> str:
    """'A' for (odd, odd), 'B' for (even, odd), 'C' for (odd, even)."""
    return {(1, 1): "A", (0, 1): "B", (1, 0): "C"}[(s.p % 2, s.q % 2)]


def _record(slope: Slope, trace: float) -> GeodesicRecord:
    return GeodesicRecord(slope, trace, length_from_trace(trace), weierstrass_class(slope))


def _check_trace(t: float, slope) -> None:
    if not t > 2:
        raise InvalidStructureError(
            f"trace {t!r} at slope {slope} is not > 2: not a hyperbolic cone/hole/cusp torus")


def _explore(traces, slopes, slot, cutoff, cutoff_trace):
    """Depth-first walk of the subtree entered by flipping ``slot`` of the root."""
    found = []
    stack = [(traces, slopes, slot)]
    while stack:
        t, s, i = stack.pop()
        j, k = (i + 1) % 3, (i + 2) % 3
        new_t = t[j] * t[k] - t[i]
        new_s = _other_partner(s[j], s[k], s[i])
        _check_trace(new_t, new_s)
        if new_t <= cutoff_trace and length_from_trace(new_t) <= cutoff:
            found.append((new_s, new_t))
        if new_t > cutoff_trace and new_t > t[j] and new_t > t[k]:
            continue  # traces only grow from here on
        t2 = list(t)
        s2 = list(s)
        t2[i], s2[i] = new_t, new_s
        t2, s2 = tuple(t2), tuple(s2)
        stack.append((t2, s2, j))
        stack.append((t2, s2, k))
    return found


def thread_cap() -> int:
    raw = os.environ.get("MCSHANE_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"MCSHANE_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"MCSHANE_THREADS must be a positive integer, got {raw!r}")
    return n


def enumerate_geodesics(b: BoundarySpec, cutoff: float,
                        override_seed: TraceTriple | None = None,
                        threads: int | None = None) -> list[GeodesicRecord]:
    """All simple closed geodesics of length <= cutoff, sorted by (length, p, q).

    The default structure is the symmetric one; pass ``override_seed`` to pick
    another point of moduli space (its Fricke invariant must match ``b``).
    The three root subtrees are independent and may be walked on separate
    threads (``threads``, default from MCSHANE_THREADS).
    """
    if not cutoff > 0:
        raise ValueError(f"cutoff must be positive, got {cutoff!r}")
    mu = boundary_invariant(b)
    if override_seed is None:
        seed = symmetric_seed(mu)
    else:
        seed = override_seed
        if abs(seed.mu - mu) > MU_TOL * max(1.0, abs(mu)):
            raise SeedMismatchError(
                f"seed has mu = {seed.mu!r} but the boundary requires {mu!r}")
    for t, s in zip(seed.traces, seed.slopes):
        _check_trace(t, s)

    cutoff_trace = trace_from_length(cutoff)
    found = {}
    for s, t in zip(seed.slopes, seed.traces):
        if length_from_trace(t) <= cutoff:
            found[s] = t

    workers = threads if threads is not None else thread_cap()
    jobs = [(seed.traces, seed.slopes, i, cutoff, cutoff_trace) for i in range(3)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=min(workers, 3)) as pool:
            parts = list(pool.map(lambda a: _explore(*a), jobs))
    else:
        parts = [_explore(*a) for a in jobs]
    for part in parts:
        for s, t in part:
            if s in found:
                raise InvalidStructureError(f"slope {s} reached twice")
            found[s] = t

    records = [_record(s, t) for s, t in found.items()]
    records.sort(key=lambda r: (r.length, r.slope.p, r.slope.q))
    return records
