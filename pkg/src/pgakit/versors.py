"""Euclidean isometries as sandwich operators.

A versor is a product of unit 1-vectors; sandwiching ``g X ~g`` with an
even versor (a *rotor*, ``g ~g == 1``) gives every direct isometry.
Rotors fall into three classes by their grade-2 part: rotators (simple
euclidean bivector), translators (ideal bivector) and general screws
(non-simple bivector).  The exponential and logarithm below move
between rotors and their bivector generators; in 3D the dual-number
valued angle ``t + u I`` carries half the rotation angle and half the
translation distance of the screw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, Multivector
from .dualnum import DualNumber
from . import dualnum
from .metric import (DegenerateElementError, biv_coeffs, biv_mv,
                     bivector_axis, is_simple, killing_norm, normalize)

_NEAR_IDENTITY = 1e-7
_EPS = 1e-12


def sandwich(g: Multivector, x: Multivector) -> Multivector:
    """Apply the isometry of a (normalized) versor: ``g x ~g``."""
    return g * x * ~g


def translator(alg: Algebra, v) -> Multivector:
    """The rotor translating every finite point by the vector ``v``."""
    v = tuple(float(c) for c in v)
    if alg.dim == 3:
        (vx, vy) = v
        return alg.multivector({"1": 1.0, "E1": vy / 2.0, "E2": -vx / 2.0})
    (vx, vy, vz) = v
    return alg.multivector(
        {"1": 1.0, "e01": -vx / 2.0, "e02": -vy / 2.0, "e03": -vz / 2.0})


def rotator(center: Multivector, theta: float) -> Multivector:
    """Rotation by ``theta`` about a point (2D) or a line (3D).

    The center must be euclidean; a 3D axis must be simple.  Uses the
    half-angle convention ``cos(theta/2) + sin(theta/2) N``.
    """
    alg = center.algebra
    (k,) = center.grades(rel_tol=1e-9)
    if k == 2 and alg.dim == 4:
        if not is_simple(center):
            raise ValueError("a rotation axis must be a simple bivector")
        n = normalize(center)
        if killing_norm(n) < 0.5:
            raise DegenerateElementError("ideal axis: use translator()")
    elif k == alg.dim - 1:
        n = normalize(center)
        from .metric import point_weight
        if abs(point_weight(n)) < 0.5:
            raise DegenerateElementError("ideal center: use translator()")
    else:
        raise ValueError("rotation center must be a point or a 3D line")
    return math.cos(theta / 2.0) + math.sin(theta / 2.0) * n


# ---------------------------------------------------------------------------
# exponential


def exp_screw(axis: Multivector, t: float, u: float = 0.0) -> Multivector:
    """``exp((t + u I) axis)`` for a normalized simple euclidean axis.

    Closed form: cos(t) - u sin(t) I + (sin(t) + u cos(t) I) axis.
    """
    alg = axis.algebra
    z = DualNumber(t, u)
    cz, sz = dualnum.cos(z), dualnum.sin(z)
    i_axis = axis * alg.blade("I")
    return (cz.to_multivector(alg) + sz.re * axis + sz.du * i_axis)


def exp_bivector(b: Multivector) -> Multivector:
    """Exponential of a grade-2 element; always lands in the rotor group.

    Three cases: ideal bivectors give translators ``1 + b``, simple
    euclidean ones rotators ``cos|b| + sin|b| b/|b|``, and non-simple
    ones screws via the dual-angle closed form.
    """
    alg = b.algebra
    if alg.dim == 3:
        m0 = b["E0"]
        if abs(m0) <= _EPS * max(1.0, float(np.abs(b.coeffs).max())):
            return alg.scalar(1.0) + b
        return math.cos(m0) + math.sin(m0) / m0 * b
    c = biv_coeffs(b)
    scale = math.sqrt(float(c @ c))
    if scale == 0.0:
        return alg.scalar(1.0)
    if math.sqrt(float(c[3:] @ c[3:])) <= _EPS * scale:
        return alg.scalar(1.0) + b
    axis, t, u = _screw_components(b)
    return exp_screw(axis, t, u)


def _screw_components(b: Multivector) -> tuple[Multivector, float, float]:
    """Write a euclidean bivector as ``(t + u I) axis``."""
    axis = bivector_axis(b)
    t = -(b | axis).scalar_part
    if t < 0.0:
        axis = -axis
        t = -t
    i_axis = biv_coeffs(axis * b.algebra.blade("I"))
    resid = biv_coeffs(b) - t * biv_coeffs(axis)
    u = float(resid @ i_axis) / float(i_axis @ i_axis)
    return axis, t, u


# ---------------------------------------------------------------------------
# logarithm


@dataclass(frozen=True)
class ScrewLog:
    """Invariant data of a rotor: axis plus dual half-angle ``t + u I``.

    ``t`` is half the rotation angle, ``u`` half the translation
    distance.  ``exp_screw(axis, t, u)`` reproduces the rotor (up to
    the double-cover sign).
    """

    axis: Multivector
    t: float
    u: float

    def bivector(self) -> Multivector:
        return self.t * self.axis + self.u * (self.axis * self.axis.algebra.blade("I"))

    def exp(self) -> Multivector:
        return exp_screw(self.axis, self.t, self.u)

    def rotation_part(self) -> Multivector:
        return exp_screw(self.axis, self.t, 0.0)

    def translation_part(self) -> Multivector:
        return exp_screw(self.axis, 0.0, self.u)


def _origin_axis(alg: Algebra, direction) -> Multivector:
    """Line through the origin with the given direction vector."""
    dx, dy, dz = direction
    return biv_mv(alg, [0.0, 0.0, 0.0, dz, dy, dx])


def screw_log(g: Multivector) -> ScrewLog:
    """Logarithm of a 3D rotor, choosing the canonical representative.

    ``-g`` is mapped to ``g`` first, so ``t`` lands in [0, pi).  For a
    pure translator the axis is not unique; the representative through
    the origin is returned.  The identity gets a zero log on an
    arbitrary axis.
    """
    alg = g.algebra
    if alg.dim != 4:
        raise ValueError("screw_log needs the spatial algebra")
    s_r = g.scalar_part
    s_d = g.pseudo_part
    xi = g.grade(2)
    c6 = biv_coeffs(xi)
    xi_scale = math.sqrt(float(c6 @ c6))
    g_scale = max(1.0, float(np.abs(g.coeffs).max()))
    if xi_scale <= _EPS * g_scale:
        return ScrewLog(_origin_axis(alg, (0.0, 0.0, 1.0)), 0.0, 0.0)
    if math.sqrt(float(c6[3:] @ c6[3:])) <= _EPS * xi_scale:
        # translator: map -g to g (the scalar part must be +1), then pick
        # the origin-passing axis; the log of a translator is not unique
        m = c6[:3] if s_r >= 0.0 else -c6[:3]
        length = math.sqrt(float(m @ m))
        return ScrewLog(_origin_axis(alg, -m / length), 0.0, length)
    if xi_scale < _NEAR_IDENTITY * g_scale:
        # first-order series; avoids 0/0 in the u branch.  Near -1 flip
        # to the positive-scalar sheet first.
        if s_r < 0.0:
            xi = -xi
        axis, c, d = _screw_components(xi)
        return ScrewLog(axis, c, d)
    # orient the axis so its angle component is non-negative; with the
    # scalar part untouched this puts t in [0, pi), and exp reproduces
    # g itself rather than -g
    axis, c, d = _screw_components(xi)
    t = math.atan2(c, s_r)
    if abs(math.cos(t)) > abs(math.sin(t)):
        u = d / math.cos(t)
    else:
        u = -s_d / math.sin(t)
    return ScrewLog(axis, t, u)


def rotor_log(g: Multivector) -> Multivector:
    """Logarithm of a rotor as a bivector, in 2D or 3D."""
    alg = g.algebra
    if alg.dim == 4:
        return screw_log(g).bivector()
    if g.scalar_part < 0.0:
        g = -g
    s = g.scalar_part
    m = g.grade(2)
    m0 = m["E0"]
    if abs(m0) <= _EPS * max(1.0, float(np.abs(g.coeffs).max())):
        return m
    theta = math.atan2(m0, s)
    return theta / m0 * m


def screw_decompose(g: Multivector) -> tuple[Multivector, Multivector]:
    """Split a rotor into commuting rotation and translation factors.

    Returns ``(exp(t axis), exp(u I axis))`` of the canonical (positive
    scalar) representative; their product in either order is ``+-g``.
    """
    lg = screw_log(g)
    return lg.rotation_part(), lg.translation_part()


# ---------------------------------------------------------------------------
# the rotor constraint


def rotor_constraint(g: Multivector) -> DualNumber:
    """``g ~g`` as a dual number; equal to 1 exactly on the spin group."""
    return DualNumber.from_multivector(g * ~g)


def is_rotor(g: Multivector, tol: float = 1e-9) -> bool:
    odd = g.coeffs[g.algebra.grades % 2 == 1]
    if float(np.abs(odd).max(initial=0.0)) > tol:
        return False
    z = rotor_constraint(g)
    return abs(z.re - 1.0) <= tol and abs(z.du) <= tol


def normalize_rotor(g: Multivector) -> Multivector:
    """Rescale an even element onto the rotor manifold.

    Divides by the dual-number square root of ``g ~g``; direction is
    preserved and an exact rotor comes back unchanged.  Used after each
    integrator step to kill drift.
    """
    z = rotor_constraint(g)
    if z.re <= 0.0:
        raise ValueError("cannot normalize: g ~g has a non-positive real part")
    w = z.sqrt().inverse()
    return g * w.to_multivector(g.algebra)
