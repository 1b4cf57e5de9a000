"""Point/plane duality as a sign-free index permutation.

Two exterior algebras describe the same projective space: a point-based
one (outer product = join) and a plane-based one (outer product = meet).
Both share the canonical coefficient layout of :mod:`pgakit.algebra`,
so the grade-reversing isomorphism between them acts on a single
coefficient vector.  Because complementary canonical blades are paired
with even concatenation parity, the map is a pure permutation: no signs
and no metric enter, which is what keeps it valid when the metric is
degenerate.  Multiplying by the pseudoscalar does *not* compute this
map here -- with ``I**2 == 0`` that product destroys ideal parts.

On every grade except the middle one the permutation is the identity on
coefficients; on the middle grade of the 4D algebra the Pluecker
6-tuple is reversed.
"""

from __future__ import annotations

import numpy as np

from .algebra import Multivector


def dual_j(x: Multivector) -> Multivector:
    """Map a multivector to its representation in the opposite algebra.

    Involution: ``dual_j(dual_j(x)) == x`` exactly.
    """
    out = np.zeros_like(x.coeffs)
    out[x.algebra.complement_index] = x.coeffs
    return Multivector(x.algebra, out)


def metric_polarity(x: Multivector) -> Multivector:
    """Polarity on the non-degenerate quadric of the same algebra.

    Identical coordinate action to :func:`dual_j`, but the result is
    read in the same algebra, swapping e.g. a point for a plane.  Useful
    only squared away inside incidence formulas; prefer :func:`dual_j`.
    """
    return dual_j(x)


def join(a: Multivector, b: Multivector) -> Multivector:
    """Regressive product: the join of plane-based elements.

    Computed by mapping both operands to the point-based algebra,
    wedging there, and mapping back.  Associative; the meet is simply
    the native outer product ``a ^ b``.
    """
    return dual_j(dual_j(a) ^ dual_j(b))


def regressive_via_polarity(a: Multivector, b: Multivector) -> Multivector:
    """Same product built from the metric polarity, for cross-checking."""
    return metric_polarity(metric_polarity(a) ^ metric_polarity(b))
