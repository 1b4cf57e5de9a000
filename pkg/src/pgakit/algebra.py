"""Dense multivector arithmetic over diagonal-signature Clifford algebras.

A multivector is a flat coefficient vector over a canonical graded blade
basis.  The basis follows the classical line-geometry conventions rather
than plain lexicographic order:

* grade-2 blades in four dimensions are ``e01 e02 e03 e12 e31 e23`` --
  note ``e31``, not ``e13``, the traditional Pluecker ordering;
* the grade-(dim-1) blades ``E0 .. E3`` are oriented so that
  ``e_i ^ E_i = I`` for every basis 1-vector (``E1 = e0 e3 e2`` in 4D);
* complementary blades are paired so that concatenating their index
  tuples is always an even permutation.  This makes the point/plane
  duality map a pure, sign-free index permutation (see
  :mod:`pgakit.duality`).

Signatures are triples ``(p, n, z)``: the number of basis 1-vectors
squaring to +1, -1 and 0.  The degenerate/negative directions come
first, so ``Algebra(3, 0, 1)`` has ``e0**2 == 0`` and
``Algebra(3, 1, 0)`` has ``e0**2 == -1``.

Multivectors are immutable values; every operation returns a new one,
so they are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

REL_TOL = 1e-12
ABS_TOL = 1e-15

_MIN_DIM = 2
_MAX_DIM = 6


class SignatureMismatchError(ValueError):
    """Operands belong to different algebras."""


@dataclass(frozen=True)
class Signature:
    """Counts of basis 1-vectors squaring to +1, -1 and 0."""

    p: int
    n: int
    z: int

    def __post_init__(self):
        if min(self.p, self.n, self.z) < 0:
            raise ValueError("signature counts must be non-negative")
        if not _MIN_DIM <= self.dim <= _MAX_DIM:
            raise ValueError(
                f"unsupported dimension {self.dim} (expected {_MIN_DIM}..{_MAX_DIM})")

    @property
    def dim(self) -> int:
        return self.p + self.n + self.z

    @property
    def squares(self) -> tuple[int, ...]:
        """Metric square of each basis 1-vector, degenerate directions first."""
        return (0,) * self.z + (-1,) * self.n + (1,) * self.p

    def __str__(self):
        return f"({self.p},{self.n},{self.z})"


def _perm_parity(perm) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def _canonical_sign(tup: tuple[int, ...], dim: int) -> int:
    """Orientation of the canonical blade relative to ascending index order."""
    k = len(tup)
    if k == 0 or k == dim or 2 * k < dim:
        return 1
    if 2 * k == dim and 0 in tup:
        return 1
    co = tuple(i for i in range(dim) if i not in tup)
    return _perm_parity(co + tup)


def _blade_name(tup: tuple[int, ...], sign: int, dim: int) -> str:
    k = len(tup)
    if k == 0:
        return "1"
    if k == dim:
        return "I"
    if k == 1:
        return f"e{tup[0]}"
    if k == dim - 1 and dim in (3, 4):
        (co,) = (i for i in range(dim) if i not in tup)
        return f"E{co}"
    idx = list(tup)
    if sign < 0:
        idx[-1], idx[-2] = idx[-2], idx[-1]
    return "e" + "".join(str(i) for i in idx)


def _mask_product(a: int, b: int, squares) -> tuple[int, float]:
    """Geometric product of two ascending-index blades given as bit masks.

    Returns (result mask, coefficient).  The coefficient carries the
    reordering parity and one metric factor per repeated generator.
    """
    coeff = 1.0
    for j in range(len(squares)):
        if b >> j & 1:
            swaps = bin(a >> (j + 1)).count("1")
            if swaps & 1:
                coeff = -coeff
            if a >> j & 1:
                coeff *= squares[j]
                if coeff == 0.0:
                    return 0, 0.0
    return a ^ b, coeff


class Algebra:
    """A Clifford algebra with precomputed product tables.

    Instances are cheap to share; use :func:`algebra` for a cached one.
    """

    def __init__(self, p: int, n: int = 0, z: int = 0):
        sig = p if isinstance(p, Signature) else Signature(p, n, z)
        self.signature = sig
        self.dim = sig.dim
        self.n_blades = 1 << self.dim
        self._build_basis()
        self._build_tables()

    # -- construction ------------------------------------------------

    def _build_basis(self):
        dim = self.dim
        tuples: list[tuple[int, ...]] = []
        for k in range(dim + 1):
            subs = list(combinations(range(dim), k))
            if 2 * k > dim:
                subs.reverse()
            tuples.extend(subs)
        self.blade_tuples = tuples
        self.masks = [sum(1 << i for i in t) for t in tuples]
        self.blade_signs = np.array(
            [_canonical_sign(t, dim) for t in tuples], dtype=float)
        self.blade_names = [
            _blade_name(t, s, dim)
            for t, s in zip(tuples, self.blade_signs)]
        self.grades = np.array([len(t) for t in tuples], dtype=int)
        self._index_of_mask = {m: i for i, m in enumerate(self.masks)}
        self.name_to_index = {nm: i for i, nm in enumerate(self.blade_names)}
        self.pseudoscalar_index = self.n_blades - 1
        self.even_indices = np.flatnonzero(self.grades % 2 == 0)
        self.grade_indices = {
            k: np.flatnonzero(self.grades == k) for k in range(dim + 1)}

    def _product_tensor(self, squares) -> np.ndarray:
        n = self.n_blades
        t = np.zeros((n, n, n))
        for i in range(n):
            for j in range(n):
                mask, coeff = _mask_product(self.masks[i], self.masks[j], squares)
                if coeff != 0.0:
                    k = self._index_of_mask[mask]
                    t[i, j, k] = (coeff * self.blade_signs[i]
                                  * self.blade_signs[j] * self.blade_signs[k])
        return t

    def _build_tables(self):
        self._gp = self._product_tensor(self.signature.squares)
        # the outer product is the geometric product of the fully
        # degenerate metric: blades sharing a generator wedge to zero
        self._op = self._product_tensor((0,) * self.dim)
        g = self.grades
        ip_keep = (g[None, None, :] == abs(g[:, None, None] - g[None, :, None]))
        self._ip = np.where(ip_keep, self._gp, 0.0)
        self._comm = 0.5 * (self._gp - self._gp.transpose(1, 0, 2))
        rev = np.where(g * (g - 1) // 2 % 2 == 1, -1.0, 1.0)
        self._rev_signs = rev
        # complementary-blade permutation used by the duality module
        full = self.n_blades - 1
        self.complement_index = np.array(
            [self._index_of_mask[full ^ m] for m in self.masks], dtype=int)

    # -- basic constructors -------------------------------------------

    def multivector(self, coeffs) -> "Multivector":
        if isinstance(coeffs, dict):
            arr = np.zeros(self.n_blades)
            for name, value in coeffs.items():
                arr[self.name_to_index[name]] = value
            return Multivector(self, arr)
        arr = np.asarray(coeffs, dtype=float)
        if arr.shape != (self.n_blades,):
            raise ValueError(f"expected {self.n_blades} coefficients")
        return Multivector(self, arr.copy())

    def zero(self) -> "Multivector":
        return Multivector(self, np.zeros(self.n_blades))

    def scalar(self, value: float) -> "Multivector":
        arr = np.zeros(self.n_blades)
        arr[0] = value
        return Multivector(self, arr)

    def blade(self, name: str) -> "Multivector":
        arr = np.zeros(self.n_blades)
        try:
            arr[self.name_to_index[name]] = 1.0
        except KeyError:
            raise KeyError(f"unknown blade {name!r} in Cl{self.signature}") from None
        return Multivector(self, arr)

    @property
    def blades(self) -> dict[str, "Multivector"]:
        return {nm: self.blade(nm) for nm in self.blade_names}

    def __repr__(self):
        return f"Algebra{self.signature}"

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)


_CACHE: dict[tuple[int, int, int], Algebra] = {}


def algebra(p: int, n: int = 0, z: int = 0) -> Algebra:
    """Cached algebra lookup; ``algebra(3, 0, 1)`` is euclidean space."""
    key = (p, n, z)
    if key not in _CACHE:
        _CACHE[key] = Algebra(p, n, z)
    return _CACHE[key]


def pga2d() -> Algebra:
    """The euclidean plane: Cl(2,0,1) over plane-based (here: line-based) forms."""
    return algebra(2, 0, 1)


def pga3d() -> Algebra:
    """Euclidean space: Cl(3,0,1), 1-vectors are planes."""
    return algebra(3, 0, 1)


class Multivector:
    """Immutable dense element of an :class:`Algebra`.

    Operators: ``*`` geometric product, ``^`` outer product (the meet in
    a plane-based algebra), ``|`` generalized inner product (grade
    ``|k-l|`` part), ``&`` join (regressive product via the duality
    map), ``~`` reversion.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, alg: Algebra, coeffs: np.ndarray):
        object.__setattr__(self, "algebra", alg)
        # a private copy, frozen: sharing a Multivector can never leak
        # writes in either direction
        coeffs = np.array(coeffs, dtype=float)
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("Multivector is immutable")

    # -- ring structure ------------------------------------------------

    def _check(self, other: "Multivector"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise SignatureMismatchError(
                f"mixed algebras {self.algebra} and {other.algebra}")

    def _coerce(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self.algebra.scalar(float(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Multivector(self.algebra, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Multivector(self.algebra, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Multivector(self.algebra, other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(self.algebra, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.algebra, self.coeffs * float(other))
        if isinstance(other, Multivector):
            self._check(other)
            out = np.einsum("i,j,ijk->k", self.coeffs, other.coeffs,
                            self.algebra._gp)
            return Multivector(self.algebra, out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.algebra, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.algebra, self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = np.einsum("i,j,ijk->k", self.coeffs, other.coeffs,
                        self.algebra._op)
        return Multivector(self.algebra, out)

    def __or__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = np.einsum("i,j,ijk->k", self.coeffs, other.coeffs,
                        self.algebra._ip)
        return Multivector(self.algebra, out)

    def __and__(self, other):
        from . import duality
        return duality.join(self, other)

    def commutator(self, other: "Multivector") -> "Multivector":
        """Antisymmetric half-difference ``(a b - b a) / 2``."""
        other = self._coerce(other)
        out = np.einsum("i,j,ijk->k", self.coeffs, other.coeffs,
                        self.algebra._comm)
        return Multivector(self.algebra, out)

    def __invert__(self):
        return Multivector(self.algebra, self.coeffs * self.algebra._rev_signs)

    reverse = __invert__

    # -- structure accessors -------------------------------------------

    def grade(self, k: int) -> "Multivector":
        out = np.where(self.algebra.grades == k, self.coeffs, 0.0)
        return Multivector(self.algebra, out)

    def grades(self, rel_tol: float = 0.0) -> list[int]:
        """Grades with a nonzero coefficient.

        With a ``rel_tol``, grades whose largest coefficient falls below
        ``rel_tol * max|coeffs|`` are treated as numerical dust.
        """
        cutoff = rel_tol * float(np.abs(self.coeffs).max(initial=0.0))
        live = np.abs(self.coeffs) > cutoff if cutoff > 0.0 else self.coeffs != 0.0
        present = np.unique(self.algebra.grades[live])
        return [int(k) for k in present]

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    @property
    def pseudo_part(self) -> float:
        return float(self.coeffs[self.algebra.pseudoscalar_index])

    def __getitem__(self, key) -> float:
        if isinstance(key, str):
            key = self.algebra.name_to_index[key]
        return float(self.coeffs[key])

    def dual(self) -> "Multivector":
        from . import duality
        return duality.dual_j(self)

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = self.algebra.scalar(float(other))
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.algebra == other.algebra and np.array_equal(
            self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.algebra.signature, self.coeffs.tobytes()))

    def isclose(self, other, rel: float = REL_TOL, floor: float = ABS_TOL) -> bool:
        other = self._coerce(other)
        scale = max(np.abs(self.coeffs).max(initial=0.0),
                    np.abs(other.coeffs).max(initial=0.0))
        tol = max(floor, rel * scale)
        return bool(np.abs(self.coeffs - other.coeffs).max(initial=0.0) <= tol)

    def norm2(self) -> float:
        """Plain sum of squared coefficients (not a metric norm)."""
        return float(self.coeffs @ self.coeffs)

    # -- formatting ------------------------------------------------------

    def __repr__(self):
        return format_multivector(self)

    __str__ = __repr__


def _format_coeff(c: float) -> str:
    c = float(c)
    if c == int(c) and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


def format_multivector(x: Multivector) -> str:
    terms = []
    for i, c in enumerate(x.coeffs):
        if c == 0.0:
            continue
        name = x.algebra.blade_names[i]
        mag = _format_coeff(abs(c))
        if name != "1":
            mag = name if mag == "1" else f"{mag}{name}"
        if not terms:
            terms.append(mag if c > 0 else f"-{mag}")
        else:
            terms.append(f"+ {mag}" if c > 0 else f"- {mag}")
    return " ".join(terms) if terms else "0"
