"""Sparse arithmetic in the Clifford algebra of Majorana operators.

The algebra is generated by ``c_0, ..., c_{n-1}`` subject to

    c_k * c_k = 1          for all k,
    c_i * c_j = -c_j * c_i for i != j.

An element is a finite complex combination of basis blades
``c_{i1} c_{i2} ... c_{ik}`` with strictly ascending indices, stored as a
map from the index tuple to its coefficient.  The empty tuple is the scalar
unit.  All values are immutable after construction and every operation is a
pure function, so elements are safe to share across threads.

Coefficients below :data:`PRUNE_TOL` in magnitude are dropped when an
element is normalized; exact symbolic arithmetic is out of scope.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Mapping

Blade = tuple[int, ...]

#: Coefficients with magnitude at or below this are pruned on normalization.
PRUNE_TOL = 1e-14


def _merge_blades(left: Blade, right: Blade) -> tuple[int, Blade]:
    """Multiply two ascending blades, returning (sign, product blade).

    The sign is the parity of the transpositions needed to sort the
    concatenated index lists; equal indices cancel in pairs via c^2 = 1,
    picking up the sign accumulated while moving them together.
    """
    out = list(left)
    sign = 1
    for g in right:
        i = bisect_left(out, g)
        if i < len(out) and out[i] == g:
            # anticommute past everything to the right of the twin, then cancel
            if (len(out) - i - 1) % 2:
                sign = -sign
            out.pop(i)
        else:
            if (len(out) - i) % 2:
                sign = -sign
            out.insert(i, g)
    return sign, tuple(out)


class CliffordElement:
    """An element of the Clifford algebra on ``num_generators`` Majoranas.

    Supports ``+``, ``-``, ``*`` (by scalars or elements), ``/`` by scalars,
    and :meth:`dagger`.  Instances are immutable; arithmetic returns new
    elements with near-zero coefficients pruned.
    """

    __slots__ = ("num_generators", "terms")

    num_generators: int
    terms: Mapping[Blade, complex]

    def __init__(self, num_generators: int, terms: Mapping[Blade, complex]):
        if num_generators < 1:
            raise ValueError("num_generators must be positive")
        clean: dict[Blade, complex] = {}
        for blade, coeff in terms.items():
            blade = tuple(blade)
            if any(not (0 <= i < num_generators) for i in blade):
                raise ValueError(
                    f"blade {blade} has indices outside [0, {num_generators})"
                )
            if list(blade) != sorted(set(blade)):
                raise ValueError(f"blade {blade} is not strictly ascending")
            c = complex(coeff)
            if abs(c) > PRUNE_TOL:
                clean[blade] = c
        object.__setattr__(self, "num_generators", num_generators)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("CliffordElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CliffordElement":
        return cls(n, {})

    @classmethod
    def scalar(cls, n: int, value: complex) -> "CliffordElement":
        return cls(n, {(): value})

    @classmethod
    def unit(cls, n: int) -> "CliffordElement":
        return cls.scalar(n, 1.0)

    # -- queries -----------------------------------------------------------

    def coefficient(self, indices: Iterable[int]) -> complex:
        """Coefficient of the blade with the given ascending indices."""
        return self.terms.get(tuple(indices), 0j)

    def norm(self) -> float:
        """l2 norm of the coefficient vector (blades are orthonormal)."""
        return sum(abs(c) ** 2 for c in self.terms.values()) ** 0.5

    def is_zero(self, tol: float = PRUNE_TOL) -> bool:
        return self.norm() <= tol

    def isclose(self, other: "CliffordElement", tol: float = 1e-12) -> bool:
        return (self - other).norm() <= tol

    # -- arithmetic --------------------------------------------------------

    def _require_same_algebra(self, other: "CliffordElement") -> None:
        if self.num_generators != other.num_generators:
            raise ValueError(
                f"mismatched generator counts: "
                f"{self.num_generators} vs {other.num_generators}"
            )

    def __add__(self, other):
        if isinstance(other, Number):
            other = CliffordElement.scalar(self.num_generators, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._require_same_algebra(other)
        terms = dict(self.terms)
        for blade, coeff in other.terms.items():
            terms[blade] = terms.get(blade, 0j) + coeff
        return CliffordElement(self.num_generators, terms)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(
            self.num_generators, {b: -c for b, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, Number):
            other = CliffordElement.scalar(self.num_generators, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return CliffordElement(
                self.num_generators,
                {b: c * other for b, c in self.terms.items()},
            )
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._require_same_algebra(other)
        terms: dict[Blade, complex] = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                sign, blade = _merge_blades(b1, b2)
                terms[blade] = terms.get(blade, 0j) + sign * c1 * c2
        return CliffordElement(self.num_generators, terms)

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1.0 / other)
        return NotImplemented

    def dagger(self) -> "CliffordElement":
        """Adjoint: reverses each blade and conjugates coefficients.

        Majorana generators are self-adjoint, so the blade adjoint is the
        reversal sign (-1)^(k(k-1)/2) for grade k.
        """
        terms = {}
        for blade, coeff in self.terms.items():
            k = len(blade)
            sign = -1 if (k * (k - 1) // 2) % 2 else 1
            terms[blade] = sign * coeff.conjugate()
        return CliffordElement(self.num_generators, terms)

    # -- display -----------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return f"CliffordElement({self.num_generators}, 0)"
        parts = []
        for blade in sorted(self.terms, key=lambda b: (len(b), b)):
            label = "".join(f"c{i}" for i in blade) or "1"
            parts.append(f"({self.terms[blade]:.6g})*{label}")
        return f"CliffordElement({self.num_generators}, {' + '.join(parts)})"


def generator(n: int, k: int) -> CliffordElement:
    """The single Majorana generator c_k in the algebra on n generators."""
    if not 0 <= k < n:
        raise ValueError(f"generator index {k} out of range [0, {n})")
    return CliffordElement(n, {(k,): 1.0})


def blade(n: int, indices: Iterable[int], coeff: complex = 1.0) -> CliffordElement:
    """Single-blade element coeff * c_{i1} ... c_{ik}, indices ascending."""
    return CliffordElement(n, {tuple(indices): coeff})


def invert_binomial(
    a: complex, b: complex, B: CliffordElement, tol: float = 1e-12
) -> CliffordElement:
    """Inverse of a + b*B for a single blade B with B^2 = +1 or -1.

    (a + bB)(a - bB) = a^2 - b^2 B^2, so the inverse is (a - bB) divided by
    a^2 + b^2 when B^2 = -1 and by a^2 - b^2 when B^2 = +1.  Raises
    ValueError when B is not a single blade squaring to +-1 or when the
    denominator vanishes (the binomial is not invertible).
    """
    if len(B.terms) != 1:
        raise ValueError("B must be a single-blade element")
    square = (B * B).coefficient(())
    if abs(square - 1.0) <= tol:
        denom = a * a - b * b
    elif abs(square + 1.0) <= tol:
        denom = a * a + b * b
    else:
        raise ValueError(f"B^2 = {square:.6g}, expected +1 or -1")
    if abs(denom) <= tol:
        raise ValueError("a + b*B is not invertible (denominator vanishes)")
    return (CliffordElement.scalar(B.num_generators, a) - b * B) / denom


def conjugate_action(
    s: CliffordElement,
    s_inv: CliffordElement,
    x: CliffordElement,
    tol: float = 1e-10,
) -> CliffordElement:
    """s * x * s_inv, after checking that s_inv really inverts s."""
    check = s * s_inv - CliffordElement.unit(s.num_generators)
    if check.norm() > tol:
        raise ValueError("s_inv is not an inverse of s")
    return s * x * s_inv


@dataclass(frozen=True)
class FermionPair:
    """Annihilation/creation pair built from two Majorana generators.

    Satisfies psi^2 = (psi_dagger)^2 = 0 and
    psi*psi_dagger + psi_dagger*psi = 1.
    """

    psi: CliffordElement
    psi_dagger: CliffordElement


def fermion_from_majoranas(c1: CliffordElement, c2: CliffordElement) -> FermionPair:
    """Standard fermion psi = (c1 + i*c2)/2 from two distinct generators.

    Convention: the inverse maps are c1 = psi + psi_dagger and
    c2 = (psi - psi_dagger)/i, i.e. the Majoranas are recovered without a
    factor of 2.  Inputs must be distinct unit single-generator elements.
    """
    for elem in (c1, c2):
        if len(elem.terms) != 1:
            raise ValueError("inputs must be single Majorana generators")
        (blade_ix, coeff), = elem.terms.items()
        if len(blade_ix) != 1 or abs(coeff - 1.0) > PRUNE_TOL:
            raise ValueError("inputs must be unit coefficient generators")
    c1._require_same_algebra(c2)
    if next(iter(c1.terms)) == next(iter(c2.terms)):
        raise ValueError("inputs must be distinct generators")
    psi = (c1 + 1j * c2) / 2
    return FermionPair(psi=psi, psi_dagger=psi.dagger())
