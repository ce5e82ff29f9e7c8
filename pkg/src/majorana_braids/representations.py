"""Constructors for the braid-representation families and the fixed gates.

Every matrix family is materialized over the Jordan-Wigner basis so the
representations live in one comparable matrix ecosystem; the 2x2 families
come from the quaternion layer.  Generator lists are 0-indexed in code;
braid words use the standard signed 1-based letters (sigma_i -> +i,
sigma_i^-1 -> -i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import quaternions
from .clifford import CliffordElement
from .linalg import (
    DimensionGuardError,
    adjoint,
    embed,
    exp_blade,
    frobenius,
    identity,
    is_unitary,
    jordan_wigner,
)

SQRT2 = math.sqrt(2.0)

#: The 4x4 braiding gate with integer entries (basis |00>,|01>,|10>,|11>):
#: |01> -> |10>, |10> -> -|01>, diagonal states fixed.
R_GATE = np.array(
    [[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

#: Majorana factor pair: M = BELL_A @ BELL_B with A^2 = B^2 = I, AB = -BA.
BELL_A = np.diag([1, -1, 1, -1]).astype(complex)
BELL_B = np.fliplr(np.eye(4)).astype(complex)
BELL_M = BELL_A @ BELL_B

#: Bell-basis change matrix (I + M)/sqrt(2); unitary, M^2 = -I.
B_II = (np.eye(4, dtype=complex) + BELL_M) / SQRT2

SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)

for _m in (R_GATE, BELL_A, BELL_B, BELL_M, B_II, SWAP):
    _m.flags.writeable = False


@dataclass(frozen=True)
class UnitaryRep:
    """A named family of unitary braid generators.

    ``generators`` has strands-1 entries, or strands when circular (the
    last generator braids the first and last strand).  Construction checks
    the counts and unitarity of every generator.
    """

    family: str
    strands: int
    dim: int
    generators: tuple[np.ndarray, ...]
    clifford_forms: tuple[CliffordElement, ...] | None = None
    circular: bool = False

    def __post_init__(self):
        expected = self.strands if self.circular else self.strands - 1
        if len(self.generators) != expected:
            raise ValueError(
                f"{self.family}: {len(self.generators)} generators for "
                f"{self.strands} strands (circular={self.circular})"
            )
        for i, g in enumerate(self.generators):
            if g.shape != (self.dim, self.dim):
                raise ValueError(f"{self.family}: generator {i} has shape {g.shape}")
            if not is_unitary(g):
                raise ValueError(f"{self.family}: generator {i} is not unitary")

    def support(self, index: int) -> frozenset[int]:
        """Strand pair braided by generator ``index`` (0-based)."""
        if self.circular:
            return frozenset({index, (index + 1) % self.strands})
        return frozenset({index, index + 1})


@dataclass(frozen=True)
class MajoranaString:
    """Paired Majorana operator lists (A_i, B_i) as dense matrices."""

    pairs: tuple[tuple[np.ndarray, np.ndarray], ...]

    def __post_init__(self):
        dims = {m.shape for pair in self.pairs for m in pair}
        if len(dims) != 1 or any(r != c for r, c in dims):
            raise ValueError("all string operators must be square of equal size")

    @property
    def dim(self) -> int:
        return self.pairs[0][0].shape[0]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class BraidWord:
    """Braid word as signed 1-based letters: +i is sigma_i, -i its inverse."""

    letters: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if any(x == 0 for x in self.letters):
            raise ValueError("braid letters are nonzero signed integers")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "BraidWord":
        """Build from (generator index, exponent) pairs, exponent in {+1,-1}."""
        letters = []
        for index, exp in pairs:
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {exp}")
            letters.append(exp * index)
        return cls(tuple(letters))


def ivanov(n: int, circular: bool = False) -> UnitaryRep:
    """Clifford braiding generators tau_k = (1 + c_{k+1} c_k)/sqrt(2).

    Returns the n-strand representation over jordan_wigner(n); when
    circular, the wrap generator (1 + c_1 c_n)/sqrt(2) is appended.
    """
    if n < 3:
        raise ValueError("ivanov requires at least 3 Majorana operators")
    basis = jordan_wigner(n)
    mats = []
    forms = []
    index_pairs = [(k, k + 1) for k in range(n - 1)]
    if circular:
        index_pairs.append((n - 1, 0))
    for i, j in index_pairs:
        blade = basis.matrices[j] @ basis.matrices[i]  # c_j c_i
        mats.append(exp_blade(math.pi / 4, blade))
        # on the ascending blade c_j c_i picks up a minus sign unless the
        # pair wraps around (j < i)
        lo, hi = (i, j) if i < j else (j, i)
        sign = 1.0 if j < i else -1.0
        forms.append(CliffordElement(n, {(): 1 / SQRT2, (lo, hi): sign / SQRT2}))
    return UnitaryRep(
        family="ivanov-circular" if circular else "ivanov",
        strands=n,
        dim=basis.dim,
        generators=tuple(mats),
        clifford_forms=tuple(forms),
        circular=circular,
    )


def bell_basis_string(n: int) -> MajoranaString:
    """Tensor embeddings A_i, B_i of the Bell-gate Majorana factors.

    Pair i (1-based) places the 4x4 blocks on qubits i, i+1 of an
    (n+1)-qubit space, so the matrices have dimension 2^(n+1).  All seven
    Majorana-string identity families hold exactly (entries are 0, +-1).
    """
    if not 2 <= n <= 6:
        raise DimensionGuardError("bell_basis_string supports 2 <= n <= 6 pairs")
    qubits = n + 1
    pairs = []
    for i in range(1, n + 1):
        pairs.append((embed(BELL_A, i, qubits), embed(BELL_B, i, qubits)))
    return MajoranaString(pairs=tuple(pairs))


def extraspecial_rep(ms: MajoranaString, tol: float = 1e-10) -> UnitaryRep:
    """Braid generators (I + M_i)/sqrt(2) from the products M_i = A_i B_i.

    Validates the extraspecial relations (M_i^2 = -I, adjacent
    anticommutation, distant commutation) before building the generators.
    One generator per pair: n pairs braid n+1 strands.
    """
    dim = ms.dim
    products = [a @ b for a, b in ms.pairs]
    for i, m in enumerate(products):
        if frobenius(m @ m, -identity(dim)) > tol:
            raise ValueError(f"M_{i + 1}^2 != -I: input is not a Majorana string")
    for i in range(len(products)):
        for j in range(i + 1, len(products)):
            bracket = products[i] @ products[j]
            other = products[j] @ products[i]
            want = -other if j - i == 1 else other
            if frobenius(bracket, want) > tol:
                raise ValueError(f"M_{i + 1}, M_{j + 1} violate extraspecial relations")
    gens = tuple((identity(dim) + m) / SQRT2 for m in products)
    return UnitaryRep(
        family="extraspecial-bell",
        strands=len(products) + 1,
        dim=dim,
        generators=gens,
    )


def string_products(ms: MajoranaString) -> list[np.ndarray]:
    """The extraspecial family M_i = A_i B_i of a Majorana string."""
    return [a @ b for a, b in ms.pairs]


def temperley_lieb(n: int) -> list[np.ndarray]:
    """Temperley-Lieb generators U_k = (1 + i c_{k+1} c_k)/sqrt(2).

    Loop value sqrt(2): U_k^2 = sqrt(2) U_k, U_k U_{k+-1} U_k = U_k, and
    distant generators commute.  Not unitary, hence a plain matrix list.
    """
    if n < 3:
        raise ValueError("temperley_lieb requires at least 3 Majorana operators")
    basis = jordan_wigner(n)
    out = []
    for k in range(n - 1):
        blade = basis.matrices[k + 1] @ basis.matrices[k]
        out.append((identity(basis.dim) + 1j * blade) / SQRT2)
    return out


def jones_from_tl(
    tl: Sequence[np.ndarray], A: complex, tol: float = 1e-10
) -> UnitaryRep:
    """Braid generators sigma_k = A U_k + A^{-1} I over a TL family.

    Requires the loop-value constraint -A^2 - A^{-2} = sqrt(2); the result
    is unitary and equivalent (up to a global phase) to the Clifford
    braiding family.
    """
    if abs(A) == 0:
        raise ValueError("A must be a nonzero unit complex number")
    if abs(-A**2 - A**-2 - SQRT2) > tol:
        raise ValueError("A fails the loop-value constraint -A^2 - A^-2 = sqrt(2)")
    dim = tl[0].shape[0]
    gens = tuple(A * U + (1 / A) * identity(dim) for U in tl)
    return UnitaryRep(family="jones", strands=len(tl) + 1, dim=dim, generators=gens)


#: Phase satisfying -A^2 - A^-2 = sqrt(2) (theta = 3 pi / 8).
JONES_A = complex(np.exp(3j * math.pi / 8))


def quaternion_triple_rep() -> UnitaryRep:
    """The 2x2 triple (1+I)/√2, (1+J)/√2, (1+K)/√2 as a circular 3-strand rep.

    The three operators braid pairwise and none commute, which is exactly
    the circular adjacency structure on three strands.
    """
    gens = tuple(quaternions.to_su2(q) for q in quaternions.quaternion_triple())
    return UnitaryRep(
        family="quaternion-triple", strands=3, dim=2, generators=gens, circular=True
    )


def fibonacci_rep() -> UnitaryRep:
    """The dense 3-strand SU(2) pair from the golden-ratio quaternions."""
    g, h, _ = quaternions.fibonacci_generators()
    gens = (quaternions.to_su2(g), quaternions.to_su2(h))
    return UnitaryRep(family="fibonacci", strands=3, dim=2, generators=gens)


def evaluate_word(rep: UnitaryRep, word: BraidWord) -> np.ndarray:
    """Ordered product of generators; inverses are adjoints (all unitary)."""
    out = identity(rep.dim)
    count = len(rep.generators)
    for letter in word.letters:
        index = abs(letter) - 1
        if index >= count:
            raise ValueError(
                f"letter {letter} outside generator range 1..{count}"
            )
        g = rep.generators[index]
        out = out @ (g if letter > 0 else adjoint(g))
    return out
