"""Dense complex matrix helpers and the Jordan-Wigner Majorana realization.

Matrices are plain ``numpy.ndarray`` values with dtype complex128.  The
helpers here stay thin: products are ``@``, tensor products are Kronecker
products, and the only exponential provided is the closed form for blades
squaring to -I (every unitary family built here is of that shape).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

#: Default comparison tolerance (Frobenius norm) for matrix predicates.
DEFAULT_TOL = 1e-10

#: Largest qubit count the dense backend accepts (2^12 = 4096 dimensions).
MAX_QUBITS = 12

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class DimensionGuardError(ValueError):
    """Requested construction would exceed the dense-matrix size guard."""


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def adjoint(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def tensor(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, left to right."""
    if not factors:
        raise ValueError("tensor needs at least one factor")
    return reduce(np.kron, factors)


def embed(m: np.ndarray, position: int, n_factors: int) -> np.ndarray:
    """Place m on consecutive qubit slots of an n_factors-qubit space.

    ``position`` is 1-based; a 4x4 m occupies qubits position, position+1.
    """
    width = int(round(np.log2(m.shape[0])))
    if 2**width != m.shape[0] or m.shape[0] != m.shape[1]:
        raise ValueError("embedded matrix must be square with power-of-2 size")
    if not 1 <= position <= n_factors - width + 1:
        raise ValueError(
            f"position {position} with width {width} does not fit {n_factors} qubits"
        )
    if n_factors > MAX_QUBITS:
        raise DimensionGuardError(f"{n_factors} qubits exceeds guard of {MAX_QUBITS}")
    left = identity(2 ** (position - 1))
    right = identity(2 ** (n_factors - position - width + 1))
    return tensor(left, m, right)


def frobenius(a: np.ndarray, b: np.ndarray | None = None) -> float:
    """Frobenius norm of a, or of a - b when b is given."""
    return float(np.linalg.norm(a if b is None else a - b))


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return frobenius(m @ adjoint(m), identity(m.shape[0])) <= tol


def is_hermitian(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return frobenius(m, adjoint(m)) <= tol


def exp_blade(theta: float, B: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """exp(theta * B) = cos(theta) I + sin(theta) B for B with B^2 = -I."""
    dim = B.shape[0]
    if frobenius(B @ B, -identity(dim)) > tol:
        raise ValueError("exp_blade requires B^2 = -I")
    return np.cos(theta) * identity(dim) + np.sin(theta) * B


def hermitian_eigenvalues(H: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ascending real spectrum of a Hermitian matrix."""
    if not is_hermitian(H, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(H)


@dataclass(frozen=True)
class JordanWignerBasis:
    """Concrete Pauli-string matrices realizing n Majorana operators.

    c_{2j-1} = Z^(j-1) X I...   and   c_{2j} = Z^(j-1) Y I...
    on m = ceil(n/2) qubits (1-based site numbering in the formulas;
    ``matrices[k]`` is c_{k+1}).  Each matrix is Hermitian, unitary, squares
    to the identity, and distinct matrices anticommute.
    """

    n_majoranas: int
    qubit_count: int
    matrices: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return 2**self.qubit_count

    def blade_matrix(self, indices: tuple[int, ...]) -> np.ndarray:
        """Matrix of c_{i1} ... c_{ik} for 0-based ascending indices."""
        out = identity(self.dim)
        for i in indices:
            out = out @ self.matrices[i]
        return out


@lru_cache(maxsize=None)
def jordan_wigner(n: int) -> JordanWignerBasis:
    """Jordan-Wigner basis for n Majorana operators; rejects > 12 qubits."""
    if n < 1:
        raise ValueError("need at least one Majorana operator")
    m = (n + 1) // 2
    if m > MAX_QUBITS:
        raise DimensionGuardError(
            f"{n} Majoranas need {m} qubits, exceeding guard of {MAX_QUBITS}"
        )
    mats = []
    for site in range(1, n + 1):  # 1-based c_site
        j = (site + 1) // 2
        op = _X if site % 2 == 1 else _Y
        mat = tensor(*([_Z] * (j - 1) + [op] + [_I2] * (m - j)))
        mat.flags.writeable = False
        mats.append(mat)
    return JordanWignerBasis(n_majoranas=n, qubit_count=m, matrices=tuple(mats))


def element_to_matrix(elem, basis: JordanWignerBasis | None = None) -> np.ndarray:
    """Matrix of a sparse Clifford element in the Jordan-Wigner basis."""
    if basis is None:
        basis = jordan_wigner(elem.num_generators)
    if basis.n_majoranas != elem.num_generators:
        raise ValueError("basis size does not match element")
    out = np.zeros((basis.dim, basis.dim), dtype=complex)
    for blade_ix, coeff in elem.terms.items():
        out += coeff * basis.blade_matrix(blade_ix)
    return out


# -- JSON wire format ------------------------------------------------------
# {"rows": r, "cols": c, "entries": [[re, im], ...]} flattened row-major.


def matrix_to_json(m: np.ndarray) -> dict:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError("only 2-d matrices serialize")
    return {
        "rows": int(arr.shape[0]),
        "cols": int(arr.shape[1]),
        "entries": [[float(v.real), float(v.imag)] for v in arr.ravel()],
    }


def matrix_from_json(data: dict) -> np.ndarray:
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = data["entries"]
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        flat = [complex(re, im) for re, im in entries]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    return np.array(flat, dtype=complex).reshape(rows, cols)
