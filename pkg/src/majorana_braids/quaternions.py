"""Quaternion arithmetic, the SU(2) embedding, and 3-strand braid triples.

Quaternions q = a + bI + cJ + dK map to SU(2) via

    1 -> id,  I -> diag(i, -i),  J -> [[0, 1], [-1, 0]],  K -> [[0, i], [i, 0]]

so unit quaternions are exactly SU(2).  Unit g = a + b*u with pure unit u
acts on pure quaternions (vectors in R^3) as the rotation P -> g P g†, with
closed form (a^2 - b^2) P + 2ab (u x P) + 2 (P . u) b^2 u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

import numpy as np


@dataclass(frozen=True)
class Quaternion:
    a: float
    b: float
    c: float
    d: float

    def __mul__(self, other):
        if isinstance(other, Real):
            return Quaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + d1 * b2 - b1 * d2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        )

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return self * (1.0 / other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Real):
            other = Quaternion(other, 0.0, 0.0, 0.0)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, Real):
            other = Quaternion(other, 0.0, 0.0, 0.0)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def dagger(self) -> "Quaternion":
        """Conjugate: negates the imaginary part.  q * q.dagger() = |q|^2."""
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def length_squared(self) -> float:
        return self.a**2 + self.b**2 + self.c**2 + self.d**2

    def length(self) -> float:
        return math.sqrt(self.length_squared())

    def inverse(self) -> "Quaternion":
        n2 = self.length_squared()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.dagger() / n2

    def vector(self) -> np.ndarray:
        """Imaginary part as a 3-vector (b, c, d)."""
        return np.array([self.b, self.c, self.d])

    def is_unit(self, tol: float = 1e-12) -> bool:
        return abs(self.length_squared() - 1.0) <= tol

    def is_pure(self, tol: float = 1e-12) -> bool:
        return abs(self.a) <= tol

    def distance(self, other: "Quaternion") -> float:
        return (self - other).length()


Q_ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
Q_I = Quaternion(0.0, 1.0, 0.0, 0.0)
Q_J = Quaternion(0.0, 0.0, 1.0, 0.0)
Q_K = Quaternion(0.0, 0.0, 0.0, 1.0)


def from_vector(v) -> Quaternion:
    """Pure quaternion with imaginary part v."""
    b, c, d = (float(x) for x in v)
    return Quaternion(0.0, b, c, d)


def to_su2(q: Quaternion) -> np.ndarray:
    """2x2 matrix of q; an algebra homomorphism with det = |q|^2."""
    return np.array(
        [
            [q.a + 1j * q.b, q.c + 1j * q.d],
            [-q.c + 1j * q.d, q.a - 1j * q.b],
        ]
    )


def axis_decompose(g: Quaternion, tol: float = 1e-12) -> tuple[float, float, np.ndarray | None]:
    """Write g = a + b*u with b >= 0 and u a pure unit vector.

    Returns (a, b, u); u is None when the imaginary part vanishes.
    """
    v = g.vector()
    b = float(np.linalg.norm(v))
    if b <= tol:
        return g.a, 0.0, None
    return g.a, b, v / b


def rotate(g: Quaternion, P: Quaternion, tol: float = 1e-10) -> Quaternion:
    """g P g† for unit g and pure P: rotation of R^3 about the axis of g."""
    if not g.is_unit(tol):
        raise ValueError("rotate requires a unit quaternion")
    return g * P * g.dagger()


def rotation_formula(g: Quaternion, P: Quaternion) -> Quaternion:
    """Closed form of the rotation: (a^2-b^2) P + 2ab (u x P) + 2 (P.u) b^2 u."""
    a, b, u = axis_decompose(g)
    p = P.vector()
    if u is None:
        return from_vector((a * a) * p)
    out = (a * a - b * b) * p + 2 * a * b * np.cross(u, p) + 2 * np.dot(p, u) * b * b * u
    return from_vector(out)


def rotation_matrix(g: Quaternion) -> np.ndarray:
    """3x3 matrix of the rotation induced by a unit quaternion."""
    cols = [rotate(g, q).vector() for q in (Q_I, Q_J, Q_K)]
    return np.column_stack(cols)


@dataclass(frozen=True)
class BraidConditionReport:
    """Outcome of testing ghg = hgh against the dot-product criterion.

    The criterion u . v = (a^2 - b^2)/(2 b^2) applies when g = a + b*u and
    h = a + b*v share scalar and imaginary magnitude with b != 0 and
    u != v; otherwise ``criterion_defined`` is False and ``reason`` says why.
    """

    braid_residual: float
    braids: bool
    criterion_defined: bool
    reason: str
    dot_product: float | None = None
    expected_dot: float | None = None
    criterion_satisfied: bool | None = None

    @property
    def consistent(self) -> bool:
        """True unless both verdicts are defined and disagree."""
        if not self.criterion_defined:
            return True
        return self.braids == self.criterion_satisfied


def braid_condition(
    g: Quaternion,
    h: Quaternion,
    braid_tol: float = 1e-9,
    dot_tol: float = 1e-9,
) -> BraidConditionReport:
    """Check ghg = hgh numerically and via the dot-product criterion."""
    for q in (g, h):
        if not q.is_unit(1e-9):
            raise ValueError("braid_condition requires unit quaternions")
    residual = (g * h * g).distance(h * g * h)
    braids = residual <= braid_tol

    a_g, b_g, u = axis_decompose(g)
    a_h, b_h, v = axis_decompose(h)
    if abs(a_g - a_h) > dot_tol or abs(b_g - b_h) > dot_tol:
        return BraidConditionReport(
            residual, braids, False, "scalar parts differ; criterion requires g = a+bu, h = a+bv"
        )
    if u is None or v is None or b_g <= dot_tol:
        return BraidConditionReport(
            residual, braids, False, "b = 0: dot-product criterion undefined"
        )
    if float(np.linalg.norm(u - v)) <= dot_tol:
        return BraidConditionReport(
            residual, braids, False, "u = v: g = h and the braid relation is trivial"
        )
    dot = float(np.dot(u, v))
    expected = (a_g * a_g - b_g * b_g) / (2 * b_g * b_g)
    return BraidConditionReport(
        residual,
        braids,
        True,
        "criterion applies",
        dot_product=dot,
        expected_dot=expected,
        criterion_satisfied=abs(dot - expected) <= dot_tol,
    )


def quaternion_triple() -> tuple[Quaternion, Quaternion, Quaternion]:
    """The orthogonal-axes braiding triple (1+I)/√2, (1+J)/√2, (1+K)/√2."""
    s = 1.0 / math.sqrt(2.0)
    return (
        Quaternion(s, s, 0.0, 0.0),
        Quaternion(s, 0.0, s, 0.0),
        Quaternion(s, 0.0, 0.0, s),
    )


def conjugated_pair(
    theta: float, c: float, s: float, tol: float = 1e-12
) -> tuple[Quaternion, Quaternion]:
    """Pair g = e^{I theta}, h = f g f^{-1} with conjugator f = c*I + s*K.

    Requires c^2 + s^2 = 1 so f is a pure unit quaternion.  The pair
    satisfies the braid relation exactly when the axis dot product
    c^2 - s^2 equals (cos^2 - sin^2)/(2 sin^2) of theta; no canonical
    (c, s) is singled out here.
    """
    if abs(c * c + s * s - 1.0) > tol:
        raise ValueError("conjugator needs c^2 + s^2 = 1")
    g = Quaternion(math.cos(theta), math.sin(theta), 0.0, 0.0)
    f = Quaternion(0.0, c, 0.0, s)
    return g, f * g * f.inverse()


#: Golden-ratio conjugate: the positive root of t^2 + t = 1.
TAU = (math.sqrt(5.0) - 1.0) / 2.0


def fibonacci_generators() -> tuple[Quaternion, Quaternion, Quaternion]:
    """The dense 3-strand pair: g = e^{7 pi I / 10}, h = f g f^{-1}.

    f = TAU*I + sqrt(TAU)*K is a pure unit quaternion because
    TAU^2 + TAU = 1.  Returns (g, h, f); g and h satisfy ghg = hgh.
    """
    angle = 7.0 * math.pi / 10.0
    g = Quaternion(math.cos(angle), math.sin(angle), 0.0, 0.0)
    f = Quaternion(0.0, TAU, 0.0, math.sqrt(TAU))
    h = f * g * f.inverse()
    return g, h, f


def braid_word_traces(
    g: Quaternion, h: Quaternion, max_length: int
) -> list[float]:
    """Sorted SU(2) traces of all distinct braid-word images up to a length.

    Walks freely reduced words in {g, g^-1, h, h^-1}, deduplicating group
    elements by rounded components (the image group is infinite; distinct
    elements, not raw words, are what matter for trace diversity).
    """
    gens = [g, g.inverse(), h, h.inverse()]
    inverse_of = {0: 1, 1: 0, 2: 3, 3: 2}

    def key(q: Quaternion):
        return (round(q.a, 10), round(q.b, 10), round(q.c, 10), round(q.d, 10))

    seen = {key(Q_ONE)}
    frontier: list[tuple[Quaternion, int | None]] = [(Q_ONE, None)]
    traces: list[float] = []
    for _ in range(max_length):
        nxt = []
        for q, last in frontier:
            for i, gen in enumerate(gens):
                if last is not None and i == inverse_of[last]:
                    continue
                nq = q * gen
                k = key(nq)
                if k in seen:
                    continue
                seen.add(k)
                nxt.append((nq, i))
                traces.append(2.0 * nq.a)  # trace of the SU(2) image
        frontier = nxt
    traces.sort()
    return traces


def separated_values(values: list[float], min_gap: float) -> list[float]:
    """Greedy subset of sorted values with pairwise separation > min_gap."""
    picked: list[float] = []
    for v in sorted(values):
        if not picked or v - picked[-1] > min_gap:
            picked.append(v)
    return picked
