"""Full-length Reed-Solomon codes: evaluate all polynomials of degree < k
at every element of GF(q), in the field's canonical enumeration order.

These codes meet the Singleton bound (d = n - k + 1); the test suite
confirms that by brute force on every desk-scale instance.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionOutOfRangeError, LengthMismatchError
from .gf import FieldSpec
from .linear import LinearCode, Matrix, Vector


class RSCode:
    """Reed-Solomon code of length n = q and dimension k over GF(q).

    Generator row i holds the evaluations of the monomial x^i; k = q gives
    the full space, which LinearCode admits only through this path.
    """

    __slots__ = ("spec", "k", "points", "code", "d_designed")

    def __init__(self, spec: FieldSpec, k: int):
        if not 1 <= k <= spec.q:
            raise DimensionOutOfRangeError(f"k must satisfy 1 <= k <= q = {spec.q}, got {k}")
        self.spec = spec
        self.k = k
        self.points = tuple(range(spec.q))
        rows = [[spec.pow(x, i) for x in self.points] for i in range(k)]
        self.code = LinearCode._make(Matrix(spec, rows))
        self.d_designed = spec.q - k + 1

    @property
    def n(self) -> int:
        return self.spec.q

    def encode(self, message: Sequence[int]) -> Vector:
        """Evaluate the polynomial with the given coefficients (low degree
        first) at every field element."""
        if len(message) != self.k:
            raise LengthMismatchError(f"message length {len(message)} != k={self.k}")
        f = self.spec
        out = []
        for x in self.points:
            acc = 0
            for c in reversed(message):  # Horner
                acc = f.add(f.mul(acc, x), c)
            out.append(acc)
        return tuple(out)

    def __repr__(self) -> str:
        return f"RSCode([{self.n},{self.k},{self.d_designed}] over {self.spec!r})"


def rs_code(spec: FieldSpec, k: int) -> RSCode:
    return RSCode(spec, k)


def rs_encode(code: RSCode, message: Sequence[int]) -> Vector:
    return code.encode(message)
