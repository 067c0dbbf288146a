"""Generic [n, k] linear codes over GF(q).

Vectors are tuples of integer element encodings; Matrix stores a row-major
grid of encodings plus its FieldSpec.  Exhaustive searches (minimum
distance, coset-leader tables) are deliberate, bounded oracles: they raise
BudgetExceededError instead of running past the enumeration budget, which
defaults to 2**24 and can be overridden per call or via the
EVALCODES_BUDGET environment variable.
"""

from __future__ import annotations

import math
import os
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BudgetExceededError,
    EvenDistanceError,
    LengthMismatchError,
    RankDeficientError,
    TrivialCodeError,
)
from .gf import FieldSpec

Vector = tuple[int, ...]

DEFAULT_BUDGET = 1 << 24
_ENUM_BLOCK = 1 << 18  # rows held in memory at once during span enumeration


def default_budget() -> int:
    env = os.environ.get("EVALCODES_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def hamming(x: Sequence[int], y: Sequence[int]) -> int:
    """Number of coordinates where x and y differ."""
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths {len(x)} != {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def weight(x: Sequence[int]) -> int:
    """Hamming weight: distance to the zero vector."""
    return sum(1 for a in x if a)


class Matrix:
    """Dense matrix over a FieldSpec, entries stored as integer encodings."""

    __slots__ = ("spec", "rows", "cols", "data")

    def __init__(self, spec: FieldSpec, data: Sequence[Sequence[int]], cols: int | None = None):
        self.spec = spec
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(r) != self.cols for r in self.data):
                raise LengthMismatchError("ragged rows")
        else:
            if cols is None:
                raise LengthMismatchError("empty matrix needs an explicit column count")
            self.cols = cols

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        return cls(spec, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int) -> Vector:
        return tuple(self.data[i])

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.spec, [self.column(j) for j in range(self.cols)], cols=self.rows)

    def matvec(self, x: Sequence[int]) -> Vector:
        """Matrix times column vector."""
        if len(x) != self.cols:
            raise LengthMismatchError(f"vector length {len(x)} != {self.cols} columns")
        f = self.spec
        out = []
        for r in self.data:
            acc = 0
            for a, b in zip(r, x):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise LengthMismatchError("inner dimensions disagree")
        f = self.spec
        ot = other.transpose()
        out = []
        for r in self.data:
            row = []
            for c in ot.data:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(self.spec, out, cols=other.cols)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        f = self.spec
        m = [list(r) for r in self.data]
        pivots: list[int] = []
        pr = 0
        for col in range(self.cols):
            sel = next((i for i in range(pr, len(m)) if m[i][col]), None)
            if sel is None:
                continue
            m[pr], m[sel] = m[sel], m[pr]
            inv = f.inv(m[pr][col])
            if inv != 1:
                m[pr] = [f.mul(inv, v) for v in m[pr]]
            for i in range(len(m)):
                if i != pr and m[i][col]:
                    c = m[i][col]
                    m[i] = [f.sub(a, f.mul(c, b)) for a, b in zip(m[i], m[pr])]
            pivots.append(col)
            pr += 1
            if pr == len(m):
                break
        return Matrix(self.spec, m, cols=self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_space_basis(self) -> "Matrix":
        """Nonzero rows of the RREF: a canonical basis of the row space."""
        r, pivots = self.rref()
        return Matrix(self.spec, r.data[: len(pivots)], cols=self.cols)

    def null_space(self) -> "Matrix":
        """Basis (as rows) of {x : self @ x^t = 0}; may have zero rows."""
        f = self.spec
        r, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(r.data[i][fc])
            basis.append(v)
        return Matrix(self.spec, basis, cols=self.cols)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.data, dtype=np.int16).reshape(self.rows, self.cols)

    def format_text(self) -> str:
        """One row per line, integer encodings separated by spaces."""
        return "\n".join(" ".join(str(v) for v in r) for r in self.data)

    @classmethod
    def parse_text(cls, spec: FieldSpec, text: str) -> "Matrix":
        rows = [[int(v) for v in line.split()] for line in text.strip().splitlines() if line.strip()]
        for r in rows:
            for v in r:
                if not 0 <= v < spec.q:
                    raise ValueError(f"entry {v} is not an element encoding of {spec!r}")
        return cls(spec, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.spec == other.spec
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"Matrix({self.spec!r}, {self.rows}x{self.cols})"


def _np_scale(spec: FieldSpec, c: int, row: np.ndarray) -> np.ndarray:
    return spec.np_mul[c, row]


def _span_min_weight(spec: FieldSpec, gen: np.ndarray) -> int:
    """Minimum weight over all nonzero combinations of the given rows.

    The rows must be linearly independent.  Enumerates the full span in
    blocks so memory stays bounded while the lookup work is vectorized.
    """
    q = spec.q
    k, n = gen.shape
    add, mul = spec.np_add, spec.np_mul
    base = np.zeros((1, n), dtype=np.int16)
    i = 0
    while i < k and base.shape[0] * q <= _ENUM_BLOCK:
        base = np.concatenate([add[base, mul[c, gen[i]][None, :]] for c in range(q)])
        i += 1
    w = (base != 0).sum(axis=1)
    best = int(w[w > 0].min()) if (w > 0).any() else n + 1
    rest = gen[i:]
    for coeffs in product(range(q), repeat=k - i):
        if not any(coeffs):
            continue
        offset = np.zeros(n, dtype=np.int16)
        for c, row in zip(coeffs, rest):
            if c:
                offset = add[offset, mul[c, row]]
        shifted = add[base, offset[None, :]]
        best = min(best, int((shifted != 0).sum(axis=1).min()))
    return best


class LinearCode:
    """A linear code given by a full-row-rank generator matrix.

    The public constructor rejects the degenerate cases k = 0 and k = n;
    the Reed-Solomon path may build a full-space code (k = n) through
    _make, because the full evaluation code with k = q is a legitimate,
    if degenerate, member of that family.
    """

    __slots__ = ("spec", "generator", "n", "k", "_standard", "_parity", "_mindist", "_leaders")

    def __init__(self, generator: Matrix, _allow_full: bool = False):
        k, n = generator.rows, generator.cols
        if generator.rank() != k:
            raise RankDeficientError("generator rows are linearly dependent")
        if k == 0 or (k >= n and not _allow_full) or k > n:
            raise TrivialCodeError(f"[{n},{k}] is not a proper nontrivial code")
        self.spec = generator.spec
        self.generator = generator
        self.n = n
        self.k = k
        self._standard = None
        self._parity = None
        self._mindist = None
        self._leaders = None

    @classmethod
    def from_generator(cls, generator: Matrix) -> "LinearCode":
        return cls(generator)

    @classmethod
    def _make(cls, generator: Matrix) -> "LinearCode":
        """Internal constructor that additionally admits the full space."""
        return cls(generator, _allow_full=True)

    # -- structure

    def standard_form(self) -> tuple[Matrix, tuple[int, ...]]:
        """Generator [I_k | P] of an equivalent code plus the permutation.

        perm[j] is the original column shown at position j; a full-rank
        generator always admits such a permutation.
        """
        if self._standard is None:
            r, pivots = self.generator.rref()
            perm = tuple(pivots) + tuple(j for j in range(self.n) if j not in pivots)
            std = Matrix(self.spec, [[r.data[i][j] for j in perm] for i in range(self.k)], cols=self.n)
            self._standard = (std, perm)
        return self._standard

    def parity_check(self) -> Matrix:
        """(n-k) x n matrix H with H g^t = 0 for every generator row g.

        Built as [-P^t | I] against the standard form, then the columns are
        moved back to the original coordinate order so the identity holds
        for the generator as given, not only for the permuted code.
        """
        if self._parity is None:
            f = self.spec
            std, perm = self.standard_form()
            nk = self.n - self.k
            h_std = [
                [f.neg(std.data[j][self.k + i]) for j in range(self.k)]
                + [1 if c == i else 0 for c in range(nk)]
                for i in range(nk)
            ]
            h = [[0] * self.n for _ in range(nk)]
            for j, orig in enumerate(perm):
                for i in range(nk):
                    h[i][orig] = h_std[i][j]
            self._parity = Matrix(f, h, cols=self.n)
        return self._parity

    def dual(self) -> "LinearCode":
        """The orthogonal code, generated by the parity-check matrix."""
        if self.k == self.n:
            raise TrivialCodeError("dual of the full space is the zero code")
        return LinearCode._make(self.parity_check())

    # -- encoding / membership

    def encode(self, message: Sequence[int]) -> Vector:
        if len(message) != self.k:
            raise LengthMismatchError(f"message length {len(message)} != k={self.k}")
        f = self.spec
        out = [0] * self.n
        for m, row in zip(message, self.generator.data):
            if m:
                out = [f.add(o, f.mul(m, g)) for o, g in zip(out, row)]
        return tuple(out)

    def syndrome(self, x: Sequence[int]) -> Vector:
        if len(x) != self.n:
            raise LengthMismatchError(f"vector length {len(x)} != n={self.n}")
        return self.parity_check().matvec(x)

    def contains(self, x: Sequence[int]) -> bool:
        return not any(self.syndrome(x))

    def codewords(self) -> Iterator[Vector]:
        """All q^k codewords; intended for small codes only."""
        f = self.spec
        for msg in product(range(f.q), repeat=self.k):
            yield self.encode(msg)

    # -- exhaustive oracles

    def min_distance(self, budget: int | None = None) -> int:
        """Exact minimum distance by enumerating every nonzero codeword."""
        if self._mindist is None:
            budget = default_budget() if budget is None else budget
            if self.spec.q**self.k > budget:
                raise BudgetExceededError(
                    f"q^k = {self.spec.q}^{self.k} exceeds enumeration budget {budget}"
                )
            self._mindist = _span_min_weight(self.spec, self.generator.to_numpy())
        return self._mindist

    def coset_leader_table(self, budget: int | None = None) -> dict[Vector, Vector]:
        """Map from syndrome to its minimum-weight coset leader.

        Ties among equal-weight leaders are broken by lexicographic order
        of the coordinate vectors, making decoding deterministic.
        """
        if self._leaders is None:
            budget = default_budget() if budget is None else budget
            q, n = self.spec.q, self.n
            cosets = q ** (self.n - self.k)
            if cosets > budget:
                raise BudgetExceededError(
                    f"q^(n-k) = {q}^{self.n - self.k} exceeds enumeration budget {budget}"
                )
            table: dict[Vector, Vector] = {tuple([0] * (self.n - self.k)): tuple([0] * n)}
            nonzero = range(1, q)
            for w in range(1, n + 1):
                if len(table) == cosets:
                    break
                bucket = []
                for support in combinations(range(n), w):
                    for values in product(nonzero, repeat=w):
                        v = [0] * n
                        for pos, val in zip(support, values):
                            v[pos] = val
                        bucket.append(tuple(v))
                bucket.sort()
                for v in bucket:
                    s = self.syndrome(v)
                    if s not in table:
                        table[s] = v
                        if len(table) == cosets:
                            break
            self._leaders = table
        return self._leaders

    def decode(self, x: Sequence[int], budget: int | None = None) -> Vector:
        """Syndrome decoding: subtract the coset leader of x's syndrome.

        Corrects any error pattern of weight <= floor((d-1)/2)."""
        if len(x) != self.n:
            raise LengthMismatchError(f"vector length {len(x)} != n={self.n}")
        leader = self.coset_leader_table(budget)[self.syndrome(x)]
        f = self.spec
        return tuple(f.sub(a, b) for a, b in zip(x, leader))

    def is_perfect(self, d: int) -> bool:
        """Sphere-packing equality for true odd distance d = 2e + 1."""
        if d % 2 == 0:
            raise EvenDistanceError("perfect-code check requires odd distance")
        e = (d - 1) // 2
        q, n = self.spec.q, self.n
        ball = sum(math.comb(n, i) * (q - 1) ** i for i in range(e + 1))
        return ball * q**self.k == q**n

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.spec!r})"


def code_from_generator(generator: Matrix) -> LinearCode:
    """Code spanned by the rows of the given full-row-rank matrix."""
    return LinearCode.from_generator(generator)
