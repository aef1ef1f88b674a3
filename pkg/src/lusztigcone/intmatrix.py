"""Small dense exact-integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("IntMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> IntMatrix:
        n = len(cols)
        return cls(tuple(tuple(int(cols[k][j]) for k in range(n)) for j in range(n)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(j == k) for k in range(n)) for j in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, j: int, k: int) -> int:
        """1-based access."""
        return self.rows[j - 1][k - 1]

    def row(self, j: int) -> tuple[int, ...]:
        return self.rows[j - 1]

    def column(self, k: int) -> tuple[int, ...]:
        return tuple(r[k - 1] for r in self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.rows))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows)
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} does not match dimension {self.dim}")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.dim)

    def is_upper_triangular(self) -> bool:
        return all(self.rows[j][k] == 0 for j in range(self.dim) for k in range(j))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[j][j] for j in range(self.dim))

    def min_entry(self) -> int:
        return min(min(r) for r in self.rows)

    def first_difference(self, other: IntMatrix) -> tuple[int, int] | None:
        """1-based position of the first differing entry, or None."""
        for j, (r, s) in enumerate(zip(self.rows, other.rows), 1):
            for k, (x, y) in enumerate(zip(r, s), 1):
                if x != y:
                    return (j, k)
        return None

    def inverse(self) -> IntMatrix:
        """Exact inverse by Gauss-Jordan over the rationals.

        Raises SingularMatrixError if the matrix is singular or the inverse is
        not integral.
        """
        n = self.dim
        m = [[Fraction(x) for x in r] + [Fraction(int(j == k)) for k in range(n)]
             for j, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [x / p for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        out = [row[n:] for row in m]
        if any(x.denominator != 1 for row in out for x in row):
            raise SingularMatrixError("inverse is not integral")
        return IntMatrix.from_rows([[int(x) for x in row] for row in out])

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> IntMatrix:
        return cls.from_rows([int(x) for x in line.split()] for line in text.strip().splitlines())

    def __str__(self) -> str:
        return self.to_text()
