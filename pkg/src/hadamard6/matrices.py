"""Butson exponent grids, Hadamard verification, and dephasing.

A Butson matrix of order q is stored as an n x n grid of root-of-unity
exponents reduced mod q. General complex matrices are plain numpy arrays of
complex128; the only places they appear are the numeric verification path and
the real symmetric family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cyclo import CycInt


@dataclass(frozen=True)
class PhaseVector:
    """Diagonal of q-th-root phases, stored as exponents mod q."""

    q: int
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("root order must be positive")
        object.__setattr__(self, "exps", tuple(e % self.q for e in self.exps))

    def __len__(self) -> int:
        return len(self.exps)


class ButsonMatrix:
    """Square grid of exponents in [0, q), one entry per q-th root of unity."""

    __slots__ = ("_q", "_exponents")

    def __init__(self, q: int, exponents) -> None:
        if q < 1:
            raise ValueError("root order must be positive")
        rows = tuple(tuple(int(e) % q for e in row) for row in exponents)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise ValueError("exponent grid must be square and nonempty")
        self._q = q
        self._exponents = rows

    @classmethod
    def from_exponents(cls, q: int, grid) -> ButsonMatrix:
        return cls(q, grid)

    @property
    def q(self) -> int:
        return self._q

    @property
    def n(self) -> int:
        return len(self._exponents)

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return self._exponents

    def entry(self, i: int, j: int) -> int:
        return self._exponents[i][j]

    def value(self, i: int, j: int) -> CycInt:
        return CycInt.zeta(self._q, self._exponents[i][j])

    def to_complex(self) -> np.ndarray:
        roots = [
            complex(math.cos(2.0 * math.pi * m / self._q),
                    math.sin(2.0 * math.pi * m / self._q))
            for m in range(self._q)
        ]
        return np.array([[roots[e] for e in row] for row in self._exponents],
                        dtype=np.complex128)

    def to_order(self, q2: int) -> ButsonMatrix:
        """Rewrite the grid over a multiple q2 of q without changing the matrix."""
        if q2 % self._q:
            raise ValueError(f"{self._q} does not divide {q2}")
        m = q2 // self._q
        return ButsonMatrix(q2, [[e * m for e in row] for row in self._exponents])

    def conjugated(self) -> ButsonMatrix:
        """Entrywise complex conjugate (exponents negated mod q)."""
        return ButsonMatrix(self._q, [[-e for e in row] for row in self._exponents])

    def permuted(self, row_perm, col_perm) -> ButsonMatrix:
        """Grid with new (i, j) entry taken from (row_perm[i], col_perm[j])."""
        n = self.n
        rp, cp = tuple(row_perm), tuple(col_perm)
        if sorted(rp) != list(range(n)) or sorted(cp) != list(range(n)):
            raise ValueError("permutations must be bijections on row/column indices")
        return ButsonMatrix(
            self._q, [[self._exponents[rp[i]][cp[j]] for j in range(n)] for i in range(n)]
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ButsonMatrix):
            return self._q == other._q and self._exponents == other._exponents
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._q, self._exponents))

    def __repr__(self) -> str:
        return f"ButsonMatrix(q={self._q}, n={self.n})"


def is_hadamard_exact(b: ButsonMatrix) -> bool:
    """Exact row orthogonality: every off-diagonal row inner product is 0 in Z[zeta_q]."""
    q, n, e = b.q, b.n, b.exponents
    for i in range(n):
        for j in range(i + 1, n):
            counts = [0] * q
            for k in range(n):
                counts[(e[i][k] - e[j][k]) % q] += 1
            if CycInt(q, counts):
                return False
    return True


def is_hadamard_numeric(m: np.ndarray, tol: float) -> bool:
    """Float check: unimodular entries and M M* = n I within tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    m = np.asarray(m, dtype=np.complex128)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix must be square")
    if np.max(np.abs(np.abs(m) - 1.0)) > tol:
        return False
    gram = m @ m.conj().T
    return bool(np.max(np.abs(gram - n * np.eye(n))) <= tol)


def dephase(b: ButsonMatrix) -> tuple[ButsonMatrix, PhaseVector, PhaseVector]:
    """Standard form plus the phase vectors that reconstruct the input.

    Left phases (inverses of the first column) are applied first, then right
    phases clear the resulting first row, so the result has first row and
    column all exponent 0 and is unique for a fixed row/column order. The
    returned vectors satisfy rephase(dephased, left, right) == b.
    """
    q, n, e = b.q, b.n, b.exponents
    grid = [[(e[i][j] - e[i][0] - e[0][j] + e[0][0]) % q for j in range(n)]
            for i in range(n)]
    left = PhaseVector(q, tuple(e[i][0] for i in range(n)))
    right = PhaseVector(q, tuple((e[0][j] - e[0][0]) % q for j in range(n)))
    return ButsonMatrix(q, grid), left, right


def rephase(b: ButsonMatrix, left: PhaseVector, right: PhaseVector) -> ButsonMatrix:
    """Apply diagonal phases on both sides: entry (i, j) gains left[i] + right[j]."""
    if left.q != b.q or right.q != b.q:
        raise ValueError("phase vectors must share the matrix root order")
    if len(left) != b.n or len(right) != b.n:
        raise ValueError("phase vectors must have length n")
    return ButsonMatrix(
        b.q,
        [[b.entry(i, j) + left.exps[i] + right.exps[j] for j in range(b.n)]
         for i in range(b.n)],
    )


def format_matrix(m: ButsonMatrix | np.ndarray) -> str:
    """Render in the text interchange format (`BH q n` or `C n` header)."""
    if isinstance(m, ButsonMatrix):
        lines = [f"BH {m.q} {m.n}"]
        lines += [" ".join(str(e) for e in row) for row in m.exponents]
        return "\n".join(lines) + "\n"
    arr = np.asarray(m, dtype=np.complex128)
    n = arr.shape[0]
    if arr.shape != (n, n):
        raise ValueError("matrix must be square")
    lines = [f"C {n}"]
    for row in arr:
        lines.append(" ".join(f"{repr(float(v.real))},{repr(float(v.imag))}" for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ButsonMatrix | np.ndarray:
    """Parse the text interchange format; raises ValueError on malformed input."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix input")
    header = lines[0].split()
    if header[0] == "BH":
        if len(header) != 3:
            raise ValueError("BH header must be 'BH <q> <n>'")
        q, n = int(header[1]), int(header[2])
        if len(lines) != n + 1:
            raise ValueError(f"expected {n} matrix rows, got {len(lines) - 1}")
        grid = []
        for ln in lines[1:]:
            row = [int(tok) for tok in ln.split()]
            if len(row) != n:
                raise ValueError(f"expected {n} entries per row")
            grid.append(row)
        return ButsonMatrix(q, grid)
    if header[0] == "C":
        if len(header) != 2:
            raise ValueError("C header must be 'C <n>'")
        n = int(header[1])
        if len(lines) != n + 1:
            raise ValueError(f"expected {n} matrix rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            toks = ln.split()
            if len(toks) != n:
                raise ValueError(f"expected {n} entries per row")
            row = []
            for tok in toks:
                re_s, _, im_s = tok.partition(",")
                if not im_s:
                    raise ValueError(f"complex token must be 're,im', got {tok!r}")
                row.append(complex(float(re_s), float(im_s)))
            rows.append(row)
        return np.array(rows, dtype=np.complex128)
    raise ValueError(f"unknown matrix header {header[0]!r}")
