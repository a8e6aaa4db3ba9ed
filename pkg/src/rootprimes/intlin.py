"""Exact linear algebra over the integers.

Everything here runs on plain Python integers, so intermediate results may
grow without bound and never overflow.  The module provides Smith and Hermite
normal forms with unimodular transforms, row lattices with membership and
coordinate queries, and invariant factors of finitely generated abelian
groups (quotients of ``Z^r`` by a row lattice).

Matrices follow the row convention: the lattice spanned by a matrix is the
integer span of its rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ContainmentError


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError("dimension mismatch in dot product")
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = [tuple(int(x) for x in row) for row in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with rows")
        else:
            width = 0 if cols is None else cols
        flat = tuple(x for row in data for x in row)
        return cls(len(data), width, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            m[i][i] = int(d)
        return cls.from_rows(m, cols=cols)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        other_cols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            out.append([dot(r, c) for c in other_cols])
        return IntMatrix.from_rows(out, cols=other.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix difference")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(dot(self.row(i), vec) for i in range(self.rows))

    def det(self) -> int:
        """Exact determinant by the Bareiss fraction-free algorithm."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot is None:
                    return 0
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1

    def rank(self) -> int:
        h, _ = hermite_normal_form(self)
        return sum(1 for i in range(h.rows) if any(h.row(i)))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows)) + "]"


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization U @ M @ V = diag(divisors) with unimodular U, V.

    ``divisors`` is the full diagonal of length min(rows, cols): a divisibility
    chain of nonnegative integers, zeros (rank deficiency) last.
    """

    U: IntMatrix
    V: IntMatrix
    divisors: tuple[int, ...]


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Smith normal form with transforms.

    Pivots are chosen by smallest nonzero absolute value to limit coefficient
    growth; all arithmetic is exact.
    """
    d, U, V = _smith(M, with_transforms=True)
    return SmithForm(U=U, V=V, divisors=d)


def snf_divisors(M: IntMatrix) -> tuple[int, ...]:
    """Diagonal of the Smith normal form, skipping transform bookkeeping."""
    d, _, _ = _smith(M, with_transforms=False)
    return d


def _smith(M: IntMatrix, with_transforms: bool):
    r, c = M.rows, M.cols
    a = M.to_rows()
    U = [[int(i == j) for j in range(r)] for i in range(r)] if with_transforms else None
    V = [[int(i == j) for j in range(c)] for i in range(c)] if with_transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):
        # row i -= q * row j
        ai, aj = a[i], a[j]
        for k in range(c):
            ai[k] -= q * aj[k]
        if U is not None:
            ui, uj = U[i], U[j]
            for k in range(r):
                ui[k] -= q * uj[k]

    def col_sub(i, j, q):
        # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        if V is not None:
            for row in V:
                row[i] -= q * row[j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]

    n = min(r, c)
    t = 0
    while t < n:
        # smallest-nonzero-absolute-value pivot in the trailing submatrix
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        # alternate row/column clearing; remainders swap into the pivot slot
        while True:
            changed = False
            for i in range(t + 1, r):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_sub(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
                        break
            if changed:
                continue
            for j in range(t + 1, c):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_sub(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
                        break
            if not changed:
                break

        # enforce the divisibility chain before advancing
        p = a[t][t]
        violation = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if a[i][j] % p:
                    violation = i
                    break
            if violation is not None:
                break
        if violation is not None:
            row_sub(t, violation, -1)  # add the offending row, then re-clear
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    divisors = tuple(a[i][i] for i in range(n))
    if with_transforms:
        return divisors, IntMatrix.from_rows(U, cols=r), IntMatrix.from_rows(V, cols=c)
    return divisors, None, None


# ---------------------------------------------------------------------------
# Hermite normal form and row lattices
# ---------------------------------------------------------------------------


def hermite_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form: returns (H, U) with H = U @ M, U unimodular.

    H is in row echelon shape with positive pivots, zeros below each pivot,
    entries above a pivot reduced into [0, pivot), zero rows last.  H is the
    canonical basis of the row lattice of M.
    """
    r, c = M.rows, M.cols
    a = M.to_rows()
    U = [[int(i == j) for j in range(r)] for i in range(r)]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def row_sub(i, j, q):
        ai, aj = a[i], a[j]
        for k in range(c):
            ai[k] -= q * aj[k]
        ui, uj = U[i], U[j]
        for k in range(r):
            ui[k] -= q * uj[k]

    pr = 0
    for col in range(c):
        if pr == r:
            break
        while True:
            live = [i for i in range(pr, r) if a[i][col]]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(a[i][col]), i))
            if i0 != pr:
                swap(pr, i0)
            done = True
            for i in range(pr + 1, r):
                if a[i][col]:
                    row_sub(i, pr, a[i][col] // a[pr][col])
                    if a[i][col]:
                        done = False
            if done:
                break
        if a[pr][col] == 0:
            continue
        if a[pr][col] < 0:
            a[pr] = [-x for x in a[pr]]
            U[pr] = [-x for x in U[pr]]
        for i in range(pr):
            q = a[i][col] // a[pr][col]
            if q:
                row_sub(i, pr, q)
        pr += 1

    return IntMatrix.from_rows(a, cols=c), IntMatrix.from_rows(U, cols=r)


def row_basis(M: IntMatrix) -> IntMatrix:
    """Canonical (Hermite) basis of the row lattice of M, one row per rank."""
    h, _ = hermite_normal_form(M)
    rows = [h.row(i) for i in range(h.rows) if any(h.row(i))]
    return IntMatrix.from_rows(rows, cols=M.cols)


class RowLattice:
    """Integer row span of a matrix with membership and coordinate queries."""

    def __init__(self, generators: IntMatrix):
        self.ambient_dim = generators.cols
        basis = row_basis(generators)
        self._basis = basis.to_rows()
        self._pivots = [next(j for j, x in enumerate(row) if x) for row in self._basis]

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> IntMatrix:
        return IntMatrix.from_rows(self._basis, cols=self.ambient_dim)

    def key(self) -> tuple:
        """Canonical hashable form; equal lattices give equal keys."""
        return tuple(tuple(row) for row in self._basis)

    def coords(self, vec: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Coordinates of vec over the Hermite basis, or None if outside."""
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        v = list(vec)
        out = []
        for row, p in zip(self._basis, self._pivots):
            q, rem = divmod(v[p], row[p])
            if rem:
                return None
            if q:
                for k in range(self.ambient_dim):
                    v[k] -= q * row[k]
            out.append(q)
        if any(v):
            return None
        return tuple(out)

    def __contains__(self, vec: Sequence[int]) -> bool:
        return self.coords(vec) is not None

    def contains_lattice(self, other: "RowLattice") -> bool:
        return all(self.coords(row) is not None for row in other._basis)


# ---------------------------------------------------------------------------
# Finitely generated abelian groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinAbGroup:
    """Invariant-factor form of a finitely generated abelian group.

    ``torsion`` is a divisibility chain of integers > 1; ``free_rank`` counts
    infinite cyclic summands.
    """

    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d <= 1:
                raise ValueError("torsion entries must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion entries must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def order(self) -> Optional[int]:
        """Group order, or None for infinite groups."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    def p_part(self, p: int) -> tuple[int, ...]:
        """The p-power parts (> 1) of the torsion entries."""
        out = []
        for d in self.torsion:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            if q > 1:
                out.append(q)
        return tuple(out)

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    @classmethod
    def from_dict(cls, data: dict) -> "FinAbGroup":
        return cls(torsion=tuple(int(x) for x in data["torsion"]), free_rank=int(data["free_rank"]))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def quotient_group(ambient_rank: int, generators: IntMatrix) -> FinAbGroup:
    """Z^ambient_rank modulo the row lattice of ``generators``.

    The generator matrix must have ``ambient_rank`` columns; generators may be
    redundant or empty (the zero lattice).
    """
    if generators.cols != ambient_rank:
        raise ValueError(
            f"dimension mismatch: generators have {generators.cols} columns, ambient rank is {ambient_rank}"
        )
    basis = row_basis(generators)
    divisors = snf_divisors(basis)
    torsion = tuple(d for d in divisors if d > 1)
    return FinAbGroup(torsion=torsion, free_rank=ambient_rank - basis.rows)


def p_torsion_free(group: FinAbGroup, p: int) -> bool:
    """True when no torsion entry is divisible by the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return all(d % p for d in group.torsion)


def relative_divisors(sub: IntMatrix, ambient: IntMatrix) -> list[int]:
    """Elementary divisors of the row lattice of ``sub`` inside that of ``ambient``.

    Rewrites a basis of the sublattice in coordinates of an ambient basis and
    takes the Smith chain; the list has one entry per rank of the sublattice
    (all positive).  Raises ContainmentError when the row span of ``sub`` is
    not inside the row span of ``ambient``.
    """
    if sub.cols != ambient.cols:
        raise ValueError("sub and ambient must live in a common Z^r")
    amb = RowLattice(ambient)
    coords = []
    for i in range(sub.rows):
        c = amb.coords(sub.row(i))
        if c is None:
            raise ContainmentError(f"row {i} of the sublattice lies outside the ambient lattice")
        coords.append(c)
    coord_basis = row_basis(IntMatrix.from_rows(coords, cols=amb.rank))
    return [d for d in snf_divisors(coord_basis) if d]


# ---------------------------------------------------------------------------
# Rational solves (exact, via Fraction)
# ---------------------------------------------------------------------------


def solve_right(A: IntMatrix, b: Sequence[int]) -> Optional[tuple[Fraction, ...]]:
    """Solve A @ x = b over the rationals.

    Returns None when the system is inconsistent.  Free variables (if the
    solution is not unique) are set to zero.
    """
    if A.rows != len(b):
        raise ValueError("right-hand side length does not match row count")
    m = [[Fraction(A.at(i, j)) for j in range(A.cols)] + [Fraction(b[i])] for i in range(A.rows)]
    rows, cols = A.rows, A.cols
    pivot_cols = []
    pr = 0
    for col in range(cols):
        piv = next((i for i in range(pr, rows) if m[i][col]), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        inv = 1 / m[pr][col]
        m[pr] = [x * inv for x in m[pr]]
        for i in range(rows):
            if i != pr and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[pr])]
        pivot_cols.append(col)
        pr += 1
        if pr == rows:
            break
    for i in range(pr, rows):
        if m[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for i, col in enumerate(pivot_cols):
        x[col] = m[i][cols]
    return tuple(x)


def rational_inverse(M: IntMatrix) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular integer matrix."""
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    m = [[Fraction(M.at(i, j)) for j in range(n)] + [Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


def rank_mod_p(M: IntMatrix, p: int) -> int:
    """Rank of M over the field with p elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = [[x % p for x in M.row(i)] for i in range(M.rows)]
    rank = 0
    rows, cols = M.rows, M.cols
    for col in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# Small prime utilities
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of |n|, ascending.  prime_factors(0) is ()."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, int(n**0.5) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
    return [i for i, flag in enumerate(sieve) if flag]
