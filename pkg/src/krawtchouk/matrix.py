"""Dense immutable matrices over the exact scalar rings.

Shapes here are tiny by numerical-linear-algebra standards ((n+1) x (n+1)
with n <= ~24, or 2^n x 2^n with small n), so everything is a plain tuple of
tuples of scalars and the algorithms are the textbook ones.  The payoff is
that every operation is exact in every ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .rings import Ring, RINGS, ZZ, ring_of


class Matrix:
    """Immutable dense matrix; all entries belong to one ring."""

    __slots__ = ("ring", "data", "rows", "cols")

    def __init__(self, ring: Ring, rows):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self.ring = ring
        self.data = data
        self.rows = len(data)
        self.cols = width

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(rows, ring: Ring | None = None) -> "Matrix":
        if ring is None:
            ring = ring_of(rows[0][0])
        return Matrix(ring, rows)

    @staticmethod
    def identity(n: int, ring: Ring = ZZ) -> "Matrix":
        return Matrix(ring, [[ring.one if i == j else ring.zero
                              for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int, ring: Ring = ZZ) -> "Matrix":
        return Matrix(ring, [[ring.zero] * cols for _ in range(rows)])

    @staticmethod
    def diag(values, ring: Ring | None = None) -> "Matrix":
        values = list(values)
        if ring is None:
            ring = ring_of(values[0])
        n = len(values)
        return Matrix(ring, [[values[i] if i == j else ring.zero
                              for j in range(n)] for i in range(n)])

    @staticmethod
    def skewdiag(values, ring: Ring | None = None) -> "Matrix":
        """Square matrix with values[i] at position (i, n-i), zero elsewhere."""
        values = list(values)
        if ring is None:
            ring = ring_of(values[0])
        n = len(values)
        return Matrix(ring, [[values[i] if i + j == n - 1 else ring.zero
                              for j in range(n)] for i in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise ValueError(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.shape} @ {other.shape}")
        bt = other.transpose().data  # row access on both sides
        out = [[_dot(r, c) for c in bt] for r in self.data]
        return Matrix(self.ring, out)

    __matmul__ = mul

    def add(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return Matrix(self.ring, [[x + y for x, y in zip(r1, r2)]
                                  for r1, r2 in zip(self.data, other.data)])

    __add__ = add

    def sub(self, other: "Matrix") -> "Matrix":
        return self.add(other.scale(-1))

    __sub__ = sub

    def scale(self, c) -> "Matrix":
        if isinstance(c, int):
            c = self.ring.coerce(c)
        return Matrix(self.ring, [[c * x for x in row] for row in self.data])

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, list(zip(*self.data)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; entry (p*rB + i, q*cB + j) = A[p,q]*B[i,j]."""
        self._check_ring(other)
        out = []
        for arow in self.data:
            for brow in other.data:
                out.append([a * b for a in arow for b in brow])
        return Matrix(self.ring, out)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        total = self.ring.zero
        for i in range(self.rows):
            total = total + self.data[i][i]
        return total

    def mul_vector(self, vec):
        """Matrix times column vector (a plain list of scalars)."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != cols {self.cols}")
        return [_dot(row, vec) for row in self.data]

    def vector_mul(self, vec):
        """Row vector times matrix."""
        if len(vec) != self.rows:
            raise ValueError(f"vector length {len(vec)} != rows {self.rows}")
        return [_dot(vec, col) for col in zip(*self.data)]

    def det(self):
        """Exact determinant; needs a ring with division (rational, root2)."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = [list(row) for row in self.data]
        zero = self.ring.zero
        det = self.ring.one
        for k in range(n):
            pivot_row = next((r for r in range(k, n) if a[r][k] != zero), None)
            if pivot_row is None:
                return zero
            if pivot_row != k:
                a[k], a[pivot_row] = a[pivot_row], a[k]
                det = -det
            pivot = a[k][k]
            det = det * pivot
            for r in range(k + 1, n):
                factor = a[r][k] / pivot
                a[r] = [x - factor * y for x, y in zip(a[r], a[k])]
        return det

    def map(self, fn, ring: Ring | None = None) -> "Matrix":
        """Entrywise map, optionally landing in another ring."""
        return Matrix(ring or self.ring,
                      [[fn(x) for x in row] for row in self.data])

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring or self.shape != other.shape:
            return False
        eq = self.ring.eq
        return all(eq(x, y) for r1, r2 in zip(self.data, other.data)
                   for x, y in zip(r1, r2))

    def __hash__(self):
        return hash((self.ring, self.data))

    def first_mismatch(self, other: "Matrix"):
        """(i, j, lhs, rhs) of the first differing entry, or None."""
        if self.shape != other.shape:
            return (-1, -1, f"shape {self.shape}", f"shape {other.shape}")
        eq = self.ring.eq
        for i in range(self.rows):
            for j in range(self.cols):
                if not eq(self.data[i][j], other.data[i][j]):
                    return (i, j, self.data[i][j], other.data[i][j])
        return None

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Matrix({self.ring.name}, {self.rows}x{self.cols})"

    def pretty(self) -> str:
        cells = [[self.ring.fmt(x) for x in row] for row in self.data]
        widths = [max(len(cells[i][j]) for i in range(self.rows))
                  for j in range(self.cols)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths))
                 for row in cells]
        return "\n".join(lines)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "rows": self.rows,
            "cols": self.cols,
            "ring": self.ring.name,
            "entries": [[self.ring.fmt(x) for x in row] for row in self.data],
        }
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "Matrix":
        payload = json.loads(text)
        ring = RINGS[payload["ring"]]
        entries = [[ring.parse(s) for s in row] for row in payload["entries"]]
        mat = Matrix(ring, entries)
        if mat.shape != (payload["rows"], payload["cols"]):
            raise ValueError("declared shape does not match entries")
        return mat

    def to_csv(self) -> str:
        return "\n".join(",".join(self.ring.fmt(x) for x in row)
                         for row in self.data) + "\n"

    @staticmethod
    def from_csv(text: str, ring: Ring = ZZ) -> "Matrix":
        rows = [[ring.parse(cell) for cell in line.split(",")]
                for line in text.strip().splitlines()]
        return Matrix(ring, rows)


def _dot(xs, ys):
    it = iter(zip(xs, ys))
    x, y = next(it)
    total = x * y
    for x, y in it:
        total = total + x * y
    return total


@dataclass
class CheckReport:
    """Outcome of one identity check with the first mismatch, if any."""

    ok: bool
    n: int | None = None
    location: tuple | None = None
    lhs: str = ""
    rhs: str = ""
    note: str = ""

    def __bool__(self):
        return self.ok

    @staticmethod
    def passed(n=None, note="") -> "CheckReport":
        return CheckReport(True, n=n, note=note)

    @staticmethod
    def of_matrices(lhs: Matrix, rhs: Matrix, n=None, note="") -> "CheckReport":
        miss = lhs.first_mismatch(rhs)
        if miss is None:
            return CheckReport(True, n=n, note=note)
        i, j, lv, rv = miss
        return CheckReport(False, n=n, location=(i, j),
                           lhs=str(lv), rhs=str(rv), note=note)


@dataclass
class SuiteReport:
    """Aggregate of a named verification suite, JSON-schema friendly."""

    suite: str
    n_max: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, report: CheckReport, n=None, where=""):
        if not report.ok:
            self.failures.append({
                "n": report.n if report.n is not None else n,
                "location": where or (list(report.location)
                                      if report.location else None),
                "lhs": report.lhs,
                "rhs": report.rhs,
            })

    def fail(self, n, where, lhs="", rhs=""):
        self.failures.append(
            {"n": n, "location": where, "lhs": str(lhs), "rhs": str(rhs)})

    def to_dict(self):
        return {"suite": self.suite, "n_max": self.n_max,
                "pass": self.ok, "failures": self.failures}
