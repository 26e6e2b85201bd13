"""Sylvester matrices, binary-weight reduction, and the Krawtchouk pyramid.

The n-fold Kronecker power of the 2x2 Hadamard matrix disperses the
symmetric structure across 2^n indices; grouping rows and columns by the
binary weight of their index (the popcount) and summing the classes
collapses it back to the (n+1) x (n+1) symmetric Krawtchouk matrix.  numpy
carries the 2^n x 2^n intermediate (entries are +-1 and the class sums are
small integers, so int64 arithmetic is exact).

Stacking the Krawtchouk matrices by order forms a pyramid whose plane
sections are Pascal-like triangles.  The four section families and their
local rules:

    west-down   rows = column k of K^(k), K^(k+1), ...   new = left + right
    east-down   rows = column r of K^(k+r)               new = right - left
    north-up    rows = row k of K^(k), K^(k+1), ...      up  = (left + right)/2
    south-up    rows = row n-k of K^(n)                  up  = (left - right)/2

The down rules are seeded once and propagate forever; the up rules divide
by 2, and the divisions are asserted to be exact (adjacent Krawtchouk
entries always agree in parity).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .core import KrawtchoukMatrix, genfunc_column, k_entry, k_genfunc
from .matrix import CheckReport, Matrix
from .rings import ZZ

REDUCE_BOUND = 14
LABEL_BOUND = 30

DIRECTIONS = ("west-down", "east-down", "north-up", "south-up")


@dataclass(frozen=True)
class WeightLabeling:
    """Binary weights w(k) for k = 0..2^n - 1, built by the doubling rule."""

    n: int
    labels: tuple

    def classes(self):
        """index lists grouped by weight: classes()[p] = sorted w^{-1}(p)."""
        out = [[] for _ in range(self.n + 1)]
        for idx, w in enumerate(self.labels):
            out[w].append(idx)
        return out


def weight_labels(n: int) -> WeightLabeling:
    """w(0) = 0 and w(2^m + k) = w(k) + 1; cross-checked against popcount."""
    if not 0 <= n <= LABEL_BOUND:
        raise ValueError(f"weight labeling bound is 0..{LABEL_BOUND}")
    labels = [0]
    for _ in range(n):
        labels = labels + [w + 1 for w in labels]
    for idx in range(0, len(labels), max(1, len(labels) // 64)):
        if labels[idx] != idx.bit_count():
            raise AssertionError("doubling recursion disagrees with popcount")
    return WeightLabeling(n, tuple(labels))


def sylvester_numpy(n: int) -> np.ndarray:
    """H^kron(n) as an int8 array of +-1 (16 MB at the n = 12 worst case)."""
    h = np.array([[1, 1], [1, -1]], dtype=np.int8)
    out = np.array([[1]], dtype=np.int8)
    for _ in range(n):
        out = np.kron(out, h)
    return out


def reduce_to_symmetric(n: int) -> Matrix:
    """Collapse H^kron(n) by weight classes; equals the symmetric matrix.

    S_{pq} = sum of H^kron entries over rows of weight p, columns of
    weight q.  Sums are accumulated in int64, which is exact: each class
    block holds at most 2^n * 2^n values of +-1.
    """
    if not 0 <= n <= REDUCE_BOUND:
        raise ValueError(f"reduction bound is 0..{REDUCE_BOUND}")
    sylvester = sylvester_numpy(n)
    labels = np.array(weight_labels(n).labels)
    classes = [np.flatnonzero(labels == p) for p in range(n + 1)]
    rows = []
    for p in range(n + 1):
        block_rows = sylvester[classes[p], :]
        rows.append([int(block_rows[:, classes[q]].sum(dtype=np.int64))
                     for q in range(n + 1)])
    return Matrix(ZZ, rows)


# ---------------------------------------------------------------------------
# pyramid identities
# ---------------------------------------------------------------------------

def k_pyramid(n: int) -> KrawtchoukMatrix:
    """Krawtchouk matrix grown level by level through the pyramid rules.

    From an order-m matrix, column 0 of order m+1 follows by the Pascal
    rule (new[i] = old[i-1] + old[i]) and column q+1 by the signed rule
    (new[i] = old_q[i] - old_q[i-1] applied to column q of order m), so the
    whole pyramid unfolds from the apex [1] with no binomials computed.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    cols = [[1]]
    for m in range(n):
        first = cols[0]
        grown = [[(first[i - 1] if i > 0 else 0)
                  + (first[i] if i <= m else 0) for i in range(m + 2)]]
        for q in range(m + 1):
            prev = cols[q]
            grown.append([(prev[i] if i <= m else 0)
                          - (prev[i - 1] if i > 0 else 0)
                          for i in range(m + 2)])
        cols = grown
    rows = [[cols[q][p] for q in range(n + 1)] for p in range(n + 1)]
    return KrawtchoukMatrix(n, Matrix(ZZ, rows), "PyramidRecurrence")


def pyramid_cross_check(n_max: int) -> CheckReport:
    """Cross identities between adjacent pyramid levels, orders 1..n_max.

    With E(n,i,j) the order-n entry (zero out of range):

      (i)   E(n,i+1,j) + E(n,i,j) = E(n+1,i+1,j)
      (ii)  E(n,i+1,j) - E(n,i,j) = E(n+1,i+1,j+1)
      (iii) E(n,i,j) + E(n,i,j+1) = 2 E(n-1,i,j)
      (iv)  E(n,i,j) - E(n,i,j+1) = 2 E(n-1,i-1,j)
      (v)   E(n,i+1,j) = E(n,i,j) + E(n,i,j+1) + E(n,i+1,j+1)

    (v) is the square identity: of any four adjacent entries, the lower
    left is the sum of the other three (the classical specialization of the
    trace identity).
    """
    if n_max < 2:
        raise ValueError("cross identities need n_max >= 2")
    ks = {m: k_genfunc(m).mat for m in range(n_max + 2)}

    def entry(m, i, j):
        if 0 <= i <= m and 0 <= j <= m:
            return ks[m][i, j]
        return 0

    for n in range(1, n_max + 1):
        for i in range(n + 1):
            for j in range(n + 1):
                cases = [
                    (entry(n, i + 1, j) + entry(n, i, j),
                     entry(n + 1, i + 1, j), "cross (i)"),
                    (entry(n, i + 1, j) - entry(n, i, j),
                     entry(n + 1, i + 1, j + 1), "cross (ii)"),
                ]
                if j < n:
                    cases.append((entry(n, i, j) + entry(n, i, j + 1),
                                  2 * entry(n - 1, i, j), "cross (iii)"))
                    cases.append((entry(n, i, j) - entry(n, i, j + 1),
                                  2 * entry(n - 1, i - 1, j), "cross (iv)"))
                if i < n and j < n:
                    cases.append((entry(n, i + 1, j),
                                  entry(n, i, j) + entry(n, i, j + 1)
                                  + entry(n, i + 1, j + 1), "square (v)"))
                for lhs, rhs, note in cases:
                    if lhs != rhs:
                        return CheckReport(False, n=n, location=(i, j),
                                           lhs=str(lhs), rhs=str(rhs),
                                           note=note)
    return CheckReport.passed(n=n_max, note="pyramid cross identities")


@dataclass(frozen=True)
class PyramidPlane:
    """A triangular plane section; rows[r] has depth + r + 1 entries."""

    direction: str
    depth: int
    rows: tuple

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row)
                         for row in self.rows) + "\n"


def pyramid_plane(direction: str, depth: int, rows: int) -> PyramidPlane:
    """Generate a plane section from its seed and local rule.

    Down planes start from a Krawtchouk column of order ``depth`` and apply
    the (signed) Pascal rule; up planes are built from the bottom row (a
    Krawtchouk matrix row) upwards by exact halving.  Row r of the result
    always equals the appropriate column/row of K^(depth + r), which is
    what the seeds guarantee and the tests pin.
    """
    if rows < 1:
        raise ValueError("need at least one row")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if direction == "west-down":
        # seed: last column of K^(depth); rule: new[i] = old[i-1] + old[i]
        row = genfunc_column(depth, depth)
        out = [row]
        for _ in range(rows - 1):
            row = [(row[i - 1] if i > 0 else 0) + (row[i] if i < len(row) else 0)
                   for i in range(len(row) + 1)]
            out.append(row)
    elif direction == "east-down":
        # seed: first column of K^(depth); rule: new[i] = old[i] - old[i-1]
        row = [comb(depth, i) for i in range(depth + 1)]
        out = [row]
        for _ in range(rows - 1):
            row = [(row[i] if i < len(row) else 0) - (row[i - 1] if i > 0 else 0)
                   for i in range(len(row) + 1)]
            out.append(row)
    elif direction in ("north-up", "south-up"):
        top_order = depth + rows - 1
        if direction == "north-up":
            base = [k_entry(top_order, depth, q) for q in range(top_order + 1)]
        else:
            base = [k_entry(top_order, top_order - depth, q)
                    for q in range(top_order + 1)]
        out = [base]
        row = base
        for _ in range(rows - 1):
            nxt = []
            for i in range(len(row) - 1):
                total = row[i] + row[i + 1] if direction == "north-up" \
                    else row[i] - row[i + 1]
                if total % 2:
                    raise AssertionError(
                        "parity broke: adjacent entries of a Krawtchouk row "
                        "always share parity")
                nxt.append(total // 2)
            out.append(nxt)
            row = nxt
        out.reverse()
    else:
        raise ValueError(f"unknown direction {direction!r}; "
                         f"choose from {DIRECTIONS}")
    return PyramidPlane(direction, depth, tuple(tuple(r) for r in out))
