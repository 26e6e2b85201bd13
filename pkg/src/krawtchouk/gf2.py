"""Binary subspaces, weight characters, and the MacWilliams transform.

Vectors of Z_2^n are packed into Python ints (bit i = coordinate i); a
subspace is kept as a reduced-row-echelon basis, which makes equality of
subspaces structural.  The weight character of a subspace W counts its
vectors by Hamming weight; the MacWilliams identity says the Krawtchouk
matrix turns the character of W into 2^dim(W) times the character of the
orthogonal complement:

    2^dim(W) * char(W-perp) = K^(n) char(W)

The scaling constant 2^dim(W) = card(W) is forced: already for
W = span{e1} in Z_2^2 one has K char(W) = 2 char(W-perp) while
dim(W-perp) = 1, so a dimension factor cannot be right in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import k_genfunc
from .matrix import CheckReport
from .spectral import binomial_vector

ENUM_BOUND = 24   # 2^dim enumeration
CHECK_BOUND = 16  # ambient dimension for the MacWilliams check


def vector_from_bits(bits: str) -> int:
    """Parse '110' (coordinate 1 first) into a packed vector."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"bad bitstring {bits!r}")
    value = 0
    for i, c in enumerate(bits):
        if c == "1":
            value |= 1 << i
    return value


def vector_to_bits(value: int, n: int) -> str:
    return "".join("1" if value >> i & 1 else "0" for i in range(n))


def _rref(vectors, n: int):
    """Reduced row echelon basis over GF(2), rows as packed ints."""
    basis = []
    for vec in vectors:
        if vec >> n:
            raise ValueError(f"vector 0b{vec:b} does not fit in {n} bits")
        for row in basis:
            low = row & -row
            if vec & low:
                vec ^= row
        if vec:
            basis.append(vec)
            # re-reduce everything above the new pivot
            basis.sort(key=lambda r: r & -r)
            reduced = []
            for row in sorted(basis, key=lambda r: -(r & -r)):
                for other in reduced:
                    if row & (other & -other):
                        row ^= other
                reduced.append(row)
            basis = sorted(reduced, key=lambda r: r & -r)
    return tuple(basis)


@dataclass(frozen=True)
class BinarySubspace:
    """Subspace of Z_2^n held as a canonical rref basis of packed vectors."""

    n: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self):
        """All 2^dim elements, by Gray-code walk over basis combinations."""
        if self.dim > ENUM_BOUND:
            raise ValueError(f"enumeration bound is dim <= {ENUM_BOUND}")
        current = 0
        yield 0
        for counter in range(1, 2 ** self.dim):
            flip = (counter & -counter).bit_length() - 1
            current ^= self.basis[flip]
            yield current

    def contains(self, vec: int) -> bool:
        for row in self.basis:
            if vec & (row & -row):
                vec ^= row
        return vec == 0

    def __str__(self):
        rows = ", ".join(vector_to_bits(v, self.n) for v in self.basis)
        return f"span{{{rows}}} in Z2^{self.n}"


def subspace_from(vectors, n: int | None = None) -> BinarySubspace:
    """Build the span; accepts packed ints or '0101' strings."""
    packed = []
    width = 0
    for vec in vectors:
        if isinstance(vec, str):
            width = max(width, len(vec))
            packed.append(vector_from_bits(vec))
        else:
            packed.append(int(vec))
            width = max(width, packed[-1].bit_length())
    if n is None:
        n = width
    if n <= 0:
        raise ValueError("ambient dimension must be positive")
    return BinarySubspace(n, _rref(packed, n))


def complement(space: BinarySubspace) -> BinarySubspace:
    """Orthogonal complement under the mod-2 dot product."""
    n = space.n
    pivots = [(row & -row).bit_length() - 1 for row in space.basis]
    free = [i for i in range(n) if i not in pivots]
    kernel = []
    for f in free:
        vec = 1 << f
        # solve the pivot coordinates so every basis row dots to zero
        for row, piv in zip(space.basis, pivots):
            if (vec & row).bit_count() % 2:
                vec ^= 1 << piv
        kernel.append(vec)
    return BinarySubspace(n, _rref(kernel, n))


@dataclass(frozen=True)
class WeightCharacter:
    """counts[i] = number of subspace vectors of Hamming weight i."""

    counts: tuple

    def __getitem__(self, i):
        return self.counts[i]

    def as_list(self):
        return list(self.counts)


def weight_character(space: BinarySubspace) -> WeightCharacter:
    counts = [0] * (space.n + 1)
    for vec in space.vectors():
        counts[vec.bit_count()] += 1
    return WeightCharacter(tuple(counts))


def macwilliams_check(space: BinarySubspace) -> CheckReport:
    """2^dim(W) char(W-perp) = K char(W), entrywise exact."""
    n = space.n
    if n > CHECK_BOUND:
        raise ValueError(f"MacWilliams check bound is n <= {CHECK_BOUND}")
    perp = complement(space)
    lhs = [2 ** space.dim * c for c in weight_character(perp).counts]
    rhs = k_genfunc(n).mat.mul_vector(weight_character(space).as_list())
    if lhs != rhs:
        idx = next(i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b)
        return CheckReport(False, n=n, location=(idx,),
                           lhs=str(lhs[idx]), rhs=str(rhs[idx]),
                           note=f"MacWilliams failed for {space}")
    return CheckReport.passed(n=n, note=f"MacWilliams for {space}")


def coordinate_subspace_note(space: BinarySubspace) -> CheckReport:
    """Axis-spanned subspaces reproduce the binomial transform.

    For W spanned by standard basis vectors, char(W) is the truncated
    binomial vector b^(dim W) up to coordinate relabeling, and the
    MacWilliams identity collapses to K b^(k) = 2^k b^(n-k).
    """
    if any(row.bit_count() != 1 for row in space.basis):
        raise ValueError("subspace is not spanned by standard basis vectors")
    k = space.dim
    n = space.n
    char = weight_character(space).as_list()
    if char != binomial_vector(n, k):
        return CheckReport(False, n=n, lhs=str(char),
                           rhs=str(binomial_vector(n, k)),
                           note="character is not the binomial vector")
    transformed = k_genfunc(n).mat.mul_vector(char)
    expected = [2 ** k * x for x in binomial_vector(n, n - k)]
    if transformed != expected:
        return CheckReport(False, n=n, lhs=str(transformed),
                           rhs=str(expected), note="binomial transform")
    return macwilliams_check(space)


def random_subspace(rng, n: int) -> BinarySubspace:
    """Span of a random number of random vectors, possibly trivial."""
    count = rng.randint(0, n)
    vectors = [rng.getrandbits(n) for _ in range(count)]
    return subspace_from(vectors, n)


def full_space_character(n: int):
    return [comb(n, i) for i in range(n + 1)]
