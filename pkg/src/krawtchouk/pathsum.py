"""Brute-force sum-over-paths oracles.

A descending lattice path of n steps is a word over {L, R}; the paths
ending at position p are exactly the words with p letters R.  Left steps
are neutral; every right step contributes a phase, beta inside the
"quantum regime" (the first q steps) and alpha outside it:

    weight_q(w) = beta^(R's among the first q) * alpha^(R's after them)

Summing the weights over all C(n,p) paths gives exactly the coefficient of
t^p in (1 + alpha t)^(n-q) (1 + beta t)^q, i.e. the (p, q) entry of the
generalized Krawtchouk matrix -- by exhaustive enumeration, sharing no
code with the constructions it checks.  At alpha = 1 this collapses to the
classical rule "each right turn in the quantum region flips the sign"
(beta = -1), or rotates the phase (beta = e^(i phi)).  Giving left steps a
nontrivial phase instead would break the agreement with the generating
function for alpha != 1: the column-0 entries must be C(n,p) alpha^p, and
a path reaching p with q = 0 crosses p right steps, all classical.

The second oracle is thermodynamic: the p-wise interaction energy of n
two-state particles, q of them in the state of energy -1, is the p-th
elementary symmetric function of the energies, again summed by brute force
over all C(n,p) index subsets.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .matrix import Matrix
from .rings import ring_of

ENUM_BOUND_NUMERIC = 16   # 2^n words; n above this is refused
ENUM_BOUND_SYMBOLIC = 12


def path_weight(word: str, q: int, alpha, beta):
    """Weight of one path: beta per R in the first q steps, alpha per R after."""
    if q > len(word):
        raise ValueError(f"quantum depth {q} exceeds word length {len(word)}")
    weight = ring_of(alpha).one
    for i, letter in enumerate(word):
        if letter == "R":
            weight = weight * (beta if i < q else alpha)
        elif letter != "L":
            raise ValueError(f"bad letter {letter!r} in path word")
    return weight


def words_to(n: int, p: int):
    """All words of length n with exactly p letters R, lexicographically.

    Words compare with L < R, so the smallest word pushes its R's to the
    end; that is exactly the reverse of the position-tuple lex order that
    ``combinations`` yields.
    """
    for positions in reversed(list(combinations(range(n), p))):
        letters = ["L"] * n
        for i in positions:
            letters[i] = "R"
        yield "".join(letters)


@dataclass(frozen=True)
class PathEnsemble:
    """The C(n,p) paths from the apex to position p, with phase parameters."""

    n: int
    p: int
    q: int
    alpha: object
    beta: object

    def __post_init__(self):
        if not (0 <= self.p <= self.n and 0 <= self.q <= self.n):
            raise ValueError("p and q must lie in 0..n")

    @property
    def count(self) -> int:
        return comb(self.n, self.p)

    def words(self):
        return words_to(self.n, self.p)

    def total_weight(self):
        total = ring_of(self.alpha).zero
        for word in self.words():
            total = total + path_weight(word, self.q, self.alpha, self.beta)
        return total


def path_sum(n: int, p: int, q: int, alpha=1, beta=-1, workers: int = 1):
    """Sum of path weights over all words reaching p; equals K^(n)_{pq}(a,b).

    With several workers the word set is split into disjoint classes by
    their first letters and the per-class sums are combined at the end;
    commutativity of ring addition makes the result identical for every
    worker count.
    """
    ensemble = PathEnsemble(n, p, q, alpha, beta)
    if workers <= 1 or n == 0:
        return ensemble.total_weight()

    prefix_len = max(1, min(n, (workers - 1).bit_length()))
    zero = ring_of(alpha).zero

    def class_sum(prefix: str):
        r_used = prefix.count("R")
        r_left = p - r_used
        if not 0 <= r_left <= n - prefix_len:
            return zero
        partial = zero
        for tail in words_to(n - prefix_len, r_left):
            partial = partial + path_weight(prefix + tail, q, alpha, beta)
        return partial

    prefixes = ["".join("R" if (i >> b) & 1 else "L"
                        for b in reversed(range(prefix_len)))
                for i in range(2 ** prefix_len)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(class_sum, prefixes))
    total = zero
    for part in partials:
        total = total + part
    return total


def oracle_matrix(n: int, alpha=1, beta=-1, bound: int | None = None) -> Matrix:
    """Full (n+1) x (n+1) matrix of path sums by one sweep over all 2^n words.

    Each word contributes its prefix-product weight to every column at once,
    so the sweep costs O(2^n * n) ring operations.
    """
    ring = ring_of(alpha)
    if bound is None:
        bound = ENUM_BOUND_SYMBOLIC if ring.name == "poly2" else ENUM_BOUND_NUMERIC
    if n > bound:
        raise ValueError(
            f"order {n} exceeds the 2^n enumeration bound {bound}")
    zero, one = ring.zero, ring.one
    pow_a = [one]
    pow_b = [one]
    for _ in range(n):
        pow_a.append(pow_a[-1] * alpha)
        pow_b.append(pow_b[-1] * beta)
    cells = [[zero] * (n + 1) for _ in range(n + 1)]
    for counter in range(2 ** n):
        # bit n-1-i of the counter is step i, L=0 < R=1: lexicographic order
        p = counter.bit_count()
        row = cells[p]
        r_seen = 0  # right steps inside the quantum window so far
        row[0] = row[0] + pow_b[0] * pow_a[p]
        for i in range(n):
            if (counter >> (n - 1 - i)) & 1:
                r_seen += 1
            row[i + 1] = row[i + 1] + pow_b[r_seen] * pow_a[p - r_seen]
    return Matrix(ring, cells)


def k_pathsum(n: int):
    """The classical matrix by exhaustive enumeration, tagged PathSumOracle."""
    from .core import KrawtchoukMatrix

    return KrawtchoukMatrix(n, oracle_matrix(n, 1, -1), "PathSumOracle")


def twiston_energy(n: int, q: int, p: int) -> int:
    """p-wise interaction energy of n twistons, q of them Moebius-like.

    Energies are +1 (orientable) except for the first q particles at -1;
    the answer is the p-th elementary symmetric function of the energies,
    summed over all C(n,p) subsets.  The 0-energy is 1 by convention.
    """
    if not (0 <= p <= n and 0 <= q <= n):
        raise ValueError("p and q must lie in 0..n")
    energies = [-1] * q + [1] * (n - q)
    total = 0
    for subset in combinations(range(n), p):
        product = 1
        for i in subset:
            product *= energies[i]
        total += product
    return total


def partition_check(n: int) -> bool:
    """Every one of the 2^n words lands at exactly one position."""
    return sum(PathEnsemble(n, p, 0, 1, -1).count
               for p in range(n + 1)) == 2 ** n
