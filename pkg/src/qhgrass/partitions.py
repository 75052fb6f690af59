"""Partitions in a box: hooks, cores, beta sets, and the nonvanishing searches.

Partitions are stored canonically as tuples of positive integers in weakly
decreasing order (trailing zeros stripped), so they can serve as dictionary
keys.  Box membership is a separate predicate: the same partition value can be
tested against several boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError

Partition = tuple[int, ...]


def canonical(parts) -> Partition:
    """Strip trailing zeros and validate weak decrease."""
    parts = tuple(int(a) for a in parts)
    if any(a < 0 for a in parts):
        raise InvalidInputError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidInputError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    """Conjugate partition (columns become rows)."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for a in lam:
        for j in range(a):
            cols[j] += 1
    return tuple(cols)


@dataclass(frozen=True)
class Box:
    """A k x (n-k) box: at most k parts, each at most n-k."""

    k: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.n < self.k:
            raise InvalidInputError(f"bad box parameters k={self.k}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.k

    def contains(self, lam: Partition) -> bool:
        return len(lam) <= self.k and (not lam or lam[0] <= self.cols)

    def require(self, lam: Partition) -> Partition:
        lam = canonical(lam)
        if not self.contains(lam):
            raise InvalidInputError(f"{lam} does not fit in the {self.k}x{self.cols} box")
        return lam

    def dual(self, lam: Partition) -> Partition:
        """Complement inside the box, rotated: the Poincare-dual label."""
        lam = self.require(lam)
        padded = lam + (0,) * (self.k - len(lam))
        return canonical(tuple(self.cols - padded[self.k - 1 - i] for i in range(self.k)))


@lru_cache(maxsize=None)
def box_partitions(k: int, n: int) -> tuple[Partition, ...]:
    """All partitions fitting the k x (n-k) box, lexicographically decreasing."""
    out: list[Partition] = []

    def rec(prefix, rows_left, maxpart):
        if rows_left == 0:
            out.append(canonical(prefix))
            return
        for a in range(maxpart, -1, -1):
            rec(prefix + (a,), rows_left - 1, a)

    rec((), k, n - k)
    return tuple(out)


@lru_cache(maxsize=None)
def box_partitions_of_size(k: int, n: int, p: int) -> tuple[Partition, ...]:
    """Partitions of p in the box, lexicographically decreasing; generated
    directly so that large boxes never require a full enumeration."""
    out: list[Partition] = []

    def rec(prefix, remaining, rows_left, maxpart):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if rows_left == 0:
            return
        for a in range(min(maxpart, remaining), 0, -1):
            if a * rows_left < remaining:
                break
            prefix.append(a)
            rec(prefix, remaining - a, rows_left - 1, a)
            prefix.pop()

    if 0 <= p <= k * (n - k):
        rec([], p, k, n - k)
    return tuple(out)


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    """Hook length of every cell, keyed by 1-indexed (row, col)."""
    lam = canonical(lam)
    tr = transpose(lam)
    return {
        (i, j): lam[i - 1] - j + tr[j - 1] - i + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    }


def is_core(lam: Partition, ell: int) -> bool:
    """True iff no cell of lam has hook length ell (early-exit cell scan)."""
    if ell <= 0:
        raise InvalidInputError(f"core parameter must be positive, got {ell}")
    lam = canonical(lam)
    tr = transpose(lam)
    for i, row_len in enumerate(lam, start=1):
        for j in range(1, row_len + 1):
            if row_len - j + tr[j - 1] - i + 1 == ell:
                return False
    return True


def to_beta_set(lam: Partition, box: Box) -> tuple[int, ...]:
    """First-column hook lengths a_i = lam_i + k - i + 1, strictly decreasing in [1, n]."""
    lam = box.require(lam)
    k = box.k
    padded = lam + (0,) * (k - len(lam))
    return tuple(padded[i] + (k - i) for i in range(k))


def from_beta_set(beta, box: Box) -> Partition:
    """Inverse of to_beta_set on k-subsets of [1, n]."""
    beta = tuple(sorted(set(int(a) for a in beta), reverse=True))
    if len(beta) != box.k or beta[0] > box.n or beta[-1] < 1:
        raise InvalidInputError(f"{beta} is not a {box.k}-subset of [1, {box.n}]")
    return canonical(tuple(beta[i] - (box.k - i) for i in range(box.k)))


def is_core_beta(lam: Partition, ell: int, box: Box) -> bool:
    """Core test through the beta set: a in A and a-ell >= 1 force a-ell in A."""
    beta = set(to_beta_set(lam, box))
    return all(a - ell in beta for a in beta if a - ell >= 1)


def snow_witnesses(box: Box, p: int, ell: int) -> list[tuple[Partition, int]]:
    """Witnesses for nonvanishing twisted Hodge cohomology of Gr(k, n).

    Returns every partition of p in the box with no cell of hook length ell,
    paired with its count of cells of hook length greater than ell.  The
    cohomology group in bidegree (p, j) is nonzero exactly for the returned
    pairs (lam, j).
    """
    if p < 0 or ell < 0:
        raise InvalidInputError("p and ell must be nonnegative")
    out = []
    for lam in box_partitions_of_size(box.k, box.n, p):
        hooks = hook_lengths(lam).values()
        if ell in hooks:
            continue
        out.append((lam, sum(1 for h in hooks if h > ell)))
    return out


def core_search(box: Box) -> list[tuple[Partition, int]]:
    """Large (n-i)-core partitions in the box, the obstruction to vanishing.

    Scans i from n-1 down to 1 and returns each (lam, i) with
    |lam| >= k(n-k) - i and lam an (n-i)-core, partitions in lexicographically
    decreasing order within each i.  The size bound keeps the candidate set
    tiny (at most the partitions of i cells), so large boxes stay cheap.
    Nonempty exactly for (k, n) in {(3,6), (4,8), (3,9)}.
    """
    k, n = box.k, box.n
    if not (3 <= k and 2 * k <= n):
        raise InvalidInputError(f"core_search needs 3 <= k <= n/2, got k={k}, n={n}")
    full = k * (n - k)
    out = []
    for i in range(n - 1, 0, -1):
        candidates: list[Partition] = []
        for p in range(max(full - i, 0), full + 1):
            candidates.extend(box_partitions_of_size(k, n, p))
        candidates.sort(reverse=True)
        for lam in candidates:
            if is_core(lam, n - i):
                out.append((lam, i))
    return out
