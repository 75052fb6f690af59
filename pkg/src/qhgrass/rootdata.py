"""Root systems of types A-G and numerical invariants of G/P_k.

Simple roots are indexed by Bourbaki node labels.  Roots are kept as integer
coordinate vectors over the simple-root basis, with the invariant form given
by the symmetrized Cartan matrix normalized so short roots have squared
length 2; all pairings against coroots are then exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalConsistencyError, InvalidInputError
from .polynomials import UniPoly

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_RANGE.get(self.family)
        if lo_hi is None:
            raise InvalidInputError(f"unknown family {self.family!r}")
        lo, hi = lo_hi
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidInputError(f"rank {self.rank} invalid for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class GrassmannianId:
    """G/P_k: the quotient by the maximal parabolic omitting Bourbaki node k."""

    type: DynkinType
    node: int

    def __post_init__(self):
        if not 1 <= self.node <= self.type.rank:
            raise InvalidInputError(f"node {self.node} out of range for {self.type}")

    def __str__(self):
        return f"{self.type}/P{self.node}"


def parse_type(text: str) -> DynkinType:
    """Parse 'E7', 'a5', 'D10' into a DynkinType."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise InvalidInputError(f"cannot parse Dynkin type {text!r}")
    return DynkinType(text[0].upper(), int(text[1:]))


def _edges(t: DynkinType) -> list[tuple[int, int]]:
    """Dynkin diagram edges as 1-indexed node pairs, Bourbaki labels."""
    n = t.rank
    if t.family in "ABCFG":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E types: chain 1-3-4-5-...-n plus node 2 hanging off node 4
    chain = [(1, 3)] + [(i, i + 1) for i in range(3, n)]
    return chain + [(2, 4)]


def _root_lengths(t: DynkinType) -> list[int]:
    """Squared lengths (alpha_i, alpha_i), short roots normalized to 2."""
    n = t.rank
    if t.family in ("A", "D", "E"):
        return [2] * n
    if t.family == "B":
        return [4] * (n - 1) + [2]
    if t.family == "C":
        return [2] * (n - 1) + [4]
    if t.family == "F":
        return [4, 4, 2, 2]
    return [2, 6]  # G2: alpha_1 short, alpha_2 long


@lru_cache(maxsize=None)
def gram_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Symmetric matrix of inner products (alpha_i, alpha_j)."""
    n = t.rank
    d = _root_lengths(t)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = d[i]
    for a, b in _edges(t):
        i, j = a - 1, b - 1
        # bond multiplicity equals the length ratio, so 4 (a_i, a_j)^2 = ratio * d_i * d_j
        ratio = max(d[i], d[j]) // min(d[i], d[j])
        val = -_exact_sqrt(ratio * d[i] * d[j] // 4)
        g[i][j] = g[j][i] = val
    return tuple(tuple(row) for row in g)


def _exact_sqrt(m: int) -> int:
    r = int(round(m ** 0.5))
    if r * r != m:
        raise InternalConsistencyError(f"edge inner product {m} is not a perfect square")
    return r


@lru_cache(maxsize=None)
def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), an integer."""
    g = gram_matrix(t)
    n = t.rank
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * g[i][j]
            if num % g[i][i]:
                raise InternalConsistencyError("Cartan entry is not integral")
            row.append(num // g[i][i])
        out.append(tuple(row))
    return tuple(out)


_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@lru_cache(maxsize=None)
def positive_roots(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """All positive roots in simple-root coordinates, by increasing height."""
    n = t.rank
    cartan = cartan_matrix(t)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # root string: beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        ordered.extend(sorted(nxt, reverse=True))
        layer = nxt
    expected = _POSITIVE_ROOT_COUNT[t.family](n)
    if len(ordered) != expected:
        raise InternalConsistencyError(
            f"{t}: found {len(ordered)} positive roots, expected {expected}"
        )
    return tuple(ordered)


def fundamental_degrees(t: DynkinType) -> tuple[int, ...]:
    """Degrees of basic Weyl-group invariants (exponents + 1)."""
    n = t.rank
    if t.family == "A":
        return tuple(range(2, n + 2))
    if t.family in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if t.family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return {
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
        ("F", 4): (2, 6, 8, 12),
        ("G", 2): (2, 6),
    }[(t.family, n)]


def _classify_component(nodes: list[int], t: DynkinType) -> tuple[int, ...]:
    """Fundamental degrees of the subsystem generated by the given nodes."""
    cartan = cartan_matrix(t)
    size = len(nodes)
    if size == 1:
        return (2,)
    adj = {a: [] for a in nodes}
    mults = []
    for a in nodes:
        for b in nodes:
            if a < b and cartan[a - 1][b - 1] != 0:
                adj[a].append(b)
                adj[b].append(a)
                mults.append(cartan[a - 1][b - 1] * cartan[b - 1][a - 1])
    if any(m == 3 for m in mults):
        return fundamental_degrees(DynkinType("G", 2))
    if any(m == 2 for m in mults):
        # a terminal double edge gives the B/C degree sequence 2, 4, ..., 2*size;
        # an interior one would be F4, which never occurs as a proper Levi
        double = [
            (a, b)
            for a in nodes
            for b in adj[a]
            if a < b and cartan[a - 1][b - 1] * cartan[b - 1][a - 1] == 2
        ]
        (a, b), = double
        if len(adj[a]) > 1 and len(adj[b]) > 1:
            raise InternalConsistencyError(f"interior double edge in Levi component {nodes}")
        return tuple(range(2, 2 * size + 1, 2))
    degs = sorted(len(adj[a]) for a in nodes)
    if degs[-1] <= 2:
        return fundamental_degrees(DynkinType("A", size))
    branch = next(a for a in nodes if len(adj[a]) == 3)
    arms = []
    for start in adj[branch]:
        length, prev, cur = 1, branch, start
        while True:
            step = [b for b in adj[cur] if b != prev]
            if not step:
                break
            prev, cur = cur, step[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return fundamental_degrees(DynkinType("D", size))
    if arms[0] == 1 and arms[1] == 2 and size in (6, 7, 8):
        return fundamental_degrees(DynkinType("E", size))
    raise InternalConsistencyError(f"unrecognized Levi component on nodes {nodes}")


def levi_degree_multiset(g: GrassmannianId) -> list[int]:
    """Fundamental degrees of the semisimple part of the Levi of P_k."""
    t = g.type
    remaining = [a for a in range(1, t.rank + 1) if a != g.node]
    cartan = cartan_matrix(t)
    seen: set[int] = set()
    degrees: list[int] = []
    for a in remaining:
        if a in seen:
            continue
        comp = [a]
        seen.add(a)
        stack = [a]
        while stack:
            x = stack.pop()
            for b in remaining:
                if b not in seen and cartan[x - 1][b - 1] != 0:
                    seen.add(b)
                    comp.append(b)
                    stack.append(b)
        degrees.extend(_classify_component(sorted(comp), t))
    return degrees


def dimension(g: GrassmannianId) -> int:
    """Complex dimension: positive roots with positive alpha_k coefficient."""
    k = g.node - 1
    return sum(1 for beta in positive_roots(g.type) if beta[k] > 0)


def fano_index(g: GrassmannianId) -> int:
    """Pairing of the sum of roots in the nilradical against the marked coroot."""
    k = g.node - 1
    cartan = cartan_matrix(g.type)
    total = [0] * g.type.rank
    for beta in positive_roots(g.type):
        if beta[k] > 0:
            for j, c in enumerate(beta):
                total[j] += c
    return sum(total[j] * cartan[k][j] for j in range(g.type.rank))


def poincare_polynomial(g: GrassmannianId) -> UniPoly:
    """Polynomial whose t^i coefficient is the even Betti number b_{2i}(G/P_k)."""
    numerator = UniPoly.one()
    for d in fundamental_degrees(g.type):
        numerator = numerator * _one_minus_t_power(d)
    denominator = _one_minus_t_power(1)
    for d in levi_degree_multiset(g):
        denominator = denominator * _one_minus_t_power(d)
    quotient = numerator.div_exact(denominator)
    if quotient.degree != dimension(g):
        raise InternalConsistencyError(f"Poincare polynomial degree mismatch for {g}")
    if not quotient.is_palindromic():
        raise InternalConsistencyError(f"Poincare polynomial of {g} is not palindromic")
    return quotient


def _one_minus_t_power(d: int) -> UniPoly:
    return UniPoly([1] + [0] * (d - 1) + [-1])


def gaussian_binomial(n: int, k: int) -> UniPoly:
    """The t-binomial coefficient; Poincare polynomial of Gr(k, n)."""
    if not 0 < k < n:
        raise InvalidInputError(f"need 0 < k < n, got k={k}, n={n}")
    return poincare_polynomial(GrassmannianId(DynkinType("A", n - 1), k))
