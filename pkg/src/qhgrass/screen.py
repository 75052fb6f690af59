"""Index-periodic Betti numbers and the semisimplicity obstruction screen.

A Fano manifold whose even quantum cohomology is generically semisimple must
have tilde_b(i) <= tilde_b(d*i) for all residues i mod r and all d >= 1, where
tilde_b sums even Betti numbers over residue classes of complex degree modulo
the Fano index r.  The screen searches for a violating pair; finding one is a
proof of non-semisimplicity, finding none proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .polynomials import UniPoly
from .rootdata import DynkinType, GrassmannianId, dimension, fano_index, poincare_polynomial

NO_OBSTRUCTION = "NoObstruction"
WITNESS = "Witness"


@dataclass(frozen=True)
class BettiProfile:
    """Even Betti numbers b_0, b_2, ..., b_{2 dim} plus the Fano index."""

    even_betti: tuple[int, ...]
    index: int
    label: str = ""

    def __post_init__(self):
        if self.index < 1:
            raise InvalidInputError("Fano index must be positive")
        if any(b < 0 for b in self.even_betti):
            raise InvalidInputError("Betti numbers must be nonnegative")

    @property
    def euler(self) -> int:
        return sum(self.even_betti)


@dataclass(frozen=True)
class ScreenVerdict:
    outcome: str
    witness: tuple[int, int, int, int] | None = None  # (i, d, lhs, rhs)

    @property
    def is_witness(self) -> bool:
        return self.outcome == WITNESS


def periodic_betti(profile: BettiProfile) -> dict[int, int]:
    """tilde_b on residues mod r: sums of b_{2j} over j in each class."""
    r = profile.index
    out = {i: 0 for i in range(r)}
    for j, b in enumerate(profile.even_betti):
        out[j % r] += b
    return out


def screen(profile: BettiProfile) -> ScreenVerdict:
    """Search for tilde_b(i) > tilde_b(d*i); first hit in lexicographic (i, d).

    d only needs to range over [1, r] since d*i mod r is r-periodic in d, so
    the search is finite and complete.
    """
    r = profile.index
    tb = periodic_betti(profile)
    for i in range(r):
        for d in range(1, r + 1):
            lhs, rhs = tb[i], tb[(d * i) % r]
            if lhs > rhs:
                return ScreenVerdict(WITNESS, (i, d, lhs, rhs))
    return ScreenVerdict(NO_OBSTRUCTION)


def profile_of(g: GrassmannianId) -> BettiProfile:
    """Betti profile of a generalized Grassmannian from its Poincare polynomial."""
    poly = poincare_polynomial(g)
    return BettiProfile(tuple(int(c) for c in poly.coeffs), fano_index(g), str(g))


def sg_betti(n: int) -> tuple[BettiProfile, BettiProfile]:
    """Betti profiles of the symplectic Grassmannian SG(2, 2n) and of its
    smooth hyperplane section.

    SG(2, 2n) is itself a hyperplane section of Gr(2, 2n); its section profile
    is obtained by the Euler-number-preserving transfer: Betti numbers agree
    below the middle, the middle absorbs the vanished class, and the rest is
    filled in palindromically.
    """
    if n < 3:
        raise InvalidInputError(f"SG(2, 2n) transfer needs n >= 3, got {n}")
    x = profile_of(GrassmannianId(DynkinType("C", n), 2))
    dim_x = len(x.even_betti) - 1
    if dim_x != 4 * n - 5 or x.index != 2 * n - 1:
        raise InvalidInputError(f"unexpected SG(2,{2*n}) invariants")
    dim_y = dim_x - 1
    mid = 2 * n - 3
    b_y = [0] * (dim_y + 1)
    for i in range(mid):
        b_y[i] = x.even_betti[i]
    b_y[mid] = x.even_betti[mid] + x.even_betti[mid + 1]
    for i in range(mid + 1, dim_y + 1):
        b_y[i] = b_y[dim_y - i]
    y = BettiProfile(tuple(b_y), 2 * n - 2, f"section of SG(2,{2*n})")
    if y.euler != x.euler:
        raise InvalidInputError("section profile does not preserve the Euler number")
    return x, y


# The 13 exceptional G/P_k whose non-semisimplicity the screen certifies,
# with the residue the source table displays (4 for F4/P4, 1 elsewhere).
EXCEPTIONAL_WITNESS_CASES = (
    ("E", 6, 2, 1),
    ("E", 6, 4, 1),
    ("E", 7, 1, 1),
    ("E", 7, 3, 1),
    ("E", 7, 6, 1),
    ("E", 8, 1, 1),
    ("E", 8, 2, 1),
    ("E", 8, 3, 1),
    ("E", 8, 5, 1),
    ("E", 8, 7, 1),
    ("E", 8, 8, 1),
    ("F", 4, 3, 1),
    ("F", 4, 4, 4),
)

# Exceptional cases where the screen finds nothing: four with unknown
# semisimplicity, plus E8/P4 which is known non-semisimple by other means.
EXCEPTIONAL_SILENT_CASES = (
    ("E", 7, 2),
    ("E", 7, 4),
    ("E", 7, 5),
    ("E", 8, 6),
    ("E", 8, 4),
)


@dataclass(frozen=True)
class ExceptionalRow:
    label: str
    dim: int
    index: int
    residue: int
    tilde_b: int
    tilde_b_neg: int
    verdict: str


def exceptional_table() -> list[ExceptionalRow]:
    """The 13-row table of screen witnesses among exceptional-type G/P_k."""
    rows = []
    for family, rank, node, residue in EXCEPTIONAL_WITNESS_CASES:
        g = GrassmannianId(DynkinType(family, rank), node)
        p = profile_of(g)
        tb = periodic_betti(p)
        lhs, rhs = tb[residue % p.index], tb[-residue % p.index]
        verdict = WITNESS if lhs != rhs else NO_OBSTRUCTION
        rows.append(ExceptionalRow(str(g), dimension(g), p.index, residue, lhs, rhs, verdict))
    return rows


def projective_space_profile(m: int) -> BettiProfile:
    return BettiProfile((1,) * (m + 1), m + 1, f"P{m}")


def poincare_profile(poly: UniPoly, index: int, label: str = "") -> BettiProfile:
    return BettiProfile(tuple(int(c) for c in poly.coeffs), index, label)
