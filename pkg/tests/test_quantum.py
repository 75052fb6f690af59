from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from qhgrass import linalg
from qhgrass.errors import InvalidInputError
from qhgrass.partitions import Box, canonical, size
from qhgrass.polynomials import UniPoly
from qhgrass.quantum import (
    ClassVector,
    char_poly_on_piece,
    commuting,
    cup_e,
    giambelli_expr,
    graded_pieces,
    mult_operator,
    mult_operators,
    pairing_q1,
    pieri_matrix,
    presentation_check,
    qh_semisimple,
    quantum_pieri,
    radical,
    restrict_to_piece,
    schubert_basis,
    semisimple_test,
    sigma1_triple_integral,
    sigma_e_polynomial,
    star,
    star_schubert,
    vertical_strip_additions,
)

BOXES = [Box(k, n) for k in (1, 2, 3) for n in range(k + 1, 9)]


# -- an independent oracle: classical Pieri in the k-row ring reduced by
# -- n-rim-hook removal on beta numbers


def _unbounded_vertical_strips(lam, p, k):
    padded = tuple(lam) + (0,) * (k - len(lam))
    out = []
    for rows in combinations(range(k), p):
        mu = list(padded)
        for i in rows:
            mu[i] += 1
        if all(mu[i] >= mu[i + 1] for i in range(k - 1)):
            out.append(tuple(mu))
    return out


def _rim_reduce(mu, box):
    """Reduce a k-row partition modulo the quantum relations: returns
    (sign, q_power, partition) or None when the class vanishes."""
    k, n = box.k, box.n
    sign, q_power = 1, 0
    mu = list(mu) + [0] * (k - len(mu))
    while mu[0] > n - k:
        beta = [mu[i] + k - (i + 1) for i in range(k)]
        choices = [i for i in range(k) if beta[i] - n >= 0 and beta[i] - n not in beta]
        if not choices:
            return None
        (i,) = choices  # for Pieri products the removal is unique
        new = beta[i] - n
        beta[i] = new
        ordered = sorted(beta, reverse=True)
        height = ordered.index(new) - i + 1
        sign *= (-1) ** (k - height)
        q_power += 1
        mu = [ordered[j] - (k - (j + 1)) for j in range(k)]
    return sign, q_power, canonical(mu)


def _pieri_oracle(p, lam, box):
    terms = {}
    for mu in _unbounded_vertical_strips(lam, p, box.k):
        reduced = _rim_reduce(mu, box)
        if reduced is None:
            continue
        sign, q_power, nu = reduced
        key = (nu, q_power)
        terms[key] = terms.get(key, 0) + sign
    return {key: c for key, c in terms.items() if c}


@pytest.mark.parametrize("box", BOXES, ids=str)
def test_quantum_pieri_matches_rim_hook_oracle(box):
    for lam in schubert_basis(box):
        for p in range(1, box.k + 1):
            assert quantum_pieri(p, lam, box).terms == _pieri_oracle(p, lam, box), (lam, p)


def test_quantum_pieri_examples():
    assert quantum_pieri(1, (2, 2), Box(2, 4)).terms == {(((1,), 1)): 1} or quantum_pieri(
        1, (2, 2), Box(2, 4)
    ).terms == {((1,), 1): 1}
    b37 = Box(3, 7)
    assert quantum_pieri(1, (4, 4, 1), b37).terms == {((4, 4, 2), 0): 1, ((3,), 1): 1}
    assert quantum_pieri(1, (4, 4, 2), b37).terms == {((4, 4, 3), 0): 1, ((3, 1), 1): 1}
    with pytest.raises(InvalidInputError):
        quantum_pieri(4, (1,), b37)


def test_quantum_pieri_classical_part_is_pieri():
    for box in BOXES:
        for lam in schubert_basis(box):
            for p in range(1, box.k + 1):
                classical = {
                    mu for (mu, qp) in quantum_pieri(p, lam, box).terms if qp == 0
                }
                assert classical == set(vertical_strip_additions(lam, p, box))


def test_quantum_pieri_grading():
    for box in BOXES:
        for lam in schubert_basis(box):
            for p in range(1, box.k + 1):
                for (mu, qp), coeff in quantum_pieri(p, lam, box).terms.items():
                    assert coeff == 1
                    assert size(mu) + box.n * qp == size(lam) + p


def test_giambelli_expr_examples():
    box = Box(3, 7)
    for p in (1, 2, 3):
        expo = tuple(1 if i == p - 1 else 0 for i in range(3))
        assert giambelli_expr((1,) * p, box) == ((expo, 1),)
    assert dict(giambelli_expr((2,), box)) == {(2, 0, 0): 1, (0, 1, 0): -1}
    assert dict(giambelli_expr((2, 1), Box(2, 5))) == {(1, 1): 1}


def test_quantum_giambelli_unit_invariant():
    for box in BOXES:
        for lam in schubert_basis(box):
            assert star_schubert(lam, ClassVector.unit(box)) == ClassVector.schubert(box, lam)


def test_pieri_matrices_commute():
    for box in BOXES:
        mats = [[list(r) for r in pieri_matrix(box, p, 1)] for p in range(1, box.k + 1)]
        assert commuting(mats), box
    # at other q values too
    box = Box(3, 6)
    for q in (0, 2, Fraction(1, 2)):
        mats = [[list(r) for r in pieri_matrix(box, p, q)] for p in (1, 2, 3)]
        assert commuting(mats)


def test_graded_pieces_golden():
    b37 = Box(3, 7)
    pieces = graded_pieces(b37)
    assert set(pieces[0]) == {(), (4, 3), (4, 2, 1), (3, 3, 1), (3, 2, 2)}
    b38 = Box(3, 8)
    assert set(graded_pieces(b38)[0]) == {
        (), (5, 3), (5, 2, 1), (4, 4), (4, 3, 1), (4, 2, 2), (3, 3, 2),
    }
    for box in BOXES:
        pieces = graded_pieces(box)
        assert sum(len(p) for p in pieces.values()) == comb(box.n, box.k)
        from qhgrass.rootdata import gaussian_binomial
        from qhgrass.screen import BettiProfile, periodic_betti

        profile = BettiProfile(
            tuple(int(c) for c in gaussian_binomial(box.n, box.k).coeffs), box.n
        )
        tb = periodic_betti(profile)
        assert {i: len(p) for i, p in pieces.items()} == tb


def test_sigma1_shifts_graded_pieces():
    for box in [Box(2, 5), Box(3, 6), Box(3, 7)]:
        idx = {lam: i for i, lam in enumerate(schubert_basis(box))}
        pieces = graded_pieces(box)
        e1 = pieri_matrix(box, 1, 1)
        for residue, piece in pieces.items():
            target = set(pieces[(residue + 1) % box.n])
            for lam in piece:
                col = idx[lam]
                support = {
                    schubert_basis(box)[r] for r in range(len(e1)) if e1[r][col]
                }
                assert support <= target
        # and the n-th power preserves each piece
        op = linalg.mat_pow([list(r) for r in e1], box.n)
        for piece in pieces.values():
            restrict_to_piece(op, piece, box)


def test_char_poly_on_piece_rejects_non_invariant():
    box = Box(3, 7)
    e1 = [list(r) for r in pieri_matrix(box, 1, 1)]
    with pytest.raises(InvalidInputError):
        char_poly_on_piece(e1, graded_pieces(box)[0], box)


def test_ambient_charpolys_golden():
    b37 = Box(3, 7)
    e1 = [list(r) for r in pieri_matrix(b37, 1, 1)]
    cp = char_poly_on_piece(linalg.mat_pow(e1, 7), graded_pieces(b37)[0], b37)
    assert cp == UniPoly([128, -13, 1]) * UniPoly([1, -57, -289, 1])

    b38 = Box(3, 8)
    piece = graded_pieces(b38)[0]
    e1 = [list(r) for r in pieri_matrix(b38, 1, 1)]
    e2 = [list(r) for r in pieri_matrix(b38, 2, 1)]
    cp8 = char_poly_on_piece(linalg.mat_pow(e1, 8), piece, b38)
    expected8 = UniPoly([1, -1]) * UniPoly([1, -1]) * UniPoly([1, -1])
    expected8 = expected8 * UniPoly([1, -1154, 1]) * UniPoly([6561, -34, 1])
    assert cp8 == -expected8  # monic normalization of the displayed product
    cp62 = char_poly_on_piece(
        linalg.mat_mul(linalg.mat_pow(e1, 6), e2), piece, b38
    )
    expected62 = (
        UniPoly([1, -1]) * UniPoly([1, 478, -1]) * UniPoly([1, 0, 1]) * UniPoly([2187, 6, 1])
    )
    assert cp62 == expected62
    # identity on a piece of size m has charpoly (x-1)^m
    ident = linalg.identity(len(schubert_basis(b37)))
    piece0 = graded_pieces(b37)[0]
    assert char_poly_on_piece(ident, piece0, b37) == UniPoly([-1, 1]) * UniPoly(
        [-1, 1]
    ) * UniPoly([-1, 1]) * UniPoly([-1, 1]) * UniPoly([-1, 1])


def test_presentation_check_examples():
    assert presentation_check(Box(2, 4))
    assert presentation_check(Box(3, 7))
    assert presentation_check(Box(1, 5))
    # sigma_7 reduces to q itself for Gr(3,7): sigma_n + (-1)^k q = 0 means
    # the operator of sigma_7 equals q times the identity
    box = Box(3, 7)
    mat = None
    from qhgrass.quantum import evaluate_e_polynomial

    mat = evaluate_e_polynomial(sigma_e_polynomial(7, 3), box, 1)
    assert mat == linalg.identity(len(schubert_basis(box)))


def test_sigma_e_polynomial_small():
    assert sigma_e_polynomial(0, 3) == {(0, 0, 0): 1}
    assert sigma_e_polynomial(1, 3) == {(1, 0, 0): 1}
    assert sigma_e_polynomial(2, 3) == {(2, 0, 0): 1, (0, 1, 0): -1}


def test_mult_operator_examples():
    box = Box(2, 4)
    assert mult_operator(ClassVector.unit(box), 1) == linalg.identity(6)
    # at q = 0 multiplication by a class of degree d shifts degree up by d
    basis = schubert_basis(box)
    for lam in basis:
        op = mult_operator(ClassVector.schubert(box, lam), 0)
        for col, mu in enumerate(basis):
            for row in range(len(basis)):
                if op[row][col]:
                    assert size(basis[row]) == size(mu) + size(lam)


def test_mult_operator_matches_symbolic_star():
    for box in [Box(2, 4), Box(2, 5), Box(3, 6)]:
        ops = mult_operators(box, 1)
        basis = schubert_basis(box)
        for lam in basis:
            for mu in basis:
                direct = star(
                    ClassVector.schubert(box, lam), ClassVector.schubert(box, mu)
                ).to_vector(1)
                assert direct == linalg.mat_vec(ops[lam], ClassVector.schubert(box, mu).to_vector(1))


def test_star_grading_homogeneous():
    for box in [Box(2, 4), Box(2, 5), Box(3, 6)]:
        basis = schubert_basis(box)
        for lam in basis:
            for mu in basis:
                product = star(ClassVector.schubert(box, lam), ClassVector.schubert(box, mu))
                degree = product.homogeneous_degree()
                if not product.is_zero():
                    assert degree == size(lam) + size(mu), (lam, mu)


def test_frobenius_symmetry_exhaustive():
    for box in [Box(2, 4), Box(3, 6)]:
        basis = schubert_basis(box)
        ops = mult_operators(box, 1)
        idx = {lam: i for i, lam in enumerate(basis)}
        vecs = {lam: ClassVector.schubert(box, lam).to_vector(1) for lam in basis}
        # triple product through the Poincare pairing at q = 1
        def triple(a, b, c):
            ab = linalg.mat_vec(ops[a], vecs[b])
            return sum(
                ab[idx[lam]] * (1 if box.dual(lam) == c else 0) for lam in basis
            )

        for a in basis:
            for b in basis:
                for c in basis:
                    t = triple(a, b, c)
                    assert t == triple(b, a, c) == triple(a, c, b), (a, b, c)


def test_pairing_q1_duality():
    box = Box(3, 6)
    for lam in schubert_basis(box):
        for mu in schubert_basis(box):
            expected = 1 if mu == box.dual(lam) else 0
            assert (
                pairing_q1(ClassVector.schubert(box, lam), ClassVector.schubert(box, mu))
                == expected
            )


def test_sigma1_triple_integral():
    box = Box(3, 8)
    assert sigma1_triple_integral((5, 5, 4), (), box) == 1
    assert sigma1_triple_integral((5, 5, 5), (), box) == 0
    assert sigma1_triple_integral((5, 4, 4), (1,), box) == 1


def test_radical_across_q():
    # sigma_1 is invertible when n is odd relative to k-subset sums of roots
    # of unity; Gr(2,5) and Gr(3,7) have trivial radical at every q tested
    for box in [Box(2, 5), Box(3, 7)]:
        for q in (1, 2, Fraction(1, 2)):
            rad, perp = radical(box, q)
            assert rad == []
            assert len(perp) == len(graded_pieces(box)[0])
            e1 = [list(r) for r in pieri_matrix(box, 1, q)]
            assert linalg.det_bareiss(e1) != 0


def test_radical_of_even_quadric_like_boxes():
    # 1 - s_(2,2) is annihilated by sigma_1 at q = 1 on Gr(2,4): the class
    # sigma_1 * s_(2,2) = q s_1 cancels against sigma_1 * 1, so zero is an
    # honest eigenvalue and the kernel is two-dimensional (yet the trace form
    # is still nondegenerate: the ring remains semisimple)
    for box, expected_dim in [(Box(2, 4), 2), (Box(3, 6), 2)]:
        rad, _ = radical(box, 1)
        assert len(rad) == expected_dim
        e1 = [list(r) for r in pieri_matrix(box, 1, 1)]
        power = linalg.mat_pow(e1, len(schubert_basis(box)))
        for v in rad:
            assert all(x == 0 for x in linalg.mat_vec(power, v))
        assert qh_semisimple(box)
    box = Box(2, 4)
    rad, _ = radical(box, 1)
    idx = {lam: i for i, lam in enumerate(schubert_basis(box))}
    special = [0] * 6
    special[idx[()]] = 1
    special[idx[(2, 2)]] = -1
    e1 = [list(r) for r in pieri_matrix(box, 1, 1)]
    assert all(x == 0 for x in linalg.mat_vec(e1, special))


def test_semisimple_test_nilpotent_algebra():
    # C[x]/(x^2): basis {1, x}; x is nilpotent so the trace form degenerates
    one = linalg.identity(2)
    x = [[0, 0], [1, 0]]
    assert semisimple_test([one, x]) is False
    bad = [[0, 1], [0, 0]]
    with pytest.raises(InvalidInputError):
        semisimple_test([x, linalg.mat_mul(bad, x)] + [bad])


def test_semisimple_test_rejects_non_self_adjoint():
    one = linalg.identity(2)
    x = [[0, 0], [1, 0]]
    pairing = linalg.identity(2)
    with pytest.raises(InvalidInputError):
        semisimple_test([one, x], pairing=pairing)


def test_qh_semisimple_small():
    assert qh_semisimple(Box(2, 4))
    assert qh_semisimple(Box(3, 7))


def test_cup_e_is_classical_part():
    box = Box(3, 6)
    for lam in schubert_basis(box):
        cl = cup_e(2, ClassVector.schubert(box, lam))
        qp = quantum_pieri(2, lam, box)
        assert cl.terms == {key: c for key, c in qp.terms.items() if key[1] == 0}
