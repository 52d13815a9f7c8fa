import random
from fractions import Fraction

import pytest

from golden import Q_TABLE

from antiprism.poly import IntPolynomial, poly
from antiprism.polynomials import ell_A, h_A, h_A_boundary, q_nr, theta_A
from antiprism.realroot import (alternatingly_increasing, binomial_representation,
                                count_distinct_real_roots, gamma_positive, gamma_vector,
                                interlacing_detail, interlaces, is_interlacing_sequence,
                                is_M_sequence, is_real_rooted, m_sequence_violation,
                                macaulay_bound, poly_gcd, root_isolation, squarefree_part,
                                unimodal)


def from_roots(roots, lead=1):
    p = poly([lead])
    for r in roots:
        r = Fraction(r)
        p = p * poly([-r.numerator, r.denominator])
    return p


def random_roots(rng, k):
    return [Fraction(rng.randint(-12, 12), rng.randint(1, 5)) for _ in range(k)]


# real-rootedness

def test_real_rooted_examples():
    assert is_real_rooted(poly([1, 9, 3]))
    assert not is_real_rooted(poly([1, 1, 1]))
    assert is_real_rooted(h_A(7))
    assert is_real_rooted(IntPolynomial())
    assert is_real_rooted(poly([5]))


def test_random_products_of_linear_factors():
    rng = random.Random(20240601)
    for _ in range(200):
        roots = random_roots(rng, rng.randint(1, 7))
        p = from_roots(roots, lead=rng.choice([1, 2, -3]))
        iso = root_isolation(p)
        assert iso.is_real_rooted
        distinct = sorted(set(roots))
        assert count_distinct_real_roots(p) == len(distinct)
        assert len(iso.intervals) == len(distinct)
        for (lo, hi, mult), r in zip(iso.intervals, distinct):
            assert lo < r <= hi
            assert mult == roots.count(r)


def test_random_products_with_complex_factor():
    rng = random.Random(7)
    for _ in range(200):
        roots = random_roots(rng, rng.randint(0, 5))
        b = rng.randint(-6, 6)
        c = b * b // 4 + rng.randint(1, 9)
        p = from_roots(roots) * poly([c, b, 1])
        assert not is_real_rooted(p)
        assert root_isolation(p).real_root_count == len(roots)


def test_witness_intervals_are_strings():
    w = root_isolation(poly([1, 9, 3])).witness()
    assert len(w) == 2
    assert all(isinstance(x, str) for row in w for x in row)


def test_gcd_and_squarefree():
    p = from_roots([1, 1, 2, Fraction(1, 3)])
    assert squarefree_part(p) == from_roots([1, 2, Fraction(1, 3)])
    assert poly_gcd(from_roots([1, 2]), from_roots([2, 3])) == from_roots([2])


# interlacing

def test_interlacing_examples():
    assert interlaces(poly([1, 2]), poly([1, 9, 3]))
    assert interlaces(poly([1]), poly([1, 2]))
    assert not interlaces(poly([1, 9, 3]), poly([1, 2]))
    assert interlaces(IntPolynomial(), poly([1, 9, 3]))
    assert interlaces(poly([1, 9, 3]), IntPolynomial())


def test_interlacing_needs_real_roots():
    with pytest.raises(ValueError):
        interlaces(poly([1, 1, 1]), poly([1, 2]))


def test_interlacing_equal_roots():
    res = interlacing_detail(from_roots([0, -1]), from_roots([0, -1, -3]))
    assert res.holds and res.coincident_roots
    assert not interlacing_detail(poly([1, 2]), poly([1, 9, 3])).coincident_roots
    assert interlaces(from_roots([-2]), from_roots([-2, -2]))


def test_random_interlacing_pairs():
    rng = random.Random(11)
    for _ in range(150):
        d = rng.randint(1, 5)
        beta = sorted(set(random_roots(rng, d + 1)))
        if len(beta) < 2:
            continue
        # alpha_k sits in [beta_k, beta_(k+1)] when both sorted ascending
        alpha = [beta[i] + (beta[i + 1] - beta[i]) * Fraction(rng.randint(0, 4), 4)
                 for i in range(len(beta) - 1)]
        p, q = from_roots(alpha), from_roots(beta)
        assert interlaces(p, q)
        same = sorted(set(alpha))
        if len(alpha) >= 2 and len(same) == len(alpha):
            # push the largest root of p beyond the largest root of q
            bad = alpha[:-1] + [beta[-1] + 1]
            assert not interlaces(from_roots(bad), q)


def test_interlacing_sequences():
    Q2 = [poly(Q_TABLE[k]) for k in [(2, 0), (1, 1), (0, 2), (0, 3)]]
    assert is_interlacing_sequence(Q2)
    assert is_interlacing_sequence(Q2, fast=True)
    assert is_interlacing_sequence([poly([1]), poly([0, 1]), poly([0, 1])])
    assert not is_interlacing_sequence([poly([1, 9, 3]), poly([1, 2]), poly([1])])


@pytest.mark.parametrize("n", range(1, 8))
def test_tail_sums_of_interlacing_sequence(n):
    seq = [q_nr(n - 1 - r, r) for r in range(n)] + [q_nr(0, n)]
    assert is_interlacing_sequence(seq)
    tails = [sum(seq[i:], IntPolynomial()) for i in range(len(seq))]
    assert is_interlacing_sequence(tails)
    # the tail sums are the leading terms of the next sequence
    assert tails == [q_nr(n - r, r) for r in range(n + 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_sum_interlaces_weighted_sum(n):
    seq = [q_nr(n - r, r) for r in range(n + 1)]
    total = sum(seq, IntPolynomial())
    weighted = sum((p * (i + 1) for i, p in enumerate(seq)), IntPolynomial())
    assert interlaces(total, weighted)
    head = sum(seq[:-1], IntPolynomial())
    assert interlaces(head, weighted)


# coefficient properties

def test_unimodal_examples():
    assert unimodal([1, 2, 5]) == (True, [2])
    assert unimodal([1, 3, 3, 1]) == (True, [1, 2])
    assert unimodal([2, 1, 2])[0] is False


def test_alternatingly_increasing():
    assert alternatingly_increasing(h_A(3), 2)
    assert not alternatingly_increasing(poly([3, 1, 1]), 2)


def test_gamma_examples():
    assert gamma_vector(ell_A(4), 4) == [0, 4, 22]
    with pytest.raises(ValueError):
        gamma_vector(poly([1, 2]), 2)
    assert not gamma_positive(poly([1, -1, 1]), 2)


@pytest.mark.parametrize("n", range(1, 13))
def test_gamma_positive_boundary_and_theta(n):
    assert gamma_positive(h_A_boundary(n), n - 1)
    if n >= 2:
        theta_over_x = poly(theta_A(n).coefficient_list(n + 1)[1:])
        assert gamma_positive(theta_over_x, n - 2)


def test_macaulay():
    assert binomial_representation(5, 2) == [(3, 2), (2, 1)]
    assert macaulay_bound(2, 1) == 3
    assert is_M_sequence([1, 8])
    assert not is_M_sequence([1, 2, 5])
    assert is_M_sequence([1])
    assert is_M_sequence([1, 3, 6, 10])
    assert not is_M_sequence([2, 1])
    assert "not 1" in m_sequence_violation([2, 1])
