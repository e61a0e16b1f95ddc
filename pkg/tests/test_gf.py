from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segalkit import gf

PRIMES = [2, 3, 5]


def brute_subspaces(d, q):
    """Every subspace of F_q^d as a frozenset of vectors, grown by closure."""
    zero = (0,) * d
    found = {frozenset([zero])}
    frontier = list(found)
    vecs = list(product(range(q), repeat=d))
    while frontier:
        nxt = []
        for S in frontier:
            for v in vecs:
                if v in S:
                    continue
                T = frozenset(tuple((x + c * y) % q for x, y in zip(w, v)) for w in S for c in range(q))
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return found


def as_set(sub, d, q):
    vecs = set()
    for coeffs in product(range(q), repeat=len(sub)):
        vecs.add(tuple(sum(c * row[i] for c, row in zip(coeffs, sub)) % q for i in range(d)))
    return frozenset(vecs) if sub else frozenset([(0,) * d])


@st.composite
def matrices(draw, q=None, d=None):
    q = q or draw(st.sampled_from(PRIMES))
    d = d if d is not None else draw(st.integers(1, 3))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=d, max_size=d), min_size=d, max_size=d))
    return q, tuple(tuple(r) for r in rows)


def test_non_prime_fields_are_rejected():
    for q in (0, 1, 4, 6, 9):
        with pytest.raises(ValueError):
            gf.check_field(q)


@pytest.mark.parametrize("q", PRIMES)
def test_inv_mod(q):
    for a in range(1, q):
        assert a * gf.inv_mod(a, q) % q == 1


@pytest.mark.parametrize("d,q", [(1, 2), (2, 2), (3, 2), (2, 3), (1, 5)])
def test_gl_order_matches_enumeration(d, q):
    assert len(gf.general_linear(d, q)) == gf.gl_order(d, q)


@pytest.mark.parametrize("d,q", [(2, 2), (3, 2), (2, 3)])
def test_generators_generate_gl(d, q):
    seen = {gf.identity(d)}
    frontier = [gf.identity(d)]
    while frontier:
        frontier = [gf.matmul(s, g, q) for g in frontier for s in gf.gl_generators(d, q)]
        frontier = [g for g in frontier if g not in seen and not seen.add(g)]
    assert len(seen) == gf.gl_order(d, q)


@pytest.mark.parametrize("d,q", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_all_subspaces_match_closure_enumeration(d, q):
    ours = {as_set(s, d, q) for s in gf.all_subspaces(d, q)}
    assert ours == brute_subspaces(d, q)
    assert len(gf.all_subspaces(d, q)) == len(ours)


@pytest.mark.parametrize("d,q", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_gaussian_binomials(d, q):
    for k in range(d + 1):
        assert gf.subspace_count(d, k, q) == len(gf.all_subspaces(d, q, k))


def test_gaussian_binomial_values():
    assert [gf.subspace_count(2, k, 2) for k in range(3)] == [1, 3, 1]
    assert [gf.subspace_count(3, k, 2) for k in range(4)] == [1, 7, 7, 1]
    assert gf.subspace_count(2, 1, 3) == 4


@given(matrices())
def test_inverse_is_two_sided(qm):
    q, m = qm
    if not gf.is_invertible(m, q):
        with pytest.raises(ValueError):
            gf.inverse(m, q)
        return
    inv = gf.inverse(m, q)
    d = len(m)
    assert gf.matmul(m, inv, q) == gf.identity(d)
    assert gf.matmul(inv, m, q) == gf.identity(d)


@given(matrices(), st.data())
def test_rref_is_canonical(qm, data):
    q, m = qm
    sub = gf.span(m, q)
    g = data.draw(st.sampled_from(gf.general_linear(len(m), q)))
    # row operations do not change the row space
    assert gf.span(gf.matmul(g, m, q), q) == sub
    assert gf.rank(m, q) == len(sub)


@given(matrices(), st.data())
def test_perp_dimension_and_orthogonality(qm, data):
    q, m = qm
    d = len(m)
    sub = gf.span(m, q)
    P = gf.perp(sub, d, q)
    assert len(P) == d - len(sub)
    assert all(gf.dot(u, v, q) == 0 for u in sub for v in P)
    assert gf.perp(P, d, q) == sub


@given(matrices(), st.data())
def test_image_under_invertible_map_keeps_dimension(qm, data):
    q, m = qm
    sub = gf.span(m, q)
    g = data.draw(st.sampled_from(gf.general_linear(len(m), q)))
    img = gf.image(g, sub, q)
    assert len(img) == len(sub)
    assert gf.image(gf.inverse(g, q), img, q) == sub


@given(matrices())
def test_quotient_matrix_has_the_subspace_as_kernel(qm):
    q, m = qm
    d = len(m)
    sub = gf.span(m, q)
    Q = gf.quotient_matrix(sub, d, q)
    assert len(Q) == d - len(sub)
    assert all(not any(gf.matvec(Q, v, q)) for v in sub)
    assert gf.rank(Q, q) == len(Q)
