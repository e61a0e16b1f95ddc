from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segalkit import gf
from segalkit.fin_groupoid import check_functor, validate as validate_groupoid
from segalkit.hermitian import (
    Duality,
    HermitianR,
    build_R,
    duality_compatibility,
    duality_on_S,
    fixed_point_identification,
    project_R_to_S,
    swap_is_simplicial,
    symmetric_form,
    tw_to_product,
)
from segalkit.simplicial_objects import InsufficientDepth, validate, validate_morphism
from segalkit.waldhausen import FqVect, build_S, flag_dims, zero_category

HYPERBOLIC = ((0, 1), (1, 0))


def symmetric_invertible(d, q):
    out = []
    for flat in product(range(q), repeat=d * d):
        M = tuple(tuple(flat[r * d:(r + 1) * d]) for r in range(d))
        if all(M[i][j] == M[j][i] for i in range(d) for j in range(d)) and gf.is_invertible(M, q):
            out.append(M)
    return out


def congruence_classes(d, q):
    """Orbits of ``M -> g^T M g`` on symmetric invertible forms, by direct closure."""
    forms = set(symmetric_invertible(d, q))
    G = gf.general_linear(d, q)
    classes = []
    while forms:
        M = forms.pop()
        orbit = {gf.matmul(gf.matmul(gf.transpose(g), M, q), g, q) for g in G}
        forms -= orbit
        classes.append((M, len(G) // len(orbit)))
    return classes


def isotropic_subspaces(M, d, q):
    """Subspaces ``A`` (as vector sets) with ``x^T M y = 0`` for all ``x, y`` in ``A``."""
    vecs = list(product(range(q), repeat=d))
    pair = lambda x, y: sum(x[i] * M[i][j] * y[j] for i in range(d) for j in range(d)) % q  # noqa: E731
    found = set()
    for k in range(d + 1):
        for gens in product(vecs, repeat=k):
            A = frozenset(tuple(sum(c * g[i] for c, g in zip(cs, gens)) % q for i in range(d)) for cs in product(range(q), repeat=k))
            if all(pair(x, y) == 0 for x in A for y in A):
                found.add(A)
    return found


@pytest.mark.parametrize("q", [2, 3])
def test_level_zero_classes_are_congruence_classes(q):
    R = build_R(build_S(FqVect(q, 2), 1), 0)
    G = R.level(0)
    by_dim = {}
    for r in G.components().reps:
        by_dim.setdefault(r[0][0], []).append(G.aut_order(r))
    for d in range(3):
        assert sorted(by_dim[d]) == sorted(a for _, a in congruence_classes(d, q))


def test_level_zero_over_F2(F2):
    G = build_R(build_S(F2, 1), 0).level(0)
    counts = {d: sum(1 for r in G.components().reps if r[0][0] == d) for d in range(3)}
    assert counts == {0: 1, 1: 1, 2: 2}
    forms = {symmetric_form(r): G.aut_order(r) for r in G.components().reps if r[0][0] == 2}
    assert forms.get(HYPERBOLIC) == 6
    assert sorted(forms.values()) == [2, 6]
    assert G.cardinality() == 1 + 1 + Fraction(1, 2) + Fraction(1, 6)


@pytest.mark.parametrize("q", [2, 3])
def test_level_one_cardinality_counts_isotropic_subspaces(q):
    # objects of R_1 are a form together with an isotropic subspace
    R = build_R(build_S(FqVect(q, 2), 3), 1)
    expected = sum(
        Fraction(len(isotropic_subspaces(M, d, q)), gf.gl_order(d, q))
        for d in range(3)
        for M in symmetric_invertible(d, q)
    )
    assert R.level(1).cardinality() == expected


def test_duality_examples(F2):
    S = build_S(F2, 3)
    D = Duality(2)
    for x in S.level(2).objects():
        _, a, b = flag_dims(x)
        assert flag_dims(D.on_flag(x)) == (0, b - a, b)
        assert D.on_flag(D.on_flag(x)) == x
    for g in gf.general_linear(2, 2):
        assert D.on_matrix(D.on_matrix(g, 2), 2) == g


def test_duality_is_simplicial(F2):
    S = build_S(F2, 3)
    assert duality_compatibility(S) == []
    for m, datum in duality_on_S(S).items():
        assert check_functor(datum.sigma) == []


def test_twisted_duality_is_a_levelwise_involution(F2):
    D = Duality(2, {2: HYPERBOLIC})
    assert D.twisted
    S = build_S(F2, 3)
    for m in range(4):
        G = S.level(m)
        sigma = D.datum(G).sigma
        assert check_functor(sigma) == []
        assert all(sigma.obj(sigma.obj(x)) == x for x in G.objects())
    with pytest.raises(ValueError):
        HermitianR(build_S(F2, 3), 1, D)


def test_twisted_duality_needs_a_symmetric_invertible_form():
    with pytest.raises(ValueError):
        Duality(2, {2: ((1, 1), (0, 1))})
    with pytest.raises(ValueError):
        Duality(2, {2: ((1, 1), (1, 1))})


@given(st.sampled_from(gf.general_linear(2, 3)), st.sampled_from(gf.general_linear(2, 3)))
def test_duality_reverses_composition(g, h):
    D = Duality(3)
    # covariant after inversion: sigma(gh) = sigma(g) sigma(h)
    assert D.on_matrix(gf.matmul(g, h, 3), 2) == gf.matmul(D.on_matrix(g, 2), D.on_matrix(h, 2), 3)


def test_R_validates(F2):
    S = build_S(F2, 5)
    R = build_R(S, 2)
    assert validate(R)
    assert validate_groupoid(R.level(1)).ok
    assert validate_morphism(project_R_to_S(R)) == []


def test_R_needs_depth(F2):
    with pytest.raises(InsufficientDepth):
        build_R(build_S(F2, 4), 2)
    assert build_R(build_S(F2, 5)).N == 2


def test_R_of_the_zero_category():
    R = build_R(build_S(zero_category(), 5))
    for n in range(3):
        assert len(R.level(n).objects()) == 1 and R.level(n).cardinality() == 1


def test_projection_keeps_the_first_half(F2):
    S = build_S(F2, 3)
    R = build_R(S, 1)
    p = project_R_to_S(R)
    for a in R.level(1).objects():
        assert flag_dims(p.component(1).obj(a)) == flag_dims(a[0])[:2]


def test_twisted_arrow_to_product(F2):
    p = tw_to_product(build_S(F2, 5), 2)
    assert validate_morphism(p) == []


def test_swap_is_simplicial(F2):
    assert swap_is_simplicial(build_S(F2, 2)) == []


def test_fixed_points_of_the_swap_recover_S(F2):
    res = fixed_point_identification(build_S(F2, 1), 1)
    assert all(r.ok for r in res.values())
