from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segalkit import gf
from segalkit.segal_checks import is_1_segal, is_2_segal, is_active_equifibered, is_relative_segal
from segalkit.simplicial_objects import InsufficientDepth, validate, validate_morphism
from segalkit.waldhausen import (
    FqVect,
    act_on_flag,
    build_S,
    build_S_rel,
    closure_predicates,
    discrete_skeleton_sizes,
    face_flag,
    face_matrix,
    flag_cardinality_by_dims,
    flag_dims,
    induced_map_S,
    zero_category,
)


def vector_sets(d, q):
    """Every subspace of F_q^d as a frozenset of vectors, by spanning subsets of size <= d."""
    vecs = list(product(range(q), repeat=d))
    out = set()
    for k in range(d + 1):
        for gens in product(vecs, repeat=k):
            span = {tuple(sum(c * g[i] for c, g in zip(cs, gens)) % q for i in range(d)) for cs in product(range(q), repeat=k)}
            out.add(frozenset(span) if k else frozenset([(0,) * d]))
    return out


def log_q(n, q):
    k = 0
    while n > 1:
        n //= q
        k += 1
    return k


def brute_flags(m, d, q, allowed):
    """Chains ``0 = A_0 <= ... <= A_m = F^d`` with every subquotient dimension allowed, keyed by dims."""
    subs = sorted(vector_sets(d, q), key=len)
    dim = {U: log_q(len(U), q) for U in subs}
    zero, top = subs[0], subs[-1]
    counts = {}

    def grow(chain):
        if len(chain) == m:
            full = chain + [top]
            ds = [dim[U] for U in full]
            if all(b - a in allowed for k, a in enumerate(ds) for b in ds[k + 1:]):
                counts[tuple(ds)] = counts.get(tuple(ds), 0) + 1
            return
        for U in subs:
            if chain[-1] <= U:
                grow(chain + [U])

    if m == 0:
        return {(0, 0): 1} if d == 0 else {}
    grow([zero])
    return counts


CASES = [(2, 2, None), (3, 2, None), (2, 3, None), (2, 2, {0, 1}), (2, 3, {0, 1, 3})]


@pytest.mark.parametrize("q,dmax,allowed", CASES)
def test_level_sizes_match_brute_flag_count(q, dmax, allowed):
    C = FqVect(q, dmax) if allowed is None else FqVect(q, dmax, frozenset(allowed))
    S = build_S(C, 3)
    for m in range(4):
        expected = {}
        for d in C.allowed:
            for dims, n in brute_flags(m, d, q, C.allowed).items():
                expected[dims] = n
        G = S.level(m)
        assert len(G.objects()) == sum(expected.values())
        # GL_d acts transitively on flags of one type: one class per type, cardinality #flags/|GL_d|
        card = flag_cardinality_by_dims(S, m)
        assert set(card) == set(expected)
        for dims, n in expected.items():
            assert card[dims] == Fraction(n, gf.gl_order(dims[-1], q))
        assert sorted(discrete_skeleton_sizes(S, m)) == sorted(expected.values())


def test_first_level_classes(F2):
    S = build_S(F2, 1)
    G = S.level(1)
    reps = G.components().reps
    assert sorted(r[0] for r in reps) == [0, 1, 2]
    assert sorted(G.aut_order(r) for r in reps) == [1, 1, 6]
    assert G.cardinality() == 2 + Fraction(1, 6)


def test_zeroth_level_is_a_point(F2):
    G = build_S(F2, 2).level(0)
    assert len(G.objects()) == 1 and G.cardinality() == 1


def test_zero_category_gives_the_point_everywhere():
    S = build_S(zero_category(), 4)
    for m in range(5):
        assert len(S.level(m).objects()) == 1
        assert S.level(m).cardinality() == 1


def test_second_level_counts_subspaces():
    S = build_S(FqVect(3, 2), 2)
    card = flag_cardinality_by_dims(S, 2)
    for c in range(3):
        for a in range(c + 1):
            assert card[(0, a, c)] == Fraction(gf.subspace_count(c, a, 3), gf.gl_order(c, 3))


def test_faces_of_a_short_exact_sequence(F2):
    S = build_S(F2, 2)
    for x in S.level(2).objects():
        _, a, c = flag_dims(x)
        assert flag_dims(face_flag(x, 2, 0, 2)) == (0, c - a)
        assert flag_dims(face_flag(x, 2, 1, 2)) == (0, c)
        assert flag_dims(face_flag(x, 2, 2, 2)) == (0, a)


@given(st.data())
def test_faces_are_equivariant(data):
    S = build_S(FqVect(2, 3), 3)
    m = data.draw(st.integers(1, 3))
    i = data.draw(st.integers(0, m))
    x = data.draw(st.sampled_from(S.level(m).objects()))
    g = data.draw(st.sampled_from(gf.general_linear(x[0], 2)))
    lhs = face_flag(act_on_flag(g, x, 2), m, i, 2)
    rhs = act_on_flag(face_matrix(g, x, m, i, 2), face_flag(x, m, i, 2), 2)
    assert lhs == rhs


@pytest.mark.parametrize("q,dmax", [(2, 2), (3, 2), (2, 3)])
def test_S_validates(q, dmax):
    assert validate(build_S(FqVect(q, dmax), 3))


def test_closure_predicates(F2):
    assert closure_predicates(F2, {0, 1, 2}) == (True, True, True)
    assert closure_predicates(F2, {0, 1}) == (True, True, False)
    assert closure_predicates(F2, {0}) == (True, True, True)
    assert closure_predicates(F2, {0, 2}) == (False, False, True)
    assert closure_predicates(FqVect(2, 3), {0, 1, 3}) == (False, False, False)


def test_induced_map_of_the_identity(F2):
    S = build_S(F2, 3)
    F = induced_map_S(S, S)
    assert validate_morphism(F) == []
    assert is_active_equifibered(F) and is_relative_segal(F)


def test_extension_closed_inclusion(F2):
    # d in {0, 2}: extension closed, not closed under subobjects or quotients
    SC, SD = build_S(F2.sub({0, 2}), 3), build_S(F2, 3)
    F = induced_map_S(SC, SD)
    assert validate_morphism(F) == []
    assert is_relative_segal(F)
    assert not is_active_equifibered(F)


def test_induced_map_needs_an_inclusion(F2):
    with pytest.raises(ValueError):
        induced_map_S(build_S(F2, 2), build_S(F2.sub({0, 1}), 2))
    with pytest.raises(ValueError):
        induced_map_S(build_S(FqVect(3, 1), 2), build_S(FqVect(2, 1), 2))


def test_S_is_not_1_segal(F2):
    rep = is_1_segal(build_S(F2, 2))
    assert not rep.passed


def test_bad_categories_are_rejected():
    with pytest.raises(ValueError):
        FqVect(4, 2)
    with pytest.raises(ValueError):
        FqVect(2, 2, frozenset({1, 2}))
    with pytest.raises(ValueError):
        FqVect(2, 2, frozenset({0, 3}))


def test_levels_beyond_the_truncation(F2):
    with pytest.raises(InsufficientDepth):
        build_S(F2, 2).level(3)


@pytest.mark.parametrize("allowed", [{0}, {0, 1}, {0, 2}, {0, 1, 2}])
def test_relative_S_is_1_segal_exactly_for_extension_closed_inclusions(F2, allowed):
    R, _, _ = build_S_rel(build_S(F2.sub(allowed), 4), build_S(F2, 4), 3)
    assert is_1_segal(R, 3).passed == closure_predicates(F2, allowed)[2]
    assert is_2_segal(R, 3)
