import csv
import io
import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segalkit import gf
from segalkit.cli import RunConfig, hermitian_module, regular_module
from segalkit.hall import (
    SUB_FIRST,
    HallVector,
    algebra_of,
    basis,
    hall_module_action,
    hall_product,
    isotropic_oracle,
    left_action_span,
    multiply,
    oracle_counts,
    structure_constants,
    table_rows,
    to_csv,
    to_json,
    verify_associativity,
    verify_module_law,
)
from segalkit.simplicial_objects import LEQ, OVER, forget_to_simplex, restrict_shape
from segalkit.waldhausen import FqVect, build_S


def cls(d):
    return (d, ())


def dim(x):
    return x[0]


@pytest.fixture(scope="module")
def S2():
    return build_S(FqVect(2, 3), 3)


def test_oracle_agrees_with_gaussian_binomials():
    for q, c in product((2, 3), range(4)):
        for b in range(c + 1):
            assert oracle_counts(q, c - b, b, c) == gf.subspace_count(c, b, q)
    assert oracle_counts(2, 1, 1, 3) == 0


@pytest.mark.parametrize("q", [2, 3])
def test_every_structure_constant_matches_the_oracle(q):
    X = build_S(FqVect(q, 3), 2)
    seen = set()
    for a, b, c, v in structure_constants(X):
        seen.add((a[0], b[0], c[0]))
        assert v == oracle_counts(q, a[0], b[0], c[0])
    for a, b in product(range(4), repeat=2):
        for c in range(4):
            if oracle_counts(q, a, b, c):
                assert (a, b, c) in seen


def test_worked_products_over_F2(S2):
    assert hall_product(S2, cls(1), cls(1)) == HallVector({cls(2): 3})
    assert hall_product(S2, cls(1), cls(2)) == HallVector({cls(3): 7})
    assert hall_product(S2, cls(2), cls(1)) == HallVector({cls(3): 7})
    assert hall_product(S2, cls(2), cls(2)) == HallVector()


def test_associativity_triple(S2):
    one = basis(cls(1))
    left = multiply(S2, multiply(S2, one, one), one)
    right = multiply(S2, one, multiply(S2, one, one))
    assert left == right == HallVector({cls(3): 21})


def test_zero_is_the_unit(S2):
    for d in range(4):
        assert hall_product(S2, cls(0), cls(d)) == basis(cls(d))
        assert hall_product(S2, cls(d), cls(0)) == basis(cls(d))


def test_orientation_does_not_matter_for_vector_spaces(S2):
    for a, b in product(range(4), repeat=2):
        assert hall_product(S2, cls(a), cls(b)) == hall_product(S2, cls(b), cls(a), SUB_FIRST)


def test_associativity_in_bound():
    X = build_S(FqVect(3, 3), 3)
    rep = verify_associativity(X, dim, 3)
    assert rep.passed and rep.checked > 0
    assert all(sum(dim(x) for x in t) > 3 for t in rep.out_of_bound)


def test_unknown_class_is_rejected(S2):
    with pytest.raises(KeyError):
        hall_product(S2, cls(5), cls(1))


@given(st.dictionaries(st.integers(0, 2), st.fractions(max_denominator=5), max_size=3),
       st.dictionaries(st.integers(0, 2), st.fractions(max_denominator=5), max_size=3))
def test_multiplication_is_bilinear(u, v):
    X = build_S(FqVect(2, 3), 2)
    U = HallVector({cls(k): c for k, c in u.items()})
    V = HallVector({cls(k): c for k, c in v.items()})
    expected = HallVector()
    for (a, x), (b, y) in product(U.items(), V.items()):
        expected = expected + hall_product(X, a, b).scale(x * y)
    assert multiply(X, U, V) == expected


def test_regular_module_is_the_product():
    S = build_S(FqVect(2, 2), 3)
    M = restrict_shape(forget_to_simplex(S, OVER), LEQ)
    for a, m in product(range(3), repeat=2):
        act = hall_module_action(M, cls(a), cls(m))
        prod = hall_product(S, cls(a), cls(m))
        assert act.relabel(dim) == prod.relabel(dim)
    assert verify_module_law(M, dim, dim, 2).passed


def test_regular_module_from_the_cli_builder():
    M = regular_module(RunConfig("module-table"), 3)
    assert verify_module_law(M, dim, dim, 3).passed


def form_of(m):
    return m[1][0]


def isotropic_lines(N, q):
    """Lines spanned by a nonzero ``v`` with ``v^T N v = 0``."""
    n = len(N)
    lines = set()
    for v in product(range(q), repeat=n):
        if any(v) and sum(v[i] * N[i][j] * v[j] for i in range(n) for j in range(n)) % q == 0:
            lines.add(frozenset(tuple(c * x % q for x in v) for c in range(1, q)))
    return len(lines)


@pytest.fixture(scope="module")
def herm():
    return hermitian_module(RunConfig("module-table"), 2)


def test_hermitian_module_constants_match_the_isotropic_oracle(herm):
    span = left_action_span(herm)
    A = span.left.target.components().reps
    mods = span.right.target.components().reps
    checked = 0
    for a, m in product(A, mods):
        result = hall_module_action(herm, a, m)
        for c in mods:
            if 2 * a[0] + m[0][0] > 2:
                continue
            assert result[c] == isotropic_oracle(2, form_of(c), a[0], form_of(m))
            checked += 1
    assert checked > 0


def test_hermitian_weights_over_F2(herm):
    span = left_action_span(herm)
    zero = next(m for m in span.right.target.components().reps if m[0][0] == 0)
    result = hall_module_action(herm, cls(1), zero)
    weights = {form_of(c): v for c, v in result.items()}
    # hyperbolic plane: every vector is isotropic; the other form has one isotropic line
    assert weights == {((0, 1), (1, 0)): 3, ((0, 1), (1, 1)): 1}
    for N, v in weights.items():
        assert v == isotropic_lines(N, 2)


def test_hermitian_module_law():
    M = hermitian_module(RunConfig("module-table"), 3)
    rep = verify_module_law(M, dim, lambda m: m[0][0], 2, weight=2)
    assert rep.passed and rep.checked > 0


def test_algebra_of_the_hermitian_module_is_S(herm):
    X = algebra_of(herm)
    assert len(X.level(1).components().reps) == 3


def test_table_output():
    X = build_S(FqVect(2, 2), 2)
    rows = table_rows(structure_constants(X))
    assert ("[1]", "[1]", "[2]", 3, 1) in rows
    parsed = list(csv.DictReader(io.StringIO(to_csv(rows))))
    assert len(parsed) == len(rows)
    assert {"a": "[1]", "b": "[1]", "c": "[2]", "numerator": "3", "denominator": "1"} in parsed
    data = json.loads(to_json(rows))
    assert {"a": "[1]", "b": "[1]", "c": "[2]", "numerator": 3, "denominator": 1} in data


def test_vector_arithmetic():
    u = HallVector({"x": Fraction(1, 2)})
    assert (u + u.scale(-1)) == HallVector()
    assert len(u + basis("y")) == 2
    assert (u + basis("x"))["x"] == Fraction(3, 2)
