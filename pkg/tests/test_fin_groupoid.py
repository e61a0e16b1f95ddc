from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segalkit.fin_groupoid import (
    ActionGroupoid,
    DiscreteGroupoid,
    FullSubgroupoid,
    Group,
    GroupoidError,
    GroupoidFunctor,
    InvolutionDatum,
    IsoCommaPullback,
    ProductGroupoid,
    TableGroupoid,
    cardinality,
    check_functor,
    compose_functors,
    constant_functor,
    delooping,
    disjoint_union,
    functors_equal,
    homotopy_fixed_points,
    identity_functor,
    is_equivalence,
    is_homotopy_pullback,
    skeleton,
    terminal,
    validate,
)


def perm_mul(g, h):
    return tuple(g[h[i]] for i in range(len(h)))


def perm_inv(g):
    out = [0] * len(g)
    for i, v in enumerate(g):
        out[v] = i
    return tuple(out)


S3 = Group(tuple(permutations(range(3))), ((1, 0, 2), (1, 2, 0)), perm_mul, perm_inv, (0, 1, 2))


def on_colorings(g, f):
    gi = perm_inv(g)
    return tuple(f[gi[i]] for i in range(len(f)))


def colorings(c):
    return list(product(range(c), repeat=3))


def action(xs, act=on_colorings):
    return ActionGroupoid({0: (S3, xs)}, act, lambda x: 0)


def BS3():
    return delooping(S3.elements, perm_mul, S3.unit)


def to_BS3(G, B):
    return GroupoidFunctor(G, B, lambda x: "*", lambda m: m[0], "forget")


def brute_cardinality(G):
    """Sum over objects of 1/(number of arrows out of it); independent of component search."""
    objs = list(G.objects())
    return sum((Fraction(1, sum(len(G.hom(x, y)) for y in objs)) for x in objs), Fraction(0))


def burnside(xs, act):
    return Fraction(sum(sum(1 for x in xs if act(g, x) == x) for g in S3.elements), len(S3.elements))


@pytest.mark.parametrize("c", [1, 2, 3])
def test_action_groupoid_counts(c):
    xs = colorings(c)
    G = action(xs)
    assert validate(G)
    assert len(G.components().reps) == burnside(xs, on_colorings)
    assert cardinality(G) == Fraction(len(xs), 6) == brute_cardinality(G)


def test_delooping_and_products():
    B = BS3()
    assert validate(B)
    assert cardinality(B) == Fraction(1, 6)
    P = ProductGroupoid([B, DiscreteGroupoid("ab")])
    assert validate(P)
    assert cardinality(P) == Fraction(2, 6) == brute_cardinality(P)
    assert cardinality(terminal()) == 1


def test_broken_table_is_reported():
    mors = {"e": ("x", "x"), "g": ("x", "x")}
    table = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "g"}
    rep = validate(TableGroupoid(["x"], mors, table))
    assert not rep.ok
    # g is idempotent and not the identity, so it has no inverse
    assert any(v[0] == "undefined" and v[1] == "g" for v in rep.violations)
    with pytest.raises(GroupoidError):
        TableGroupoid(["x"], mors, table).compose("g", "missing")


def test_functor_checks():
    B = BS3()
    G = action(colorings(2))
    F = to_BS3(G, B)
    assert check_functor(F) == []
    bad = GroupoidFunctor(G, B, lambda x: "*", lambda m: S3.unit, "trivial-on-arrows")
    assert check_functor(bad) == []  # the trivial homomorphism is a functor
    wrong = GroupoidFunctor(G, B, lambda x: "*", lambda m: (1, 0, 2), "constant-transposition")
    assert check_functor(wrong)
    assert functors_equal(compose_functors(F, identity_functor(G)), F)[0]
    assert not functors_equal(F, bad)[0]


def cospan(c1, c2):
    B = BS3()
    A, Bg = action(colorings(c1)), action(colorings(c2))
    return A, Bg, to_BS3(A, B), to_BS3(Bg, B)


@pytest.mark.parametrize("c1,c2", [(1, 1), (1, 2), (2, 2), (2, 1)])
def test_pullback_cardinality_formula_matches_enumeration(c1, c2):
    A, Bg, f, g = cospan(c1, c2)
    fast = IsoCommaPullback(f, g).cardinality()
    P = IsoCommaPullback(f, g)
    assert fast == cardinality(P) == brute_cardinality(P)
    # the pullback over BS3 is the action groupoid on pairs
    assert fast == Fraction(len(colorings(c1)) * len(colorings(c2)), 6)
    assert validate(P, exhaustive=False)


def pair_action(c1, c2, keep=lambda x: True):
    xs = [(a, b) for a in colorings(c1) for b in colorings(c2) if keep((a, b))]
    return action(xs, lambda g, x: (on_colorings(g, x[0]), on_colorings(g, x[1])))


def pair_functor(X, P):
    return GroupoidFunctor(
        X, P,
        lambda x: (x[0], x[1], S3.unit),
        lambda m: ((m[0], m[1][0]), (m[0], m[1][1]), (m[1][0], m[1][1], S3.unit)),
        "pairs",
    )


def both_routes(make):
    """Run the equivalence check on a fresh pullback and on one whose objects were listed."""
    F_fast = make()
    fast = is_equivalence(F_fast)
    F_full = make()
    F_full.target.objects()
    full = is_equivalence(F_full)
    return bool(fast), bool(full), full


@pytest.mark.parametrize("c1,c2", [(1, 2), (2, 2)])
def test_equivalence_routes_agree_on_a_true_pullback(c1, c2):
    def make():
        _, _, f, g = cospan(c1, c2)
        return pair_functor(pair_action(c1, c2), IsoCommaPullback(f, g))

    fast, full, _ = both_routes(make)
    assert fast and full


def test_equivalence_routes_agree_on_a_missing_class():
    def make():
        _, _, f, g = cospan(2, 2)
        return pair_functor(pair_action(2, 2, lambda x: x[0] != x[1]), IsoCommaPullback(f, g))

    fast, full, res = both_routes(make)
    assert not fast and not full
    assert res.witness["kind"] == "not essentially surjective"


def test_equivalence_routes_agree_on_lost_automorphisms():
    def make():
        _, _, f, g = cospan(1, 2)
        xs = [(a, b) for a in colorings(1) for b in colorings(2)]
        X = DiscreteGroupoid(xs)
        P = IsoCommaPullback(f, g)
        return GroupoidFunctor(X, P, lambda x: (x[0], x[1], S3.unit), lambda m: P.identity((m[1][0], m[1][1], S3.unit)))

    fast, full, res = both_routes(make)
    assert not fast and not full


@given(st.sets(st.sampled_from(colorings(2)), min_size=1))
def test_equivalence_routes_agree_on_subgroupoids(keep):
    def make():
        _, _, f, g = cospan(1, 2)
        return pair_functor(pair_action(1, 2, lambda x: x[1] in keep or on_colorings((1, 0, 2), x[1]) in keep), IsoCommaPullback(f, g))

    fast, full, _ = both_routes(make)
    assert fast == full


def test_homotopy_pullback_squares():
    A, Bg, f, g = cospan(1, 2)
    X = pair_action(1, 2)
    p = GroupoidFunctor(X, A, lambda x: x[0], lambda m: (m[0], m[1][0]))
    q = GroupoidFunctor(X, Bg, lambda x: x[1], lambda m: (m[0], m[1][1]))
    assert is_homotopy_pullback(X, p, q, f, g)
    B = BS3()
    idB = identity_functor(B)
    T = terminal()
    c = constant_functor(T, B, "*")
    res = is_homotopy_pullback(T, c, c, idB, idB)
    assert not res
    assert res.witness is not None


def test_skeleton_inclusion_is_an_equivalence():
    G = action(colorings(2))
    Sk = skeleton(G)
    assert len(Sk.objects()) == 4
    assert is_equivalence(Sk.inclusion())
    partial = FullSubgroupoid(G, Sk.objects()[:-1])
    res = is_equivalence(partial.inclusion())
    assert not res and res.witness["kind"] == "not essentially surjective"


def test_fixed_points_of_a_discrete_involution():
    D = DiscreteGroupoid(range(6))
    sw = lambda x: x ^ 1 if x < 4 else x  # noqa: E731
    sigma = GroupoidFunctor(D, D, sw, lambda m: ("id", sw(m[1])))
    H = homotopy_fixed_points(D, InvolutionDatum(sigma, lambda x: ("id", x)))
    assert sorted(x for x, _ in H.objects()) == [4, 5]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fixed_points_of_inversion_on_a_cyclic_group(n):
    B = delooping(tuple(range(n)), lambda a, b: (a + b) % n, 0)
    sigma = GroupoidFunctor(B, B, lambda x: x, lambda g: (-g) % n, "inv")
    H = homotopy_fixed_points(B, InvolutionDatum(sigma, lambda x: 0))
    assert validate(H)
    # every u satisfies u^{-1} u = e; g acts on u by u - 2g, so classes are cosets of 2Z/n
    assert len(H.objects()) == n
    assert len(H.components().reps) == (2 if n % 2 == 0 else 1)
    assert cardinality(H) == 1 == brute_cardinality(H)


def test_bad_involution_datum_is_rejected():
    B = delooping(tuple(range(3)), lambda a, b: (a + b) % 3, 0)
    sigma = GroupoidFunctor(B, B, lambda x: x, lambda g: (-g) % 3)
    with pytest.raises(GroupoidError):
        homotopy_fixed_points(B, InvolutionDatum(sigma, lambda x: 1))


# -- worked examples ----------------------------------------------------------------------


def C2():
    return delooping(("e", "t"), lambda a, b: "e" if a == b else "t", "e")


def test_small_groupoids_validate():
    assert validate(terminal())
    assert validate(C2())
    assert cardinality(terminal()) == 1
    assert cardinality(C2()) == Fraction(1, 2)
    assert cardinality(DiscreteGroupoid(range(5))) == 5


def test_broken_associativity_reports_the_triple():
    els = range(3)
    mors = {g: ("*", "*") for g in els}
    table = {(g, h): (g + h) % 3 for g in els for h in els}
    table[(1, 2)] = 1
    rep = validate(TableGroupoid(["*"], mors, table))
    triples = [v[1] for v in rep.violations if v[0] == "associativity"]
    assert triples
    assert all(len(t) == 3 for t in triples)


def test_pullback_of_identities_is_the_arrow_groupoid():
    G = action(colorings(2))
    idG = identity_functor(G)
    P = IsoCommaPullback(idG, idG)
    assert cardinality(P) == cardinality(G) == P.cardinality()
    diag = GroupoidFunctor(G, P, lambda x: (x, x, G.identity(x)), lambda m: (m, m, (G.src(m), G.src(m), G.identity(G.src(m)))))
    assert is_equivalence(diag)


def test_pullback_of_points_over_a_delooping():
    B = BS3()
    T = terminal()
    pt = constant_functor(T, B, "*")
    P = IsoCommaPullback(pt, pt)
    assert len(P.objects()) == 6
    assert all(P.aut_order(x) == 1 for x in P.objects())
    assert len(P.components().reps) == 6


def test_pullback_over_a_point_is_the_product():
    G, H = action(colorings(2)), C2()
    T = terminal()
    P = IsoCommaPullback(constant_functor(G, T, ()), constant_functor(H, T, ()))
    assert P.cardinality() == cardinality(P) == cardinality(G) * cardinality(H)


def test_equivalence_examples():
    G = action(colorings(2))
    assert is_equivalence(identity_functor(G))
    D2, D1 = DiscreteGroupoid("ab"), DiscreteGroupoid("x")
    res = is_equivalence(constant_functor(D2, D1, "x"))
    assert not res
    assert res.witness["kind"] == "not essentially injective"


def test_products_with_the_terminal_groupoid():
    G = action(colorings(2))
    GT = ProductGroupoid([G, terminal()])
    proj = GroupoidFunctor(GT, G, lambda x: x[0], lambda m: m[0])
    assert is_equivalence(proj)
    P = ProductGroupoid([G, C2()])
    assert cardinality(P) == cardinality(G) * cardinality(C2())
    BB = ProductGroupoid([C2(), C2()])
    assert len(BB.components().reps) == 1
    assert BB.aut_order(BB.objects()[0]) == 4


def test_trivial_involution_on_C2():
    B = C2()
    H = homotopy_fixed_points(B, InvolutionDatum(identity_functor(B), lambda x: "e"))
    assert sorted(u for _, u in H.objects()) == ["e", "t"]
    assert len(H.components().reps) == 2
    assert all(H.aut_order(r) == 2 for r in H.components().reps)
    assert cardinality(H) == 1


def test_trivial_involution_on_a_discrete_groupoid():
    D = DiscreteGroupoid(range(4))
    H = homotopy_fixed_points(D, InvolutionDatum(identity_functor(D), lambda x: ("id", x)))
    assert [x for x, _ in H.objects()] == list(range(4))
    assert is_equivalence(H.forget())


def test_swap_involution_on_a_disjoint_union_has_no_fixed_points():
    G = action(colorings(2))
    GG = disjoint_union([G, G])
    sw = GroupoidFunctor(GG, GG, lambda x: (1 - x[0], x[1]), lambda m: (1 - m[0], m[1]))
    H = homotopy_fixed_points(GG, InvolutionDatum(sw, lambda x: GG.identity(x)))
    # no arrow joins the two copies, so no object carries a transport to its mirror
    assert H.objects() == []


def test_swap_involution_on_a_square_recovers_the_groupoid():
    G = action(colorings(2))
    GG = ProductGroupoid([G, G])
    sw = GroupoidFunctor(GG, GG, lambda x: (x[1], x[0]), lambda m: (m[1], m[0]))
    H = homotopy_fixed_points(GG, InvolutionDatum(sw, lambda x: GG.identity(x)))
    assert validate(H, exhaustive=False)

    def diag(x):
        return ((x, x), (G.identity(x), G.identity(x)))

    back = GroupoidFunctor(G, H, diag, lambda m: ((m, m), diag(G.src(m))))
    assert check_functor(back) == []
    assert is_equivalence(back)
    assert cardinality(H) == cardinality(G)


@pytest.mark.parametrize("make", [C2, BS3, lambda: action(colorings(2))])
def test_trivial_action_fixed_point_count(make):
    G = make()
    H = homotopy_fixed_points(G, InvolutionDatum(identity_functor(G), lambda x: G.identity(x)))
    expected = sum(
        (Fraction(sum(1 for u in G.automorphisms(r) if G.compose(u, u) == G.identity(r)), G.aut_order(r)) for r in G.components().reps),
        Fraction(0),
    )
    assert cardinality(H) == expected == brute_cardinality(H)


def test_cardinality_is_invariant_under_equivalence():
    G = action(colorings(3))
    Sk = skeleton(G)
    assert is_equivalence(Sk.inclusion())
    assert cardinality(Sk) == cardinality(G)


def test_pasting_law():
    B = BS3()
    A, E = action(colorings(2)), action(colorings(1))
    f, h = to_BS3(A, B), to_BS3(E, B)
    idB = identity_functor(B)
    P1 = IsoCommaPullback(f, idB)
    Q = IsoCommaPullback(P1.projection_b(), h)
    direct = IsoCommaPullback(f, h)

    def on_obj(x):
        (a, _, gamma), e, delta = x
        return (a, e, B.compose(delta, gamma))

    def on_mor(m):
        (alpha, _, _), eps, x = m
        return (alpha, eps, on_obj(x))

    comp = GroupoidFunctor(Q, direct, on_obj, on_mor, "paste")
    assert check_functor(comp) == []
    assert is_equivalence(comp)
    assert Q.cardinality() == direct.cardinality()
