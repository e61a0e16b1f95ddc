"""Dualities on bounded ``F_q`` categories, twisted arrows with their involution, and ``R(C)``.

The flagship duality is ``D(F^d) = F^d`` with ``D(f) = f^T``.  It is turned into a
covariant involution of each level of ``S(C)`` by composing with inversion, so
``sigma(g) = g^{-T}``, and a flag ``A_1 <= ... <= A_{m-1}`` goes to
``A_{m-1}^perp <= ... <= A_1^perp``.  With this choice ``sigma`` squares to the
identity and intertwines ``d_i`` with ``d_{m-i}`` on the nose.

A twisted variant uses the bilinear form ``x^T M y`` for a symmetric invertible
``M`` in each dimension; it is levelwise only.
"""

from __future__ import annotations

from typing import Mapping

from . import gf
from .delta_combinatorics import MonotoneMap
from .fin_groupoid import (
    FinGroupoid,
    GroupoidFunctor,
    HomotopyFixedPoints,
    InvolutionDatum,
    is_equivalence,
    induced_on_fixed_points,
)
from .simplicial_objects import (
    SIMPLEX,
    IndexShape,
    InsufficientDepth,
    ProductSimplicial,
    SimplicialMorphism,
    TruncatedSimplicialGroupoid,
    pair_morphisms,
    reverse,
    twisted_arrow,
)
from .waldhausen import FlagGroupoid, WaldhausenS


def _inv_transpose(g, q):
    return gf.transpose(gf.inverse(g, q)) if g else ()


class Duality:
    """Transpose duality, optionally twisted by symmetric invertible forms ``M_d``."""

    def __init__(self, q: int, forms: Mapping[int, tuple] | None = None):
        self.q = q
        self.forms = dict(forms or {})
        for d, M in self.forms.items():
            if gf.transpose(M) != tuple(M) or not gf.is_invertible(M, q):
                raise ValueError(f"form in dimension {d} must be symmetric and invertible")

    @property
    def twisted(self) -> bool:
        return any(M != gf.identity(d) for d, M in self.forms.items())

    def form(self, d: int):
        return self.forms.get(d, gf.identity(d))

    def perp(self, V, d: int):
        return gf.perp(gf.image(self.form(d), V, self.q), d, self.q)

    def on_flag(self, x):
        d, flag = x
        return (d, tuple(self.perp(V, d) for V in reversed(flag)))

    def on_matrix(self, g, d: int):
        if not g:
            return ()
        q = self.q
        M = self.form(d)
        return gf.matmul(gf.matmul(gf.inverse(M, q), _inv_transpose(g, q), q), M, q)

    def datum(self, G: FlagGroupoid) -> InvolutionDatum:
        sigma = GroupoidFunctor(
            G,
            G,
            self.on_flag,
            lambda a: (self.on_matrix(a[0], a[1][0]), self.on_flag(a[1])),
            "sigma",
        )
        return InvolutionDatum(sigma, G.identity)


def duality_on_S(S: WaldhausenS, duality: Duality | None = None) -> dict[int, InvolutionDatum]:
    """The involution datum on every level of ``S``."""
    duality = duality or Duality(S.q)
    return {m: duality.datum(S.level(m)) for m in range(S.N + 1)}


def duality_compatibility(S: WaldhausenS, duality: Duality | None = None) -> list:
    """Violations of ``sigma d_i = d_{m-i} sigma`` and ``sigma s_i = s_{m-i} sigma`` on objects and generators."""
    data = duality_on_S(S, duality)
    out = []
    for m in range(S.N + 1):
        G = S.level(m)
        s_m = data[m].sigma
        for kind, rng, lower in (("d", range(m + 1) if m else (), m - 1), ("s", range(m + 1) if m < S.N else (), m + 1)):
            for i in rng:
                F = S.face(m, i) if kind == "d" else S.degeneracy(m, i)
                Fr = S.face(m, m - i) if kind == "d" else S.degeneracy(m, m - i)
                s_l = data[lower].sigma
                for x in G.objects():
                    if s_l.obj(F.obj(x)) != Fr.obj(s_m.obj(x)):
                        out.append((kind, m, i, "object", x))
                        continue
                    for g in G.out_generators(x):
                        if s_l.mor(F.mor(g)) != Fr.mor(s_m.mor(g)):
                            out.append((kind, m, i, "morphism", g))
    return out


def first_half(n: int) -> MonotoneMap:
    return MonotoneMap(n, 2 * n + 1, tuple(range(n + 1)))


def second_half(n: int) -> MonotoneMap:
    return MonotoneMap(n, 2 * n + 1, tuple(range(n + 1, 2 * n + 2)))


def tw_to_product(S: TruncatedSimplicialGroupoid, N: int | None = None) -> SimplicialMorphism:
    """``tw(S) -> S x S^rev`` restricting to the two halves of ``[n] * [n]^op``."""
    T = twisted_arrow(S, N)
    left = SimplicialMorphism(T, S, lambda n: S.structure_map(first_half(n)), "first")
    R = reverse(S)
    right = SimplicialMorphism(T, R, lambda n: S.structure_map(second_half(n)), "second")
    return pair_morphisms([left, right], ProductSimplicial([S, R]))


class HermitianR(TruncatedSimplicialGroupoid):
    """``R_n`` = homotopy fixed points of the involution on ``tw(S)_n = S_{2n+1}``."""

    def __init__(self, S: WaldhausenS, N: int | None = None, duality: Duality | None = None):
        N = (S.N - 1) // 2 if N is None else N
        if 2 * N + 1 > S.N:
            raise InsufficientDepth(f"R up to level {N} needs S to level {2 * N + 1}, have {S.N}")
        super().__init__(IndexShape(SIMPLEX, N), f"R({S.name})")
        self.S = S
        self.T = twisted_arrow(S, N)
        self.duality = duality or Duality(S.q)
        if self.duality.twisted:
            raise ValueError("R needs a duality that commutes with the simplicial structure")

    def _build_level(self, n):
        G = self.T.level(n)
        return HomotopyFixedPoints(G, self.duality.datum(G), check=False)

    def _build_face(self, n, i):
        return induced_on_fixed_points(self.T.face(n, i), self.level(n), self.level(n - 1))

    def _build_degeneracy(self, n, i):
        return induced_on_fixed_points(self.T.degeneracy(n, i), self.level(n), self.level(n + 1))


def build_R(S: WaldhausenS, N: int | None = None) -> HermitianR:
    return HermitianR(S, N)


def project_R_to_S(R: HermitianR) -> SimplicialMorphism:
    """Forget the form and keep the first half of the flag."""
    S = R.S

    def comp(n):
        F = S.structure_map(first_half(n))
        return GroupoidFunctor(R.level(n), S.level(n), lambda a: F.obj(a[0]), lambda m: F.mor(m[0]), "first")

    return SimplicialMorphism(R, S, comp, "R->S")


def induced_map_R(RC: HermitianR, RD: HermitianR, F: SimplicialMorphism) -> SimplicialMorphism:
    """Fixed points of a duality-preserving ``S(C) -> S(D)``."""

    def comp(n):
        return induced_on_fixed_points(F.component(2 * n + 1), RC.level(n), RD.level(n))

    return SimplicialMorphism(RC, RD, comp, "R(F)")


def symmetric_form(a) -> tuple:
    """The form matrix of an ``R_0`` object ``((d, ()), (u, x))``."""
    return a[1][0]


# -- fixed points of S x S^rev ------------------------------------------------------------------


def swap_datum(P: ProductSimplicial, n: int, duality: Duality) -> InvolutionDatum:
    """``(x, y) -> (sigma y, sigma x)`` on level ``n`` of ``S x S^rev``."""
    G = P.level(n)

    def obj(z):
        return (duality.on_flag(z[1]), duality.on_flag(z[0]))

    def mor(m):
        g, h = m
        return (
            (duality.on_matrix(h[0], h[1][0]), duality.on_flag(h[1])),
            (duality.on_matrix(g[0], g[1][0]), duality.on_flag(g[1])),
        )

    return InvolutionDatum(GroupoidFunctor(G, G, obj, mor, "swap"), G.identity)


def fixed_point_comparison(S: WaldhausenS, n: int, duality: Duality | None = None) -> GroupoidFunctor:
    """``(S_n x S^rev_n)^{C_2} -> S_n``, projecting to the first factor."""
    duality = duality or Duality(S.q)
    P = ProductSimplicial([S, reverse(S)])
    H = HomotopyFixedPoints(P.level(n), swap_datum(P, n, duality))
    return GroupoidFunctor(H, S.level(n), lambda a: a[0][0], lambda m: m[0][0], "pr0")


def fixed_point_identification(S: WaldhausenS, levels: int, duality: Duality | None = None) -> dict:
    """Equivalence verdicts of the comparison at levels ``0..levels``."""
    return {n: is_equivalence(fixed_point_comparison(S, n, duality)) for n in range(levels + 1)}


def swap_is_simplicial(S: WaldhausenS, duality: Duality | None = None) -> list:
    """The swap involution commutes with all face and degeneracy maps of ``S x S^rev``."""
    duality = duality or Duality(S.q)
    P = ProductSimplicial([S, reverse(S)])
    out = []
    for n in range(P.N + 1):
        for kind, i, k2 in P.shape.generators_out(n):
            F = P.generator(kind, n, i)
            a, b = swap_datum(P, n, duality).sigma, swap_datum(P, k2, duality).sigma
            for z in P.level(n).objects():
                if b.obj(F.obj(z)) != F.obj(a.obj(z)):
                    out.append((kind, n, i, z))
                    continue
                for g in P.level(n).out_generators(z):
                    if b.mor(F.mor(g)) != F.mor(a.mor(g)):
                        out.append((kind, n, i, g))
    return out


def fixed_point_summary(G: FinGroupoid) -> list[tuple]:
    """``(object, |Aut|)`` for class representatives."""
    return [(r, G.aut_order(r)) for r in G.components().reps]

