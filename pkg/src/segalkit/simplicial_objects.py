"""Truncated simplicial and relative simplicial groupoids.

An object is indexed either by ``[n]`` (shape ``simplex``) or by a map
``f : [n] -> [1]`` (shapes ``over``, ``leq``, ``geq``), and only levels up to the
truncation ``N`` exist.  Levels and generating face/degeneracy functors are
built lazily and cached; every other structure map is the composite of
generators along a fixed normal form.  Simplicial identities are required to
hold on the nose and ``validate`` checks them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .delta_combinatorics import (
    CompositionError,
    MonotoneMap,
    OverOneMap,
    OverOneObject,
    compose_monotone,
    compose_over,
    degeneracy,
    edgewise,
    face,
    generator_steps,
    over_objects,
    pullback_object,
)
from .fin_groupoid import (
    DiscreteGroupoid,
    FinGroupoid,
    GroupoidFunctor,
    IsoCommaPullback,
    ProductGroupoid,
    check_functor,
    compose_functors,
    functors_equal,
    identity_functor,
    product_of_functors,
)

SIMPLEX = "simplex"
OVER = "over"
LEQ = "leq"
GEQ = "geq"
KINDS = (SIMPLEX, OVER, LEQ, GEQ)

Key = Hashable
IndexMap = "MonotoneMap | OverOneMap"


class InsufficientDepth(ValueError):
    """A construction needs more levels than the input provides."""


@dataclass(frozen=True)
class IndexShape:
    kind: str
    N: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown shape {self.kind!r}")
        if self.N < 0:
            raise ValueError("truncation must be nonnegative")

    @property
    def relative(self) -> bool:
        return self.kind != SIMPLEX

    def keys(self) -> list:
        if self.kind == SIMPLEX:
            return list(range(self.N + 1))
        return [f for n in range(self.N + 1) for f in over_objects(n, self.kind) if f in self]

    def __contains__(self, key) -> bool:
        if self.kind == SIMPLEX:
            return isinstance(key, int) and 0 <= key <= self.N
        if not isinstance(key, OverOneObject) or key.n > self.N:
            return False
        if self.kind == LEQ:
            # the point sent to 1 is left out so that the shape splits into two copies of the simplex category
            return key.in_leq and key != OverOneObject(0, 0)
        if self.kind == GEQ:
            return key.in_geq and key != OverOneObject(0, 1)
        return True

    def level(self, key) -> int:
        return key if self.kind == SIMPLEX else key.n

    def coface(self, key, i: int):
        """The index map ``d^i`` into ``key``."""
        n = self.level(key)
        d = face(n, i)
        return d if self.kind == SIMPLEX else OverOneMap.over(key, d)

    def codegeneracy(self, key, i: int):
        n = self.level(key)
        s = degeneracy(n, i)
        return s if self.kind == SIMPLEX else OverOneMap.over(key, s)

    def face_key(self, key, i: int):
        if self.kind == SIMPLEX:
            return key - 1
        return pullback_object(key, face(key.n, i))

    def degeneracy_key(self, key, i: int):
        if self.kind == SIMPLEX:
            return key + 1
        return pullback_object(key, degeneracy(key.n, i))

    def generators_out(self, key) -> list[tuple[str, int, Key]]:
        """Generating structure maps leaving level ``key`` that stay inside the shape."""
        out = []
        n = self.level(key)
        if n >= 1:
            for i in range(n + 1):
                k2 = self.face_key(key, i)
                if k2 in self:
                    out.append(("d", i, k2))
        if n < self.N:
            for i in range(n + 1):
                k2 = self.degeneracy_key(key, i)
                if k2 in self:
                    out.append(("s", i, k2))
        return out

    def index_map(self, kind: str, key, i: int):
        return self.coface(key, i) if kind == "d" else self.codegeneracy(key, i)

    def compose_index(self, first, second):
        """``second . first`` where ``first`` feeds into ``second``."""
        return compose_monotone(first, second) if self.kind == SIMPLEX else compose_over(first, second)

    def map_ends(self, f) -> tuple:
        """(source key, target key) of an index map; the structure map goes target -> source."""
        if self.kind == SIMPLEX:
            return f.src, f.dst
        return f.src, f.dst

    def inclusion(self, key, vertices: Sequence[int]):
        """Index map for the inclusion of a vertex subset of ``key``."""
        vs = tuple(vertices)
        n = self.level(key)
        m = MonotoneMap(len(vs) - 1, n, vs)
        return m if self.kind == SIMPLEX else OverOneMap.over(key, m)


class TruncatedSimplicialGroupoid:
    """Lazily built diagram of finite groupoids over a truncated index shape."""

    def __init__(self, shape: IndexShape, name: str = ""):
        self.shape = shape
        self.name = name or type(self).__name__
        self._levels: dict = {}
        self._gens: dict = {}
        self._maps: dict = {}

    # subclasses implement these three
    def _build_level(self, key) -> FinGroupoid:
        raise NotImplementedError

    def _build_face(self, key, i: int) -> GroupoidFunctor:
        raise NotImplementedError

    def _build_degeneracy(self, key, i: int) -> GroupoidFunctor:
        raise NotImplementedError

    @property
    def N(self) -> int:
        return self.shape.N

    def keys(self) -> list:
        return self.shape.keys()

    def _need(self, key) -> None:
        if key not in self.shape:
            raise InsufficientDepth(f"{self.name}: level {key!r} lies outside the {self.shape.kind} shape truncated at {self.N}")

    def level(self, key) -> FinGroupoid:
        try:
            return self._levels[key]
        except KeyError:
            self._need(key)
            G = self._levels[key] = self._build_level(key)
            return G

    def face(self, key, i: int) -> GroupoidFunctor:
        k = ("d", key, i)
        if k not in self._gens:
            self._need(key)
            self._need(self.shape.face_key(key, i))
            self._gens[k] = self._build_face(key, i)
        return self._gens[k]

    def degeneracy(self, key, i: int) -> GroupoidFunctor:
        k = ("s", key, i)
        if k not in self._gens:
            self._need(key)
            self._need(self.shape.degeneracy_key(key, i))
            self._gens[k] = self._build_degeneracy(key, i)
        return self._gens[k]

    def generator(self, kind: str, key, i: int) -> GroupoidFunctor:
        return self.face(key, i) if kind == "d" else self.degeneracy(key, i)

    def structure_map(self, f) -> GroupoidFunctor:
        """The functor ``X(f)`` from the level at the target of ``f`` to the level at its source."""
        if f in self._maps:
            return self._maps[f]
        src, dst = self.shape.map_ends(f)
        self._need(dst)
        self._need(src)
        under = f if self.shape.kind == SIMPLEX else f.underlying
        key = dst
        F = identity_functor(self.level(key))
        for kind, i, _ in generator_steps(under):
            G = self.generator(kind, key, i)
            F = G if F.name == "id" else compose_functors(G, F)
            key = self.shape.face_key(key, i) if kind == "d" else self.shape.degeneracy_key(key, i)
        if key != src:
            raise CompositionError("normal form ended at the wrong level")
        self._maps[f] = F
        return F

    def restriction(self, key, vertices: Sequence[int]) -> tuple[GroupoidFunctor, Key]:
        """Restriction to a vertex subset; returns the functor and the key of its target."""
        f = self.shape.inclusion(key, vertices)
        return self.structure_map(f), self.shape.map_ends(f)[0]

    def __repr__(self) -> str:
        return f"<{self.name} {self.shape.kind} N={self.N}>"


class FunctionalSimplicial(TruncatedSimplicialGroupoid):
    """Simplicial groupoid given by callables for levels and generators."""

    def __init__(
        self,
        shape: IndexShape,
        level: Callable[[Key], FinGroupoid],
        face: Callable[[Key, int], GroupoidFunctor],
        degeneracy: Callable[[Key, int], GroupoidFunctor],
        name: str = "",
    ):
        super().__init__(shape, name)
        self._lf, self._ff, self._df = level, face, degeneracy

    def _build_level(self, key):
        return self._lf(key)

    def _build_face(self, key, i):
        return self._ff(key, i)

    def _build_degeneracy(self, key, i):
        return self._df(key, i)


# -- discrete simplicial sets -------------------------------------------------------


def discrete_functor(G: DiscreteGroupoid, H: DiscreteGroupoid, fn: Callable) -> GroupoidFunctor:
    return GroupoidFunctor(G, H, fn, lambda m: ("id", fn(m[1])), "disc")


class DiscreteSimplicialSet(TruncatedSimplicialGroupoid):
    """A simplicial set: discrete levels with face and degeneracy functions on elements.

    ``faces[(key, i)]`` and ``degeneracies[(key, i)]`` are callables on
    elements; ``overrides`` replaces single values, which is how corrupted
    examples are made.
    """

    def __init__(
        self,
        shape: IndexShape,
        elements: Callable[[Key], Iterable],
        face_fn: Callable[[Key, int, object], object],
        degeneracy_fn: Callable[[Key, int, object], object],
        name: str = "",
        overrides: dict | None = None,
    ):
        super().__init__(shape, name)
        self._elements = elements
        self._face_fn = face_fn
        self._deg_fn = degeneracy_fn
        self.overrides = dict(overrides or {})

    def elements(self, key) -> list:
        return self.level(key).objects()

    def _build_level(self, key):
        return DiscreteGroupoid(self._elements(key))

    def face_value(self, key, i, x):
        return self.overrides.get(("d", key, i, x), self._face_fn(key, i, x))

    def degeneracy_value(self, key, i, x):
        return self.overrides.get(("s", key, i, x), self._deg_fn(key, i, x))

    def _build_face(self, key, i):
        tgt = self.level(self.shape.face_key(key, i))
        return discrete_functor(self.level(key), tgt, lambda x: self.face_value(key, i, x))

    def _build_degeneracy(self, key, i):
        tgt = self.level(self.shape.degeneracy_key(key, i))
        return discrete_functor(self.level(key), tgt, lambda x: self.degeneracy_value(key, i, x))

    def perturbed(self, overrides: dict, name: str = "") -> DiscreteSimplicialSet:
        o = dict(self.overrides)
        o.update(overrides)
        return DiscreteSimplicialSet(self.shape, self._elements, self._face_fn, self._deg_fn, name or self.name + "*", o)

    def subset(self, keep: Callable[[Key, object], bool], name: str = "") -> DiscreteSimplicialSet:
        """Levelwise subset (caller guarantees closure under the structure maps)."""
        return DiscreteSimplicialSet(
            self.shape,
            lambda key: [x for x in self._elements(key) if keep(key, x)],
            self._face_fn,
            self._deg_fn,
            name or self.name + "|sub",
            self.overrides,
        )


# -- finite categories and nerves ---------------------------------------------------


@dataclass
class FiniteCategory:
    """Objects, named arrows ``name -> (src, dst)``, identities and a composition table ``(g, f) -> g.f``."""

    objects: tuple
    arrows: dict
    identities: dict
    table: dict
    name: str = "C"

    def src(self, f):
        return self.arrows[f][0]

    def dst(self, f):
        return self.arrows[f][1]

    def compose(self, g, f):
        return self.table[(g, f)]

    def violations(self) -> list:
        bad = []
        for x in self.objects:
            e = self.identities.get(x)
            if e is None or self.arrows.get(e) != (x, x):
                bad.append(("identity", x))
        if bad:
            return bad
        by_src: dict = {}
        for f, (s, _) in self.arrows.items():
            by_src.setdefault(s, []).append(f)
        for f, (s, d) in self.arrows.items():
            if self.table.get((f, self.identities[s])) != f or self.table.get((self.identities[d], f)) != f:
                bad.append(("unit", f))
            for g in by_src.get(d, ()):
                h = self.table.get((g, f))
                if h is None or self.arrows.get(h) != (s, self.dst(g)):
                    bad.append(("composite", (g, f)))
                    continue
                for k in by_src.get(self.dst(g), ()):
                    if self.table.get((k, h)) != self.table.get((self.table.get((k, g)), f)):
                        bad.append(("associativity", (k, g, f)))
        return bad

    def chains(self, n: int) -> list[tuple]:
        """Composable strings ``(x0, f1, ..., fn)``."""
        out = [(x,) for x in self.objects]
        by_src: dict = {}
        for f, (s, _) in self.arrows.items():
            by_src.setdefault(s, []).append(f)
        for _ in range(n):
            nxt = []
            for c in out:
                end = c[0] if len(c) == 1 else self.dst(c[-1])
                for f in by_src.get(end, ()):
                    nxt.append(c + (f,))
            out = nxt
        return out

    def vertex(self, chain: tuple, i: int):
        return chain[0] if i == 0 else self.dst(chain[i])


def nerve(C: FiniteCategory, N: int = 4) -> DiscreteSimplicialSet:
    """The nerve, truncated at ``N``; an ``n``-simplex is ``(x0, f1, ..., fn)``."""

    def face_fn(n, i, c):
        fs = c[1:]
        if i == 0:
            return (C.dst(fs[0]),) + fs[1:]
        if i == n:
            return (c[0],) + fs[:-1]
        return (c[0],) + fs[: i - 1] + (C.compose(fs[i], fs[i - 1]),) + fs[i + 1:]

    def deg_fn(n, i, c):
        fs = c[1:]
        return (c[0],) + fs[:i] + (C.identities[C.vertex(c, i)],) + fs[i:]

    return DiscreteSimplicialSet(IndexShape(SIMPLEX, N), lambda n: C.chains(n), face_fn, deg_fn, f"N({C.name})")


def is_degenerate_chain(C: FiniteCategory, c: tuple) -> bool:
    ids = set(C.identities.values())
    return any(f in ids for f in c[1:])


def chain_core(C: FiniteCategory, c: tuple) -> tuple:
    """The nondegenerate simplex a chain is a degeneracy of (drop identities)."""
    ids = set(C.identities.values())
    return (c[0],) + tuple(f for f in c[1:] if f not in ids)


def sphere(k: int, N: int = 4) -> DiscreteSimplicialSet:
    """``Delta^k`` with its boundary collapsed: a base point plus the surjections ``[n] ->> [k]``."""

    def elements(n):
        from .delta_combinatorics import monotone_maps

        return ["*"] + [f.values for f in monotone_maps(n, k) if f.is_surjective]

    def face_fn(n, i, x):
        if x == "*":
            return x
        v = x[:i] + x[i + 1:]
        return v if set(v) == set(range(k + 1)) else "*"

    def deg_fn(n, i, x):
        return x if x == "*" else x[: i + 1] + x[i:]

    return DiscreteSimplicialSet(IndexShape(SIMPLEX, N), elements, face_fn, deg_fn, f"S^{k}")


# -- morphisms ----------------------------------------------------------------------------


class SimplicialMorphism:
    """Levelwise functors ``source -> target`` over a shared index shape kind."""

    def __init__(self, source: TruncatedSimplicialGroupoid, target: TruncatedSimplicialGroupoid, component: Callable, name: str = ""):
        if source.shape.kind != target.shape.kind:
            raise ValueError("morphism between different shapes")
        self.source, self.target = source, target
        self._component = component
        self._cache: dict = {}
        self.name = name or "p"

    @property
    def N(self) -> int:
        return min(self.source.N, self.target.N)

    def keys(self) -> list:
        return IndexShape(self.source.shape.kind, self.N).keys()

    def component(self, key) -> GroupoidFunctor:
        if key not in self._cache:
            self._cache[key] = self._component(key)
        return self._cache[key]

    def __repr__(self) -> str:
        return f"<{self.name}: {self.source.name} -> {self.target.name}>"


def identity_morphism(X: TruncatedSimplicialGroupoid) -> SimplicialMorphism:
    return SimplicialMorphism(X, X, lambda k: identity_functor(X.level(k)), "id")


def compose_morphisms(q: SimplicialMorphism, p: SimplicialMorphism) -> SimplicialMorphism:
    """``q . p``."""
    return SimplicialMorphism(p.source, q.target, lambda k: compose_functors(q.component(k), p.component(k)), f"{q.name}.{p.name}")


def validate_morphism(p: SimplicialMorphism) -> list:
    """Keys and generators where ``p`` fails to commute strictly with the structure maps."""
    bad = []
    X, Y = p.source, p.target
    shape = IndexShape(X.shape.kind, p.N)
    for key in shape.keys():
        F = p.component(key)
        if F.source is not X.level(key) or F.target is not Y.level(key):
            bad.append(("component endpoints", key))
            continue
        for kind, i, k2 in shape.generators_out(key):
            lhs = compose_functors(p.component(k2), X.generator(kind, key, i))
            rhs = compose_functors(Y.generator(kind, key, i), F)
            ok, wit = functors_equal(lhs, rhs)
            if not ok:
                bad.append(("naturality", key, kind, i, wit))
    return bad


# -- products -------------------------------------------------------------------------------


class ProductSimplicial(TruncatedSimplicialGroupoid):
    def __init__(self, factors: Sequence[TruncatedSimplicialGroupoid], name: str = ""):
        kinds = {F.shape.kind for F in factors}
        if len(kinds) != 1:
            raise ValueError("factors have different shapes")
        super().__init__(IndexShape(kinds.pop(), min(F.N for F in factors)), name or "x".join(F.name for F in factors))
        self.factors = list(factors)

    def _build_level(self, key):
        return ProductGroupoid([F.level(key) for F in self.factors])

    def _build_face(self, key, i):
        return product_of_functors(
            [F.face(key, i) for F in self.factors], self.level(key), self.level(self.shape.face_key(key, i))
        )

    def _build_degeneracy(self, key, i):
        return product_of_functors(
            [F.degeneracy(key, i) for F in self.factors], self.level(key), self.level(self.shape.degeneracy_key(key, i))
        )


def pair_morphisms(ps: Sequence[SimplicialMorphism], target: ProductSimplicial | None = None) -> SimplicialMorphism:
    """``x -> (p_1 x, ..., p_k x)``."""
    tgt = target or ProductSimplicial([p.target for p in ps])

    def comp(k):
        fs = [p.component(k) for p in ps]
        return GroupoidFunctor(
            ps[0].source.level(k), tgt.level(k), lambda x: tuple(F.obj(x) for F in fs), lambda m: tuple(F.mor(m) for F in fs), "pair"
        )

    return SimplicialMorphism(ps[0].source, tgt, comp, "pair")


def projection_morphism(P: ProductSimplicial, idx: int) -> SimplicialMorphism:
    def comp(k):
        return GroupoidFunctor(P.level(k), P.factors[idx].level(k), lambda x: x[idx], lambda m: m[idx], f"pr{idx}")

    return SimplicialMorphism(P, P.factors[idx], comp, f"pr{idx}")


class PullbackSimplicial(TruncatedSimplicialGroupoid):
    """Levelwise iso-comma pullback ``A x_C B`` of ``f : A -> C`` and ``g : B -> C``.

    Objects are ``(a, b, gamma : f a -> g b)``; structure maps act on each entry,
    which is strict because ``f`` and ``g`` commute strictly with the structure maps.
    """

    def __init__(self, f: SimplicialMorphism, g: SimplicialMorphism, N: int | None = None, name: str = ""):
        if f.target is not g.target:
            raise ValueError("the morphisms must share their target")
        if f.source.shape.kind != g.source.shape.kind:
            raise ValueError("the morphisms have different shapes")
        top = min(f.N, g.N)
        N = top if N is None else N
        if N > top:
            raise InsufficientDepth(f"pullback up to {N} needs both morphisms to level {N}, have {top}")
        super().__init__(IndexShape(f.source.shape.kind, N), name or f"{f.source.name}x{g.source.name}")
        self.f, self.g = f, g

    def _build_level(self, key):
        return IsoCommaPullback(self.f.component(key), self.g.component(key))

    def _induced(self, key, key2, fa, fb, fc):
        def obj(x):
            a, b, gamma = x
            return (fa.obj(a), fb.obj(b), fc.mor(gamma))

        return GroupoidFunctor(self.level(key), self.level(key2), obj, lambda m: (fa.mor(m[0]), fb.mor(m[1]), obj(m[2])), "pb")

    def _build_face(self, key, i):
        A, B, C = self.f.source, self.g.source, self.f.target
        return self._induced(key, self.shape.face_key(key, i), A.face(key, i), B.face(key, i), C.face(key, i))

    def _build_degeneracy(self, key, i):
        A, B, C = self.f.source, self.g.source, self.f.target
        return self._induced(key, self.shape.degeneracy_key(key, i), A.degeneracy(key, i), B.degeneracy(key, i), C.degeneracy(key, i))

    def first(self) -> SimplicialMorphism:
        return SimplicialMorphism(self, self.f.source, lambda k: self.level(k).projection_a(), "pr1")

    def second(self) -> SimplicialMorphism:
        return SimplicialMorphism(self, self.g.source, lambda k: self.level(k).projection_b(), "pr2")


# -- reindexing -------------------------------------------------------------------------------


class Reindexed(TruncatedSimplicialGroupoid):
    """``X . r`` for a functor ``r`` between index shapes given on keys and generating maps."""

    def __init__(self, base: TruncatedSimplicialGroupoid, shape: IndexShape, on_key: Callable, on_map: Callable, name: str):
        super().__init__(shape, name)
        self.base = base
        self.on_key = on_key
        self.on_map = on_map
        missing = [k for k in shape.keys() if on_key(k) not in base.shape]
        if missing:
            raise InsufficientDepth(
                f"{name} up to {shape.N} needs level {on_key(missing[-1])!r} of {base.name}, which is truncated at {base.N}"
            )

    def _build_level(self, key):
        return self.base.level(self.on_key(key))

    def _build_face(self, key, i):
        return self.base.structure_map(self.on_map(self.shape.coface(key, i)))

    def _build_degeneracy(self, key, i):
        return self.base.structure_map(self.on_map(self.shape.codegeneracy(key, i)))


def twisted_arrow(X: TruncatedSimplicialGroupoid, N: int | None = None) -> Reindexed:
    """``tw(X)_n = X_{2n+1}`` via edgewise subdivision."""
    if X.shape.kind != SIMPLEX:
        raise ValueError("twisted arrows are defined for simplicial objects")
    N = (X.N - 1) // 2 if N is None else N
    if N < 0 or 2 * N + 1 > X.N:
        raise InsufficientDepth(f"tw up to level {N} needs level {2 * N + 1} of {X.name}, which is truncated at {X.N}")
    return Reindexed(X, IndexShape(SIMPLEX, N), lambda n: 2 * n + 1, edgewise, f"tw({X.name})")


def join_initial(f: MonotoneMap) -> MonotoneMap:
    """``id_[0] * f``."""
    return MonotoneMap(f.src + 1, f.dst + 1, (0,) + tuple(v + 1 for v in f.values))


def join_final(f: MonotoneMap) -> MonotoneMap:
    """``f * id_[0]``."""
    return MonotoneMap(f.src + 1, f.dst + 1, f.values + (f.dst + 1,))


def path_initial(X: TruncatedSimplicialGroupoid, N: int | None = None) -> Reindexed:
    """Initial path space: level ``n`` is ``X_{n+1}``, faces ``d_{i+1}``, the face ``d_0`` forgotten."""
    N = X.N - 1 if N is None else N
    return Reindexed(X, IndexShape(SIMPLEX, N), lambda n: n + 1, join_initial, f"P<({X.name})")


def path_final(X: TruncatedSimplicialGroupoid, N: int | None = None) -> Reindexed:
    """Final path space: level ``n`` is ``X_{n+1}``, the last face forgotten."""
    N = X.N - 1 if N is None else N
    return Reindexed(X, IndexShape(SIMPLEX, N), lambda n: n + 1, join_final, f"P>({X.name})")


def path_initial_projection(X: TruncatedSimplicialGroupoid, P: Reindexed) -> SimplicialMorphism:
    """``P<(X) -> X`` given by ``d_0``."""
    return SimplicialMorphism(P, X, lambda n: X.face(n + 1, 0), "d0")


def path_final_projection(X: TruncatedSimplicialGroupoid, P: Reindexed) -> SimplicialMorphism:
    """``P>(X) -> X`` given by the last face."""
    return SimplicialMorphism(P, X, lambda n: X.face(n + 1, n + 1), "dlast")


def reverse_map(f):
    if isinstance(f, OverOneMap):
        u = reverse_map(f.underlying)
        return OverOneMap(reverse_key(f.src), reverse_key(f.dst), u)
    n, m = f.src, f.dst
    return MonotoneMap(n, m, tuple(m - f.values[n - k] for k in range(n + 1)))


def reverse_key(key):
    if isinstance(key, OverOneObject):
        return OverOneObject(key.n, key.n + 1 - key.t)
    return key


_REVERSED_KIND = {SIMPLEX: SIMPLEX, OVER: OVER, LEQ: GEQ, GEQ: LEQ}


def reverse(X: TruncatedSimplicialGroupoid) -> Reindexed:
    """``X^rev``: precompose with the order reversal of every ``[n]`` (and of ``[1]``)."""
    shape = IndexShape(_REVERSED_KIND[X.shape.kind], X.N)
    return Reindexed(X, shape, reverse_key, reverse_map, f"rev({X.name})")


def forget_to_simplex(X: TruncatedSimplicialGroupoid, kind: str = OVER, N: int | None = None) -> Reindexed:
    """Regular (bi)module: ``M_f = X_n`` for ``f : [n] -> [1]``."""
    if X.shape.kind != SIMPLEX:
        raise ValueError("need a simplicial object")
    N = X.N if N is None else N
    return Reindexed(X, IndexShape(kind, N), lambda f: f.n, lambda g: g.underlying, f"{kind}({X.name})")


def restrict_shape(M: TruncatedSimplicialGroupoid, kind: str) -> Reindexed:
    """View a birelative object as a left or right relative one."""
    if M.shape.kind != OVER:
        raise ValueError("need a birelative object")
    return Reindexed(M, IndexShape(kind, M.N), lambda f: f, lambda g: g, f"{M.name}|{kind}")


# -- left relative objects versus relative morphisms -------------------------------------------


def _i1_key(n: int) -> OverOneObject:
    return OverOneObject(n + 1, n + 1)


def _i0_key(n: int) -> OverOneObject:
    return OverOneObject(n, n + 1)


def theta_L_convert(M: TruncatedSimplicialGroupoid) -> SimplicialMorphism:
    """A left relative object as the morphism ``M_{0..01} -> M_{0..0}`` given by the last face."""
    if M.shape.kind != LEQ:
        raise ValueError("theta_L needs a left relative object")
    N = M.N
    X = Reindexed(
        M,
        IndexShape(SIMPLEX, N - 1),
        _i1_key,
        lambda f: OverOneMap(_i1_key(f.src), _i1_key(f.dst), join_final(f)),
        f"{M.name}[..1]",
    )
    Y = Reindexed(
        M,
        IndexShape(SIMPLEX, N),
        _i0_key,
        lambda f: OverOneMap(_i0_key(f.src), _i0_key(f.dst), f),
        f"{M.name}[..0]",
    )
    return SimplicialMorphism(X, Y, lambda n: M.face(_i1_key(n), n + 1), "theta_L")


class LeftRelativeFromMorphism(TruncatedSimplicialGroupoid):
    """Inverse of :func:`theta_L_convert`: glue ``p : X -> Y`` into a left relative object."""

    def __init__(self, p: SimplicialMorphism):
        X, Y = p.source, p.target
        if X.shape.kind != SIMPLEX or Y.shape.kind != SIMPLEX:
            raise ValueError("need a morphism of simplicial objects")
        N = min(Y.N, X.N + 1)
        super().__init__(IndexShape(LEQ, N), f"glue({p.name})")
        self.p = p

    def _split(self, key):
        if key.t == key.n + 1:
            return 0, key.n
        return 1, key.n - 1

    def _build_level(self, key):
        side, n = self._split(key)
        return self.p.target.level(n) if side == 0 else self.p.source.level(n)

    def _build_face(self, key, i):
        side, n = self._split(key)
        if side == 0:
            return self.p.target.face(n, i)
        if i == key.n:
            return self.p.component(n)
        return self.p.source.face(n, i)

    def _build_degeneracy(self, key, i):
        side, n = self._split(key)
        if side == 0:
            return self.p.target.degeneracy(n, i)
        return self.p.source.degeneracy(n, i)


def theta_L_inverse(p: SimplicialMorphism) -> LeftRelativeFromMorphism:
    return LeftRelativeFromMorphism(p)


# -- validation -------------------------------------------------------------------------------------


@dataclass
class SimplicialReport:
    ok: bool
    violations: list = field(default_factory=list)
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def validate(X: TruncatedSimplicialGroupoid, functors: bool = True) -> SimplicialReport:
    """Check every generator is a functor and every composite of two generators equals its normal form.

    Composites of two generators cover all simplicial identities, so passing
    this means every structure map is independent of how it is factored.
    """
    bad: list = []
    checked = 0
    shape = X.shape
    for key in shape.keys():
        for kind, i, k2 in shape.generators_out(key):
            g1 = X.generator(kind, key, i)
            if functors:
                v = check_functor(g1)
                if v:
                    bad.append(("not a functor", kind, i, key, v[:3]))
                    continue
            f1 = shape.index_map(kind, key, i)
            for kind2, i2, _ in shape.generators_out(k2):
                f2 = shape.index_map(kind2, k2, i2)
                composite = shape.compose_index(f2, f1)
                lhs = compose_functors(X.generator(kind2, k2, i2), g1)
                ok, wit = functors_equal(lhs, X.structure_map(composite))
                checked += 1
                if not ok:
                    bad.append(("identity", (kind, i, key), (kind2, i2, k2), wit))
    return SimplicialReport(not bad, bad, checked)


def levels_equal(A: TruncatedSimplicialGroupoid, B: TruncatedSimplicialGroupoid) -> tuple[bool, object]:
    """Same keys, same level objects and equal generators."""
    if A.shape != B.shape:
        return False, ("shape", A.shape, B.shape)
    for key in A.keys():
        if list(A.level(key).objects()) != list(B.level(key).objects()):
            return False, ("level", key)
        for kind, i, _ in A.shape.generators_out(key):
            ok, wit = functors_equal(A.generator(kind, key, i), B.generator(kind, key, i))
            if not ok:
                return False, ("generator", kind, i, key, wit)
    return True, None
