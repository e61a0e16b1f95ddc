"""Finite groupoids, functors, iso-comma pullbacks and homotopy fixed points.

A groupoid is accessed through a handful of primitives (objects, hom-sets,
composition, identities, inverses) plus ``out_generators``: a list of arrows out
of an object that generate every arrow out of it under composition.  That is
enough to compute connected components by search, which is how cardinalities
and equivalence checks stay cheap on large non-skeletal groupoids.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Hashable, Iterable, Sequence

Obj = Hashable
Mor = Hashable


class GroupoidError(ValueError):
    pass


@dataclass
class Components:
    reps: list
    index: dict  # object -> component number
    members: list[list]


class FinGroupoid:
    """Abstract finite groupoid."""

    name: str = "groupoid"

    def objects(self) -> Sequence[Obj]:
        raise NotImplementedError

    def hom(self, a: Obj, b: Obj) -> list[Mor]:
        raise NotImplementedError

    def src(self, f: Mor) -> Obj:
        raise NotImplementedError

    def dst(self, f: Mor) -> Obj:
        raise NotImplementedError

    def compose(self, g: Mor, f: Mor) -> Mor:
        """``g . f``."""
        raise NotImplementedError

    def identity(self, a: Obj) -> Mor:
        raise NotImplementedError

    def inverse(self, f: Mor) -> Mor:
        raise NotImplementedError

    def out_generators(self, a: Obj) -> Iterable[Mor]:
        return [f for b in self.objects() for f in self.hom(a, b)]

    # -- derived ----------------------------------------------------------

    def components(self) -> Components:
        cached = self.__dict__.get("_components")
        if cached is not None:
            return cached
        index: dict = {}
        reps: list = []
        members: list[list] = []
        for x in self.objects():
            if x in index:
                continue
            c = len(reps)
            reps.append(x)
            index[x] = c
            comp = [x]
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for f in self.out_generators(y):
                    z = self.dst(f)
                    if z not in index:
                        index[z] = c
                        comp.append(z)
                        queue.append(z)
            members.append(comp)
        comps = Components(reps, index, members)
        self.__dict__["_components"] = comps
        return comps

    def automorphisms(self, a: Obj) -> list[Mor]:
        return self.hom(a, a)

    def aut_order(self, a: Obj) -> int:
        return len(self.automorphisms(a))

    def class_of(self, a: Obj) -> int:
        return self.components().index[a]

    def isomorphic(self, a: Obj, b: Obj) -> bool:
        idx = self.components().index
        return idx[a] == idx[b]

    def cardinality(self) -> Fraction:
        return cardinality(self)

    def contains(self, x) -> bool:
        objs = self.__dict__.get("_object_set")
        if objs is None:
            objs = self.__dict__["_object_set"] = frozenset(self.objects())
        return x in objs

    def __len__(self) -> int:
        return len(self.objects())


# -- concrete groupoids -----------------------------------------------------


class TableGroupoid(FinGroupoid):
    """Explicit groupoid: named morphisms with a composition table.

    ``compose_table[(g, f)] = h`` means ``g . f = h``.
    """

    def __init__(self, objects: Sequence[Obj], morphisms: dict[Mor, tuple[Obj, Obj]], compose_table: dict):
        self._objects = list(objects)
        self._mors = dict(morphisms)
        self._table = dict(compose_table)
        self._hom: dict = defaultdict(list)
        self._out: dict = defaultdict(list)
        for m, (s, d) in self._mors.items():
            self._hom[(s, d)].append(m)
            self._out[s].append(m)
        self._ids: dict = {}
        for a in self._objects:
            for e in self._hom[(a, a)]:
                if self._table.get((e, e)) == e:
                    self._ids[a] = e
                    break

    def objects(self):
        return self._objects

    def morphisms(self):
        return list(self._mors)

    def hom(self, a, b):
        return list(self._hom[(a, b)])

    def src(self, f):
        return self._mors[f][0]

    def dst(self, f):
        return self._mors[f][1]

    def compose(self, g, f):
        try:
            return self._table[(g, f)]
        except KeyError:
            raise GroupoidError(f"composite of {g!r} after {f!r} is not defined") from None

    def identity(self, a):
        try:
            return self._ids[a]
        except KeyError:
            raise GroupoidError(f"no identity at {a!r}") from None

    def inverse(self, f):
        s, d = self._mors[f]
        e = self.identity(s)
        for g in self._hom[(d, s)]:
            if self._table.get((g, f)) == e:
                return g
        raise GroupoidError(f"{f!r} has no inverse")

    def out_generators(self, a):
        return self._out[a]


class DiscreteGroupoid(FinGroupoid):
    """A set viewed as a groupoid; the identity at ``x`` is ``("id", x)``."""

    def __init__(self, objects: Iterable[Obj]):
        self._objects = list(dict.fromkeys(objects))
        self._set = set(self._objects)

    def objects(self):
        return self._objects

    def hom(self, a, b):
        return [("id", a)] if a == b else []

    def src(self, f):
        return f[1]

    dst = src

    def compose(self, g, f):
        if g != f:
            raise GroupoidError("only identities compose in a discrete groupoid")
        return f

    def identity(self, a):
        return ("id", a)

    def inverse(self, f):
        return f

    def out_generators(self, a):
        return []

    def components(self):
        cached = self.__dict__.get("_components")
        if cached is None:
            cached = Components(list(self._objects), {x: i for i, x in enumerate(self._objects)}, [[x] for x in self._objects])
            self.__dict__["_components"] = cached
        return cached

    def aut_order(self, a):
        return 1


def terminal() -> DiscreteGroupoid:
    return DiscreteGroupoid([()])


def delooping(elements: Sequence, mul: Callable, unit) -> TableGroupoid:
    """One-object groupoid of a finite group."""
    mors = {g: ("*", "*") for g in elements}
    table = {(g, h): mul(g, h) for g in elements for h in elements}
    return TableGroupoid(["*"], mors, table)


@dataclass(frozen=True)
class Group:
    """A finite group by elements, generators and multiplication."""

    elements: tuple
    generators: tuple
    mul: Callable[[Any, Any], Any]
    inv: Callable[[Any], Any]
    unit: Any


class ActionGroupoid(FinGroupoid):
    """Disjoint union over blocks of action groupoids ``G_b // X_b``.

    Arrows are pairs ``(g, x)`` going from ``x`` to ``act(g, x)``.
    """

    def __init__(self, blocks: dict[Hashable, tuple[Group, Sequence[Obj]]], act: Callable, block_of: Callable):
        self.blocks = blocks
        self._act = act
        self._block_of = block_of
        self._objects = [x for _, xs in blocks.values() for x in xs]
        self._transporter: dict = {}
        self._stab: dict = {}

    def objects(self):
        return self._objects

    def group_of(self, x) -> Group:
        return self.blocks[self._block_of(x)][0]

    def act(self, g, x):
        return self._act(g, x)

    def src(self, f):
        return f[1]

    def dst(self, f):
        return self._act(f[0], f[1])

    def compose(self, g, f):
        grp = self.group_of(f[1])
        return (grp.mul(g[0], f[0]), f[1])

    def identity(self, a):
        return (self.group_of(a).unit, a)

    def inverse(self, f):
        grp = self.group_of(f[1])
        return (grp.inv(f[0]), self.dst(f))

    def out_generators(self, a):
        return [(s, a) for s in self.group_of(a).generators]

    def components(self):
        cached = self.__dict__.get("_components")
        if cached is not None:
            return cached
        index: dict = {}
        reps: list = []
        members: list[list] = []
        for x in self._objects:
            if x in index:
                continue
            grp = self.group_of(x)
            c = len(reps)
            reps.append(x)
            index[x] = c
            self._transporter[x] = grp.unit
            comp = [x]
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for s in grp.generators:
                    z = self._act(s, y)
                    if z not in index:
                        index[z] = c
                        self._transporter[z] = grp.mul(s, self._transporter[y])
                        comp.append(z)
                        queue.append(z)
            members.append(comp)
        comps = Components(reps, index, members)
        self.__dict__["_components"] = comps
        return comps

    def _stabilizer(self, rep):
        if rep not in self._stab:
            grp = self.group_of(rep)
            self._stab[rep] = [g for g in grp.elements if self._act(g, rep) == rep]
        return self._stab[rep]

    def hom(self, a, b):
        comps = self.components()
        if comps.index.get(a) is None or comps.index[a] != comps.index.get(b):
            return []
        grp = self.group_of(a)
        rep = comps.reps[comps.index[a]]
        ta, tb = self._transporter[a], self._transporter[b]
        ta_inv = grp.inv(ta)
        return [(grp.mul(tb, grp.mul(s, ta_inv)), a) for s in self._stabilizer(rep)]

    def aut_order(self, a):
        comps = self.components()
        c = comps.index[a]
        return len(self.group_of(a).elements) // len(comps.members[c])


class ProductGroupoid(FinGroupoid):
    """Finite product; objects and arrows are tuples."""

    def __init__(self, factors: Sequence[FinGroupoid]):
        self.factors = list(factors)
        self._objects = list(product(*(F.objects() for F in self.factors)))

    def objects(self):
        return self._objects

    def hom(self, a, b):
        return [tuple(fs) for fs in product(*(F.hom(x, y) for F, x, y in zip(self.factors, a, b)))]

    def src(self, f):
        return tuple(F.src(x) for F, x in zip(self.factors, f))

    def dst(self, f):
        return tuple(F.dst(x) for F, x in zip(self.factors, f))

    def compose(self, g, f):
        return tuple(F.compose(x, y) for F, x, y in zip(self.factors, g, f))

    def identity(self, a):
        return tuple(F.identity(x) for F, x in zip(self.factors, a))

    def inverse(self, f):
        return tuple(F.inverse(x) for F, x in zip(self.factors, f))

    def out_generators(self, a):
        ids = self.identity(a)
        out = []
        for k, F in enumerate(self.factors):
            for g in F.out_generators(a[k]):
                out.append(ids[:k] + (g,) + ids[k + 1:])
        return out

    def components(self):
        cached = self.__dict__.get("_components")
        if cached is not None:
            return cached
        fc = [F.components() for F in self.factors]
        index = {a: _mixed_index(tuple(c.index[x] for c, x in zip(fc, a)), fc) for a in self._objects}
        groups: dict = defaultdict(list)
        for a in self._objects:
            groups[index[a]].append(a)
        order = sorted(groups)
        renum = {k: i for i, k in enumerate(order)}
        comps = Components([groups[k][0] for k in order], {a: renum[index[a]] for a in self._objects}, [groups[k] for k in order])
        self.__dict__["_components"] = comps
        return comps

    def aut_order(self, a):
        n = 1
        for F, x in zip(self.factors, a):
            n *= F.aut_order(x)
        return n


def _mixed_index(idx: tuple[int, ...], fc: list[Components]) -> int:
    out = 0
    for i, c in zip(idx, fc):
        out = out * len(c.reps) + i
    return out


def disjoint_union(parts: Sequence[FinGroupoid]) -> FinGroupoid:
    return _DisjointUnion(parts)


class _DisjointUnion(FinGroupoid):
    def __init__(self, parts):
        self.parts = list(parts)
        self._objects = [(k, x) for k, P in enumerate(self.parts) for x in P.objects()]

    def objects(self):
        return self._objects

    def hom(self, a, b):
        if a[0] != b[0]:
            return []
        return [(a[0], f) for f in self.parts[a[0]].hom(a[1], b[1])]

    def src(self, f):
        return (f[0], self.parts[f[0]].src(f[1]))

    def dst(self, f):
        return (f[0], self.parts[f[0]].dst(f[1]))

    def compose(self, g, f):
        return (f[0], self.parts[f[0]].compose(g[1], f[1]))

    def identity(self, a):
        return (a[0], self.parts[a[0]].identity(a[1]))

    def inverse(self, f):
        return (f[0], self.parts[f[0]].inverse(f[1]))

    def out_generators(self, a):
        return [(a[0], f) for f in self.parts[a[0]].out_generators(a[1])]


# -- functors -----------------------------------------------------------------


class GroupoidFunctor:
    """A functor given by object and arrow maps (memoized)."""

    def __init__(self, source: FinGroupoid, target: FinGroupoid, on_obj: Callable, on_mor: Callable, name: str = ""):
        self.source = source
        self.target = target
        self._on_obj = on_obj
        self._on_mor = on_mor
        self._ocache: dict = {}
        self._mcache: dict = {}
        self.name = name

    def obj(self, x):
        try:
            return self._ocache[x]
        except KeyError:
            y = self._ocache[x] = self._on_obj(x)
            return y

    def mor(self, f):
        try:
            return self._mcache[f]
        except KeyError:
            g = self._mcache[f] = self._on_mor(f)
            return g

    def __call__(self, x):
        return self.obj(x)

    def __repr__(self) -> str:
        return f"GroupoidFunctor({self.name or '?'})"


def identity_functor(G: FinGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(G, G, lambda x: x, lambda f: f, "id")


def compose_functors(G: GroupoidFunctor, F: GroupoidFunctor) -> GroupoidFunctor:
    """``G . F``."""
    if F.target is not G.target and F.target is not G.source:
        raise GroupoidError("functors do not compose")
    return GroupoidFunctor(F.source, G.target, lambda x: G.obj(F.obj(x)), lambda f: G.mor(F.mor(f)), f"{G.name}.{F.name}")


def check_functor(F: GroupoidFunctor) -> list:
    """Violations of functoriality, checked on identities and on generating arrows."""
    G, H = F.source, F.target
    bad: list = []
    for x in G.objects():
        y = F.obj(x)
        if not H.contains(y):
            bad.append(("object outside target", x))
            continue
        if F.mor(G.identity(x)) != H.identity(y):
            bad.append(("identity", x))
        for f in G.out_generators(x):
            g = F.mor(f)
            if H.src(g) != y or H.dst(g) != F.obj(G.dst(f)):
                bad.append(("endpoints", f))
                continue
            for f2 in G.out_generators(G.dst(f)):
                if F.mor(G.compose(f2, f)) != H.compose(F.mor(f2), g):
                    bad.append(("composition", (f2, f)))
    return bad


def functors_equal(F: GroupoidFunctor, G: GroupoidFunctor) -> tuple[bool, Any]:
    """Equality on objects and on generating arrows (hence on all arrows)."""
    for x in F.source.objects():
        if F.obj(x) != G.obj(x):
            return False, ("object", x)
        for f in F.source.out_generators(x):
            if F.mor(f) != G.mor(f):
                return False, ("arrow", f)
    return True, None


def constant_functor(G: FinGroupoid, target: FinGroupoid, y) -> GroupoidFunctor:
    e = target.identity(y)
    return GroupoidFunctor(G, target, lambda x: y, lambda f: e, "const")


def product_functor(fs: Sequence[GroupoidFunctor], source: FinGroupoid | None = None) -> GroupoidFunctor:
    """``x -> (F_1 x, ..., F_k x)`` into the product of the targets."""
    src = source or fs[0].source
    tgt = ProductGroupoid([F.target for F in fs])
    return GroupoidFunctor(src, tgt, lambda x: tuple(F.obj(x) for F in fs), lambda f: tuple(F.mor(f) for F in fs), "pair")


def product_of_functors(fs: Sequence[GroupoidFunctor], source: ProductGroupoid, target: ProductGroupoid) -> GroupoidFunctor:
    """Factorwise ``F_1 x ... x F_k``."""
    return GroupoidFunctor(
        source,
        target,
        lambda x: tuple(F.obj(y) for F, y in zip(fs, x)),
        lambda f: tuple(F.mor(g) for F, g in zip(fs, f)),
        "prod",
    )


# -- cardinality and equivalences ------------------------------------------------


def cardinality(G: FinGroupoid) -> Fraction:
    """Sum over isomorphism classes of ``1/|Aut|``."""
    return sum((Fraction(1, G.aut_order(r)) for r in G.components().reps), Fraction(0))


@dataclass
class EquivalenceResult:
    ok: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def _equivalence_into_pullback(F: GroupoidFunctor) -> bool:
    """Fully faithful, injective on classes and of equal cardinality; never lists the target's objects."""
    G, H = F.source, F.target
    seen: dict = defaultdict(list)
    for r in G.components().reps:
        y = F.obj(r)
        key = (H.A.class_of(y[0]), H.B.class_of(y[1]))
        if any(H.hom(y2, y) for y2 in seen[key]):
            return False
        seen[key].append(y)
        auts = G.automorphisms(r)
        if len(auts) != len(H.hom(y, y)) or len({F.mor(a) for a in auts}) != len(auts):
            return False
    return cardinality(G) == H.cardinality()


def is_equivalence(F: GroupoidFunctor) -> EquivalenceResult:
    """Essentially surjective and fully faithful, decided on class representatives.

    Into an unexpanded iso-comma pullback the cardinality test replaces the
    class enumeration; a negative answer reruns the full check for its witness.
    """
    G, H = F.source, F.target
    if isinstance(H, IsoCommaPullback) and H._objects is None and _equivalence_into_pullback(F):
        return EquivalenceResult(True)
    cg, ch = G.components(), H.components()
    hit: dict[int, Any] = {}
    for r in cg.reps:
        c = ch.index.get(F.obj(r))
        if c is None:
            return EquivalenceResult(False, {"kind": "image outside target", "object": r})
        if c in hit:
            return EquivalenceResult(
                False, {"kind": "not essentially injective", "objects": (hit[c], r), "image_class": ch.reps[c]}
            )
        hit[c] = r
    for c, r in enumerate(ch.reps):
        if c not in hit:
            return EquivalenceResult(False, {"kind": "not essentially surjective", "missed": r})
    for r in cg.reps:
        y = F.obj(r)
        n_src, n_tgt = G.aut_order(r), H.aut_order(y)
        if n_src != n_tgt:
            return EquivalenceResult(
                False, {"kind": "automorphism groups differ", "object": r, "orders": (n_src, n_tgt)}
            )
        auts = G.automorphisms(r)
        images = {F.mor(a) for a in auts}
        if len(images) != len(auts):
            return EquivalenceResult(False, {"kind": "not faithful", "object": r})
    return EquivalenceResult(True)


# -- pullbacks ------------------------------------------------------------------


class IsoCommaPullback(FinGroupoid):
    """Objects ``(a, b, gamma)`` with ``gamma : f a -> g b``; arrows ``(alpha, beta)``."""

    def __init__(self, f: GroupoidFunctor, g: GroupoidFunctor):
        if f.target is not g.target:
            raise GroupoidError("cospan legs have different targets")
        self.f, self.g = f, g
        self.A, self.B, self.C = f.source, g.source, f.target
        self._objects: list | None = None
        self._dst: dict = {}

    def objects(self):
        if self._objects is None:
            C, f, g = self.C, self.f, self.g
            cls_b: dict = defaultdict(list)
            for b in self.B.objects():
                cls_b[C.class_of(g.obj(b))].append(b)
            objs = []
            for a in self.A.objects():
                fa = f.obj(a)
                for b in cls_b.get(C.class_of(fa), ()):
                    for gamma in C.hom(fa, g.obj(b)):
                        objs.append((a, b, gamma))
            self._objects = objs
        return self._objects

    def _class_cardinalities(self, G: FinGroupoid, F: GroupoidFunctor) -> dict:
        out: dict = defaultdict(Fraction)
        for r in G.components().reps:
            out[self.C.class_of(F.obj(r))] += Fraction(1, G.aut_order(r))
        return out

    def cardinality(self) -> Fraction:
        """``sum over classes c of C of |Aut c| card(A_c) card(B_c)``, without listing objects."""
        ca = self._class_cardinalities(self.A, self.f)
        cb = self._class_cardinalities(self.B, self.g)
        C = self.C
        reps = C.components().reps
        return sum((C.aut_order(reps[c]) * ca[c] * cb[c] for c in ca if c in cb), Fraction(0))

    def src(self, m):
        return m[2]

    def dst(self, m):
        # memoized: nested pullbacks recompute targets through inverse() otherwise
        hit = self._dst.get(m)
        if hit is not None:
            return hit
        (alpha, beta, (a, b, gamma)) = m
        C = self.C
        new_gamma = C.compose(C.compose(self.g.mor(beta), gamma), C.inverse(self.f.mor(alpha)))
        out = (self.A.dst(alpha), self.B.dst(beta), new_gamma)
        self._dst[m] = out
        return out

    def hom(self, x, y):
        a, b, gamma = x
        a2, b2, gamma2 = y
        C = self.C
        out = []
        for alpha in self.A.hom(a, a2):
            lhs_base = C.compose(gamma2, self.f.mor(alpha))
            for beta in self.B.hom(b, b2):
                if C.compose(self.g.mor(beta), gamma) == lhs_base:
                    out.append((alpha, beta, x))
        return out

    def compose(self, m2, m1):
        return (self.A.compose(m2[0], m1[0]), self.B.compose(m2[1], m1[1]), m1[2])

    def identity(self, x):
        return (self.A.identity(x[0]), self.B.identity(x[1]), x)

    def inverse(self, m):
        return (self.A.inverse(m[0]), self.B.inverse(m[1]), self.dst(m))

    def out_generators(self, x):
        a, b, _ = x
        ida, idb = self.A.identity(a), self.B.identity(b)
        return [(alpha, idb, x) for alpha in self.A.out_generators(a)] + [
            (ida, beta, x) for beta in self.B.out_generators(b)
        ]

    def projection_a(self) -> GroupoidFunctor:
        return GroupoidFunctor(self, self.A, lambda x: x[0], lambda m: m[0], "pA")

    def projection_b(self) -> GroupoidFunctor:
        return GroupoidFunctor(self, self.B, lambda x: x[1], lambda m: m[1], "pB")


def iso_comma_pullback(f: GroupoidFunctor, g: GroupoidFunctor):
    """Homotopy pullback ``P`` of ``A -f-> C <-g- B`` with its projections and the comparison arrow."""
    P = IsoCommaPullback(f, g)
    gamma = lambda x: x[2]  # noqa: E731
    return P, P.projection_a(), P.projection_b(), gamma


def comparison_functor(
    X: FinGroupoid, p: GroupoidFunctor, q: GroupoidFunctor, P: IsoCommaPullback, gamma: Callable | None = None
) -> GroupoidFunctor:
    """``X -> A x_C B`` for a square commuting on the nose (or up to ``gamma``)."""
    C = P.C
    if gamma is None:
        gamma = lambda x: C.identity(P.f.obj(p.obj(x)))  # noqa: E731

    def on_obj(x):
        a, b = p.obj(x), q.obj(x)
        g = gamma(x)
        if C.src(g) != P.f.obj(a) or C.dst(g) != P.g.obj(b):
            raise GroupoidError("square does not commute at an object")
        return (a, b, g)

    return GroupoidFunctor(X, P, on_obj, lambda m: (p.mor(m), q.mor(m), on_obj(X.src(m))), "compare")


def is_homotopy_pullback(
    X: FinGroupoid, p: GroupoidFunctor, q: GroupoidFunctor, f: GroupoidFunctor, g: GroupoidFunctor
) -> EquivalenceResult:
    """Is the strictly commuting square ``X -> A, X -> B`` over ``A -> C <- B`` a homotopy pullback?"""
    P = IsoCommaPullback(f, g)
    return is_equivalence(comparison_functor(X, p, q, P))


# -- fixed points ----------------------------------------------------------------


@dataclass
class InvolutionDatum:
    """A functor ``sigma : G -> G`` with ``eta_x : x -> sigma(sigma(x))``."""

    sigma: GroupoidFunctor
    eta: Callable[[Obj], Mor]

    def violations(self) -> list:
        G = self.sigma.source
        out = []
        s = self.sigma
        for x in G.objects():
            e = self.eta(x)
            if G.src(e) != x or G.dst(e) != s.obj(s.obj(x)):
                out.append(("eta endpoints", x))
                continue
            if s.mor(e) != self.eta(s.obj(x)):
                out.append(("cocycle", x))
            for g in G.out_generators(x):
                y = G.dst(g)
                if G.compose(self.eta(y), g) != G.compose(s.mor(s.mor(g)), e):
                    out.append(("naturality", g))
        return out


class HomotopyFixedPoints(FinGroupoid):
    """Objects ``(x, u)`` with ``u : x -> sigma x`` and ``sigma(u) . u = eta_x``."""

    def __init__(self, G: FinGroupoid, datum: InvolutionDatum, check: bool = True):
        if check:
            bad = datum.violations()
            if bad:
                raise GroupoidError(f"involution datum violates its laws: {bad[:3]}")
        self.G, self.datum = G, datum
        s = datum.sigma
        objs = []
        for x in G.objects():
            e = datum.eta(x)
            for u in G.hom(x, s.obj(x)):
                if G.compose(s.mor(u), u) == e:
                    objs.append((x, u))
        self._objects = objs

    def objects(self):
        return self._objects

    def src(self, m):
        return m[1]

    def dst(self, m):
        g, (x, u) = m
        G, s = self.G, self.datum.sigma
        return (G.dst(g), G.compose(G.compose(s.mor(g), u), G.inverse(g)))

    def hom(self, a, b):
        G, s = self.G, self.datum.sigma
        (x, u), (y, v) = a, b
        return [(g, a) for g in G.hom(x, y) if G.compose(v, g) == G.compose(s.mor(g), u)]

    def compose(self, m2, m1):
        return (self.G.compose(m2[0], m1[0]), m1[1])

    def identity(self, a):
        return (self.G.identity(a[0]), a)

    def inverse(self, m):
        return (self.G.inverse(m[0]), self.dst(m))

    def out_generators(self, a):
        return [(g, a) for g in self.G.out_generators(a[0])]

    def forget(self) -> GroupoidFunctor:
        return GroupoidFunctor(self, self.G, lambda a: a[0], lambda m: m[0], "forget")


def homotopy_fixed_points(G: FinGroupoid, datum: InvolutionDatum, check: bool = True) -> HomotopyFixedPoints:
    return HomotopyFixedPoints(G, datum, check)


def induced_on_fixed_points(
    F: GroupoidFunctor, source: HomotopyFixedPoints, target: HomotopyFixedPoints
) -> GroupoidFunctor:
    """A functor commuting strictly with both involutions (and with ``eta``) acts on fixed points."""
    return GroupoidFunctor(source, target, lambda a: (F.obj(a[0]), F.mor(a[1])), lambda m: (F.mor(m[0]), (F.obj(m[1][0]), F.mor(m[1][1]))), "hfp")


# -- validation ----------------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate(G: FinGroupoid, exhaustive: bool = True) -> ValidationReport:
    """Check unit, associativity and inverse laws (on all arrows when ``exhaustive``)."""
    bad: list = []
    objs = list(G.objects())
    try:
        mors = [f for a in objs for b in objs for f in G.hom(a, b)] if exhaustive else [
            f for a in objs for f in G.out_generators(a)
        ]
    except GroupoidError as exc:
        return ValidationReport(False, [("hom", str(exc))])
    for f in mors:
        s, d = G.src(f), G.dst(f)
        try:
            if G.compose(f, G.identity(s)) != f or G.compose(G.identity(d), f) != f:
                bad.append(("unit", f))
            inv = G.inverse(f)
            if G.compose(inv, f) != G.identity(s) or G.compose(f, inv) != G.identity(d):
                bad.append(("inverse", f))
        except GroupoidError as exc:
            bad.append(("undefined", f, str(exc)))
    if exhaustive:
        by_src: dict = defaultdict(list)
        for f in mors:
            by_src[G.src(f)].append(f)
        for f in mors:
            for g in by_src[G.dst(f)]:
                for h in by_src[G.dst(g)]:
                    try:
                        if G.compose(h, G.compose(g, f)) != G.compose(G.compose(h, g), f):
                            bad.append(("associativity", (h, g, f)))
                    except GroupoidError as exc:
                        bad.append(("undefined", (h, g, f), str(exc)))
    return ValidationReport(not bad, bad)


def skeleton(G: FinGroupoid) -> FinGroupoid:
    """Full subgroupoid on one representative per class."""
    return FullSubgroupoid(G, G.components().reps)


class FullSubgroupoid(FinGroupoid):
    def __init__(self, G: FinGroupoid, objects: Sequence[Obj]):
        self.G = G
        self._objects = list(objects)
        self._set = set(self._objects)

    def objects(self):
        return self._objects

    def hom(self, a, b):
        return self.G.hom(a, b)

    def src(self, f):
        return self.G.src(f)

    def dst(self, f):
        return self.G.dst(f)

    def compose(self, g, f):
        return self.G.compose(g, f)

    def identity(self, a):
        return self.G.identity(a)

    def inverse(self, f):
        return self.G.inverse(f)

    def out_generators(self, a):
        return [f for b in self._objects for f in self.G.hom(a, b)]

    def inclusion(self) -> GroupoidFunctor:
        return GroupoidFunctor(self, self.G, lambda x: x, lambda f: f, "incl")
