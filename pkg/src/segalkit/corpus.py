"""Deterministic test corpus: nerves of small categories, corrupted nerves, subsets, and S-constructions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .simplicial_objects import (
    SIMPLEX,
    IndexShape,
    DiscreteSimplicialSet,
    FiniteCategory,
    ProductSimplicial,
    TruncatedSimplicialGroupoid,
    chain_core,
    is_degenerate_chain,
    nerve,
    path_final,
    path_initial,
    sphere,
    validate,
)

# -- small categories --------------------------------------------------------------------


def poset_category(n: int, relations, name: str = "") -> FiniteCategory:
    """The poset on ``0..n-1`` generated by ``a <= b`` for ``(a, b)`` in ``relations``."""
    le = {(a, a) for a in range(n)} | set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(le), list(le)):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    if any((b, a) in le for a, b in le if a != b):
        raise ValueError("relations contain a cycle")
    arrows = {(a, b): (a, b) for a, b in le}
    table = {((b, c), (a, b)): (a, c) for (a, b) in le for (b2, c) in le if b2 == b}
    return FiniteCategory(tuple(range(n)), arrows, {a: (a, a) for a in range(n)}, table, name or f"P{n}")


def path_category(n: int, edges, name: str = "") -> FiniteCategory:
    """Free category on a graph with edges ``(label, a, b)``, ``a < b``; arrows are paths."""
    out: dict = {}
    for lab, a, b in edges:
        if not a < b:
            raise ValueError("edges must increase so that paths are finite")
        out.setdefault(a, []).append((lab, b))
    arrows: dict = {}
    for x in range(n):
        stack = [(x, ())]
        while stack:
            y, path = stack.pop()
            arrows[(x, path)] = (x, y)
            for lab, z in out.get(y, ()):
                stack.append((z, path + (lab,)))
    table = {}
    for f, (a, b) in arrows.items():
        for g, (c, d) in arrows.items():
            if c == b:
                table[(g, f)] = (a, f[1] + g[1])
    return FiniteCategory(tuple(range(n)), arrows, {x: (x, ()) for x in range(n)}, table, name or f"Path{n}")


def monoid_category(elements, mul: Callable, unit, name: str = "M") -> FiniteCategory:
    els = tuple(elements)
    arrows = {e: ("*", "*") for e in els}
    table = {(g, f): mul(g, f) for g in els for f in els}
    return FiniteCategory(("*",), arrows, {"*": unit}, table, name)


def cyclic_group(k: int) -> FiniteCategory:
    return monoid_category(range(k), lambda g, f: (g + f) % k, 0, f"Z{k}")


def transformation_monoid(k: int, generators, limit: int = 8) -> FiniteCategory | None:
    """Maps of ``{0..k-1}`` generated under composition; ``None`` when larger than ``limit``."""
    unit = tuple(range(k))
    els = {unit}
    frontier = [unit]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = tuple(g[f[i]] for i in range(k))
                if h not in els:
                    els.add(h)
                    nxt.append(h)
        if len(els) > limit:
            return None
        frontier = nxt
    return monoid_category(sorted(els), lambda g, f: tuple(g[f[i]] for i in range(k)), unit, f"T{k}:{len(els)}")


def product_category(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    objs = tuple(product(C.objects, D.objects))
    arrows = {(f, g): ((C.src(f), D.src(g)), (C.dst(f), D.dst(g))) for f in C.arrows for g in D.arrows}
    ids = {(x, y): (C.identities[x], D.identities[y]) for x, y in objs}
    table = {}
    for (f, g), (s, d) in arrows.items():
        for (f2, g2), (s2, _) in arrows.items():
            if s2 == d:
                table[((f2, g2), (f, g))] = (C.compose(f2, f), D.compose(g2, g))
    return FiniteCategory(objs, arrows, ids, table, f"{C.name}x{D.name}")


def random_category(rng: random.Random) -> FiniteCategory:
    kind = rng.choice(["poset", "poset", "path", "monoid", "group"])
    if kind == "poset":
        n = rng.randint(2, 4)
        rel = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5]
        return poset_category(n, rel, f"P{n}{rel}")
    if kind == "path":
        n = rng.randint(2, 4)
        edges = []
        for a in range(n):
            for b in range(a + 1, n):
                for lab in range(rng.choice([0, 0, 1, 2])):
                    edges.append((f"{a}{b}{'abc'[lab]}", a, b))
        return path_category(n, edges, f"Path{n}:{len(edges)}")
    if kind == "group":
        return cyclic_group(rng.randint(1, 4))
    while True:
        k = rng.randint(2, 3)
        gens = [tuple(rng.randrange(k) for _ in range(k)) for _ in range(rng.randint(1, 2))]
        M = transformation_monoid(k, gens, 6)
        if M is not None:
            return M


# -- derived simplicial sets -----------------------------------------------------------------


def perturb_top_face(X: DiscreteSimplicialSet, rng: random.Random, tries: int = 200) -> DiscreteSimplicialSet | None:
    """Change one top-level face value, keeping its boundary; ``None`` if every attempt breaks an identity.

    Below the top level degeneracies pin every face value, so only the top level is tried.
    """
    N = X.N
    for _ in range(tries):
        els = X.elements(N)
        if not els:
            return None
        x = rng.choice(els)
        i = rng.randint(0, N)
        old = X.face_value(N, i, x)
        boundary = [X.face_value(N - 1, j, old) for j in range(N)]
        cands = [y for y in X.elements(N - 1) if y != old and [X.face_value(N - 1, j, y) for j in range(N)] == boundary]
        if not cands:
            continue
        Y = X.perturbed({("d", N, i, x): rng.choice(cands)})
        if validate(Y, functors=False).ok:
            return Y
    return None


def _interval_values(compose: Callable, fs: tuple) -> set:
    """Every bracketing of the composite of ``fs`` (applied right to left)."""
    if len(fs) == 1:
        return {fs[0]}
    out = set()
    for k in range(1, len(fs)):
        for lo in _interval_values(compose, fs[:k]):
            for hi in _interval_values(compose, fs[k:]):
                out.add(compose(hi, lo))
    return out


def altered_nerve(C: FiniteCategory, changes: dict, N: int = 4, name: str = "") -> DiscreteSimplicialSet:
    """The nerve with ``d_1`` on 2-simplices replaced by ``changes[(g, f)]``, extended 2-coskeletally.

    An ``n``-simplex is a chain on which every interval has a single composite
    under all bracketings; for an unaltered table this is exactly the nerve.
    """
    ids = set(C.identities.values())
    if any(g in ids or f in ids for g, f in changes):
        raise ValueError("only pairs of non-identity arrows may be altered")

    def comp(g, f):
        return changes.get((g, f), C.compose(g, f))

    def coherent(c):
        fs = c[1:]
        return all(len(_interval_values(comp, fs[i:j])) == 1 for i in range(len(fs)) for j in range(i + 2, len(fs) + 1))

    def face_fn(n, i, c):
        fs = c[1:]
        if i == 0:
            return (C.dst(fs[0]),) + fs[1:]
        if i == n:
            return (c[0],) + fs[:-1]
        return (c[0],) + fs[: i - 1] + (comp(fs[i], fs[i - 1]),) + fs[i + 1:]

    def deg_fn(n, i, c):
        fs = c[1:]
        return (c[0],) + fs[:i] + (C.identities[C.vertex(c, i)],) + fs[i:]

    return DiscreteSimplicialSet(
        IndexShape(SIMPLEX, N), lambda n: [c for c in C.chains(n) if coherent(c)], face_fn, deg_fn, name or f"N({C.name})~{len(changes)}"
    )


def perturb_composition(C: FiniteCategory, rng: random.Random, N: int = 4, tries: int = 50) -> DiscreteSimplicialSet | None:
    """Rejection-sample one altered value of ``d_1 : X_2 -> X_1`` and keep it if the result validates."""
    ids = set(C.identities.values())
    pairs = [(g, f) for f in C.arrows for g in C.arrows if f not in ids and g not in ids and C.src(g) == C.dst(f)]
    for _ in range(tries):
        if not pairs:
            return None
        g, f = rng.choice(pairs)
        old = C.compose(g, f)
        cands = [h for h, ends in C.arrows.items() if h != old and ends == (C.src(f), C.dst(g))]
        if not cands:
            continue
        X = altered_nerve(C, {(g, f): rng.choice(cands)}, N)
        if validate(X, functors=False).ok:
            return X
    return None


def random_subcomplex(C: FiniteCategory, N: int, rng: random.Random, keep: float = 0.5) -> DiscreteSimplicialSet:
    """Simplices of the nerve whose nondegenerate core lies in a random face-closed set."""
    X = nerve(C, N)
    gens = [c for n in range(N + 1) for c in X.elements(n) if not is_degenerate_chain(C, c) and rng.random() < keep]
    K: set = set()
    stack = list(gens)
    while stack:
        c = stack.pop()
        if c in K:
            continue
        K.add(c)
        n = len(c) - 1
        for i in range(n + 1 if n else 0):
            stack.append(chain_core(C, X.face_value(n, i, c)))
    return X.subset(lambda key, c: chain_core(C, c) in K, f"{X.name}|K{len(K)}")


@dataclass
class CorpusItem:
    name: str
    obj: TruncatedSimplicialGroupoid
    origin: str


def corpus_item(seed: int, index: int, N: int = 4) -> CorpusItem:
    """Item ``index`` of the corpus for ``seed``; each item has its own generator so items build independently."""
    if index < 3:
        k = index + 1
        return CorpusItem(f"sphere{k}", sphere(k, N), "sphere")
    rng = random.Random(f"{seed}:{index}")
    while True:
        C = random_category(rng)
        roll = rng.random()
        if roll < 0.2:
            X = nerve(C, N)
            return CorpusItem(X.name, X, "nerve")
        if roll < 0.5:
            Y = perturb_composition(C, rng, N)
            if Y is not None:
                return CorpusItem(Y.name, Y, "perturbed")
        elif roll < 0.75:
            Y = random_subcomplex(C, N, rng, rng.choice([0.3, 0.6, 0.9]))
            return CorpusItem(Y.name, Y, "subset")
        elif roll < 0.88:
            D = random_category(rng)
            if len(C.arrows) * len(D.arrows) <= 4:
                P = ProductSimplicial([nerve(C, N), nerve(D, N)])
                return CorpusItem(P.name, P, "product")
        else:
            Z = nerve(C, N + 1)
            P = path_initial(Z) if rng.random() < 0.5 else path_final(Z)
            return CorpusItem(P.name, P, "path")


def corpus_generate(seed: int = 0, size: int = 200, N: int = 4) -> list[CorpusItem]:
    """Nerves, altered nerves, subsets, products, spheres and path spaces (all discrete)."""
    return [corpus_item(seed, k, N) for k in range(size)]


def groupoid_corpus(N: int = 4) -> list[CorpusItem]:
    """S-constructions over F_2 and their path spaces."""
    from .waldhausen import FqVect, build_S, build_S_rel

    D = FqVect(2, 2)
    SD = build_S(D, N + 1)
    SC = build_S(D.sub({0, 1}), N)
    R, _, _ = build_S_rel(SC, SD, N)
    S1 = build_S(FqVect(2, 1), N + 1)
    return [
        CorpusItem(SD.name, SD, "waldhausen"),
        CorpusItem(SC.name, SC, "waldhausen"),
        CorpusItem(R.name, R, "relative"),
        CorpusItem("P<" + SD.name, path_initial(SD, N), "path"),
        CorpusItem("P>" + SD.name, path_final(SD, N), "path"),
        CorpusItem("P>" + S1.name, path_final(S1, N), "path"),
    ]


def span_suite(q: int = 2, dmax: int = 2, N: int = 3):
    """Curated 2-Segal spans among S-constructions, the relative construction, nerves and constants."""
    from .simplicial_objects import identity_morphism
    from .spans import SimplicialSpan, identity_span, terminal_simplicial, to_terminal
    from .waldhausen import FqVect, build_S, build_S_rel, induced_map_S

    D = FqVect(q, dmax)
    SD = build_S(D, N + 1)
    SC = build_S(D.sub(range(min(dmax, 1) + 1)), N + 1)
    R, iota, pi = build_S_rel(SC, SD, N)
    Dc = iota.source
    T = terminal_simplicial(N)
    A = nerve(poset_category(3, [(0, 1), (1, 2)], "A2"), N)
    B = nerve(cyclic_group(2), N)
    B3 = nerve(cyclic_group(3), N)
    B6 = nerve(cyclic_group(6), N)
    F = induced_map_S(SC, SD)
    idm = identity_morphism
    spans = [identity_span(X) for X in (SD, SC, R, Dc, T, A, B, B3, B6)]
    # X -> * is relative Segal only when X_n is the plain product of its edges,
    # so the nerves mapped to the point have a single object.
    spans += [
        SimplicialSpan(pi, idm(R), "pi"),
        SimplicialSpan(idm(Dc), iota, "iota"),
        SimplicialSpan(F, idm(SC), "S(F)"),
        SimplicialSpan(idm(B), to_terminal(B, T), "B->*"),
        SimplicialSpan(idm(B3), to_terminal(B3, T), "B3->*"),
        SimplicialSpan(idm(B6), to_terminal(B6, T), "B6->*"),
    ]
    return spans


def composable_pairs(spans) -> list[tuple]:
    return [(a, b) for a in spans for b in spans if a.Y is b.X]


def left_relative_corpus(seed: int = 0, size: int = 60, N: int = 3) -> list[CorpusItem]:
    """Regular left modules of corpus objects and left relative objects glued from morphisms.

    The glued ones come from path-space projections, identities and maps to
    the point of corpus objects, plus the S-construction morphisms.
    """
    from .hermitian import build_R, project_R_to_S, tw_to_product
    from .simplicial_objects import (
        LEQ,
        OVER,
        forget_to_simplex,
        identity_morphism,
        path_final_projection,
        restrict_shape,
        theta_L_inverse,
    )
    from .spans import terminal_simplicial, to_terminal
    from .waldhausen import FqVect, build_S, build_S_rel

    out = []
    for k in range(size):
        kind = k % 4
        X = corpus_item(seed, k, N + 1 if kind == 1 else N).obj
        if kind == 0:
            M = restrict_shape(forget_to_simplex(X, OVER), LEQ)
            out.append(CorpusItem(f"reg({X.name})", M, "regular"))
            continue
        if kind == 1:
            p = path_final_projection(X, path_final(X))
        elif kind == 2:
            p = identity_morphism(X)
        else:
            p = to_terminal(X, terminal_simplicial(X.N))
        out.append(CorpusItem(f"glue({p.name}:{X.name})", theta_L_inverse(p), "glued"))
    D = FqVect(2, 2)
    SD = build_S(D, 2 * N + 1)
    SC = build_S(D.sub({0, 1}), N + 1)
    _, _, pi = build_S_rel(SC, SD, N)
    for name, p in (
        ("pi", pi),
        ("R->S", project_R_to_S(build_R(SD, N))),
        ("tw->SxSrev", tw_to_product(SD, N)),
        ("S(F2,d<=2)->*", to_terminal(SD, terminal_simplicial(SD.N))),
    ):
        out.append(CorpusItem(f"glue({name})", theta_L_inverse(p), "glued"))
    return out
