"""Segal-type conditions on truncated simplicial groupoids.

Every condition asks that some strictly commuting square of groupoids be a
homotopy pullback.  Each is decided the same way: build the comparison functor
into the iso-comma pullback and test it for being an equivalence.  Failures
carry the index data and the witness returned by the equivalence test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .delta_combinatorics import enumerate_identity_extension_squares
from .fin_groupoid import (
    FinGroupoid,
    GroupoidError,
    GroupoidFunctor,
    IsoCommaPullback,
    ProductGroupoid,
    compose_functors,
    comparison_functor,
    is_equivalence,
    product_functor,
    product_of_functors,
)
from .simplicial_objects import SIMPLEX, IndexShape, InsufficientDepth, SimplicialMorphism, TruncatedSimplicialGroupoid


@dataclass
class Failure:
    condition: str
    index: dict
    witness: Any

    def as_dict(self) -> dict:
        return {"condition": self.condition, **{k: _plain(v) for k, v in self.index.items()}, "witness": _plain(self.witness)}


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    failures: list[Failure] = field(default_factory=list)
    instances: int = 0
    checked_range: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def fail(self, condition: str, witness, **index) -> None:
        self.passed = False
        self.failures.append(Failure(condition, index, witness))

    def merge(self, other: CheckReport) -> CheckReport:
        self.passed = self.passed and other.passed
        self.failures.extend(other.failures)
        self.instances += other.instances
        for k, v in other.checked_range.items():
            self.checked_range[f"{other.name}.{k}"] = v
        return self

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "instances": self.instances,
            "range": {k: _plain(v) for k, v in self.checked_range.items()},
            "failures": [f.as_dict() for f in self.failures],
        }

    def summary(self) -> str:
        head = f"{self.name}: {'pass' if self.passed else 'FAIL'} ({self.instances} instances)"
        lines = [head]
        for f in self.failures[:10]:
            idx = " ".join(f"{k}={_plain(v)}" for k, v in f.index.items())
            lines.append(f"  {f.condition} {idx} witness={_plain(f.witness)}")
        if len(self.failures) > 10:
            lines.append(f"  ... {len(self.failures) - 10} more")
        return "\n".join(lines)


def _plain(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return repr(v)


def is_cartesian(
    top: FinGroupoid, p: GroupoidFunctor, q: GroupoidFunctor, f: GroupoidFunctor, g: GroupoidFunctor
):
    """Is the square ``top -p-> A -f-> C <-g- B <-q- top`` a homotopy pullback?"""
    P = IsoCommaPullback(f, g)
    try:
        cmp = comparison_functor(top, p, q, P)
        return is_equivalence(cmp)
    except GroupoidError as exc:
        from .fin_groupoid import EquivalenceResult

        return EquivalenceResult(False, {"kind": "square does not commute", "detail": str(exc)})


def _depth(X: TruncatedSimplicialGroupoid, N: int | None) -> int:
    if N is None:
        return X.N
    if N > X.N:
        raise InsufficientDepth(f"check up to {N} needs {X.name} to level {N}, but it is truncated at {X.N}")
    return N


def _keys_at(X: TruncatedSimplicialGroupoid, n: int) -> list:
    return [k for k in X.keys() if X.shape.level(k) == n]


# -- 1-Segal -------------------------------------------------------------------------


def spine_comparison(X: TruncatedSimplicialGroupoid, key) -> tuple[GroupoidFunctor, FinGroupoid]:
    """``X_n -> X_{01} x_{X_1} X_{12} x ... x X_{n-1,n}`` as an iterated iso-comma pullback."""
    n = X.shape.level(key)
    r1, k1 = X.restriction(key, (0, 1))
    P: FinGroupoid = X.level(k1)
    last = lambda: GroupoidFunctor(P, P, lambda x: x, lambda m: m, "id")  # noqa: E731
    last_edge = last()
    last_key = k1
    cmp_obj = [lambda x: r1.obj(x)]
    cmp_mor = [lambda m: r1.mor(m)]
    for k in range(2, n + 1):
        rk, kk = X.restriction(key, (k - 1, k))
        end_f, end_key = X.restriction(last_key, (1,))
        start_g, _ = X.restriction(kk, (0,))
        f = compose_functors(end_f, last_edge)
        Q = IsoCommaPullback(f, start_g)
        prev_obj, prev_mor = cmp_obj[-1], cmp_mor[-1]
        V = Q.C

        def new_obj(x, prev_obj=prev_obj, rk=rk, f=f, V=V):
            a = prev_obj(x)
            return (a, rk.obj(x), V.identity(f.obj(a)))

        def new_mor(m, prev_mor=prev_mor, rk=rk, new_obj=new_obj, G=X.level(key)):
            return (prev_mor(m), rk.mor(m), new_obj(G.src(m)))

        cmp_obj.append(new_obj)
        cmp_mor.append(new_mor)
        P = Q
        last_edge = Q.projection_b()
        last_key = kk
    return GroupoidFunctor(X.level(key), P, cmp_obj[-1], cmp_mor[-1], "spine"), P


def is_1_segal(X: TruncatedSimplicialGroupoid, N: int | None = None) -> CheckReport:
    """``X_n`` is the iterated pullback of its edges for ``2 <= n <= N``."""
    N = _depth(X, N)
    rep = CheckReport("1-segal", checked_range={"n": [2, N]})
    for n in range(2, N + 1):
        for key in _keys_at(X, n):
            F, _ = spine_comparison(X, key)
            try:
                res = is_equivalence(F)
            except GroupoidError as exc:
                res = None
                rep.fail("spine", str(exc), n=n, f=key)
            rep.instances += 1
            if res is not None and not res:
                rep.fail("spine", res.witness, n=n, f=key)
    return rep


# -- 2-Segal ----------------------------------------------------------------------------


def two_segal_square(X: TruncatedSimplicialGroupoid, key, i: int, j: int):
    """The square ``X_n -> X_{0..i,j..n}``, ``X_n -> X_{i..j}`` over ``X_{i,j}``."""
    n = X.shape.level(key)
    outer = tuple(range(0, i + 1)) + tuple(range(j, n + 1))
    inner = tuple(range(i, j + 1))
    p, ka = X.restriction(key, outer)
    q, kb = X.restriction(key, inner)
    f, _ = X.restriction(ka, (i, i + 1))
    g, _ = X.restriction(kb, (0, j - i))
    return X.level(key), p, q, f, g


def _two_segal_family(X: TruncatedSimplicialGroupoid, N: int, name: str) -> CheckReport:
    rep = CheckReport(name, checked_range={"n": [3, N]})
    for n in range(3, N + 1):
        for key in _keys_at(X, n):
            for i in range(n):
                for j in range(i + 1, n + 1):
                    res = is_cartesian(*two_segal_square(X, key, i, j))
                    rep.instances += 1
                    if not res:
                        idx = {"n": n, "i": i, "j": j}
                        if X.shape.kind != SIMPLEX:
                            idx["f"] = key
                        rep.fail("2-segal square", res.witness, **idx)
    return rep


def is_2_segal(X: TruncatedSimplicialGroupoid, N: int | None = None) -> CheckReport:
    """For ``3 <= n <= N`` and ``i < j`` the polygon-gluing squares are homotopy pullbacks."""
    if X.shape.kind != SIMPLEX:
        raise ValueError("is_2_segal takes a simplicial object; use is_relative_2_segal_family")
    return _two_segal_family(X, _depth(X, N), "2-segal")


def is_relative_2_segal_family(M: TruncatedSimplicialGroupoid, N: int | None = None) -> CheckReport:
    """The same squares for every in-shape ``f : [n] -> [1]`` (bi-, left or right relative)."""
    if M.shape.kind == SIMPLEX:
        raise ValueError("need a relative shape")
    return _two_segal_family(M, _depth(M, N), f"{M.shape.kind}-relative 2-segal")


# -- decomposition spaces ---------------------------------------------------------------


def is_decomposition_space(X: TruncatedSimplicialGroupoid, N: int | None = None) -> CheckReport:
    """Every identity extension square with corners up to ``N`` goes to a homotopy pullback."""
    N = _depth(X, N)
    rep = CheckReport("decomposition", checked_range={"corners": [0, N]})
    if N < 1:
        return rep
    squares = enumerate_identity_extension_squares(X.shape.kind, N)
    shape = X.shape
    for sq in squares:
        h1 = shape.map_ends(sq.active_bottom)[1]
        h0 = shape.map_ends(sq.active_bottom)[0]
        g0, g1 = shape.map_ends(sq.active_top)
        if not all(k in shape for k in (h0, h1, g0, g1)):
            continue
        p = X.structure_map(sq.active_bottom)  # X(h1) -> X(h0)
        q = X.structure_map(sq.inert_dst)  # X(h1) -> X(g1)
        f = X.structure_map(sq.inert_src)  # X(h0) -> X(g0)
        g = X.structure_map(sq.active_top)  # X(g1) -> X(g0)
        res = is_cartesian(X.level(h1), p, q, f, g)
        rep.instances += 1
        if not res:
            rep.fail("identity extension square", res.witness, square=sq)
    return rep


# -- legs of spans ------------------------------------------------------------------------


def _morphism_keys(p: SimplicialMorphism, N: int | None) -> tuple[int, list]:
    depth = p.N if N is None else N
    if depth > p.N:
        raise InsufficientDepth(f"check up to {depth} needs both ends to level {depth}, available {p.N}")
    return depth, IndexShape(p.source.shape.kind, depth).keys()


def is_active_equifibered(p: SimplicialMorphism, N: int | None = None) -> CheckReport:
    """``M_n`` is the pullback of ``X_n -> X_{0,n} <- M_{0,n}`` at every level."""
    N, keys = _morphism_keys(p, N)
    M, X = p.source, p.target
    rep = CheckReport("active equifibered", checked_range={"n": [0, N]})
    for key in keys:
        n = M.shape.level(key)
        verts = (0,) if n == 0 else (0, n)
        rm, k0 = M.restriction(key, verts)
        rx, _ = X.restriction(key, verts)
        res = is_cartesian(M.level(key), p.component(key), rm, rx, p.component(k0))
        rep.instances += 1
        if not res:
            rep.fail("endpoint square", res.witness, n=n, f=key)
    return rep


def edge_product(X: TruncatedSimplicialGroupoid, key) -> tuple[GroupoidFunctor, list]:
    """``X_n -> prod_k X_{k,k+1}`` and the edge keys."""
    n = X.shape.level(key)
    maps, keys = [], []
    for k in range(n):
        r, kk = X.restriction(key, (k, k + 1))
        maps.append(r)
        keys.append(kk)
    if not maps:
        T = ProductGroupoid([])
        return GroupoidFunctor(X.level(key), T, lambda x: (), lambda m: (), "!"), keys
    return product_functor(maps, X.level(key)), keys


def is_relative_segal(p: SimplicialMorphism, N: int | None = None) -> CheckReport:
    """``M_n`` is the pullback of ``Y_n -> prod Y_{k,k+1} <- prod M_{k,k+1}`` at every level."""
    N, keys = _morphism_keys(p, N)
    M, Y = p.source, p.target
    rep = CheckReport("relative segal", checked_range={"n": [0, N]})
    for key in keys:
        n = M.shape.level(key)
        em, ekeys = edge_product(M, key)
        ey, _ = edge_product(Y, key)
        comps = [p.component(k) for k in ekeys]
        g = product_of_functors(comps, em.target, ey.target)
        res = is_cartesian(M.level(key), p.component(key), em, ey, g)
        rep.instances += 1
        if not res:
            rep.fail("edge square", res.witness, n=n, f=key)
    return rep


# -- relative 2-Segal morphisms -------------------------------------------------------------


def relative_square(p: SimplicialMorphism, n: int, i: int, j: int):
    """``X_n -> Y_{i..j}`` and ``X_n -> X_{0..i,j..n}`` over ``Y_{i,j}``."""
    X, Y = p.source, p.target
    outer = tuple(range(0, i + 1)) + tuple(range(j, n + 1))
    inner = tuple(range(i, j + 1))
    pa, ka = X.restriction(n, outer)
    rb, kb = Y.restriction(n, inner)
    q = compose_functors(rb, p.component(n))
    ra, _ = Y.restriction(ka, (i, i + 1))
    f = compose_functors(ra, p.component(ka))
    g, _ = Y.restriction(kb, (0, j - i))
    return X.level(n), pa, q, f, g


def is_relative_2_segal_morphism(
    p: SimplicialMorphism, N: int | None = None, target_N: int | None = None
) -> CheckReport:
    """Source 1-Segal, target 2-Segal, and the mixed squares Cartesian.

    ``N`` bounds the source levels and the mixed squares; ``target_N``
    (default ``N``) bounds the 2-Segal check on the target.
    """
    X, Y = p.source, p.target
    if X.shape.kind != SIMPLEX or Y.shape.kind != SIMPLEX:
        raise ValueError("need a morphism of simplicial objects")
    N = _depth(X, N)
    target_N = _depth(Y, N if target_N is None else target_N)
    if N > Y.N:
        raise InsufficientDepth(f"mixed squares up to {N} need the target to level {N}")
    rep = CheckReport("relative 2-segal", checked_range={"n": [1, N], "target": [3, target_N]})
    rep.merge(is_1_segal(X, N))
    rep.merge(is_2_segal(Y, target_N))
    for n in range(1, N + 1):
        for i in range(n):
            for j in range(i + 1, n + 1):
                res = is_cartesian(*relative_square(p, n, i, j))
                rep.instances += 1
                if not res:
                    rep.fail("mixed square", res.witness, n=n, i=i, j=j)
    return rep
