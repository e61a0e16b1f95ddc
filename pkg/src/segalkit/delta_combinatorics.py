"""Combinatorics of the simplex category and of the slice over [1].

Objects of the slice over [1] are stored as ``(n, t)``: the monotone map
``[n] -> [1]`` sending ``i`` to 0 exactly when ``i < t``.  The appendix data
(interval-marked arrows, their localization to tuples of composable parts, the
class of morphisms inverted by it and the initial objects of its fibers) also
lives here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Sequence


class CompositionError(ValueError):
    """Raised when two arrows do not compose or an object is malformed."""


# -- the simplex category ---------------------------------------------------


@dataclass(frozen=True)
class MonotoneMap:
    """A monotone map ``[src] -> [dst]``; ``src = -1`` denotes the empty ordinal."""

    src: int
    dst: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.src + 1:
            raise CompositionError(f"{self.values} has wrong length for [{self.src}]")
        if any(not 0 <= v <= self.dst for v in self.values):
            raise CompositionError(f"{self.values} leaves [{self.dst}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise CompositionError(f"{self.values} is not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    @staticmethod
    def identity(n: int) -> MonotoneMap:
        return MonotoneMap(n, n, tuple(range(n + 1)))

    @property
    def is_active(self) -> bool:
        if self.src < 0:
            return self.dst < 0
        return self.values[0] == 0 and self.values[-1] == self.dst

    @property
    def is_inert(self) -> bool:
        return self.src >= 0 and all(b == a + 1 for a, b in zip(self.values, self.values[1:]))

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.dst + 1))


def compose_monotone(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """The composite ``g . f`` (first ``f``, then ``g``)."""
    if f.dst != g.src:
        raise CompositionError(f"cannot compose [{f.src}]->[{f.dst}] with [{g.src}]->[{g.dst}]")
    return MonotoneMap(f.src, g.dst, tuple(g.values[v] for v in f.values))


def face(n: int, i: int) -> MonotoneMap:
    """Coface ``d^i : [n-1] -> [n]`` skipping ``i``."""
    return MonotoneMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def degeneracy(n: int, i: int) -> MonotoneMap:
    """Codegeneracy ``s^i : [n+1] -> [n]`` hitting ``i`` twice."""
    return MonotoneMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def interval_inclusion(lo: int, hi: int, n: int) -> MonotoneMap:
    return MonotoneMap(hi - lo, n, tuple(range(lo, hi + 1)))


@lru_cache(maxsize=None)
def monotone_maps(m: int, n: int) -> tuple[MonotoneMap, ...]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order."""
    if m < 0:
        return (MonotoneMap(-1, n, ()),)
    return tuple(MonotoneMap(m, n, vals) for vals in combinations_with_replacement(range(n + 1), m + 1))


def active_maps(m: int, n: int) -> list[MonotoneMap]:
    return [f for f in monotone_maps(m, n) if f.is_active]


def generator_steps(f: MonotoneMap) -> list[tuple[str, int, int]]:
    """Write ``f`` as a composite of cofaces and codegeneracies.

    Returns steps ``(kind, index, level)`` in the order a contravariant functor
    applies them: faces first (starting at level ``f.dst``), then degeneracies.
    ``level`` is the level the corresponding structure map starts from.
    """
    steps: list[tuple[str, int, int]] = []
    vals = list(f.values)
    n = f.dst
    while True:
        missing = [v for v in range(n + 1) if v not in vals]
        if not missing:
            break
        j = missing[-1]
        steps.append(("d", j, n))
        vals = [v if v < j else v - 1 for v in vals]
        n -= 1
    degs: list[tuple[str, int, int]] = []
    while len(vals) > n + 1:
        j = max(k for k in range(len(vals) - 1) if vals[k] == vals[k + 1])
        degs.append(("s", j, len(vals) - 2))
        vals = vals[:j] + vals[j + 1:]
    steps.extend(reversed(degs))
    return steps


def active_inert_factorize(f: MonotoneMap | OverOneMap):
    """Unique factorization ``f = inert . active`` through the image interval."""
    if isinstance(f, OverOneMap):
        act, ine = active_inert_factorize(f.underlying)
        mid = restrict(f.dst, ine.values[0], ine.values[-1])
        return OverOneMap(f.src, mid, act), OverOneMap(mid, f.dst, ine)
    if f.src < 0:
        raise CompositionError("the empty map has no image interval")
    lo, hi = f.values[0], f.values[-1]
    active = MonotoneMap(f.src, hi - lo, tuple(v - lo for v in f.values))
    return active, interval_inclusion(lo, hi, f.dst)


def edgewise_object(n: int) -> int:
    """``[n] * [n]^op`` has ``2n + 2`` elements."""
    return 2 * n + 1


def edgewise(f: MonotoneMap | int) -> MonotoneMap | int:
    """Edgewise subdivision ``[n] -> [n] * [n]^op`` on objects and arrows."""
    if isinstance(f, int):
        return edgewise_object(f)
    n, m = f.src, f.dst
    vals = [0] * (2 * n + 2)
    for k in range(n + 1):
        vals[k] = f.values[k]
        vals[2 * n + 1 - k] = 2 * m + 1 - f.values[k]
    return MonotoneMap(2 * n + 1, 2 * m + 1, tuple(vals))


def star_maps(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Join ``f * g : [a] * [b] -> [c] * [d]`` of a top-preserving ``f`` and a bottom-preserving ``g``."""
    if f.values[-1] != f.dst or g.values[0] != 0:
        raise CompositionError("joined maps must meet at the shared point")
    vals = f.values + tuple(v + f.dst for v in g.values[1:])
    return MonotoneMap(f.src + g.src, f.dst + g.dst, vals)


def inner_interstices(f: MonotoneMap) -> MonotoneMap:
    """The map of inner interstices induced by an active map (contravariant).

    Interstice ``(j, j+1)`` of ``[n]`` is indexed by ``j``; the result goes from
    the interstices of ``f.dst`` to those of ``f.src`` and sends ``j`` to the
    ``k`` with ``f(k) <= j < j+1 <= f(k+1)``.
    """
    if not f.is_active:
        raise CompositionError("inner interstices are only functorial on active maps")
    out = []
    for j in range(f.dst):
        k = max(k for k in range(f.src + 1) if f.values[k] <= j)
        out.append(k)
    return MonotoneMap(f.dst - 1, f.src - 1, tuple(out))


# -- the slice over [1] -----------------------------------------------------


@dataclass(frozen=True, order=True)
class OverOneObject:
    """``[n] -> [1]`` with ``i -> 0`` iff ``i < t``."""

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 0 or not 0 <= self.t <= self.n + 1:
            raise CompositionError(f"bad object ({self.n}, {self.t})")

    @staticmethod
    def from_values(values: Sequence[int]) -> OverOneObject:
        vals = tuple(values)
        if any(v not in (0, 1) for v in vals) or any(a > b for a, b in zip(vals, vals[1:])):
            raise CompositionError(f"{vals} is not a monotone map to [1]")
        return OverOneObject(len(vals) - 1, vals.count(0))

    @property
    def values(self) -> tuple[int, ...]:
        return _threshold_values(self.n, self.t)

    def __call__(self, i: int) -> int:
        return 0 if i < self.t else 1

    @property
    def in_leq(self) -> bool:
        """At most one value 1."""
        return self.t >= self.n

    @property
    def in_geq(self) -> bool:
        """At most one value 0."""
        return self.t <= 1

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.values)

    def __repr__(self) -> str:
        return "".join(map(str, self.values))


@lru_cache(maxsize=None)
def _threshold_values(n: int, t: int) -> tuple[int, ...]:
    return (0,) * min(t, n + 1) + (1,) * (n + 1 - min(t, n + 1))


def restrict(f: OverOneObject, lo: int, hi: int) -> OverOneObject:
    """Restriction of ``f`` to the subinterval ``{lo, ..., hi}``."""
    if not 0 <= lo <= hi <= f.n:
        raise CompositionError(f"[{lo}, {hi}] is not a subinterval of [{f.n}]")
    return OverOneObject(hi - lo, min(max(f.t - lo, 0), hi - lo + 1))


def pullback_object(f: OverOneObject, theta: MonotoneMap) -> OverOneObject:
    """``f . theta`` for ``theta`` landing in ``[f.n]``."""
    if theta.dst != f.n:
        raise CompositionError("reindexing map lands in the wrong object")
    return OverOneObject(theta.src, sum(1 for v in theta.values if v < f.t))


@dataclass(frozen=True)
class OverOneMap:
    src: OverOneObject
    dst: OverOneObject
    underlying: MonotoneMap

    def __post_init__(self) -> None:
        u = self.underlying
        if u.src != self.src.n or u.dst != self.dst.n:
            raise CompositionError("underlying map has the wrong endpoints")
        if any(self.dst(u.values[i]) != self.src(i) for i in range(self.src.n + 1)):
            raise CompositionError(f"{u.values} does not commute over [1]")

    def __call__(self, i: int) -> int:
        return self.underlying.values[i]

    @staticmethod
    def identity(f: OverOneObject) -> OverOneMap:
        return OverOneMap(f, f, MonotoneMap.identity(f.n))

    @staticmethod
    def over(target: OverOneObject, theta: MonotoneMap) -> OverOneMap:
        return OverOneMap(pullback_object(target, theta), target, theta)


def compose_over(f: OverOneMap, g: OverOneMap) -> OverOneMap:
    """``g . f`` in the slice."""
    if f.dst != g.src:
        raise CompositionError("slice arrows do not compose")
    return OverOneMap(f.src, g.dst, compose_monotone(f.underlying, g.underlying))


def over_maps(src: OverOneObject, dst: OverOneObject) -> list[OverOneMap]:
    return [
        OverOneMap(src, dst, u)
        for u in monotone_maps(src.n, dst.n)
        if all(dst(u.values[i]) == src(i) for i in range(src.n + 1))
    ]


def over_objects(n: int, kind: str = "over") -> list[OverOneObject]:
    objs = [OverOneObject(n, t) for t in range(n + 2)]
    if kind == "leq":
        return [o for o in objs if o.in_leq]
    if kind == "geq":
        return [o for o in objs if o.in_geq]
    return objs


def composable(f: OverOneObject, g: OverOneObject) -> bool:
    return f(f.n) == g(0)


def star_concatenate(f: OverOneObject, g: OverOneObject) -> OverOneObject:
    """``f * g`` on ``[f.n + g.n]``: ``f`` first, glued at the shared point."""
    if not composable(f, g):
        raise CompositionError(f"{f!r} and {g!r} are not composable")
    return OverOneObject(f.n + g.n, f.t if f.t <= f.n else f.n + g.t)


def concatenate_all(parts: Sequence[OverOneObject]) -> OverOneObject:
    out = parts[0]
    for p in parts[1:]:
        out = star_concatenate(out, p)
    return out


# -- identity extension squares ----------------------------------------------


@dataclass(frozen=True)
class IdentityExtensionSquare:
    """``g0 ->> g1`` on top, ``a*g0*b ->> a*g1*b`` on the bottom, inert sides."""

    inert_src: MonotoneMap | OverOneMap
    active_top: MonotoneMap | OverOneMap
    inert_dst: MonotoneMap | OverOneMap
    active_bottom: MonotoneMap | OverOneMap

    @property
    def is_over(self) -> bool:
        return isinstance(self.active_top, OverOneMap)

    def commutes(self) -> bool:
        comp = compose_over if self.is_over else compose_monotone
        return comp(self.active_top, self.inert_dst) == comp(self.inert_src, self.active_bottom)


def _under(f):
    return f.underlying if isinstance(f, OverOneMap) else f


def pushout_active_inert(inert, active) -> IdentityExtensionSquare:
    """Complete an inert ``g0 >-> h0`` and an active ``g0 ->> g1`` to an identity extension square."""
    e, f = _under(inert), _under(active)
    if not e.is_inert or not f.is_active or e.src != f.src:
        raise CompositionError("need an inert and an active map with a shared source")
    a = e.values[0]
    b = e.dst - e.values[-1]
    n, m = f.src, f.dst
    bottom = MonotoneMap(
        a + n + b,
        a + m + b,
        tuple(range(a)) + tuple(v + a for v in f.values) + tuple(a + m + k for k in range(1, b + 1)),
    )
    side = interval_inclusion(a, a + m, a + m + b)
    if not isinstance(active, OverOneMap):
        return IdentityExtensionSquare(e, f, side, bottom)
    h0 = inert.dst
    g1 = active.dst
    h1 = OverOneObject.from_values(h0.values[:a] + g1.values + h0.values[a + n + 1:])
    return IdentityExtensionSquare(
        inert, active, OverOneMap(g1, h1, side), OverOneMap(h0, h1, bottom)
    )


def enumerate_identity_extension_squares(shape: str, bound: int) -> list[IdentityExtensionSquare]:
    """All identity extension squares with every corner of size at most ``bound``.

    ``shape`` is ``"simplex"`` or one of ``"over"``, ``"leq"``, ``"geq"``.  The
    active part starts at ``[n]`` with ``n >= 1``; for ``n = 0`` the only active
    map is an identity and the square is trivially a pullback.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    out: list[IdentityExtensionSquare] = []
    for n in range(1, bound + 1):
        for m in range(0, bound + 1):
            for f in active_maps(n, m):
                for a in range(0, bound + 1):
                    for b in range(0, bound + 1 - a):
                        if a + n + b > bound or a + m + b > bound:
                            continue
                        inert = interval_inclusion(a, a + n, a + n + b)
                        if shape == "simplex":
                            out.append(pushout_active_inert(inert, f))
                            continue
                        for h0 in over_objects(a + n + b, shape):
                            g0 = restrict(h0, a, a + n)
                            for g1 in over_objects(m, shape):
                                try:
                                    act = OverOneMap(g0, g1, f)
                                except CompositionError:
                                    continue
                                sq = pushout_active_inert(OverOneMap(g0, h0, inert), act)
                                h1 = sq.active_bottom.dst
                                if shape == "leq" and not h1.in_leq or shape == "geq" and not h1.in_geq:
                                    continue
                                out.append(sq)
    return out


# -- decomposition of slice arrows ---------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    left: OverOneObject
    parts: tuple[OverOneMap, ...]
    right: OverOneObject


def decompose_over_one_morphism(f: OverOneMap) -> Decomposition:
    """Split ``f`` into its restrictions to consecutive pairs plus the two flanks."""
    u = f.underlying
    parts = []
    for i in range(1, f.src.n + 1):
        lo, hi = u.values[i - 1], u.values[i]
        src = restrict(f.src, i - 1, i)
        dst = restrict(f.dst, lo, hi)
        parts.append(OverOneMap(src, dst, MonotoneMap(1, hi - lo, (0, hi - lo))))
    left = restrict(f.dst, 0, u.values[0])
    right = restrict(f.dst, u.values[-1], f.dst.n)
    return Decomposition(left, tuple(parts), right)


def reassemble(dec: Decomposition, source: OverOneObject | None = None) -> OverOneMap:
    """Inverse of :func:`decompose_over_one_morphism`."""
    pieces = [dec.left] + [p.dst for p in dec.parts] + [dec.right]
    target = concatenate_all(pieces)
    start = dec.left.n
    vals = [start]
    for p in dec.parts:
        vals.append(vals[-1] + p.dst.n)
    if source is None:
        source = pullback_object(target, MonotoneMap(len(vals) - 1, target.n, tuple(vals)))
    return OverOneMap(source, target, MonotoneMap(source.n, target.n, tuple(vals)))


# -- marked arrows and their localization ---------------------------------------


@dataclass(frozen=True)
class ThetaObject:
    """An arrow ``phi : g0 -> g1`` of the slice with a marked interval ``[i, j]`` of ``g0``."""

    arrow: OverOneMap
    i: int
    j: int

    def __post_init__(self) -> None:
        if not 0 <= self.i <= self.j <= self.arrow.src.n:
            raise CompositionError("marked interval out of range")

    @property
    def degenerate(self) -> bool:
        return self.i == self.j

    @property
    def g0(self) -> OverOneObject:
        return self.arrow.src

    @property
    def g1(self) -> OverOneObject:
        return self.arrow.dst


@dataclass(frozen=True)
class ThetaMorphism:
    """``e0 : src.g0 -> dst.g0`` and ``e1 : dst.g1 -> src.g1`` with ``src.phi = e1 . dst.phi . e0``."""

    src: ThetaObject
    dst: ThetaObject
    e0: OverOneMap
    e1: OverOneMap

    def __post_init__(self) -> None:
        if self.e0.src != self.src.g0 or self.e0.dst != self.dst.g0:
            raise CompositionError("e0 has the wrong endpoints")
        if self.e1.src != self.dst.g1 or self.e1.dst != self.src.g1:
            raise CompositionError("e1 has the wrong endpoints")
        if compose_over(compose_over(self.e0, self.dst.arrow), self.e1) != self.src.arrow:
            raise CompositionError("square does not commute")
        if not self.e0(self.src.i) <= self.dst.i <= self.dst.j <= self.e0(self.src.j):
            raise CompositionError("marked intervals are not compatible")

    @staticmethod
    def identity(x: ThetaObject) -> ThetaMorphism:
        return ThetaMorphism(x, x, OverOneMap.identity(x.g0), OverOneMap.identity(x.g1))


def compose_theta(s: ThetaMorphism, t: ThetaMorphism) -> ThetaMorphism:
    """``t . s`` for ``s : A -> B`` and ``t : B -> C``."""
    if s.dst != t.src:
        raise CompositionError("marked arrows do not compose")
    return ThetaMorphism(s.src, t.dst, compose_over(s.e0, t.e0), compose_over(t.e1, s.e1))


def is_in_E(m: ThetaMorphism) -> bool:
    """Does ``m`` restrict to bijections between the marked intervals and between their images?"""
    x, y = m.src, m.dst
    if y.j - y.i != x.j - x.i:
        return False
    if any(m.e0(x.i + k) != y.i + k for k in range(x.j - x.i + 1)):
        return False
    lo, hi = y.arrow(y.i), y.arrow(y.j)
    tlo, thi = x.arrow(x.i), x.arrow(x.j)
    if hi - lo != thi - tlo:
        return False
    return all(m.e1(lo + k) == tlo + k for k in range(hi - lo + 1))


@dataclass(frozen=True)
class DeltaStarObject:
    """A nonempty tuple of composable slice objects."""

    parts: tuple[OverOneObject, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise CompositionError("need at least one part")
        for f, g in zip(self.parts, self.parts[1:]):
            if not composable(f, g):
                raise CompositionError(f"{f!r} and {g!r} are not composable")

    @property
    def k(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @cached_property
    def total(self) -> OverOneObject:
        return concatenate_all(self.parts)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for p in self.parts:
            out.append(out[-1] + p.n)
        return tuple(out)

    def __repr__(self) -> str:
        return "(" + ",".join(repr(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class DeltaStarMorphism:
    """``theta : [l] -> [k]`` on part indices and ``g`` from the target's concatenation to the source's."""

    src: DeltaStarObject
    dst: DeltaStarObject
    theta: MonotoneMap
    g: OverOneMap

    def __post_init__(self) -> None:
        if self.theta.src != self.dst.k - 1 or self.theta.dst != self.src.k - 1:
            raise CompositionError("theta has the wrong endpoints")
        if self.g.src != self.dst.total or self.g.dst != self.src.total:
            raise CompositionError("g has the wrong endpoints")
        so, do = self.src.offsets, self.dst.offsets
        for q, p in enumerate(self.theta.values):
            for x in range(do[q], do[q + 1] + 1):
                if not so[p] <= self.g(x) <= so[p + 1]:
                    raise CompositionError("part is not sent into its assigned part")

    @staticmethod
    def identity(x: DeltaStarObject) -> DeltaStarMorphism:
        return DeltaStarMorphism(x, x, MonotoneMap.identity(x.k - 1), OverOneMap.identity(x.total))


def compose_star(a: DeltaStarMorphism, b: DeltaStarMorphism) -> DeltaStarMorphism:
    """``b . a`` for ``a : X -> Y`` and ``b : Y -> Z``."""
    if a.dst != b.src:
        raise CompositionError("tuple morphisms do not compose")
    return DeltaStarMorphism(a.src, b.dst, compose_monotone(b.theta, a.theta), compose_over(b.g, a.g))


def _localize_object(x: ThetaObject) -> DeltaStarObject:
    phi = x.arrow
    return DeltaStarObject(tuple(restrict(x.g1, phi(p), phi(p + 1)) for p in range(x.i, x.j)))


def localization_L(x: ThetaObject | ThetaMorphism) -> DeltaStarObject | DeltaStarMorphism:
    """Send a marked arrow to its tuple of parts, and a morphism to the induced tuple morphism."""
    if isinstance(x, ThetaObject):
        if x.degenerate:
            raise CompositionError("the marked interval is degenerate")
        return _localize_object(x)
    if x.src.degenerate or x.dst.degenerate:
        raise CompositionError("the marked interval is degenerate")
    top, bot = x.src, x.dst
    src, dst = _localize_object(top), _localize_object(bot)
    e0 = x.e0.underlying
    # e0 restricted to the top interval, as an active map onto its image interval
    lo, hi = e0(top.i), e0(top.j)
    act = MonotoneMap(top.j - top.i, hi - lo, tuple(e0(top.i + k) - lo for k in range(top.j - top.i + 1)))
    inter = inner_interstices(act)
    theta = MonotoneMap(bot.j - bot.i - 1, top.j - top.i - 1, tuple(inter(bot.i - lo + q) for q in range(bot.j - bot.i)))
    base_src = top.arrow(top.i)
    base_dst = bot.arrow(bot.i)
    g_vals = tuple(x.e1(base_dst + k) - base_src for k in range(dst.total.n + 1))
    g = OverOneMap(dst.total, src.total, MonotoneMap(dst.total.n, src.total.n, g_vals))
    return DeltaStarMorphism(src, dst, theta, g)


def initial_object_IN(N: DeltaStarObject) -> tuple[ThetaObject, str]:
    """The initial object of the fiber over ``N`` with invertible-class morphisms.

    Returns the object and its support case: ``"supported at 0"`` (a unit part is
    appended on the right), ``"surjective"``, or ``"supported at 1"`` (a unit
    part is prepended on the left).
    """
    total = N.total
    offs = N.offsets
    unit = OverOneObject(1, 1)
    support = total.support
    if support == frozenset({0}):
        case, target, shift = "supported at 0", star_concatenate(total, unit), 0
    elif support == frozenset({1}):
        case, target, shift = "supported at 1", star_concatenate(unit, total), 1
    else:
        case, target, shift = "surjective", total, 0
    vals = tuple(o + shift for o in offs)
    arrow = OverOneMap.over(target, MonotoneMap(N.k, target.n, vals))
    return ThetaObject(arrow, 0, N.k), case


# -- exhaustive enumeration helpers for the localization checks ---------------------


def delta_star_objects(max_total: int, max_parts: int | None = None) -> list[DeltaStarObject]:
    """Tuples with concatenation size at most ``max_total`` and at most ``max_parts`` parts."""
    max_parts = max_total if max_parts is None else max_parts
    out: list[DeltaStarObject] = []

    def grow(prefix: list[OverOneObject], size: int) -> None:
        if prefix:
            out.append(DeltaStarObject(tuple(prefix)))
        if len(prefix) == max_parts:
            return
        for m in range(0, max_total - size + 1):
            for p in over_objects(m):
                if not prefix or composable(prefix[-1], p):
                    grow(prefix + [p], size + m)

    grow([], 0)
    return out


def monotone_extensions(
    length: int, lo: int, hi: int, fixed: dict[int, int], allowed
) -> Iterator[tuple[int, ...]]:
    """Monotone sequences of ``length`` values in ``[lo, hi]`` agreeing with ``fixed`` and ``allowed(pos, val)``."""

    def rec(pos: int, start: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if pos == length:
            yield tuple(acc)
            return
        cands = [fixed[pos]] if pos in fixed else range(start, hi + 1)
        for v in cands:
            if v < start or v > hi or not allowed(pos, v):
                continue
            acc.append(v)
            yield from rec(pos + 1, v, acc)
            acc.pop()

    yield from rec(0, lo, [])


def theta_objects_over(N: DeltaStarObject, extra: int) -> list[ThetaObject]:
    """All marked arrows mapping to ``N`` whose flanks add at most ``extra`` points.

    The cap applies separately to the target (points of ``g1`` outside the block
    of parts) and to the source (points of ``g0`` outside the marked interval).
    """
    out: list[ThetaObject] = []
    total = N.total
    k = N.k
    for c in range(extra + 1):  # points of g1 before the block
        for r in range(extra + 1 - c):  # points of g1 after the block
            l = c + total.n + r
            for left in over_objects(c):
                if c and left(c) != total(0):
                    continue
                for right in over_objects(r):
                    if r and right(0) != total(total.n):
                        continue
                    vals = (left.values[:c] if c else ()) + total.values + (right.values[1:] if r else ())
                    g1 = OverOneObject.from_values(vals)
                    block = tuple(c + o for o in N.offsets)
                    for i in range(extra + 1):
                        for tail in range(extra + 1 - i):
                            n = i + k + tail
                            pre = list(monotone_maps(i - 1, c)) if i else [MonotoneMap(-1, c, ())]
                            for a in pre:
                                for b in monotone_maps(tail - 1, r) if tail else [MonotoneMap(-1, r, ())]:
                                    phi_vals = a.values + block + tuple(c + total.n + v for v in b.values)
                                    if any(x > y for x, y in zip(phi_vals, phi_vals[1:])):
                                        continue
                                    phi = OverOneMap.over(g1, MonotoneMap(n, l, phi_vals))
                                    out.append(ThetaObject(phi, i, i + k))
    return sorted(set(out), key=lambda x: (x.g1.n, x.g0.n, x.g1.t, x.arrow.underlying.values, x.i))


def theta_morphisms(x: ThetaObject, y: ThetaObject, interval_bijective: bool = False) -> list[ThetaMorphism]:
    """Every morphism ``x -> y`` of marked arrows, by exhaustive search over ``e0`` and ``e1``.

    With ``interval_bijective`` only maps sending the marked interval of ``x``
    identically onto that of ``y`` are generated, a necessary condition for
    membership in the invertible class that prunes the search.
    """
    out = []
    if interval_bijective:
        if y.j - y.i != x.j - x.i:
            return out
        pinned = {x.i + k: y.i + k for k in range(x.j - x.i + 1)}
        same_side = lambda pos, val: y.g0(val) == x.g0(pos)  # noqa: E731
        e0s = [
            OverOneMap(x.g0, y.g0, MonotoneMap(x.g0.n, y.g0.n, v))
            for v in monotone_extensions(x.g0.n + 1, 0, y.g0.n, pinned, same_side)
        ]
    else:
        e0s = over_maps(x.g0, y.g0)
    for e0 in e0s:
        if not e0(x.i) <= y.i <= y.j <= e0(x.j):
            continue
        inner = compose_over(e0, y.arrow).underlying.values
        # e1 . inner must equal x.arrow; pin e1 on the image of inner
        fixed: dict[int, int] = {}
        ok = True
        for s, v in zip(inner, x.arrow.underlying.values):
            if fixed.get(s, v) != v:
                ok = False
                break
            fixed[s] = v
        if not ok:
            continue
        allowed = lambda pos, val: x.g1(val) == y.g1(pos)  # noqa: E731
        for vals in monotone_extensions(y.g1.n + 1, 0, x.g1.n, fixed, allowed):
            e1 = OverOneMap(y.g1, x.g1, MonotoneMap(y.g1.n, x.g1.n, vals))
            out.append(ThetaMorphism(x, y, e0, e1))
    return out


# -- verification drivers -----------------------------------------------------------------------


@dataclass
class FiberResult:
    N: DeltaStarObject
    case: str
    fiber_objects: int
    e_morphisms: int
    failures: list


def check_fiber(N: DeltaStarObject, extra: int = 2) -> FiberResult:
    """``I_N`` has exactly one invertible-class morphism to each object over ``N``, and each maps to ``id_N``."""
    I, case = initial_object_IN(N)
    ident = DeltaStarMorphism.identity(N)
    failures = []
    count = seen = 0
    for Y in theta_objects_over(N, extra):
        count += 1
        if localization_L(Y) != N:
            failures.append(("object not over N", Y))
            continue
        ms = [m for m in theta_morphisms(I, Y, True) if is_in_E(m)]
        seen += len(ms)
        if len(ms) != 1:
            failures.append(("morphisms from I_N", Y, len(ms)))
        for m in ms:
            if localization_L(m) != ident:
                failures.append(("not collapsed", m))
    return FiberResult(N, case, count, seen, failures)


@dataclass
class LocalizationReport:
    bound: int
    extra: int
    objects: int = 0
    fiber_objects: int = 0
    e_morphisms: int = 0
    cases: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_initial_objects(bound: int = 4, extra: int = 2, workers: int = 1) -> LocalizationReport:
    """Run :func:`check_fiber` for every tuple of total size at most ``bound``."""
    objs = delta_star_objects(bound)
    rep = LocalizationReport(bound, extra)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(check_fiber, objs, [extra] * len(objs), chunksize=8))
    else:
        results = [check_fiber(N, extra) for N in objs]
    for r in results:
        rep.objects += 1
        rep.fiber_objects += r.fiber_objects
        rep.e_morphisms += r.e_morphisms
        rep.cases[r.case] = rep.cases.get(r.case, 0) + 1
        rep.failures.extend((r.N,) + tuple(f) for f in r.failures)
    return rep


def check_functoriality(bound: int = 2, extra: int = 1, samples: int = 200, seed: int = 0) -> tuple[int, list]:
    """``L(t . s) = L(t) . L(s)`` and ``L(id) = id`` on sampled composable pairs of marked arrows."""
    import random

    rng = random.Random(seed)
    objs = sorted({x for N in delta_star_objects(bound) for x in theta_objects_over(N, extra)}, key=repr)
    failures: list = []
    checked = 0
    for x in objs:
        if localization_L(ThetaMorphism.identity(x)) != DeltaStarMorphism.identity(localization_L(x)):
            failures.append(("identity", x))
    attempts = 0
    while checked < samples and attempts < 50 * samples:
        attempts += 1
        x, y, z = (rng.choice(objs) for _ in range(3))
        s_list = theta_morphisms(x, y)
        if not s_list:
            continue
        t_list = theta_morphisms(y, z)
        if not t_list:
            continue
        s, t = rng.choice(s_list), rng.choice(t_list)
        checked += 1
        if localization_L(compose_theta(s, t)) != compose_star(localization_L(s), localization_L(t)):
            failures.append(("composite", s, t))
    return checked, failures
