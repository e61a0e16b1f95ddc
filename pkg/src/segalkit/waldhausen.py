"""Finite-dimensional vector spaces over F_q as a bounded exact category, and S-constructions.

A level-``m`` object of ``S(C)`` is a flag ``0 = A_0 <= A_1 <= ... <= A_m = F_q^d``
stored as ``(d, (A_1, ..., A_{m-1}))`` with each ``A_i`` an echelon subspace.
Isomorphisms are elements of ``GL_d`` acting on all members at once.  The
structure map of ``theta : [k] -> [m]`` sends a flag to the subquotients
``A_{theta(b)} / A_{theta(0)}`` inside ``A_{theta(k)} / A_{theta(0)}``, written in
canonical coordinates.  Restriction uses the echelon pivots of the top space.
Quotients use the echelon basis of the orthogonal complement of the kernel.
With these choices the simplicial identities hold on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import gf
from .fin_groupoid import (
    ActionGroupoid,
    FinGroupoid,
    Group,
    GroupoidFunctor,
    identity_functor,
)
from .simplicial_objects import (
    SIMPLEX,
    IndexShape,
    InsufficientDepth,
    PullbackSimplicial,
    SimplicialMorphism,
    TruncatedSimplicialGroupoid,
    path_final,
    path_final_projection,
)

Matrix = gf.Matrix
Subspace = gf.Subspace


# -- the exact category ------------------------------------------------------------


@dataclass(frozen=True)
class FqVect:
    """Vector spaces ``F_q^d`` with ``d`` in ``allowed`` (a full subcategory of ``d <= dmax``)."""

    q: int
    dmax: int
    allowed: frozenset | None = None

    def __post_init__(self) -> None:
        gf.check_field(self.q)
        if self.dmax < 0:
            raise ValueError("dmax must be nonnegative")
        dims = frozenset(range(self.dmax + 1)) if self.allowed is None else frozenset(self.allowed)
        if 0 not in dims or any(d < 0 or d > self.dmax for d in dims):
            raise ValueError("allowed dimensions must contain 0 and lie in [0, dmax]")
        object.__setattr__(self, "allowed", dims)

    def has(self, d: int) -> bool:
        return d in self.allowed

    @property
    def objects(self) -> list[int]:
        return sorted(self.allowed)

    def zero(self) -> int:
        return 0

    def isos(self, d: int) -> tuple[Matrix, ...]:
        return gf.general_linear(d, self.q)

    def monos(self, a: int, c: int) -> list[Matrix]:
        """Injective ``c x a`` matrices (columns are the images of the basis)."""
        from itertools import product

        out = []
        for flat in product(range(self.q), repeat=a * c):
            m = tuple(tuple(flat[r * a:(r + 1) * a]) for r in range(c))
            if gf.rank(gf.transpose(m, a), self.q) == a:
                out.append(m)
        return out

    def cokernel(self, mono: Matrix, c: int) -> tuple[int, Matrix]:
        """Canonical cokernel ``F^c ->> F^(c - a)`` of an admissible mono."""
        cols = gf.transpose(mono) if mono and mono[0] else ()
        image = gf.span(cols, self.q)
        epi = gf.quotient_matrix(image, c, self.q)
        return c - len(image), epi

    def compose(self, g: Matrix, f: Matrix) -> Matrix:
        return gf.matmul(g, f, self.q)

    def sub(self, allowed: Iterable[int]) -> FqVect:
        return FqVect(self.q, self.dmax, frozenset(allowed))


def closure_predicates(D: FqVect, allowed: Iterable[int]) -> tuple[bool, bool, bool]:
    """(closed under subobjects, closed under quotients, extension closed) for a dimension predicate.

    Decided by walking every subspace ``U <= F^e`` for ``e <= dmax``: ``U`` is a
    subobject of ``F^e``, ``F^e / U`` a quotient, and ``0 -> U -> F^e -> F^e/U -> 0``
    an extension.
    """
    ok = set(allowed)
    sub = quo = ext = True
    for e in range(D.dmax + 1):
        for U in gf.all_subspaces(e, D.q):
            a, b = len(U), e - len(U)
            if e in ok and a not in ok:
                sub = False
            if e in ok and b not in ok:
                quo = False
            if a in ok and b in ok and e not in ok:
                ext = False
    return sub, quo, ext


# -- flags and their structure maps ----------------------------------------------------


def full_space(d: int) -> Subspace:
    return gf.identity(d)


def _members(x) -> list[Subspace]:
    d, flag = x
    return [()] + list(flag) + [full_space(d)]


def flag_dims(x) -> tuple[int, ...]:
    return tuple(len(V) for V in _members(x))


@lru_cache(maxsize=1 << 18)
def act_on_flag(g: Matrix, x, q: int):
    d, flag = x
    return (d, tuple(gf.image(g, V, q) for V in flag))


def restrict_flag(x, top: int, q: int):
    """Restrict to member ``top`` of the flag, in its pivot coordinates; keeps members ``1..top-1``."""
    mem = _members(x)
    W = mem[top]
    return (len(W), tuple(gf.restrict_coords(W, V) for V in mem[1:top]))


def quotient_flag(x, bottom: int, q: int):
    """Quotient by member ``bottom``; keeps members ``bottom+1 .. m-1``."""
    d = x[0]
    mem = _members(x)
    B = gf.quotient_matrix(mem[bottom], d, q)
    return (len(B), tuple(gf.span([gf.matvec(B, v, q) for v in V], q) for V in mem[bottom + 1:-1]))


def restrict_matrix(g: Matrix, x, top: int, q: int) -> Matrix:
    """``g`` restricted to member ``top`` of ``x``, in pivot coordinates on both sides."""
    W = _members(x)[top]
    if not W:
        return ()
    gW = gf.image(g, W, q)
    cols = gf.matmul(g, gf.transpose(W), q)
    piv = gf.pivots_of(gW)
    return tuple(cols[p] for p in piv)


def quotient_matrix_of(g: Matrix, x, bottom: int, q: int) -> Matrix:
    """``g`` induced on the quotient by member ``bottom`` of ``x``."""
    d = x[0]
    U = _members(x)[bottom]
    Bx = gf.quotient_matrix(U, d, q)
    if not Bx:
        return ()
    By = gf.quotient_matrix(gf.image(g, U, q), d, q)
    piv = gf.pivots_of(Bx)
    prod = gf.matmul(By, g, q)
    return tuple(tuple(row[p] for p in piv) for row in prod)


def face_flag(x, m: int, i: int, q: int):
    if i == 0:
        return quotient_flag(x, 1, q)
    if i == m:
        return restrict_flag(x, m - 1, q)
    d, flag = x
    return (d, flag[: i - 1] + flag[i:])


def face_matrix(g: Matrix, x, m: int, i: int, q: int) -> Matrix:
    if i == 0:
        return quotient_matrix_of(g, x, 1, q)
    if i == m:
        return restrict_matrix(g, x, m - 1, q)
    return g


def degeneracy_flag(x, m: int, i: int):
    mem = _members(x)
    theta = [b if b <= i else b - 1 for b in range(m + 2)]
    return (x[0], tuple(mem[theta[b]] for b in range(1, m + 1)))


@lru_cache(maxsize=None)
def gl_group(d: int, q: int) -> Group:
    return Group(
        gf.general_linear(d, q),
        gf.gl_generators(d, q),
        lambda a, b: gf.matmul(a, b, q) if a else (),
        lambda a: gf.inverse(a, q) if a else (),
        gf.identity(d),
    )


@lru_cache(maxsize=None)
def _subspaces(d: int, q: int) -> tuple[Subspace, ...]:
    return tuple(gf.all_subspaces(d, q))


@lru_cache(maxsize=None)
def _supersets(V: Subspace, d: int, q: int) -> tuple[Subspace, ...]:
    return tuple(W for W in _subspaces(d, q) if len(W) >= len(V) and gf.contains(W, V, q))


def enumerate_flags(m: int, C: FqVect) -> list:
    """All level-``m`` flags of ``S(C)``: every subquotient dimension is allowed."""
    out = []
    ok = C.allowed
    for d in range(C.dmax + 1):
        if d not in ok:
            continue
        if m == 0:
            if d == 0:
                out.append((0, ()))
            continue

        def grow(prefix: list, dims: list):
            if len(prefix) == m - 1:
                full = dims + [d]
                if all(b - a in ok for k, a in enumerate(full) for b in full[k + 1:]):
                    out.append((d, tuple(prefix)))
                return
            last = prefix[-1] if prefix else ()
            for W in _supersets(last, d, C.q):
                nd = dims + [len(W)]
                if all(len(W) - a in ok for a in dims) and (d - len(W)) in ok:
                    grow(prefix + [W], nd)

        grow([], [0])
    return out


class FlagGroupoid(ActionGroupoid):
    """Level ``m`` of ``S(C)``: flags with ``GL_d`` acting; arrows ``(g, x)``."""

    def __init__(self, m: int, C: FqVect):
        self.m = m
        self.C = C
        flags = enumerate_flags(m, C)
        blocks: dict = {}
        for x in flags:
            blocks.setdefault(x[0], (gl_group(x[0], C.q), []))[1].append(x)
        q = C.q
        super().__init__(blocks, lambda g, x: act_on_flag(g, x, q), lambda x: x[0])


class WaldhausenS(TruncatedSimplicialGroupoid):
    """``S(C)`` up to level ``N`` for a bounded ``F_q`` exact category."""

    def __init__(self, C: FqVect, N: int):
        super().__init__(IndexShape(SIMPLEX, N), f"S(F{C.q},d<={C.dmax}{'' if len(C.allowed) == C.dmax + 1 else ',' + ''.join(map(str, sorted(C.allowed)))})")
        self.C = C

    @property
    def q(self) -> int:
        return self.C.q

    def _build_level(self, m):
        return FlagGroupoid(m, self.C)

    def _build_face(self, m, i):
        q = self.q
        src, tgt = self.level(m), self.level(m - 1)
        return GroupoidFunctor(
            src,
            tgt,
            lambda x: face_flag(x, m, i, q),
            lambda a: (face_matrix(a[0], a[1], m, i, q), face_flag(a[1], m, i, q)),
            f"d{i}",
        )

    def _build_degeneracy(self, m, i):
        src, tgt = self.level(m), self.level(m + 1)
        return GroupoidFunctor(
            src,
            tgt,
            lambda x: degeneracy_flag(x, m, i),
            lambda a: (a[0], degeneracy_flag(a[1], m, i)),
            f"s{i}",
        )


def build_S(C: FqVect, N: int) -> WaldhausenS:
    return WaldhausenS(C, N)


def zero_category(q: int = 2) -> FqVect:
    return FqVect(q, 0)


def induced_map_S(SC: WaldhausenS, SD: WaldhausenS) -> SimplicialMorphism:
    """``S(F)`` for the inclusion of a full subcategory given by a dimension predicate."""
    C, D = SC.C, SD.C
    if C.q != D.q or not C.allowed <= D.allowed:
        raise ValueError("not an inclusion of exact subcategories")

    def comp(m):
        return GroupoidFunctor(SC.level(m), SD.level(m), lambda x: x, lambda a: a, "incl")

    return SimplicialMorphism(SC, SD, comp, "S(F)")


# -- constant objects and the relative construction ----------------------------------------------


class ConstantSimplicial(TruncatedSimplicialGroupoid):
    def __init__(self, G: FinGroupoid, N: int, name: str = "const"):
        super().__init__(IndexShape(SIMPLEX, N), name)
        self.G = G
        self._id = identity_functor(G)

    def _build_level(self, key):
        return self.G

    def _build_face(self, key, i):
        return self._id

    def _build_degeneracy(self, key, i):
        return self._id


def core_groupoid(D: FqVect) -> FinGroupoid:
    """``D^~``: objects ``F^d`` and their automorphisms, presented as level 1 of ``S(D)``."""
    return FlagGroupoid(1, D)


class RelativeS(PullbackSimplicial):
    """``S^rel_n(F) = S_n(C) x_{S_n(D)} S_{n+1}(D)`` along the last face of ``S_{n+1}(D)``.

    This is the pullback of the final path space projection ``P>(S(D)) -> S(D)`` along ``S(F)``.
    """

    def __init__(self, SC: WaldhausenS, SD: WaldhausenS, N: int | None = None):
        N = min(SC.N, SD.N - 1) if N is None else N
        if N > SC.N or N + 1 > SD.N:
            raise InsufficientDepth(f"S^rel up to {N} needs S(C) to {N} and S(D) to {N + 1}")
        self.SC, self.SD = SC, SD
        self.F = induced_map_S(SC, SD)
        P = path_final(SD)
        super().__init__(self.F, path_final_projection(SD, P), N, f"Srel({SC.name}->{SD.name})")


def build_S_rel(SC: WaldhausenS, SD: WaldhausenS, N: int | None = None):
    """The relative construction with ``iota : D^~ -> S^rel`` and ``pi : S^rel -> S(C)``."""
    R = RelativeS(SC, SD, N)
    core = core_groupoid(SD.C)
    Dconst = ConstantSimplicial(core, R.N, "D~")

    def iota(n):
        zero = (0, ((),) * max(n - 1, 0))

        def obj(x):
            return (zero, (x[0], ((),) * n), ((), zero))

        def mor(a):
            g, x = a
            return (((), zero), (g, (x[0], ((),) * n)), obj(x))

        return GroupoidFunctor(core, R.level(n), obj, mor, "iota")

    def pi(n):
        return R.level(n).projection_a()

    iota_m = SimplicialMorphism(Dconst, R, iota, "iota")
    pi_m = SimplicialMorphism(R, SC, pi, "pi")
    return R, iota_m, pi_m


def flag_cardinality_by_dims(S: WaldhausenS, m: int) -> dict:
    """Groupoid cardinality of level ``m`` split by the dimension vector of the flag."""
    from fractions import Fraction

    G = S.level(m)
    out: dict = {}
    for r in G.components().reps:
        k = flag_dims(r)
        out[k] = out.get(k, Fraction(0)) + Fraction(1, G.aut_order(r))
    return out


def discrete_skeleton_sizes(S: WaldhausenS, m: int) -> list[int]:
    """Orbit sizes at level ``m`` (number of flags in each isomorphism class)."""
    return sorted(len(c) for c in S.level(m).components().members)

