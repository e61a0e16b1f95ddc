"""Hall algebras and Hall modules read off from 2-Segal groupoids by pull-push of cardinalities.

Orientation: in the product ``a * b`` the class ``a`` is matched with ``d_0``
(the quotient) and ``b`` with ``d_2`` (the subobject), so for ``S`` of
``F_q`` vector spaces ``[a] * [b] = sum_c #{B <= F_q^c : B ~ b, F_q^c / B ~ a} [c]``.
Pass ``orientation="sub-first"`` for the opposite convention.

Coefficients are exact: the coefficient of ``c`` is the sum of
``|Aut c| / |Aut sigma|`` over classes ``sigma`` with the prescribed legs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .delta_combinatorics import OverOneObject
from .fin_groupoid import FinGroupoid
from .simplicial_objects import LEQ, OVER, SIMPLEX, TruncatedSimplicialGroupoid

QUOTIENT_FIRST = "quotient-first"
SUB_FIRST = "sub-first"


class HallVector:
    """Finitely supported map from class representatives to exact rationals."""

    def __init__(self, entries: dict | Iterable = ()):
        self._d: dict = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for k, v in items:
            self.add(k, v)

    def add(self, key, value) -> None:
        v = self._d.get(key, Fraction(0)) + Fraction(value)
        if v:
            self._d[key] = v
        else:
            self._d.pop(key, None)

    def __getitem__(self, key) -> Fraction:
        return self._d.get(key, Fraction(0))

    def items(self):
        return self._d.items()

    def keys(self):
        return self._d.keys()

    def __iter__(self):
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other) -> bool:
        return isinstance(other, HallVector) and self._d == other._d

    def __add__(self, other: HallVector) -> HallVector:
        out = HallVector(self._d)
        for k, v in other.items():
            out.add(k, v)
        return out

    def scale(self, c) -> HallVector:
        return HallVector({k: v * c for k, v in self._d.items()})

    def relabel(self, label: Callable) -> dict:
        return {label(k): v for k, v in self._d.items()}

    def __repr__(self) -> str:
        return "HallVector(" + ", ".join(f"{v}*{k!r}" for k, v in self._d.items()) + ")"


def basis(x) -> HallVector:
    return HallVector({x: 1})


def _rep(G: FinGroupoid, x):
    comps = G.components()
    return comps.reps[comps.index[x]]


def _require_class(G: FinGroupoid, x, what: str):
    if not G.contains(x):
        raise KeyError(f"{what} {x!r} is not an object of {G!r}")
    return _rep(G, x)


@dataclass(frozen=True)
class ActionSpan:
    """A span ``L x R <- top -> out`` given by three restriction functors out of one level."""

    top: FinGroupoid
    left: object
    right: object
    out: object

    @staticmethod
    def of(X: TruncatedSimplicialGroupoid, key, left: tuple, right: tuple, push: tuple) -> ActionSpan:
        fl, _ = X.restriction(key, left)
        fr, _ = X.restriction(key, right)
        fo, _ = X.restriction(key, push)
        return ActionSpan(X.level(key), fl, fr, fo)

    def transfer(self, a, b) -> HallVector:
        """Pull ``(a, b)`` back to ``top`` and push forward to ``out``."""
        top = self.top
        L, R, O = self.left.target, self.right.target, self.out.target
        ca, cb = _rep(L, a), _rep(R, b)
        out = HallVector()
        for s in top.components().reps:
            if _rep(L, self.left.obj(s)) != ca or _rep(R, self.right.obj(s)) != cb:
                continue
            c = _rep(O, self.out.obj(s))
            out.add(c, Fraction(O.aut_order(c), top.aut_order(s)))
        return out


def multiplication_span(X: TruncatedSimplicialGroupoid, orientation: str = QUOTIENT_FIRST) -> ActionSpan:
    if X.shape.kind != SIMPLEX or X.N < 2:
        raise ValueError("the product needs a simplicial object with level 2")
    quotient, sub = (1, 2), (0, 1)
    first, second = (quotient, sub) if orientation == QUOTIENT_FIRST else (sub, quotient)
    if orientation not in (QUOTIENT_FIRST, SUB_FIRST):
        raise ValueError(f"unknown orientation {orientation!r}")
    return ActionSpan.of(X, 2, first, second, (0, 2))


def hall_product(X: TruncatedSimplicialGroupoid, a, b, orientation: str = QUOTIENT_FIRST) -> HallVector:
    X1 = X.level(1)
    a, b = _require_class(X1, a, "class"), _require_class(X1, b, "class")
    return multiplication_span(X, orientation).transfer(a, b)


def _bilinear(op: Callable, u: HallVector, v: HallVector) -> HallVector:
    out = HallVector()
    for a, x in u.items():
        for b, y in v.items():
            for c, z in op(a, b).items():
                out.add(c, x * y * z)
    return out


def multiply(X, u: HallVector, v: HallVector, orientation: str = QUOTIENT_FIRST) -> HallVector:
    span = multiplication_span(X, orientation)
    return _bilinear(span.transfer, u, v)


def hall_classes(X: TruncatedSimplicialGroupoid, key=1) -> list:
    return list(X.level(key).components().reps)


def structure_constants(X: TruncatedSimplicialGroupoid, orientation: str = QUOTIENT_FIRST) -> list[tuple]:
    """Every nonzero ``(a, b, c, coefficient)``."""
    span = multiplication_span(X, orientation)
    cls = hall_classes(X)
    rows = []
    for a, b in product(cls, cls):
        for c, v in span.transfer(a, b).items():
            rows.append((a, b, c, v))
    return rows


# -- modules ---------------------------------------------------------------------------------------


def left_action_span(M: TruncatedSimplicialGroupoid) -> ActionSpan:
    """Through the object ``(0,0,1)``: algebra on ``{0,1}``, module on ``{1,2}``, result on ``{0,2}``."""
    if M.shape.kind not in (LEQ, OVER):
        raise ValueError("a left action needs a left relative or birelative object")
    return ActionSpan.of(M, OverOneObject(2, 2), (0, 1), (1, 2), (0, 2))


def right_action_span(M: TruncatedSimplicialGroupoid) -> ActionSpan:
    """Through ``(0,1,1)``: module on ``{0,1}``, algebra on ``{1,2}``, result on ``{0,2}``."""
    if M.shape.kind != OVER:
        raise ValueError("a right action needs a birelative object")
    return ActionSpan.of(M, OverOneObject(2, 1), (0, 1), (1, 2), (0, 2))


def hall_module_action(M: TruncatedSimplicialGroupoid, a, m, side: str = "left") -> HallVector:
    """``a . m`` (left) or ``m . a`` (right, with ``a`` still the algebra class)."""
    if side == "left":
        span = left_action_span(M)
        return span.transfer(_require_class(span.left.target, a, "algebra class"), _require_class(span.right.target, m, "module class"))
    span = right_action_span(M)
    return span.transfer(_require_class(span.left.target, m, "module class"), _require_class(span.right.target, a, "algebra class"))


def algebra_of(M: TruncatedSimplicialGroupoid, side: str = "left") -> TruncatedSimplicialGroupoid:
    """The simplicial object acting on ``M`` (the part over ``0`` for left, over ``1`` for right)."""
    from .simplicial_objects import IndexShape, Reindexed
    from .delta_combinatorics import OverOneMap

    if side == "left":
        key = lambda n: OverOneObject(n, n + 1)  # noqa: E731
    else:
        key = lambda n: OverOneObject(n, 0)  # noqa: E731
    return Reindexed(M, IndexShape(SIMPLEX, M.N), key, lambda f: OverOneMap(key(f.src), key(f.dst), f), f"alg({M.name})")


# -- laws ------------------------------------------------------------------------------------------


@dataclass
class LawReport:
    law: str
    checked: int = 0
    failures: list = field(default_factory=list)
    out_of_bound: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self, label: Callable = repr) -> dict:
        return {
            "law": self.law,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [[label(x) for x in t] for t in self.failures],
            "out_of_bound": [[label(x) for x in t] for t in self.out_of_bound],
        }


def _in_bound(size, bound, items) -> bool:
    return bound is None or size is None or sum(size(x) for x in items) <= bound


def verify_associativity(
    X: TruncatedSimplicialGroupoid, size: Callable | None = None, bound: int | None = None, orientation: str = QUOTIENT_FIRST
) -> LawReport:
    """``(a b) c = a (b c)`` on every class triple whose total size stays within ``bound``."""
    rep = LawReport("associativity")
    span = multiplication_span(X, orientation)
    cls = hall_classes(X)
    for a, b, c in product(cls, repeat=3):
        if not _in_bound(size, bound, (a, b, c)):
            rep.out_of_bound.append((a, b, c))
            continue
        lhs = _bilinear(span.transfer, span.transfer(a, b), basis(c))
        rhs = _bilinear(span.transfer, basis(a), span.transfer(b, c))
        rep.checked += 1
        if lhs != rhs:
            rep.failures.append((a, b, c))
    return rep


def verify_module_law(
    M: TruncatedSimplicialGroupoid,
    size_alg: Callable | None = None,
    size_mod: Callable | None = None,
    bound: int | None = None,
    weight: int = 1,
) -> LawReport:
    """``a (b m) = (a b) m``; a triple is in bound when ``weight*(|a|+|b|) + |m| <= bound``."""
    rep = LawReport("left module")
    act = left_action_span(M)
    X = algebra_of(M)
    mul = multiplication_span(X)
    A = act.left.target.components().reps
    mods = act.right.target.components().reps
    for a, b, m in product(A, A, mods):
        if bound is not None and size_alg is not None and weight * (size_alg(a) + size_alg(b)) + size_mod(m) > bound:
            rep.out_of_bound.append((a, b, m))
            continue
        lhs = _bilinear(act.transfer, basis(a), act.transfer(b, m))
        rhs = _bilinear(act.transfer, mul.transfer(a, b), basis(m))
        rep.checked += 1
        if lhs != rhs:
            rep.failures.append((a, b, m))
    return rep


def verify_bimodule_law(M: TruncatedSimplicialGroupoid) -> LawReport:
    """``(a m) b = a (m b)`` for a birelative object."""
    rep = LawReport("bimodule")
    left, right = left_action_span(M), right_action_span(M)
    A = left.left.target.components().reps
    B = right.right.target.components().reps
    mods = left.right.target.components().reps
    for a, m, b in product(A, mods, B):
        lhs = _bilinear(lambda x, y: right.transfer(x, y), left.transfer(a, m), basis(b))
        rhs = _bilinear(left.transfer, basis(a), right.transfer(m, b))
        rep.checked += 1
        if lhs != rhs:
            rep.failures.append((a, m, b))
    return rep


def verify_laws(X: TruncatedSimplicialGroupoid, **kw) -> LawReport:
    """Associativity for simplicial objects, the module law for left relative ones, the bimodule law otherwise."""
    kind = X.shape.kind
    if kind == SIMPLEX:
        return verify_associativity(X, **kw)
    if kind == LEQ:
        return verify_module_law(X, **kw)
    return verify_bimodule_law(X)


# -- brute-force oracles over F_q -------------------------------------------------------------------


def _vectors(d: int, q: int) -> list[tuple]:
    return list(product(range(q), repeat=d))


def _span_set(vecs: Iterable[tuple], d: int, q: int) -> frozenset:
    out = frozenset([tuple([0] * d)])
    for v in vecs:
        out = _extend(out, v, d, q)
    return out


def _subspace_sets(d: int, q: int, k: int) -> set[frozenset]:
    """Every ``k``-dimensional subspace of ``F_q^d`` as its set of vectors."""
    found: set[frozenset] = set()
    size = q**k
    nonzero = [v for v in _vectors(d, q) if any(v)]

    def grow(span: frozenset, start: int):
        if len(span) == size:
            found.add(span)
            return
        for i in range(start, len(nonzero)):
            v = nonzero[i]
            if v not in span:
                grow(_extend(span, v, d, q), i + 1)

    grow(frozenset([tuple([0] * d)]), 0)
    return found


def _extend(span: frozenset, v: tuple, d: int, q: int) -> frozenset:
    return frozenset(tuple((x + c * y) % q for x, y in zip(w, v)) for w in span for c in range(q))


def oracle_counts(q: int, a: int, b: int, c: int) -> int:
    """``#{B <= F_q^c : dim B = b, dim F_q^c / B = a}``."""
    if a + b != c or min(a, b) < 0:
        return 0
    return len(_subspace_sets(c, q, b))


def _pair(x, N, y, q):
    return sum(x[i] * N[i][j] * y[j] for i in range(len(x)) for j in range(len(y))) % q


def _reduced_form(N, U: frozenset, q: int) -> tuple:
    """Gram matrix of the form induced on ``U^perp / U``, in some basis."""
    n = len(N)
    V = _vectors(n, q)
    Uperp = frozenset(v for v in V if all(_pair(v, N, u, q) == 0 for u in U))
    basis_vecs: list = []
    span = U
    for v in sorted(Uperp):
        if v not in span:
            basis_vecs.append(v)
            span = _extend(span, v, n, q)
    return tuple(tuple(_pair(x, N, y, q) for y in basis_vecs) for x in basis_vecs)


def forms_congruent(A, B, q: int) -> bool:
    """``P^T A P = B`` for some invertible ``P``, by search."""
    m = len(A)
    if m != len(B):
        return False
    if m == 0:
        return True
    for flat in product(range(q), repeat=m * m):
        P = [flat[i * m:(i + 1) * m] for i in range(m)]
        cols = [tuple(P[r][c] for r in range(m)) for c in range(m)]
        if len(_span_set(cols, m, q)) != q**m:
            continue
        ok = all(_pair(cols[i], A, cols[j], q) == B[i][j] % q for i in range(m) for j in range(m))
        if ok:
            return True
    return False


def isotropic_oracle(q: int, N, a: int, M) -> int:
    """``#{U <= F_q^n : dim U = a, U totally isotropic for N, U^perp/U congruent to M}``."""
    n = len(N)
    if n != 2 * a + len(M):
        return 0
    count = 0
    for U in _subspace_sets(n, q, a):
        if any(_pair(x, N, y, q) for x in U for y in U):
            continue
        if forms_congruent(_reduced_form(N, U, q), M, q):
            count += 1
    return count


# -- output -------------------------------------------------------------------------------------


def dimension_label(x) -> str:
    """``[d]`` for a level-1 flag ``(d, ())``."""
    return f"[{x[0]}]"


def table_rows(rows: Iterable[tuple], label: Callable = dimension_label) -> list[tuple]:
    out = [(label(a), label(b), label(c), v.numerator, v.denominator) for a, b, c, v in rows]
    return sorted(out)


def to_csv(rows: list[tuple], header=("a", "b", "c", "numerator", "denominator")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def to_json(rows: list[tuple], header=("a", "b", "c", "numerator", "denominator")) -> str:
    return json.dumps([dict(zip(header, r)) for r in rows], indent=2, sort_keys=True)
