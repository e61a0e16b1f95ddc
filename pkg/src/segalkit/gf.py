"""Exact linear algebra over the prime field F_q.

Vectors are tuples of ints in ``range(q)``; matrices are tuples of row tuples.
A subspace of F_q^d is stored as the tuple of rows of its reduced row echelon
basis, which is a canonical (hashable) key.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]
Subspace = tuple[Vector, ...]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q**0.5) + 1))


def check_field(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime; only prime fields are supported")


def inv_mod(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(a, q - 2, q)


def primitive_root(q: int) -> int:
    if q == 2:
        return 1
    for g in range(2, q):
        if len({pow(g, k, q) for k in range(1, q)}) == q - 1:
            return g
    raise ValueError(q)


# -- matrices ---------------------------------------------------------------


def identity(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*a))


@lru_cache(maxsize=1 << 18)
def matmul(a: Matrix, b: Matrix, q: int) -> Matrix:
    """Product ``a @ b`` (the inner dimension must be positive unless ``a`` is empty)."""
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % q for col in cols) for row in a)


def matvec(a: Matrix, v: Vector, q: int) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) % q for row in a)


def dot(u: Vector, v: Vector, q: int) -> int:
    return sum(x * y for x, y in zip(u, v)) % q


def rref(rows: Sequence[Vector], q: int) -> tuple[Subspace, tuple[int, ...]]:
    """Reduced row echelon form of the span of ``rows``; returns (basis, pivots)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] % q), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        s = inv_mod(m[r][c], q)
        m[r] = [(x * s) % q for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % q:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def span(rows: Sequence[Vector], q: int) -> Subspace:
    return rref(rows, q)[0]


@lru_cache(maxsize=None)
def pivots_of(sub: Subspace) -> tuple[int, ...]:
    return tuple(next(c for c, x in enumerate(row) if x) for row in sub)


def rank(rows: Sequence[Vector], q: int) -> int:
    return len(rref(rows, q)[0])


@lru_cache(maxsize=1 << 18)
def inverse(a: Matrix, q: int) -> Matrix:
    d = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(d))]
    for c in range(d):
        p = next((i for i in range(c, d) if aug[i][c] % q), None)
        if p is None:
            raise ValueError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        s = inv_mod(aug[c][c], q)
        aug[c] = [(x * s) % q for x in aug[c]]
        for i in range(d):
            if i != c and aug[i][c] % q:
                f = aug[i][c]
                aug[i] = [(x - f * y) % q for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[d:]) for row in aug)


def is_invertible(a: Matrix, q: int) -> bool:
    return rank(a, q) == len(a)


@lru_cache(maxsize=None)
def general_linear(d: int, q: int) -> tuple[Matrix, ...]:
    """All invertible d x d matrices, in lexicographic order."""
    out = []
    for flat in product(range(q), repeat=d * d):
        m = tuple(tuple(flat[i * d:(i + 1) * d]) for i in range(d))
        if is_invertible(m, q):
            out.append(m)
    return tuple(out)


def gl_order(d: int, q: int) -> int:
    n = 1
    for i in range(d):
        n *= q**d - q**i
    return n


@lru_cache(maxsize=None)
def gl_generators(d: int, q: int) -> tuple[Matrix, ...]:
    """Elementary transvections plus one diagonal primitive-root scaling."""
    gens: list[Matrix] = []
    for i in range(d):
        for j in range(d):
            if i != j:
                m = [list(r) for r in identity(d)]
                m[i][j] = 1
                gens.append(tuple(tuple(r) for r in m))
    g = primitive_root(q)
    if d and g != 1:
        m = [list(r) for r in identity(d)]
        m[0][0] = g
        gens.append(tuple(tuple(r) for r in m))
    return tuple(gens) or (identity(d),)


# -- subspaces --------------------------------------------------------------


def all_subspaces(d: int, q: int, k: int | None = None) -> list[Subspace]:
    """Every subspace of F_q^d (of dimension k if given), enumerated by echelon shape."""
    from itertools import combinations

    dims = range(d + 1) if k is None else [k]
    out: list[Subspace] = []
    for kk in dims:
        for piv in combinations(range(d), kk):
            free = [(r, c) for r in range(kk) for c in range(d) if c > piv[r] and c not in piv]
            for vals in product(range(q), repeat=len(free)):
                m = [[0] * d for _ in range(kk)]
                for r, c in enumerate(piv):
                    m[r][c] = 1
                for (r, c), v in zip(free, vals):
                    m[r][c] = v
                out.append(tuple(tuple(row) for row in m))
    return out


def subspace_count(d: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient."""
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def contains(big: Subspace, small: Subspace, q: int) -> bool:
    return len(span(big + small, q)) == len(big)


@lru_cache(maxsize=1 << 18)
def image(g: Matrix, sub: Subspace, q: int) -> Subspace:
    """Image of a subspace under the column action v -> g v."""
    return span([matvec(g, v, q) for v in sub], q)


def perp(sub: Subspace, d: int, q: int, form: Matrix | None = None) -> Subspace:
    """Orthogonal complement {w : <v, w> = 0 for all v in sub} for the form v^T M w."""
    rows = [matvec(transpose(form), v, q) if form is not None else v for v in sub]
    # null space of the matrix with the given rows
    basis, piv = rref(rows, q)
    free = [c for c in range(d) if c not in piv]
    out = []
    for f in free:
        w = [0] * d
        w[f] = 1
        for row, p in zip(basis, piv):
            w[p] = (-row[f]) % q
        out.append(tuple(w))
    return span(out, q)


def coords_in(sub: Subspace, v: Vector) -> Vector:
    """Coordinates of a vector of ``sub`` in its echelon basis (read off at the pivots)."""
    return tuple(v[p] for p in pivots_of(sub))


def restrict_coords(sub: Subspace, inner: Subspace) -> Subspace:
    """The subspace ``inner`` of ``sub`` written in the echelon coordinates of ``sub``."""
    piv = pivots_of(sub)
    return tuple(tuple(row[p] for p in piv) for row in inner)


def quotient_matrix(sub: Subspace, d: int, q: int) -> Matrix:
    """Canonical epi F^d -> F^(d - dim sub) with kernel ``sub``.

    Its rows are the echelon basis of the orthogonal complement of ``sub``, which
    makes iterated quotients and restrictions compose on the nose and keeps the
    transpose duality strictly compatible with both.
    """
    return perp(sub, d, q)


def vectors(d: int, q: int) -> Iterator[Vector]:
    return product(range(q), repeat=d)
