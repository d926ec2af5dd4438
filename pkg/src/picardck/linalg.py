"""Exact linear algebra over QQ.

Thin helpers around sympy's ``DomainMatrix``.  Vectors are tuples of QQ
elements; subspaces are stored as tuples of RREF rows so that two spans are
equal iff their stored bases are equal.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = tuple
Basis = tuple  # tuple of RREF row vectors
_QQ_TYPE = QQ.dtype


def q(x) -> object:
    """Coerce an int, Fraction or QQ element into QQ."""
    if type(x) is _QQ_TYPE:
        return x
    if isinstance(x, int):
        return QQ(x)
    try:
        return QQ.convert(x)
    except Exception:
        return QQ(x.numerator, x.denominator)


def matrix(rows: Sequence[Sequence], ncols: int | None = None) -> DomainMatrix:
    rows = [[q(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def zeros(m: int, n: int) -> DomainMatrix:
    return DomainMatrix.zeros((m, n), QQ)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ)


def to_rows(m: DomainMatrix) -> list[list]:
    return m.to_list()


def rank(m: DomainMatrix) -> int:
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    return m.rank()


def span(vectors: Iterable[Sequence], dim: int) -> Basis:
    """Canonical (reduced row echelon) basis of the span of ``vectors``."""
    rows = [list(v) for v in vectors]
    if not rows:
        return ()
    r, pivots = matrix(rows, dim).rref()
    out = r.to_list()[: len(pivots)]
    return tuple(tuple(row) for row in out)


def nullspace(m: DomainMatrix) -> Basis:
    """Basis (RREF) of {x : m x = 0}."""
    n = m.shape[1]
    if m.shape[0] == 0:
        return span([[1 if i == j else 0 for i in range(n)] for j in range(n)], n)
    ns = m.nullspace()
    return span(ns.to_list(), n) if ns.shape[0] else ()


def contains(basis: Basis, v: Sequence, dim: int) -> bool:
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    return len(span(list(basis) + [list(v)], dim)) == len(basis)


def is_subspace(small: Basis, big: Basis, dim: int) -> bool:
    small = [v for v in small if any(v)]
    if not small:
        return True
    return len(span(list(big) + small, dim)) == len(big)


def add(a: Basis, b: Basis, dim: int) -> Basis:
    return span(list(a) + list(b), dim)


def intersect(a: Basis, b: Basis, dim: int) -> Basis:
    """Intersection of two subspaces via the kernel of [A; -B]^T."""
    if not a or not b:
        return ()
    rows = [list(v) for v in a] + [[-x for x in v] for v in b]
    # columns of the stacked system are the coefficients on a's and b's vectors
    m = matrix(rows, dim).transpose()
    kern = nullspace(m)
    vecs = []
    for coeffs in kern:
        vec = [QQ(0)] * dim
        for c, v in zip(coeffs[: len(a)], a):
            if c:
                vec = [x + c * y for x, y in zip(vec, v)]
        vecs.append(vec)
    return span(vecs, dim)


def apply(m: DomainMatrix, v: Sequence) -> tuple:
    col = matrix([[x] for x in v], 1)
    return tuple(r[0] for r in (m * col).to_list())


def image(m: DomainMatrix, basis: Basis) -> Basis:
    if not basis:
        return ()
    cols = m * matrix([list(v) for v in basis], m.shape[1]).transpose()
    return span(cols.transpose().to_list(), m.shape[0])


def full(dim: int) -> Basis:
    return span([[1 if i == j else 0 for i in range(dim)] for j in range(dim)], dim)


def solve(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """Solve ``a x = b`` for square invertible ``a``."""
    return a.inv() * b


def is_zero(m: DomainMatrix) -> bool:
    return all(x == 0 for row in m.to_list() for x in row)


def power(m: DomainMatrix, k: int) -> DomainMatrix:
    out = identity(m.shape[0])
    for _ in range(k):
        out = out * m
    return out


def fmt(x) -> str | int:
    """JSON-safe rendering of a rational: int when integral, else 'p/q'."""
    x = q(x)
    if x.denominator == 1:
        return int(x.numerator)
    return f"{int(x.numerator)}/{int(x.denominator)}"


def sym_basis(d: int, n: int) -> list[tuple[int, ...]]:
    """Monomial basis of Sym^n of a d-dimensional space, as sorted index tuples."""
    return list(itertools.combinations_with_replacement(range(d), n))


def sym_derivation(x: DomainMatrix, monos: list) -> DomainMatrix:
    """Leibniz extension of x to the symmetric power with basis ``monos``."""
    xs = x.to_list()
    index = {m: i for i, m in enumerate(monos)}
    rows = [[QQ(0)] * len(monos) for _ in monos]
    for col, mono in enumerate(monos):
        for j, cj in Counter(mono).items():
            for i in range(len(xs)):
                if xs[i][j]:
                    new = list(mono)
                    new.remove(j)
                    new.append(i)
                    rows[index[tuple(sorted(new))]][col] += cj * xs[i][j]
    return matrix(rows, len(monos))


def sym_product(vectors: Sequence[Sequence], monos: list) -> tuple:
    """Product of vectors in Sym^len(vectors), in the monomial basis ``monos``."""
    index = {m: i for i, m in enumerate(monos)}
    out = [QQ(0)] * len(monos)
    for choice in itertools.product(*[range(len(v)) for v in vectors]):
        c = QQ(1)
        for v, i in zip(vectors, choice):
            c *= q(v[i])
            if not c:
                break
        if c:
            out[index[tuple(sorted(choice))]] += c
    return tuple(out)
