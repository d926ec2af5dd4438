"""Cohomological shadow of the Chow-Kuenneth projectors for abelian threefolds.

H*(A) is the exterior algebra on six degree-one classes.  Endomorphisms
induced from degree one act on H^k through k x k minors.  Multiplication by
n acts on H^k as n^k, so the Kuenneth projectors are Lagrange interpolation
polynomials in [n]^*.

Only the realization is modelled: cycles and the projectors with index
4, 5, 6 that stay conjectural at the Chow level are out of scope here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from sympy import QQ

from . import linalg, tensor

GENUS = 3
RANK = 2 * GENUS
TOP = RANK


class OutOfRange(ValueError):
    pass


def _check_degree(i: int) -> None:
    if not 0 <= i <= TOP:
        raise OutOfRange(f"degree {i} outside 0..{TOP}")


@lru_cache(maxsize=None)
def subsets(k: int) -> tuple:
    """Basis of H^k: increasing k-subsets of the degree-one generators."""
    return tuple(itertools.combinations(range(RANK), k))


@dataclass(frozen=True)
class CohRing:
    """Exterior algebra on ``RANK`` generators with wedge-product sign rule."""

    rank: int = RANK

    def dims(self) -> tuple[int, ...]:
        return tuple(comb(self.rank, k) for k in range(self.rank + 1))

    @staticmethod
    def wedge(a: tuple, b: tuple) -> tuple[int, tuple]:
        """e_a ^ e_b = sign * e_(a u b); sign 0 when a and b overlap."""
        if set(a) & set(b):
            return 0, ()
        seq = list(a) + list(b)
        inversions = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
        return (-1) ** inversions, tuple(sorted(seq))


@dataclass(frozen=True)
class GradedEndo:
    """Degree-preserving endomorphism of H*, one square block per degree."""

    blocks: tuple

    def __post_init__(self):
        dims = CohRing().dims()
        if len(self.blocks) != len(dims) or any(b.shape != (d, d) for b, d in zip(self.blocks, dims)):
            raise ValueError("blocks do not match the graded dimensions")

    @classmethod
    def identity(cls) -> GradedEndo:
        return cls(tuple(linalg.identity(d) for d in CohRing().dims()))

    @classmethod
    def zero(cls) -> GradedEndo:
        return cls(tuple(linalg.zeros(d, d) for d in CohRing().dims()))

    @classmethod
    def scalars(cls, values) -> GradedEndo:
        return cls(tuple(linalg.identity(d) * linalg.q(v) for d, v in zip(CohRing().dims(), values)))

    @classmethod
    def pullback(cls, degree_one) -> GradedEndo:
        """The multiplicative extension: Lambda^k of the degree-one block."""
        return cls(tuple(exterior_power(degree_one, k) for k in range(RANK + 1)))

    def __add__(self, other: GradedEndo) -> GradedEndo:
        return GradedEndo(tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: GradedEndo) -> GradedEndo:
        return GradedEndo(tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def __matmul__(self, other: GradedEndo) -> GradedEndo:
        return GradedEndo(tuple(a * b for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c) -> GradedEndo:
        c = linalg.q(c)
        return GradedEndo(tuple(b * c for b in self.blocks))

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedEndo) and all(
            linalg.is_zero(a - b) for a, b in zip(self.blocks, other.blocks))

    def __hash__(self):
        return hash(tuple(tuple(map(tuple, b.to_list())) for b in self.blocks))

    def rank(self) -> int:
        return sum(linalg.rank(b) for b in self.blocks)

    def block_ranks(self) -> tuple[int, ...]:
        return tuple(linalg.rank(b) for b in self.blocks)


def exterior_power(m, k: int):
    """Matrix of Lambda^k m on the subset basis: entries are k x k minors.

    Minors are expanded along their first row with memoization, so all
    C(6, k)^2 of them cost a few thousand multiplications.
    """
    rows = m.to_list()
    basis = subsets(k)
    memo: dict = {((), ()): QQ(1)}

    def minor(r: tuple, c: tuple):
        key = (r, c)
        if key in memo:
            return memo[key]
        total = QQ(0)
        for t, col in enumerate(c):
            a = rows[r[0]][col]
            if a:
                sub = minor(r[1:], c[:t] + c[t + 1:])
                total += -a * sub if t % 2 else a * sub
        memo[key] = total
        return total

    return linalg.matrix([[minor(i, j) for j in basis] for i in basis], len(basis))


def mult_by(n: int) -> GradedEndo:
    """[n]^* acts on H^k by n^k."""
    return GradedEndo.scalars([QQ(n) ** k for k in range(RANK + 1)])


@dataclass(frozen=True)
class ProjectorSet:
    projectors: tuple  # Pi_0 .. Pi_6
    n: int

    def ranks(self) -> tuple[int, ...]:
        return tuple(p.rank() for p in self.projectors)

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectorSet) and all(
            a == b for a, b in zip(self.projectors, other.projectors))

    def __hash__(self):
        return hash(self.projectors)


@lru_cache(maxsize=None)
def kunneth_projectors(n: int = 2) -> ProjectorSet:
    """Pi_i = prod_{j != i} ([n]^* - n^j) / (n^i - n^j)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    mn = mult_by(n)
    ident = GradedEndo.identity()
    out = []
    for i in range(RANK + 1):
        p = ident
        for j in range(RANK + 1):
            if j != i:
                p = p @ (mn - ident.scale(QQ(n) ** j)).scale(1 / (QQ(n) ** i - QQ(n) ** j))
        out.append(p)
    return ProjectorSet(tuple(out), n)


def verify_projector_axioms(ps: ProjectorSet, n: int | None = None) -> bool:
    """Idempotent, pairwise orthogonal, summing to id, and [n]^* Pi_i = n^i Pi_i."""
    n = n or ps.n
    projs = ps.projectors
    zero = GradedEndo.zero()
    total = zero
    for i, p in enumerate(projs):
        if p @ p != p:
            return False
        for j, r in enumerate(projs):
            if i != j and p @ r != zero:
                return False
        if mult_by(n) @ p != p.scale(QQ(n) ** i):
            return False
        total = total + p
    return total == GradedEndo.identity()


def poincare_pairing_rank(i: int) -> int:
    """Rank of the cup product H^i x H^(6-i) -> H^6."""
    _check_degree(i)
    left, right = subsets(i), subsets(TOP - i)
    rows = [[CohRing.wedge(a, b)[0] for b in right] for a in left]
    return linalg.rank(linalg.matrix(rows, len(right)))


# --- CM by Z[w] ------------------------------------------------------------------

def omega_degree_one():
    """w on H^1 as three rational 2 x 2 blocks with minimal polynomial x^2 + x + 1."""
    rows = [[QQ(0)] * RANK for _ in range(RANK)]
    for b in range(GENUS):
        i = 2 * b
        rows[i][i + 1] = QQ(-1)
        rows[i + 1][i] = QQ(1)
        rows[i + 1][i + 1] = QQ(-1)
    return linalg.matrix(rows, RANK)


@lru_cache(maxsize=None)
def omega_action() -> GradedEndo:
    return GradedEndo.pullback(omega_degree_one())


@dataclass(frozen=True)
class CMDims:
    degree: int
    trivial: int  # eigenvalue 1
    omega: int  # eigenvalue w (equal to the w-bar part by Galois symmetry)
    omega_bar: int


def cm_splitting() -> list[CMDims]:
    """Eigenspace dimensions of w on every H^k, computed from Lambda^k of the rational block."""
    out = []
    for k, block in enumerate(omega_action().blocks):
        d = block.shape[0]
        ident = linalg.identity(d)
        trivial = d - linalg.rank(block - ident)
        nontrivial = d - linalg.rank(block * block + block + ident)
        if nontrivial % 2:
            raise ArithmeticError("conjugate eigenspaces must have equal dimension")
        out.append(CMDims(k, trivial, nontrivial // 2, nontrivial // 2))
    return out


def cm_dims_from_blocks(k: int) -> tuple[int, int]:
    """Eigenvalue-1 and w dims from Lambda^a V1 (x) Lambda^b V2, where w acts as w^(a-b)."""
    trivial = omega = 0
    for a, b, rep in tensor.lambda_k_blocks(k):
        if (a - b) % 3 == 0:
            trivial += rep.dim()
        elif (a - b) % 3 == 1:
            omega += rep.dim()
    return trivial, omega


def invariant_dims(k: int) -> int:
    """Dimension of monodromy invariants on H^k, i.e. trivial summands of Lambda^k(V1 + V2)."""
    if not 0 <= k <= TOP:
        raise OutOfRange(f"k = {k} outside 0..{TOP}")
    return tensor.trivial_summand_count(k)
