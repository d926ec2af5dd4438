"""Schur functor calculus in rank 2 and 3, and the Lambda^k(V1 + V2) bookkeeping.

Products of Schur functors are decomposed by the subtraction method: expand
s_lambda * s_mu as a polynomial in r variables and peel off Schur polynomials
of the leading monomial until nothing is left.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

Partition = tuple[int, ...]
Poly = dict  # exponent tuple -> int


class LengthExceedsRank(ValueError):
    pass


class OutOfRange(ValueError):
    pass


def partition(parts) -> Partition:
    p = tuple(int(x) for x in parts if x)
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{parts} is not a partition")
    return p


def _check(lam: Partition, r: int) -> None:
    if len(lam) > r:
        raise LengthExceedsRank(f"{lam} has more than {r} rows")


def schur_dim(lam, r: int) -> int:
    """Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i) / (j - i)."""
    lam = partition(lam)
    _check(lam, r)
    padded = lam + (0,) * (r - len(lam))
    num = den = 1
    for i, j in itertools.combinations(range(r), 2):
        num *= padded[i] - padded[j] + j - i
        den *= j - i
    return num // den


def _ssyt(lam: Partition, r: int):
    """Semistandard tableaux of shape lam with entries 0..r-1, row by row."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: dict = {}

    def fill(k):
        if k == len(cells):
            yield dict(filling)
            return
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, r):
            filling[(i, j)] = v
            yield from fill(k + 1)
        filling.pop((i, j), None)

    yield from fill(0)


@lru_cache(maxsize=None)
def _schur_poly_cached(lam: Partition, r: int) -> tuple:
    poly: Counter = Counter()
    for t in _ssyt(lam, r):
        exps = [0] * r
        for v in t.values():
            exps[v] += 1
        poly[tuple(exps)] += 1
    return tuple(sorted(poly.items()))


def schur_poly(lam, r: int) -> Poly:
    lam = partition(lam)
    _check(lam, r)
    return dict(_schur_poly_cached(lam, r))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


@dataclass(frozen=True)
class SchurExpr:
    """Formal integer combination of Schur functors S^lambda of a rank-r space."""

    rank: int
    terms: tuple  # ((partition, coeff), ...) sorted, coeff != 0

    @classmethod
    def from_counter(cls, rank: int, counts) -> SchurExpr:
        items = sorted(((p, c) for p, c in counts.items() if c), reverse=True)
        return cls(rank, tuple(items))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def dim(self) -> int:
        return sum(c * schur_dim(p, self.rank) for p, c in self.terms)

    def __str__(self) -> str:
        parts = []
        for p, c in self.terms:
            label = "(" + ",".join(map(str, p)) + ")"
            parts.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(parts) or "0"


def decompose_poly(poly: Poly, r: int) -> SchurExpr:
    """Write a symmetric polynomial in r variables as a sum of Schur polynomials."""
    rest = dict(poly)
    counts: Counter = Counter()
    while rest:
        lead = max(rest)
        coeff = rest[lead]
        if tuple(sorted(lead, reverse=True)) != lead:
            raise ArithmeticError(f"leading exponent {lead} is not a partition")
        lam = partition(lead)
        if coeff < 0:
            raise ArithmeticError(f"negative Littlewood-Richardson coefficient at {lam}")
        counts[lam] += coeff
        for e, c in schur_poly(lam, r).items():
            v = rest.get(e, 0) - coeff * c
            if v:
                rest[e] = v
            else:
                rest.pop(e, None)
    return SchurExpr.from_counter(r, counts)


def decompose_product(lam, mu, r: int) -> SchurExpr:
    return decompose_poly(poly_mul(schur_poly(lam, r), schur_poly(mu, r)), r)


# --- local systems V1, V2 of rank 3 ----------------------------------------

REP_DIMS = {
    "triv": 1,
    "V1": 3, "V2": 3,
    "L2V1": 3, "L2V2": 3,
    "L3V1": 1, "L3V2": 1,
    "End0V1": 8,
    "S2V1": 6, "S2V2": 6,
}

# Lambda^2 V1 = V2 (rank 3, determinant one), Lambda^3 V_i = triv.
_AS_V = {"V1": "V1", "V2": "V2", "L2V1": "V2", "L2V2": "V1"}


@dataclass(frozen=True)
class RepExpr:
    terms: tuple  # ((tag, multiplicity), ...) sorted by tag

    @classmethod
    def from_counter(cls, counts) -> RepExpr:
        return cls(tuple(sorted((t, m) for t, m in counts.items() if m)))

    def as_counter(self) -> Counter:
        return Counter(dict(self.terms))

    def dim(self) -> int:
        return sum(m * REP_DIMS[t] for t, m in self.terms)

    def multiplicity(self, tag: str) -> int:
        return dict(self.terms).get(tag, 0)

    def __add__(self, other: RepExpr) -> RepExpr:
        return RepExpr.from_counter(self.as_counter() + other.as_counter())

    def __str__(self) -> str:
        return " + ".join(t if m == 1 else f"{m}*{t}" for t, m in self.terms) or "0"


def _exterior(i: int, a: int) -> str:
    """Lambda^a V_i as a tag."""
    return {0: "triv", 1: f"V{i}", 2: f"L2V{i}", 3: "triv"}[a]


def _tensor_tags(x: str, y: str) -> Counter:
    if x == "triv":
        return Counter({y: 1})
    if y == "triv":
        return Counter({x: 1})
    vx, vy = _AS_V[x], _AS_V[y]
    if vx != vy:
        # V1 (x) V2 = V1 (x) V1^dual = End(V1)
        return Counter({"triv": 1, "End0V1": 1})
    i = vx[-1]
    # V (x) V = S^2 V + Lambda^2 V
    return Counter({f"S2V{i}": 1, f"L2V{i}": 1})


def lambda_k_blocks(k: int) -> list[tuple[int, int, RepExpr]]:
    """Summands Lambda^a V1 (x) Lambda^b V2, a + b = k, each decomposed."""
    if not 0 <= k <= 6:
        raise OutOfRange(f"k = {k} outside 0..6")
    out = []
    for a in range(max(0, k - 3), min(3, k) + 1):
        b = k - a
        tags = _tensor_tags(_exterior(1, a), _exterior(2, b))
        out.append((a, b, RepExpr.from_counter(tags)))
    return out


def decompose_lambda_k(k: int) -> RepExpr:
    total = RepExpr(())
    for _, _, rep in lambda_k_blocks(k):
        total = total + rep
    return total


def trivial_summand_count(k: int) -> int:
    return decompose_lambda_k(k).multiplicity("triv")


def lambda_dims() -> tuple[int, ...]:
    return tuple(decompose_lambda_k(k).dim() for k in range(7))


def binomial_dims() -> tuple[int, ...]:
    return tuple(comb(6, k) for k in range(7))
