"""Neron-Severi lattices of E x E (E with CM by Z[w]) and of its blowup.

Basis of NS(E x E): T1 (diagonal), Tw (graph of w), A = 0 x E, B = E x 0.
The blowup X at the three triple points (Q_i, Q_i) adds the exceptional
curves Z1, Z2, Z3.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from sympy import QQ

from . import linalg


class LatticeError(Exception):
    pass


class AmbientMismatch(LatticeError):
    pass


class NonIntegralSolution(LatticeError):
    pass


class ZeroDivisor(LatticeError):
    pass


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w with w = exp(2 pi i / 3), so w^2 = -1 - w."""

    a: int
    b: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b


ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)


class Ambient(Enum):
    PRODUCT = "Product"
    BLOWUP = "Blowup"


PRODUCT_LABELS = ("T1", "Tw", "A", "B")
BLOWUP_LABELS = PRODUCT_LABELS + ("Z1", "Z2", "Z3")


def _product_gram() -> tuple[tuple[int, ...], ...]:
    # Graphs Gamma_phi meet as deg(phi - psi) = norm(phi - psi); a graph meets
    # A = 0 x E once and B = E x 0 in deg(phi) points; A.B = 1, A^2 = B^2 = 0.
    graphs = (ONE, OMEGA)
    rows = []
    for phi in graphs:
        rows.append(tuple((phi - psi).norm() for psi in graphs) + (1, phi.norm()))
    rows.append((1, 1, 0, 1))
    rows.append((ONE.norm(), OMEGA.norm(), 1, 0))
    return tuple(rows)


@dataclass(frozen=True)
class NSBasis:
    ambient: Ambient
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        assert len(self.gram) == n and all(len(r) == n for r in self.gram)
        assert all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(n))
        if self.determinant() == 0:
            raise LatticeError("degenerate Gram matrix")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def determinant(self) -> int:
        return int(linalg.matrix(self.gram).det())


@lru_cache(maxsize=None)
def product_basis() -> NSBasis:
    return NSBasis(Ambient.PRODUCT, PRODUCT_LABELS, _product_gram())


@lru_cache(maxsize=None)
def blowup_basis() -> NSBasis:
    g4 = _product_gram()
    rows = [list(r) + [0, 0, 0] for r in g4]
    for i in range(3):
        row = [0] * 7
        row[4 + i] = -1
        rows.append(row)
    return NSBasis(Ambient.BLOWUP, BLOWUP_LABELS, tuple(tuple(r) for r in rows))


def basis_for(ambient: Ambient) -> NSBasis:
    return product_basis() if ambient is Ambient.PRODUCT else blowup_basis()


@dataclass(frozen=True)
class DivisorClass:
    ambient: Ambient
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != basis_for(self.ambient).rank:
            raise ValueError(
                f"{self.ambient.value} classes have {basis_for(self.ambient).rank} coefficients"
            )

    def _check(self, other: DivisorClass) -> None:
        if self.ambient is not other.ambient:
            raise AmbientMismatch(f"{self.ambient.value} vs {other.ambient.value}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.ambient, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.ambient, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.ambient, tuple(-x for x in self.coeffs))

    def __rmul__(self, n: int) -> DivisorClass:
        return DivisorClass(self.ambient, tuple(n * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(basis_for(self.ambient).labels, self.coeffs))


def basis_class(label: str, ambient: Ambient = Ambient.PRODUCT) -> DivisorClass:
    labels = basis_for(ambient).labels
    return DivisorClass(ambient, tuple(int(label == x) for x in labels))


def zero(ambient: Ambient) -> DivisorClass:
    return DivisorClass(ambient, (0,) * basis_for(ambient).rank)


def intersect(x: DivisorClass, y: DivisorClass) -> int:
    x._check(y)
    g = basis_for(x.ambient).gram
    n = len(g)
    return sum(x.coeffs[i] * g[i][j] * y.coeffs[j] for i in range(n) for j in range(n))


def graph_class(phi: EisensteinInt) -> DivisorClass:
    """Class of the graph of phi in NS(E x E), solved from its intersection numbers."""
    basis = product_basis()
    target = [(phi - ONE).norm(), (phi - OMEGA).norm(), 1, phi.norm()]
    gram = linalg.matrix(basis.gram)
    rhs = linalg.matrix([[t] for t in target], 1)
    sol = [row[0] for row in linalg.solve(gram, rhs).to_list()]
    if any(c.denominator != 1 for c in sol):
        raise NonIntegralSolution(f"graph of {phi} has class {sol}")
    return DivisorClass(Ambient.PRODUCT, tuple(int(c.numerator) for c in sol))


def pullback(x: DivisorClass) -> DivisorClass:
    if x.ambient is not Ambient.PRODUCT:
        raise AmbientMismatch("pullback expects a class on E x E")
    return DivisorClass(Ambient.BLOWUP, x.coeffs + (0, 0, 0))


def _z(i: int) -> DivisorClass:
    return basis_class(f"Z{i}", Ambient.BLOWUP)


def z_total() -> DivisorClass:
    return _z(1) + _z(2) + _z(3)


def strict_transform_catalog() -> dict[str, DivisorClass]:
    """Boundary curves D1..D6 and the auxiliary D0 on the blowup.

    E x Q_i is identified with E x 0 in NS (the points differ by torsion).
    """
    t1 = pullback(basis_class("T1"))
    tw = pullback(basis_class("Tw"))
    tw2 = pullback(graph_class(OMEGA2))
    a = pullback(basis_class("A"))
    b = pullback(basis_class("B"))
    z = z_total()
    return {
        "D0": a - _z(1),
        "D1": t1 - z,
        "D2": tw - z,
        "D3": tw2 - z,
        "D4": b - _z(1),
        "D5": b - _z(2),
        "D6": b - _z(3),
    }


def boundary() -> DivisorClass:
    cat = strict_transform_catalog()
    total = zero(Ambient.BLOWUP)
    for i in range(1, 7):
        total = total + cat[f"D{i}"]
    return total


def canonical() -> DivisorClass:
    # sigma^* K_{ExE} = 0, plus one copy of each exceptional curve
    return z_total()


def canonical_plus_boundary() -> DivisorClass:
    return canonical() + boundary()


def l_class() -> DivisorClass:
    """L = sigma^*(0 x E) - Z + 2 sigma^*(E x 0)."""
    a = pullback(basis_class("A"))
    b = pullback(basis_class("B"))
    return a - z_total() + 2 * b


def catalog() -> dict[str, DivisorClass]:
    """All labelled classes used in scenario files and reports."""
    out: dict[str, DivisorClass] = {}
    for label in PRODUCT_LABELS:
        out[label] = basis_class(label)
    out["Tw2"] = graph_class(OMEGA2)
    for i in (1, 2, 3):
        out[f"Z{i}"] = _z(i)
    out.update(strict_transform_catalog())
    out["K"] = canonical()
    out["L"] = l_class()
    return out


def divide(x: DivisorClass, n: int) -> DivisorClass | None:
    if n == 0:
        raise ZeroDivisor("division by zero")
    if any(c % n for c in x.coeffs):
        return None
    return DivisorClass(x.ambient, tuple(c // n for c in x.coeffs))


def verify_relation(lhs: DivisorClass, rhs: DivisorClass) -> bool:
    """Numerical equivalence: lhs - rhs pairs to zero with every basis vector."""
    diff = lhs - rhs
    labels = basis_for(diff.ambient).labels
    return all(intersect(diff, basis_class(l, diff.ambient)) == 0 for l in labels)


@dataclass(frozen=True)
class PositivityReport:
    self_int: int
    degrees: dict

    def nonnegative_on_catalog(self) -> bool:
        return all(d >= 0 for d in self.degrees.values())


POSITIVITY_CURVES = ("D0", "D1", "D2", "D3", "D4", "D5", "D6", "Z1", "Z2", "Z3")


def positivity_report(x: DivisorClass) -> PositivityReport:
    """x^2 and x.C for each curve of the catalog.  Not a nefness proof."""
    if x.ambient is not Ambient.BLOWUP:
        raise AmbientMismatch("positivity is reported on the blowup")
    cat = catalog()
    degrees = {c: intersect(x, cat[c]) for c in POSITIVITY_CURVES}
    return PositivityReport(intersect(x, x), degrees)


def is_nondegenerate(ambient: Ambient) -> bool:
    return basis_for(ambient).determinant() != 0
