"""Curve-level cohomology: E: y^2 = x^3 - 1 over Q(i), line bundles on P^1 and
on elliptic curves, split bundles on the exceptional P^1's, and the registry of
imported vanishing theorems.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import isqrt

from sympy.polys.domains import QQ_I

# Gaussian rationals are sympy's QQ_I elements: GaussianRational(re, im).
GaussianRational = type(QQ_I(0, 1))


def gauss(re, im=0) -> GaussianRational:
    return QQ_I(re, im)


I = gauss(0, 1)


def format_gauss(z: GaussianRational) -> str:
    """a + b*i with rational parts, e.g. '0', '-i', '1/2 + 3i'."""
    re, im = z.x, z.y

    def q(v):
        return str(int(v.numerator)) if v.denominator == 1 else f"{int(v.numerator)}/{int(v.denominator)}"

    if not im:
        return q(re)
    mag = "" if abs(im) == 1 else q(abs(im))
    imag = f"{mag}i"
    if not re:
        return imag if im > 0 else f"-{imag}"
    return f"{q(re)} {'+' if im > 0 else '-'} {imag}"


class Infinity:
    """The point at infinity (0:1:0), identity of the group law."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinity"

    __str__ = __repr__

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


@dataclass(frozen=True)
class AffinePoint:
    x: GaussianRational
    y: GaussianRational

    def __post_init__(self):
        if not on_curve(self):
            raise ValueError(f"({self.x}, {self.y}) is not on y^2 = x^3 - 1")

    def __str__(self) -> str:
        return f"({format_gauss(self.x)}, {format_gauss(self.y)})"


EllipticPoint = AffinePoint | Infinity


def on_curve(p) -> bool:
    if p is INFINITY:
        return True
    return p.y * p.y == p.x * p.x * p.x - 1


def point(x, y) -> AffinePoint:
    return AffinePoint(QQ_I.convert(x) if not isinstance(x, GaussianRational) else x,
                       QQ_I.convert(y) if not isinstance(y, GaussianRational) else y)


Q1 = AffinePoint(gauss(0), gauss(0, 1))
Q2 = AffinePoint(gauss(0), gauss(0, -1))


def ec_neg(p):
    if p is INFINITY:
        return p
    return AffinePoint(p.x, -p.y)


def ec_add(p, q):
    if p is INFINITY:
        return q
    if q is INFINITY:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        # doubling; y != 0 here since p.y == q.y and p.y != -q.y
        lam = (3 * p.x * p.x) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return AffinePoint(x3, y3)


def ec_mul(n: int, p):
    if n < 0:
        return ec_mul(-n, ec_neg(p))
    acc = INFINITY
    base = p
    while n:
        if n & 1:
            acc = ec_add(acc, base)
        base = ec_add(base, base)
        n >>= 1
    return acc


def _gaussian_sqrt(z: GaussianRational) -> GaussianRational | None:
    """Square root of a Gaussian integer in Z[i], if one exists."""
    if z.x.denominator != 1 or z.y.denominator != 1:
        return None
    a, b = int(z.x), int(z.y)
    n = a * a + b * b
    r = isqrt(n)
    if r * r != n:
        return None
    # (u + vi)^2 = a + bi  =>  u^2 = (a + r)/2, v^2 = (r - a)/2
    if (a + r) % 2:
        return None
    u2, v2 = (a + r) // 2, (r - a) // 2
    u, v = isqrt(u2), isqrt(v2)
    if u * u != u2 or v * v != v2:
        return None
    if b < 0:
        v = -v
    root = gauss(u, v)
    return root if root * root == z else None


def search_points(bound: int = 3) -> list[AffinePoint]:
    """Affine points with Gaussian-integer x, |Re x|, |Im x| <= bound."""
    found = []
    for re, im in itertools.product(range(-bound, bound + 1), repeat=2):
        x = gauss(re, im)
        y = _gaussian_sqrt(x * x * x - 1)
        if y is None:
            continue
        found.append(AffinePoint(x, y))
        if y != gauss(0):
            found.append(AffinePoint(x, -y))
    return found


# --- cohomology of line bundles on curves ---------------------------------

@dataclass(frozen=True)
class CohDims:
    h0: int
    h1: int

    def __post_init__(self):
        if self.h0 < 0 or self.h1 < 0:
            raise ValueError("cohomology dimensions are nonnegative")

    @property
    def euler(self) -> int:
        return self.h0 - self.h1


def h_p1(n: int) -> CohDims:
    return CohDims(max(n + 1, 0), max(-n - 1, 0))


@dataclass(frozen=True)
class EllBundle:
    degree: int
    trivial: bool = False

    def __post_init__(self):
        if self.trivial and self.degree != 0:
            raise ValueError("only degree-0 bundles can be trivial")


def h_elliptic(b: EllBundle) -> CohDims:
    if b.degree > 0:
        return CohDims(b.degree, 0)
    if b.degree < 0:
        return CohDims(0, -b.degree)
    return CohDims(1, 1) if b.trivial else CohDims(0, 0)


# --- split bundles on P^1 ---------------------------------------------------

@dataclass(frozen=True)
class PSplit:
    """A direct sum of O(n_j) on P^1, kept as a sorted tuple of degrees."""

    degrees: tuple[int, ...]

    def __init__(self, degrees):
        object.__setattr__(self, "degrees", tuple(sorted(degrees)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def cohomology(self) -> CohDims:
        dims = [h_p1(n) for n in self.degrees]
        return CohDims(sum(d.h0 for d in dims), sum(d.h1 for d in dims))

    def __str__(self) -> str:
        return " + ".join(f"O({n})" for n in self.degrees) or "0"


def psplit_tensor(a: PSplit, b: PSplit) -> PSplit:
    return PSplit(x + y for x in a.degrees for y in b.degrees)


def psplit_sym(a: PSplit, k: int) -> PSplit:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return PSplit(sum(c) for c in itertools.combinations_with_replacement(a.degrees, k))


def psplit_wedge(a: PSplit, k: int) -> PSplit:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return PSplit(sum(c) for c in itertools.combinations(a.degrees, k))


def psplit_dual(a: PSplit) -> PSplit:
    return PSplit(-n for n in a.degrees)


Z_COMPONENTS = 3


def restriction_catalog() -> dict[str, PSplit]:
    """Restrictions to one exceptional P^1 (all three components agree)."""
    return {
        "W": PSplit((1, 2)),  # log cotangent bundle
        "L": PSplit((1,)),
        "N*": PSplit((1,)),  # conormal bundle
        "Omega1_Z": PSplit((-2,)),
        "K(D)": PSplit((3,)),
    }


def chase_h0_bound(sub: CohDims, quotient_h0: int) -> int:
    """h0(middle) <= h0(sub) + h0(quotient) for 0 -> sub -> middle -> quotient."""
    return sub.h0 + quotient_h0


# --- imported vanishing theorems --------------------------------------------

@dataclass(frozen=True)
class AxiomValue:
    """Asserted dimensions of one group; None means not asserted."""

    h0: int | None = None
    h1: int | None = None


@dataclass(frozen=True)
class Axiom:
    id: str
    groups: dict  # group tag -> AxiomValue
    citation: str


class AxiomRegistry:
    """Imported vanishing statements.  Never derived; lookups return the supplying id for the caller to record."""

    def __init__(self, axioms=()):
        self._axioms: dict[str, Axiom] = {}
        for ax in axioms:
            self.add(ax)

    def add(self, axiom: Axiom) -> None:
        if axiom.id in self._axioms:
            old = self._axioms[axiom.id]
            merged = dict(old.groups)
            merged.update(axiom.groups)
            axiom = Axiom(axiom.id, merged, old.citation)
        self._axioms[axiom.id] = axiom

    def __contains__(self, axiom_id: str) -> bool:
        return axiom_id in self._axioms

    def __iter__(self):
        return iter(self._axioms.values())

    def ids(self) -> list[str]:
        return list(self._axioms)

    def lookup(self, group: str, degree: int) -> tuple[int | None, str | None]:
        """Asserted h^degree of ``group`` and the axiom id supplying it."""
        for ax in self._axioms.values():
            val = ax.groups.get(group)
            if val is None:
                continue
            h = val.h0 if degree == 0 else val.h1 if degree == 1 else None
            if h is not None:
                return h, ax.id
        return None, None

    def subset(self, ids) -> AxiomRegistry:
        return AxiomRegistry(self._axioms[i] for i in ids if i in self._axioms)

    def to_rows(self) -> list[dict]:
        rows = []
        for ax in self._axioms.values():
            for group, val in ax.groups.items():
                rows.append({"id": ax.id, "group": group, "h0": val.h0,
                             "h1": val.h1, "citation": ax.citation})
        return rows

    @classmethod
    def from_rows(cls, rows) -> AxiomRegistry:
        reg = cls()
        for row in rows:
            reg.add(Axiom(row["id"],
                          {row["group"]: AxiomValue(row.get("h0"), row.get("h1"))},
                          row.get("citation", "")))
        return reg


def default_axioms() -> AxiomRegistry:
    return AxiomRegistry([
        Axiom("nef_big_dual",
              {"L^-1": AxiomValue(0, 0), "L^-2": AxiomValue(0, 0)},
              "Kawamata-Viehweg/Ramanujam vanishing: H^i(L^-k) = 0 for i < 2, L nef and big"),
        Axiom("bogomolov_sommese",
              {"W*L^-1": AxiomValue(h0=0)},
              "Bogomolov-Sommese vanishing in the Esnault-Viehweg form: "
              "H^0(Omega^1(log D) (x) L^-1) = 0 for L nef and big"),
        Axiom("miyaoka_s2",
              {"S2W*L^-2": AxiomValue(h0=0)},
              "generalisation of an example of Miyaoka: H^0(S^2 Omega^1(log D) (x) L^-2) = 0"),
        Axiom("li_schwermer",
              {"IH(End0V1)": AxiomValue(h1=0)},
              "Li-Schwermer: regular highest weight End0(V1) has cohomology "
              "only in the middle degree"),
    ])


@dataclass(frozen=True)
class ChaseResult:
    """Upper bound for h0 of a group via 0 -> sub -> middle -> restriction to Z."""

    group: str
    bound: int
    sub_h0: int
    quotient: PSplit
    quotient_h0_per_component: int
    components: int
    axioms_used: tuple[str, ...] = field(default_factory=tuple)

    @property
    def quotient_h0(self) -> int:
        return self.quotient_h0_per_component * self.components

    def describe(self) -> str:
        return f"h0({self.group}) <= {self.bound}"


def _restrict(sym: int, l_power: int) -> PSplit:
    """Restriction of S^sym W (x) Omega^1_Z (x) L^l_power to one component of Z."""
    cat = restriction_catalog()
    out = psplit_sym(cat["W"], sym)
    out = psplit_tensor(out, cat["Omega1_Z"])
    line = PSplit((cat["L"].degrees[0] * l_power,))
    return psplit_tensor(out, line)


def z_restriction_chase(sym: int, l_power: int, axioms: AxiomRegistry,
                        sub_group: str) -> ChaseResult:
    """Bound h0(S^sym W (x) Omega^1_X (x) L^l_power).

    Uses 0 -> sigma^* Omega^1_{ExE} -> Omega^1_X -> i_* Omega^1_Z -> 0 with
    sigma^* Omega^1_{ExE} trivial of rank 2, so the sub is two copies of
    ``sub_group``, whose h0 must come from an axiom.
    """
    h0, used = axioms.lookup(sub_group, 0)
    if h0 is None:
        raise KeyError(f"no axiom asserts h0({sub_group})")
    quotient = _restrict(sym, l_power)
    per = quotient.cohomology().h0
    sub = CohDims(2 * h0, 0)
    bound = chase_h0_bound(sub, per * Z_COMPONENTS)
    group = ("W" if sym == 1 else f"S{sym}W") + f"*Omega1*L^{l_power}"
    return ChaseResult(group, bound, sub.h0, quotient, per, Z_COMPONENTS, (used,))


def conormal_check(boundary_meets: int, l_degree: int) -> bool:
    """Consistency of the restriction constants on one exceptional curve.

    ``boundary_meets`` is D.Z_i and ``l_degree`` is L.Z_i, both taken from the
    lattice.  Checks deg W|_Z = deg N*_Z + deg Omega^1_Z(log D.Z), that
    det W|_Z = K(D)|_Z, that L|_Z matches L.Z_i, and that L^3|_Z = K(D)|_Z.
    """
    cat = restriction_catalog()
    log_omega = -2 + boundary_meets
    degrees_ok = sum(cat["W"].degrees) == cat["N*"].degrees[0] + log_omega
    det_ok = psplit_wedge(cat["W"], 2) == cat["K(D)"]
    l_ok = cat["L"].degrees == (l_degree,)
    l3_ok = PSplit((3 * l_degree,)) == cat["K(D)"]
    return degrees_ok and det_ok and l_ok and l3_ok


def multiset(split: PSplit) -> Counter:
    return Counter(split.degrees)
