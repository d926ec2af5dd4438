"""Local L2 subcomplexes of S^n of the uniformizing Higgs bundle near the boundary.

Near a boundary point with coordinates z1, z2 the Higgs field is
theta = N1 dz1/z1 + N2 dz2 (smooth divisor z1 = 0) or
N1 dz1/z1 + N2 dz2/z2 (normal crossing z1 z2 = 0), acting on the fiber
spanned by v1 = dz1/z1 (x) v, v2 = dz2 (x) v (or dz2/z2 (x) v) and v.

L2 rule: the coefficient of (dz_i/z_i)^e_i lies in W_{-2 e_i}(N_i) + z_i * E,
intersected over the directions with a log pole.  Modules are kept in normal
form: the fiber subspace attached to every bidegree z1^a z2^b up to a bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from sympy import QQ

from . import linalg

DEFAULT_BOUND = 3
FORM_PARTS = ((0, 0), (1, 0), (0, 1), (1, 1))


class L2Error(Exception):
    pass


class NotNilpotent(L2Error):
    pass


class TruncationTooSmall(L2Error):
    pass


class Divisor(Enum):
    SMOOTH = "Smooth"
    NORMAL_CROSSING = "NormalCrossing"


@dataclass(frozen=True)
class NilpotentOp:
    matrix: object  # square DomainMatrix over QQ
    names: tuple = ()

    def __post_init__(self):
        n = self.dim
        if self.matrix.shape != (n, n):
            raise ValueError("nilpotent operator must be square")
        if not linalg.is_zero(linalg.power(self.matrix, n)):
            raise NotNilpotent("N^dim != 0")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def kernel(self) -> tuple:
        return linalg.nullspace(self.matrix)

    def image(self) -> tuple:
        return linalg.image(self.matrix, linalg.full(self.dim))

    def index(self) -> int:
        """Smallest k with N^k = 0."""
        k, m = 0, linalg.identity(self.dim)
        while not linalg.is_zero(m):
            m, k = m * self.matrix, k + 1
        return k


@dataclass
class WeightFiltration:
    """Gr_k representatives from a Jordan basis, and the filtration W_k itself."""

    dim: int
    graded: dict  # k -> RREF basis of the chosen Gr_k representatives
    strings: list  # [(length, [top, N top, ...])]

    def gr(self, k: int) -> tuple:
        return self.graded.get(k, ())

    def w(self, k: int) -> tuple:
        vecs = [v for j, basis in self.graded.items() if j <= k for v in basis]
        return linalg.span(vecs, self.dim)

    @property
    def weights(self) -> list[int]:
        return sorted(self.graded, reverse=True)

    def gr_dims(self) -> dict:
        return {k: len(v) for k, v in sorted(self.graded.items(), reverse=True)}

    def gr_matches(self, k: int, vectors) -> bool:
        """Whether ``vectors`` represent Gr_k, i.e. span it modulo W_{k-1}."""
        lower = self.w(k - 1)
        ours = linalg.add(lower, self.gr(k), self.dim)
        theirs = linalg.add(lower, linalg.span(vectors, self.dim), self.dim)
        return ours == theirs and len(linalg.span(vectors, self.dim)) == len(self.gr(k))


def weight_filtration(n: NilpotentOp) -> WeightFiltration:
    """Monodromy weight filtration centered at 0, via Jordan strings.

    A string of length l contributes weights l-1, l-3, ..., 1-l.  Tops are
    picked greedily, standard basis vectors first and then a kernel basis of
    N^l, so the result is deterministic.
    """
    dim, m = n.dim, n.matrix
    powers = [linalg.identity(dim)]
    while not linalg.is_zero(powers[-1]):
        powers.append(powers[-1] * m)
    ranks = [linalg.rank(p) for p in powers] + [0]
    counts = {l: ranks[l - 1] - 2 * ranks[l] + ranks[l + 1] for l in range(1, len(powers))}

    chosen: list = []
    strings = []
    for length in sorted(counts, reverse=True):
        need = counts[length]
        if not need:
            continue
        candidates = [tuple(QQ(int(i == j)) for j in range(dim)) for i in range(dim)]
        candidates += list(linalg.nullspace(powers[length]))
        for c in candidates:
            if not need:
                break
            if any(linalg.apply(powers[length], c)):
                continue
            chain = [tuple(c)]
            for _ in range(length - 1):
                chain.append(linalg.apply(m, chain[-1]))
            if len(linalg.span(chosen + chain, dim)) == len(chosen) + length:
                chosen += chain
                strings.append((length, chain))
                need -= 1
        if need:
            raise L2Error(f"could not find Jordan strings of length {length}")
    if len(chosen) != dim:
        raise L2Error("Jordan strings do not span the fiber")

    graded: dict = {}
    for length, chain in strings:
        for j, v in enumerate(chain):
            graded.setdefault(length - 1 - 2 * j, []).append(v)
    graded = {k: linalg.span(v, dim) for k, v in graded.items()}
    return WeightFiltration(dim, graded, strings)


# --- local models ------------------------------------------------------------

@dataclass(frozen=True)
class LocalModel:
    names: tuple
    n1: NilpotentOp
    n2: NilpotentOp
    divisor: Divisor
    power: int = 1

    @property
    def dim(self) -> int:
        return len(self.names)

    def log_directions(self) -> tuple[int, ...]:
        return (0,) if self.divisor is Divisor.SMOOTH else (0, 1)

    def commuting(self) -> bool:
        a, b = self.n1.matrix, self.n2.matrix
        return linalg.is_zero(a * b - b * a)

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def vector(self, name: str) -> tuple:
        return tuple(QQ(int(n == name)) for n in self.names)


def _base_model() -> tuple:
    # basis v1, v2, v with N1 v1 = v and N2 v2 = v
    n1 = linalg.matrix([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    n2 = linalg.matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    return n1, n2


def sym_local(n: int, divisor: Divisor = Divisor.SMOOTH) -> LocalModel:
    """Local model of S^n E with N1, N2 extended by the Leibniz rule."""
    if n < 1:
        raise ValueError("n must be at least 1")
    n1, n2 = _base_model()
    base = ("v1", "v2", "v")
    monos = linalg.sym_basis(3, n)
    names = tuple("⊙".join(base[i] for i in m) for m in monos)
    return LocalModel(names,
                      NilpotentOp(linalg.sym_derivation(n1, monos), names),
                      NilpotentOp(linalg.sym_derivation(n2, monos), names),
                      divisor, n)


def uniformizing_local(divisor: Divisor = Divisor.SMOOTH) -> LocalModel:
    return sym_local(1, divisor)


# --- modules over C[z1, z2] with fiber coefficients ----------------------------

@dataclass
class Coefficients:
    """Fiber subspace at each bidegree (a, b), 0 <= a, b <= bound."""

    dim: int
    bound: int
    spaces: dict  # (a, b) -> RREF basis

    @classmethod
    def from_generators(cls, dim: int, gens, bound: int = DEFAULT_BOUND) -> Coefficients:
        """z1^a z2^b * subspace terms; the span at (c, d) sums terms with (a, b) <= (c, d)."""
        spaces = {}
        for c in range(bound + 1):
            for d in range(bound + 1):
                vecs = [v for (a, b), sub in gens if a <= c and b <= d for v in sub]
                spaces[(c, d)] = linalg.span(vecs, dim)
        return cls(dim, bound, spaces)

    def at(self, a: int, b: int) -> tuple:
        a, b = min(a, self.bound), min(b, self.bound)
        return self.spaces[(a, b)]

    def z_stable(self) -> bool:
        for (a, b), sub in self.spaces.items():
            for nxt in ((a + 1, b), (a, b + 1)):
                if max(nxt) <= self.bound and not linalg.is_subspace(sub, self.spaces[nxt], self.dim):
                    return False
        return True

    def generators(self) -> list:
        """Bidegrees where the module grows, with the subspace there."""
        out = []
        for (a, b), sub in sorted(self.spaces.items()):
            below = linalg.add(self.at(a - 1, b) if a else (), self.at(a, b - 1) if b else (), self.dim)
            if len(sub) > len(below):
                out.append(((a, b), sub))
        return out


@dataclass
class LocalL2Module:
    """Coefficient modules of the form parts (e1, e2) in one form degree."""

    degree: int
    parts: dict  # (e1, e2) -> Coefficients
    names: tuple = field(default=())

    def serialize(self) -> list:
        rows = []
        for part, coeffs in sorted(self.parts.items()):
            for (a, b), sub in coeffs.generators():
                rows.append([part[0], part[1], f"z1^{a}*z2^{b}",
                             [[linalg.fmt(x) for x in v] for v in sub]])
        return rows


def _parts_for(degree: int) -> list:
    return [p for p in FORM_PARTS if sum(p) == degree]


def rule_coefficients(model: LocalModel, part: tuple, bound: int = DEFAULT_BOUND,
                      filtrations=None) -> Coefficients:
    """Apply the L2 rule to the form part (e1, e2)."""
    dim = model.dim
    if filtrations is None:
        filtrations = [weight_filtration(model.n1), weight_filtration(model.n2)]
    by_pattern: dict = {}  # the rule only sees which of a, b vanish
    spaces = {}
    for a in range(bound + 1):
        for b in range(bound + 1):
            pattern = (a == 0, b == 0)
            if pattern not in by_pattern:
                sub = linalg.full(dim)
                for i in model.log_directions():
                    if pattern[i]:
                        sub = linalg.intersect(sub, filtrations[i].w(-2 * part[i]), dim)
                by_pattern[pattern] = sub
            spaces[(a, b)] = by_pattern[pattern]
    return Coefficients(dim, bound, spaces)


def l2_subcomplex(model: LocalModel, bound: int = DEFAULT_BOUND) -> list[LocalL2Module]:
    if not model.commuting():
        raise L2Error("theta wedge theta != 0")
    filtrations = [weight_filtration(model.n1), weight_filtration(model.n2)]
    return [LocalL2Module(deg, {p: rule_coefficients(model, p, bound, filtrations)
                                for p in _parts_for(deg)}, model.names)
            for deg in range(3)]


def _maps_into(op, source: tuple, target: tuple, dim: int) -> bool:
    return linalg.is_subspace(linalg.image(op, source), target, dim)


def theta_stable(modules: list, model: LocalModel, bound: int = DEFAULT_BOUND) -> bool:
    """theta(Omega^0) in Omega^1 and theta(Omega^1) in Omega^2, bidegree by bidegree.

    theta(f) = N1 f e1 + N2 f e2 and theta(g e1 + h e2) = (N1 h - N2 g) e1 ^ e2,
    where e_i is the i-th form (dz1/z1, and dz2 or dz2/z2).
    """
    if bound < 2:
        raise TruncationTooSmall(f"bound {bound} < 2")
    dim = model.dim
    n1, n2 = model.n1.matrix, model.n2.matrix
    m0, m1, m2 = modules
    seen = set()
    for a in range(bound + 1):
        for b in range(bound + 1):
            f = m0.parts[(0, 0)].at(a, b)
            g = m1.parts[(1, 0)].at(a, b)
            h = m1.parts[(0, 1)].at(a, b)
            top = m2.parts[(1, 1)].at(a, b)
            if (f, g, h, top) in seen:
                continue
            seen.add((f, g, h, top))
            if not (_maps_into(n1, f, g, dim) and _maps_into(n2, f, h, dim)
                    and _maps_into(n2, g, top, dim) and _maps_into(n1, h, top, dim)):
                return False
    return True


def module_equal(a: LocalL2Module, b: LocalL2Module, bound: int = DEFAULT_BOUND) -> bool:
    """Per-bidegree equality up to ``bound``; every generator here has degree <= 2."""
    if bound < 2:
        raise TruncationTooSmall(f"bound {bound} < 2")
    if set(a.parts) != set(b.parts):
        return False
    return all(a.parts[p].at(i, j) == b.parts[p].at(i, j)
               for p in a.parts for i in range(bound + 1) for j in range(bound + 1))


# --- closed forms as written down for E and S^2 E ------------------------------

def _sym_span(model: LocalModel, factors: list) -> tuple:
    """Span of products x1 . ... . xn with x_i running over the given subspaces of E."""
    monos = linalg.sym_basis(3, model.power)
    vecs = [linalg.sym_product(choice, monos) for choice in itertools.product(*factors)]
    return linalg.span(vecs, model.dim)


def published_closed_forms(model: LocalModel, bound: int = DEFAULT_BOUND) -> list[LocalL2Module]:
    """Hand-written generators for E (both divisors) and S^2 E (smooth)."""
    dim = model.dim
    full = linalg.full(dim)
    base = uniformizing_local(model.divisor)
    ker1, ker2 = model.n1.kernel(), model.n2.kernel()

    def mod(deg, parts):
        return LocalL2Module(deg, {p: Coefficients.from_generators(dim, g, bound)
                                   for p, g in parts.items()}, model.names)

    if model.power == 1 and model.divisor is Divisor.SMOOTH:
        return [
            mod(0, {(0, 0): [((0, 0), ker1), ((1, 0), full)]}),
            mod(1, {(1, 0): [((1, 0), full)], (0, 1): [((0, 0), ker1), ((1, 0), full)]}),
            mod(2, {(1, 1): [((1, 0), full)]}),
        ]
    if model.power == 1:
        both = linalg.intersect(ker1, ker2, dim)
        return [
            mod(0, {(0, 0): [((0, 0), both), ((0, 1), ker1), ((1, 0), ker2)]}),
            mod(1, {(1, 0): [((1, 0), ker2), ((1, 1), ker1)],
                    (0, 1): [((0, 1), ker1), ((1, 1), ker2)]}),
            mod(2, {(1, 1): [((1, 1), full)]}),
        ]
    if model.power == 2 and model.divisor is Divisor.SMOOTH:
        e = linalg.full(3)
        im1 = base.n1.image()
        bk1 = base.n1.kernel()
        zero_deg = linalg.add(_sym_span(model, [e, im1]), _sym_span(model, [bk1, bk1]), dim)
        s2im = _sym_span(model, [im1, im1])
        return [
            mod(0, {(0, 0): [((0, 0), zero_deg), ((1, 0), full)]}),
            mod(1, {(1, 0): [((0, 0), s2im), ((1, 0), full)],
                    (0, 1): [((0, 0), zero_deg), ((1, 0), full)]}),
            mod(2, {(1, 1): [((0, 0), s2im), ((1, 0), full)]}),
        ]
    raise L2Error("no closed form is written down for this model")
