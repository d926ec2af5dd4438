"""Logarithmic Higgs complexes of the uniformizing bundle and its relatives.

Bundles are formal monomials S^s W (x) (Lambda^2 W)^c (x) L^l with W the log
cotangent bundle (rank 2).  Since K(D) = Lambda^2 W = L^3, monomials are
compared after folding c into l.

Differential entries are labels only (zero / iso / canonical).  The labels
are not assigned by hand: every Higgs bundle carries a fiber model, a GL(W)
representation with torus weights, raising/lowering operators and the Higgs
field theta = theta_x dx + theta_y dy.  Summands are cut out by highest weight
vectors and each label is the rank of the corresponding block of the actual
differential.  Reduction then works on labels alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from sympy import QQ

from . import linalg
from .curves import AxiomRegistry, ChaseResult


class HiggsError(Exception):
    pass


class SquareNotZero(HiggsError):
    pass


class NonzeroCorrection(HiggsError):
    pass


ZERO, ISO, CANONICAL = "zero", "iso", "canonical"
THIRD = QQ(1, 3)


# --- monomials ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Monomial:
    """S^s W (x) (Lambda^2 W)^c (x) L^l; equality is up to Lambda^2 W = L^3."""

    s: int
    c: int = 0
    l: int = 0

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("symmetric power must be nonnegative")

    @property
    def key(self) -> tuple[int, int]:
        return (self.s, self.l + 3 * self.c)

    def normalized(self) -> Monomial:
        return Monomial(self.s, 0, self.l + 3 * self.c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def rank(self) -> int:
        return self.s + 1

    def _render(self, s: int, c: int, l: int) -> str:
        parts = []
        if s == 1:
            parts.append("W")
        elif s > 1:
            parts.append(f"S{s}W")
        if c == 1:
            parts.append("Λ2W")
        elif c:
            parts.append(f"(Λ2W)^{c}")
        if l:
            parts.append(f"L^{l}")
        return "*".join(parts) or "O"

    def __str__(self) -> str:
        s, l = self.key
        return self._render(s, 0, l)

    def expanded(self) -> str:
        return self._render(self.s, self.c, self.l)

    def __repr__(self) -> str:
        return f"Monomial({self.expanded()})"


# --- fiber models ------------------------------------------------------------

def _kron_sum(x, y):
    """x (x) 1 + 1 (x) y for square DomainMatrices x, y."""
    m, n = x.shape[0], y.shape[0]
    xs, ys = x.to_list(), y.to_list()
    rows = [[QQ(0)] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(m):
            if xs[i][j]:
                for k in range(n):
                    rows[i * n + k][j * n + k] += xs[i][j]
    for k in range(n):
        for l in range(n):
            if ys[k][l]:
                for i in range(m):
                    rows[i * n + k][i * n + l] += ys[k][l]
    return linalg.matrix(rows, m * n)


@dataclass
class FiberRep:
    """A weight basis for a GL(W)-representation carrying a Higgs field."""

    names: list
    weights: list  # (wx, wy) in QQ, torus weights with dx -> (1,0), L -> (1/3,1/3)
    hodge: list  # (p, q)
    raise_: object  # e: dy -> dx
    lower: object  # f: dx -> dy
    theta_x: object
    theta_y: object

    @property
    def dim(self) -> int:
        return len(self.names)

    def tensor(self, other: FiberRep) -> FiberRep:
        names = [f"{a}⊗{b}" for a in self.names for b in other.names]
        weights = [(a[0] + b[0], a[1] + b[1]) for a in self.weights for b in other.weights]
        hodge = [(a[0] + b[0], a[1] + b[1]) for a in self.hodge for b in other.hodge]
        return FiberRep(names, weights, hodge,
                        _kron_sum(self.raise_, other.raise_),
                        _kron_sum(self.lower, other.lower),
                        _kron_sum(self.theta_x, other.theta_x),
                        _kron_sum(self.theta_y, other.theta_y))

    def dual(self) -> FiberRep:
        def neg_t(m):
            return -m.transpose()

        return FiberRep([f"{n}^" for n in self.names],
                        [(-a, -b) for a, b in self.weights],
                        [(-p, -q) for p, q in self.hodge],
                        neg_t(self.raise_), neg_t(self.lower),
                        neg_t(self.theta_x), neg_t(self.theta_y))

    def sym(self, n: int) -> FiberRep:
        monos = linalg.sym_basis(self.dim, n)
        names = ["⊙".join(self.names[i] for i in m) for m in monos]
        weights = [(sum((self.weights[i][0] for i in m), QQ(0)),
                    sum((self.weights[i][1] for i in m), QQ(0))) for m in monos]
        hodge = [(sum(self.hodge[i][0] for i in m), sum(self.hodge[i][1] for i in m))
                 for m in monos]
        return FiberRep(names, weights, hodge,
                        linalg.sym_derivation(self.raise_, monos),
                        linalg.sym_derivation(self.lower, monos),
                        linalg.sym_derivation(self.theta_x, monos),
                        linalg.sym_derivation(self.theta_y, monos))

    def restrict(self, vectors, names=None) -> FiberRep:
        """Subrepresentation spanned by weight- and Hodge-homogeneous ``vectors``."""
        b = linalg.matrix([list(v) for v in vectors], self.dim).transpose()
        left_inv = (b.transpose() * b).inv() * b.transpose()

        def conj(m):
            out = left_inv * m * b
            if not linalg.is_zero(b * out - m * b):
                raise HiggsError("subspace is not invariant")
            return out

        weights, hodge = [], []
        for v in vectors:
            support = [i for i, x in enumerate(v) if x]
            ws = {self.weights[i] for i in support}
            hs = {self.hodge[i] for i in support}
            if len(ws) != 1 or len(hs) != 1:
                raise HiggsError("restriction needs homogeneous vectors")
            weights.append(ws.pop())
            hodge.append(hs.pop())
        names = names or [f"u{i}" for i in range(len(vectors))]
        return FiberRep(list(names), weights, hodge, conj(self.raise_), conj(self.lower),
                        conj(self.theta_x), conj(self.theta_y))

    def commutator_zero(self) -> bool:
        """theta wedge theta = 0, i.e. [theta_x, theta_y] = 0."""
        return linalg.is_zero(self.theta_x * self.theta_y - self.theta_y * self.theta_x)

    def is_equivariant(self) -> bool:
        """theta: F -> F (x) W commutes with the gl(W) action.

        With e(dy) = dx and f(dx) = dy this reads
        [theta_x, e] = theta_y, [theta_y, e] = 0, [theta_x, f] = 0, [theta_y, f] = theta_x.
        """
        tx, ty, e, f = self.theta_x, self.theta_y, self.raise_, self.lower
        return (linalg.is_zero(tx * e - e * tx - ty) and linalg.is_zero(ty * e - e * ty)
                and linalg.is_zero(tx * f - f * tx) and linalg.is_zero(ty * f - f * ty - tx))


def _forms(degree: int) -> FiberRep:
    """Lambda^degree W as a representation with zero Higgs field."""
    z = QQ(0)
    if degree == 0:
        m = linalg.zeros(1, 1)
        return FiberRep(["1"], [(z, z)], [(0, 0)], m, m, m, m)
    if degree == 1:
        e = linalg.matrix([[0, 1], [0, 0]])
        f = linalg.matrix([[0, 0], [1, 0]])
        m = linalg.zeros(2, 2)
        return FiberRep(["dx", "dy"], [(QQ(1), z), (z, QQ(1))], [(0, 0), (0, 0)], e, f, m, m)
    if degree == 2:
        m = linalg.zeros(1, 1)
        return FiberRep(["dx∧dy"], [(QQ(1), QQ(1))], [(0, 0)], m, m, m, m)
    raise ValueError("W has rank 2")


def _uniformizing_fiber() -> FiberRep:
    # basis dx(x)v, dy(x)v, v with v a generator of L^-1
    lw = (-THIRD, -THIRD)
    weights = [(1 + lw[0], lw[1]), (lw[0], 1 + lw[1]), lw]
    hodge = [(1, 0), (1, 0), (0, 1)]
    e = linalg.matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    f = linalg.matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    tx = linalg.matrix([[0, 0, 0], [0, 0, 0], [1, 0, 0]])
    ty = linalg.matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    return FiberRep(["dx⊗v", "dy⊗v", "v"], weights, hodge, e, f, tx, ty)


# --- decomposition into irreducible summands ---------------------------------

@dataclass
class Block:
    """An irreducible summand S^s W (x) L^l inside a fiber, with explicit basis."""

    monomial: Monomial
    hodge: tuple
    basis: list  # vectors in the ambient coordinates
    weights: list


def _monomial_from_weight(w) -> tuple[int, int]:
    a, b = w
    s = a - b
    l = 3 * b
    if s.denominator != 1 or s < 0 or l.denominator != 1:
        raise HiggsError(f"weight {w} is not a highest weight")
    return int(s), int(l)


def _decompose(rep: FiberRep, vectors, weights, hodge) -> list[Block]:
    """Split the invariant span of weight vectors into irreducible blocks."""
    groups: dict = {}
    for v, w, h in zip(vectors, weights, hodge):
        groups.setdefault((w, h), []).append(v)
    blocks = []
    for (w, h), vecs in sorted(groups.items(), key=lambda kv: (-kv[0][1][0], kv[0][0])):
        images = [linalg.apply(rep.raise_, v) for v in vecs]
        m = linalg.matrix(images, rep.dim).transpose()
        for coeffs in linalg.nullspace(m):
            u = [QQ(0)] * rep.dim
            for c, v in zip(coeffs, vecs):
                if c:
                    u = [x + c * y for x, y in zip(u, v)]
            s, l = _monomial_from_weight(w)
            chain, cw = [tuple(u)], [w]
            for k in range(s):
                chain.append(linalg.apply(rep.lower, chain[-1]))
                cw.append((w[0] - k - 1, w[1] + k + 1))
            blocks.append(Block(Monomial(s, 0, l), h, chain, cw))
    total = sum(len(b.basis) for b in blocks)
    if total != len(vectors):
        raise HiggsError("irreducible decomposition does not exhaust the space")
    return blocks


def _unit(n: int, i: int) -> tuple:
    return tuple(QQ(int(i == j)) for j in range(n))


# --- Higgs bundles -----------------------------------------------------------

@dataclass
class HiggsBundle:
    """A graded bundle (pieces with Hodge tags) with its Higgs field."""

    name: str
    fiber: FiberRep
    weight: int  # p + q on every piece

    @cached_property
    def pieces(self) -> list[Block]:
        rep = self.fiber
        n = rep.dim
        blocks = _decompose(rep, [_unit(n, i) for i in range(n)], rep.weights, rep.hodge)
        blocks.sort(key=lambda b: (-b.hodge[0], -b.monomial.s, b.monomial.key[1]))
        return blocks

    def graded_ranks(self) -> tuple[int, ...]:
        return tuple(b.monomial.rank for b in self.pieces)

    @property
    def rank(self) -> int:
        return self.fiber.dim

    def theta_labels(self) -> dict:
        """(source piece, target piece) -> canonical for every nonzero component."""
        return dict(self._theta)

    @cached_property
    def _theta(self) -> dict:
        cx = build_complex(self, check=False)
        out = {}
        for (src, tgt), lab in cx.entries.items():
            a, b = cx.summand(src), cx.summand(tgt)
            if a.degree == 0 and lab != ZERO:
                out[(a.origin, b.origin)] = CANONICAL
        return out

    def strict_hodge(self) -> bool:
        """theta lowers p by exactly one."""
        return all(self.pieces[t].hodge[0] == self.pieces[s].hodge[0] - 1
                   for s, t in self.theta_labels())


def uniformizing() -> HiggsBundle:
    """E = (W (x) L^-1) + L^-1 with theta the identity W (x) L^-1 -> L^-1 (x) W."""
    return HiggsBundle("E", _uniformizing_fiber(), 1)


def sym_power(h: HiggsBundle, n: int) -> HiggsBundle:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return h
    return HiggsBundle(f"S{n}{h.name}", h.fiber.sym(n), n * h.weight)


def end0(h: HiggsBundle) -> HiggsBundle:
    """Trace-free endomorphisms, E (x) E^dual minus the identity line."""
    rep = h.fiber.tensor(h.fiber.dual())
    n = h.fiber.dim
    trace = [QQ(int(i == j)) for i in range(n) for j in range(n)]
    groups: dict = {}
    for idx, (w, hd) in enumerate(zip(rep.weights, rep.hodge)):
        groups.setdefault((w, hd), []).append(idx)
    vectors, names = [], []
    for key in sorted(groups, key=lambda k: (k[0], k[1])):
        idxs = groups[key]
        if any(trace[i] for i in idxs):
            # kernel of the trace functional inside this weight space
            m = linalg.matrix([[trace[i] for i in idxs]], len(idxs))
            for coeffs in linalg.nullspace(m):
                v = [QQ(0)] * rep.dim
                for c, i in zip(coeffs, idxs):
                    v[i] = c
                vectors.append(tuple(v))
                names.append("+".join(f"{c}*{rep.names[i]}" for c, i in zip(coeffs, idxs) if c))
        else:
            for i in idxs:
                vectors.append(_unit(rep.dim, i))
                names.append(rep.names[i])
    return HiggsBundle(f"End0({h.name})", rep.restrict(vectors, names), 0)


# --- complexes ---------------------------------------------------------------

@dataclass(frozen=True)
class Summand:
    id: int
    degree: int
    monomial: Monomial
    origin: int  # index of the Higgs piece it comes from
    hodge: tuple

    @property
    def rank(self) -> int:
        return self.monomial.rank


@dataclass
class HComplex:
    """Length-3 complex of summands with labelled differential entries.

    ``entries`` maps (source id, target id) to iso or canonical; absent pairs
    are zero.
    """

    summands: tuple
    entries: dict
    name: str = ""
    contractions: tuple = ()

    def summand(self, sid: int) -> Summand:
        for s in self.summands:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def objects(self) -> list[list[Summand]]:
        return [[s for s in self.summands if s.degree == i] for i in range(3)]

    def ranks(self) -> tuple[int, int, int]:
        return tuple(sum(s.rank for s in obj) for obj in self.objects())

    def euler(self) -> int:
        return sum((-1) ** i * r for i, r in enumerate(self.ranks()))

    def label(self, src: int, tgt: int) -> str:
        return self.entries.get((src, tgt), ZERO)

    def is_minimal(self) -> bool:
        return not self.entries

    def serialize(self) -> list[list[str]]:
        return [[str(s.monomial) for s in obj] for obj in self.objects()]

    def serialize_expanded(self) -> list[list[str]]:
        return [[s.monomial.expanded() for s in obj] for obj in self.objects()]

    def square_zero_labels(self) -> bool:
        """Every length-two path is absent or has a partner path that may cancel it."""
        objs = self.objects()
        for x in objs[0]:
            for z in objs[2]:
                paths = [y for y in objs[1]
                         if self.label(x.id, y.id) != ZERO and self.label(y.id, z.id) != ZERO]
                if len(paths) == 1:
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "objects": self.serialize(),
            "objects_expanded": self.serialize_expanded(),
            "entries": [[self.summand(a).monomial.expanded(), self.summand(b).monomial.expanded(),
                         lab] for (a, b), lab in sorted(self.entries.items())],
        }


def _label(block) -> str:
    rows = len(block)
    cols = len(block[0]) if rows else 0
    if rows == 0 or cols == 0:
        return ZERO
    r = linalg.rank(linalg.matrix(block, cols))
    if r == 0:
        return ZERO
    if r == rows == cols:
        return ISO
    return CANONICAL


def _differential(rep: FiberRep, degree: int):
    """Matrix of theta wedge - : F (x) Lambda^degree W -> F (x) Lambda^(degree+1) W."""
    n = rep.dim
    tx, ty = rep.theta_x.to_list(), rep.theta_y.to_list()
    if degree == 0:
        # f -> theta_x f (x) dx + theta_y f (x) dy
        rows = [[QQ(0)] * n for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                rows[2 * i][j] = tx[i][j]
                rows[2 * i + 1][j] = ty[i][j]
        return linalg.matrix(rows, n)
    if degree == 1:
        # f (x) dx -> -theta_y f (x) dx^dy ; f (x) dy -> theta_x f (x) dx^dy
        rows = [[QQ(0)] * (2 * n) for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[i][2 * j] = -ty[i][j]
                rows[i][2 * j + 1] = tx[i][j]
        return linalg.matrix(rows, 2 * n)
    raise ValueError("differentials exist in degrees 0 and 1")


def build_complex(h: HiggsBundle, check: bool = True) -> HComplex:
    """E -> E (x) W -> E (x) Lambda^2 W with labels read off the fiber model."""
    rep = h.fiber
    if check and not rep.commutator_zero():
        raise SquareNotZero(f"theta wedge theta != 0 on {h.name}")
    pieces = h.pieces
    summands, bases = [], []
    sid = 0
    for degree in range(3):
        forms = _forms(degree)
        obj = rep.tensor(forms)
        nf = forms.dim
        deg_bases = []
        for origin, piece in enumerate(pieces):
            vectors, weights, hodge = [], [], []
            for v, w in zip(piece.basis, piece.weights):
                for k in range(nf):
                    vec = [QQ(0)] * obj.dim
                    for i, x in enumerate(v):
                        if x:
                            vec[i * nf + k] = x
                    vectors.append(tuple(vec))
                    fw = forms.weights[k]
                    weights.append((w[0] + fw[0], w[1] + fw[1]))
                    hodge.append(piece.hodge)
            blocks = _decompose(obj, vectors, weights, hodge)
            blocks.sort(key=lambda b: (-b.monomial.s, b.monomial.key[1]))
            for b in blocks:
                mono = b.monomial
                shift = mono.key[1] - piece.monomial.key[1]
                display = Monomial(mono.s, shift // 3, mono.key[1] - shift) if shift % 3 == 0 else mono
                summands.append(Summand(sid, degree, display, origin, piece.hodge))
                deg_bases.append((sid, b.basis))
                sid += 1
        bases.append(deg_bases)

    entries = {}
    for degree in range(2):
        d = _differential(rep, degree)
        tgt = bases[degree + 1]
        cols = [v for _, basis in tgt for v in basis]
        change = linalg.matrix(cols, len(cols[0])).transpose()
        inv = change.inv()
        offsets, pos = {}, 0
        for t_id, basis in tgt:
            offsets[t_id] = (pos, pos + len(basis))
            pos += len(basis)
        for s_id, basis in bases[degree]:
            src = linalg.matrix(basis, len(basis[0])).transpose()
            coords = (inv * d * src).to_list()
            for t_id, (lo, hi) in offsets.items():
                lab = _label(coords[lo:hi])
                if lab != ZERO:
                    entries[(s_id, t_id)] = lab
    cx = HComplex(tuple(summands), entries, h.name)
    if check:
        d0, d1 = _differential(rep, 0), _differential(rep, 1)
        if not linalg.is_zero(d1 * d0) or not cx.square_zero_labels():
            raise SquareNotZero(f"d1 d0 != 0 for {h.name}")
    return cx


def legal_contractions(c: HComplex) -> list[tuple[int, int]]:
    """Iso entries whose Gaussian-elimination corrections all vanish at label level."""
    out = []
    for (a, b), lab in sorted(c.entries.items()):
        if lab != ISO:
            continue
        if not _corrections(c, a, b):
            out.append((a, b))
    return out


def _corrections(c: HComplex, a: int, b: int) -> list[tuple[int, int]]:
    """Pairs (x, y) whose entry would change by d(x->b) iso^-1 d(a->y)."""
    xs = [x for (x, t) in c.entries if t == b and x != a]
    ys = [y for (s, y) in c.entries if s == a and y != b]
    return [(x, y) for x in xs for y in ys]


def contract(c: HComplex, a: int, b: int) -> HComplex:
    if c.label(a, b) != ISO:
        raise HiggsError("only iso entries can be contracted")
    bad = _corrections(c, a, b)
    if bad:
        raise NonzeroCorrection(
            f"contracting {c.summand(a).monomial} -> {c.summand(b).monomial} "
            f"needs {len(bad)} nonzero correction term(s)")
    summands = tuple(s for s in c.summands if s.id not in (a, b))
    entries = {k: v for k, v in c.entries.items() if a not in k and b not in k}
    return HComplex(summands, entries, c.name, c.contractions + ((a, b),))


def reduce(c: HComplex) -> HComplex:
    """Contract iso entries until every differential is zero."""
    while c.entries:
        legal = legal_contractions(c)
        if not legal:
            raise NonzeroCorrection(
                f"{c.name}: no contraction with vanishing corrections; "
                f"remaining entries {sorted(c.entries.values())}")
        c = contract(c, *legal[0])
    return c


def reduction_outcomes(c: HComplex) -> set:
    """Surviving monomial multisets over every legal contraction order."""
    if not c.entries:
        return {tuple(tuple(sorted(str(s.monomial) for s in obj)) for obj in c.objects())}
    out = set()
    for a, b in legal_contractions(c):
        out |= reduction_outcomes(contract(c, a, b))
    return out


# --- hypercohomology of minimal complexes ------------------------------------

@dataclass(frozen=True)
class Term:
    q: int  # sheaf cohomology degree
    monomial: Monomial
    summand_degree: int

    def __str__(self) -> str:
        return f"h^{self.q}({self.monomial})"


@dataclass
class DegreeResult:
    degree: int
    residue: list  # Terms not settled by axioms
    axioms_used: list

    @property
    def vanishes(self) -> bool:
        return not self.residue

    def to_dict(self) -> dict:
        return {"degree": self.degree,
                "value": 0 if self.vanishes else " + ".join(map(str, self.residue)),
                "axioms_used": self.axioms_used}


def hypercoh(c: HComplex, axioms: AxiomRegistry) -> list[DegreeResult]:
    """H^i = sum_j H^(i - deg_j)(summand_j) for a complex with zero differentials."""
    if not c.is_minimal():
        raise HiggsError("hypercohomology needs a reduced complex")
    out = []
    for i in range(5):
        residue, used = [], []
        for s in c.summands:
            q = i - s.degree
            if not 0 <= q <= 2:
                continue
            val, ax = axioms.lookup(str(s.monomial), q)
            if val == 0:
                if ax not in used:
                    used.append(ax)
                continue
            residue.append(Term(q, s.monomial, s.degree))
        out.append(DegreeResult(i, residue, used))
    return out


@dataclass
class L2Verdict:
    kind: str  # Vanishes | BoundedBy | Unknown
    bound: int | None = None
    axioms_used: list = field(default_factory=list)
    located: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __str__(self) -> str:
        return f"BoundedBy({self.bound})" if self.kind == "BoundedBy" else self.kind

    def to_dict(self) -> dict:
        return {"verdict": str(self), "bound": self.bound, "axioms_used": self.axioms_used,
                "located": self.located, "notes": self.notes}


def twisted_group(m: Monomial) -> str:
    """The Omega^1_X-twisted group bounding the L2 part of h^0(m), m = S^s W L^l in degree 1."""
    s, l = m.key
    sym = "W" if s - 1 == 1 else f"S{s - 1}W"
    return f"{sym}*Omega1*L^{l}"


def l2_refine(c: HComplex, vanishing_certificate, axioms: AxiomRegistry,
              local_system: str | None = None) -> L2Verdict:
    """Apply the L2 sufficiency criterion to H^1 of a reduced complex.

    ``vanishing_certificate`` is either a ChaseResult bounding h0 of the
    Omega^1_X-twisted group attached to the degree-1 residue, or the id of an
    axiom asserting that intersection cohomology H^1 of ``local_system``
    vanishes outright.
    """
    h1 = hypercoh(c, axioms)[1]
    used = list(h1.axioms_used)
    if isinstance(vanishing_certificate, str):
        val, ax = axioms.subset([vanishing_certificate]).lookup(f"IH({local_system})", 1)
        if val != 0:
            return L2Verdict("Unknown", axioms_used=used,
                             notes=[f"{vanishing_certificate} does not settle IH^1({local_system})"])
        located = [str(t.monomial) for t in h1.residue if t.summand_degree == 1 and t.q == 0]
        notes = [f"h0_L2({m}) = 0 with the (-D) twist imported from the L2 condition"
                 for m in located]
        return L2Verdict("Vanishes", 0, used + [ax], located, notes)
    if vanishing_certificate is None:
        return L2Verdict("Unknown", axioms_used=used)
    cert: ChaseResult = vanishing_certificate
    for t in h1.residue:
        if t.q != 0 or t.summand_degree != 1 or twisted_group(t.monomial) != cert.group:
            return L2Verdict("Unknown", axioms_used=used, notes=[f"unsettled term {t}"])
    used += [a for a in cert.axioms_used if a not in used]
    located = [str(t.monomial) for t in h1.residue]
    if cert.bound == 0:
        return L2Verdict("Vanishes", 0, used, located)
    return L2Verdict("BoundedBy", cert.bound, used, located,
                     [f"h1 <= {cert.bound}; lifting of the sections from Z is undecided"])
