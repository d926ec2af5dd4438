"""Check suites run by the command line front-end.

Each suite returns a list of Check records.  A check that raises is turned
into a failed record carrying the exception, so one bad input never hides the
rest of the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import curves, higgs, l2local, lattice, linalg, motives, tensor

PASS, FAIL, BOUNDED = "pass", "fail", "bounded"
SUITES = ("lattice", "curves", "tensor", "higgs", "l2", "motives")


@dataclass
class Check:
    id: str
    status: str
    witness: object
    citation: str
    axioms_used: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "witness": self.witness,
                "axioms_used": list(self.axioms_used), "citation": self.citation}


@dataclass(frozen=True)
class Context:
    axioms: curves.AxiomRegistry
    truncation: int = l2local.DEFAULT_BOUND


def _run(check_id: str, citation: str, fn, *args) -> Check:
    try:
        ok, witness, *rest = fn(*args)
    except Exception as exc:  # surfaced as a failed check
        return Check(check_id, FAIL, {"error": type(exc).__name__, "message": str(exc)}, citation)
    status = ok if isinstance(ok, str) else (PASS if ok else FAIL)
    return Check(check_id, status, witness, citation, rest[0] if rest else [])


# --- lattice -----------------------------------------------------------------

def _tw2():
    cls = lattice.graph_class(lattice.OMEGA2)
    return cls.coeffs == (-1, -1, 3, 3), cls.as_dict()


def _graph_sum():
    cat = lattice.catalog()
    lhs = cat["T1"] + cat["Tw"] + cat["Tw2"]
    rhs = 3 * cat["A"] + 3 * cat["B"]
    return lattice.verify_relation(lhs, rhs) and lhs == rhs, {"lhs": lhs.as_dict(), "rhs": rhs.as_dict()}


def _divisibility():
    q = lattice.divide(lattice.canonical_plus_boundary(), 3)
    ok = q is not None and q == lattice.l_class()
    return ok, {"K+D": lattice.canonical_plus_boundary().as_dict(),
                "quotient": q.as_dict() if q else None}


def _l_boundary():
    cat = lattice.catalog()
    diff = cat["L"] - (cat["D0"] + cat["D5"] + cat["D6"])
    return diff.is_zero(), diff.as_dict()


def _positivity():
    rep = lattice.positivity_report(lattice.l_class())
    d = rep.degrees
    ok = (rep.self_int == 1 and all(d[f"Z{i}"] == 1 for i in (1, 2, 3))
          and all(d[f"D{i}"] == 0 for i in range(1, 7)))
    return ok, {"L^2": rep.self_int, "degrees": d}


def _disjoint():
    cat = lattice.catalog()
    pairs = {f"D{i}.D{j}": lattice.intersect(cat[f"D{i}"], cat[f"D{j}"])
             for i in range(1, 7) for j in range(i + 1, 7)}
    return all(v == 0 for v in pairs.values()), pairs


def _nondegenerate():
    dets = {a.value: lattice.basis_for(a).determinant() for a in lattice.Ambient}
    return all(dets.values()), dets


def lattice_suite(ctx: Context) -> list[Check]:
    return [
        _run("lattice.graph_omega2", "class of the graph of w^2 in NS(E x E)", _tw2),
        _run("lattice.graph_sum", "T1 + Tw + Tw2 = 3(0 x E) + 3(E x 0)", _graph_sum),
        _run("lattice.divisibility", "K + D is divisible by 3 with quotient L", _divisibility),
        _run("lattice.l_boundary", "L = D0 + D5 + D6", _l_boundary),
        _run("lattice.positivity", "L^2 = 1 and L is nonnegative on the boundary and exceptional curves",
             _positivity),
        _run("lattice.boundary_disjoint", "the boundary curves D1..D6 are disjoint", _disjoint),
        _run("lattice.nondegenerate", "plumbing", _nondegenerate),
    ]


# --- curves ------------------------------------------------------------------

def _torsion():
    q1, q2 = curves.Q1, curves.Q2
    ok = (curves.ec_mul(3, q1) is curves.INFINITY and curves.ec_mul(3, q2) is curves.INFINITY
          and curves.ec_mul(2, q1) == q2)
    return ok, {"3*(0,i)": str(curves.ec_mul(3, q1)), "3*(0,-i)": str(curves.ec_mul(3, q2)),
                "2*(0,i)": str(curves.ec_mul(2, q1))}


def _points():
    pts = curves.search_points(3)
    return len(pts) > 0 and all(curves.on_curve(p) for p in pts), [str(p) for p in pts]


def _chase(ctx: Context, sym: int, expected: tuple, status_if_positive: str):
    sub = ("W" if sym == 1 else f"S{sym}W") + f"*L^-{sym}"
    res = curves.z_restriction_chase(sym, -sym, ctx.axioms, sub)
    ok = res.quotient.degrees == expected
    status = (PASS if res.bound == 0 else status_if_positive) if ok else FAIL
    return status, {"group": res.group, "restriction_per_component": list(res.quotient.degrees),
                    "h0_per_component": res.quotient_h0_per_component,
                    "components": res.components, "bound": res.bound}, list(res.axioms_used)


def _conormal():
    cat = lattice.catalog()
    z1 = cat["Z1"]
    meets = lattice.intersect(lattice.boundary(), z1)
    ldeg = lattice.intersect(lattice.l_class(), z1)
    return curves.conormal_check(meets, ldeg), {"D.Z1": meets, "L.Z1": ldeg}


def curves_suite(ctx: Context) -> list[Check]:
    return [
        _run("curves.torsion", "(0, i) and (0, -i) are 3-torsion on y^2 = x^3 - 1", _torsion),
        _run("curves.point_search", "plumbing", _points),
        _run("curves.chase_w", "h0(Omega^1_X (x) W (x) L^-1) = 0 via restriction to Z",
             _chase, ctx, 1, (-2, -1), FAIL),
        _run("curves.chase_s2w", "h0(Omega^1_X (x) S^2 W (x) L^-2) <= 3 via restriction to Z",
             _chase, ctx, 2, (-2, -1, 0), BOUNDED),
        _run("curves.conormal", "restriction data on Z agree with the lattice", _conormal),
    ]


# --- tensor ------------------------------------------------------------------

def _pleth():
    d = tensor.decompose_product((2,), (1,), 2)
    ok = d.as_dict() == {(3,): 1, (2, 1): 1} and d.dim() == 6
    return ok, {"decomposition": str(d), "dims": [tensor.schur_dim((3,), 2), tensor.schur_dim((2, 1), 2)]}


def _lambda_dims():
    dims = tensor.lambda_dims()
    return dims == tensor.binomial_dims() and sum(dims) == 64, list(dims)


def _trivial():
    counts = [tensor.trivial_summand_count(k) for k in range(7)]
    return counts == [1, 0, 1, 2, 1, 0, 1], counts


def _lambda_k():
    out = {str(k): str(tensor.decompose_lambda_k(k)) for k in range(7)}
    ok = (tensor.decompose_lambda_k(2).as_counter() == {"L2V1": 1, "L2V2": 1, "triv": 1, "End0V1": 1}
          and tensor.decompose_lambda_k(3).as_counter()
          == {"triv": 2, "S2V1": 1, "L2V1": 1, "S2V2": 1, "L2V2": 1})
    return ok, out


def tensor_suite(ctx: Context) -> list[Check]:
    return [
        _run("tensor.plethysm", "S^2 W (x) W = S^3 W + W (x) Lambda^2 W", _pleth),
        _run("tensor.lambda_dims", "dim Lambda^k(V1 + V2) = C(6, k)", _lambda_dims),
        _run("tensor.trivial_counts", "constant summands of Lambda^k(V1 + V2)", _trivial),
        _run("tensor.lambda_k", "Lambda^k(V1 + V2) in terms of V1, V2, End0(V1)", _lambda_k),
    ]


# --- higgs -------------------------------------------------------------------

EXPECTED_REDUCTIONS = {
    "E": [["L^-1"], ["S2W*L^-1"], ["W*Λ2W*L^-1"]],
    "S2E": [["L^-2"], ["S3W*L^-2"], ["S2W*Λ2W*L^-2"]],
    "End0E": [["W*L^-3"], ["S3W*L^-3"], ["W*Λ2W"]],
}


@lru_cache(maxsize=None)
def bundle(name: str) -> higgs.HiggsBundle:
    e = higgs.uniformizing()
    return {"E": e, "S2E": higgs.sym_power(e, 2), "End0E": higgs.end0(e)}[name]


@lru_cache(maxsize=None)
def _complexes(name: str) -> tuple:
    """Full and reduced complex; shared by the checks, never mutated."""
    full = higgs.build_complex(bundle(name))
    return full, higgs.reduce(full)


def _reduction(name: str):
    full, red = _complexes(name)
    ok = red.is_minimal() and red.serialize_expanded() == EXPECTED_REDUCTIONS[name]
    outcomes = higgs.reduction_outcomes(full)
    return ok and len(outcomes) == 1, {"complex": full.serialize_expanded(),
                                       "reduced": red.serialize_expanded(),
                                       "orders_agree": len(outcomes) == 1}


def _vanishing_e(ctx: Context):
    red = _complexes("E")[1]
    chase = curves.z_restriction_chase(1, -1, ctx.axioms, "W*L^-1")
    v = higgs.l2_refine(red, chase, ctx.axioms)
    return v.kind == "Vanishes", v.to_dict(), v.axioms_used


def _bound_s2(ctx: Context):
    red = _complexes("S2E")[1]
    chase = curves.z_restriction_chase(2, -2, ctx.axioms, "S2W*L^-2")
    v = higgs.l2_refine(red, chase, ctx.axioms)
    status = BOUNDED if v.kind == "BoundedBy" and v.bound == 3 else FAIL
    return status, v.to_dict(), v.axioms_used


def _end0(ctx: Context):
    red = _complexes("End0E")[1]
    v = higgs.l2_refine(red, "li_schwermer", ctx.axioms, "End0V1")
    return v.kind == "Vanishes" and v.located == ["S3W*L^-3"], v.to_dict(), v.axioms_used


def higgs_suite(ctx: Context) -> list[Check]:
    return [
        _run("higgs.reduce_E", "minimal model of the Higgs complex of E", _reduction, "E"),
        _run("higgs.reduce_S2E", "minimal model of the Higgs complex of S^2 E", _reduction, "S2E"),
        _run("higgs.reduce_End0E", "minimal model of the Higgs complex of End0 E", _reduction, "End0E"),
        _run("higgs.vanishing_V", "H^1 of the rank-3 local system vanishes", _vanishing_e, ctx),
        _run("higgs.bound_S2V", "H^1 of S^2 of the rank-3 local system is at most 3-dimensional",
             _bound_s2, ctx),
        _run("higgs.vanishing_End0V", "H^1 of End0 of the rank-3 local system vanishes", _end0, ctx),
    ]


# --- l2 ----------------------------------------------------------------------

PUBLISHED_GR = {
    1: {1: ["v1"], 0: ["v2"], -1: ["v"]},
    2: {2: ["v1⊙v1"], 1: ["v1⊙v2"], 0: ["v1⊙v", "v2⊙v2"], -1: ["v2⊙v"], -2: ["v⊙v"]},
}


def gr_names(model: l2local.LocalModel, wf: l2local.WeightFiltration) -> dict:
    """Gr_k bases written with basis names when every vector is a basis vector."""
    out = {}
    for k in wf.weights:
        names = []
        for v in wf.gr(k):
            support = [model.names[i] for i, x in enumerate(v) if x]
            names.append(support[0] if len(support) == 1 else "+".join(support))
        out[k] = names
    return out


def _gr(n: int):
    model = l2local.sym_local(n)
    got = gr_names(model, l2local.weight_filtration(model.n1))
    return got == PUBLISHED_GR[n], {str(k): v for k, v in got.items()}


def _gr_s3():
    wf = l2local.weight_filtration(l2local.sym_local(3).n1)
    return len(wf.gr(0)) == 2, {str(k): v for k, v in wf.gr_dims().items()}


@lru_cache(maxsize=None)
def _subcomplex(n: int, divisor: l2local.Divisor, bound: int) -> tuple:
    """Model and rule-generated modules; shared by the checks, never mutated."""
    model = l2local.sym_local(n, divisor)
    return model, l2local.l2_subcomplex(model, bound)


def _closed_form(n: int, divisor: l2local.Divisor, bound: int):
    model, rule = _subcomplex(n, divisor, bound)
    pub = l2local.published_closed_forms(model, bound)
    eq = [l2local.module_equal(a, b, bound) for a, b in zip(rule, pub)]
    return all(eq), {"equal_by_degree": eq, "rule": [m.serialize() for m in rule]}


def _stable(bound: int):
    out = {}
    for n in (1, 2, 3):
        for divisor in l2local.Divisor:
            model, mods = _subcomplex(n, divisor, bound)
            out[f"S{n}E/{divisor.value}"] = l2local.theta_stable(mods, model, bound)
    unpublished = [k for k in out if not (k.startswith("S1E") or k == "S2E/Smooth")]
    return all(out.values()), {"stable": out, "rule_generated_unpublished": unpublished}


def l2_suite(ctx: Context) -> list[Check]:
    b = ctx.truncation
    smooth, nc = l2local.Divisor.SMOOTH, l2local.Divisor.NORMAL_CROSSING
    return [
        _run("l2.gr_E", "weight grading of N1 on E", _gr, 1),
        _run("l2.gr_S2E", "weight grading of N1 on S^2 E", _gr, 2),
        _run("l2.gr_S3E", "plumbing", _gr_s3),
        _run("l2.closed_E_smooth", "L2 subcomplex of E along a smooth divisor", _closed_form, 1, smooth, b),
        _run("l2.closed_E_nc", "L2 subcomplex of E along a normal crossing divisor",
             _closed_form, 1, nc, b),
        _run("l2.closed_S2E_smooth", "L2 subcomplex of S^2 E along a smooth divisor",
             _closed_form, 2, smooth, b),
        _run("l2.theta_stable", "theta preserves the L2 subcomplexes", _stable, b),
    ]


# --- motives -----------------------------------------------------------------

def _projectors():
    p2 = motives.kunneth_projectors(2)
    ok = motives.verify_projector_axioms(p2) and p2.ranks() == tuple(comb(6, i) for i in range(7))
    return ok, {"ranks": list(p2.ranks()), "axioms_hold": motives.verify_projector_axioms(p2)}


def _independence():
    ps = [motives.kunneth_projectors(n) for n in (2, 3, 5)]
    return ps[0] == ps[1] == ps[2], {"n": [2, 3, 5]}


def _pairing():
    ranks = [motives.poincare_pairing_rank(i) for i in range(7)]
    return ranks == [comb(6, i) for i in range(7)], ranks


def _cm():
    split = motives.cm_splitting()
    rows = [[c.trivial, c.omega, c.omega_bar] for c in split]
    cross = all((c.trivial, c.omega) == motives.cm_dims_from_blocks(c.degree) for c in split)
    return cross and rows[1] == [0, 3, 3], {"trivial_omega_omegabar": rows, "matches_blocks": cross}


def _invariants():
    dims = [motives.invariant_dims(k) for k in range(7)]
    return dims[1] == 0 and dims[2] == 1 and dims[4] == 1, dims


def motives_suite(ctx: Context) -> list[Check]:
    return [
        _run("motives.projectors", "Kuenneth projectors are orthogonal idempotents summing to id",
             _projectors),
        _run("motives.n_independence", "plumbing", _independence),
        _run("motives.poincare", "Poincare duality pairing is perfect", _pairing),
        _run("motives.cm_splitting", "H^1 = V1 + V2 with V1, V2 of rank 3", _cm),
        _run("motives.invariants", "monodromy invariants in H^2 and H^4 are one-dimensional, none in H^1",
             _invariants),
    ]


RUNNERS = {
    "lattice": lattice_suite,
    "curves": curves_suite,
    "tensor": tensor_suite,
    "higgs": higgs_suite,
    "l2": l2_suite,
    "motives": motives_suite,
}


def jsonable(x):
    """Rationals become ints or 'p/q' strings; tuples become lists; floats are refused."""
    if isinstance(x, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return linalg.fmt(x)
