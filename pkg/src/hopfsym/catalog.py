"""Worked examples with their expected verdicts, and the regression runner."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from typing import Callable

import numpy as np

from . import checkers as ck
from .constructions import (
    corner,
    coinvariants,
    cyclic_group_hopf,
    drinfeld_double,
    dual_numbers_over_h4,
    ground_algebra,
    product_kxk,
    regrade,
    regular_comodule,
    smash_product,
    sweedler_h4,
    trivial_comodule,
    TrivialExtension,
    trivial_extension,
    upper_triangular,
)
from .corep import ComoduleAlgebraSC, dual_comodule
from .exactlin import QQ, Field, fmt_vector, kernel
from .hopfcore import AlgebraSC, HopfSC, dual_hopf
from .structure import (
    check_theorem42_precondition,
    distinguished_pair,
    is_cosemisimple,
    is_sovereign_character,
    is_unimodular,
    verify_integral_identities,
)

YES, NO = ck.YES, ck.NO_CERTIFIED


@dataclass
class Check:
    name: str
    expected: str
    citation: str  # where the expected value comes from
    run: Callable  # objects -> (got, witness or None)


@dataclass
class CatalogEntry:
    name: str
    builder: Callable  # Field -> dict of objects
    checks: list
    odd_characteristic: bool = False  # refuses characteristic 2
    description: str = ""

    def build(self, field: Field) -> dict:
        if self.odd_characteristic and field.characteristic == 2:
            raise ValueError(f"{self.name} needs characteristic != 2")
        return self.builder(field)

    @property
    def expected(self) -> list:
        return [(c.name, c.expected, c.citation) for c in self.checks]


@dataclass
class Ctx:
    budget: int = ck.DEFAULT_BUDGET
    seed: int = 0


def _v(rep):
    return rep.verdict, rep.witness


def _bool(b) -> tuple:
    return ("true" if b else "false"), None


# -- builders --------------------------------------------------------------------


def _kc2_division(F):
    H = cyclic_group_hopf(2, F)
    return {"H": H, "A": regular_comodule(H, "kC2"), "u": F.array([1, -1])}


def _h4_regular(F):
    H = sweedler_h4(F)
    return {"H": H, "A": regular_comodule(H, "H4")}


def _dualnumbers_E(F):
    H = sweedler_h4(F)
    X = dual_numbers_over_h4(F, H)
    alpha = distinguished_pair(H).alpha
    return {"H": H, "X": X, "TE": trivial_extension(X, alpha, "E"), "alpha": alpha}


def super_trivext(R: AlgebraSC, field: Field) -> ComoduleAlgebraSC:
    """R + R* (classical trivial extension) graded by C2 with R in degree e, R* in degree g."""
    C2 = cyclic_group_hopf(2, field)
    TE = trivial_extension(trivial_comodule(R), [1])
    n = R.dim
    return regrade(TE.comodule.alg, C2, ["e"] * n + ["g"] * n, "R+R*")


def _super(make_R):
    def build(F):
        R = make_R(F)
        A = super_trivext(R, F)
        return {"R": R, "A": A, "smash": smash_product(A)}

    return build


def _graded_trivext(F):
    """Trivial extension of R graded with E12 in degree g, taken in graded modules."""
    C2 = cyclic_group_hopf(2, F)
    R = regrade(upper_triangular(F), C2, ["e", "g", "e"], "Rg")
    TE = trivial_extension(R, C2.counit, "E(Rg)")
    return {"H": C2, "R": R, "A": TE.comodule, "TE": TE}


def _ground_over_h4(F):
    H = sweedler_h4(F)
    return {"H": H, "A": trivial_comodule(ground_algebra(F), H, "k")}


def _double_h4(F):
    # k rather than the regular comodule: the smash of the regular one is 256-dimensional
    D = drinfeld_double(sweedler_h4(F))
    return {"H": D, "A": trivial_comodule(ground_algebra(F), D, "k")}


def _hopf_regular(make):
    def build(F):
        H = make(F)
        return {"H": H, "A": regular_comodule(H)}

    return build


# -- check helpers -----------------------------------------------------------------


def _corner_matches_R(o):
    sm = o["smash"]
    C, _ = corner(sm.alg, sm.embed_Hstar[:, 0])  # 1 # p_e
    R = o["R"]
    return _bool(C.dim == R.dim and np.all(C.mult == R.mult) and np.all(C.unit == R.unit))


def _presentation(o):
    """u = X, v = p_X: u^2 = v^2 = 0, vu = -uv, uv != 0, coaction v -> v (x) c."""
    E = o["TE"].comodule
    u, v = E.alg.basis(1), E.alg.basis(3)
    uv, vu = E.alg.mul(u, v), E.alg.mul(v, u)
    F = E.field
    ok = not np.any(E.alg.mul(u, u) != 0) and not np.any(E.alg.mul(v, v) != 0)
    ok = ok and np.all(vu == F.reduce(-uv)) and np.any(uv != 0)
    c = F.basis_vector(4, 1)
    ok = ok and np.all(E.rho(v) == F.reduce(np.multiply.outer(v, c)))
    return _bool(ok)


def _canonical_witness(o, key="TE", u=None):
    TE = o[key]
    A = TE.comodule
    u = u if u is not None else o["alpha"]
    C = ck.symmetric_constraints(A, u)
    ok = ck.satisfies(A.field, C, TE.witness) and ck.gram(A, TE.witness).nondegenerate
    return ("true" if ok else "false"), TE.witness


def _ideal_in_trace_kernels(o):
    """Every trace-like functional on E kills the two-sided ideal spanned by uv."""
    E = o["TE"].comodule
    F = E.field
    uv = E.alg.mul(E.alg.basis(1), E.alg.basis(3))
    space = ck.symmetric_space(trivial_comodule(E.alg), [1])
    ok = bool(space)
    for lam in space:
        stab = ck.largest_stable_subspace_in_kernel(E.alg, lam, (ck.RIGHT_ACTION, ck.LEFT_ACTION))
        if len(kernel(F, np.array([list(s) for s in stab] + [list(uv)], dtype=object).T)) == 0:
            ok = False  # uv is not in the span of the stabilized kernel
    return _bool(ok)


def _sym_space_dim(A, u):
    return str(len(ck.symmetric_space(A, u))), None


def _smash_symmetric_g(o, key="A"):
    A = o[key]
    g = distinguished_pair(A.hopf).g
    return o.setdefault("_smash", smash_product(A)).comodule, g


# -- entries ---------------------------------------------------------------------


def catalog_entries() -> list:
    H4_CLAIM = "Sweedler H4: alpha-symmetric via lambda(x) = 1, not symmetric as an algebra"
    E_CLAIM = "trivial extension of k[X]/(X^2) over H4: alpha-symmetric, not symmetric as an algebra"
    SUPER_CLAIM = "graded trivial extension R + R*: Frobenius as an algebra, not graded Frobenius"
    HOPF_CLAIM = "a finite dimensional Hopf algebra is Frobenius in its comodule category"
    HOPF_SYM_CLAIM = "a Hopf algebra is (H, alpha)-symmetric under the S^2 hypothesis"
    DERIVED = "derived: exact checker run"

    def frob(key="A"):
        return lambda o, ctx: _v(ck.check_frobenius_in_MH(o[key], ctx.budget, ctx.seed))

    def sym(key, ukey):
        return lambda o, ctx: _v(ck.check_symmetric(o[key], o[ukey] if isinstance(ukey, str) else ukey(o), ctx.budget, ctx.seed))

    def plain(key, kind):
        return lambda o, ctx: _v(ck.check_plain(_alg(o[key]), kind, ctx.budget, ctx.seed))

    def alpha_of(o):
        return distinguished_pair(o["H"]).alpha

    entries = [
        CatalogEntry(
            "kC2_division",
            _kc2_division,
            [
                Check("eps_symmetric", YES, "kC2 graded by C2 is (H, eps)-symmetric", lambda o, ctx: _v(ck.check_symmetric(o["A"], o["H"].counit, ctx.budget, ctx.seed))),
                Check("u_symmetric", NO, "kC2 graded by C2 is not (H, p_e - p_g)-symmetric", sym("A", "u")),
                Check("u_symmetric_space_dim", "0", "the only admissible functional is zero", lambda o, ctx: _sym_space_dim(o["A"], o["u"])),
                Check("coinvariants_symmetric", YES, "coinvariants of a graded symmetric algebra: A_e = k", lambda o, ctx: _v(ck.check_plain(coinvariants(o["A"])[0], ck.SYMMETRIC, ctx.budget, ctx.seed))),
            ],
            odd_characteristic=True,
            description="kC2 as a C2-graded division algebra",
        ),
        CatalogEntry(
            "h4_regular",
            _h4_regular,
            [
                Check("alpha_symmetric", YES, H4_CLAIM, sym("A", alpha_of)),
                Check("plain_symmetric", NO, H4_CLAIM, plain("A", ck.SYMMETRIC)),
                Check("frobenius_MH", YES, HOPF_CLAIM, frob()),
                Check("hopf_symmetric_crosscheck", "false", "symmetric iff unimodular and S^2 inner; H4 is not unimodular", lambda o, ctx: _bool(ck.hopf_symmetric_crosscheck(o["H"], ctx.budget, ctx.seed))),
            ],
            odd_characteristic=True,
            description="Sweedler's H4 with its regular coaction",
        ),
        CatalogEntry(
            "dualnumbers_E",
            _dualnumbers_E,
            [
                Check("presentation", "true", "u^2 = v^2 = 0, vu = -uv, v -> v (x) c", lambda o, ctx: _presentation(o)),
                Check("alpha_symmetric", YES, E_CLAIM, lambda o, ctx: _v(ck.check_symmetric(o["TE"].comodule, o["alpha"], ctx.budget, ctx.seed))),
                Check("canonical_witness", "true", "lambda(a, a*) = a*(1) is a symmetric witness", lambda o, ctx: _canonical_witness(o)),
                Check("plain_symmetric", NO, E_CLAIM, lambda o, ctx: _v(ck.check_plain(o["TE"].comodule.alg, ck.SYMMETRIC, ctx.budget, ctx.seed))),
                Check("uv_ideal_in_trace_kernels", "true", E_CLAIM, lambda o, ctx: _ideal_in_trace_kernels(o)),
            ],
            odd_characteristic=True,
            description="E(k[X]/(X^2)) over H4",
        ),
        CatalogEntry(
            "super_trivext",
            _super(upper_triangular),
            [
                Check("plain_frobenius", YES, SUPER_CLAIM, plain("A", ck.FROBENIUS)),
                Check("graded_frobenius", NO, SUPER_CLAIM, frob()),
                Check("smash_frobenius", YES, "smash of a graded Frobenius-as-algebra example is Frobenius in M^(kC2)*", lambda o, ctx: _v(ck.check_frobenius_in_MH(o["smash"].comodule, ctx.budget, ctx.seed))),
                Check("R_plain_frobenius", NO, DERIVED + " (upper triangular 2x2 is not self-injective)", plain("R", ck.FROBENIUS)),
                Check("R_plain_symmetric", NO, DERIVED, plain("R", ck.SYMMETRIC)),
            ],
            description="R + R* graded by C2, R upper triangular 2x2",
        ),
        CatalogEntry(
            "super_trivext_kxk",
            _super(product_kxk),
            [
                Check("plain_frobenius", YES, DERIVED, plain("A", ck.FROBENIUS)),
                # R* sits in degree g and is a right ideal in every colinear kernel,
                # whatever R is, so the graded verdict does not flip
                Check("graded_frobenius", NO, DERIVED + ": R* is a graded right ideal killed by every colinear functional", frob()),
                Check("R_plain_symmetric", YES, DERIVED, plain("R", ck.SYMMETRIC)),
            ],
            description="the same construction with R = k x k",
        ),
        CatalogEntry(
            "ex41_smash",
            _super(upper_triangular),
            [
                Check("plain_symmetric", YES, "trivial extensions are symmetric algebras", plain("A", ck.SYMMETRIC)),
                Check("corner_is_R", "true", "(1#p_e)(A#(kC2)*)(1#p_e) = A_e # p_e = R", lambda o, ctx: _corner_matches_R(o)),
                Check("R_plain_symmetric", NO, DERIVED, plain("R", ck.SYMMETRIC)),
                Check("smash_plain_symmetric", NO, "a corner of a symmetric algebra is symmetric, and R is not", lambda o, ctx: _v(ck.check_plain(o["smash"].alg, ck.SYMMETRIC, ctx.budget, ctx.seed))),
            ],
            description="smash product of the graded trivial extension",
        ),
        CatalogEntry(
            "graded_trivext",
            _graded_trivext,
            [
                Check("eps_symmetric", YES, "trivial extensions in M^H are (H, u)-symmetric", lambda o, ctx: _v(ck.check_symmetric(o["A"], o["H"].counit, ctx.budget, ctx.seed))),
                Check("canonical_witness", "true", "lambda(a, a*) = a*(1) is a symmetric witness", lambda o, ctx: _canonical_witness(o, u=o["H"].counit)),
                Check("frobenius_MH", YES, DERIVED, frob()),
                Check("coinvariants_frobenius", YES, "coinvariants over a cosemisimple H inherit Frobenius", lambda o, ctx: _v(ck.check_plain(coinvariants(o["A"])[0], ck.FROBENIUS, ctx.budget, ctx.seed))),
                Check("coinvariants_symmetric", YES, "coinvariants over an involutory cosemisimple H inherit symmetry", lambda o, ctx: _v(ck.check_plain(coinvariants(o["A"])[0], ck.SYMMETRIC, ctx.budget, ctx.seed))),
            ],
            description="trivial extension of a C2-graded upper triangular algebra",
        ),
        CatalogEntry(
            "ground_over_h4",
            _ground_over_h4,
            [
                Check("frobenius_MH", YES, "k is Frobenius in M^H", frob()),
                Check("alpha_symmetric", YES, DERIVED, sym("A", alpha_of)),
                Check("smash_g_symmetric", YES, "H* is (H*, g)-symmetric via lambda(h*) = h*(t)", lambda o, ctx: _v(ck.check_symmetric(*_smash_symmetric_g(o), ctx.budget, ctx.seed))),
            ],
            odd_characteristic=True,
            description="k with trivial H4-coaction",
        ),
    ]
    entries.append(
        CatalogEntry(
            "double_H4",
            _double_h4,
            [
                Check("unimodular", "true", DERIVED + " (Drinfeld doubles are unimodular)", lambda o, ctx: _bool(is_unimodular(o["H"]))),
                Check("s2_precondition", "false", DERIVED + ": alpha = eps but S^2 != id", lambda o, ctx: _bool(check_theorem42_precondition(o["H"]))),
                Check("frobenius_MH", YES, "k is Frobenius in M^H", frob()),
                Check("alpha_sovereign", "false", DERIVED, lambda o, ctx: _bool(is_sovereign_character(o["H"], distinguished_pair(o["H"]).alpha))),
            ],
            odd_characteristic=True,
            description="Drinfeld double of H4: a valid Hopf algebra failing the S^2 precondition",
        )
    )
    for label, make, odd in [
        ("kC2", lambda F: cyclic_group_hopf(2, F), False),
        ("kC3", lambda F: cyclic_group_hopf(3, F), False),
        ("H4", sweedler_h4, True),
        ("H4dual", lambda F: dual_hopf(sweedler_h4(F)), True),
    ]:
        entries.append(
            CatalogEntry(
                f"hopf_regular_{label}",
                _hopf_regular(make),
                [
                    Check("frobenius_MH", YES, HOPF_CLAIM, frob()),
                    Check("alpha_symmetric", YES, HOPF_SYM_CLAIM, sym("A", alpha_of)),
                ],
                odd_characteristic=odd,
                description=f"{label} with its regular coaction",
            )
        )
    return sorted(entries, key=lambda e: e.name)


def _alg(x):
    return x.alg if isinstance(x, ComoduleAlgebraSC) else x


# -- property suites -------------------------------------------------------------


def _hopfs_and_comodules(objs: dict):
    hopfs, comods = [], []
    for v in objs.values():
        if isinstance(v, HopfSC):
            hopfs.append(v)
        elif isinstance(v, ComoduleAlgebraSC):
            comods.append(v)
            hopfs.append(v.hopf)
        elif hasattr(v, "comodule") and isinstance(v.comodule, ComoduleAlgebraSC):
            comods.append(v.comodule)
            hopfs.append(v.comodule.hopf)
    seen, uniq = set(), []
    for H in hopfs:
        if id(H) not in seen:
            seen.add(id(H))
            uniq.append(H)
    seen, cu = set(), []
    for A in comods:
        if id(A) not in seen:
            seen.add(id(A))
            cu.append(A)
    return uniq, cu


def property_checks(objs: dict, ctx: Ctx) -> list:
    """(name, ok, detail) for every invariant that applies to the entry's objects."""
    out = []
    hopfs, comods = _hopfs_and_comodules(objs)
    for H in hopfs:
        rep = verify_integral_identities(H)
        out.append((f"integral_identities[{H.name}]", rep.ok, rep.as_dict()))
    for A in comods:
        tag = A.name or "A"
        F = A.field
        out.append((f"dual_action_identity[{tag}]", dual_comodule(A).eq1_holds, None))
        # Gram/kernel equivalence and conditions (3) <=> (4) on the colinear basis
        ok_gk = ok_34 = True
        space = ck.colinear_space(A)
        for lam in space + ([F.array(np.sum(space, axis=0))] if space else []):
            lam = F.reduce(lam)
            nondeg = ck.gram(A, lam).nondegenerate
            ideal = ck.largest_stable_subspace_in_kernel(A, lam, (ck.RIGHT_ACTION,))
            sub = ck.largest_stable_subspace_in_kernel(A, lam, (ck.RIGHT_ACTION, ck.HSTAR_ACTION))
            ok_gk &= nondeg == (len(ideal) == 0)
            ok_34 &= (len(ideal) == 0) == (len(sub) == 0)
        out.append((f"gram_kernel_equivalence[{tag}]", ok_gk, None))
        out.append((f"stabilizer_agreement[{tag}]", ok_34, None))
        frob = ck.check_frobenius_in_MH(A, ctx.budget, ctx.seed)
        if frob.yes and A.dim * A.hopf.dim <= 64:
            tr = ck.transfer_witness_to_smash(A, frob.witness)
            out.append((f"frobenius_transfer_to_smash[{tag}]", tr.colinear and tr.nondegenerate, None))
        H = A.hopf
        if check_theorem42_precondition(H):
            pair = distinguished_pair(H)
            if A.dim * H.dim <= 64:
                sm = smash_product(A)
                a = ck.check_symmetric(A, pair.alpha, ctx.budget, ctx.seed)
                b = ck.check_symmetric(sm.comodule, pair.g, ctx.budget, ctx.seed)
                ok = a.verdict == b.verdict
                if a.yes:
                    tr = ck.transfer_witness_to_smash(A, a.witness, sm)
                    back = ck.transfer_witness_from_smash(A, tr.functional, sm)
                    ok = ok and bool(tr.symmetric) and tr.nondegenerate and back.symmetric
                if b.yes:
                    back = ck.transfer_witness_from_smash(A, b.witness, sm)
                    ok = ok and back.symmetric and back.nondegenerate
                out.append((f"symmetric_transfer_biconditional[{tag}]", ok, f"{a.verdict}/{b.verdict}"))
        if is_cosemisimple(H):
            rep = ck.check_coinvariants_transfer(A, ctx.budget, ctx.seed)
            out.append((f"coinvariants_transfer[{tag}]", rep.ok, None))
    for v in objs.values():
        if isinstance(v, TrivialExtension):
            E = v.comodule
            ok = ck.satisfies(E.field, ck.symmetric_constraints(E, v.character), v.witness)
            ok = ok and ck.gram(E, v.witness).nondegenerate
            out.append((f"canonical_witness[{E.name or 'E'}]", ok, None))
    return out


# -- runner ------------------------------------------------------------------------


@dataclass
class Record:
    entry: str
    check: str
    expected: str
    got: str
    citation: str
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def as_dict(self) -> dict:
        return {
            "entry": self.entry,
            "check": self.check,
            "expected": self.expected,
            "got": self.got,
            "citation": self.citation,
            "witness": self.witness,
        }


@dataclass
class RegressionSummary:
    field: str
    seed: int
    budget: int
    records: list = dc_field(default_factory=list)
    skipped: list = dc_field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    @property
    def mismatches(self) -> list:
        return [r for r in self.records if not r.ok]

    def as_dict(self) -> dict:
        return {
            "field": self.field,
            "seed": self.seed,
            "budget": self.budget,
            "ok": self.ok,
            "records": [r.as_dict() for r in self.records],
            "skipped": list(self.skipped),
        }

    def text(self) -> str:
        lines = [f"catalog regression over {self.field} (seed {self.seed}, budget {self.budget})"]
        for r in self.records:
            mark = "ok  " if r.ok else "FAIL"
            w = f"  witness {r.witness}" if r.witness else ""
            lines.append(f"{mark} {r.entry}.{r.check}: expected {r.expected}, got {r.got}{w}")
        for s in self.skipped:
            lines.append(f"skip {s}")
        n_bad = len(self.mismatches)
        lines.append(f"{len(self.records) - n_bad}/{len(self.records)} checks match")
        return "\n".join(lines)


def run_entry(entry: CatalogEntry, field: Field, ctx: Ctx, properties: bool = True) -> list:
    objs = entry.build(field)
    recs = []
    for c in entry.checks:
        got, w = c.run(objs, ctx)
        recs.append(Record(entry.name, c.name, c.expected, got, c.citation, None if w is None else fmt_vector(field, w)))
    if properties:
        for name, ok, detail in property_checks(objs, ctx):
            cite = "invariant" if detail is None else f"invariant ({detail})"
            recs.append(Record(entry.name, name, "pass", "pass" if ok else "fail", cite))
    return recs


def run_regression(seed: int = 0, budget: int = ck.DEFAULT_BUDGET, field: Field = QQ,
                   properties: bool = True) -> RegressionSummary:
    t0 = time.perf_counter()
    ctx = Ctx(budget, seed)
    summary = RegressionSummary(str(field), seed, budget)
    for entry in catalog_entries():
        if entry.odd_characteristic and field.characteristic == 2:
            summary.skipped.append(f"{entry.name}: needs characteristic != 2")
            continue
        summary.records.extend(run_entry(entry, field, ctx, properties))
    summary.seconds = time.perf_counter() - t0
    return summary


def entry_by_name(name: str) -> CatalogEntry:
    for e in catalog_entries():
        if e.name == name:
            return e
    raise KeyError(name)
