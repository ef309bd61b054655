"""Decision procedures for Frobenius-in-M^H and (H,u)-symmetry.

Every question reduces to: does a given subspace of functionals contain one
whose Gram matrix B(a,b) = lambda(ab) is invertible?  That is a determinant
pencil problem, handled by ``decide``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .constructions import Smash, coinvariants, smash_product, trivial_comodule
from .corep import (
    ComoduleAlgebraSC,
    hstar_matrix,
    require_comodule_algebra,
    twist_iso,
)
from .exactlin import (
    Field,
    det,
    fmt_vector,
    is_zero,
    kernel,
    matmul,
    normalize_first,
    rank,
    span_basis,
    stack,
    tdot,
)
from .hopfcore import AlgebraSC, HopfSC, is_involutory
from .structure import (
    LEFT,
    ON_H,
    RIGHT,
    IN_H,
    check_theorem42_precondition,
    distinguished_pair,
    integrals,
    is_cosemisimple,
    is_unimodular,
    s2_inner_space,
)

YES, NO_CERTIFIED, NO_PROBABILISTIC = "yes", "no_certified", "no_probabilistic"
VERDICTS = (YES, NO_CERTIFIED, NO_PROBABILISTIC)

DEFAULT_BUDGET = 10**6
DEFAULT_TRIALS = 32


class PreconditionError(ValueError):
    """Input outside the hypotheses of a transfer or check."""


class CheckerInconsistency(AssertionError):
    """Two routes to the same answer disagreed; always a bug."""


@dataclass
class CheckReport:
    verdict: str
    witness: np.ndarray | None
    trials: int
    confidence_note: str
    diagnostics: list = dc_field(default_factory=list)
    field: Field | None = None

    @property
    def yes(self) -> bool:
        return self.verdict == YES

    def as_dict(self) -> dict:
        F = self.field
        w = None if self.witness is None else [F.fmt(x) for x in self.witness]
        return {
            "verdict": self.verdict,
            "witness": w,
            "trials": self.trials,
            "confidence_note": self.confidence_note,
            "diagnostics": list(self.diagnostics),
        }

    def summary(self) -> str:
        s = self.verdict
        if self.witness is not None:
            s += " witness " + fmt_vector(self.field, self.witness)
        return s


@dataclass(frozen=True, eq=False)
class BilinearFormSC:
    gram: np.ndarray
    field: Field

    @property
    def nondegenerate(self) -> bool:
        return rank(self.field, self.gram) == self.gram.shape[0]

    def left_radical(self) -> list:
        """{v : B(v, -) = 0}."""
        return kernel(self.field, self.gram.T)


# -- constraint spaces ------------------------------------------------------------


def colinear_constraints(A: ComoduleAlgebraSC) -> np.ndarray:
    """Rows (s, i) of the equations lam(P_s . a_i) = P_s(1) lam(a_i)."""
    F, n, m = A.field, A.dim, A.hopf.dim
    M = A.coaction.transpose(2, 0, 1) - np.multiply.outer(A.hopf.unit, F.eye(n))
    return F.reduce(M.reshape(m * n, n))


def symmetric_constraints(A: ComoduleAlgebraSC, u) -> np.ndarray:
    """Colinearity plus lam(a_j a_i) = lam(a_i f(a_j)) for all i, j."""
    F, n = A.field, A.dim
    f = twist_iso(A, u)
    m = A.alg.mult
    M2 = tdot(F, f, m, ([0], [1]))  # [j,i,k]: a_i f(a_j)
    sym = F.reduce(m - M2).reshape(n * n, n)  # m[j,i,k] is a_j a_i
    return stack(F, [colinear_constraints(A), sym], n)


def colinear_space(A: ComoduleAlgebraSC) -> list:
    return kernel(A.field, colinear_constraints(A))


def symmetric_space(A: ComoduleAlgebraSC, u) -> list:
    return kernel(A.field, symmetric_constraints(A, u))


def satisfies(F: Field, constraints, lam) -> bool:
    return is_zero(matmul(F, constraints, F.array(lam)))


def gram(A, lam) -> BilinearFormSC:
    """B[i,j] = lam(a_i a_j)."""
    alg = A.alg if isinstance(A, ComoduleAlgebraSC) else A
    F = alg.field
    return BilinearFormSC(tdot(F, alg.mult, F.array(lam), ([2], [0])), F)


# -- stabilizer ------------------------------------------------------------------

RIGHT_ACTION, LEFT_ACTION, HSTAR_ACTION = "right", "left", "hstar"


def _operators(A, structures) -> list:
    alg = A.alg if isinstance(A, ComoduleAlgebraSC) else A
    ops = []
    for s in structures:
        if s == RIGHT_ACTION:
            ops += [alg.right_mult(alg.basis(j)) for j in range(alg.dim)]
        elif s == LEFT_ACTION:
            ops += [alg.left_mult(alg.basis(j)) for j in range(alg.dim)]
        elif s == HSTAR_ACTION:
            if not isinstance(A, ComoduleAlgebraSC):
                raise PreconditionError("H*-action selected on an algebra without coaction")
            ops += [hstar_matrix(A, A.field.basis_vector(A.hopf.dim, s_)) for s_ in range(A.hopf.dim)]
        else:
            raise ValueError(f"unknown structure {s!r}")
    return ops


def largest_stable_subspace_in_kernel(A, lam, structures=(RIGHT_ACTION,)) -> list:
    """Largest subspace of Ker lam stable under the selected operators.

    Works dually: the annihilator starts as span(lam) and is closed under
    transposed operators until its dimension stops growing.
    """
    alg = A.alg if isinstance(A, ComoduleAlgebraSC) else A
    F, n = alg.field, alg.dim
    ops = _operators(A, structures)
    Q = span_basis(F, [F.array(lam)], n)
    while True:
        rows = list(Q)
        for q in Q:
            rows += [matmul(F, q, M) for M in ops]
        new = span_basis(F, rows, n)
        if len(new) == len(Q):
            break
        Q = new
    if not Q:
        return [F.basis_vector(n, i) for i in range(n)]
    return kernel(F, np.array([list(q) for q in Q], dtype=object))


# -- pencil engine ---------------------------------------------------------------


@dataclass
class _PencilOutcome:
    verdict: str
    coords: list | None
    trials: int
    note: str
    diagnostics: list


def _nonsingular(F, mats, x) -> bool:
    M = F.reduce(sum((F.reduce(xi * Mi) for xi, Mi in zip(x, mats) if xi != 0), F.zeros(mats[0].shape)))
    return det(F, M) != 0


def pencil_search(F: Field, mats: list, n: int, budget: int = DEFAULT_BUDGET, seed: int = 0,
                  trials: int = DEFAULT_TRIALS) -> _PencilOutcome:
    """Is det(sum x_k M_k) a nonzero polynomial?  Returns a witnessing x when it is."""
    d = len(mats)
    diags = []
    if d == 0:
        return _PencilOutcome(NO_CERTIFIED, None, 0, "constraint space is zero", ["empty pencil"])
    # a common kernel vector (either side) makes every member singular
    right = kernel(F, stack(F, mats, n))
    left = kernel(F, stack(F, [M.T for M in mats], n))
    if right or left:
        v = (right or left)[0]
        side = "right" if right else "left"
        return _PencilOutcome(
            NO_CERTIFIED, None, 0,
            f"common {side} kernel vector {fmt_vector(F, v)} annihilates the whole pencil",
            [f"every member is singular: shared {side} null vector"],
        )
    count = 0
    candidates = [[1 if k == j else 0 for k in range(d)] for j in range(d)]
    candidates.append([1] * d)
    for x in candidates:
        count += 1
        if _nonsingular(F, mats, x):
            return _PencilOutcome(YES, x, count, "deterministic candidate", diags)
    rng = random.Random(seed)
    S = max(16, 2 * n)
    size = F.size
    per_trial = []
    for t in range(trials):
        if t and t % 8 == 0:
            S *= 2
        if size is None:
            x = [rng.randint(-S, S) for _ in range(d)]
            per_trial.append((n, 2 * S + 1))
        else:
            x = [rng.randrange(size) for _ in range(d)]
            per_trial.append((n, size))
        count += 1
        if _nonsingular(F, mats, x):
            return _PencilOutcome(YES, [F(v) for v in x], count, "random sample", diags)
    enough_points = size is None or size >= n + 1
    if enough_points and (n + 1) ** d <= budget:
        for x in itertools.product(range(n + 1), repeat=d):
            count += 1
            if _nonsingular(F, mats, [F(v) for v in x]):
                return _PencilOutcome(YES, [F(v) for v in x], count, "grid point", diags)
        return _PencilOutcome(
            NO_CERTIFIED, None, count,
            f"det vanishes on the grid {{0..{n}}}^{d}, so it is identically zero", diags,
        )
    if not enough_points and size ** d <= budget:
        # every point of F_p^d: a yes here is exact, a miss is still inconclusive
        for x in itertools.product(range(size), repeat=d):
            count += 1
            if _nonsingular(F, mats, list(x)):
                return _PencilOutcome(YES, list(x), count, "exhaustive search over F_p^d", diags)
        # the functional space over F_p is finite and every point was tried
        diags.append(f"small-field warning: |F| = {size} <= dim = {n}; the verdict concerns F_{size} itself")
        return _PencilOutcome(
            NO_CERTIFIED, None, count,
            f"det vanishes at all {size}^{d} points of the space over F_{size}", diags,
        )
    S0 = max(16, 2 * n)
    loose = min(1.0, n * trials / (2 * S0 + 1)) if size is None else min(1.0, n * trials / size)
    tight = 1.0
    for num, den in per_trial:
        tight *= min(1.0, num / den)
    note = (
        f"{trials} random trials all singular; failure bound n*trials/(2S+1) = {loose:.3g}"
        f" (independent-trial bound {tight:.3g})"
    )
    if not enough_points:
        diags.append(f"small-field warning: |F| = {size} <= dim = {n}, grid certificate unavailable")
    else:
        diags.append(f"grid of size {n + 1}^{d} exceeds budget {budget}")
    return _PencilOutcome(NO_PROBABILISTIC, None, count, note, diags)


def decide(A, space: list, budget: int = DEFAULT_BUDGET, seed: int = 0, trials: int = DEFAULT_TRIALS,
           constraints=None) -> CheckReport:
    """Search ``space`` for a functional with invertible Gram matrix."""
    alg = A.alg if isinstance(A, ComoduleAlgebraSC) else A
    F, n = alg.field, alg.dim
    space = [F.array(v) for v in space]
    mats = [gram(alg, lam).gram for lam in space]
    out = pencil_search(F, mats, n, budget, seed, trials)
    if out.verdict != YES:
        return CheckReport(out.verdict, None, out.trials, out.note, out.diagnostics, F)
    lam = F.zeros(n)
    for x, v in zip(out.coords, space):
        lam = F.reduce(lam + x * v)
    lam = normalize_first(F, lam)
    # deterministic re-verification
    if not gram(alg, lam).nondegenerate:
        raise CheckerInconsistency("witness Gram matrix is singular")
    span = np.array([list(v) for v in space], dtype=object)
    if rank(F, np.array([list(v) for v in space] + [list(lam)], dtype=object)) != rank(F, span):
        raise CheckerInconsistency("witness is outside the searched space")
    if constraints is not None and not satisfies(F, constraints, lam):
        raise CheckerInconsistency("witness violates the defining equations")
    return CheckReport(YES, lam, out.trials, out.note + "; witness re-verified exactly", out.diagnostics, F)


# -- the checks ---------------------------------------------------------------------


def check_frobenius_in_MH(A: ComoduleAlgebraSC, budget: int = DEFAULT_BUDGET, seed: int = 0,
                          trials: int = DEFAULT_TRIALS) -> CheckReport:
    require_comodule_algebra(A)
    C = colinear_constraints(A)
    rep = decide(A, kernel(A.field, C), budget, seed, trials, constraints=C)
    if rep.yes:
        sub = largest_stable_subspace_in_kernel(A, rep.witness, (RIGHT_ACTION, HSTAR_ACTION))
        ideal = largest_stable_subspace_in_kernel(A, rep.witness, (RIGHT_ACTION,))
        left = largest_stable_subspace_in_kernel(A, rep.witness, (LEFT_ACTION, HSTAR_ACTION))
        if sub or ideal:
            raise CheckerInconsistency("nondegenerate witness has a nonzero subobject in its kernel")
        rep.diagnostics.append("no nonzero subobject of A in M^H_A inside Ker(witness)")
        if left:
            rep.diagnostics.append("left-sided mirror condition disagrees: left subobject in kernel")
        else:
            rep.diagnostics.append("left-sided mirror condition agrees")
    return rep


def form_identity_failures(A: ComoduleAlgebraSC, u, lam) -> list[str]:
    """Check the bilinear form B(x,y) = lam(yx) against the symmetric-form identities."""
    F, n = A.field, A.dim
    f = twist_iso(A, u)
    G = gram(A, lam).gram  # G[p,z] = lam(e_p e_z)
    m = A.alg.mult
    P = tdot(F, m, G, ([2], [0]))  # lam((xy)z)
    Q = tdot(F, G, m, ([1], [2]))  # lam(x(yz))
    out = []
    # B(b, ca) = B(b f(c), a): lam(ca b) = lam(a b f(c))
    lhs = P.transpose(1, 2, 0)  # [a,b,c]
    rhs = tdot(F, P, f, ([2], [0]))  # [a,b,c]
    if not np.all(lhs == rhs):
        out.append("B(b,ca) = B(bf(c),a) fails")
    # B(b, a) = B(f(a), b): lam(ab) = lam(b f(a))
    if not np.all(G == matmul(F, G, f).T):
        out.append("B(b,a) = B(f(a),b) fails")
    # B(b, ac) = B(cb, a): lam(ac b) = lam(a cb)
    if not np.all(P == Q):
        out.append("B(b,ac) = B(cb,a) fails")
    # B(b, h*.a) = B((h*S).b, a)
    S = A.hopf.antipode
    for s in range(A.hopf.dim):
        act = hstar_matrix(A, F.basis_vector(A.hopf.dim, s))
        actS = hstar_matrix(A, S[s, :])
        if not np.all(matmul(F, act.T, G) == matmul(F, G, actS)):
            out.append(f"B(b,h*.a) = B((h*S).b,a) fails for h* = P_{A.hopf.labels[s]}")
    return out


def check_symmetric(A: ComoduleAlgebraSC, u, budget: int = DEFAULT_BUDGET, seed: int = 0,
                    trials: int = DEFAULT_TRIALS) -> CheckReport:
    require_comodule_algebra(A)
    C = symmetric_constraints(A, u)  # raises for non-sovereign u
    rep = decide(A, kernel(A.field, C), budget, seed, trials, constraints=C)
    if rep.yes:
        bad = form_identity_failures(A, u, rep.witness)
        if bad:
            raise CheckerInconsistency("; ".join(bad))
        rep.diagnostics.append("form identities B1, B2, B3 and colinearity verified on the witness")
    return rep


FROBENIUS, SYMMETRIC = "frobenius", "symmetric"


def check_plain(A: AlgebraSC, kind: str, budget: int = DEFAULT_BUDGET, seed: int = 0,
                trials: int = DEFAULT_TRIALS) -> CheckReport:
    """Plain k-algebra check, run through the H = k engines."""
    if isinstance(A, ComoduleAlgebraSC):
        A = A.alg
    C = trivial_comodule(A)
    if kind == FROBENIUS:
        return check_frobenius_in_MH(C, budget, seed, trials)
    if kind == SYMMETRIC:
        return check_symmetric(C, C.hopf.counit, budget, seed, trials)
    raise ValueError(f"kind must be {FROBENIUS!r} or {SYMMETRIC!r}")


# -- witness transfer ----------------------------------------------------------------


@dataclass
class TransferResult:
    functional: np.ndarray
    colinear: bool
    nondegenerate: bool
    symmetric: bool | None  # None when the symmetric statement does not apply
    notes: list = dc_field(default_factory=list)


def _smash(A, smash):
    return smash if smash is not None else smash_product(A)


def transfer_witness_to_smash(A: ComoduleAlgebraSC, lam, smash: Smash | None = None) -> TransferResult:
    """lam_bar(a_i # P_j) = lam(a_i) t_j with t a right integral in H."""
    F, H = A.field, A.hopf
    lam = F.array(lam)
    if not satisfies(F, colinear_constraints(A), lam):
        raise PreconditionError("functional is not colinear")
    sm = _smash(A, smash)
    t = integrals(H, RIGHT, IN_H).generator
    bar = F.reduce(np.multiply.outer(lam, t).reshape(-1))
    C = sm.comodule
    res = TransferResult(bar, satisfies(F, colinear_constraints(C), bar), gram(C, bar).nondegenerate, None)
    nondeg = gram(A, lam).nondegenerate
    if nondeg and not res.nondegenerate:
        raise CheckerInconsistency("transfer lost nondegeneracy")
    if not res.colinear:
        raise CheckerInconsistency("transferred functional is not colinear")
    if check_theorem42_precondition(H):
        pair = distinguished_pair(H)
        if satisfies(F, symmetric_constraints(A, pair.alpha), lam):
            res.symmetric = satisfies(F, symmetric_constraints(C, pair.g), bar)
            if not res.symmetric:
                raise CheckerInconsistency("transferred functional is not (H*,g)-symmetric")
    else:
        res.notes.append("S^2 precondition fails: symmetric transfer not attempted")
    return res


def transfer_witness_from_smash(A: ComoduleAlgebraSC, mu, smash: Smash | None = None) -> TransferResult:
    """mu_tilde(a_i) = mu(a_i # T) with T a left integral on H."""
    F, H = A.field, A.hopf
    if not check_theorem42_precondition(H):
        raise PreconditionError("S^2 = g^-1(-)g = alpha-twist precondition fails")
    sm = _smash(A, smash)
    pair = distinguished_pair(H)
    mu = F.array(mu)
    if not satisfies(F, symmetric_constraints(sm.comodule, pair.g), mu):
        raise PreconditionError("functional is not in the (H*,g)-symmetric space of the smash")
    T = integrals(H, LEFT, ON_H).generator
    m = H.dim
    tilde = tdot(F, mu.reshape(A.dim, m), T, ([1], [0]))
    res = TransferResult(
        tilde,
        satisfies(F, colinear_constraints(A), tilde),
        gram(A, tilde).nondegenerate,
        satisfies(F, symmetric_constraints(A, pair.alpha), tilde),
    )
    if not res.symmetric:
        raise CheckerInconsistency("pulled-back functional is not (H,alpha)-symmetric")
    if gram(sm.comodule, mu).nondegenerate and not res.nondegenerate:
        raise CheckerInconsistency("pull-back lost nondegeneracy")
    if not res.nondegenerate:
        res.notes.append("degenerate functional")
    return res


# -- Hopf algebra cross-check ------------------------------------------------------


@dataclass
class HopfSymmetricCrosscheck:
    value: bool
    unimodular: bool
    s2_inner: str  # a pencil verdict
    plain: CheckReport
    probabilistic: bool

    def __bool__(self) -> bool:
        return self.value


def s2_inner_report(H: HopfSC, budget: int = DEFAULT_BUDGET, seed: int = 0,
                    trials: int = DEFAULT_TRIALS) -> CheckReport:
    """Is there an invertible a with S^2(h) a = a h for all h?"""
    F = H.field
    sols = s2_inner_space(H)
    mats = [H.alg.left_mult(a) for a in sols]
    out = pencil_search(F, mats, H.dim, budget, seed, trials)
    if out.verdict != YES:
        return CheckReport(out.verdict, None, out.trials, out.note, out.diagnostics, F)
    a = F.zeros(H.dim)
    for x, v in zip(out.coords, sols):
        a = F.reduce(a + x * v)
    a = normalize_first(F, a)
    if rank(F, H.alg.left_mult(a)) != H.dim:
        raise CheckerInconsistency("S^2-implementing element is not invertible")
    return CheckReport(YES, a, out.trials, out.note, out.diagnostics, F)


def hopf_symmetric_crosscheck(H: HopfSC, budget: int = DEFAULT_BUDGET, seed: int = 0,
                              trials: int = DEFAULT_TRIALS) -> HopfSymmetricCrosscheck:
    """Symmetric as an algebra iff unimodular and S^2 inner, checked both ways."""
    uni = is_unimodular(H)
    inner = s2_inner_report(H, budget, seed, trials)
    plain = check_plain(H.alg, SYMMETRIC, budget, seed, trials)
    value = uni and inner.yes
    probabilistic = NO_PROBABILISTIC in (inner.verdict, plain.verdict)
    if not probabilistic and value != plain.yes:
        raise CheckerInconsistency(
            f"unimodular={uni}, S^2 inner={inner.verdict} but plain symmetric={plain.verdict}"
        )
    return HopfSymmetricCrosscheck(value, uni, inner.verdict, plain, probabilistic)


# -- coinvariants ---------------------------------------------------------------------


@dataclass
class CoinvariantsTransferReport:
    coinvariant_dim: int
    frobenius_in_MH: str
    coinvariants_frobenius: str | None
    involutory: bool
    eps_symmetric: str | None
    coinvariants_symmetric: str | None
    ok: bool
    notes: list = dc_field(default_factory=list)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def check_coinvariants_transfer(A: ComoduleAlgebraSC, budget: int = DEFAULT_BUDGET, seed: int = 0,
                                trials: int = DEFAULT_TRIALS) -> CoinvariantsTransferReport:
    H = A.hopf
    if not is_cosemisimple(H):
        raise PreconditionError("Hopf algebra is not cosemisimple")
    B, _ = coinvariants(A)
    frob = check_frobenius_in_MH(A, budget, seed, trials)
    ok = True
    notes = []
    cf = None
    if frob.yes:
        cf = check_plain(B, FROBENIUS, budget, seed, trials).verdict
        ok = ok and cf == YES
    else:
        notes.append("A is not Frobenius in M^H; no claim about the coinvariants")
    inv = is_involutory(H)
    es = cs = None
    if inv:
        es = check_symmetric(A, H.counit, budget, seed, trials).verdict
        if es == YES:
            cs = check_plain(B, SYMMETRIC, budget, seed, trials).verdict
            ok = ok and cs == YES
    return CoinvariantsTransferReport(B.dim, frob.verdict, cf, inv, es, cs, ok, notes)


__all__ = [
    "YES",
    "NO_CERTIFIED",
    "NO_PROBABILISTIC",
    "CheckReport",
    "BilinearFormSC",
    "TransferResult",
    "PreconditionError",
    "CheckerInconsistency",
    "colinear_space",
    "symmetric_space",
    "colinear_constraints",
    "satisfies",
    "FROBENIUS",
    "SYMMETRIC",
    "RIGHT_ACTION",
    "LEFT_ACTION",
    "HSTAR_ACTION",
    "symmetric_constraints",
    "gram",
    "largest_stable_subspace_in_kernel",
    "pencil_search",
    "decide",
    "check_frobenius_in_MH",
    "check_symmetric",
    "check_plain",
    "form_identity_failures",
    "transfer_witness_to_smash",
    "transfer_witness_from_smash",
    "hopf_symmetric_crosscheck",
    "s2_inner_report",
    "check_coinvariants_transfer",
]
