"""Right H-comodule algebras and the twisted dual bimodule F(A*).

A coaction is stored as ``coaction[i, j, k]``: the coefficient of
``a_j (x) h_k`` in ``rho(a_i)``.  The induced left H*-action is
``h* . a = sum h*(a_1) a_0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .exactlin import DimensionError, Field, is_zero, matmul, rank, tdot
from .hopfcore import (
    AlgebraSC,
    HopfSC,
    ValidationError,
    antipode_square,
    character_inverse,
    validate_algebra,
)
from .structure import is_sovereign_character


class NotSovereignError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ComoduleAlgebraSC:
    alg: AlgebraSC
    hopf: HopfSC
    coaction: np.ndarray
    name: str = ""

    def __post_init__(self):
        n, m = self.alg.dim, self.hopf.dim
        if self.alg.field != self.hopf.field:
            raise DimensionError("algebra and Hopf algebra live over different fields")
        if self.coaction.shape != (n, n, m):
            raise DimensionError(f"coaction has shape {self.coaction.shape}, expected {(n, n, m)}")

    @property
    def field(self) -> Field:
        return self.alg.field

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def labels(self):
        return self.alg.labels

    def rho(self, x) -> np.ndarray:
        """rho(x) as an (n, m) coefficient matrix."""
        return tdot(self.field, x, self.coaction, ([0], [0]))


def trivial_coaction(A: AlgebraSC, H: HopfSC) -> np.ndarray:
    """rho(a) = a (x) 1."""
    F = A.field
    return F.reduce(np.multiply.outer(F.eye(A.dim), H.unit))


def validate_comodule_algebra(A: ComoduleAlgebraSC) -> list[str]:
    """Coassociativity, counit law, multiplicativity of rho and rho(1) = 1 (x) 1."""
    F, H, r, lab = A.field, A.hopf, A.coaction, A.labels
    out = validate_algebra(A.alg)
    left = tdot(F, r, r, ([1], [0])).transpose(0, 2, 3, 1)
    right = tdot(F, r, H.comult, ([2], [0]))
    bad = np.nonzero(F.reduce(left - right) != 0)[0]
    if len(bad):
        out.append(f"coaction coassociativity fails on {lab[bad[0]]}")
    cu = tdot(F, r, H.counit, ([2], [0]))
    for i in range(A.dim):
        if not np.all(cu[i] == F.eye(A.dim)[i]):
            out.append(f"coaction counit law fails on {lab[i]}")
    lhs = tdot(F, A.alg.mult, r, ([2], [0]))  # [i,j,p,q]
    x = tdot(F, r, A.alg.mult, ([1], [0]))  # [i,b,c,p]
    y = tdot(F, x, r, ([2], [1]))  # [i,b,p,j,d]
    rhs = tdot(F, y, H.mult, ([1, 4], [0, 1])).transpose(0, 2, 1, 3)
    diff = F.reduce(lhs - rhs)
    for i, j in sorted({(i, j) for i, j, _, _ in zip(*np.nonzero(diff != 0))})[:8]:
        out.append(f"rho({lab[i]}{lab[j]}) != rho({lab[i]})rho({lab[j]})")
    if not np.all(A.rho(A.alg.unit) == F.reduce(np.multiply.outer(A.alg.unit, H.unit))):
        out.append("rho(1) = 1 (x) 1 fails")
    return out


def require_comodule_algebra(A: ComoduleAlgebraSC) -> ComoduleAlgebraSC:
    problems = validate_comodule_algebra(A)
    if problems:
        raise ValidationError(problems)
    return A


def hstar_action(A: ComoduleAlgebraSC) -> np.ndarray:
    """act[s, i, j]: coefficient of a_j in P_s . a_i."""
    return A.coaction.transpose(2, 0, 1).copy()


def hstar_matrix(A: ComoduleAlgebraSC, hstar) -> np.ndarray:
    """Matrix of a -> h* . a for a covector h* on H."""
    F = A.field
    return tdot(F, A.coaction, F.array(hstar), ([2], [0])).T


@dataclass(frozen=True, eq=False)
class DualComodule:
    coaction: np.ndarray
    eq1_holds: bool


def dual_coaction(A: ComoduleAlgebraSC) -> np.ndarray:
    """p_l -> sum_{i,k} rho[i,l,k] p_i (x) S(h_k), i.e. result[l, i, q]."""
    return tdot(A.field, A.coaction, A.hopf.antipode, ([2], [1])).transpose(1, 0, 2)


def dual_comodule(A: ComoduleAlgebraSC) -> DualComodule:
    """Coaction on A* plus the check (h*.a*)(a) = a*((h* o S) . a) on all basis triples."""
    F, H = A.field, A.hopf
    rs = dual_coaction(A)
    ok = True
    for s in range(H.dim):
        # (P_s . p_l)(a_i) read from the dual coaction
        lhs = rs[:, :, s]  # [l, i]
        rhs = hstar_matrix(A, H.antipode[s, :])  # [l, i] = p_l((P_s o S) . a_i)
        ok = ok and bool(np.all(lhs == rhs))
    return DualComodule(rs, ok)


def shift_S2(A: ComoduleAlgebraSC) -> ComoduleAlgebraSC:
    """A^(S^2): the same algebra with coaction a -> sum a_0 (x) S^2(a_1)."""
    F = A.field
    r = tdot(F, A.coaction, antipode_square(A.hopf), ([2], [1]))
    name = f"{A.name}^(S2)" if A.name else ""
    return ComoduleAlgebraSC(A.alg, A.hopf, r, name)


def is_algebra_map(A: AlgebraSC, B: AlgebraSC, f) -> bool:
    F = A.field
    lhs = tdot(F, A.mult, f, ([2], [1]))  # f(a_i a_j): [i,j,k']
    x = tdot(F, f, B.mult, ([0], [0]))  # [i,b,k]
    rhs = tdot(F, f, x, ([0], [1])).transpose(1, 0, 2)
    return is_zero(F.reduce(lhs - rhs)) and bool(np.all(matmul(F, f, A.unit) == B.unit))


def is_colinear(A: ComoduleAlgebraSC, B: ComoduleAlgebraSC, f) -> bool:
    """rho_B(f(a)) = (f (x) id) rho_A(a) on all basis a."""
    F = A.field
    lhs = tdot(F, f, B.coaction, ([0], [0]))  # [i,p,q]
    rhs = tdot(F, A.coaction, f, ([1], [1])).transpose(0, 2, 1)
    return is_zero(F.reduce(lhs - rhs))


def twist_iso(A: ComoduleAlgebraSC, u) -> np.ndarray:
    """Matrix of f(a) = u^{-1} . a, validated as a comodule-algebra iso A -> A^(S^2)."""
    F, H = A.field, A.hopf
    u = F.array(u)
    if not is_sovereign_character(H, u):
        raise NotSovereignError("character is not sovereign for this Hopf algebra")
    f = hstar_matrix(A, character_inverse(H, u))
    problems = []
    if not is_algebra_map(A.alg, A.alg, f):
        problems.append("f is not an algebra map")
    if rank(F, f) != A.dim:
        problems.append("f is not invertible")
    if not is_colinear(A, shift_S2(A), f):
        problems.append("f is not colinear A -> A^(S^2)")
    if problems:
        raise ValidationError(problems)
    return f


@dataclass(frozen=True, eq=False)
class DoiHopfModuleSC:
    """A module carrying a right H-coaction and optional left/right A-actions.

    ``left_action[a, m, x]`` is the coefficient of m_x in a_a . m_m;
    ``right_action[m, a, x]`` is the coefficient of m_x in m_m . a_a.
    """

    labels: tuple
    algebra: ComoduleAlgebraSC
    coaction: np.ndarray
    left_action: np.ndarray | None = None
    right_action: np.ndarray | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def left(self, a, m) -> np.ndarray:
        F = self.algebra.field
        return tdot(F, tdot(F, a, self.left_action, ([0], [0])), m, ([0], [0]))

    def right(self, m, a) -> np.ndarray:
        F = self.algebra.field
        return tdot(F, tdot(F, m, self.right_action, ([0], [0])), a, ([0], [0]))


def validate_doi_hopf(M: DoiHopfModuleSC) -> list[str]:
    A = M.algebra
    F, H, mA = A.field, A.hopf, A.alg.mult
    I = F.eye(M.dim)
    out = []
    R, L, rM = M.right_action, M.left_action, M.coaction
    if R is not None:
        lhs = tdot(F, R, R, ([2], [0]))  # (m.a).b: [m,a,b,y]
        rhs = tdot(F, mA, R, ([2], [1])).transpose(2, 0, 1, 3)  # m.(ab): [a,b,m,y]
        if not is_zero(F.reduce(lhs - rhs)):
            out.append("right action is not associative")
        if not np.all(tdot(F, R, A.alg.unit, ([1], [0])) == I):
            out.append("right action: m.1 != m")
        if not _colinear_right(F, R, rM, A, H):
            out.append("right action is not colinear")
    if L is not None:
        lhs = tdot(F, L, L, ([2], [1]))  # a.(b.m): L[b,m,x] L[a,x,y] -> [b,m,a,y]
        lhs = lhs.transpose(2, 0, 1, 3)  # [a,b,m,y]
        rhs = tdot(F, mA, L, ([2], [0]))  # (ab).m: [a,b,m,y]
        if not is_zero(F.reduce(lhs - rhs)):
            out.append("left action is not associative")
        if not np.all(tdot(F, A.alg.unit, L, ([0], [0])) == I):
            out.append("left action: 1.m != m")
        if not _colinear_left(F, L, rM, A, H):
            out.append("left action is not colinear")
    if L is not None and R is not None:
        lhs = tdot(F, L, R, ([2], [0]))  # (a.m).b: [a,m,b,y]
        rhs = tdot(F, R, L, ([2], [1])).transpose(2, 0, 1, 3)  # a.(m.b): R[m,b,x] L[a,x,y] -> [m,b,a,y]
        if not is_zero(F.reduce(lhs - rhs)):
            out.append("left and right actions do not commute")
    return out


def _colinear_right(F, R, rM, A, H) -> bool:
    # rho(m.a) = sum m_0.a_0 (x) m_1 a_1
    lhs = tdot(F, R, rM, ([2], [0]))  # [m,a,p,q]
    # sum rM[m,x,b] rA[a,c,d] R[x,c,p] mH[b,d,q]
    t = tdot(F, rM, R, ([1], [0]))  # [m,b,c,p]
    t = tdot(F, t, A.coaction, ([2], [1]))  # [m,b,p,a,d]
    t = tdot(F, t, H.mult, ([1, 4], [0, 1]))  # [m,p,a,q]
    return is_zero(F.reduce(lhs - t.transpose(0, 2, 1, 3)))


def _colinear_left(F, L, rM, A, H) -> bool:
    lhs = tdot(F, L, rM, ([2], [0]))  # rho(a.m): [a,m,p,q]
    # sum rA[a,c,d] rM[m,x,b] L[c,x,p] mH[d,b,q]
    t = tdot(F, A.coaction, L, ([1], [0]))  # [a,d,x,p]
    t = tdot(F, t, rM, ([2], [1]))  # [a,d,p,m,b]
    t = tdot(F, t, H.mult, ([1, 4], [0, 1]))  # [a,p,m,q]
    return is_zero(F.reduce(lhs - t.transpose(0, 2, 1, 3)))


def _dual_labels(A: ComoduleAlgebraSC) -> tuple:
    return tuple("p_" + lab for lab in A.labels)


def usual_dual_left_action(A: ComoduleAlgebraSC) -> np.ndarray:
    """(a . a*)(x) = a*(x a), as left_action[a, l, x]."""
    return A.alg.mult.transpose(1, 2, 0).copy()


def usual_dual_right_action(A: ComoduleAlgebraSC) -> np.ndarray:
    """(a* . b)(x) = a*(b x), as right_action[l, b, x]."""
    return A.alg.mult.transpose(2, 0, 1).copy()


def F_twisted_dual(A: ComoduleAlgebraSC, u) -> DoiHopfModuleSC:
    """A* in _A M^H_A: usual right action, left action twisted by f = u^{-1}., dual coaction."""
    F = A.field
    f = twist_iso(A, u)
    L = tdot(F, f, usual_dual_left_action(A), ([0], [0]))
    dual = dual_comodule(A)
    M = DoiHopfModuleSC(
        _dual_labels(A),
        A,
        dual.coaction,
        L,
        usual_dual_right_action(A),
        [] if dual.eq1_holds else ["dual coaction is not compatible with the transposed H*-action"],
    )
    problems = validate_doi_hopf(M)
    if problems:
        raise ValidationError(problems)
    return M


def untwisted_dual_left_violations(A: ComoduleAlgebraSC, shifted: bool = False) -> list[str]:
    """Diagnostic: is A* with its usual left action a left Doi-Hopf module?

    With ``shifted`` the algebra acting is A^(S^2), which always works; with the
    original coaction it may fail when S^2 != id.
    """
    B = shift_S2(A) if shifted else A
    M = DoiHopfModuleSC(
        _dual_labels(A), B, dual_coaction(A), usual_dual_left_action(A), None
    )
    return validate_doi_hopf(M)
