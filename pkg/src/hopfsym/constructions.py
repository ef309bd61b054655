"""Builders: group Hopf algebras, Sweedler's H4, Taft algebras, gradings,
module-algebra conversion, smash products, trivial extensions, coinvariants
and idempotent corners."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corep import (
    ComoduleAlgebraSC,
    F_twisted_dual,
    is_algebra_map,
    require_comodule_algebra,
    trivial_coaction,
    twist_iso,
)
from .exactlin import (
    MAX_DIM,
    MAX_SMASH_DIM,
    QQ,
    DimensionError,
    Field,
    FieldError,
    inverse,
    kernel,
    matmul,
    solve_linear,
    span_basis,
    tdot,
)
from .hopfcore import (
    AlgebraSC,
    CoalgebraSC,
    HopfSC,
    ValidationError,
    antipode_inverse,
    dual_hopf,
    require_valid,
)


# -- groups and Hopf algebras ---------------------------------------------------


def validate_group(table: Sequence[Sequence[int]]) -> int:
    """Check a Cayley table; returns the index of the identity."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise ValidationError("Cayley table must be square and non-empty")
    if any(not 0 <= x < n for row in table for x in row):
        raise ValidationError("Cayley table entries out of range")
    ident = [e for e in range(n) if all(table[e][i] == i and table[i][e] == i for i in range(n))]
    if not ident:
        raise ValidationError("no identity element")
    e = ident[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValidationError(f"group law not associative at ({a},{b},{c})")
        if not any(table[a][b] == e for b in range(n)):
            raise ValidationError(f"element {a} has no inverse")
    return e


def cyclic_group(n: int) -> tuple[list[list[int]], tuple[str, ...]]:
    labels = tuple("e" if k == 0 else "g" if k == 1 else f"g{k}" for k in range(n))
    return [[(i + j) % n for j in range(n)] for i in range(n)], labels


def group_hopf(table, labels=None, field: Field = QQ, name: str = "") -> HopfSC:
    """The group Hopf algebra kG: grouplike basis, S(g) = g^{-1}."""
    e = validate_group(table)
    n = len(table)
    labels = tuple(labels) if labels is not None else tuple(f"g{i}" for i in range(n))
    mult = field.zeros((n, n, n))
    comult = field.zeros((n, n, n))
    S = field.zeros((n, n))
    for i in range(n):
        comult[i, i, i] = 1
        for j in range(n):
            mult[i, j, table[i][j]] = 1
            if table[i][j] == e:
                S[j, i] = 1
    unit = field.basis_vector(n, e)
    counit = field.array([1] * n)
    H = HopfSC(AlgebraSC(field, labels, mult, unit), _coalg(field, labels, comult, counit), S, name)
    return require_valid(H)


def _coalg(field, labels, comult, counit):
    return CoalgebraSC(field, tuple(labels), comult, counit)


def cyclic_group_hopf(n: int, field: Field = QQ) -> HopfSC:
    table, labels = cyclic_group(n)
    return group_hopf(table, labels, field, name=f"kC{n}")


def trivial_hopf(field: Field = QQ) -> HopfSC:
    """The one-dimensional Hopf algebra k."""
    one = field.array([[[1]]])
    return HopfSC.build(field, ("1",), one, [1], one, [1], [[1]], name="k")


H4_LABELS = ("1", "c", "x", "cx")


def sweedler_h4(field: Field = QQ) -> HopfSC:
    """Sweedler's 4-dimensional Hopf algebra on the basis (1, c, x, cx)."""
    if field.characteristic == 2:
        raise FieldError("Sweedler's H4 needs characteristic != 2")
    one, c, x, cx = range(4)
    products = {
        (c, c): [(one, 1)], (c, x): [(cx, 1)], (c, cx): [(x, 1)],
        (x, c): [(cx, -1)], (cx, c): [(x, -1)],
    }
    mult = field.zeros((4, 4, 4))
    for i in range(4):
        mult[one, i, i] = 1
        mult[i, one, i] = 1
    for (i, j), terms in products.items():
        for k, v in terms:
            mult[i, j, k] = field(v)
    comult = field.zeros((4, 4, 4))
    comult[one, one, one] = 1
    comult[c, c, c] = 1
    comult[x, c, x] = 1
    comult[x, x, one] = 1
    comult[cx, one, cx] = 1
    comult[cx, cx, c] = 1
    S = field.zeros((4, 4))
    S[one, one] = 1
    S[c, c] = 1
    S[cx, x] = field(-1)  # S(x) = -cx
    S[x, cx] = 1  # S(cx) = x
    H = HopfSC(
        AlgebraSC(field, H4_LABELS, mult, field.basis_vector(4, one)),
        _coalg(field, H4_LABELS, comult, field.array([1, 1, 0, 0])),
        S,
        "H4",
    )
    return require_valid(H)


def h4_selfduality(field: Field = QQ) -> np.ndarray:
    """Hopf isomorphism H4 -> H4*: 1->P_1+P_c, c->P_1-P_c, x->P_x-P_cx, cx->-P_x-P_cx."""
    cols = [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, -1], [0, 0, -1, -1]]
    return field.array(cols).T.copy()


def taft_algebra(n: int, omega, field: Field) -> HopfSC:
    """Taft algebra: c^n = 1, x^n = 0, xc = omega cx, Delta(x) = c(x)x + x(x)1.

    ``omega`` must be a primitive n-th root of unity in ``field``.
    """
    w = field(omega)
    powers = [1]
    for _ in range(1, n):
        powers.append(field.mul(powers[-1], w))
    if field.mul(powers[-1], w) != 1 or any(p == 1 for p in powers[1:]):
        raise FieldError(f"{omega} is not a primitive {n}-th root of unity in {field}")
    dim = n * n
    idx = lambda i, j: (i % n) * n + j  # noqa: E731  basis c^i x^j
    labels = tuple(
        ("1" if i == 0 and j == 0 else "")
        + ("" if i == 0 else "c" if i == 1 else f"c{i}")
        + ("" if j == 0 else "x" if j == 1 else f"x{j}")
        for i in range(n) for j in range(n)
    )
    mult = field.zeros((dim, dim, dim))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l < n:
                        mult[idx(i, j), idx(k, l), idx(i + k, j + l)] = powers[(j * k) % n]
    unit = field.basis_vector(dim, 0)
    alg = AlgebraSC(field, labels, mult, unit)
    # Delta on generators, extended multiplicatively in H (x) H
    def tmul(X, Y):
        # (a (x) b)(c (x) d) = ac (x) bd ; X[a,b], Y[c,d]
        t = tdot(field, mult, X, ([0], [0]))  # m[a,c,p] X[a,b] -> [c,p,b]
        t = tdot(field, t, Y, ([0], [0]))  # [p,b,d]
        return tdot(field, t, mult, ([1, 2], [0, 1]))  # [p,q]

    dc = np.multiply.outer(alg.basis(idx(1, 0)), alg.basis(idx(1, 0)))
    dx = field.reduce(
        np.multiply.outer(alg.basis(idx(1, 0)), alg.basis(idx(0, 1)))
        + np.multiply.outer(alg.basis(idx(0, 1)), unit)
    )
    comult = field.zeros((dim, dim, dim))
    one = field.reduce(np.multiply.outer(unit, unit))
    ci = one
    for i in range(n):
        cur = ci
        for j in range(n):
            comult[idx(i, j)] = cur
            cur = tmul(cur, dx)
        ci = tmul(ci, dc)
    counit = field.array([1 if j == 0 else 0 for i in range(n) for j in range(n)])
    # S(c^i x^j) = S(x)^j S(c)^i with S(c) = c^{n-1}, S(x) = -c^{n-1} x
    Sc = alg.basis(idx(n - 1, 0))
    Sx = field.reduce(-alg.basis(idx(n - 1, 1)))
    S = field.zeros((dim, dim))
    for i in range(n):
        for j in range(n):
            v = unit
            for _ in range(j):
                v = alg.mul(v, Sx)
            for _ in range(i):
                v = alg.mul(v, Sc)
            S[:, idx(i, j)] = v
    H = HopfSC(alg, _coalg(field, labels, comult, counit), S, f"T{n}")
    return require_valid(H)


def drinfeld_double(H: HopfSC) -> HopfSC:
    """D(H) on the basis P_s (x) e_i (s-major), coalgebra H*^cop (x) H.

    (f (x) a)(f' (x) b) = sum f f'(S^{-1}(a3) ? a1) (x) a2 b.
    """
    F, n = H.field, H.dim
    if n * n > MAX_DIM:
        raise DimensionError(f"double of a {n}-dimensional Hopf algebra exceeds cap {MAX_DIM}")
    m, D = H.mult, H.comult
    Si = antipode_inverse(H)
    # f'[x] = coefficient t of S^{-1}(e_r) x e_p, summed against Delta^2(e_i) = e_p (x) e_q (x) e_r
    X = tdot(F, Si, m, ([0], [0]))  # [r,x,v]
    X = tdot(F, X, m, ([2], [0]))  # [r,x,p,t]
    X = tdot(F, H.delta2(), X, ([3, 1], [0, 2]))  # [i,q,x,t]
    X = tdot(F, X, D, ([2], [2]))  # product in H*: [i,q,t,k,s]
    X = tdot(F, X, m, ([1], [0]))  # [i,t,k,s,j,z]
    mult = X.transpose(3, 0, 1, 4, 2, 5).reshape(n * n, n * n, n * n).copy()
    unit = F.reduce(np.multiply.outer(H.counit, H.unit)).reshape(-1)
    comult = np.multiply.outer(m, D).transpose(2, 3, 1, 4, 0, 5).reshape(n * n, n * n, n * n).copy()
    counit = F.reduce(np.multiply.outer(H.unit, H.counit)).reshape(-1)
    labels = tuple(f"P_{a}.{b}" for a in H.labels for b in H.labels)
    alg = AlgebraSC(F, labels, mult, unit)
    S = F.zeros((n * n, n * n))
    for s in range(n):
        for i in range(n):
            left = F.reduce(np.multiply.outer(H.counit, H.S(H.basis(i)))).reshape(-1)
            right = F.reduce(np.multiply.outer(Si[s, :], H.unit)).reshape(-1)
            S[:, s * n + i] = alg.mul(left, right)
    return require_valid(HopfSC(alg, _coalg(F, labels, comult, counit), S, f"D({H.name})"))


# -- small algebras -------------------------------------------------------------


def algebra_from_products(field: Field, labels, products: dict, unit: dict, name="") -> AlgebraSC:
    """Build an algebra from ``{(a, b): {c: coeff}}`` on labels; missing products are 0."""
    labels = tuple(labels)
    n = len(labels)
    pos = {l: i for i, l in enumerate(labels)}
    mult = field.zeros((n, n, n))
    for (a, b), res in products.items():
        for c, v in res.items():
            mult[pos[a], pos[b], pos[c]] = field(v)
    u = field.zeros(n)
    for l, v in unit.items():
        u[pos[l]] = field(v)
    return AlgebraSC(field, labels, mult, u)


def upper_triangular(field: Field = QQ) -> AlgebraSC:
    """2x2 upper triangular matrices on (E11, E12, E22)."""
    return algebra_from_products(
        field,
        ("E11", "E12", "E22"),
        {
            ("E11", "E11"): {"E11": 1},
            ("E11", "E12"): {"E12": 1},
            ("E12", "E22"): {"E12": 1},
            ("E22", "E22"): {"E22": 1},
        },
        {"E11": 1, "E22": 1},
    )


def product_kxk(field: Field = QQ) -> AlgebraSC:
    return algebra_from_products(
        field, ("e1", "e2"), {("e1", "e1"): {"e1": 1}, ("e2", "e2"): {"e2": 1}}, {"e1": 1, "e2": 1}
    )


def dual_numbers(field: Field = QQ) -> AlgebraSC:
    """k[X]/(X^2) on (1, X)."""
    return algebra_from_products(
        field, ("1", "X"), {("1", "1"): {"1": 1}, ("1", "X"): {"X": 1}, ("X", "1"): {"X": 1}}, {"1": 1}
    )


def ground_algebra(field: Field = QQ) -> AlgebraSC:
    return algebra_from_products(field, ("1",), {("1", "1"): {"1": 1}}, {"1": 1})


def trivial_comodule(A: AlgebraSC, H: HopfSC | None = None, name: str = "") -> ComoduleAlgebraSC:
    """A with rho(a) = a (x) 1 (over k by default)."""
    H = H if H is not None else trivial_hopf(A.field)
    return ComoduleAlgebraSC(A, H, trivial_coaction(A, H), name)


def regular_comodule(H: HopfSC, name: str = "") -> ComoduleAlgebraSC:
    """H as a right H-comodule algebra via Delta."""
    return ComoduleAlgebraSC(H.alg, H, H.comult.copy(), name or (H.name + "regular"))


# -- gradings and the module/comodule dictionary ---------------------------------


@dataclass(frozen=True, eq=False)
class GradedAlgebraSpec:
    algebra: AlgebraSC
    group: HopfSC  # a group Hopf algebra; its basis labels name the group elements
    degrees: tuple  # degree (group basis index) of every algebra basis element

    def validate(self) -> list[str]:
        A, G = self.algebra, self.group
        out = []
        if len(self.degrees) != A.dim:
            return ["one degree per basis element is required"]
        gm = G.mult
        e = next(i for i, x in enumerate(G.unit) if x != 0)
        for i, j, k in zip(*np.nonzero(A.mult != 0)):
            if gm[self.degrees[i], self.degrees[j], self.degrees[k]] == 0:
                out.append(
                    f"{A.labels[i]}*{A.labels[j]} has a component on {A.labels[k]} of the wrong degree"
                )
        for i, x in enumerate(A.unit):
            if x != 0 and self.degrees[i] != e:
                out.append(f"unit has a component {A.labels[i]} of nontrivial degree")
        return out


def graded_to_comodule(spec: GradedAlgebraSpec, name: str = "") -> ComoduleAlgebraSC:
    problems = spec.validate()
    if problems:
        raise ValidationError(problems)
    F, n = spec.algebra.field, spec.algebra.dim
    r = F.zeros((n, n, spec.group.dim))
    for i, d in enumerate(spec.degrees):
        r[i, i, d] = 1
    return require_comodule_algebra(ComoduleAlgebraSC(spec.algebra, spec.group, r, name))


def grading_from_comodule(A: ComoduleAlgebraSC) -> GradedAlgebraSpec | None:
    """Read a grading back from a coaction of the form a_i -> a_i (x) g_i, if it is one."""
    degrees = []
    for i in range(A.dim):
        nz = list(zip(*np.nonzero(A.coaction[i] != 0)))
        if len(nz) != 1 or nz[0][0] != i or A.coaction[i][nz[0]] != 1:
            return None
        degrees.append(int(nz[0][1]))
    return GradedAlgebraSpec(A.alg, A.hopf, tuple(degrees))


def regrade(A: AlgebraSC, group: HopfSC, degrees: Sequence, name: str = "") -> ComoduleAlgebraSC:
    """Grade ``A`` by group labels or indices."""
    idx = tuple(group.labels.index(d) if isinstance(d, str) else int(d) for d in degrees)
    return graded_to_comodule(GradedAlgebraSpec(A, group, idx), name)


def module_algebra_violations(A: AlgebraSC, H: HopfSC, act) -> list[str]:
    """act[s, i, j]: coefficient of a_j in h_s . a_i."""
    F = A.field
    out = []
    # (h_s h_t) . a = h_s . (h_t . a)
    lhs = tdot(F, H.mult, act, ([2], [0]))  # [s,t,i,j]
    rhs = tdot(F, act, act, ([2], [1])).transpose(2, 0, 1, 3)  # act[t,i,k] act[s,k,j] -> [t,i,s,j]
    if np.any(F.reduce(lhs - rhs) != 0):
        out.append("action is not associative")
    if not np.all(tdot(F, H.unit, act, ([0], [0])) == F.eye(A.dim)):
        out.append("1 . a != a")
    # h . (ab) = sum (h1 . a)(h2 . b)
    lhs = tdot(F, A.mult, act, ([2], [1]))  # [i,j,s,q]
    t = tdot(F, H.comult, act, ([1], [0]))  # [s,r,i,x]
    t = tdot(F, t, act, ([1], [0]))  # [s,i,x,j,y]
    t = tdot(F, t, A.mult, ([2, 4], [0, 1]))  # [s,i,j,q]
    if np.any(F.reduce(lhs.transpose(2, 0, 1, 3) - t) != 0):
        out.append("h.(ab) != sum (h1.a)(h2.b)")
    h1 = tdot(F, act, A.unit, ([1], [0]))  # [s,j]
    if np.any(F.reduce(h1 - np.multiply.outer(H.counit, A.unit)) != 0):
        out.append("h.1 != eps(h)1")
    return out


def module_to_comodule(A: AlgebraSC, H: HopfSC, act, name: str = "") -> ComoduleAlgebraSC:
    """Left H-module algebra -> right H*-comodule algebra, rho(a) = sum h_s . a (x) P_s."""
    act = A.field.array(act)
    problems = module_algebra_violations(A, H, act)
    if problems:
        raise ValidationError(problems)
    r = act.transpose(1, 2, 0).copy()
    return require_comodule_algebra(ComoduleAlgebraSC(A, dual_hopf(H), r, name))


def transport_coaction(A: ComoduleAlgebraSC, H_new: HopfSC, iso, name: str = "") -> ComoduleAlgebraSC:
    """Regard A as a comodule algebra over H_new through a Hopf iso ``iso``: H_new -> A.hopf."""
    from .hopfcore import hopf_isomorphic_via

    F = A.field
    iso = F.array(iso)
    if not hopf_isomorphic_via(H_new, A.hopf, iso):
        raise ValidationError("transport map is not a Hopf algebra isomorphism")
    inv = inverse(F, iso)
    r = tdot(F, A.coaction, inv, ([2], [1]))
    return require_comodule_algebra(ComoduleAlgebraSC(A.alg, H_new, r, name or A.name))


def h4_dual_numbers_action(field: Field = QQ) -> np.ndarray:
    """H4 acting on k[X]/(X^2): c.1=1, c.X=-X, x.1=0, x.X=1 (cx acts as c after x)."""
    act = field.zeros((4, 2, 2))
    act[0] = field.eye(2)
    act[1, 0, 0] = 1
    act[1, 1, 1] = field(-1)
    act[2, 1, 0] = 1
    act[3, 1, 0] = 1
    return act


def dual_numbers_over_h4(field: Field = QQ, H: HopfSC | None = None) -> ComoduleAlgebraSC:
    """k[X]/(X^2) as a right H4-comodule algebra (module algebra moved through H4 ~ H4*)."""
    H = H if H is not None else sweedler_h4(field)
    over_dual = module_to_comodule(dual_numbers(field), H, h4_dual_numbers_action(field))
    return transport_coaction(over_dual, H, h4_selfduality(field), name="kX/X2")


# -- smash product, trivial extension, coinvariants, corners ----------------------


@dataclass(frozen=True, eq=False)
class Smash:
    comodule: ComoduleAlgebraSC  # A # H* over H*
    base: ComoduleAlgebraSC  # A
    embed_A: np.ndarray  # a -> a # eps
    embed_Hstar: np.ndarray  # h* -> 1 # h*

    @property
    def alg(self) -> AlgebraSC:
        return self.comodule.alg

    def index(self, i: int, j: int) -> int:
        return i * self.base.hopf.dim + j


def smash_product(A: ComoduleAlgebraSC, name: str = "") -> Smash:
    """A # H* on the basis a_i # P_j (i-major), as a right H*-comodule algebra."""
    F, H = A.field, A.hopf
    n, m = A.dim, H.dim
    if n * m > MAX_SMASH_DIM:
        raise DimensionError(f"smash product dimension {n * m} exceeds cap {MAX_SMASH_DIM}")
    D = dual_hopf(H)
    # (a_i#P_j)(a_l#P_s) = sum mH[p,q,j] rho[l,r,p] mA[i,r,v] Delta[w,q,s] a_v#P_w
    X = tdot(F, A.coaction, A.alg.mult, ([1], [1]))  # [l,p,i,v]
    Y = tdot(F, H.mult, X, ([0], [1]))  # [q,j,l,i,v]
    Z = tdot(F, Y, H.comult, ([0], [1]))  # [j,l,i,v,w,s]
    mult = Z.transpose(2, 0, 1, 5, 3, 4).reshape(n * m, n * m, n * m).copy()
    unit = F.reduce(np.multiply.outer(A.alg.unit, H.counit)).reshape(-1)
    labels = tuple(f"{a}#{p}" for a in A.labels for p in D.labels)
    alg = AlgebraSC(F, labels, mult, unit)
    r = np.multiply.outer(F.eye(n), D.comult)  # [i,i',j,p,q]
    r = r.transpose(0, 2, 1, 3, 4).reshape(n * m, n * m, m).copy()
    C = require_comodule_algebra(ComoduleAlgebraSC(alg, D, r, name or (f"{A.name}#H*" if A.name else "")))
    embed_A = F.reduce(np.multiply.outer(F.eye(n), H.counit).transpose(0, 2, 1).reshape(n * m, n))
    embed_H = F.reduce(np.multiply.outer(A.alg.unit, F.eye(m)).reshape(n * m, m))
    if not is_algebra_map(A.alg, alg, embed_A) or not is_algebra_map(D.alg, alg, embed_H):
        raise ValidationError("A#eps or 1#H* is not a subalgebra of the smash product")
    # (a # eps)(1 # h*) = a # h*
    for i in range(n):
        for j in range(m):
            if not np.all(alg.mul(embed_A[:, i], embed_H[:, j]) == F.basis_vector(n * m, i * m + j)):
                raise ValidationError("(a#eps)(1#h*) != a#h*")
    return Smash(C, A, embed_A, embed_H)


@dataclass(frozen=True, eq=False)
class TrivialExtension:
    comodule: ComoduleAlgebraSC
    witness: np.ndarray  # (a, a*) -> a*(1)
    twist: np.ndarray
    character: np.ndarray


def trivial_extension(A: ComoduleAlgebraSC, u, name: str = "") -> TrivialExtension:
    """E(A) = A + F(A*) with (a,a*)(b,b*) = (ab, (u^{-1}.a) b* + a* b)."""
    F, n = A.field, A.dim
    M = F_twisted_dual(A, u)
    mult = F.zeros((2 * n, 2 * n, 2 * n))
    mult[:n, :n, :n] = A.alg.mult
    mult[:n, n:, n:] = M.left_action
    mult[n:, :n, n:] = M.right_action
    unit = np.concatenate([A.alg.unit, F.zeros(n)])
    labels = tuple(A.labels) + tuple(M.labels)
    r = F.zeros((2 * n, 2 * n, A.hopf.dim))
    r[:n, :n, :] = A.coaction
    r[n:, n:, :] = M.coaction
    E = ComoduleAlgebraSC(AlgebraSC(F, labels, mult, unit), A.hopf, r, name or (f"E({A.name})" if A.name else ""))
    require_comodule_algebra(E)
    witness = np.concatenate([F.zeros(n), A.alg.unit])
    return TrivialExtension(E, witness, twist_iso(A, u), F.array(u))


def subalgebra(A: AlgebraSC, vectors: Sequence, unit, labels=None) -> tuple[AlgebraSC, np.ndarray]:
    """Algebra structure on span(vectors) (assumed independent), closed under A's product."""
    F = A.field
    r = len(vectors)
    if r == 0:
        raise DimensionError("zero subalgebra has no unit")
    inc = np.array([list(v) for v in vectors], dtype=object).T.copy()  # n x r
    mult = F.zeros((r, r, r))
    for p in range(r):
        for q in range(r):
            prod = A.mul(vectors[p], vectors[q])
            coords = solve_linear(F, inc, prod)
            if coords is None:
                raise ValidationError("subspace is not closed under multiplication")
            mult[p, q] = coords
    u = solve_linear(F, inc, unit)
    if u is None:
        raise ValidationError("subspace does not contain the unit")
    if labels is None:
        labels = tuple(_vector_label(A, v, k) for k, v in enumerate(vectors))
    return AlgebraSC(F, tuple(labels), mult, u), inc


def _vector_label(A: AlgebraSC, v, k: int) -> str:
    nz = [i for i, x in enumerate(v) if x != 0]
    if len(nz) == 1 and v[nz[0]] == 1:
        return A.labels[nz[0]]
    return f"v{k}"


def coinvariants(A: ComoduleAlgebraSC) -> tuple[AlgebraSC, np.ndarray]:
    """A^coH = {a : rho(a) = a (x) 1} with its inclusion matrix (columns = basis)."""
    F, n, m = A.field, A.dim, A.hopf.dim
    diff = F.reduce(A.coaction - np.multiply.outer(F.eye(n), A.hopf.unit))  # [i,j,k]
    system = diff.reshape(n, n * m).T.copy()
    basis = span_basis(F, kernel(F, system), n)
    return subalgebra(A.alg, basis, A.alg.unit)


def corner(A: AlgebraSC, e) -> tuple[AlgebraSC, np.ndarray]:
    """eAe for an idempotent e, on the echelon basis of the subspace, with unit e."""
    F = A.field
    e = F.array(e)
    if not np.all(A.mul(e, e) == e):
        raise ValidationError("corner element is not idempotent")
    if not np.any(e != 0):
        raise DimensionError("corner at 0 is the zero algebra, which has no unit")
    spans = [A.mul(A.mul(e, A.basis(i)), e) for i in range(A.dim)]
    basis = span_basis(F, spans, A.dim)
    return subalgebra(A, basis, e)
