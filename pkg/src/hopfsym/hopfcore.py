"""Algebras, coalgebras and Hopf algebras given by structure constants.

Conventions (used by every module of the package):

* ``mult[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``;
* ``comult[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``;
* linear maps are matrices acting on coordinate columns, so column ``j`` of
  ``antipode`` holds the coordinates of ``S(e_j)``;
* covectors (functionals, characters) are coordinate arrays of their values
  on the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .exactlin import (
    MAX_DIM,
    MAX_SMASH_DIM,
    DimensionError,
    Field,
    inverse,
    is_zero,
    matmul,
    rank,
    tdot,
)


class ValidationError(ValueError):
    """Raised when structure constants violate an axiom that was required."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations[:5]))


def _check_dim(n: int, what: str, cap: int = MAX_DIM) -> None:
    if n < 1:
        raise DimensionError(f"{what} must have positive dimension")
    if n > cap:
        raise DimensionError(f"{what} has dimension {n} > cap {cap}")


@dataclass(frozen=True, eq=False)
class AlgebraSC:
    field: Field
    labels: tuple[str, ...]
    mult: np.ndarray
    unit: np.ndarray

    def __post_init__(self):
        n = len(self.labels)
        # constructed algebras (smash products) may reach the smash cap;
        # input objects are held to MAX_DIM by the parser and by HopfSC
        _check_dim(n, "algebra", MAX_SMASH_DIM)
        if self.mult.shape != (n, n, n):
            raise DimensionError(f"multiplication table has shape {self.mult.shape}, expected {(n, n, n)}")
        if self.unit.shape != (n,):
            raise DimensionError("unit vector has wrong length")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul(self, x, y) -> np.ndarray:
        """Product of two coordinate vectors."""
        F = self.field
        return F.reduce(np.tensordot(np.tensordot(x, self.mult, axes=([0], [0])), y, axes=([0], [0])))

    def left_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> x y``."""
        return tdot(self.field, x, self.mult, ([0], [0])).T

    def right_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> y x``."""
        return tdot(self.field, self.mult, x, ([1], [0])).T

    def basis(self, i: int) -> np.ndarray:
        return self.field.basis_vector(self.dim, i)

    def element(self, coords: dict[str, object]) -> np.ndarray:
        v = self.field.zeros(self.dim)
        for lab, c in coords.items():
            v[self.labels.index(lab)] = self.field(c)
        return v

    def same_as(self, other: "AlgebraSC") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and bool(np.all(self.mult == other.mult))
            and bool(np.all(self.unit == other.unit))
        )


@dataclass(frozen=True, eq=False)
class CoalgebraSC:
    field: Field
    labels: tuple[str, ...]
    comult: np.ndarray
    counit: np.ndarray

    def __post_init__(self):
        n = len(self.labels)
        _check_dim(n, "coalgebra")
        if self.comult.shape != (n, n, n) or self.counit.shape != (n,):
            raise DimensionError("coalgebra tensors have wrong shape")

    @property
    def dim(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, eq=False)
class HopfSC:
    alg: AlgebraSC
    coalg: CoalgebraSC
    antipode: np.ndarray
    name: str = ""
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.alg.labels != self.coalg.labels or self.alg.field != self.coalg.field:
            raise DimensionError("algebra and coalgebra must share basis and field")
        n = self.alg.dim
        if self.antipode.shape != (n, n):
            raise DimensionError("antipode matrix has wrong shape")

    @classmethod
    def build(cls, field: Field, labels: Sequence[str], mult, unit, comult, counit, antipode, name=""):
        labels = tuple(labels)
        alg = AlgebraSC(field, labels, field.array(mult), field.array(unit))
        coalg = CoalgebraSC(field, labels, field.array(comult), field.array(counit))
        return cls(alg, coalg, field.array(antipode), name)

    @property
    def field(self) -> Field:
        return self.alg.field

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.alg.labels

    @property
    def mult(self):
        return self.alg.mult

    @property
    def unit(self):
        return self.alg.unit

    @property
    def comult(self):
        return self.coalg.comult

    @property
    def counit(self):
        return self.coalg.counit

    def mul(self, x, y):
        return self.alg.mul(x, y)

    def S(self, x):
        return matmul(self.field, self.antipode, x)

    def delta(self, x) -> np.ndarray:
        """Delta(x) as an n x n coefficient matrix."""
        return tdot(self.field, x, self.comult, ([0], [0]))

    def delta2(self) -> np.ndarray:
        """(Delta (x) id) Delta as an order-4 tensor [i, a, b, c]."""
        if "delta2" not in self._cache:
            # Delta[i,p,c] Delta[p,a,b] -> [i,c,a,b]
            t = tdot(self.field, self.comult, self.comult, ([1], [0]))
            self._cache["delta2"] = t.transpose(0, 2, 3, 1)
        return self._cache["delta2"]

    def basis(self, i: int):
        return self.alg.basis(i)

    def element(self, coords):
        return self.alg.element(coords)


# -- validation --------------------------------------------------------------


def _fmt_idx(labels, idx) -> str:
    return "(" + ",".join(labels[i] for i in idx) + ")"


def _first_violations(diff: np.ndarray, labels, what: str, limit: int = 8) -> list[str]:
    out = []
    for idx in zip(*np.nonzero(diff != 0)):
        out.append(f"{what} fails at {_fmt_idx(labels, idx)}")
        if len(out) >= limit:
            break
    return out


def validate_algebra(A: AlgebraSC) -> list[str]:
    """Exhaustive associativity and unit-law check. Empty list means valid."""
    F = A.field
    m = A.mult
    lab = A.labels
    # (e_i e_j) e_k: m[i,j,p] m[p,k,l] -> [i,j,k,l]
    left = tdot(F, m, m, ([2], [0]))
    # e_i (e_j e_k): m[j,k,q] m[i,q,l] -> [j,k,i,l] -> [i,j,k,l]
    right = tdot(F, m, m, ([2], [1])).transpose(2, 0, 1, 3)
    out = []
    seen = set()
    for i, j, k, l in zip(*np.nonzero(F.reduce(left - right) != 0)):
        if (i, j, k) in seen:
            continue
        seen.add((i, j, k))
        out.append(
            f"associativity (ab)c=a(bc) fails for triple ({lab[i]},{lab[j]},{lab[k]})"
            f" (coefficient of {lab[l]} differs)"
        )
        if len(out) >= 8:
            break
    I = F.eye(A.dim)
    lu = tdot(F, A.unit, m, ([0], [0]))  # [j,k]: 1*e_j
    ru = tdot(F, m, A.unit, ([1], [0]))  # [i,k]: e_i*1
    for j in range(A.dim):
        if not np.all(lu[j] == I[j]):
            out.append(f"left unit law 1*{lab[j]}={lab[j]} fails")
        if not np.all(ru[j] == I[j]):
            out.append(f"right unit law {lab[j]}*1={lab[j]} fails")
    return out


def validate_coalgebra(C: CoalgebraSC) -> list[str]:
    F = C.field
    d = C.comult
    # (Delta x id)Delta: d[i,p,c] d[p,a,b] -> [i,c,a,b] -> [i,a,b,c]
    left = tdot(F, d, d, ([1], [0])).transpose(0, 2, 3, 1)
    # (id x Delta)Delta: d[i,a,q] d[q,b,c] -> [i,a,b,c]
    right = tdot(F, d, d, ([2], [0]))
    out = _first_violations(F.reduce(left - right), C.labels, "coassociativity")
    I = F.eye(C.dim)
    el = tdot(F, d, C.counit, ([1], [0]))  # [i,k]
    er = tdot(F, d, C.counit, ([2], [0]))  # [i,j]
    for i in range(C.dim):
        if not np.all(el[i] == I[i]) or not np.all(er[i] == I[i]):
            out.append(f"counit law fails on {C.labels[i]}")
    return out


def validate_hopf(H: HopfSC) -> list[str]:
    """Algebra, coalgebra, bialgebra and antipode axioms; violations name basis elements."""
    out = validate_algebra(H.alg) + validate_coalgebra(H.coalg)
    if out:
        return out
    F, m, d, lab, n = H.field, H.mult, H.comult, H.labels, H.dim
    # Delta(e_i e_j) = Delta(e_i) Delta(e_j)
    lhs = tdot(F, m, d, ([2], [0]))  # [i,j,p,q]
    x = tdot(F, d, m, ([1], [0]))  # d[i,a,b] m[a,c,p] -> [i,b,c,p]
    y = tdot(F, x, d, ([2], [1]))  # [i,b,p,j,d']... d[j,c,e]: sum c -> [i,b,p,j,e]
    rhs = tdot(F, y, m, ([1, 4], [0, 1]))  # sum b,e with m[b,e,q] -> [i,p,j,q]
    rhs = rhs.transpose(0, 2, 1, 3)
    out += _first_violations(F.reduce(lhs - rhs), lab, "Delta(ab)=Delta(a)Delta(b)")
    eps_prod = tdot(F, m, H.counit, ([2], [0]))
    outer = F.reduce(np.multiply.outer(H.counit, H.counit))
    out += _first_violations(F.reduce(eps_prod - outer), lab, "eps(ab)=eps(a)eps(b)")
    if not np.all(H.delta(H.unit) == F.reduce(np.multiply.outer(H.unit, H.unit))):
        out.append("Delta(1)=1(x)1 fails")
    if F.reduce(np.dot(H.counit, H.unit)) != 1:
        out.append("eps(1)=1 fails")
    # sum S(h1) h2 and sum h1 S(h2)
    Sd = tdot(F, d, H.antipode, ([1], [1]))  # [i,b,a'] = sum_a d[i,a,b] S[a',a]
    left = tdot(F, Sd, m, ([2, 1], [0, 1]))  # [i,k]
    dS = tdot(F, d, H.antipode, ([2], [1]))  # [i,a,b']
    right = tdot(F, dS, m, ([1, 2], [0, 1]))
    expect = F.reduce(np.multiply.outer(H.counit, H.unit))
    for i in range(n):
        if not np.all(left[i] == expect[i]):
            out.append(f"antipode axiom S(h1)h2=eps(h)1 fails on {lab[i]}")
        if not np.all(right[i] == expect[i]):
            out.append(f"antipode axiom h1S(h2)=eps(h)1 fails on {lab[i]}")
    if rank(F, H.antipode) != n:
        out.append("antipode is not invertible")
    return out


def require_valid(H: HopfSC) -> HopfSC:
    problems = validate_hopf(H)
    if problems:
        raise ValidationError(problems)
    return H


# -- duality and antipode utilities -------------------------------------------


def dual_hopf(H: HopfSC) -> HopfSC:
    """The dual Hopf algebra on the dual basis, labels prefixed ``P_``.

    The double dual strips the prefix again, so it is literally equal to ``H``.
    """
    if "dual" in H._cache:
        return H._cache["dual"]
    labels = tuple(
        lab[2:] if lab.startswith("P_") else "P_" + lab for lab in H.labels
    )
    mult = H.comult.transpose(1, 2, 0).copy()  # (P_a P_b)(e_i) = Delta[i,a,b]
    comult = H.mult.transpose(2, 0, 1).copy()  # Delta(P_k) = sum m[i,j,k] P_i (x) P_j
    name = H.name[2:] if H.name.startswith("P_") else ("P_" + H.name if H.name else "")
    D = HopfSC(
        AlgebraSC(H.field, labels, mult, H.counit.copy()),
        CoalgebraSC(H.field, labels, comult, H.unit.copy()),
        H.antipode.T.copy(),
        name,
    )
    D._cache["dual"] = H
    H._cache["dual"] = D
    return D


def antipode_square(H: HopfSC) -> np.ndarray:
    return matmul(H.field, H.antipode, H.antipode)


def antipode_inverse(H: HopfSC) -> np.ndarray:
    inv = inverse(H.field, H.antipode)
    if inv is None:
        raise ValidationError("antipode is not invertible")
    return inv


def is_involutory(H: HopfSC) -> bool:
    return bool(np.all(antipode_square(H) == H.field.eye(H.dim)))


# -- characters ---------------------------------------------------------------


def verify_character(H: HopfSC, u) -> bool:
    """u(1) = 1 and u(e_i e_j) = u(e_i) u(e_j) on all basis pairs."""
    F = H.field
    u = F.array(u)
    if u.shape != (H.dim,):
        return False
    if F.reduce(np.dot(H.unit, u)) != 1:
        return False
    prod = tdot(F, H.mult, u, ([2], [0]))
    return bool(np.all(prod == F.reduce(np.multiply.outer(u, u))))


def convolve(H: HopfSC, u, v) -> np.ndarray:
    """Convolution product (u*v)(h) = sum u(h1) v(h2) of two covectors."""
    F = H.field
    return tdot(F, tdot(F, H.comult, u, ([1], [0])), v, ([1], [0]))


def character_inverse(H: HopfSC, u) -> np.ndarray:
    """Convolution inverse u o S of a character."""
    return matmul(H.field, np.asarray(u, dtype=object), H.antipode)


def evaluate(F: Field, covector, vector):
    return F.reduce(np.dot(np.asarray(covector, dtype=object), np.asarray(vector, dtype=object))).item()


# -- morphisms ----------------------------------------------------------------


def hopf_isomorphic_via(H1: HopfSC, H2: HopfSC, Fm) -> bool:
    """Is the matrix ``Fm`` (H1 -> H2) an isomorphism of Hopf algebras?"""
    F = H1.field
    if H1.dim != H2.dim or H1.field != H2.field:
        return False
    Fm = F.array(Fm)
    if Fm.shape != (H1.dim, H1.dim) or rank(F, Fm) != H1.dim:
        return False
    # F(e_i e_j) vs F(e_i)F(e_j)
    lhs = tdot(F, H1.mult, Fm, ([2], [1]))  # [i,j,k']
    x = tdot(F, Fm, H2.mult, ([0], [0]))  # Fm[a,i] m2[a,b,k] -> [i,b,k]
    rhs = tdot(F, Fm, x, ([0], [1])).transpose(1, 0, 2)  # Fm[b,j] x[i,b,k] -> [j,i,k]
    if not is_zero(F.reduce(lhs - rhs)):
        return False
    if not np.all(matmul(F, Fm, H1.unit) == H2.unit):
        return False
    # (F x F) Delta1 = Delta2 F
    d1 = tdot(F, tdot(F, H1.comult, Fm, ([1], [1])), Fm, ([1], [1]))  # [i,a',b']
    d2 = tdot(F, Fm, H2.comult, ([0], [0]))  # [i,a,b]
    if not is_zero(F.reduce(d1 - d2)):
        return False
    if not np.all(matmul(F, H2.counit, Fm) == H1.counit):
        return False
    return bool(np.all(matmul(F, Fm, H1.antipode) == matmul(F, H2.antipode, Fm)))
