"""Exact field arithmetic and dense linear algebra over Q or F_p.

Tensors and matrices are numpy ``object`` arrays holding raw field values:

* over Q a value is a Python ``int`` when integral and a ``Fraction``
  otherwise (integral Fractions are always demoted back to ``int``, which
  keeps contractions of integer structure constants fast);
* over F_p a value is a Python ``int`` in ``[0, p)``.

The :class:`Scalar` wrapper is the boxed, field-tagged value used at API
boundaries where mixing fields must be caught.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

MAX_DIM = 64
MAX_SMASH_DIM = 256


class FieldError(ValueError):
    """Bad field descriptor, field mismatch or division by zero."""


class DimensionError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def _demote(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


_demote_array = np.frompyfunc(_demote, 1, 1)


class Field:
    """Descriptor for Q (``p is None``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            p = int(p)
            if not _is_prime(p):
                raise FieldError(f"modulus {p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip().lower()
        if text in ("q", "qq", "rational"):
            return cls()
        if text.startswith("fp:"):
            try:
                return cls(int(text[3:]))
            except ValueError:
                raise FieldError(f"bad field descriptor {text!r}") from None
        raise FieldError(f"bad field descriptor {text!r}")

    def __str__(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    def __repr__(self) -> str:
        return f"Field({str(self)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def size(self) -> int | None:
        """Number of elements, ``None`` for Q."""
        return self.p

    # -- raw values --------------------------------------------------------

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction, Scalar or literal string to a raw value."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldError(f"field mismatch: {x.field} vs {self}")
            return x.value
        if isinstance(x, str):
            x = self._parse_literal(x)
        elif isinstance(x, bool):
            x = int(x)
        elif isinstance(x, (np.integer,)):
            x = int(x)
        elif not isinstance(x, (int, Fraction)):
            raise FieldError(f"cannot coerce {x!r} into {self}")
        if self.p is None:
            return _demote(Fraction(x)) if isinstance(x, Fraction) else x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def _parse_literal(self, s: str) -> int | Fraction:
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                if int(den) == 0:
                    raise FieldError(f"zero denominator in {s!r}")
                return Fraction(int(num), int(den))
            return int(s)
        except ValueError:
            raise FieldError(f"bad scalar literal {s!r}") from None

    def fmt(self, x) -> str:
        x = self(x)
        return str(x)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return self(x + y) if self.p else _demote(x + y)

    def sub(self, x, y):
        return self(x - y) if self.p else _demote(x - y)

    def mul(self, x, y):
        return self(x * y) if self.p else _demote(x * y)

    def neg(self, x):
        return self(-x) if self.p else -x

    def inv(self, x):
        if x == 0:
            raise FieldError("division by zero")
        if self.p:
            return pow(int(x), -1, self.p)
        return _demote(1 / Fraction(x))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x == 0

    def elements(self, bound: int) -> list:
        """Up to ``bound`` distinct field elements, starting 0, 1, 2, ..."""
        if self.p is not None:
            bound = min(bound, self.p)
        return [self(i) for i in range(bound)]

    # -- arrays ------------------------------------------------------------

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for idx, v in enumerate(flat):
            flat[idx] = self(v)
        return arr

    def reduce(self, arr) -> np.ndarray:
        """Canonicalise the result of a numpy contraction."""
        if not isinstance(arr, np.ndarray):
            arr = np.array(arr, dtype=object)
        if arr.dtype != object:
            arr = arr.astype(object)
        if self.p is None:
            if arr.ndim == 0:
                return np.array(_demote(arr.item()), dtype=object)
            return _demote_array(arr).astype(object)
        if arr.ndim == 0:
            return np.array(arr.item() % self.p, dtype=object)
        return arr % self.p

    def zeros(self, shape) -> np.ndarray:
        arr = np.empty(shape, dtype=object)
        arr[...] = 0
        return arr

    def eye(self, n: int) -> np.ndarray:
        arr = self.zeros((n, n))
        for i in range(n):
            arr[i, i] = 1
        return arr

    def basis_vector(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = 1
        return v


QQ = Field()


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; arithmetic refuses to mix fields."""

    value: object
    field: Field

    @classmethod
    def of(cls, field: Field, x) -> "Scalar":
        return cls(field(x), field)

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> "Scalar":
        return cls(field(text), field)

    def _other(self, other) -> object:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    def __rtruediv__(self, other):
        return Scalar(self.field.div(self._other(other), self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inv(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return self.value == other.value
        try:
            return self.value == self.field(other)
        except FieldError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field))

    def __str__(self) -> str:
        if self.field.p is None:
            return str(self.value)
        return f"{self.value} mod {self.field.p}"


# -- tensor helpers ----------------------------------------------------------


def contract(field: Field, T: np.ndarray, axis: int, v) -> np.ndarray:
    """Sum a 3-tensor against ``v`` along ``axis``; remaining axes keep order."""
    v = np.asarray(v, dtype=object)
    if T.ndim != 3:
        raise DimensionError(f"expected a 3-tensor, got {T.ndim} axes")
    if v.shape != (T.shape[axis],):
        raise DimensionError(
            f"vector of length {v.shape} cannot contract axis {axis} of size {T.shape[axis]}"
        )
    return field.reduce(np.tensordot(T, v, axes=([axis], [0])))


def tdot(field: Field, a, b, axes) -> np.ndarray:
    return field.reduce(np.tensordot(a, b, axes=axes))


def matmul(field: Field, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.shape[-1] != B.shape[0]:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    return field.reduce(np.dot(A, B))


def matvec(field: Field, A, v) -> np.ndarray:
    return matmul(field, A, v)


def is_zero(arr) -> bool:
    return not np.any(np.asarray(arr, dtype=object) != 0)


# -- Gaussian elimination ----------------------------------------------------


def _rows(field: Field, M) -> list[list]:
    M = np.asarray(M, dtype=object)
    if M.ndim != 2:
        raise DimensionError("expected a matrix")
    return [[field(x) for x in row] for row in M]


def rref(field: Field, M) -> tuple[list[list], list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns the nonzero rows of the RREF and the pivot columns.
    """
    M = np.asarray(M, dtype=object)
    rows = _rows(field, M)
    ncols = M.shape[1] if M.ndim == 2 else 0
    pivots: list[int] = []
    r = 0
    add, mul, inv = field.add, field.mul, field.inv
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][c])
        rows[r] = [mul(s, x) for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [add(x, mul(-f, y)) if y != 0 else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(field: Field, M) -> int:
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def rank_kernel(field: Field, M) -> tuple[int, list[np.ndarray]]:
    """Rank and a reduced-echelon kernel basis (one vector per free column)."""
    M = np.asarray(M, dtype=object)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return 0, [field.basis_vector(ncols, j) for j in range(ncols)]
    R, pivots = rref(field, M)
    piv_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in piv_set:
            continue
        v = field.zeros(ncols)
        v[free] = 1
        for row, pc in zip(R, pivots):
            if row[free] != 0:
                v[pc] = field.neg(row[free])
        kernel.append(v)
    return len(pivots), kernel


def kernel(field: Field, M) -> list[np.ndarray]:
    return rank_kernel(field, M)[1]


def solve_linear(field: Field, M, b) -> np.ndarray | None:
    """Some ``x`` with ``M x = b`` (free variables set to 0), or None."""
    M = np.asarray(M, dtype=object)
    b = np.asarray(b, dtype=object)
    if b.shape != (M.shape[0],):
        raise DimensionError(f"rhs length {b.shape} does not match {M.shape[0]} rows")
    ncols = M.shape[1]
    aug = np.concatenate([M, b.reshape(-1, 1)], axis=1) if M.shape[0] else field.zeros((0, ncols + 1))
    R, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = field.zeros(ncols)
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def det(field: Field, M) -> object:
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionError("determinant of a non-square matrix")
    rows = _rows(field, M)
    d = 1
    add, mul, inv = field.add, field.mul, field.inv
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = field.neg(d)
        d = mul(d, rows[c][c])
        s = inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = mul(rows[i][c], s)
                rows[i] = [add(x, mul(-f, y)) if y != 0 else x for x, y in zip(rows[i], rows[c])]
    return d


def inverse(field: Field, M) -> np.ndarray | None:
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    aug = np.concatenate([M, field.eye(n)], axis=1)
    R, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return field.array([row[n:] for row in R[:n]])


def span_basis(field: Field, vectors: Sequence, dim: int) -> list[np.ndarray]:
    """Echelon basis (RREF rows) of the span of ``vectors``."""
    vectors = list(vectors)
    if not vectors:
        return []
    R, _ = rref(field, np.array([list(v) for v in vectors], dtype=object).reshape(len(vectors), dim))
    return [field.array(row) for row in R]


def stack(field: Field, blocks: Iterable, ncols: int) -> np.ndarray:
    """Vertically stack row blocks (any of them may be empty)."""
    parts = [np.asarray(b, dtype=object).reshape(-1, ncols) for b in blocks]
    parts = [p for p in parts if p.shape[0]]
    if not parts:
        return field.zeros((0, ncols))
    return np.concatenate(parts, axis=0)


def normalize_first(field: Field, v) -> np.ndarray:
    """Rescale so the first nonzero coordinate is 1."""
    v = np.asarray(v, dtype=object)
    for x in v:
        if x != 0:
            s = field.inv(x)
            return field.reduce(v * s)
    return v.copy()


def fmt_vector(field: Field, v) -> str:
    return "(" + ",".join(field.fmt(x) for x in v) + ")"
