"""Cartan data, exact weight arithmetic, root systems and the Weyl dimension formula.

Labelling follows Bourbaki for every family.  The Cartan matrix is stored with
``a[i][j] = <alpha_i^vee, alpha_j>`` so that the fundamental-weight coordinates of
a weight are exactly its pairings with the simple coroots.  For G2 the short
root is ``alpha_1`` (so ``varpi_1 = 2 alpha_1 + alpha_2``).

Bourbaki diagrams (1-based):

====  =========================================================
A_n   1 - 2 - ... - n
B_n   1 - ... - (n-1) => n          (alpha_n short)
C_n   1 - ... - (n-1) <= n          (alpha_n long)
D_n   1 - ... - (n-2) with (n-1), n both attached to (n-2)
E_n   1 - 3 - 4 - ... - n, with 2 attached to 4
F_4   1 - 2 => 3 - 4                (alpha_3, alpha_4 short)
G_2   1 <= 2                        (alpha_1 short)
====  =========================================================
"""
from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "CartanError",
    "CartanType",
    "CartanMatrix",
    "Weight",
    "RootCoords",
    "RootSystemData",
    "Sign",
    "cartan_matrix",
    "fundamental_weight",
    "simple_root",
    "to_root_coords",
    "from_root_coords",
    "weight_sign",
    "reflect",
    "weyl_orbit",
    "positive_roots",
    "pairing",
    "inner_product",
    "weyl_dim",
]


class CartanError(ValueError):
    """Invalid Cartan type, index or weight for the requested operation."""


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise CartanError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise CartanError(f"invalid rank {self.rank!r} for family {self.family}")

    @classmethod
    def parse(cls, text: str | CartanType) -> CartanType:
        """Parse strings like ``"G2"``, ``"e8"`` or ``"A_3"``."""
        if isinstance(text, CartanType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise CartanError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _as_type(ct) -> CartanType:
    return CartanType.parse(ct)


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix together with its coprime symmetrizer."""

    cartan_type: CartanType
    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


class Weight(tuple):
    """A weight in fundamental-weight coordinates, stored as exact rationals.

    ``Weight`` is a tuple of :class:`fractions.Fraction`; ``w[i]`` is the pairing
    ``<alpha_{i+1}^vee, w>``.  Supports ``+``, ``-``, negation and integer or
    rational scaling.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    def __add__(self, other):
        if len(self) != len(other):
            raise CartanError("rank mismatch in weight addition")
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(self) != len(other):
            raise CartanError("rank mismatch in weight subtraction")
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        if isinstance(k, tuple):
            return NotImplemented
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    def is_dominant(self) -> bool:
        return self.is_integral() and all(c >= 0 for c in self)

    def is_zero(self) -> bool:
        return not any(self)

    def to_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise CartanError(f"weight {self} is not integral")
        return tuple(int(c) for c in self)

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self) + ")"


class RootCoords(tuple):
    """Coefficients of a weight in the simple-root basis (exact rationals)."""

    __slots__ = ()

    def __new__(cls, coeffs: Iterable = ()):
        return super().__new__(cls, (Fraction(c) for c in coeffs))

    def __repr__(self):
        return "RootCoords(" + ", ".join(str(c) for c in self) + ")"


class Sign(enum.Enum):
    ZERO = "zero"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class RootSystemData:
    cartan_type: CartanType
    positive_roots: tuple[RootCoords, ...]
    half_sum: Weight

    def __contains__(self, beta) -> bool:
        return RootCoords(beta) in self.positive_roots


# -- Cartan matrices ---------------------------------------------------------


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _link(a, i, j, aij=-1, aji=-1):
    a[i][j], a[j][i] = aij, aji


@lru_cache(maxsize=None)
def _build_cartan(ct: CartanType) -> CartanMatrix:
    n, fam = ct.rank, ct.family
    if fam == "A":
        a, d = _chain(n), [1] * n
    elif fam == "B":
        a = _chain(n)
        _link(a, n - 2, n - 1, -1, -2)
        d = [2] * (n - 1) + [1]
    elif fam == "C":
        a = _chain(n)
        _link(a, n - 2, n - 1, -2, -1)
        d = [1] * (n - 1) + [2]
    elif fam == "D":
        a = _chain(n)
        _link(a, n - 2, n - 1, 0, 0)
        _link(a, n - 3, n - 1)
        d = [1] * n
    elif fam == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        _link(a, 0, 2)
        _link(a, 1, 3)
        for i in range(2, n - 1):
            _link(a, i, i + 1)
        d = [1] * n
    elif fam == "F":
        a = _chain(4)
        _link(a, 1, 2, -1, -2)
        d = [2, 2, 1, 1]
    else:  # G
        a = [[2, -3], [-1, 2]]
        d = [1, 3]
    return CartanMatrix(ct, tuple(tuple(r) for r in a), tuple(d))


def cartan_matrix(ct) -> CartanMatrix:
    """Bourbaki-labelled Cartan matrix and symmetrizer for ``ct``."""
    return _build_cartan(_as_type(ct))


def _check_index(ct: CartanType, i: int):
    if not isinstance(i, int) or not 1 <= i <= ct.rank:
        raise CartanError(f"index {i!r} out of range 1..{ct.rank} for {ct}")


def fundamental_weight(ct, i: int) -> Weight:
    ct = _as_type(ct)
    _check_index(ct, i)
    return Weight(1 if k == i - 1 else 0 for k in range(ct.rank))


def simple_root(ct, j: int) -> Weight:
    """``alpha_j`` in fundamental coordinates: the j-th column of the Cartan matrix."""
    ct = _as_type(ct)
    _check_index(ct, j)
    a = cartan_matrix(ct).entries
    return Weight(a[i][j - 1] for i in range(ct.rank))


@lru_cache(maxsize=None)
def _simple_roots(ct: CartanType) -> tuple[Weight, ...]:
    return tuple(simple_root(ct, j) for j in range(1, ct.rank + 1))


@lru_cache(maxsize=None)
def _inverse_cartan(ct: CartanType) -> tuple[tuple[Fraction, ...], ...]:
    # Gauss-Jordan over Q
    a = cartan_matrix(ct).entries
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def to_root_coords(ct, mu: Sequence) -> RootCoords:
    """Solve ``A . c = mu`` exactly; ``c`` are the simple-root coefficients of ``mu``."""
    ct = _as_type(ct)
    if len(mu) != ct.rank:
        raise CartanError("rank mismatch")
    inv = _inverse_cartan(ct)
    mu = [Fraction(x) for x in mu]
    return RootCoords(sum(r * x for r, x in zip(row, mu)) for row in inv)


def from_root_coords(ct, coeffs: Sequence) -> Weight:
    """Fundamental coordinates of ``sum_j coeffs[j] alpha_j``."""
    ct = _as_type(ct)
    a = cartan_matrix(ct).entries
    if len(coeffs) != ct.rank:
        raise CartanError("rank mismatch")
    return Weight(sum(a[i][j] * Fraction(coeffs[j]) for j in range(ct.rank))
                  for i in range(ct.rank))


def weight_sign(ct, mu: Sequence) -> Sign:
    """Compare ``mu`` with 0 in the root partial order."""
    c = to_root_coords(ct, mu)
    if all(x == 0 for x in c):
        return Sign.ZERO
    if all(x <= 0 for x in c):
        return Sign.NEGATIVE
    if all(x >= 0 for x in c):
        return Sign.POSITIVE
    return Sign.INCOMPARABLE


def reflect(ct, mu: Weight, i: int) -> Weight:
    """Simple reflection ``s_i(mu) = mu - <alpha_i^vee, mu> alpha_i`` (``i`` 1-based)."""
    ct = _as_type(ct)
    alpha = _simple_roots(ct)[i - 1]
    k = mu[i - 1]
    if k == 0:
        return mu
    return Weight(m - k * a for m, a in zip(mu, alpha))


def weyl_orbit(ct, mu: Sequence) -> frozenset[Weight]:
    """Orbit of an integral weight under the Weyl group, by closure under simple reflections."""
    ct = _as_type(ct)
    mu = Weight(mu)
    if len(mu) != ct.rank:
        raise CartanError("rank mismatch")
    if not mu.is_integral():
        raise CartanError(f"weyl_orbit needs an integral weight, got {mu}")
    seen = {mu}
    queue = deque([mu])
    while queue:
        nu = queue.popleft()
        for i in range(1, ct.rank + 1):
            r = reflect(ct, nu, i)
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return frozenset(seen)


def inner_product(ct, mu: Sequence, nu: Sequence) -> Fraction:
    """Invariant form ``(mu, nu)`` normalised so that ``(alpha_i, alpha_i) = 2 d_i``."""
    ct = _as_type(ct)
    d = cartan_matrix(ct).symmetrizer
    # (varpi_i, alpha_j) = d_j delta_ij, so (mu, nu) = sum_j d_j mu_j c_j(nu)
    c = to_root_coords(ct, nu)
    return sum(Fraction(d[j]) * Fraction(mu[j]) * c[j] for j in range(ct.rank))


@lru_cache(maxsize=None)
def _positive_roots(ct: CartanType) -> RootSystemData:
    a = cartan_matrix(ct).entries
    n = ct.rank
    simple = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            k = sum(a[i][j] * beta[j] for j in range(n))
            if k == 0:
                continue
            r = tuple(b - (k if j == i else 0) for j, b in enumerate(beta))
            if r not in seen:
                seen.add(r)
                queue.append(r)
    pos = sorted((r for r in seen if all(x >= 0 for x in r)),
                 key=lambda r: (sum(r), r))
    return RootSystemData(ct, tuple(RootCoords(r) for r in pos), Weight((1,) * n))


def positive_roots(ct) -> RootSystemData:
    """All positive roots (simple-root coordinates), built by reflection closure."""
    return _positive_roots(_as_type(ct))


def _coroot_pairing(d: Sequence[int], a, mu: Sequence, beta: Sequence) -> Fraction:
    n = len(d)
    num = sum(Fraction(beta[j]) * d[j] * Fraction(mu[j]) for j in range(n))
    d_beta = Fraction(sum(Fraction(beta[j]) * beta[k] * d[j] * a[j][k]
                          for j in range(n) for k in range(n)), 2)
    return num / d_beta


def pairing(ct, mu: Sequence, beta: Sequence) -> Fraction:
    """``<mu, beta^vee>`` for ``mu`` in fundamental and ``beta`` in root coordinates."""
    cm = cartan_matrix(ct)
    return _coroot_pairing(cm.symmetrizer, cm.entries, mu, beta)


def weyl_dim(ct, lam: Sequence) -> int:
    """Dimension of the irreducible module of highest weight ``lam`` (Weyl's formula)."""
    ct = _as_type(ct)
    lam = Weight(lam)
    if len(lam) != ct.rank:
        raise CartanError("rank mismatch")
    if not lam.is_dominant():
        raise CartanError(f"weyl_dim needs a dominant integral weight, got {lam}")
    cm = cartan_matrix(ct)
    rho = positive_roots(ct).half_sum
    shifted = lam + rho
    num = den = Fraction(1)
    for beta in positive_roots(ct).positive_roots:
        num *= _coroot_pairing(cm.symmetrizer, cm.entries, shifted, beta)
        den *= _coroot_pairing(cm.symmetrizer, cm.entries, rho, beta)
    q = num / den
    if q.denominator != 1 or q <= 0:
        raise ArithmeticError(f"Weyl dimension of {lam} is not a positive integer: {q}")
    return int(q)
