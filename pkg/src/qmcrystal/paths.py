"""Littelmann path model and construction of the crystal graph B(lambda).

A path is stored as its list of straight-segment displacements in fundamental
coordinates.  Two paths that differ only by reparametrisation have the same
canonical displacement list, so list equality is path equality.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .cartan import CartanError, CartanType, Weight, simple_root

__all__ = [
    "DEFAULT_NODE_CAP",
    "NodeCapExceeded",
    "CrystalInvariantError",
    "PathPoint",
    "PiecewisePath",
    "straight_path",
    "height_min",
    "f_op",
    "e_op",
    "eps_phi",
    "CrystalNode",
    "CrystalGraph",
    "build_crystal",
]

DEFAULT_NODE_CAP = 10**6


class NodeCapExceeded(RuntimeError):
    """Raised instead of truncating when a closure grows past the node cap."""

    def __init__(self, cap: int, what: str = "crystal"):
        super().__init__(f"{what} exceeded node cap of {cap} nodes")
        self.cap = cap


class CrystalInvariantError(ArithmeticError):
    """A crystal invariant failed; indicates a corrupted path or an engine bug."""


def _positively_parallel(u: tuple, v: tuple) -> bool:
    k = next(idx for idx, x in enumerate(v) if x != 0)
    c = u[k] / v[k]
    if c <= 0:
        return False
    return all(a == c * b for a, b in zip(u, v))


def _canonical(displacements: Iterable[Sequence]) -> tuple[Weight, ...]:
    out: list[Weight] = []
    for d in displacements:
        d = d if isinstance(d, Weight) else Weight(d)
        if d.is_zero():
            continue
        if out and _positively_parallel(d, out[-1]):
            out[-1] = out[-1] + d
        else:
            out.append(d)
    return tuple(out)


@dataclass(frozen=True)
class PiecewisePath:
    """Canonical piecewise-linear path starting at the origin."""

    displacements: tuple[Weight, ...]

    @classmethod
    def from_displacements(cls, displacements: Iterable[Sequence]) -> PiecewisePath:
        return cls(_canonical(displacements))

    @property
    def endpoint(self) -> Weight:
        if not self.displacements:
            raise CartanError("the trivial path has no rank; use endpoint_of")
        total = self.displacements[0]
        for d in self.displacements[1:]:
            total = total + d
        return total

    def endpoint_of(self, rank: int) -> Weight:
        return self.endpoint if self.displacements else Weight.zero(rank)

    def heights(self, i: int) -> list[Fraction]:
        """Cumulative values of the ``i``-th coordinate (0-based) at every breakpoint."""
        h = [Fraction(0)]
        for d in self.displacements:
            h.append(h[-1] + d[i])
        return h

    def __len__(self):
        return len(self.displacements)

    def key(self) -> tuple:
        return tuple(tuple((c.numerator, c.denominator) for c in d) for d in self.displacements)


class PathPoint(NamedTuple):
    segment: int
    fraction: Fraction


class HeightMin(NamedTuple):
    value: Fraction
    first: PathPoint
    last: PathPoint


def straight_path(lam: Sequence) -> PiecewisePath:
    lam = Weight(lam)
    if not lam.is_dominant():
        raise CartanError(f"straight path needs a dominant integral weight, got {lam}")
    return PiecewisePath.from_displacements([lam])


def _point(p: int, k: int) -> PathPoint:
    if k == 0:
        return PathPoint(0, Fraction(0))
    if p == k:
        return PathPoint(k - 1, Fraction(1))
    return PathPoint(p, Fraction(0))


def height_min(path: PiecewisePath, i: int) -> HeightMin:
    """Minimum of ``h_i(t) = <alpha_i^vee, path(t)>`` and where it is first/last attained.

    ``i`` is 1-based.  The minimum of a piecewise-linear function is attained at a
    breakpoint, so positions are reported as segment starts (or the very end).
    """
    h = path.heights(i - 1)
    m = min(h)
    first = h.index(m)
    last = len(h) - 1 - h[::-1].index(m)
    k = len(path)
    return HeightMin(m, _point(first, k), _point(last, k))


def _reflect_disp(d: Weight, alpha: Weight, i0: int) -> Weight:
    k = d[i0]
    return Weight(x - k * a for x, a in zip(d, alpha))


def f_op(ct, path: PiecewisePath, i: int) -> Optional[PiecewisePath]:
    """Littelmann lowering operator ``f_i`` (1-based); ``None`` when ``phi_i = 0``.

    With ``t0`` the last time ``h_i`` attains its minimum ``m`` and ``t1`` the first
    later time it reaches ``m + 1``, the piece on ``[t0, t1]`` is reflected by
    ``s_i`` and everything after ``t1`` is translated by ``-alpha_i``.
    """
    return _lower(path, i - 1, simple_root(ct, i))


def e_op(ct, path: PiecewisePath, i: int) -> Optional[PiecewisePath]:
    """Littelmann raising operator ``e_i``; ``None`` when ``eps_i = 0``."""
    return _raise(path, i - 1, simple_root(ct, i))


def _lower(path: PiecewisePath, i0: int, alpha: Weight) -> Optional[PiecewisePath]:
    h = path.heights(i0)
    m = min(h)
    if h[-1] - m < 1:
        return None
    disp = path.displacements
    t0 = len(h) - 1 - h[::-1].index(m)
    target = m + 1
    j = next(j for j in range(t0 + 1, len(h)) if h[j] >= target)
    # displacement j-1 (0-based) runs from h[j-1] to h[j] and crosses target
    d = disp[j - 1]
    s = (target - h[j - 1]) / (h[j] - h[j - 1])
    new = list(disp[:t0])
    new.extend(_reflect_disp(x, alpha, i0) for x in disp[t0:j - 1])
    new.append(_reflect_disp(d * s, alpha, i0))
    if s < 1:
        new.append(d * (1 - s))
    new.extend(disp[j:])
    return PiecewisePath.from_displacements(new)


def _raise(path: PiecewisePath, i0: int, alpha: Weight) -> Optional[PiecewisePath]:
    h = path.heights(i0)
    m = min(h)
    if m > -1:
        return None
    disp = path.displacements
    t1 = h.index(m)
    target = m + 1
    # last segment ending at or before t1 that starts at height >= m+1
    j = next(j for j in range(t1, 0, -1) if h[j - 1] >= target)
    d = disp[j - 1]
    s = (target - h[j - 1]) / (h[j] - h[j - 1])
    new = list(disp[:j - 1])
    if s > 0:
        new.append(d * s)
    new.append(_reflect_disp(d * (1 - s), alpha, i0))
    new.extend(_reflect_disp(x, alpha, i0) for x in disp[j:t1])
    new.extend(disp[t1:])
    return PiecewisePath.from_displacements(new)


def eps_phi(path: PiecewisePath, i: int) -> tuple[int, int]:
    """String lengths ``(eps_i, phi_i)`` of a crystal path."""
    h = path.heights(i - 1)
    m = min(h)
    if m.denominator != 1:
        raise CrystalInvariantError(
            f"minimum of h_{i} is {m}, not an integer: path {path.displacements} is not a crystal path")
    end = h[-1]
    if end.denominator != 1:
        raise CrystalInvariantError(f"endpoint coordinate {i} is {end}, not an integer")
    return int(-m), int(end - m)


@dataclass(frozen=True)
class CrystalNode:
    id: int
    weight: Weight
    eps: tuple[int, ...]
    phi: tuple[int, ...]


@dataclass
class CrystalGraph:
    """A connected highest-weight crystal with dense node ids in BFS order."""

    cartan_type: CartanType
    highest_weight: Weight
    nodes: list[CrystalNode]
    f_edges: dict[tuple[int, int], int]
    highest_id: int = 0
    paths: Optional[list[PiecewisePath]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.e_edges = {(dst, i): src for (src, i), dst in self.f_edges.items()}

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def __len__(self):
        return len(self.nodes)

    def f(self, b: int, i: int) -> Optional[int]:
        return self.f_edges.get((b, i))

    def e(self, b: int, i: int) -> Optional[int]:
        return self.e_edges.get((b, i))

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        """``(src, label, dst)`` triples sorted by ``(src, label)``."""
        return sorted((s, i, d) for (s, i), d in self.f_edges.items())

    def lowest_ids(self) -> list[int]:
        return [b.id for b in self.nodes if not any(b.phi)]

    def weight_multiset(self) -> dict[Weight, int]:
        counts: dict[Weight, int] = {}
        for b in self.nodes:
            counts[b.weight] = counts.get(b.weight, 0) + 1
        return counts

    def find_by_weight(self, mu: Sequence) -> list[int]:
        mu = Weight(mu)
        return [b.id for b in self.nodes if b.weight == mu]

    def __eq__(self, other):
        if not isinstance(other, CrystalGraph):
            return NotImplemented
        return (self.cartan_type == other.cartan_type
                and self.highest_weight == other.highest_weight
                and self.nodes == other.nodes
                and self.f_edges == other.f_edges
                and self.highest_id == other.highest_id)


def node_cap_from_env(default: int = DEFAULT_NODE_CAP) -> int:
    raw = os.environ.get("QMCRYSTAL_NODE_CAP")
    return int(raw) if raw else default


def build_crystal(ct, lam: Sequence, node_cap: Optional[int] = None) -> CrystalGraph:
    """Closure of the straight path to ``lam`` under all lowering operators.

    Node ids follow FIFO discovery with operators tried in order ``1..n``; node 0
    is the highest element.  Exceeding ``node_cap`` raises :class:`NodeCapExceeded`.
    """
    ct = CartanType.parse(ct)
    lam = Weight(lam)
    if len(lam) != ct.rank:
        raise CartanError(f"weight {lam} has wrong length for {ct}")
    cap = node_cap_from_env() if node_cap is None else node_cap
    n = ct.rank
    alphas = [simple_root(ct, i) for i in range(1, n + 1)]
    start = straight_path(lam)
    index = {start: 0}
    paths = [start]
    f_edges: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        b = queue.popleft()
        p = paths[b]
        for i in range(1, n + 1):
            q = _lower(p, i - 1, alphas[i - 1])
            if q is None:
                continue
            dst = index.get(q)
            if dst is None:
                dst = len(paths)
                if dst >= cap:
                    raise NodeCapExceeded(cap)
                index[q] = dst
                paths.append(q)
                queue.append(dst)
            f_edges[(b, i)] = dst
    nodes = []
    for k, p in enumerate(paths):
        ep = [eps_phi(p, i) for i in range(1, n + 1)]
        wt = p.endpoint_of(n)
        nodes.append(CrystalNode(k, wt, tuple(e for e, _ in ep), tuple(f for _, f in ep)))
    return CrystalGraph(ct, lam, nodes, f_edges, 0, paths)
