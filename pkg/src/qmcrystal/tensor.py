"""Tensor products of crystals, connected components and fusion decompositions.

Convention: ``f_i(b (x) c)`` acts on the right factor when ``phi_i(b) <= eps_i(c)``
and on the left factor otherwise.  ``e_i`` acts on the left when
``phi_i(b) >= eps_i(c)`` and on the right otherwise.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .cartan import Weight, weyl_dim
from .paths import (
    CrystalGraph,
    CrystalInvariantError,
    CrystalNode,
    NodeCapExceeded,
    node_cap_from_env,
)

__all__ = [
    "TensorNode",
    "ComponentResult",
    "FusionDecomposition",
    "tensor_eps_phi",
    "tensor_weight",
    "tensor_f",
    "tensor_e",
    "highest_weight_nodes",
    "component",
    "decompose",
    "component_isomorphic",
]


class TensorNode(NamedTuple):
    left: int
    right: int

    def __str__(self):
        return f"b{self.left + 1}(x)b{self.right + 1}"


def tensor_eps_phi(b: CrystalNode, c: CrystalNode, i: int) -> tuple[int, int]:
    """``(eps_i, phi_i)`` of ``b (x) c``; ``i`` is 1-based."""
    k = i - 1
    eps = max(b.eps[k], c.eps[k] - int(b.weight[k]))
    phi = max(c.phi[k], b.phi[k] + int(c.weight[k]))
    return eps, phi


def tensor_weight(A: CrystalGraph, B: CrystalGraph, x: TensorNode) -> Weight:
    return A.nodes[x.left].weight + B.nodes[x.right].weight


def tensor_f(A: CrystalGraph, B: CrystalGraph, x: TensorNode, i: int) -> Optional[TensorNode]:
    b, c = x
    if A.nodes[b].phi[i - 1] <= B.nodes[c].eps[i - 1]:
        c2 = B.f_edges.get((c, i))
        return None if c2 is None else TensorNode(b, c2)
    b2 = A.f_edges.get((b, i))
    if b2 is None:
        raise CrystalInvariantError(f"f_{i} undefined on left factor {b} although phi_{i} > 0")
    return TensorNode(b2, c)


def tensor_e(A: CrystalGraph, B: CrystalGraph, x: TensorNode, i: int) -> Optional[TensorNode]:
    b, c = x
    if A.nodes[b].phi[i - 1] >= B.nodes[c].eps[i - 1]:
        b2 = A.e_edges.get((b, i))
        return None if b2 is None else TensorNode(b2, c)
    c2 = B.e_edges.get((c, i))
    if c2 is None:
        raise CrystalInvariantError(f"e_{i} undefined on right factor {c} although eps_{i} > 0")
    return TensorNode(b, c2)


def _lex_desc(w: Weight):
    return tuple(-x for x in w)


def highest_weight_nodes(A: CrystalGraph, B: CrystalGraph) -> list[TensorNode]:
    """All ``b (x) c`` killed by every ``e_i``, found by exhaustive search over pairs.

    Sorted lex-descending by weight (ties by ids).
    """
    n = A.rank
    found = []
    for b in A.nodes:
        for c in B.nodes:
            if all(tensor_eps_phi(b, c, i)[0] == 0 for i in range(1, n + 1)):
                found.append(TensorNode(b.id, c.id))
    found.sort(key=lambda x: (_lex_desc(tensor_weight(A, B, x)), x))
    return found


@dataclass
class ComponentResult:
    """Connected component of a tensor product, with members in BFS order."""

    seed: TensorNode
    highest_weight: Weight
    members: list[TensorNode]
    f_edges: dict[tuple[TensorNode, int], TensorNode]
    zero_weight_members: list[TensorNode]
    nodes: list[CrystalNode] = field(repr=False)

    def __len__(self):
        return len(self.members)

    def as_graph(self, cartan_type) -> CrystalGraph:
        """The component as a :class:`CrystalGraph` with ids in BFS order."""
        index = {x: k for k, x in enumerate(self.members)}
        edges = {(index[x], i): index[y] for (x, i), y in self.f_edges.items()}
        return CrystalGraph(cartan_type, self.highest_weight, list(self.nodes), edges, 0)


def component(A: CrystalGraph, B: CrystalGraph, seed: TensorNode,
              node_cap: Optional[int] = None, check_dim: bool = True) -> ComponentResult:
    """BFS closure of ``seed`` under the tensor lowering operators."""
    cap = node_cap_from_env() if node_cap is None else node_cap
    n = A.rank
    seed = TensorNode(*seed)
    a_nodes, b_nodes = A.nodes, B.nodes
    members = [seed]
    seen = {seed}
    f_edges = {}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for i in range(1, n + 1):
            y = tensor_f(A, B, x, i)
            if y is None:
                continue
            f_edges[(x, i)] = y
            if y not in seen:
                if len(members) >= cap:
                    raise NodeCapExceeded(cap, "component")
                seen.add(y)
                members.append(y)
                queue.append(y)
    nodes = []
    zero = []
    for k, x in enumerate(members):
        b, c = a_nodes[x.left], b_nodes[x.right]
        wt = b.weight + c.weight
        ep = [tensor_eps_phi(b, c, i) for i in range(1, n + 1)]
        nodes.append(CrystalNode(k, wt, tuple(e for e, _ in ep), tuple(p for _, p in ep)))
        if wt.is_zero():
            zero.append(x)
    hw = nodes[0].weight
    if any(nodes[0].eps):
        raise CrystalInvariantError(f"seed {seed} is not a highest weight node")
    if check_dim:
        expected = weyl_dim(A.cartan_type, hw)
        if len(members) != expected:
            raise CrystalInvariantError(
                f"component of {seed} has {len(members)} nodes, Weyl dimension is {expected}")
    return ComponentResult(seed, hw, members, f_edges, zero, nodes)


@dataclass
class FusionDecomposition:
    """Highest weights of a tensor product with multiplicities, lex-descending."""

    summands: list[tuple[Weight, int]]
    total_nodes: int
    seeds: list[TensorNode] = field(default_factory=list, repr=False)
    component_sizes: list[int] = field(default_factory=list, repr=False)

    def multiplicity(self, mu) -> int:
        mu = Weight(mu)
        return next((m for w, m in self.summands if w == mu), 0)

    def dims(self, cartan_type) -> list[int]:
        return [weyl_dim(cartan_type, w) for w, _ in self.summands]


def decompose(A: CrystalGraph, B: CrystalGraph, node_cap: Optional[int] = None) -> FusionDecomposition:
    """Decompose ``A (x) B`` into connected components and check they partition it.

    Every component is extracted, its size checked against the Weyl dimension of
    its highest weight, and all members marked; overlap or a missed node raises
    :class:`CrystalInvariantError`.
    """
    seeds = highest_weight_nodes(A, B)
    nb = len(B)
    total = len(A) * nb
    marked = bytearray(total)
    sizes = []
    counts: dict[Weight, int] = {}
    for s in seeds:
        comp = component(A, B, s, node_cap)
        for x in comp.members:
            k = x.left * nb + x.right
            if marked[k]:
                raise CrystalInvariantError(f"node {x} lies in two components")
            marked[k] = 1
        sizes.append(len(comp))
        counts[comp.highest_weight] = counts.get(comp.highest_weight, 0) + 1
    if sum(sizes) != total or not all(marked):
        raise CrystalInvariantError(
            f"components cover {sum(sizes)} of {total} nodes of the tensor product")
    summands = sorted(counts.items(), key=lambda wm: _lex_desc(wm[0]))
    return FusionDecomposition(summands, total, seeds, sizes)


def component_isomorphic(C: ComponentResult | CrystalGraph, G: CrystalGraph) -> bool:
    """Whether a component and a crystal graph are isomorphic as crystals.

    The isomorphism, if any, sends highest element to highest element and
    commutes with every ``f_i``, so a simultaneous BFS decides it.
    """
    H = C if isinstance(C, CrystalGraph) else C.as_graph(G.cartan_type)
    if len(H) != len(G) or H.rank != G.rank:
        return False
    n = G.rank
    match = {H.highest_id: G.highest_id}
    used = {G.highest_id}
    queue = deque([H.highest_id])
    while queue:
        h = queue.popleft()
        g = match[h]
        hn, gn = H.nodes[h], G.nodes[g]
        if (hn.weight, hn.eps, hn.phi) != (gn.weight, gn.eps, gn.phi):
            return False
        for i in range(1, n + 1):
            h2, g2 = H.f_edges.get((h, i)), G.f_edges.get((g, i))
            if (h2 is None) != (g2 is None):
                return False
            if h2 is None:
                continue
            if h2 in match:
                if match[h2] != g2:
                    return False
            else:
                if g2 in used:
                    return False
                match[h2] = g2
                used.add(g2)
                queue.append(h2)
    return len(match) == len(G)
