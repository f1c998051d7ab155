"""Exhaustive crystal-axiom checks returning lists of violations."""
from __future__ import annotations

from collections import Counter

from .cartan import reflect, simple_root
from .paths import CrystalGraph
from .tensor import TensorNode, tensor_e, tensor_eps_phi, tensor_f, tensor_weight

__all__ = ["crystal_axiom_violations", "tensor_axiom_violations"]


def crystal_axiom_violations(g: CrystalGraph, weyl: bool = True) -> list[str]:
    """All violated crystal axioms of ``g``.

    Checks string lengths against weights, ``e``/``f`` as mutually inverse partial
    maps defined exactly when ``eps``/``phi`` are positive, the weight shift by
    ``alpha_i`` along edges, full ``i``-strings, uniqueness of the highest and
    lowest elements and (if ``weyl``) Weyl invariance of the weight multiset.
    """
    out = []
    n = g.rank
    ct = g.cartan_type
    alphas = [simple_root(ct, i) for i in range(1, n + 1)]
    if len(g.e_edges) != len(g.f_edges):
        out.append("f-edges are not injective")
    for b in g.nodes:
        for k in range(n):
            i = k + 1
            if b.eps[k] < 0 or b.phi[k] < 0:
                out.append(f"node {b.id}: negative string length for i={i}")
            if b.phi[k] - b.eps[k] != b.weight[k]:
                out.append(f"node {b.id}: phi_{i} - eps_{i} != <alpha_{i}^vee, wt>")
            f = g.f(b.id, i)
            e = g.e(b.id, i)
            if (f is not None) != (b.phi[k] > 0):
                out.append(f"node {b.id}: f_{i} defined iff phi_{i} > 0 fails")
            if (e is not None) != (b.eps[k] > 0):
                out.append(f"node {b.id}: e_{i} defined iff eps_{i} > 0 fails")
            if f is not None and g.e(f, i) != b.id:
                out.append(f"node {b.id}: e_{i} f_{i} b != b")
            if e is not None and g.f(e, i) != b.id:
                out.append(f"node {b.id}: f_{i} e_{i} b != b")
            if e is None:
                # walk the whole i-string from its top
                length, cur = 0, b.id
                while (nxt := g.f(cur, i)) is not None:
                    length += 1
                    node = g.nodes[nxt]
                    if node.eps[k] != length or node.phi[k] != b.phi[k] - length:
                        out.append(f"node {nxt}: eps/phi not varying by 1 along the {i}-string")
                    cur = nxt
                if length != b.phi[k]:
                    out.append(f"node {b.id}: {i}-string has length {length}, phi_{i} = {b.phi[k]}")
    for (s, i), d in g.f_edges.items():
        if g.nodes[d].weight != g.nodes[s].weight - alphas[i - 1]:
            out.append(f"edge {s}-{i}->{d} does not lower the weight by alpha_{i}")
    highest = [b.id for b in g.nodes if not any(b.eps)]
    if highest != [g.highest_id]:
        out.append(f"expected unique highest node {g.highest_id}, found {highest}")
    elif g.nodes[g.highest_id].weight != g.highest_weight:
        out.append("highest node weight differs from highest_weight")
    lowest = g.lowest_ids()
    if len(lowest) != 1:
        out.append(f"expected a unique lowest node, found {lowest}")
    if weyl:
        counts = Counter(b.weight for b in g.nodes)
        for i in range(1, n + 1):
            if Counter({reflect(ct, w, i): m for w, m in counts.items()}) != counts:
                out.append(f"weight multiset is not invariant under s_{i}")
    return out


def tensor_axiom_violations(A: CrystalGraph, B: CrystalGraph) -> list[str]:
    """Exhaustive checks on every node of ``A (x) B``."""
    out = []
    n = A.rank
    alphas = [simple_root(A.cartan_type, i) for i in range(1, n + 1)]
    for b in A.nodes:
        for c in B.nodes:
            x = TensorNode(b.id, c.id)
            wt = b.weight + c.weight
            for i in range(1, n + 1):
                eps, phi = tensor_eps_phi(b, c, i)
                if eps < 0 or phi < 0 or phi - eps != wt[i - 1]:
                    out.append(f"{x}: bad (eps, phi) = ({eps}, {phi}) for i={i}")
                y = tensor_f(A, B, x, i)
                if (y is not None) != (phi > 0):
                    out.append(f"{x}: f_{i} defined iff phi_{i} > 0 fails")
                if y is not None:
                    if tensor_weight(A, B, y) != wt - alphas[i - 1]:
                        out.append(f"{x}: f_{i} does not lower the weight by alpha_{i}")
                    if tensor_e(A, B, y, i) != x:
                        out.append(f"{x}: e_{i} f_{i} x != x")
                z = tensor_e(A, B, x, i)
                if (z is not None) != (eps > 0):
                    out.append(f"{x}: e_{i} defined iff eps_{i} > 0 fails")
                if z is not None and tensor_f(A, B, z, i) != x:
                    out.append(f"{x}: f_{i} e_{i} x != x")
    return out
