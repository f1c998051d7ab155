"""Mechanical checks of the quasi-minuscule crystal lemma and the G2 worked example.

The lemma: if ``V(w_i)`` is a summand of ``V(w_i) (x) V(w_i)`` and
``x = b_hi (x) c`` is a highest weight node of weight ``w_i``, then in the
component generated by ``x``

  (i)  every node ``b' (x) c' != x`` has ``wt(c') < 0`` in the root order, and
  (ii) every weight-zero node has ``wt(b') = -wt(c') != 0``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .cartan import (
    CartanType,
    Sign,
    Weight,
    fundamental_weight,
    positive_roots,
    simple_root,
    to_root_coords,
    weight_sign,
    weyl_dim,
    weyl_orbit,
)
from .paths import CrystalGraph, CrystalInvariantError, CrystalNode, build_crystal
from .tensor import (
    ComponentResult,
    TensorNode,
    component,
    component_isomorphic,
    highest_weight_nodes,
    tensor_eps_phi,
    tensor_weight,
)

__all__ = [
    "QMStatus",
    "QuasiMinusculeReport",
    "LemmaReport",
    "PaperDiff",
    "SweepEntry",
    "SWEEP_TYPES",
    "classify_quasi_minuscule",
    "find_lemma_seed",
    "verify_hypothesis",
    "verify_lemma",
    "reproduce_g2_paper_data",
    "sweep",
]


class QMStatus(enum.Enum):
    MINUSCULE = "minuscule"
    QUASI_MINUSCULE = "quasi-minuscule"
    NEITHER = "neither"


@dataclass
class QuasiMinusculeReport:
    cartan_type: CartanType
    highest_weight: Weight
    status: QMStatus
    zero_multiplicity: int
    nonzero_weights_single_orbit: bool
    dimension: int


def classify_quasi_minuscule(ct, lam, node_cap: Optional[int] = None) -> QuasiMinusculeReport:
    ct = CartanType.parse(ct)
    lam = Weight(lam)
    g = build_crystal(ct, lam, node_cap)
    zero = sum(1 for b in g.nodes if b.weight.is_zero())
    nonzero = {b.weight for b in g.nodes if not b.weight.is_zero()}
    single = nonzero == set(weyl_orbit(ct, lam))
    if single and zero == 0:
        status = QMStatus.MINUSCULE
    elif single:
        status = QMStatus.QUASI_MINUSCULE
    else:
        status = QMStatus.NEITHER
    return QuasiMinusculeReport(ct, lam, status, zero, single, len(g))


def _seed_condition(c: CrystalNode, i: int) -> bool:
    return all(e <= (1 if j == i - 1 else 0) for j, e in enumerate(c.eps))


def find_lemma_seed(ct, i: int, graph: Optional[CrystalGraph] = None) -> tuple[list[CrystalNode], bool]:
    """Zero-weight ``c`` in ``B(w_i)`` with ``b_hi (x) c`` highest, and whether it is unique.

    An empty list means the hypothesis fails.
    """
    g = graph or build_crystal(ct, fundamental_weight(ct, i))
    found = [c for c in g.nodes if c.weight.is_zero() and _seed_condition(c, i)]
    return found, len(found) == 1


def verify_hypothesis(ct, i: int, graph: Optional[CrystalGraph] = None) -> int:
    """Multiplicity of ``V(w_i)`` in ``V(w_i) (x) V(w_i)``."""
    g = graph or build_crystal(ct, fundamental_weight(ct, i))
    w = fundamental_weight(ct, i)
    return sum(1 for x in highest_weight_nodes(g, g) if tensor_weight(g, g, x) == w)


@dataclass
class LemmaReport:
    cartan_type: CartanType
    index: int
    hypothesis_multiplicity: int
    seed: Optional[TensorNode] = None
    seeds: list[TensorNode] = field(default_factory=list)
    seed_unique: bool = False
    component_size: int = 0
    expected_size: int = 0
    part_i_holds: bool = False
    part_i_strengthened_holds: bool = False
    part_ii_holds: bool = False
    betas: list[Weight] = field(default_factory=list)
    betas_are_positive_roots: bool = False
    betas_in_crystal_weights: bool = False
    zero_node_count: int = 0
    zero_weight_multiplicity: int = 0
    isomorphic: bool = False
    step1_ok: bool = False
    step2_ok: bool = False
    failures: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def hypothesis_holds(self) -> bool:
        return self.hypothesis_multiplicity >= 1

    @property
    def passed(self) -> bool:
        return self.hypothesis_holds and not self.failures


def _factor_dump(g: CrystalGraph, k: int) -> dict:
    node = g.nodes[k]
    out = {"id": k, "weight": [str(x) for x in node.weight],
           "eps": list(node.eps), "phi": list(node.phi)}
    if g.paths is not None:
        out["path"] = [[str(x) for x in d] for d in g.paths[k].displacements]
    return out


def _counterexample(g: CrystalGraph, y: TensorNode, claim: str) -> dict:
    return {"claim": claim, "node": [y.left, y.right],
            "left": _factor_dump(g, y.left), "right": _factor_dump(g, y.right)}


def _check_component(ct: CartanType, i: int, g: CrystalGraph, comp: ComponentResult,
                     report: LemmaReport):
    alpha = simple_root(ct, i)
    roots = positive_roots(ct)
    x = comp.seed
    part_i = strengthened = part_ii = beta_roots = True
    for y in comp.members:
        if y == x:
            continue
        wc = g.nodes[y.right].weight
        if weight_sign(ct, wc) is not Sign.NEGATIVE:
            part_i = False
            report.counterexamples.append(_counterexample(g, y, "wt(c') < 0"))
        if weight_sign(ct, wc + alpha) not in (Sign.NEGATIVE, Sign.ZERO):
            strengthened = False
            report.counterexamples.append(_counterexample(g, y, "wt(c') <= -alpha_i"))
    for y in comp.zero_weight_members:
        wb, wc = g.nodes[y.left].weight, g.nodes[y.right].weight
        if wb != -wc or wb.is_zero():
            part_ii = False
            report.counterexamples.append(_counterexample(g, y, "wt(b') = -wt(c') != 0"))
        report.betas.append(wb)
        if to_root_coords(ct, wb) not in roots:
            beta_roots = False
            report.counterexamples.append(_counterexample(g, y, "wt(b') is a positive root"))
    report.part_i_holds &= part_i
    report.part_i_strengthened_holds &= strengthened
    report.part_ii_holds &= part_ii
    report.betas_are_positive_roots &= beta_roots
    report.zero_node_count = len(comp.zero_weight_members)
    report.component_size = len(comp)
    report.isomorphic &= component_isomorphic(comp, g)
    report.step2_ok &= g.nodes[x.right].eps[i - 1] >= 1
    if report.zero_node_count != report.zero_weight_multiplicity:
        report.failures.append(
            f"component of {x} has {report.zero_node_count} zero-weight nodes, "
            f"B(w_{i}) has {report.zero_weight_multiplicity}")
    if report.component_size != report.expected_size:
        report.failures.append(
            f"component of {x} has {report.component_size} nodes, expected {report.expected_size}")


def verify_lemma(ct, i: int, node_cap: Optional[int] = None) -> LemmaReport:
    """Check both parts of the lemma and the individual proof steps for ``w_i``.

    Every qualifying seed is checked.  A failed hypothesis yields a report with
    ``hypothesis_multiplicity == 0`` and no failures; a lemma violation yields
    itemized ``failures`` plus full ``counterexamples``.
    """
    ct = CartanType.parse(ct)
    w = fundamental_weight(ct, i)
    g = build_crystal(ct, w, node_cap)
    hw_nodes = [x for x in highest_weight_nodes(g, g) if tensor_weight(g, g, x) == w]
    report = LemmaReport(ct, i, len(hw_nodes))
    if not hw_nodes:
        return report
    cs, unique = find_lemma_seed(ct, i, g)
    seeds = [TensorNode(g.highest_id, c.id) for c in cs]
    report.seeds = seeds
    report.seed = seeds[0] if seeds else None
    report.seed_unique = unique
    report.expected_size = weyl_dim(ct, w)
    report.zero_weight_multiplicity = sum(1 for b in g.nodes if b.weight.is_zero())
    if sorted(seeds) != sorted(hw_nodes):
        report.failures.append(
            f"seed search {seeds} disagrees with highest weight nodes {hw_nodes}")
    report.part_i_holds = report.part_i_strengthened_holds = report.part_ii_holds = True
    report.betas_are_positive_roots = report.isomorphic = report.step2_ok = True
    top = g.nodes[g.highest_id]
    report.step1_ok = all(top.phi[j] == (1 if j == i - 1 else 0) for j in range(ct.rank))
    for s in seeds:
        if any(tensor_eps_phi(top, g.nodes[s.right], j)[0] for j in range(1, ct.rank + 1)):
            report.failures.append(f"seed {s} is not a highest weight node")
        comp = component(g, g, s, node_cap, check_dim=False)
        _check_component(ct, i, g, comp, report)
    nonzero = {b.weight for b in g.nodes if not b.weight.is_zero()}
    report.betas_in_crystal_weights = all(b in nonzero and -b in nonzero for b in report.betas)
    for name in ("part_i_holds", "part_i_strengthened_holds", "part_ii_holds",
                 "betas_are_positive_roots", "betas_in_crystal_weights", "isomorphic",
                 "step1_ok", "step2_ok"):
        if not getattr(report, name):
            report.failures.append(f"{name} is false")
    return report


# -- G2 worked example -----------------------------------------------------
# Transcribed from the G2 example (Bourbaki labels, alpha_1 short).
# Weights are written as (c_w, c_a1, c_a2) meaning c_w*w_1 + c_a1*alpha_1 + c_a2*alpha_2.
G2_DATA_VERSION = "1"
G2_WEIGHTS = [  # b1..b7, top to bottom
    (1, 0, 0),
    (1, -1, 0),
    (1, -1, -1),
    (0, 0, 0),
    (-1, 1, 1),
    (-1, 1, 0),
    (-1, 0, 0),
]
G2_CHAIN_LABELS = [1, 2, 1, 1, 2, 1]
G2_STRING_TABLE = {  # (statistic, i) -> values on b1..b7
    ("phi", 1): [1, 0, 2, 1, 0, 1, 0],
    ("eps", 1): [0, 1, 0, 1, 2, 0, 1],
    ("phi", 2): [0, 1, 0, 0, 1, 0, 0],
    ("eps", 2): [0, 0, 1, 0, 0, 1, 0],
}
G2_TENSOR_PAIRS = [(1, 4), (1, 5), (1, 6), (2, 6), (2, 7), (3, 7), (4, 7)]  # x1..x7
G2_TENSOR_WEIGHTS = G2_WEIGHTS
G2_RULE_STEPS = [  # (label k, phi_k(b), eps_k(c), side, result pair)
    (1, 1, 1, "right", (1, 5)),
    (2, 0, 0, "right", (1, 6)),
    (1, 1, 0, "left", (2, 6)),
    (1, 0, 0, "right", (2, 7)),
    (2, 1, 0, "left", (3, 7)),
    (1, 2, 1, "left", (4, 7)),
]
G2_BETA = (1, -1, 0)


def _g2_weight(coeffs) -> Weight:
    cw, c1, c2 = coeffs
    return cw * fundamental_weight("G2", 1) + c1 * simple_root("G2", 1) + c2 * simple_root("G2", 2)


@dataclass
class Mismatch:
    item: str
    expected: object
    actual: object


@dataclass
class PaperDiff:
    mismatches: list[Mismatch] = field(default_factory=list)
    matched: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def _check(self, section: str, item: str, expected, actual):
        if expected == actual:
            self.matched[section] = self.matched.get(section, 0) + 1
        else:
            self.mismatches.append(Mismatch(item, expected, actual))


def reproduce_g2_paper_data(graph: Optional[CrystalGraph] = None) -> PaperDiff:
    """Compare the engine against the transcribed G2 figures and tables.

    Labels ``b_k`` are attached to engine nodes by weight, not discovery order.
    ``graph`` may be supplied to audit a prebuilt (or deliberately corrupted) crystal.
    """
    g = graph or build_crystal("G2", fundamental_weight("G2", 1))
    diff = PaperDiff()
    diff._check("size", "number of nodes of B(w1)", 7, len(g))
    weights = [_g2_weight(s) for s in G2_WEIGHTS]
    ids = []
    for k, w in enumerate(weights, 1):
        found = g.find_by_weight(w)
        diff._check("weights", f"node b{k} of weight {list(w)}", 1, len(found))
        ids.append(found[0] if found else None)
    if None in ids:
        return diff
    diff._check("weights", "discovery order matches b1..b7", list(range(7)), ids)

    for k in range(6):
        src, dst = ids[k], ids[k + 1]
        labels = sorted(i for (s, i), d in g.f_edges.items() if s == src and d == dst)
        diff._check("chain", f"edge b{k + 1}->b{k + 2}", [G2_CHAIN_LABELS[k]], labels)
    diff._check("chain", "number of edges", 6, len(g.f_edges))

    for (stat, i), values in G2_STRING_TABLE.items():
        for k, v in enumerate(values):
            node = g.nodes[ids[k]]
            actual = node.phi[i - 1] if stat == "phi" else node.eps[i - 1]
            diff._check("table", f"{stat}_{i}(b{k + 1})", v, actual)

    try:
        _check_g2_tensor(g, ids, weights, diff)
    except CrystalInvariantError as exc:
        diff.mismatches.append(Mismatch("tensor product of the supplied crystal", "a valid crystal",
                                        f"invariant violated: {exc}"))
    return diff


def _check_g2_tensor(g: CrystalGraph, ids: list[int], weights: list[Weight], diff: PaperDiff):
    def lbl(node_id):
        return f"b{ids.index(node_id) + 1}" if node_id in ids else f"#{node_id}"

    seed = TensorNode(ids[0], ids[3])
    hw = [x for x in highest_weight_nodes(g, g) if tensor_weight(g, g, x) == weights[0]]
    diff._check("tensor", "highest weight nodes of weight w1", [seed], hw)
    comp = component(g, g, seed, check_dim=False)
    pairs = [(ids.index(x.left) + 1, ids.index(x.right) + 1) for x in comp.members]
    diff._check("tensor", "component members x1..x7", G2_TENSOR_PAIRS, pairs)
    for k, (x, coeffs) in enumerate(zip(comp.members, G2_TENSOR_WEIGHTS), 1):
        diff._check("tensor", f"wt(x{k})", _g2_weight(coeffs), tensor_weight(g, g, x))
    for k, (label, phi_b, eps_c, side, result) in enumerate(G2_RULE_STEPS):
        x = comp.members[k]
        nxt = comp.f_edges.get((x, label))
        b, c = g.nodes[x.left], g.nodes[x.right]
        actual_side = "right" if b.phi[label - 1] <= c.eps[label - 1] else "left"
        got = None if nxt is None else (ids.index(nxt.left) + 1, ids.index(nxt.right) + 1)
        item = f"x{k + 1}->x{k + 2} via f{label} at {lbl(x.left)}(x){lbl(x.right)}"
        diff._check("rules", item,
                    (phi_b, eps_c, side, result),
                    (b.phi[label - 1], c.eps[label - 1], actual_side, got))
    labels = [i for k in range(6) for (x, i), y in comp.f_edges.items()
              if x == comp.members[k] and y == comp.members[k + 1]]
    diff._check("tensor", "component edge labels", G2_CHAIN_LABELS, labels)
    zero = comp.zero_weight_members
    diff._check("tensor", "zero-weight node", [(2, 6)],
                [(ids.index(x.left) + 1, ids.index(x.right) + 1) for x in zero])
    if zero:
        diff._check("tensor", "beta_1", _g2_weight(G2_BETA), g.nodes[zero[0].left].weight)
    diff._check("tensor", "component isomorphic to B(w1)", True, component_isomorphic(comp, g))


SWEEP_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2")


@dataclass
class SweepEntry:
    cartan_type: CartanType
    index: int
    dimension: int
    hypothesis_multiplicity: int
    left_factor_highest: bool
    report: Optional[LemmaReport] = None

    @property
    def passed(self) -> bool:
        if not self.left_factor_highest:
            return False
        return self.report is None or self.report.passed


def sweep(types=SWEEP_TYPES, max_dim: int = 30) -> list[SweepEntry]:
    """Run the lemma on every fundamental weight of dimension ``<= max_dim`` where it applies."""
    out = []
    for t in types:
        ct = CartanType.parse(t)
        for i in range(1, ct.rank + 1):
            w = fundamental_weight(ct, i)
            dim = weyl_dim(ct, w)
            if dim > max_dim:
                continue
            g = build_crystal(ct, w)
            hw = highest_weight_nodes(g, g)
            left_ok = all(x.left == g.highest_id for x in hw)
            mult = sum(1 for x in hw if tensor_weight(g, g, x) == w)
            entry = SweepEntry(ct, i, dim, mult, left_ok)
            if mult >= 1:
                entry.report = verify_lemma(ct, i)
            out.append(entry)
    return out
