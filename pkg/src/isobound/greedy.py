"""Weight-driven greedy construction of isolating sets.

Seven rules are tried in a fixed order; each one recolors at least one
White vertex, and on graphs of minimum degree >= delta with weights
feasible for the matching constraint system every chosen set A decreases
the total weight by at least |A|. Telescoping from omega*n down to zero
then bounds the output size by omega*n.

Rule order (the first applicable rule fires):

  R1  a White vertex with >= 4 White neighbors (those with >= 5 first).
  R2  a Blue vertex with residual degree >= 5.
  R3  a White vertex with exactly 3 White neighbors.
  R4  a Blue vertex with residual degree exactly 4.
  R5  a White component other than K2 / C5: take a minimum isolating
      set of that path or cycle.
  R6  a Blue vertex x touching >= 2 White components (all K2 / C5 now):
      x plus, per C5 among the two picked components, one cycle vertex
      at distance 2 from the attachment.
  R7  endgame: the lowest K2 (its lower endpoint) or C5 (both
      neighbors of its lowest vertex).

R1 prefers the >= 5 tier because a vertex with exactly 4 White
neighbors only pays for itself once no vertex has more: the respective
worst-case weight drops differ, and only the two-tier order keeps every
step above cost. Ties always break to the lowest vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from .exact import path_cycle_min_isolating
from .graph import Graph
from .residual import (Color, ResidualState, WeightVector, compute_residual,
                       is_isolating, total_weight)

VARIANTS = ("general", "triangle-free", "girth5")


class GreedyRule(IntEnum):
    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4
    R5 = 5
    R6 = 6
    R7 = 7


@dataclass(frozen=True)
class GreedyStep:
    rule: GreedyRule
    vertices: tuple[int, ...]
    xi: Fraction

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule.name,
            "set": list(self.vertices),
            "xi": str(self.xi),
            "size": self.size,
        }


@dataclass(frozen=True)
class GreedyTrace:
    """Audit trail of one run: the steps partition the final set D, and
    initial_weight − sum of step xi values telescopes to the final
    weight, which is zero once no White vertex remains."""

    n: int
    steps: tuple[GreedyStep, ...]
    D: tuple[int, ...]
    initial_weight: Fraction

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "initial_weight": str(self.initial_weight),
            "steps": [s.to_json_dict() for s in self.steps],
            "final_set": list(self.D),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "GreedyTrace":
        try:
            steps = tuple(
                GreedyStep(GreedyRule[s["rule"]], tuple(s["set"]), Fraction(s["xi"]))
                for s in d["steps"]
            )
            return cls(int(d["n"]), steps, tuple(d["final_set"]),
                       Fraction(d["initial_weight"]))
        except KeyError as e:
            raise ValueError(f"trace JSON missing key {e.args[0]!r}") from None


def _is_c5(comp: tuple[int, ...], wdeg: dict[int, int]) -> bool:
    return len(comp) == 5 and all(wdeg[v] == 2 for v in comp)


def select_desirable(state: ResidualState, variant: str = "general") -> tuple[GreedyRule, frozenset[int]]:
    """First applicable rule and its set, with lowest-index tie-breaking.

    The variant does not change rule logic (it only decides which
    weight vector makes the steps pay for themselves) but is accepted
    here so call sites read uniformly.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    if not state.whites:
        raise ValueError("no white vertex: the current set is already isolating")
    G = state.graph
    wdeg = state.white_degrees()
    rd = state.residual_degree

    for v in state.whites:
        if wdeg[v] >= 5:
            return GreedyRule.R1, frozenset((v,))
    for v in state.whites:
        if wdeg[v] == 4:
            return GreedyRule.R1, frozenset((v,))
    for v in state.blues:
        if rd[v] >= 5:
            return GreedyRule.R2, frozenset((v,))
    for v in state.whites:
        if wdeg[v] == 3:
            return GreedyRule.R3, frozenset((v,))
    for v in state.blues:
        if rd[v] == 4:
            return GreedyRule.R4, frozenset((v,))

    # white components are now paths and cycles (max white degree <= 2)
    comps = state.white_components()
    for comp in comps:
        if len(comp) != 2 and not _is_c5(comp, wdeg):
            sub, back = G.induced_subgraph(comp)
            local = path_cycle_min_isolating(sub)
            A = frozenset(back[i] for i in local)
            assert 3 * len(A) <= len(comp), \
                f"R5 set of size {len(A)} on a {len(comp)}-vertex component"
            return GreedyRule.R5, A

    comp_id: dict[int, int] = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = idx
    for x in state.blues:
        touched = sorted({comp_id[u] for u in G.neighbors(x)
                          if state.color[u] is Color.WHITE})
        if len(touched) < 2:
            continue
        A = {x}
        for idx in touched[:2]:
            comp = comps[idx]
            if _is_c5(comp, wdeg):
                y = min(u for u in G.neighbors(x) if u in comp)
                far = [v for v in comp if v != y and not G.has_edge(y, v)]
                A.add(min(far))
        return GreedyRule.R6, frozenset(A)

    comp = comps[0]
    if len(comp) == 2:
        return GreedyRule.R7, frozenset((comp[0],))
    v1 = comp[0]
    inner = [u for u in G.neighbors(v1) if u in comp]
    assert len(inner) == 2, "endgame component is not a 5-cycle"
    return GreedyRule.R7, frozenset(inner)


def greedy_isolating_set(G: Graph, wv: WeightVector,
                         variant: str = "general") -> tuple[tuple[int, ...], GreedyTrace]:
    """Run the rules to exhaustion and return (S, trace).

    Always terminates with an isolating S on any graph. The per-step
    xi >= |A| guarantees, and with them |S| <= omega*n, hold when the
    graph meets the variant's degree/girth precondition and wv is
    feasible for the matching constraint system; otherwise the trace is
    advisory.
    """
    D: set[int] = set()
    state = compute_residual(G, D)
    w_cur = total_weight(state, wv)
    steps: list[GreedyStep] = []
    while state.whites:
        rule, A = select_desirable(state, variant)
        if rule >= GreedyRule.R3:
            assert state.delta_w() <= 3 and state.delta_b() <= 4, \
                f"{rule.name} fired with degrees past the R1/R2 stage"
        if rule >= GreedyRule.R5:
            assert state.delta_w() <= 2 and state.delta_b() <= 3, \
                f"{rule.name} fired with degrees past the R3/R4 stage"
        white_before = len(state.whites)
        D |= A
        state = compute_residual(G, D)
        w_new = total_weight(state, wv)
        steps.append(GreedyStep(rule, tuple(sorted(A)), w_cur - w_new))
        assert len(state.whites) < white_before, f"{rule.name} made no progress"
        w_cur = w_new
    assert w_cur == 0, "non-white endstate must weigh nothing"
    S = tuple(sorted(D))
    trace = GreedyTrace(G.n, tuple(steps), S, wv.omega * G.n)
    return S, trace


@dataclass(frozen=True)
class TraceVerification:
    """Result of an independent trace replay; truthy only if everything holds.

    xi_matches: every recorded xi equals the from-scratch recomputation.
    desirable: every replayed xi(A) >= |A|.
    isolating: the final set isolates the graph.
    partition_ok: the steps are disjoint and their union is the recorded set.
    """

    xi_matches: bool
    desirable: bool
    isolating: bool
    partition_ok: bool

    def __bool__(self) -> bool:
        return self.xi_matches and self.desirable and self.isolating and self.partition_ok

    def to_json_dict(self) -> dict:
        return {
            "xi_matches": self.xi_matches,
            "desirable": self.desirable,
            "isolating": self.isolating,
            "partition_ok": self.partition_ok,
            "verified": bool(self),
        }


def verify_trace(G: Graph, trace: GreedyTrace, wv: WeightVector) -> TraceVerification:
    """Replay a trace with fresh residual computations and check it.

    The checks are reported separately: a run on a graph violating the
    degree precondition can fail the desirability check while its final
    set still isolates.
    """
    for step in trace.steps:
        for v in step.vertices:
            if not 0 <= v < G.n:
                raise ValueError(f"trace references vertex {v} outside [0, {G.n})")
    D: set[int] = set()
    xi_matches = True
    desirable = True
    partition_ok = True
    w_cur = total_weight(compute_residual(G, D), wv)
    for step in trace.steps:
        A = set(step.vertices)
        if A & D:
            partition_ok = False
        D |= A
        w_new = total_weight(compute_residual(G, D), wv)
        replayed = w_cur - w_new
        if replayed != step.xi:
            xi_matches = False
        if replayed < len(step.vertices):
            desirable = False
        w_cur = w_new
    if tuple(sorted(D)) != tuple(trace.D):
        partition_ok = False
    return TraceVerification(xi_matches, desirable, is_isolating(G, D), partition_ok)
