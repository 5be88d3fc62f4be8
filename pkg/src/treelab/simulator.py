"""Coding-policy state machine for generating realistic solution-trees.

The simulator replays the draft/debug/improve policy against a pluggable mock
code generator, so whole journal corpora can be produced deterministically at
desk scale without any real LLM. Randomness comes exclusively from
``random.Random`` (Mersenne Twister) through its ``random()`` method, whose
output sequence is guaranteed stable across platforms and Python versions;
replaying a seed therefore reproduces a journal byte for byte.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import TYPE_CHECKING

from treelab.journal import (
    MetricDirection,
    NodeRecord,
    RunConfig,
    SolutionRun,
    Stage,
    Status,
    best_functional,
    merge_forest,
)

if TYPE_CHECKING:
    from treelab.generators import GeneratorStub


class ImproveRule(str, Enum):
    GREEDY = "greedy"
    SOFTMAX = "softmax"


class ActionKind(str, Enum):
    DRAFT = "draft"
    DEBUG = "debug"
    IMPROVE = "improve"
    TERMINATE = "terminate"


@dataclass(frozen=True)
class PolicyAction:
    kind: ActionKind
    target_id: int | None = None


@dataclass(frozen=True)
class PolicyConfig:
    n_steps: int = 30
    n_drafts: int = 5
    p_debug: float = 0.5
    debug_max_depth: int = 3
    improve_rule: ImproveRule = ImproveRule.GREEDY
    softmax_temperature: float = 1.0
    seed: int = 0
    llm_id: str = "sim-llm"
    metric_direction: MetricDirection = MetricDirection.LOWER_BETTER

    def __post_init__(self):
        if not 1 <= self.n_drafts <= self.n_steps:
            raise ValueError(f"n_drafts={self.n_drafts} outside 1..n_steps={self.n_steps}")
        if not 0.0 <= self.p_debug <= 1.0:
            raise ValueError(f"p_debug={self.p_debug} outside [0, 1]")
        if self.debug_max_depth < 1:
            raise ValueError("debug_max_depth must be >= 1")
        if self.softmax_temperature <= 0:
            raise ValueError("softmax_temperature must be > 0")


class SimulationError(RuntimeError):
    """Generator failure during a simulated run, annotated with the step index."""


def _pick(rng: random.Random, items: list[int]) -> int:
    # Uniform choice driven only by rng.random() to keep replay portable.
    return items[min(int(rng.random() * len(items)), len(items) - 1)]


def select_improve_greedy(run: SolutionRun) -> int:
    """Best functional node under the run's metric direction; ties to smallest id."""
    best = best_functional(run)
    if best is None:
        raise ValueError("no functional node to improve")
    return best.id


def select_improve_softmax(run: SolutionRun, temperature: float, rng: random.Random) -> int:
    """Sample an improve target with probability softmax(score / temperature).

    Scores are the metric values, negated for lower-is-better runs so the best
    node always carries the highest probability.
    """
    if temperature <= 0:
        raise ValueError("temperature must be > 0")
    functional = run.functional_nodes()
    if not functional:
        raise ValueError("no functional node to improve")
    sign = -1.0 if run.config.metric_direction is MetricDirection.LOWER_BETTER else 1.0
    scores = [sign * n.metric / temperature for n in functional]
    peak = max(scores)
    weights = [math.exp(s - peak) for s in scores]
    total = sum(weights)
    u = rng.random() * total
    cumulative = 0.0
    for node, weight in zip(functional, weights):
        cumulative += weight
        if u < cumulative:
            return node.id
    return functional[-1].id


def _debug_candidates(run: SolutionRun, max_depth: int) -> list[int]:
    tree = merge_forest(run)
    return [
        n.id
        for n in sorted(run.nodes, key=lambda n: n.id)
        if n.status is Status.BUGGY
        and not tree.children_of(n.id)
        and tree.depth[n.id] <= max_depth
    ]


def next_action(run_so_far: SolutionRun, cfg: PolicyConfig, rng: random.Random) -> PolicyAction:
    """One policy step: terminate, draft, debug a buggy leaf, or improve.

    Debug falls through to improve when no buggy leaf sits within the depth
    bound, and improve degrades to a fresh draft when no functional node
    exists yet.
    """
    if len(run_so_far.nodes) >= cfg.n_steps:
        return PolicyAction(ActionKind.TERMINATE)
    if run_so_far.draft_count() < cfg.n_drafts:
        return PolicyAction(ActionKind.DRAFT)

    wants_debug = rng.random() < cfg.p_debug
    if wants_debug:
        candidates = _debug_candidates(run_so_far, cfg.debug_max_depth)
        if candidates:
            return PolicyAction(ActionKind.DEBUG, target_id=_pick(rng, candidates))

    if not run_so_far.functional_nodes():
        return PolicyAction(ActionKind.DRAFT)
    if cfg.improve_rule is ImproveRule.SOFTMAX:
        target = select_improve_softmax(run_so_far, cfg.softmax_temperature, rng)
    else:
        target = select_improve_greedy(run_so_far)
    return PolicyAction(ActionKind.IMPROVE, target_id=target)


_STAGE_FOR_ACTION = {
    ActionKind.DRAFT: Stage.DRAFT,
    ActionKind.DEBUG: Stage.DEBUG,
    ActionKind.IMPROVE: Stage.IMPROVE,
}


def simulate_run(cfg: PolicyConfig, gen: GeneratorStub, run_id: str | None = None) -> SolutionRun:
    """Drive the policy for exactly ``n_steps`` nodes and return the journal."""
    rng = random.Random(cfg.seed)
    config = RunConfig(
        n_steps=cfg.n_steps,
        n_drafts=cfg.n_drafts,
        llm_id=cfg.llm_id,
        metric_direction=cfg.metric_direction,
        seed=cfg.seed,
    )
    run = SolutionRun(
        run_id=run_id if run_id is not None else f"{cfg.llm_id}-seed{cfg.seed}",
        config=config,
        nodes=(),
    )
    while True:
        action = next_action(run, cfg, rng)
        if action.kind is ActionKind.TERMINATE:
            return run
        step = len(run.nodes)
        parent = run.node(action.target_id) if action.target_id is not None else None
        try:
            out = gen.generate(action, parent, rng)
        except Exception as exc:
            raise SimulationError(f"generator failed at step {step}: {exc}") from exc
        node = NodeRecord(
            id=step,
            parent_id=action.target_id,
            stage=_STAGE_FOR_ACTION[action.kind],
            status=out.status,
            plan=out.plan,
            code=out.code,
            exec_output=out.exec_output,
            metric=out.metric,
            exec_time=out.exec_time,
            analysis_report=out.analysis_report,
            llm_id=cfg.llm_id,
        )
        run = replace(run, nodes=run.nodes + (node,))
