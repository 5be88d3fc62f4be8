import pytest

from treelab.generators import FixtureGenerator
from treelab.journal import MetricDirection
from treelab.simulator import PolicyConfig, simulate_run


@pytest.fixture(scope="session")
def simulated_runs():
    """Nine deterministic runs: three LLM ids x three seeds."""
    runs = []
    for llm in ("llm-a", "llm-b", "llm-c"):
        for seed in range(3):
            cfg = PolicyConfig(
                n_steps=30,
                n_drafts=5,
                seed=seed,
                llm_id=llm,
                metric_direction=MetricDirection.LOWER_BETTER,
            )
            runs.append(simulate_run(cfg, FixtureGenerator(buggy_rate=0.3)))
    return runs
