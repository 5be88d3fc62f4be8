"""Builders for journal documents and planted analysis scenarios."""

from __future__ import annotations

import json

from treelab.journal import SolutionRun, parse_journal

DEFAULT_CODE = "import math\nx = 1\ny = math.sqrt(x)\n"


def node_dict(node_id: int, **over) -> dict:
    status = over.get("status", "functional")
    base = {
        "id": node_id,
        "parent_id": None,
        "stage": "draft",
        "status": status,
        "plan": f"plan for node {node_id}",
        "code": DEFAULT_CODE,
        "exec_output": "ok\n",
        "metric": 0.5 if status == "functional" else None,
        "exec_time": 1.0,
        "analysis_report": "",
        "llm_id": "llm-x",
    }
    base.update(over)
    return base


def journal_dict(nodes: list[dict], **config_over) -> dict:
    config = {
        "n_steps": max(30, len(nodes)),
        "n_drafts": 5,
        "llm_id": "llm-x",
        "metric_direction": "lower_better",
        "seed": 0,
    }
    config.update(config_over)
    return {"run_id": config_over.pop("run_id", "run-1"), "config": config, "nodes": nodes}


def journal_bytes(doc: dict) -> bytes:
    return json.dumps(doc).encode("utf-8")


def make_run(nodes: list[dict], run_id: str = "run-1", **config_over) -> SolutionRun:
    doc = journal_dict(nodes, **config_over)
    doc["run_id"] = run_id
    return parse_journal(journal_bytes(doc))


def chain_node(node_id: int, parent_id: int, *, buggy: bool, **over) -> dict:
    """Non-draft node: debug under a buggy parent, improve under a functional one."""
    stage = over.pop("stage", "debug" if over.get("parent_buggy", buggy) else "improve")
    over.pop("parent_buggy", None)
    return node_dict(
        node_id,
        parent_id=parent_id,
        stage=stage,
        status="buggy" if buggy else "functional",
        metric=None if buggy else over.pop("metric", 0.5),
        **over,
    )


TRACEBACK_XGBOOST = (
    "Traceback (most recent call last):\n"
    '  File "/tmp/agent/solution.py", line 2, in <module>\n'
    "    import xgboost\n"
    "ModuleNotFoundError: No module named 'xgboost'\n"
)

TRACEBACK_NAN = (
    "Traceback (most recent call last):\n"
    '  File "/home/agent/run.py", line 14, in <module>\n'
    "    model.fit(X, y)\n"
    "ValueError: Input contains NaN\n"
)
