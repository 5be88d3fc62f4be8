"""Mock code generators that stand in for the coding LLM during simulation.

Both generators are pure functions of the rng stream handed to them, so a
seeded simulation is fully reproducible.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Protocol

from treelab.journal import Status
from treelab.simulator import ActionKind, NodeRecord, PolicyAction


@dataclass(frozen=True)
class GeneratedSolution:
    plan: str
    code: str
    status: Status
    metric: float | None
    exec_time: float
    exec_output: str
    analysis_report: str = ""


class GeneratorStub(Protocol):
    """Produces one solution given the policy action and the target node."""

    def generate(
        self, action: PolicyAction, parent: NodeRecord | None, rng: random.Random
    ) -> GeneratedSolution: ...


_DRAFT_TEMPLATES = [
    """\
import pandas as pd
from sklearn.ensemble import GradientBoostingRegressor
from sklearn.model_selection import train_test_split

train = pd.read_csv("train.csv")
X = train.drop(columns=["target"])
y = train["target"]
X_train, X_val, y_train, y_val = train_test_split(X, y, random_state=0)
model = GradientBoostingRegressor(n_estimators=100, learning_rate=0.1)
model.fit(X_train, y_train)
preds = model.predict(X_val)
""",
    """\
import numpy as np
import pandas as pd
from sklearn.ensemble import RandomForestRegressor

train = pd.read_csv("train.csv")
X = train.select_dtypes(include=[np.number]).drop(columns=["target"])
y = np.log1p(train["target"])
model = RandomForestRegressor(n_estimators=200, max_depth=12)
model.fit(X, y)
preds = np.expm1(model.predict(X))
""",
    """\
import pandas as pd
from sklearn.linear_model import Ridge
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

train = pd.read_csv("train.csv")
X = train.drop(columns=["target"]).fillna(0)
y = train["target"]
model = make_pipeline(StandardScaler(), Ridge(alpha=1.0))
model.fit(X, y)
preds = model.predict(X)
""",
    """\
import pandas as pd
import xgboost as xgb

train = pd.read_csv("train.csv")
X = train.drop(columns=["target"])
y = train["target"]
model = xgb.XGBRegressor(n_estimators=300, learning_rate=0.05)
model.fit(X, y)
preds = model.predict(X)
""",
    """\
import math
import pandas as pd
from sklearn.ensemble import GradientBoostingRegressor
from sklearn.model_selection import cross_val_score

train = pd.read_csv("train.csv")
X = train.drop(columns=["target"]).fillna(0)
y = train["target"]
model = GradientBoostingRegressor(n_estimators=150)
scores = cross_val_score(model, X, y, cv=5, scoring="neg_mean_squared_error")
rmse = math.sqrt(-scores.mean())
""",
    """\
import os
import pandas as pd
from sklearn.linear_model import LinearRegression

os.makedirs("./working", exist_ok=True)
train = pd.read_csv("train.csv")
X = train.drop(columns=["target"]).fillna(0)
y = train["target"]
model = LinearRegression()
model.fit(X, y)
pd.DataFrame({"pred": model.predict(X)}).to_csv("./working/preds.csv")
""",
]

_ERROR_TEMPLATES = [
    """\
Traceback (most recent call last):
  File "/tmp/agent/solution.py", line 2, in <module>
    import xgboost as xgb
ModuleNotFoundError: No module named 'xgboost'
""",
    """\
Traceback (most recent call last):
  File "/tmp/agent/solution.py", line 3, in <module>
    import lightgbm as lgb
ModuleNotFoundError: No module named 'lightgbm'
""",
    """\
Traceback (most recent call last):
  File "/tmp/agent/solution.py", line 10, in <module>
    model.fit(X_train, y_train)
ValueError: Input contains NaN
""",
    """\
Traceback (most recent call last):
  File "/tmp/agent/solution.py", line 7, in <module>
    y = train["target"]
KeyError: 'target'
""",
]

_PARAM_TWEAKS = ["50", "150", "200", "300", "400", "500"]


def _pick(rng: random.Random, items: list) -> object:
    return items[min(int(rng.random() * len(items)), len(items) - 1)]


class FixtureGenerator:
    """Table-driven generator cycling realistic tabular-ML snippets.

    ``buggy_rate`` is the probability that a generated node fails; the
    all-buggy and bug-free corpora used in tests are the two extremes.
    """

    def __init__(self, buggy_rate: float = 0.3):
        if not 0.0 <= buggy_rate <= 1.0:
            raise ValueError("buggy_rate must be within [0, 1]")
        self.buggy_rate = buggy_rate

    def generate(
        self, action: PolicyAction, parent: NodeRecord | None, rng: random.Random
    ) -> GeneratedSolution:
        buggy = rng.random() < self.buggy_rate
        if action.kind is ActionKind.DRAFT or parent is None:
            code = str(_pick(rng, _DRAFT_TEMPLATES))
            plan = "Start from scratch with a fresh baseline model."
        elif action.kind is ActionKind.DEBUG:
            code = _fix_code(parent.code)
            plan = f"Fix the failure observed in node {parent.id}."
        else:
            code = _tweak_code(parent.code, str(_pick(rng, _PARAM_TWEAKS)))
            plan = f"Improve node {parent.id} by retuning the model."

        if buggy:
            exec_output = str(_pick(rng, _ERROR_TEMPLATES))
            metric = None
            report = "The run failed; the traceback points at a missing dependency or bad input."
        else:
            metric = round(0.11 + 0.05 * rng.random(), 6)
            exec_output = f"validation metric: {metric}\n"
            report = "The run completed and produced a validation metric."
        exec_time = round(0.5 + 9.5 * rng.random(), 3)
        return GeneratedSolution(
            plan=plan,
            code=code,
            status=Status.BUGGY if buggy else Status.FUNCTIONAL,
            metric=metric,
            exec_time=exec_time,
            exec_output=exec_output,
            analysis_report=report,
        )


_FIXES = [
    ("import xgboost as xgb", "from sklearn.ensemble import GradientBoostingRegressor"),
    ("xgb.XGBRegressor", "GradientBoostingRegressor"),
    ('train.drop(columns=["target"])', 'train.drop(columns=["target"], errors="ignore")'),
]


def _fix_code(code: str) -> str:
    fixed = code
    for old, new in _FIXES:
        fixed = fixed.replace(old, new)
    if fixed == code:
        fixed = code.replace(".fillna(0)", ".fillna(-1)") if ".fillna(0)" in code else code + "\n"
    return fixed


def _tweak_code(code: str, value: str) -> str:
    tweaked, n = re.subn(r"n_estimators=\d+", f"n_estimators={value}", code, count=1)
    if n == 0:
        tweaked = code + f"\nbest_iterations = {value}\n"
    return tweaked


_GRAMMAR_IMPORTS = [
    "import math",
    "import numpy as np",
    "import pandas as pd",
    "from sklearn.linear_model import Ridge",
    "from sklearn.ensemble import GradientBoostingRegressor",
    "import json",
]

_GRAMMAR_NAMES = ["alpha", "beta", "gamma", "delta", "score", "total", "frame", "result"]
_GRAMMAR_OPS = ["+", "-", "*"]


class GrammarGenerator:
    """Emits small random but syntactically valid programs from a toy grammar."""

    def __init__(self, buggy_rate: float = 0.3, statements: int = 6):
        self.buggy_rate = buggy_rate
        self.statements = statements

    def _expr(self, rng: random.Random, bound: list[str]) -> str:
        roll = rng.random()
        if roll < 0.4 or not bound:
            return str(int(rng.random() * 100))
        if roll < 0.8:
            left = _pick(rng, bound)
            right = str(int(rng.random() * 10) + 1)
            return f"{left} {_pick(rng, _GRAMMAR_OPS)} {right}"
        return f"math.sqrt({_pick(rng, bound)} * {_pick(rng, bound)})"

    def generate(
        self, action: PolicyAction, parent: NodeRecord | None, rng: random.Random
    ) -> GeneratedSolution:
        lines = ["import math"]
        for imp in _GRAMMAR_IMPORTS[1:]:
            if rng.random() < 0.4:
                lines.append(imp)
        bound: list[str] = []
        for _ in range(self.statements):
            name = str(_pick(rng, _GRAMMAR_NAMES))
            lines.append(f"{name} = {self._expr(rng, bound)}")
            if name not in bound:
                bound.append(name)
        target = str(_pick(rng, bound))
        lines.append(f"def evaluate({target}):")
        lines.append(f"    return abs({target})")
        code = "\n".join(lines) + "\n"

        buggy = rng.random() < self.buggy_rate
        if buggy:
            metric = None
            exec_output = str(_pick(rng, _ERROR_TEMPLATES))
        else:
            metric = round(0.1 + 0.9 * rng.random(), 6)
            exec_output = f"validation metric: {metric}\n"
        return GeneratedSolution(
            plan=f"{action.kind.value} step over a randomized formula program.",
            code=code,
            status=Status.BUGGY if buggy else Status.FUNCTIONAL,
            metric=metric,
            exec_time=round(0.2 + 4.8 * rng.random(), 3),
            exec_output=exec_output,
            analysis_report="Synthetic grammar program.",
        )


def make_generator(kind: str, buggy_rate: float = 0.3) -> GeneratorStub:
    """Factory behind the CLI's --generator flag."""
    if kind == "fixture":
        return FixtureGenerator(buggy_rate=buggy_rate)
    if kind == "grammar":
        return GrammarGenerator(buggy_rate=buggy_rate)
    raise ValueError(f"unknown generator kind: {kind!r}")
