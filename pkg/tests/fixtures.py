"""Shared code fixtures: the six trivial-difference pairs, diffable snippet
pairs, metamorphic seed snippets, and the hand-tallied package corpus."""

from __future__ import annotations

from helpers import TRACEBACK_NAN, TRACEBACK_XGBOOST, journal_dict, node_dict

# -- six trivial-difference case pairs (comment, formatting, print, kwarg
# order, dict order, identifier rename); each pair must score exactly 1.0 ----

CASE_COMMENTS = (
    """\
import pandas as pd
# load the training table
train = pd.read_csv("train.csv")
score = 0.5
""",
    """\
import pandas as pd
train = pd.read_csv("train.csv")  # read input data
# evaluate
score = 0.5
""",
)

CASE_FORMATTING = (
    """\
def rmse(pred, truth):
    return ((pred - truth) ** 2).mean() ** 0.5

result = rmse(1, 2)
""",
    """\
def rmse(pred,truth):
    return ((pred-truth)**2).mean()**0.5


result = rmse(1,  2)
""",
)

CASE_PRINTS = (
    """\
import math
value = math.sqrt(2)
print("computed", value)
total = value + 1
print(total)
""",
    """\
import math
value = math.sqrt(2)
total = value + 1
""",
)

CASE_KWARG_ORDER = (
    """\
from sklearn.ensemble import GradientBoostingRegressor
model = GradientBoostingRegressor(n_estimators=100, learning_rate=0.1, max_depth=3)
""",
    """\
from sklearn.ensemble import GradientBoostingRegressor
model = GradientBoostingRegressor(max_depth=3, learning_rate=0.1, n_estimators=100)
""",
)

CASE_DICT_ORDER = (
    """\
params = {"alpha": 1.0, "beta": 2.0, "gamma": 0.1}
limits = {"low": 0, "high": 10}
""",
    """\
params = {"gamma": 0.1, "alpha": 1.0, "beta": 2.0}
limits = {"high": 10, "low": 0}
""",
)

CASE_RENAME = (
    """\
import pandas as pd
frame = pd.read_csv("train.csv")
labels = frame["target"]
cleaned = frame.fillna(0)
""",
    """\
import pandas as pd
data = pd.read_csv("train.csv")
outcome = data["target"]
prepared = data.fillna(0)
""",
)

TRIVIAL_CASE_PAIRS = {
    "comments": CASE_COMMENTS,
    "formatting": CASE_FORMATTING,
    "prints": CASE_PRINTS,
    "kwarg_order": CASE_KWARG_ORDER,
    "dict_order": CASE_DICT_ORDER,
    "rename": CASE_RENAME,
}

# -- regressor-swap pair: only the import and constructor lines differ -------

REGRESSOR_SWAP = (
    """\
import pandas as pd
from xgboost import XGBRegressor

train = pd.read_csv("train.csv")
X = train.drop(columns=["SalePrice"])
y = train["SalePrice"]
model = XGBRegressor(n_estimators=200)
model.fit(X, y)
""",
    """\
import pandas as pd
from sklearn.ensemble import GradientBoostingRegressor

train = pd.read_csv("train.csv")
X = train.drop(columns=["SalePrice"])
y = train["SalePrice"]
model = GradientBoostingRegressor(n_estimators=200)
model.fit(X, y)
""",
)

# -- metamorphic seeds: single-line top-level statements, string literals
# free of commas/operator characters, so the textual transforms stay safe.
# ``renameable`` lists identifiers a consistent rename may touch. ------------

METAMORPHIC_SEEDS: list[dict] = [
    {
        "code": 'import pandas as pd\nframe = pd.read_csv("train.csv")\ntarget = frame["price"]\n',
        "renameable": ["frame", "target"],
    },
    {
        "code": "import math\nradius = 3\narea = math.pi * radius * radius\n",
        "renameable": ["radius", "area"],
    },
    {
        "code": (
            "from sklearn.ensemble import GradientBoostingRegressor\n"
            "model = GradientBoostingRegressor(n_estimators=150, max_depth=4)\n"
        ),
        "renameable": ["model"],
    },
    {
        "code": 'settings = {"depth": 5, "rate": 0.1, "trees": 100}\nchosen = settings["depth"]\n',
        "renameable": ["settings", "chosen"],
    },
    {
        "code": "import numpy as np\nvalues = np.arange(10)\ntotal = values.sum()\nmean = total / 10\n",
        "renameable": ["values", "total", "mean"],
    },
    {
        "code": "def square(side):\n    return side * side\n\nanswer = square(7)\n",
        "renameable": ["square", "side", "answer"],
    },
    {
        "code": 'import json\npayload = {"alpha": 1, "beta": 2}\nserialized = json.dumps(payload)\n',
        "renameable": ["payload", "serialized"],
    },
    {
        "code": "numbers = [4, 2, 9, 1]\nordered = sorted(numbers, reverse=True)\nbiggest = ordered[0]\n",
        "renameable": ["numbers", "ordered", "biggest"],
    },
    {
        "code": 'import os\nos.makedirs("workdir", exist_ok=True)\nplace = os.getcwd()\n',
        "renameable": ["place"],
    },
    {
        "code": "base = 10\nfor step in range(5):\n    base = base + step\n\nfinal = base\n",
        "renameable": ["base", "step", "final"],
    },
    {
        "code": "import math\ndef hypot(a, b):\n    return math.sqrt(a * a + b * b)\n\nlength = hypot(3, 4)\n",
        "renameable": ["hypot", "a", "b", "length"],
    },
    {
        "code": 'import pandas as pd\nraw = pd.read_csv("input.csv")\nclean = raw.dropna()\nrows = len(clean)\n',
        "renameable": ["raw", "clean", "rows"],
    },
    {
        "code": 'scores = {"first": 0.91, "second": 0.87}\nspread = scores["first"] - scores["second"]\n',
        "renameable": ["scores", "spread"],
    },
    {
        "code": "import numpy as np\ngrid = np.zeros(shape=(3, 3), dtype=float)\ngrid[0] = 1\ncorner = grid[0][0]\n",
        "renameable": ["grid", "corner"],
    },
    {
        "code": "def combine(left, right):\n    return left + right\n\nmerged = combine(left=1, right=2)\n",
        "renameable": ["combine", "left", "right", "merged"],
    },
    {
        "code": "count = 0\nwhile count < 5:\n    count = count + 1\n\ndone = count\n",
        "renameable": ["count", "done"],
    },
    {
        "code": 'from sklearn.linear_model import Ridge\nestimator = Ridge(alpha=0.5, fit_intercept=True)\nlabel = "ridge"\n',
        "renameable": ["estimator", "label"],
    },
    {
        "code": "items = [1, 2, 3]\ndoubled = [entry * 2 for entry in items]\nhead = doubled[0]\n",
        "renameable": ["items", "doubled", "entry", "head"],
    },
    {
        "code": "import math\nangles = [0.0, 0.5, 1.0]\nwaves = [math.sin(theta) for theta in angles]\npeak = max(waves)\n",
        "renameable": ["angles", "waves", "theta", "peak"],
    },
    {
        # `value` stays out of renameable: it doubles as an attribute name,
        # which normalization deliberately preserves.
        "code": "class Holder:\n    def __init__(self, value):\n        self.value = value\n\nbox = Holder(5)\nkept = box.value\n",
        "renameable": ["Holder", "box", "kept"],
    },
]

# -- hand-tallied package corpus: 30 snippets, 8 packages, fixed flags -------

_SNIPPET = {
    "np_pd": "import numpy\nimport pandas\nx = 1\n",
    "xgb_np": "import xgboost\nimport numpy\nx = 1\n",
    "gbr_pd": "from sklearn.ensemble import GradientBoostingRegressor\nimport pandas\nx = 1\n",
    "os_json": "import os\nimport json\nx = 1\n",
    "lgbm": "import lightgbm\nx = 1\n",
    "math_np": "import math\nimport numpy\nx = 1\n",
    "lgbm_pd": "import lightgbm\nimport pandas\nx = 1\n",
    "gbr": "from sklearn.ensemble import GradientBoostingRegressor\nx = 1\n",
    "os": "import os\nx = 1\n",
    "json_math": "import json\nimport math\nx = 1\n",
}

# (snippet key, buggy) per node; llm-a then llm-b, 15 nodes each.
PACKAGE_CORPUS_PLAN = {
    "llm-a": [("np_pd", False)] * 5
    + [("xgb_np", True)] * 3
    + [("gbr_pd", False)] * 3
    + [("os_json", False)] * 2
    + [("lgbm", True)] * 2,
    "llm-b": [("math_np", False)] * 6
    + [("lgbm_pd", True)] * 3
    + [("gbr", False)] * 3
    + [("os", True)] * 1
    + [("json_math", False)] * 2,
}

# Hand tally of the plan above: (use_count, buggy_count) per package and LLM.
PACKAGE_CORPUS_EXPECTED = {
    ("numpy", "llm-a"): (8, 3),
    ("pandas", "llm-a"): (8, 0),
    ("xgboost", "llm-a"): (3, 3),
    ("sklearn.ensemble.GradientBoostingRegressor", "llm-a"): (3, 0),
    ("os", "llm-a"): (2, 0),
    ("json", "llm-a"): (2, 0),
    ("lightgbm", "llm-a"): (2, 2),
    ("math", "llm-b"): (8, 0),
    ("numpy", "llm-b"): (6, 0),
    ("lightgbm", "llm-b"): (3, 3),
    ("pandas", "llm-b"): (3, 3),
    ("sklearn.ensemble.GradientBoostingRegressor", "llm-b"): (3, 0),
    ("os", "llm-b"): (1, 1),
    ("json", "llm-b"): (2, 0),
}

PACKAGE_CORPUS_PACKAGES = {
    "numpy",
    "pandas",
    "xgboost",
    "sklearn.ensemble.GradientBoostingRegressor",
    "os",
    "json",
    "lightgbm",
    "math",
}


def package_corpus_journals() -> list[dict]:
    """One all-draft journal per LLM following the hand-tallied plan."""
    docs = []
    for llm_id, plan in PACKAGE_CORPUS_PLAN.items():
        nodes = []
        for i, (key, buggy) in enumerate(plan):
            nodes.append(
                node_dict(
                    i,
                    code=_SNIPPET[key],
                    status="buggy" if buggy else "functional",
                    metric=None if buggy else 0.4,
                    exec_output=TRACEBACK_XGBOOST if buggy else "ok\n",
                    llm_id=llm_id,
                )
            )
        doc = journal_dict(nodes, n_steps=len(nodes), n_drafts=len(nodes), llm_id=llm_id)
        doc["run_id"] = f"pkg-{llm_id}"
        docs.append(doc)
    return docs
