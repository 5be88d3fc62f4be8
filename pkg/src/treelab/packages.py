"""Import extraction and the per-package, per-LLM usage table."""

from __future__ import annotations

import ast
import warnings
from dataclasses import dataclass

from treelab.journal import RunSet, Status


class ExtractionWarning(UserWarning):
    """Code could not be parsed; it contributes no imports."""


def extract_packages(code: str) -> set[str]:
    """Qualified names imported by a snippet.

    ``import x.y`` yields ``x.y``; ``from x import z`` yields ``x.z``
    (aliases resolve to the imported name, not the binding). Unparsable code
    yields the empty set with a warning.
    """
    try:
        tree = ast.parse(code)
    except (SyntaxError, ValueError) as exc:
        warnings.warn(f"unparsable code skipped: {exc}", ExtractionWarning, stacklevel=2)
        return set()
    names: set[str] = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            names.update(alias.name for alias in node.names)
        elif isinstance(node, ast.ImportFrom):
            base = "." * node.level + (node.module or "")
            for alias in node.names:
                names.add(f"{base}.{alias.name}" if base else alias.name)
    return names


@dataclass(frozen=True)
class UsageCell:
    use_count: int
    buggy_count: int

    @property
    def buggy_ratio(self) -> float | None:
        """Buggy share of the importing nodes; 1.0 marks an always-buggy package."""
        if self.use_count == 0:
            return None
        return self.buggy_count / self.use_count


_EMPTY = UsageCell(0, 0)


@dataclass(frozen=True)
class PackageUsageTable:
    packages: tuple[str, ...]
    llm_ids: tuple[str, ...]
    cells: dict[tuple[str, str], UsageCell]

    def cell(self, package: str, llm_id: str) -> UsageCell:
        return self.cells.get((package, llm_id), _EMPTY)

    def sorted_packages(self, llm_id: str) -> list[str]:
        """Row order for the clicked column: descending count, then name."""
        return sorted(self.packages, key=lambda p: (-self.cell(p, llm_id).use_count, p))


def package_table(runsets: list[RunSet]) -> PackageUsageTable:
    """Count importing nodes (and how many of them were buggy) per package and LLM."""
    counts: dict[tuple[str, str], list[int]] = {}
    llm_ids = tuple(rs.llm_id for rs in runsets)
    for runset in runsets:
        for run in runset.runs:
            for node in run.nodes:
                for package in extract_packages(node.code):
                    tally = counts.setdefault((package, runset.llm_id), [0, 0])
                    tally[0] += 1
                    if node.status is Status.BUGGY:
                        tally[1] += 1
    packages = tuple(sorted({pkg for pkg, _ in counts}))
    cells = {key: UsageCell(use, buggy) for key, (use, buggy) in counts.items()}
    return PackageUsageTable(packages=packages, llm_ids=llm_ids, cells=cells)
