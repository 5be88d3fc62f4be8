"""On-disk workspace of ingested journals plus a content-addressed cache.

Every API response is derivable from the journal files alone; cached
artifacts are keyed by the content hash of their inputs, so editing a journal
on disk naturally invalidates what was computed from it, and a corrupt cache
entry is recomputed rather than served.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from pathlib import Path
from typing import Any, Callable

from treelab.journal import RunSet, SolutionRun, build_runsets, parse_journal


class WorkspaceError(ValueError):
    pass


class UnknownRunError(KeyError):
    pass


def _safe_name(run_id: str) -> str:
    stem = re.sub(r"[^A-Za-z0-9._-]", "_", run_id) or "run"
    suffix = hashlib.sha256(run_id.encode("utf-8")).hexdigest()[:8]
    return f"{stem}-{suffix}.json"


class Workspace:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.journals_dir = self.root / "journals"
        self.cache_dir = self.root / "cache"
        self.journals_dir.mkdir(parents=True, exist_ok=True)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._parsed: dict[str, tuple[str, SolutionRun]] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    # -- journals ---------------------------------------------------------

    def ingest(self, source: str | Path | bytes) -> str:
        """Validate and copy a journal into the workspace; returns its run id.

        Ingesting identical bytes twice is a no-op; a different journal under
        an already-used run id is rejected.
        """
        data = Path(source).read_bytes() if not isinstance(source, bytes) else source
        run = parse_journal(data)
        target = self.journals_dir / _safe_name(run.run_id)
        if target.exists():
            if target.read_bytes() == data:
                return run.run_id
            raise WorkspaceError(
                f"run '{run.run_id}' already ingested with different content"
            )
        target.write_bytes(data)
        return run.run_id

    def _journal_path(self, run_id: str) -> Path:
        path = self.journals_dir / _safe_name(run_id)
        if not path.exists():
            raise UnknownRunError(run_id)
        return path

    def journal_bytes(self, run_id: str) -> bytes:
        return self._journal_path(run_id).read_bytes()

    def journal_hash(self, run_id: str) -> str:
        return hashlib.sha256(self.journal_bytes(run_id)).hexdigest()

    def run_ids(self) -> list[str]:
        ids = []
        for path in sorted(self.journals_dir.glob("*.json")):
            doc = json.loads(path.read_text("utf-8"))
            ids.append(doc["run_id"])
        return sorted(ids)

    def load_run(self, run_id: str) -> SolutionRun:
        data = self.journal_bytes(run_id)
        digest = hashlib.sha256(data).hexdigest()
        cached = self._parsed.get(run_id)
        if cached is not None and cached[0] == digest:
            return cached[1]
        run = parse_journal(data)
        self._parsed[run_id] = (digest, run)
        return run

    def runsets(self) -> list[RunSet]:
        return build_runsets([self.load_run(rid) for rid in self.run_ids()])

    def runset(self, llm_id: str) -> RunSet:
        for runset in self.runsets():
            if runset.llm_id == llm_id:
                return runset
        raise UnknownRunError(llm_id)

    def corpus_hash(self, run_ids: list[str] | None = None) -> str:
        """Joint content hash of the named journals (all of them by default)."""
        ids = sorted(run_ids) if run_ids is not None else self.run_ids()
        joined = hashlib.sha256()
        for run_id in ids:
            joined.update(run_id.encode("utf-8"))
            joined.update(self.journal_hash(run_id).encode("ascii"))
        return joined.hexdigest()

    # -- content-addressed cache ------------------------------------------

    def _cache_lock(self, key: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(key, threading.Lock())

    def cached(
        self, artifact: str, inputs_hash: str, params: dict, compute: Callable[[], Any]
    ) -> Any:
        """JSON-caching wrapper with per-key single-flight computation."""
        raw_key = json.dumps(
            {"artifact": artifact, "inputs": inputs_hash, "params": params}, sort_keys=True
        )
        key = hashlib.sha256(raw_key.encode("utf-8")).hexdigest()
        path = self.cache_dir / f"{key}.json"
        with self._cache_lock(key):
            if path.exists():
                try:
                    return json.loads(path.read_text("utf-8"))["payload"]
                except (json.JSONDecodeError, KeyError, UnicodeDecodeError):
                    pass  # corrupt entry: fall through and recompute
            payload = compute()
            path.write_text(
                json.dumps({"artifact": artifact, "payload": payload}), encoding="utf-8"
            )
            return payload
