"""Thread-backed registry for long-running, cancellable analysis jobs."""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Any, Callable


@dataclass
class Job:
    id: str
    status: str = "pending"  # pending | running | done | error | cancelled
    progress: float = 0.0
    result: Any = None
    error: str | None = None
    cancel_event: threading.Event = field(default_factory=threading.Event)


class JobRegistry:
    def __init__(self):
        self._jobs: dict[str, Job] = {}
        self._guard = threading.Lock()

    def submit(self, work: Callable[[Job], Any]) -> Job:
        """Start ``work(job)`` on a daemon thread; the callable reports
        progress on the job and honors its cancel event."""
        job = Job(id=uuid.uuid4().hex)
        with self._guard:
            self._jobs[job.id] = job

        def runner():
            job.status = "running"
            try:
                result = work(job)
            except Exception as exc:
                job.status = "error"
                job.error = str(exc)
                return
            if job.cancel_event.is_set():
                job.status = "cancelled"
            else:
                job.result = result
                job.progress = 1.0
                job.status = "done"

        threading.Thread(target=runner, daemon=True).start()
        return job

    def get(self, job_id: str) -> Job | None:
        with self._guard:
            return self._jobs.get(job_id)

    def cancel(self, job_id: str) -> Job | None:
        job = self.get(job_id)
        if job is not None:
            job.cancel_event.set()
        return job
