"""Wall-clock and memory measurement around training runs.

Peak resident memory comes from the kernel's per-process high-water mark
(ru_maxrss), which is monotone over a process lifetime; to compare runs,
execute each in its own process (the CLI ``bench`` subcommand does this).
When tracemalloc is active, the per-run peak of traced Python/numpy
allocations is also captured; it isolates the training loop's own
allocations from the interpreter baseline.
"""

from __future__ import annotations

import resource
import time
import tracemalloc
from dataclasses import dataclass, field


@dataclass
class ResourceReport:
    wall_clock_s: float = 0.0
    peak_rss_bytes: int = 0
    traced_peak_bytes: int = 0  # 0 when tracemalloc was not tracing
    param_bytes: int = 0
    optimizer_state_bytes: int = 0

    def scaled(self) -> dict[str, float]:
        return {
            "wall_clock_s": round(self.wall_clock_s, 3),
            "peak_rss_mb": round(self.peak_rss_bytes / 2**20, 2),
            "traced_peak_mb": round(self.traced_peak_bytes / 2**20, 3),
            "param_mb": round(self.param_bytes / 2**20, 3),
            "optimizer_state_mb": round(self.optimizer_state_bytes / 2**20, 3),
        }


class resource_meter:
    """Context manager measuring the enclosed block only."""

    def __init__(self) -> None:
        self.report = ResourceReport()

    def __enter__(self) -> "resource_meter":
        if tracemalloc.is_tracing():
            tracemalloc.reset_peak()
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc_info) -> None:
        self.report.wall_clock_s = time.perf_counter() - self._start
        self.report.peak_rss_bytes = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
        if tracemalloc.is_tracing():
            _, peak = tracemalloc.get_traced_memory()
            self.report.traced_peak_bytes = peak
