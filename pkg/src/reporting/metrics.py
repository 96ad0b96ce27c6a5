"""Timing and counter collection for verification sweeps.

Sweep cells may run on worker threads, so every mutation goes through one
re-entrant lock. Metrics are diagnostic only and never reach exported
reports.
"""

import threading
import time
from collections import defaultdict, deque
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import wraps
from typing import Any, ParamSpec, TypeVar

P = ParamSpec("P")
R = TypeVar("R")


@dataclass
class TimingMetric:
    """Container for timing measurements."""

    operation: str
    duration: float
    timestamp: float
    success: bool
    tags: dict[str, str] = field(default_factory=dict)


class SweepMetrics:
    """Thread-safe collector of per-operation timings and counters."""

    def __init__(self, max_samples: int = 10000) -> None:
        """Initialize sweep metrics.

        Args:
            max_samples: Timings retained per operation
        """
        self._lock = threading.RLock()
        self._max_samples = max_samples
        self._counters: dict[str, int] = defaultdict(int)
        self._timers: dict[str, deque[TimingMetric]] = defaultdict(
            lambda: deque(maxlen=self._max_samples)
        )
        self._start_time = time.time()

    def record_timing(
        self,
        operation: str,
        duration: float,
        success: bool = True,
        tags: dict[str, str] | None = None,
    ) -> None:
        """Record timing information for one sweep operation.

        Args:
            operation: Name of the operation timed
            duration: Duration in seconds
            success: Whether the operation was successful
            tags: Optional tags, e.g. the group label
        """
        with self._lock:
            self._timers[operation].append(
                TimingMetric(
                    operation=operation,
                    duration=duration,
                    timestamp=time.time(),
                    success=success,
                    tags=tags or {},
                )
            )
            suffix = "success" if success else "failure"
            self._counters[f"{operation}_{suffix}"] += 1

    def increment(self, name: str, amount: int = 1) -> None:
        with self._lock:
            self._counters[name] += amount

    def get_counter(self, name: str) -> int:
        with self._lock:
            return self._counters.get(name, 0)

    def get_timings(self, operation: str) -> list[TimingMetric]:
        with self._lock:
            return list(self._timers.get(operation, ()))

    def get_summary(self) -> dict[str, Any]:
        """Per-operation count, total, mean and max duration plus counters."""
        with self._lock:
            operations: dict[str, dict[str, float]] = {}
            for operation, timings in sorted(self._timers.items()):
                durations = [t.duration for t in timings]
                if not durations:
                    continue
                operations[operation] = {
                    "count": len(durations),
                    "total_seconds": sum(durations),
                    "mean_seconds": sum(durations) / len(durations),
                    "max_seconds": max(durations),
                }
            return {
                "uptime_seconds": time.time() - self._start_time,
                "operations": operations,
                "counters": dict(sorted(self._counters.items())),
            }

    def reset(self) -> None:
        with self._lock:
            self._counters.clear()
            self._timers.clear()
            self._start_time = time.time()


_global_metrics: SweepMetrics | None = None
_metrics_lock = threading.Lock()


def get_sweep_metrics() -> SweepMetrics:
    """Process-wide metrics instance."""
    global _global_metrics
    with _metrics_lock:
        if _global_metrics is None:
            _global_metrics = SweepMetrics()
        return _global_metrics


def reset_sweep_metrics() -> None:
    with _metrics_lock:
        if _global_metrics is not None:
            _global_metrics.reset()


def time_operation(
    operation_name: str,
    metrics: SweepMetrics | None = None,
    tags: dict[str, str] | None = None,
) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Decorator recording the wall time of each call.

    Args:
        operation_name: Name of the operation being timed
        metrics: Collector to record into; the process-wide one by default
        tags: Context stored with every timing, e.g. the parameter triple

    Returns:
        Decorator function
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            start_time = time.perf_counter()
            success = True
            try:
                return func(*args, **kwargs)
            except Exception:
                success = False
                raise
            finally:
                duration = time.perf_counter() - start_time
                (metrics or get_sweep_metrics()).record_timing(
                    operation_name, duration, success, tags=tags
                )

        return wrapper

    return decorator
