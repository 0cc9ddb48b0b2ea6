from typing import Callable

from loguru import logger

ProgressCallback = Callable[[float], None]
progress_noop: ProgressCallback = lambda p: None  # noqa: E731


class SweepProgress:
    """
    Reports the fraction of finished radii of a sweep. A callback which raises is logged once and then ignored.
    """

    def __init__(self, total: int, on_progress: ProgressCallback) -> None:
        self.total = max(total, 1)
        self.finished = 0
        self.on_progress = on_progress
        self._failed = False

    def finish(self, count: int = 1) -> None:
        self.finished = min(self.total, self.finished + count)
        if self._failed:
            return
        try:
            self.on_progress(self.finished / self.total)
        except Exception as exc:
            logger.warning(f"on_progress callback threw error: {exc}")
            self._failed = True
