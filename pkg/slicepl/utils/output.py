import sys
from math import floor
from typing import Dict, List, Optional, Protocol


class ProgressBarString:
    def __init__(
        self,
        progress: float = 0.0,
        start: str = "▮",
        part: str = "■",
        background: str = " ",
        end: str = "▮",
        parts: int = 10,
        bar_padding: int = 11,
    ) -> None:
        self.progress = progress
        self.start = start
        self.part = part
        self.background = background
        self.end = end
        self.parts = parts
        self.padding = bar_padding

    def __str__(self) -> str:
        parts = floor(self.progress * self.parts)
        bar = self.start + self.part * parts
        return bar.ljust(self.padding, self.background) + self.end


class StepString:
    """
    One line of progress: a state marker, a bar, the percentage and the step name, e.g.

        • ▮■■■■      ▮ 50%  order sweep
    """

    def __init__(self, progress_bar: Optional[ProgressBarString] = None) -> None:
        self.name: str = ""
        self.complete: bool = False
        self.progress_bar = progress_bar or ProgressBarString()

    @property
    def progress(self) -> float:
        return self.progress_bar.progress

    @progress.setter
    def progress(self, value: float) -> None:
        self.progress_bar.progress = value

    def reset(self) -> None:
        self.name = ""
        self.complete = False
        self.progress = 0.0

    def __str__(self) -> str:
        state = "✓" if self.complete else "•"
        percent = f"{floor(self.progress * 100)}%".rjust(5)
        return f"{state} {self.progress_bar}{percent} {self.name}"


class SupportsWrite(Protocol):
    def write(self, __s: str) -> None:
        ...


class ConsoleOutput:
    """
    Results go to `file` (stdout by default); progress lines go to `progress_file` (stderr by default) so that
    results stay byte-identical between runs.
    """

    def __init__(
        self,
        file: Optional[SupportsWrite] = None,
        progress_file: Optional[SupportsWrite] = None,
    ) -> None:
        self._step_string = StepString()
        self.file = file
        self.progress_file = progress_file

    def write(self, text: str = "", end: Optional[str] = None) -> None:
        print(str(text), end=end, file=self.file if self.file is not None else sys.stdout)

    def write_line(self, line: str = "", end: Optional[str] = "\n") -> None:
        self._finish_step()
        self.write(line, end=end)

    def _write_progress(self, text: str, end: str) -> None:
        print(text, end=end, file=self.progress_file if self.progress_file is not None else sys.stderr)

    def _finish_step(self) -> None:
        if not self._step_string.name:
            return
        self._write_progress(str(self._step_string), "\n")
        self._step_string.reset()

    def write_step_progress(self, name: str, progress: float) -> None:
        if self._step_string.name != name:
            self._finish_step()
            self._step_string.name = name
        self._step_string.progress = progress
        self._write_progress(str(self._step_string), "\r")

    def write_step_complete(self, name: str) -> None:
        if self._step_string.name != name:
            self._finish_step()
            self._step_string.name = name
        self._step_string.complete = True
        self._step_string.progress = 1.0
        self._finish_step()

    def write_table(self, rows: List[List[str]]) -> None:
        self._finish_step()

        columns: Dict[int, int] = {}
        for row in rows:
            for column, cell in enumerate(row):
                columns[column] = max(columns.get(column, -1), len(cell))
        for row in rows:
            line = "".join(cell.ljust(columns[column] + 2) for column, cell in enumerate(row))
            self.write(line.rstrip())

    def end(self) -> None:
        self._finish_step()
