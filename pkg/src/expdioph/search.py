"""Brute-force oracle: exhaust a finite (x, y) box for base1**x + base2**y = z**2.

Each x is one row of work. Rows run serially or across a process pool, and
the merged output is sorted, so results do not depend on the worker count.
Progress can be persisted to a checkpoint file after every finished row.
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Optional, Union

from .model import EquationInstance, SolutionTriple, verify_triple
from .ntheory import perfect_square_root
from .records import _i, instance_fields, parse_instance

CHECKPOINT_VERSION = 1

# A square is a square residue modulo every m; 64 and 63 reject most non-squares.
_SQUARES_MOD_64 = frozenset(r * r % 64 for r in range(64))
_SQUARES_MOD_63 = frozenset(r * r % 63 for r in range(63))


def may_be_square(s: int) -> bool:
    return s & 63 in _SQUARES_MOD_64 and s % 63 in _SQUARES_MOD_63


@dataclass(frozen=True)
class SearchBox:
    x_max: int
    y_max: int

    def __post_init__(self):
        if self.x_max < 0 or self.y_max < 0:
            raise ValueError(f"box bounds must be non-negative, got {self.x_max}, {self.y_max}")

    def contains(self, t) -> bool:
        return t[0] <= self.x_max and t[1] <= self.y_max

    def largest_sum(self, inst: EquationInstance) -> int:
        a, b = inst.bases
        return a ** self.x_max + b ** self.y_max


class CheckpointError(ValueError):
    pass


@dataclass(frozen=True)
class Checkpoint:
    instance: EquationInstance
    box: SearchBox
    completed_rows: frozenset = frozenset()
    found: tuple = ()

    @property
    def remaining_rows(self) -> list[int]:
        return [x for x in range(self.box.x_max + 1) if x not in self.completed_rows]

    @property
    def done(self) -> bool:
        return not self.remaining_rows

    def to_json(self) -> dict:
        return {
            "v": CHECKPOINT_VERSION,
            "instance": instance_fields(self.instance),
            "box": {"x_max": self.box.x_max, "y_max": self.box.y_max},
            "completed_rows": sorted(self.completed_rows),
            "found": [[str(c) for c in t] for t in sorted(self.found)],
        }

    @classmethod
    def from_json(cls, doc) -> "Checkpoint":
        if not isinstance(doc, dict) or doc.get("v") != CHECKPOINT_VERSION:
            raise CheckpointError("not a version-1 checkpoint document")
        try:
            inst = parse_instance(doc["instance"])
            box = SearchBox(_i(doc["box"]["x_max"]), _i(doc["box"]["y_max"]))
            rows = frozenset(_i(x) for x in doc["completed_rows"])
            found = tuple(SolutionTriple(*map(_i, t)) for t in doc["found"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CheckpointError(f"corrupt checkpoint: {exc}") from exc
        cp = cls(inst, box, rows, found)
        cp.check()
        return cp

    def check(self) -> None:
        if any(not 0 <= x <= self.box.x_max for x in self.completed_rows):
            raise CheckpointError("checkpoint has rows outside its box")
        if len(set(self.found)) != len(self.found):
            raise CheckpointError("checkpoint lists a solution twice")
        for t in self.found:
            if t.x not in self.completed_rows or not self.box.contains(t):
                raise CheckpointError(f"checkpoint solution {tuple(t)} lies outside its completed rows")
            if not verify_triple(self.instance, t):
                raise CheckpointError(f"checkpoint solution {tuple(t)} fails substitution")


def save_checkpoint(cp: Checkpoint, path: Union[str, Path]) -> None:
    """Write atomically: a temp file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(cp.to_json(), fh, sort_keys=True)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_checkpoint(path: Union[str, Path]) -> Checkpoint:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CheckpointError(f"corrupt checkpoint {path}: {exc}") from exc
    return Checkpoint.from_json(doc)


def search_row(a: int, b: int, x: int, y_max: int, use_filter: bool = True) -> list[SolutionTriple]:
    ax = a ** x
    by = 1
    found = []
    for y in range(y_max + 1):
        s = ax + by
        if not use_filter or may_be_square(s):
            z = perfect_square_root(s)
            if z is not None:
                found.append(SolutionTriple(x, y, z))
        by *= b
    return found


def _row_task(args):
    return search_row(*args)


def _resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def _run_rows(inst: EquationInstance, box: SearchBox, rows: list[int], workers: int,
              use_filter: bool) -> Iterable[tuple[int, list[SolutionTriple]]]:
    a, b = inst.bases
    tasks = [(a, b, x, box.y_max, use_filter) for x in rows]
    if workers == 1 or len(rows) <= 1:
        for x, task in zip(rows, tasks):
            yield x, search_row(*task)
        return
    with ProcessPoolExecutor(max_workers=min(workers, len(rows))) as pool:
        yield from zip(rows, pool.map(_row_task, tasks))


def advance(cp: Checkpoint, workers: Optional[int] = 1, max_rows: Optional[int] = None,
            checkpoint_path: Union[str, Path, None] = None, use_filter: bool = True) -> Checkpoint:
    """Search up to ``max_rows`` unfinished rows of ``cp`` and return the new state.

    When ``checkpoint_path`` is given the state is saved after every row.
    """
    workers = _resolve_workers(workers)
    rows = cp.remaining_rows
    if max_rows is not None:
        rows = rows[:max_rows]
    completed, found = set(cp.completed_rows), list(cp.found)
    for x, row in _run_rows(cp.instance, cp.box, rows, workers, use_filter):
        completed.add(x)
        found.extend(row)
        if checkpoint_path is not None:
            save_checkpoint(replace(cp, completed_rows=frozenset(completed), found=tuple(sorted(found))),
                            checkpoint_path)
    return replace(cp, completed_rows=frozenset(completed), found=tuple(sorted(found)))


def enumerate_solutions(inst: EquationInstance, box: SearchBox, workers: Optional[int] = 1,
                        checkpoint_path: Union[str, Path, None] = None,
                        use_filter: bool = True) -> list[SolutionTriple]:
    """Every (x, y, z) in ``box`` with base1**x + base2**y == z**2, sorted."""
    cp = advance(Checkpoint(inst, box), workers, checkpoint_path=checkpoint_path, use_filter=use_filter)
    return list(cp.found)


def resume(cp: Checkpoint, workers: Optional[int] = 1, inst: Optional[EquationInstance] = None,
           box: Optional[SearchBox] = None, checkpoint_path: Union[str, Path, None] = None) -> list[SolutionTriple]:
    """Finish a partially completed search; the result equals a from-scratch run."""
    if inst is not None and inst != cp.instance:
        raise CheckpointError(f"checkpoint is for {cp.instance}, not {inst}")
    if box is not None and box != cp.box:
        raise CheckpointError(f"checkpoint box {cp.box} does not match {box}")
    cp.check()
    return list(advance(cp, workers, checkpoint_path=checkpoint_path).found)
