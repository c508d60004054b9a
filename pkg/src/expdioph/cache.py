"""Append-only JSON-lines result cache.

Each line holds ``{"digest", "request", "records"}``. The digest is only an
index: a hit also requires the stored request to equal the new one, so a
digest collision degrades to a miss rather than a wrong answer.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Callable, Optional, Union

log = logging.getLogger(__name__)

CACHE_ENV = "EXPDIOPH_CACHE"


def canonical(request: dict) -> str:
    return json.dumps(request, sort_keys=True, separators=(",", ":"))


def request_digest(request: dict) -> str:
    return hashlib.sha256(canonical(request).encode()).hexdigest()


class ResultCache:
    def __init__(self, path: Union[str, Path], digest: Callable[[dict], str] = request_digest):
        self.path = Path(path)
        self.digest = digest
        self.disabled = False

    def check_writable(self) -> None:
        """Raise OSError if the cache file cannot be appended to."""
        if self.path.is_dir():
            raise IsADirectoryError(f"cache path {self.path} is a directory")
        parent = self.path.parent if str(self.path.parent) else Path(".")
        if self.path.exists():
            if not os.access(self.path, os.W_OK):
                raise PermissionError(f"cache file {self.path} is not writable")
        elif not parent.is_dir() or not os.access(parent, os.W_OK):
            raise PermissionError(f"cannot create cache file in {parent}")

    def _entries(self):
        if not self.path.exists():
            return []
        entries = []
        with self.path.open() as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                    if not isinstance(entry, dict) or not isinstance(entry.get("records"), list):
                        raise ValueError("entry lacks a record list")
                    if "digest" not in entry or "request" not in entry:
                        raise ValueError("entry lacks digest or request")
                except ValueError as exc:
                    raise ValueError(f"{self.path}:{lineno}: {exc}") from exc
                entries.append(entry)
        return entries

    def lookup(self, request: dict) -> Optional[list[dict]]:
        if self.disabled:
            return None
        try:
            entries = self._entries()
        except ValueError as exc:
            log.warning("ignoring corrupt cache: %s", exc)
            self.disabled = True
            return None
        key = self.digest(request)
        for entry in entries:
            if entry["digest"] == key and entry["request"] == request:
                return [dict(rec, cached=True) for rec in entry["records"]]
        return None

    def store(self, request: dict, records: list[dict]) -> None:
        if self.disabled:
            return
        line = json.dumps({"digest": self.digest(request), "request": request, "records": records},
                          sort_keys=True, separators=(",", ":"))
        with self.path.open("a") as fh:
            fh.write(line + "\n")
