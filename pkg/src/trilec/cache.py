"""On-disk cache of enumerated triangulation sets.

One JSON file per vertex count.  The directory comes from ``TRI_CACHE_DIR``
(default ``.tri_cache`` in the working directory).  Loading re-validates every
member and recomputes its code; anything inconsistent is reported and
recomputed.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Optional, Union

from .enumeration import KNOWN_COUNTS, TriangulationSet, enumerate_triangulations
from .errors import TrilecError
from .plane import canonical_triangulation_code, from_rotation_system

log = logging.getLogger(__name__)

ENV_VAR = "TRI_CACHE_DIR"
DEFAULT_DIR = ".tri_cache"
FORMAT_TAG = "trilec-triangulations"
VERSION = 1


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


class TriangulationCache:
    """Cache keyed by n.  With ``create=False`` a missing directory means memory only."""

    def __init__(self, directory: Union[str, Path, None] = None, create: Optional[bool] = None):
        if directory is None:
            directory = default_cache_dir()
            if create is None:
                create = ENV_VAR not in os.environ
        self.directory = Path(directory)
        self.create = bool(create)
        self._memory: dict[int, TriangulationSet] = {}

    def path(self, n: int) -> Path:
        return self.directory / f"triangulations_n{n:02d}.json"

    @property
    def writable(self) -> bool:
        return self.directory.is_dir() or self.create

    def store(self, s: TriangulationSet) -> None:
        self._memory[s.n] = s
        if not self.writable:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {
            "format": FORMAT_TAG,
            "version": VERSION,
            "n": s.n,
            "count": len(s),
            "members": [
                {"code": list(code), "rotations": [list(r) for r in t.rotations]}
                for code, t in sorted(s.members.items())
            ],
        }
        tmp = self.path(s.n).with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, separators=(",", ":")), encoding="utf-8")
        tmp.replace(self.path(s.n))

    def load(self, n: int) -> Optional[TriangulationSet]:
        """Cached set for n, or None when absent or invalid."""
        if n in self._memory:
            return self._memory[n]
        p = self.path(n)
        if not p.is_file():
            return None
        try:
            s = self._read(p, n)
        except (ValueError, KeyError, TypeError, TrilecError) as exc:
            log.warning("ignoring corrupt cache file %s: %s", p, exc)
            return None
        self._memory[n] = s
        return s

    @staticmethod
    def _read(p: Path, n: int) -> TriangulationSet:
        data = json.loads(p.read_text(encoding="utf-8"))
        if data.get("format") != FORMAT_TAG or data.get("version") != VERSION:
            raise ValueError("unknown format or version")
        if data["n"] != n or data["count"] != len(data["members"]):
            raise ValueError("header does not match contents")
        s = TriangulationSet(n)
        for m in data["members"]:
            t = from_rotation_system(m["rotations"])
            code = canonical_triangulation_code(t)
            if t.order != n or list(code) != m["code"] or code in s.members:
                raise ValueError("member fails validation")
            s.members[code] = t
        if n in KNOWN_COUNTS and len(s) != KNOWN_COUNTS[n]:
            raise ValueError(f"{len(s)} members, expected {KNOWN_COUNTS[n]}")
        return s

    def get(self, n: int) -> TriangulationSet:
        """Load from cache or enumerate (and store)."""
        s = self.load(n)
        if s is None:
            s = enumerate_triangulations(n)
            self.store(s)
        return s
