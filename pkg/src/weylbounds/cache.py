"""On-disk persistence for :class:`LengthCache`.

File format (JSON)::

    {"schema": "v1",
     "entries": [{"system": "A1", "weight": [2], "p": 2, "value": "2"}, ...]}

Values are decimal strings.  A missing file is an empty cache; an unreadable
file or a schema mismatch is reported and ignored.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .jantzen import LengthCache

SCHEMA = "v1"
ENV_VAR = "WEYLBOUNDS_CACHE"

log = logging.getLogger(__name__)


def default_cache_path():
    return os.environ.get(ENV_VAR) or None


def cache_load(path) -> LengthCache:
    path = Path(path)
    cache = LengthCache()
    if not path.exists():
        return cache
    try:
        doc = json.loads(path.read_text())
        if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
            log.warning("cache %s has schema %r, expected %r; starting cold", path,
                        doc.get("schema") if isinstance(doc, dict) else None, SCHEMA)
            return cache
        for e in doc["entries"]:
            cache.entries[(str(e["system"]), tuple(int(x) for x in e["weight"]), int(e["p"]))] = int(e["value"])
    except (ValueError, KeyError, TypeError) as exc:
        log.warning("cache %s is unreadable (%s); starting cold", path, exc)
        return LengthCache()
    return cache


def cache_store(cache: LengthCache, path) -> None:
    path = Path(path)
    entries = [
        {"system": s, "weight": list(w), "p": p, "value": str(v)}
        for (s, w, p), v in sorted(cache.entries.items())
    ]
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps({"schema": SCHEMA, "entries": entries}, separators=(",", ":")) + "\n")
    os.replace(tmp, path)
