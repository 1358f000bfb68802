"""On-disk cache of partitions.

One file per (format version, n, canonical pattern set).  The file is a
magic line, a JSON header line and the raw little-endian int32 label array.
Writes go to a temporary file in the same directory and are renamed into
place, so concurrent writers never leave a torn entry.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from math import factorial
from pathlib import Path

import numpy as np

from .engine import ClassPartition
from .permcore import PatternSet

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
MAGIC = b"PERMQ-PARTITION\n"
ENV_VAR = "PERMQ_CACHE"


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "permq"


def cache_path(cache_dir: str | os.PathLike, n: int, patterns: PatternSet) -> Path:
    key = patterns.canonical().replace(",", "_")
    return Path(cache_dir) / f"partition-v{FORMAT_VERSION}-n{n}-{key}.bin"


def save_partition(cache_dir: str | os.PathLike, partition: ClassPartition) -> Path:
    path = cache_path(cache_dir, partition.n, partition.patterns)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {
        "version": FORMAT_VERSION,
        "n": partition.n,
        "patterns": partition.patterns.canonical(),
        "dtype": "<i4",
        "count": int(partition.labels.shape[0]),
    }
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(MAGIC)
            fh.write(json.dumps(header, sort_keys=True).encode() + b"\n")
            fh.write(np.ascontiguousarray(partition.labels, dtype="<i4").tobytes())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_partition(cache_dir: str | os.PathLike, n: int, patterns: PatternSet) -> ClassPartition | None:
    """The cached partition, or None if absent or unreadable."""
    path = cache_path(cache_dir, n, patterns)
    try:
        with open(path, "rb") as fh:
            if fh.readline() != MAGIC:
                log.warning("ignoring %s: bad magic", path)
                return None
            header = json.loads(fh.readline())
            labels = np.frombuffer(fh.read(), dtype="<i4")
    except FileNotFoundError:
        return None
    except (OSError, ValueError) as exc:
        log.warning("ignoring unreadable cache entry %s: %s", path, exc)
        return None
    expected = {"version": FORMAT_VERSION, "n": n, "patterns": patterns.canonical()}
    if any(header.get(k) != v for k, v in expected.items()) or labels.shape[0] != factorial(n):
        log.warning("ignoring mismatched cache entry %s", path)
        return None
    return ClassPartition(n=n, patterns=patterns, labels=labels.astype(np.int32, copy=True))
