"""Deterministic sub-seed derivation.

Every random choice in the package flows from a single 64-bit
experiment seed.  Components derive independent streams by hashing the
master seed together with a short component label and an integer index
path (level number, attempt number, trial number, ...), so adding a
trial or retrying a level never perturbs any sibling stream.
"""

from __future__ import annotations

import hashlib
import random

_MASK = (1 << 63) - 1


def derive_seed(master: int, label: str, *path: int) -> int:
    """Hash (master, label, path) into a 63-bit sub-seed."""
    key = f"{master}:{label}:" + ",".join(str(p) for p in path)
    digest = hashlib.sha256(key.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big") & _MASK


def rng_for(master: int, label: str, *path: int) -> random.Random:
    return random.Random(derive_seed(master, label, *path))
