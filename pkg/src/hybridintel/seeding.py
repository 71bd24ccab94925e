"""Named seed derivation.

Every source of randomness in the package draws from a seed derived from
the master seed plus a path of names (e.g. ``("learner", "random_forest",
"fold", 3)``). Derivation is a hash, so parallel and serial execution of
independent tasks see identical streams regardless of scheduling order.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(master: int, *path: object) -> int:
    """Return a 63-bit seed for the task identified by ``path``."""
    text = repr((int(master),) + tuple(str(p) for p in path))
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def rng_for(master: int, *path: object) -> np.random.Generator:
    """Generator seeded for the named task."""
    return np.random.default_rng(derive_seed(master, *path))


def stable_id_hash(value: str) -> int:
    """Order-independent 63-bit hash of an identifier (not Python's hash)."""
    digest = hashlib.sha256(value.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1
