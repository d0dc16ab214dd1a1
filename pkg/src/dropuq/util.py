"""Small shared helpers: seed derivation, bounded parallelism, float formatting."""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def derive_seed(root: int, label: str) -> int:
    """Derive a per-stage seed from a root seed and a stage label.

    All randomness in the package flows from one root seed through this
    function: ``sha256("{root}:{label}")`` truncated to 63 bits. Labels are
    documented at each call site (e.g. ``"train-rate:0.3"``, ``"cell:r0c001"``)
    so any stage can be re-run in isolation.
    """
    digest = hashlib.sha256(f"{root}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> list[R]:
    """Map ``fn`` over ``items``, optionally on a thread pool.

    Results are returned in input order regardless of scheduling, so callers
    stay deterministic under any ``threads`` value.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def fmt_float(x: float) -> str:
    """Shortest round-trip decimal representation of a float64."""
    return repr(float(x))


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
