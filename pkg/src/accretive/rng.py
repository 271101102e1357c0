"""Seeded, splittable random streams.

Streams are Philox (counter-based) generators keyed by a ``SeedSequence``
whose spawn key encodes where in a computation the stream is used, so a fuzz
shard can rebuild any trial's stream without replaying earlier ones.
"""

from __future__ import annotations

import zlib

import numpy as np


def make_rng(seed, *key: int) -> np.random.Generator:
    """Return a generator for ``seed`` and an optional integer path ``key``.

    A ``Generator`` passed as ``seed`` is returned unchanged (``key`` must be
    empty in that case).
    """
    if isinstance(seed, np.random.Generator):
        if key:
            raise ValueError("cannot derive a keyed stream from a Generator")
        return seed
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed: int, *key: int) -> int:
    """A 32-bit seed for the stream at ``key``, stable across processes."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint32)[0])


def name_key(name: str) -> int:
    return zlib.crc32(name.encode())


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
