"""Stateless counter-based random draws for distributed reproducibility.

Every draw is a pure function of ``(master_seed, key)`` where the key is a
tuple of non-negative integers naming the draw (e.g. which neuron, which
synapse slot, which retry). There is no sequential generator state, so any
worker can evaluate any draw in any order and obtain the same value.

Construction (frozen -- changing it invalidates recorded spike files):
the 64-bit state starts as ``mix(seed)`` and absorbs each key component as
``state = mix(state + GOLDEN + component)``, with ``mix`` the splitmix64
finalizer. A uniform in [0, 1) takes the top 53 bits of the final state.

``hash_key``/``stateless_uniform`` are the scalar forms; the ``*_vec``
variants evaluate whole key columns at once on uint64 numpy arrays and
return bit-identical values.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

# 2**-53, the spacing that maps 53 random bits onto [0, 1)
_INV53 = 1.0 / (1 << 53)


def _mix(z: int) -> int:
    """splitmix64 finalizer on a 64-bit integer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def hash_key(seed: int, key: tuple) -> int:
    """Return the 64-bit hash of (seed, key); pure and order-sensitive."""
    h = _mix(seed)
    for k in key:
        h = _mix((h + GOLDEN + (int(k) & MASK64)) & MASK64)
    return h


def stateless_uniform(seed: int, key: tuple) -> float:
    """Uniform draw in [0, 1) determined entirely by (seed, key)."""
    return (hash_key(seed, key) >> 11) * _INV53


def stateless_randint(seed: int, key: tuple, n: int) -> int:
    """Integer draw in [0, n) determined entirely by (seed, key)."""
    return int(stateless_uniform(seed, key) * n)


def _mix_vec(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def hash_key_vec(seed: int, columns) -> np.ndarray:
    """Vectorized ``hash_key``: each column is a scalar or uint64-castable
    array; columns broadcast together. Returns uint64 hashes."""
    with np.errstate(over="ignore"):
        h = _mix_vec(np.uint64(seed & MASK64))
        for col in columns:
            c = np.asarray(col).astype(np.uint64, copy=False)
            h = _mix_vec(h + np.uint64(GOLDEN) + c)
    return h


def stateless_uniform_vec(seed: int, columns) -> np.ndarray:
    """Vectorized ``stateless_uniform``; bit-identical to the scalar form."""
    return (hash_key_vec(seed, columns) >> np.uint64(11)) * _INV53
