"""Reproducible randomness for the synthetic simulator.

The generator is pinned so streams are byte-identical across runs,
platforms, and reimplementations in other languages:

* Raw 64-bit words come from Philox-4x64-10 (the counter-based block
  cipher underlying ``numpy.random.Philox``), keyed by the pair
  ``(seed, stream_id)`` with the counter starting at zero.
* Uniforms in [0, 1) take the top 53 bits: ``u = (word >> 11) * 2**-53``.
* Gaussians use the Box-Muller transform on consecutive uniform pairs:
  ``z0 = sqrt(-2 ln u1) cos(2 pi u2)``, ``z1 = sqrt(-2 ln u1) sin(2 pi u2)``
  (with u1 == 0 replaced by 2**-53).

``tests/data/rng_vectors.json`` freezes reference outputs for all three
stages; any reimplementation can be checked against them.
"""

from __future__ import annotations

import numpy as np

# Fixed stream ids; one independent Philox key per purpose.
HEAD_NOISE = 0
BODY_NOISE = 1
HEAD_DROPOUT = 2
BODY_DROPOUT = 3
HEAD_CONF = 4
BODY_CONF = 5

_U53 = 2.0 ** -53


def raw_words(seed: int, stream: int, count: int) -> np.ndarray:
    """First ``count`` raw 64-bit words of the (seed, stream) Philox stream."""
    bg = np.random.Philox(key=np.array([seed, stream], dtype=np.uint64))
    return bg.random_raw(count)


def uniforms(seed: int, stream: int, count: int) -> np.ndarray:
    """Uniform [0, 1) doubles from the top 53 bits of each raw word."""
    return (raw_words(seed, stream, count) >> np.uint64(11)) * _U53


def gaussians(seed: int, stream: int, count: int) -> np.ndarray:
    """Standard normal draws via Box-Muller on consecutive uniform pairs."""
    pairs = (count + 1) // 2
    u = uniforms(seed, stream, 2 * pairs)
    u1 = np.maximum(u[0::2], _U53)
    u2 = u[1::2]
    r = np.sqrt(-2.0 * np.log(u1))
    theta = 2.0 * np.pi * u2
    z = np.empty(2 * pairs)
    z[0::2] = r * np.cos(theta)
    z[1::2] = r * np.sin(theta)
    return z[:count]
