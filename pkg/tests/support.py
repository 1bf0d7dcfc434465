"""Shared sampling helpers for the kernel tests."""

from __future__ import annotations

import math
import random

from polyberg import DomainPoint, KernelParams


def random_point(rng: random.Random, params: KernelParams,
                 fill: float = 0.95) -> DomainPoint:
    """A valid point with fiber norm a random fraction (< fill) of its bound."""
    z = [complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
         for _ in range(params.n)]
    bound = math.exp(-params.mu * sum(abs(c) ** 2 for c in z))
    direction = [complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
                 for _ in range(params.m)]
    norm = math.sqrt(sum(abs(c) ** 2 for c in direction))
    if norm == 0.0:
        direction[0], norm = 1.0 + 0j, 1.0
    scale = math.sqrt(rng.uniform(0.0, fill) * bound) / norm
    return DomainPoint(params, z, [scale * c for c in direction])


def random_pair(rng: random.Random, params: KernelParams,
                fill: float = 0.95) -> tuple[DomainPoint, DomainPoint]:
    return random_point(rng, params, fill), random_point(rng, params, fill)
