"""Shortest-path sampling primitives.

A sample is one uniformly random ordered node pair plus one shortest path
between them, drawn uniformly over that pair's shortest paths by walking
backward from the target and picking each predecessor proportionally to its
path count. Combined, every shortest path p between s and t is drawn with
probability 1 / (n(n-1) sigma_st) per iteration, which is what the error
guarantee of the score estimator rests on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InconsistentState, InvalidParams
from .exact import predecessors
from .graph import INF


@dataclass(frozen=True)
class SamplingParams:
    """Accuracy knobs: with the derived sample count, every score is within
    epsilon of exact with probability at least 1 - delta."""

    epsilon: float
    delta: float
    c: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise InvalidParams("epsilon must lie in (0, 1)")
        if not 0.0 < self.delta < 1.0:
            raise InvalidParams("delta must lie in (0, 1)")
        if not self.c > 0.0:
            raise InvalidParams("c must be positive")


@dataclass
class SampledPath:
    """One sampled pair with the internal nodes of its path in source-to-
    target order; ``empty`` marks a pair with no connecting path."""

    s: int
    t: int
    internal: list[int] = field(default_factory=list)
    empty: bool = False


def sample_size(vd_bound, params):
    """Samples required for the (epsilon, delta) guarantee.

    ceil((c/eps^2) * (floor(log2(vd-2)) + 1 + ln(1/delta))), where the log
    argument is rounded up to an integer first and clamped to at least 1 so
    tiny diameters stay defined. The floor-log uses integer bit length, so
    no float fuzz can shift the result across a power of two.
    """
    if vd_bound < 1:
        raise InvalidParams("vertex-diameter bound must be at least 1")
    k = max(math.ceil(vd_bound) - 2, 1)
    log_term = k.bit_length() - 1
    raw = (params.c / (params.epsilon * params.epsilon)) * (
        log_term + 1 + math.log(1.0 / params.delta)
    )
    return max(1, math.ceil(raw))


def sample_pair(n, rng):
    """Uniform ordered pair (s, t) with s != t."""
    if n < 2:
        raise InvalidParams("need at least two nodes to sample a pair")
    s = rng.randrange(n)
    t = rng.randrange(n - 1)
    if t >= s:
        t += 1
    return s, t


def sample_path(g, state, t, rng):
    """One shortest path from state.source to t, uniform over that pair's
    shortest paths. Unreachable targets yield an empty-marked path."""
    s = state.source
    if s == t:
        raise InvalidParams("source and target coincide")
    if state.d[t] == INF:
        return SampledPath(s, t, [], True)
    sigma = state.sigma
    rev = []
    v = t
    while v != s:
        preds = predecessors(g, state, v)
        pick = rng.randrange(sigma[v])
        acc = 0
        chosen = -1
        for u in preds:
            acc += sigma[u]
            if pick < acc:
                chosen = u
                break
        if chosen < 0:
            raise InconsistentState(
                f"path counts at node {v} disagree with its predecessors"
            )
        v = chosen
        if v != s:
            rev.append(v)
    rev.reverse()
    return SampledPath(s, t, rev, False)
