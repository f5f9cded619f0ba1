"""Approximate betweenness scores and their dynamic maintenance.

A score state holds r sampled (pair, search, path) triples; each node's
score is the fraction of sampled paths it is internal to. The static runner
draws the samples once. The update entry points keep the samples valid
across batches of edge events:

* ``ia`` / ``iaw`` (incremental, unweighted/weighted): only insertions and
  weight decreases are allowed. A sample's path is replaced exactly when the
  target's distance or path count changed, which provably preserves the
  per-iteration sampling distribution. The caller is responsible for only
  using these modes when the vertex diameter cannot grow.
* ``dad`` / ``dadw`` (fully dynamic, any direction): paths are replaced
  unconditionally whenever the batch contains a deletion or weight increase
  (distance and count alone cannot certify that the path set survived a
  deletion); the diameter bound is recomputed from scratch and new samples
  are drawn, with score renormalization, whenever the required sample count
  grows.
* ``da`` / ``daw`` (combined, undirected only): like dad/dadw, but every
  sample search doubles as a per-component diameter estimator, shared vis
  counters reveal components no sample covers, and auxiliary estimator-only
  searches are maintained for those, so the bound refresh costs no extra
  full searches.

Per-sample updates are independent given split random streams (stream
coordinates are (seed, domain, [round,] index)), so identical inputs give
identical states no matter how iterations are scheduled. Reference
semantics, used here, are sequential in sample order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynsssp import DynSSSP, VisCounters, local_vd_estimate, update_sssp
from .errors import DeletionInIncrementalMode, InvalidParams
from .exact import compute_extended_sssp
from .graph import DELETE, INF, INSERT, dist_lt
from .rng import stream
from .sampling import SampledPath, sample_pair, sample_path, sample_size
from .vdbounds import vd_upper_bound

MODES = ("ia", "iaw", "dad", "dadw", "da", "daw")

_SAMPLE_DOMAIN = 1
_RESAMPLE_DOMAIN = 2


@dataclass
class SampleRecord:
    s: int
    t: int
    sssp: DynSSSP | None
    path: SampledPath


@dataclass
class BCState:
    """Scores plus everything needed to keep them valid under updates."""

    n: int
    mode: str
    params: object
    scores: list[float]
    r: int
    samples: list[SampleRecord]
    aux_sources: list[DynSSSP] = field(default_factory=list)
    vis: VisCounters | None = None
    vd_bound: float = 1.0
    round: int = 0


def scores(state):
    """Read-only snapshot of the current per-node scores."""
    return list(state.scores)


def recount_scores(state):
    """Recompute scores from the stored samples (the drift oracle)."""
    counts = [0] * state.n
    for rec in state.samples:
        if not rec.path.empty:
            for v in rec.path.internal:
                counts[v] += 1
    r = state.r
    return [c / r for c in counts]


def _draw_sample(g, params, idx, keep_state, track_vd, vis, truncate):
    rng = stream(params.seed, _SAMPLE_DOMAIN, idx)
    s, t = sample_pair(g.n, rng)
    if keep_state:
        sssp = DynSSSP.initial(g, s, track_vd=track_vd, vis=vis)
    else:
        sssp = compute_extended_sssp(g, s, stop_at=t if truncate else None)
    path = sample_path(g, sssp, t, rng)
    return SampleRecord(s, t, sssp if keep_state else None, path)


def approximate_bc(g, params, truncate=True):
    """Static sampling approximation of betweenness.

    Searches stop at the sampled target by default, which is the cheap
    variant used for from-scratch recomputation; pass truncate=False to keep
    full searches. Scores are identical either way for a given seed.
    """
    if g.n < 2:
        raise InvalidParams("need at least two nodes")
    bound = vd_upper_bound(g).value
    r = sample_size(bound, params)
    state = BCState(g.n, "static", params, [0.0] * g.n, r, [], vd_bound=bound)
    inv = 1.0 / r
    add = state.scores
    for i in range(r):
        rec = _draw_sample(g, params, i, False, False, None, truncate)
        state.samples.append(rec)
        for v in rec.path.internal:
            add[v] += inv
    return state


def init_bc(g, params, mode, vd_bound=None):
    """Initialize a dynamic score state in the given mode.

    ``vd_bound`` overrides the computed bound (useful for experiments that
    need two modes to agree on the sample count). For da/daw, components not
    reached by any sample search get an auxiliary estimator-only search so
    that every component contributes to the diameter bound.
    """
    if mode not in MODES:
        raise InvalidParams(f"unknown mode {mode!r}")
    if g.n < 2:
        raise InvalidParams("need at least two nodes")
    weighted_mode = mode in ("iaw", "dadw", "daw")
    if weighted_mode != g.weighted:
        raise InvalidParams(f"mode {mode!r} does not match graph weighting")
    if mode in ("da", "daw") and g.directed:
        raise InvalidParams(f"mode {mode!r} needs an undirected graph")

    combined = mode in ("da", "daw")
    if vd_bound is None:
        vd_bound = vd_upper_bound(g).value
    r = sample_size(vd_bound, params)
    vis = VisCounters.zeros(g.n) if combined else None
    state = BCState(
        g.n, mode, params, [0.0] * g.n, r, [], vis=vis, vd_bound=vd_bound
    )
    inv = 1.0 / r
    add = state.scores
    for i in range(r):
        rec = _draw_sample(g, params, i, True, combined, vis, False)
        state.samples.append(rec)
        for v in rec.path.internal:
            add[v] += inv
    if combined:
        for v in range(g.n):
            if vis.vis[v] == 0:
                state.aux_sources.append(
                    DynSSSP.initial(g, v, track_vd=True, vis=vis)
                )
    return state


def _require_mode(state, allowed):
    if state.mode not in allowed:
        raise InvalidParams(
            f"state mode {state.mode!r} not usable here (need one of {allowed})"
        )


def _is_incremental(events):
    """True when the batch holds only insertions and weight decreases."""
    for ev in events:
        if ev.op == DELETE:
            return False
        if ev.op == INSERT:
            continue
        if ev.old_weight is None or ev.weight > ev.old_weight:
            return False
    return True


def _replace_path(g, state, i, rng):
    rec = state.samples[i]
    inv = 1.0 / state.r
    add = state.scores
    if not rec.path.empty:
        for v in rec.path.internal:
            add[v] -= inv
    rec.path = sample_path(g, rec.sssp, rec.t, rng)
    if not rec.path.empty:
        for v in rec.path.internal:
            add[v] += inv


def _grow_samples(g, state, r_new):
    """Raise the sample count to r_new: rescale the existing mass and credit
    the fresh samples at the new rate. Their searches join the state so
    later updates maintain them too."""
    combined = state.mode in ("da", "daw")
    factor = state.r / r_new
    state.scores = [x * factor for x in state.scores]
    inv = 1.0 / r_new
    add = state.scores
    for idx in range(state.r, r_new):
        rec = _draw_sample(
            g, state.params, idx, True, combined, state.vis, False
        )
        state.samples.append(rec)
        for v in rec.path.internal:
            add[v] += inv
    state.r = r_new


def update_incremental(g, state, events):
    """ia/iaw update. Rejects deletions and weight increases; a sample is
    resampled exactly when its target's distance dropped or its path count
    changed."""
    _require_mode(state, ("ia", "iaw"))
    for ev in events:
        if ev.op == DELETE:
            raise DeletionInIncrementalMode("batch contains a deletion")
        if ev.op != INSERT and ev.old_weight is not None and ev.weight > ev.old_weight:
            raise DeletionInIncrementalMode("batch contains a weight increase")
    params = state.params
    for i, rec in enumerate(state.samples):
        st = rec.sssp
        t = rec.t
        d_old = st.d[t]
        sig_old = st.sigma[t]
        update_sssp(g, st, events, None)
        if dist_lt(st.d[t], d_old) or st.sigma[t] != sig_old:
            _replace_path(
                g, state, i, stream(params.seed, _RESAMPLE_DOMAIN, state.round, i)
            )
    state.round += 1
    return state


def update_fully_dynamic(g, state, events):
    """dad/dadw update: per-sample search update with unconditional path
    replacement (unless the batch is purely incremental, where the
    conditional rule is provably safe), then a from-scratch diameter bound
    and, if the required sample count grew, new samples plus rescaling."""
    _require_mode(state, ("dad", "dadw"))
    params = state.params
    incremental = _is_incremental(events)
    for i, rec in enumerate(state.samples):
        st = rec.sssp
        t = rec.t
        d_old = st.d[t]
        sig_old = st.sigma[t]
        update_sssp(g, st, events, None)
        if (
            not incremental
            or dist_lt(st.d[t], d_old)
            or st.sigma[t] != sig_old
        ):
            _replace_path(
                g, state, i, stream(params.seed, _RESAMPLE_DOMAIN, state.round, i)
            )
    state.vd_bound = vd_upper_bound(g).value
    r_new = sample_size(state.vd_bound, params)
    if r_new > state.r:  # extra samples only ever tighten the estimate
        _grow_samples(g, state, r_new)
    state.round += 1
    return state


def update_combined(g, state, events):
    """da/daw update: sample searches double as diameter estimators, the
    auxiliary estimator searches are refreshed, components left uncovered
    get new auxiliary searches, and the bound is the max over all of them."""
    _require_mode(state, ("da", "daw"))
    params = state.params
    vis = state.vis
    vis.U.clear()
    incremental = _is_incremental(events)
    for i, rec in enumerate(state.samples):
        st = rec.sssp
        t = rec.t
        d_old = st.d[t]
        sig_old = st.sigma[t]
        update_sssp(g, st, events, vis)
        if (
            not incremental
            or dist_lt(st.d[t], d_old)
            or st.sigma[t] != sig_old
        ):
            _replace_path(
                g, state, i, stream(params.seed, _RESAMPLE_DOMAIN, state.round, i)
            )
    for aux in state.aux_sources:
        update_sssp(g, aux, events, vis)
    for v in sorted(set(vis.U)):
        if vis.vis[v] == 0:
            state.aux_sources.append(DynSSSP.initial(g, v, track_vd=True, vis=vis))
    vis.U.clear()
    bound = 1.0
    for rec in state.samples:
        est = local_vd_estimate(g, rec.sssp)
        if est > bound:
            bound = est
    for aux in state.aux_sources:
        est = local_vd_estimate(g, aux)
        if est > bound:
            bound = est
    state.vd_bound = bound
    r_new = sample_size(bound, params)
    if r_new > state.r:
        _grow_samples(g, state, r_new)
    state.round += 1
    return state


def update_bc(g, state, events):
    """Dispatch to the mode's update entry point."""
    if state.mode in ("ia", "iaw"):
        return update_incremental(g, state, events)
    if state.mode in ("dad", "dadw"):
        return update_fully_dynamic(g, state, events)
    if state.mode in ("da", "daw"):
        return update_combined(g, state, events)
    raise InvalidParams(f"state mode {state.mode!r} has no update")
