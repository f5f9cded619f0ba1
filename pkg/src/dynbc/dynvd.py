"""Fully-dynamic vertex-diameter upper bound for undirected graphs.

One tracked shortest-path state per connected component. Shared vis counters
detect merges (a source visited by another source's updated search becomes
redundant) and splits (nodes whose count drops to zero seed new sources), so
after every update round the tracker again holds exactly one source per
component and every node is counted once.
"""

from __future__ import annotations

from .dynsssp import DynSSSP, VisCounters, local_vd_estimate, update_sssp
from .errors import InvalidParams
from .graph import INF


class VDTracker:
    __slots__ = ("sources", "vis", "bound")

    def __init__(self, sources, vis, bound):
        self.sources = sources
        self.vis = vis
        self.bound = bound

    @property
    def n_components(self):
        return len(self.sources)


def init_vd_tracker(g):
    """Scan nodes in index order, rooting a tracked search at every node not
    yet covered; the bound is the max of the per-component estimates."""
    if g.directed:
        raise InvalidParams("the tracker handles undirected graphs")
    vis = VisCounters.zeros(g.n)
    sources = []
    for v in range(g.n):
        if vis.vis[v] == 0:
            sources.append(DynSSSP.initial(g, v, track_vd=True, vis=vis))
    bound = max((local_vd_estimate(g, st) for st in sources), default=1.0)
    return VDTracker(sources, vis, bound)


def update_vd_tracker(g, tracker, events):
    """Refresh the tracker after a batch already applied to g.

    Sources whose own node was annexed by an earlier source's update are
    dropped; a dropped source first hands back every node its stale search
    still claims, so nodes left uncovered surface in U with count zero.
    Draining U (ascending node index) then roots fresh sources for split-off
    components. Returns the new bound.
    """
    vis = tracker.vis
    vis.U.clear()
    kept = []
    for st in tracker.sources:
        if vis.vis[st.source] > 1:
            d = st.d
            counters = vis.vis
            for v in range(g.n):
                if d[v] != INF:
                    counters[v] -= 1
                    if counters[v] == 0:
                        vis.U.append(v)
        else:
            update_sssp(g, st, events, vis)
            kept.append(st)
    for v in sorted(set(vis.U)):
        if vis.vis[v] == 0:
            kept.append(DynSSSP.initial(g, v, track_vd=True, vis=vis))
    vis.U.clear()
    # safety net: the mechanics above already restore single coverage
    counters = vis.vis
    for v in range(g.n):
        if counters[v] > 1:
            counters[v] = 1
    tracker.sources = kept
    tracker.bound = max((local_vd_estimate(g, st) for st in kept), default=1.0)
    return tracker.bound
