"""Batch-dynamic single-source shortest paths with path counting.

Updates a stored distance/path-count state after a canonical batch of edge
events has already been applied to the graph, touching only the neighbourhood
of nodes whose values can actually change. The weighted routine settles
candidate distances through a priority queue; the unweighted one replaces the
queue with per-level FIFO buckets and node colors. Both can additionally
maintain shared reachability counters (``vis``) and the ingredients of a
per-component vertex-diameter estimate: the two largest distances seen from
the source and the smallest edge weight in the source's component.

Rules the update loops rely on:

* A popped candidate (w, p) is settled when the cheapest current in-edge
  path ``con(w)`` equals p; ``con(w) < p`` means the stored state never
  described the pre-batch graph and raises InconsistentState.
* When ``con(w) > p`` the node lost its known shortest path: it goes
  unreachable (distance inf, count 0) and is re-queued at con(w) so a later
  settlement can restore it; nodes that routed through it are re-queued at
  their own distance.
* Equal-distance neighbours are re-queued only when the settled node's
  distance or count actually changed, which keeps the touched region
  proportional to the affected neighbourhood instead of flooding the whole
  downstream shortest-path DAG.

One state is updated by one execution context at a time. Distinct source
states may be updated concurrently only if the shared VisCounters is made
atomic; the reference semantics used here are sequential over sources.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .errors import InconsistentState, InvalidParams
from .exact import compute_extended_sssp
from .graph import DELETE, INF, INSERT, SET_WEIGHT, dist_eq, dist_lt


@dataclass
class VisCounters:
    """Shared per-node count of maintained sources that reach the node.

    ``U`` collects nodes whose count dropped to zero during the current
    round. Entries are provisional (a later source update may re-cover the
    node), so consumers must re-check vis before acting on them.
    """

    vis: list[int]
    U: list[int] = field(default_factory=list)

    @classmethod
    def zeros(cls, n):
        return cls([0] * n)


@dataclass
class AffectedSet:
    """Nodes whose distance or path count changed, plus an edge-scan count
    kept for instrumentation."""

    nodes: set[int] = field(default_factory=set)
    touched_edges: int = 0


class DynSSSP:
    """An updatable extended SSSP rooted at one source.

    With ``track_vd`` the state also carries d1/d2 (largest and
    second-largest finite distance, over distinct nodes) and the minimum
    edge weight of the source's component. d1/d2 are maintained as running
    maxima: they never miss an increase, and after decreases they may lag
    high, which keeps the derived diameter estimate a valid upper bound.
    The minimum weight is re-scanned lazily (see local_vd_estimate) after
    any event that could have lowered or removed it.
    """

    __slots__ = (
        "source",
        "weighted",
        "track_vd",
        "d",
        "sigma",
        "reach",
        "d1",
        "n1",
        "d2",
        "n2",
        "omega_min",
        "vd_dirty",
    )

    def __init__(self, source, weighted, track_vd, d, sigma):
        self.source = source
        self.weighted = weighted
        self.track_vd = track_vd
        self.d = d
        self.sigma = sigma
        self.reach = sum(1 for x in d if x != INF)
        self.d1 = -1.0
        self.n1 = -1
        self.d2 = -1.0
        self.n2 = -1
        self.omega_min = INF
        self.vd_dirty = False

    @classmethod
    def initial(cls, g, source, track_vd=False, vis=None):
        """Fresh full search from source; increments vis over the nodes it
        reaches when counters are supplied."""
        base = compute_extended_sssp(g, source)
        st = cls(source, g.weighted, track_vd, base.d, base.sigma)
        if track_vd:
            d = st.d
            for v in range(g.n):
                if d[v] != INF:
                    st._observe(v, d[v])
            if g.weighted:
                st._rescan_omega(g)
        if vis is not None:
            counters = vis.vis
            d = st.d
            for v in range(g.n):
                if d[v] != INF:
                    counters[v] += 1
        return st

    def _observe(self, v, dv):
        if v == self.n1:
            if dv > self.d1:
                self.d1 = dv
        elif dv > self.d1:
            self.n2, self.d2 = self.n1, self.d1
            self.n1, self.d1 = v, dv
        elif v == self.n2:
            if dv > self.d2:
                self.d2 = dv
        elif dv > self.d2:
            self.n2, self.d2 = v, dv

    def _rescan_omega(self, g):
        omega = INF
        d = self.d
        for u in range(g.n):
            if d[u] == INF:
                continue
            for v, w in g._adj[u].items():
                if d[v] != INF and w < omega:
                    omega = w
        self.omega_min = omega
        self.vd_dirty = False


def local_vd_estimate(g, state):
    """Upper bound on the vertex diameter of the source's component.

    1 + (d1 + d2) / omega_min, with omega_min fixed at 1 for unweighted
    graphs. A component holding only the source scores 1. When the state is
    flagged dirty (weight deletions/increases, or a merge that annexed
    previously unscanned edges) the minimum weight is recomputed here first,
    which restores both soundness and tightness of the divisor.
    """
    if not state.track_vd:
        raise InvalidParams("state was built without track_vd")
    if state.reach <= 1:
        return 1.0
    if state.weighted:
        if state.vd_dirty:
            state._rescan_omega(g)
        return 1.0 + (state.d1 + state.d2) / state.omega_min
    return 1.0 + state.d1 + state.d2


def update_sssp(g, state, events, vis=None):
    """Dispatch to the weighted or unweighted update for g."""
    if g.weighted != state.weighted:
        raise InconsistentState("state and graph disagree about weighting")
    if g.weighted:
        return update_sssp_w(g, state, events, vis)
    return update_sssp_u(g, state, events, vis)


def update_sssp_w(g, state, events, vis=None):
    """Weighted batch update (priority-queue scheme).

    The graph must already reflect the batch; ``events`` is the canonical
    effective list. Returns the set of nodes whose distance or count
    changed. Distances and counts afterwards equal a fresh Dijkstra with
    counting on the post-batch graph.
    """
    if not g.weighted or not state.weighted:
        raise InvalidParams("update_sssp_w needs a weighted graph and state")
    d = state.d
    sigma = state.sigma
    out_adj = g._adj
    in_adj = g._radj
    track = state.track_vd
    counters = vis.vis if vis is not None else None

    heap = []
    key = {}
    old_d = {}
    old_sig = {}
    touched = 0

    def push(v, p):
        cur = key.get(v)
        if cur is None or p < cur:
            key[v] = p
            heapq.heappush(heap, (p, v))

    # Seed the queue from the batch. Only the endpoint that is (or may
    # become) farther from the source can be affected; slack deletions and
    # slack weight increases are filtered out via the recorded old weight.
    for ev in events:
        op = ev.op
        if g.directed:
            a, b = ev.u, ev.v
        else:
            a, b = ev.u, ev.v
            if d[a] > d[b]:
                a, b = b, a
        da, db = d[a], d[b]
        if op == INSERT:
            if da == INF:
                continue
            c = da + ev.weight
            if dist_lt(c, db):
                push(b, c)
            elif dist_eq(c, db):
                push(b, db)
        elif op == SET_WEIGHT:
            if da == INF:
                continue
            c = da + ev.weight
            if dist_lt(c, db):
                push(b, c)
            elif dist_eq(c, db):
                push(b, db)
            elif db != INF and (
                ev.old_weight is None or dist_eq(db, da + ev.old_weight)
            ):
                push(b, db)
        else:  # DELETE
            if da == INF or db == INF:
                continue
            if ev.old_weight is None or dist_eq(db, da + ev.old_weight):
                push(b, db)
        if track:
            if op != DELETE and ev.weight < state.omega_min:
                state.omega_min = ev.weight
            if op != INSERT:
                state.vd_dirty = True

    while heap:
        p, w = heapq.heappop(heap)
        if key.get(w) != p:
            continue
        del key[w]
        con = INF
        for z, wt in in_adj[w].items():
            touched += 1
            dz = d[z]
            if dz != INF:
                c = dz + wt
                if c < con:
                    con = c
        if dist_eq(con, p):
            if w not in old_d:
                old_d[w] = d[w]
                old_sig[w] = sigma[w]
            prev_d = d[w]
            prev_sig = sigma[w]
            was_inf = prev_d == INF
            if was_inf:
                state.reach += 1
                if track and g.weighted:
                    # a newly annexed region brings edges the omega scan
                    # has never seen
                    state.vd_dirty = True
                if counters is not None:
                    counters[w] += 1
            nd = con
            s = 0
            for z, wt in in_adj[w].items():
                touched += 1
                dz = d[z]
                if dz != INF and dist_eq(dz + wt, nd):
                    s += sigma[z]
            d[w] = nd
            sigma[w] = s
            if track:
                state._observe(w, nd)
            changed = prev_d != nd or prev_sig != s
            for z, wt in out_adj[w].items():
                touched += 1
                dz = d[z]
                c = nd + wt
                if dz > c and not dist_eq(dz, c):
                    push(z, c)
                elif changed and dz != INF and dist_eq(dz, c):
                    push(z, dz)
        elif con > p:
            if d[w] != INF:
                if w not in old_d:
                    old_d[w] = d[w]
                    old_sig[w] = sigma[w]
                prev = d[w]
                d[w] = INF
                sigma[w] = 0
                state.reach -= 1
                if counters is not None:
                    counters[w] -= 1
                    if counters[w] == 0:
                        vis.U.append(w)
                if con != INF:
                    push(w, con)
                for z, wt in out_adj[w].items():
                    touched += 1
                    dz = d[z]
                    if dz != INF and dist_eq(dz, prev + wt):
                        push(z, dz)
            elif con != INF:
                # the candidate that queued us is gone but a costlier path
                # remains; try again at its price
                push(w, con)
        else:
            raise InconsistentState(
                f"candidate {p} below best incoming path {con} at node {w}"
            )

    affected = {
        v for v, od in old_d.items() if d[v] != od or sigma[v] != old_sig[v]
    }
    return AffectedSet(affected, touched)


def update_sssp_u(g, state, events, vis=None):
    """Unweighted batch update (level buckets and colors).

    Same contract as update_sssp_w. Candidate levels replace priorities;
    a node is colored black once its final level is known and black nodes
    are skipped on later pops. Colors live only for the duration of the
    call, so every node is white again when it returns.
    """
    if g.weighted or state.weighted:
        raise InvalidParams("update_sssp_u needs an unweighted graph and state")
    d = state.d
    sigma = state.sigma
    out_adj = g._adj
    in_adj = g._radj
    track = state.track_vd
    counters = vis.vis if vis is not None else None
    n = g.n

    buckets = {}
    pending = 0
    kmin = None
    color = bytearray(n)
    old_d = {}
    old_sig = {}
    touched = 0

    def enqueue(v, k):
        nonlocal pending, kmin
        q = buckets.get(k)
        if q is None:
            q = buckets[k] = deque()
        q.append(v)
        pending += 1
        if kmin is None or k < kmin:
            kmin = k

    for ev in events:
        op = ev.op
        if op == SET_WEIGHT:
            raise InvalidParams("set-weight events on an unweighted graph")
        if g.directed:
            a, b = ev.u, ev.v
        else:
            a, b = ev.u, ev.v
            if d[a] > d[b]:
                a, b = b, a
        da, db = d[a], d[b]
        if op == INSERT:
            if da != INF and da + 1 <= db:
                enqueue(b, da + 1)
        else:  # DELETE: only edges on some shortest path matter
            if da != INF and db != INF and db == da + 1:
                enqueue(b, db)

    k = kmin if kmin is not None else 0
    while pending:
        if k > n:
            raise InconsistentState("candidate level beyond any simple path")
        q = buckets.get(k)
        if not q:
            k += 1
            continue
        while q:
            w = q.popleft()
            pending -= 1
            if color[w]:
                continue
            con = INF
            for z in in_adj[w]:
                touched += 1
                dz = d[z]
                if dz != INF and dz < con:
                    con = dz
            if con != INF:
                con += 1
            if con == k:
                if w not in old_d:
                    old_d[w] = d[w]
                    old_sig[w] = sigma[w]
                prev_d = d[w]
                prev_sig = sigma[w]
                if prev_d == INF:
                    state.reach += 1
                    if counters is not None:
                        counters[w] += 1
                km1 = k - 1
                s = 0
                for z in in_adj[w]:
                    touched += 1
                    if d[z] == km1:
                        s += sigma[z]
                d[w] = k
                sigma[w] = s
                color[w] = 1
                if track:
                    state._observe(w, k)
                changed = prev_d != k or prev_sig != s
                k1 = k + 1
                for z in out_adj[w]:
                    touched += 1
                    dz = d[z]
                    if dz == INF or dz > k1:
                        enqueue(z, k1)
                    elif dz == k1 and changed:
                        enqueue(z, k1)
            elif con > k:
                if d[w] != INF:
                    if w not in old_d:
                        old_d[w] = d[w]
                        old_sig[w] = sigma[w]
                    prev = d[w]
                    d[w] = INF
                    sigma[w] = 0
                    state.reach -= 1
                    if counters is not None:
                        counters[w] -= 1
                        if counters[w] == 0:
                            vis.U.append(w)
                    if con != INF:
                        enqueue(w, con)
                    prev1 = prev + 1
                    for z in out_adj[w]:
                        touched += 1
                        if d[z] == prev1:
                            enqueue(z, prev1)
                elif con != INF:
                    enqueue(w, con)
            else:
                raise InconsistentState(
                    f"candidate level {k} below best incoming level {con} at {w}"
                )
        k += 1

    affected = {
        v for v, od in old_d.items() if d[v] != od or sigma[v] != old_sig[v]
    }
    return AffectedSet(affected, touched)
