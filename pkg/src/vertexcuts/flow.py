"""Unit-vertex-capacity max-flow machinery.

Provides minimum vertex cuts between sets, the source-minimal cut, mixed
(edge + vertex) connectivity for adjacent pairs, and the residual closure
DAG whose closed sets enumerate all minimum cuts of one flow computation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NoVertexCutError, NotMinimumConfigError
from .graph import Graph, VertexSet

_UNSET = -1


class FlowNetwork:
    """Adjacency-array max-flow network with BFS augmenting paths.

    Arc capacities here are at most n+1, and flow values at most the vertex
    connectivity, so Edmonds-Karp is all that is needed.
    """

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[int] = []  # arc -> target node
        self.cap: list[int] = []  # arc -> remaining capacity
        self.out: list[list[int]] = [[] for _ in range(n_nodes)]
        self.flow_value = 0

    def add_arc(self, u: int, v: int, cap: int) -> int:
        """Add arc u->v; returns the arc id (reverse arc is id^1)."""
        a = len(self.head)
        self.head.append(v)
        self.cap.append(cap)
        self.out[u].append(a)
        self.head.append(u)
        self.cap.append(0)
        self.out[v].append(a + 1)
        return a

    def _augment(self, s: int, t: int) -> bool:
        prev_arc = [_UNSET] * self.n
        prev_arc[s] = -2
        q = deque([s])
        while q:
            v = q.popleft()
            if v == t:
                break
            for a in self.out[v]:
                w = self.head[a]
                if self.cap[a] > 0 and prev_arc[w] == _UNSET:
                    prev_arc[w] = a
                    q.append(w)
        if prev_arc[t] == _UNSET:
            return False
        v = t
        while v != s:
            a = prev_arc[v]
            self.cap[a] -= 1
            self.cap[a ^ 1] += 1
            v = self.head[a ^ 1]
        return True

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        value = 0
        while limit is None or value < limit:
            if not self._augment(s, t):
                break
            value += 1
        self.flow_value = value
        return value

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for a in self.out[v]:
                w = self.head[a]
                if self.cap[a] > 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


class SplitNetwork:
    """Vertex-split flow network for min vertex cuts separating C from D.

    C and D are contracted to source/sink; every other vertex v becomes a
    unit arc v_in -> v_out; undirected edges become opposite arcs of
    capacity n+1 (effectively infinite: no minimum cut uses one).
    """

    def __init__(self, g: Graph, c: VertexSet, d: VertexSet):
        c = frozenset(c)
        d = frozenset(d)
        if not c or not d:
            raise ValueError("terminal sets must be nonempty")
        if c & d:
            raise ValueError("terminal sets must be disjoint")
        for u, v in g.edges:
            if (u in c and v in d) or (u in d and v in c):
                raise NoVertexCutError(
                    f"direct edge between terminal sets: ({u}, {v})"
                )
        self.g = g
        self.c = c
        self.d = d
        inner = [v for v in range(g.n) if v not in c and v not in d]
        self.inner = inner
        self.node_in = {v: 2 + 2 * i for i, v in enumerate(inner)}
        self.node_out = {v: 3 + 2 * i for i, v in enumerate(inner)}
        self.s = 0
        self.t = 1
        inf = g.n + 1
        net = FlowNetwork(2 + 2 * len(inner))
        self.unit_arc: dict[int, int] = {}
        for v in inner:
            self.unit_arc[v] = net.add_arc(self.node_in[v], self.node_out[v], 1)
        for u, v in sorted(g.edges):
            u_cd = u in c or u in d
            v_cd = v in c or v in d
            if u_cd and v_cd:
                continue  # both endpoints contracted (direct c-d edges were rejected)
            if u in c or v in c:
                other = v if u in c else u
                net.add_arc(self.s, self.node_in[other], inf)
            elif u in d or v in d:
                other = v if u in d else u
                net.add_arc(self.node_out[other], self.t, inf)
            else:
                net.add_arc(self.node_out[u], self.node_in[v], inf)
                net.add_arc(self.node_out[v], self.node_in[u], inf)
        self.net = net
        self.value: int | None = None

    def run(self, limit: int | None = None) -> int:
        self.value = self.net.max_flow(self.s, self.t, limit)
        return self.value

    def source_min_cut(self) -> VertexSet:
        """The unique minimum cut whose C-region is containment-minimal."""
        if self.value is None:
            self.run()
        reach = self.net.residual_reachable(self.s)
        return frozenset(
            v
            for v in self.inner
            if self.node_in[v] in reach and self.node_out[v] not in reach
        )


def min_vertex_cut(
    g: Graph, c: VertexSet, d: VertexSet
) -> tuple[int, VertexSet]:
    """Max number of internally disjoint C-D paths, with a witness cut."""
    sn = SplitNetwork(g, frozenset(c), frozenset(d))
    value = sn.run()
    return value, sn.source_min_cut()


def minimal_cut_toward(g: Graph, c: VertexSet, d: VertexSet) -> VertexSet:
    """Among all minimum C-D cuts, the one minimizing Region(C) by containment."""
    sn = SplitNetwork(g, frozenset(c), frozenset(d))
    sn.run()
    return sn.source_min_cut()


def mixed_connectivity(g: Graph, u: int, v: int) -> int:
    """kappa(u, v) under the mixed definition.

    For nonadjacent pairs this is plain vertex connectivity; for adjacent
    pairs it is 1 plus the vertex connectivity after deleting the shared
    edge (the edge itself counts as one disjoint path).
    """
    if u == v:
        raise ValueError("u and v must differ")
    if g.has_edge(u, v):
        reduced = g.without_edge(u, v)
        sn = SplitNetwork(reduced, frozenset([u]), frozenset([v]))
        return 1 + sn.run()
    sn = SplitNetwork(g, frozenset([u]), frozenset([v]))
    return sn.run()


def vertex_connectivity(g: Graph) -> tuple[int, VertexSet | None]:
    """Global kappa(G) with a witness minimum cut.

    Uses the standard dominating-candidate scheme: some vertex of
    {v} + N(v), for v of minimum degree, avoids any fixed minimum cut, so
    scanning kappa(w, y) over those w and all nonadjacent y is exhaustive.
    Complete graphs have no vertex cut; returns (n-1, None).
    """
    if g.is_complete():
        return g.n - 1, None
    vmin = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = g.n - 1
    witness: VertexSet | None = None
    for w in [vmin] + list(g.adj[vmin]):
        nonadj = [y for y in range(g.n) if y != w and not g.has_edge(w, y)]
        for y in nonadj:
            sn = SplitNetwork(g, frozenset([w]), frozenset([y]))
            value = sn.run(limit=best + 1)
            if value < best:
                best = value
                witness = sn.source_min_cut()
    return best, witness


# ---------------------------------------------------------------------------
# residual closure DAG


@dataclass(frozen=True)
class PQDag:
    """Closure DAG of a maximum flow on a split network.

    Strongly connected components of the residual graph (augmented with a
    pairing arc out->in for each unsaturated vertex arc, so that a vertex
    never straddles a cut) form the nodes; closed sets (no outgoing arc)
    containing the source component and avoiding the sink component are in
    1-1 correspondence with minimum C-D separations.  ``phi`` embeds each
    interior vertex at its in-node's component, or None for vertices on the
    sink side of every minimum cut.
    """

    n_nodes: int
    arcs: tuple[tuple[int, int], ...]
    comp_s: int
    comp_t: int
    phi: dict[int, int | None]
    closure: tuple[int, ...]  # node -> bitmask of its descendants incl. itself
    scc_in: dict[int, int]
    scc_out: dict[int, int]
    inner: tuple[int, ...]

    def closed_set_for(self, v: int) -> int | None:
        """Bitmask of the smallest valid closed set with v on the source side.

        Source-side membership of a vertex is out-node membership of the
        closed set, so the closure is grown from the out-node's component.
        """
        node = self.scc_out[v]
        mask = self.closure[self.comp_s] | self.closure[node]
        if (mask >> self.comp_t) & 1:
            return None
        return mask

    def cut_of_closed_set(self, mask: int) -> VertexSet:
        return frozenset(
            v
            for v in self.inner
            if (mask >> self.scc_in[v]) & 1 and not (mask >> self.scc_out[v]) & 1
        )

    def minimal_cut(self) -> VertexSet:
        return self.cut_of_closed_set(self.closure[self.comp_s])

    def _free_nodes(self) -> list[int]:
        forced = self.closure[self.comp_s]
        reach_t = [
            d for d in range(self.n_nodes) if (self.closure[d] >> self.comp_t) & 1
        ]
        banned = 0
        for d in reach_t:
            banned |= 1 << d
        return [
            d
            for d in range(self.n_nodes)
            if not (forced >> d) & 1 and not (banned >> d) & 1
        ]

    def iter_closed_sets(self, cap: int = 1 << 20):
        """Yield every valid closed set as a bitmask (bounded enumeration)."""
        free = self._free_nodes()
        arcs_in_free = {}
        fset = set(free)
        for d in free:
            arcs_in_free[d] = [
                e for (x, e) in self.arcs if x == d and e in fset
            ]
        base = self.closure[self.comp_s]
        order = sorted(free)
        count = 0
        # choices processed in reverse topological order would allow pruning;
        # plain subset recursion with closure-forcing is plenty at oracle scale
        def rec(i: int, chosen: int):
            nonlocal count
            if i == len(order):
                count += 1
                if count > cap:
                    raise MemoryError("closed-set enumeration cap exceeded")
                yield base | chosen
                return
            d = order[i]
            if (chosen >> d) & 1:
                yield from rec(i + 1, chosen)
                return
            yield from rec(i + 1, chosen)  # exclude d (and nothing forced)
            cl = self.closure[d]
            # include d: pull in its whole closure (minus already-forced part)
            yield from rec(i + 1, chosen | (cl & ~base))

        seen = set()
        for mask in rec(0, 0):
            if mask not in seen:
                seen.add(mask)
                yield mask

    def count_closed_sets(self) -> int:
        return sum(1 for _ in self.iter_closed_sets())

    def count_min_cut_sets(self) -> int:
        """Distinct minimum cut vertex sets (side assignments deduplicated)."""
        return len({self.cut_of_closed_set(m) for m in self.iter_closed_sets()})


def _tarjan_scc(n: int, out: list[list[int]]) -> tuple[int, list[int]]:
    index = [_UNSET] * n
    low = [0] * n
    comp = [_UNSET] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != _UNSET:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for j in range(pi, len(out[v])):
                w = out[v][j]
                if index[w] == _UNSET:
                    work[-1] = (v, j + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return ncomp, comp


def pq_dag(sn: SplitNetwork) -> PQDag:
    """Contract the residual graph of a maximum flow into its closure DAG."""
    if sn.value is None:
        raise ValueError("run the flow before building the DAG")
    net = sn.net
    out: list[list[int]] = [[] for _ in range(net.n)]
    for a in range(0, len(net.head), 2):
        u = net.head[a + 1]
        v = net.head[a]
        if net.cap[a] > 0:
            out[u].append(v)
        if net.cap[a + 1] > 0:
            out[v].append(u)
    # pairing arcs: an unsaturated vertex cannot straddle a minimum cut
    for v, a in sn.unit_arc.items():
        if net.cap[a] > 0:
            out[sn.node_out[v]].append(sn.node_in[v])
    ncomp, comp = _tarjan_scc(net.n, out)
    arc_set = set()
    for u in range(net.n):
        for v in out[u]:
            if comp[u] != comp[v]:
                arc_set.add((comp[u], comp[v]))
    succ: list[list[int]] = [[] for _ in range(ncomp)]
    for u, v in arc_set:
        succ[u].append(v)
    # Tarjan emits components in reverse topological order: every arc goes
    # from a higher component id to a lower one, so closures accumulate in
    # component order
    closure = [0] * ncomp
    for d in range(ncomp):
        mask = 1 << d
        for e in succ[d]:
            mask |= closure[e]
        closure[d] = mask
    comp_s = comp[sn.s]
    comp_t = comp[sn.t]
    scc_in = {v: comp[sn.node_in[v]] for v in sn.inner}
    scc_out = {v: comp[sn.node_out[v]] for v in sn.inner}
    # phi(v) is the component of v's out-node: its membership in a closed
    # set is exactly "v lies on the source side"; bottom when v sits on the
    # sink side of every minimum cut
    phi: dict[int, int | None] = {}
    for v in sn.inner:
        node = scc_out[v]
        phi[v] = None if (closure[node] >> comp_t) & 1 else node
    return PQDag(
        n_nodes=ncomp,
        arcs=tuple(sorted(arc_set)),
        comp_s=comp_s,
        comp_t=comp_t,
        phi=phi,
        closure=tuple(closure),
        scc_in=scc_in,
        scc_out=scc_out,
        inner=tuple(sn.inner),
    )


def bulk_small_cuts(
    g: Graph, c: VertexSet, d: VertexSet, kappa: int
) -> tuple[dict[int, VertexSet], frozenset[int]]:
    """One flow, one DAG sweep: a cut S(v) for every interior vertex.

    S(v) comes from the smallest closed set containing phi(v); if
    Small(v) exists, C lies in its v-side and it separates v from D, then
    S(v) = Small(v).  Vertices whose phi is bottom fall back to the overall
    minimal cut, with no guarantee.  The second return value is the set of
    vertices settled strictly on the source side of their own S(v); on
    those, S(v) equals the per-vertex source-minimal cut oracle.
    """
    sn = SplitNetwork(g, frozenset(c), frozenset(d))
    value = sn.run()
    if value != kappa:
        raise NotMinimumConfigError(
            f"min cut value {value} differs from kappa={kappa}"
        )
    dag = pq_dag(sn)
    cuts: dict[int, VertexSet] = {}
    covered: set[int] = set()
    cache: dict[int, VertexSet] = {}
    for v in dag.inner:
        mask = dag.closed_set_for(v)
        if mask is None:
            cuts[v] = dag.minimal_cut()
            continue
        node = dag.scc_out[v]
        if node not in cache:
            cache[node] = dag.cut_of_closed_set(mask)
        cuts[v] = cache[node]
        if v in cuts[v]:
            raise AssertionError("source-side vertex extracted inside its cut")
        covered.add(v)
    return cuts, frozenset(covered)
