"""Exact broadcast domination on small finite graphs.

Reception works as on the lattice: a broadcast at u delivers t - d(u, v) to
every vertex v within distance t, and a vertex set dominates when every
vertex accumulates at least r. gamma_exact finds a minimum dominating set by
iterative deepening over lexicographically ordered vertex subsets, so the
witness it returns is the lexicographically least one of minimum size. The
verification helpers package specific small-graph facts: the two-broadcast
cycle, the torus pair that beats the product bound, and product inequality
scans over graph pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from .coverage_bounds import Params

DEFAULT_NODE_BUDGET = 5_000_000

Label = Hashable


class GraphExprError(ValueError):
    """Malformed graph expression; position is the offset of the problem."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at offset {position}")
        self.position = position


def _flat(label: Label) -> tuple:
    return label if isinstance(label, tuple) else (label,)


class FiniteGraph:
    """Undirected graph over hashable vertex labels."""

    def __init__(
        self, labels: Sequence[Label], edges: Iterable[tuple[Label, Label]]
    ) -> None:
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise ValueError("duplicate vertex label")
        adj: list[set[int]] = [set() for _ in self._labels]
        for a, b in edges:
            if a not in self._index:
                raise ValueError(f"edge endpoint {a!r} is not a vertex")
            if b not in self._index:
                raise ValueError(f"edge endpoint {b!r} is not a vertex")
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            i, j = self._index[a], self._index[b]
            adj[i].add(j)
            adj[j].add(i)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._dist: Optional[tuple[tuple[Optional[int], ...], ...]] = None

    @property
    def labels(self) -> tuple[Label, ...]:
        return self._labels

    @property
    def vertex_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def index_of(self, label: Label) -> int:
        if label not in self._index:
            raise ValueError(f"{label!r} is not a vertex")
        return self._index[label]

    def neighbors(self, label: Label) -> tuple[Label, ...]:
        return tuple(self._labels[j] for j in self._adj[self.index_of(label)])

    @staticmethod
    def path(k: int) -> "FiniteGraph":
        """Path on vertices 1..k."""
        if k < 1:
            raise ValueError("path needs at least 1 vertex")
        return FiniteGraph(range(1, k + 1), ((i, i + 1) for i in range(1, k)))

    @staticmethod
    def cycle(k: int) -> "FiniteGraph":
        """Cycle on vertices 0..k-1; k must be at least 3."""
        if k < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return FiniteGraph(range(k), ((i, (i + 1) % k) for i in range(k)))

    def box_product(self, other: "FiniteGraph") -> "FiniteGraph":
        """Box product; tuple labels from both factors flatten into one tuple.

        Vertices are ordered row-major: all of other's labels under the first
        label of self, then the second, and so on.
        """
        labels = [
            _flat(a) + _flat(b) for a in self._labels for b in other._labels
        ]
        m = other.vertex_count
        edges = []
        for i, nbrs in enumerate(self._adj):
            for j in nbrs:
                if j > i:
                    for k in range(m):
                        edges.append((labels[i * m + k], labels[j * m + k]))
        for i in range(self.vertex_count):
            for j, nbrs in enumerate(other._adj):
                for k in nbrs:
                    if k > j:
                        edges.append((labels[i * m + j], labels[i * m + k]))
        return FiniteGraph(labels, edges)

    def distances(self) -> tuple[tuple[Optional[int], ...], ...]:
        """All-pairs distances by BFS; None between different components."""
        if self._dist is None:
            rows = []
            for src in range(len(self._labels)):
                dist: list[Optional[int]] = [None] * len(self._labels)
                dist[src] = 0
                queue = deque([src])
                while queue:
                    u = queue.popleft()
                    for v in self._adj[u]:
                        if dist[v] is None:
                            dist[v] = dist[u] + 1
                            queue.append(v)
                rows.append(tuple(dist))
            self._dist = tuple(rows)
        return self._dist

    @property
    def component_count(self) -> int:
        seen = [False] * len(self._labels)
        count = 0
        for src in range(len(self._labels)):
            if seen[src]:
                continue
            count += 1
            queue = deque([src])
            seen[src] = True
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        queue.append(v)
        return count


class _Parser:
    # Grammar: expr := term ('*' term)*; term := P<int> | C<int> | '(' expr ')'
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_expr(self) -> FiniteGraph:
        graph = self.parse_term()
        while self.peek() == "*":
            self.pos += 1
            graph = graph.box_product(self.parse_term())
        return graph

    def parse_term(self) -> FiniteGraph:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            graph = self.parse_expr()
            if self.peek() != ")":
                raise GraphExprError("expected ')'", self.pos)
            self.pos += 1
            return graph
        if ch in ("P", "C"):
            self.pos += 1
            k = self._parse_int()
            if ch == "P":
                if k < 1:
                    raise GraphExprError("path needs at least 1 vertex", start)
                return FiniteGraph.path(k)
            if k < 3:
                raise GraphExprError("cycle needs at least 3 vertices", start)
            return FiniteGraph.cycle(k)
        if ch == "":
            raise GraphExprError("unexpected end of expression", self.pos)
        raise GraphExprError(f"unexpected character {ch!r}", self.pos)

    def _parse_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise GraphExprError("expected a number", start)
        return int(self.text[start : self.pos])


def parse_graph_expr(text: str) -> FiniteGraph:
    """Build a graph from an expression like ``P5*C4`` or ``(P2*P3)*C5``.

    Atoms are P<k> for the path on k vertices and C<k> for the cycle on k;
    ``*`` is the box product and associates left.
    """
    parser = _Parser(text)
    graph = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise GraphExprError("trailing input", parser.pos)
    return graph


def reception_map(
    graph: FiniteGraph, broadcasts: Iterable[Label], t: int
) -> dict[Label, int]:
    """Reception every vertex accumulates from broadcasts of strength t."""
    if t < 1:
        raise ValueError("t must be at least 1")
    dist = graph.distances()
    sources = []
    seen = set()
    for b in broadcasts:
        i = graph.index_of(b)
        if i in seen:
            raise ValueError(f"duplicate broadcast at {b!r}")
        seen.add(i)
        sources.append(i)
    out = {}
    for v, label in enumerate(graph.labels):
        total = 0
        for u in sources:
            d = dist[u][v]
            if d is not None and d < t:
                total += t - d
        out[label] = total
    return out


def is_dominating_set(
    graph: FiniteGraph, broadcasts: Iterable[Label], params: Params
) -> bool:
    """Whether every vertex accumulates reception at least r."""
    receptions = reception_map(graph, broadcasts, params.t)
    return all(value >= params.r for value in receptions.values())


@dataclass(frozen=True)
class GammaResult:
    """Outcome of a minimum dominating set search.

    status is "exact" when gamma and witness are proven minimal, or
    "cap-exceeded" when the size cap or node budget ran out first; then only
    upper_bound (from a greedy pass) is meaningful. nodes counts search tree
    nodes across all deepening levels.
    """

    status: str
    gamma: Optional[int]
    witness: Optional[tuple[Label, ...]]
    upper_bound: int
    nodes: int
    components: int


class _BudgetExhausted(Exception):
    pass


def _greedy_witness(contrib: Sequence[Sequence[int]], r: int) -> list[int]:
    # Upper bound: repeatedly take the vertex that removes the most deficit.
    n = len(contrib)
    deficits = [r] * n
    total = n * r
    chosen: list[int] = []
    while total > 0:
        best_u, best_gain = -1, 0
        for u in range(n):
            gain = sum(
                min(deficits[v], c) for v, c in enumerate(contrib[u]) if c > 0
            )
            if gain > best_gain:
                best_u, best_gain = u, gain
        assert best_u >= 0
        chosen.append(best_u)
        for v, c in enumerate(contrib[best_u]):
            if c > 0:
                cut = min(deficits[v], c)
                deficits[v] -= cut
                total -= cut
    return chosen


def gamma_exact(
    graph: FiniteGraph,
    params: Params,
    size_cap: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> GammaResult:
    """Minimum size of a dominating broadcast set, with a witness.

    Iterative deepening over subset size; within a size, subsets are tried
    in lexicographic index order and every prune only discards subsets that
    cannot be completed, so the first set found is the lexicographically
    least minimum witness. Every vertex supplies itself t >= r, so a
    dominating set always exists and the search always terminates; size_cap
    and node_budget bound the effort and yield a cap-exceeded result when
    hit.
    """
    t, r = params.t, params.r
    dist = graph.distances()
    n = graph.vertex_count
    contrib = [
        [t - d if d is not None and d < t else 0 for d in row] for row in dist
    ]
    infl = [
        [(v, c) for v, c in enumerate(row) if c > 0] for row in contrib
    ]
    last_helper = [
        max(u for u in range(n) if contrib[u][v] > 0) for v in range(n)
    ]
    # maxc[s][v]: best single-vertex contribution to v from any u >= s.
    maxc = [[0] * n for _ in range(n + 1)]
    for s in range(n - 1, -1, -1):
        for v in range(n):
            maxc[s][v] = max(maxc[s + 1][v], contrib[s][v])
    power = [sum(row) for row in contrib]
    best_gain = [0] * (n + 1)
    for s in range(n - 1, -1, -1):
        best_gain[s] = max(best_gain[s + 1], power[s])

    greedy = _greedy_witness(contrib, r)
    upper = len(greedy)
    limit = upper if size_cap is None else min(size_cap, upper)

    deficits = [r] * n
    state = {"total": n * r, "nodes": 0}
    found: list[int] = []

    def feasible(start: int, remaining: int) -> bool:
        if state["total"] > remaining * best_gain[start]:
            return False
        row = maxc[start]
        for v in range(n):
            if deficits[v] > remaining * row[v]:
                return False
        return True

    def dfs(lo: int, remaining: int) -> bool:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise _BudgetExhausted
        # No later vertex can help the most-constrained deficient vertex, so
        # candidates past that point are dead.
        hi = min(last_helper[v] for v in range(n) if deficits[v] > 0)
        for u in range(lo, hi + 1):
            delta = []
            for v, c in infl[u]:
                cut = min(deficits[v], c)
                if cut:
                    deficits[v] -= cut
                    state["total"] -= cut
                    delta.append((v, cut))
            if not delta:
                # u helps no deficient vertex now or later; a minimum witness
                # cannot contain it.
                continue
            if state["total"] == 0:
                found.append(u)
                return True
            if remaining > 1 and feasible(u + 1, remaining - 1) and dfs(
                u + 1, remaining - 1
            ):
                found.append(u)
                return True
            for v, cut in delta:
                deficits[v] += cut
                state["total"] += cut
        return False

    try:
        for k in range(1, limit + 1):
            if feasible(0, k) and dfs(0, k):
                witness = tuple(graph.labels[i] for i in sorted(found))
                return GammaResult(
                    "exact", k, witness, upper, state["nodes"],
                    graph.component_count,
                )
    except _BudgetExhausted:
        pass
    return GammaResult(
        "cap-exceeded", None, None, upper, state["nodes"], graph.component_count
    )


@dataclass(frozen=True)
class CycleLemmaReport:
    """Check that the cycle of length 2(t - r + 1) is dominated by 2 broadcasts.

    applicable is False when t = r: the length would be 2, not a cycle.
    """

    t: int
    r: int
    n: int
    applicable: bool
    gamma: Optional[int]
    witness: Optional[tuple[Label, ...]]
    canonical_witness: Optional[tuple[Label, ...]]
    canonical_receptions: Optional[tuple[int, ...]]
    passed: Optional[bool]
    note: str


def verify_cycle_lemma(params: Params) -> CycleLemmaReport:
    """Exact gamma of the cycle of length 2(t - r + 1), checked against 2."""
    t, r = params.t, params.r
    n = 2 * (t - r + 1)
    if n < 3:
        return CycleLemmaReport(
            t, r, n, False, None, None, None, None, None,
            "length 2(t-r+1) = 2 is not a cycle; needs t > r",
        )
    graph = FiniteGraph.cycle(n)
    result = gamma_exact(graph, params)
    canonical = (0, n // 2)
    receptions = reception_map(graph, canonical, t)
    canonical_ok = all(value >= r for value in receptions.values())
    passed = result.status == "exact" and result.gamma == 2 and canonical_ok
    return CycleLemmaReport(
        t, r, n, True, result.gamma, result.witness, canonical,
        tuple(receptions[v] for v in range(n)), passed, ""
    )


@dataclass(frozen=True)
class TorusReport:
    """The torus C_n x C_n at n = 2(t - r + 1) needs only 2 broadcasts.

    Two antipodal broadcasts dominate the whole torus even though each cycle
    factor alone needs 2, so the product bound gamma(G)*gamma(H) = 4 fails.
    min_reception is the worst reception under the canonical witness; it
    always equals 2r - 2, which is why r >= 2 is required.
    """

    t: int
    r: int
    n: int
    gamma_torus: Optional[int]
    gamma_cycle: Optional[int]
    squared_bound: Optional[int]
    violates_product_bound: Optional[bool]
    canonical_witness: tuple[Label, ...]
    canonical_dominates: bool
    min_reception: int
    expected_min_reception: int
    min_reception_vertices: tuple[Label, ...]
    passed: bool


def verify_torus_counterexample(
    params: Params, node_budget: int = DEFAULT_NODE_BUDGET
) -> TorusReport:
    """Check the torus values for the given parameters; needs r >= 2 and t > r."""
    t, r = params.t, params.r
    if r < 2:
        raise ValueError("the torus argument needs r >= 2")
    n = 2 * (t - r + 1)
    if n < 3:
        raise ValueError("the torus argument needs t > r")
    cycle = FiniteGraph.cycle(n)
    torus = cycle.box_product(cycle)
    canonical = ((0, 0), (n // 2, n // 2))
    receptions = reception_map(torus, canonical, t)
    min_reception = min(receptions.values())
    min_vertices = tuple(
        lab for lab in torus.labels if receptions[lab] == min_reception
    )
    canonical_ok = min_reception >= r

    torus_result = gamma_exact(torus, params, node_budget=node_budget)
    cycle_result = gamma_exact(cycle, params, node_budget=node_budget)
    if torus_result.status == "exact" and cycle_result.status == "exact":
        squared = cycle_result.gamma**2
        violates = torus_result.gamma < squared
        passed = (
            torus_result.gamma == 2
            and violates
            and canonical_ok
            and min_reception == 2 * r - 2
        )
    else:
        squared = None
        violates = None
        passed = False
    return TorusReport(
        t,
        r,
        n,
        torus_result.gamma,
        cycle_result.gamma,
        squared,
        violates,
        canonical,
        canonical_ok,
        min_reception,
        2 * r - 2,
        min_vertices,
        passed,
    )


@dataclass(frozen=True)
class VizingPairReport:
    """Product inequalities for one pair of graphs at one parameter pair.

    halved_product_holds_gh: 2 * gamma_{t,r}(G box H) >= gamma_{t,r}(G) *
    gamma_{t,1}(H); _hg swaps the roles. distance_product_holds:
    gamma_{t,1}(G box H) >= gamma_{t,1}(G) * gamma_{t,1}(H). All three are
    None when any underlying search hit its cap.
    """

    expr_g: str
    expr_h: str
    t: int
    r: int
    status: str
    gamma_g: Optional[int]
    gamma_h: Optional[int]
    gamma_product: Optional[int]
    gamma_g_t1: Optional[int]
    gamma_h_t1: Optional[int]
    gamma_product_t1: Optional[int]
    halved_product_holds_gh: Optional[bool]
    halved_product_holds_hg: Optional[bool]
    distance_product_holds: Optional[bool]


def vizing_scan(
    pairs: Iterable[tuple[str, str]],
    params: Params,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[VizingPairReport]:
    """Evaluate the product inequalities over pairs of graph expressions."""
    t, r = params.t, params.r
    base = Params(t, 1)
    reports = []
    for expr_g, expr_h in pairs:
        g = parse_graph_expr(expr_g)
        h = parse_graph_expr(expr_h)
        product = g.box_product(h)
        results = {
            "g": gamma_exact(g, params, node_budget=node_budget),
            "h": gamma_exact(h, params, node_budget=node_budget),
            "gh": gamma_exact(product, params, node_budget=node_budget),
            "g1": gamma_exact(g, base, node_budget=node_budget),
            "h1": gamma_exact(h, base, node_budget=node_budget),
            "gh1": gamma_exact(product, base, node_budget=node_budget),
        }
        if all(res.status == "exact" for res in results.values()):
            status = "exact"
            gh = results["gh"].gamma
            holds_gh = 2 * gh >= results["g"].gamma * results["h1"].gamma
            holds_hg = 2 * gh >= results["h"].gamma * results["g1"].gamma
            holds_dist = (
                results["gh1"].gamma >= results["g1"].gamma * results["h1"].gamma
            )
        else:
            status = "cap-exceeded"
            holds_gh = holds_hg = holds_dist = None
        reports.append(
            VizingPairReport(
                expr_g,
                expr_h,
                t,
                r,
                status,
                results["g"].gamma,
                results["h"].gamma,
                results["gh"].gamma,
                results["g1"].gamma,
                results["h1"].gamma,
                results["gh1"].gamma,
                holds_gh,
                holds_hg,
                holds_dist,
            )
        )
    return reports
