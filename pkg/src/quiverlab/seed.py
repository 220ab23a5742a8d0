"""Seeds, exchange graphs, mutation classes, and finite-type tools.

A seed is a quiver together with an ordered cluster of Laurent
polynomials in the initial variables.  Seed mutation applies the
exchange relation at a vertex: the new variable is (product over
in-arrows + product over out-arrows) divided exactly by the old one.
The division is exact for every seed reachable from an initial seed;
``laurent.NotDivisible`` escaping from here means a bug, not bad input.

Exchange graphs and mutation classes are explored breadth-first and
deduplicated up to simultaneous relabeling of vertices (and cluster
entries, for seeds).  Both walks honor a hard size limit and flag
truncation instead of failing.  Setting the environment variable
CLUSTER_THREADS > 1 expands each frontier in a thread pool; results are
merged in input order, so output never depends on scheduling.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TypeVar

from .laurent import LaurentPoly, product
from .quiver import (
    DynkinType,
    Quiver,
    canonical_key,
    dynkin_type,
    is_connected,
    mutate_quiver,
    quiver_from_data,
    quiver_to_data,
)

__all__ = [
    "ClassificationResult",
    "ClusterVariables",
    "DEFAULT_MAX_QUIVERS",
    "DEFAULT_MAX_SEEDS",
    "EdgeCheckReport",
    "ExchangeGraph",
    "MutationClass",
    "RootBijectionReport",
    "Seed",
    "canonical_seed_key",
    "classify",
    "collect_cluster_variables",
    "exchange_graph",
    "graph_to_data",
    "graph_to_dot",
    "initial_seed",
    "mutate_seed",
    "mutation_class",
    "positive_roots",
    "seed_from_data",
    "seed_to_data",
    "verify_exchange_edges",
    "verify_root_bijection",
]

DEFAULT_MAX_SEEDS = 100_000
DEFAULT_MAX_QUIVERS = 1_000_000

SeedKey = tuple
T = TypeVar("T")
U = TypeVar("U")


def _thread_count() -> int:
    raw = os.environ.get("CLUSTER_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def _frontier_map(fn: Callable[[T], U], items: Sequence[T]) -> list[U]:
    workers = _thread_count()
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


# ----------------------------------------------------------------------
# seeds


@dataclass(frozen=True)
class Seed:
    """A quiver plus an ordered cluster, one Laurent polynomial per vertex."""

    quiver: Quiver
    cluster: tuple[LaurentPoly, ...]

    def __post_init__(self) -> None:
        n = self.quiver.n
        if len(self.cluster) != n:
            raise ValueError(f"cluster has {len(self.cluster)} entries, expected {n}")
        for p in self.cluster:
            if p.nvars != n:
                raise ValueError("cluster entry has wrong variable count")
            if p.is_zero:
                raise ValueError("cluster entry is zero")
            if not p.is_nonnegative():
                raise ValueError(
                    "cluster entry has a nonpositive coefficient; "
                    "cluster variables always have positive coefficients"
                )
        if len(set(self.cluster)) != n:
            raise ValueError("cluster entries are not pairwise distinct")


def initial_seed(q: Quiver) -> Seed:
    n = q.n
    return Seed(q, tuple(LaurentPoly.variable(n, i) for i in range(1, n + 1)))


def mutate_seed(s: Seed, k: int) -> Seed:
    """Mutate the seed at the 1-based vertex k via the exchange relation."""
    n = s.quiver.n
    if not 1 <= k <= n:
        raise IndexError(f"mutation vertex {k} out of range 1..{n}")
    b = s.quiver.b
    kk = k - 1
    into = product(
        n, (s.cluster[i] ** b[i][kk] for i in range(n) if b[i][kk] > 0)
    )
    outof = product(
        n, (s.cluster[j] ** b[kk][j] for j in range(n) if b[kk][j] > 0)
    )
    new_var = (into + outof).exact_divide(s.cluster[kk])
    cluster = list(s.cluster)
    cluster[kk] = new_var
    return Seed(mutate_quiver(s.quiver, k), tuple(cluster))


def canonical_seed_key(s: Seed) -> SeedKey:
    """A hashable key equal for two seeds iff one is a vertex relabeling
    of the other (relabeling permutes the quiver and the cluster together).

    Minimizes the pair (flattened matrix, cluster text tuple) over all
    permutations; factorial in the vertex count, intended for the small
    ranks where seed enumeration is feasible anyway.
    """
    n = s.quiver.n
    b = s.quiver.b
    texts = [p.to_text() for p in s.cluster]
    indices = range(n)
    best: SeedKey | None = None
    for perm in itertools.permutations(indices):
        mat = tuple(b[perm[i]][perm[j]] for i in indices for j in indices)
        if best is not None and mat > best[0]:
            continue
        candidate = (mat, tuple(texts[perm[i]] for i in indices))
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def seed_to_data(s: Seed) -> dict:
    return {
        "quiver": quiver_to_data(s.quiver),
        "cluster": [p.to_wire() for p in s.cluster],
        "cluster_text": [p.to_text() for p in s.cluster],
    }


def seed_from_data(data: object) -> Seed:
    if not isinstance(data, dict):
        raise ValueError("seed data must be a JSON object")
    if "quiver" not in data or "cluster" not in data:
        raise ValueError('seed data needs "quiver" and "cluster"')
    q = quiver_from_data(data["quiver"])
    cluster_data = data["cluster"]
    if not isinstance(cluster_data, list) or len(cluster_data) != q.n:
        raise ValueError(f'"cluster" must be a list of {q.n} polynomials')
    cluster = tuple(LaurentPoly.from_wire(q.n, entry) for entry in cluster_data)
    return Seed(q, cluster)


# ----------------------------------------------------------------------
# exchange graph


@dataclass
class ExchangeGraph:
    """Seeds up to simultaneous relabeling, with unoriented exchange edges.

    ``seeds`` maps canonical seed keys to a representative seed in the
    labeling in which it was first reached.  ``edges`` maps a sorted key
    pair to the mutation vertex (1-based, in the labeling of the first
    endpoint's representative) that first produced the edge.
    """

    root: SeedKey
    seeds: dict[SeedKey, Seed]
    edges: dict[tuple[SeedKey, SeedKey], int]
    truncated: bool

    @property
    def num_seeds(self) -> int:
        return len(self.seeds)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def _expand_seed(item: tuple[SeedKey, Seed]) -> list[tuple[int, Seed, SeedKey]]:
    _, s = item
    out = []
    for k in range(1, s.quiver.n + 1):
        t = mutate_seed(s, k)
        out.append((k, t, canonical_seed_key(t)))
    return out


def exchange_graph(q: Quiver, max_seeds: int = DEFAULT_MAX_SEEDS) -> ExchangeGraph:
    """Breadth-first closure of the initial seed under mutation.

    Stops early with ``truncated=True`` once ``max_seeds`` distinct
    seeds (up to relabeling) have been collected.
    """
    if max_seeds < 1:
        raise ValueError("max_seeds must be positive")
    s0 = initial_seed(q)
    k0 = canonical_seed_key(s0)
    seeds: dict[SeedKey, Seed] = {k0: s0}
    edges: dict[tuple[SeedKey, SeedKey], int] = {}
    truncated = False
    frontier: list[tuple[SeedKey, Seed]] = [(k0, s0)]
    while frontier and not truncated:
        expansions = _frontier_map(_expand_seed, frontier)
        next_frontier: list[tuple[SeedKey, Seed]] = []
        for (skey, _), neighbors in zip(frontier, expansions):
            for k, t, tkey in neighbors:
                if tkey == skey:
                    continue
                if tkey not in seeds:
                    if len(seeds) >= max_seeds:
                        truncated = True
                        break
                    seeds[tkey] = t
                    next_frontier.append((tkey, t))
                pair = (skey, tkey) if skey <= tkey else (tkey, skey)
                edges.setdefault(pair, k)
            if truncated:
                break
        frontier = next_frontier
    return ExchangeGraph(root=k0, seeds=seeds, edges=edges, truncated=truncated)


@dataclass
class ClusterVariables:
    """All cluster variables reached by an exchange-graph walk."""

    variables: tuple[LaurentPoly, ...]
    truncated: bool

    def texts(self) -> list[str]:
        return [p.to_text() for p in self.variables]


def variables_of(graph: ExchangeGraph) -> ClusterVariables:
    by_text: dict[str, LaurentPoly] = {}
    for s in graph.seeds.values():
        for p in s.cluster:
            by_text.setdefault(p.to_text(), p)
    ordered = tuple(by_text[t] for t in sorted(by_text))
    return ClusterVariables(variables=ordered, truncated=graph.truncated)


def collect_cluster_variables(
    q: Quiver, max_seeds: int = DEFAULT_MAX_SEEDS
) -> ClusterVariables:
    return variables_of(exchange_graph(q, max_seeds))


def _key_ids(graph: ExchangeGraph) -> dict[SeedKey, int]:
    return {key: i for i, key in enumerate(graph.seeds)}


def graph_to_data(graph: ExchangeGraph, include_clusters: bool = False) -> dict:
    """JSON-ready exchange graph; vertex ids follow discovery order."""
    ids = _key_ids(graph)
    vertices = []
    for key, s in graph.seeds.items():
        entry: dict = {"id": ids[key], "quiver": quiver_to_data(s.quiver)}
        if include_clusters:
            entry["cluster_text"] = [p.to_text() for p in s.cluster]
        vertices.append(entry)
    edges = sorted(
        (min(ids[a], ids[b]), max(ids[a], ids[b]), k)
        for (a, b), k in graph.edges.items()
    )
    return {
        "root": ids[graph.root],
        "vertices": vertices,
        "edges": [list(e) for e in edges],
        "truncated": graph.truncated,
    }


def graph_to_dot(graph: ExchangeGraph) -> str:
    ids = _key_ids(graph)
    lines = ["graph exchange {"]
    for key in graph.seeds:
        lines.append(f"  {ids[key]};")
    for (a, b), k in sorted(
        graph.edges.items(), key=lambda item: (ids[item[0][0]], ids[item[0][1]])
    ):
        ia, ib = sorted((ids[a], ids[b]))
        lines.append(f'  {ia} -- {ib} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# mutation class of a quiver (clusters ignored)


@dataclass
class MutationClass:
    """Quivers mutation-equivalent to a root, up to vertex relabeling."""

    representatives: dict[tuple[int, ...], Quiver]
    truncated: bool

    @property
    def size(self) -> int:
        return len(self.representatives)

    @property
    def max_multiplicity(self) -> int:
        return max(
            (abs(x) for key in self.representatives for x in key), default=0
        )

    @property
    def multiple_arrow_members(self) -> int:
        """How many members contain an arrow of multiplicity 2 or more."""
        return sum(
            1
            for key in self.representatives
            if any(abs(x) >= 2 for x in key)
        )


def _expand_quiver(q: Quiver) -> list[Quiver]:
    return [mutate_quiver(q, k) for k in range(1, q.n + 1)]


def mutation_class(q: Quiver, max_quivers: int = DEFAULT_MAX_QUIVERS) -> MutationClass:
    """Breadth-first closure of q under mutation, up to relabeling.

    Raw exchange matrices seen before are skipped without recomputing
    the canonical form (mutation paths frequently commute), and each
    relabeling class is expanded only once.
    """
    if max_quivers < 1:
        raise ValueError("max_quivers must be positive")
    root_key = canonical_key(q)
    representatives: dict[tuple[int, ...], Quiver] = {root_key: q}
    raw_seen: set[tuple[tuple[int, ...], ...]] = {q.b}
    truncated = False
    frontier = [q]
    while frontier and not truncated:
        expansions = _frontier_map(_expand_quiver, frontier)
        next_frontier: list[Quiver] = []
        for neighbors in expansions:
            for t in neighbors:
                if t.b in raw_seen:
                    continue
                raw_seen.add(t.b)
                key = canonical_key(t)
                if key in representatives:
                    continue
                if len(representatives) >= max_quivers:
                    truncated = True
                    break
                representatives[key] = t
                next_frontier.append(t)
            if truncated:
                break
        frontier = next_frontier
    return MutationClass(representatives=representatives, truncated=truncated)


# ----------------------------------------------------------------------
# finite-type classification


@dataclass
class ClassificationResult:
    """Outcome of mutation-class search for a Dynkin orientation.

    verdict is "finite", "infinite", or "depth_exhausted".  For
    "finite", ``dynkin`` holds the type and ``witness`` a mutation
    sequence (1-based vertices, applied left to right to the input
    quiver in its original labeling) reaching a Dynkin orientation.
    For "infinite", ``reason`` is "multiple_arrow" (a member with an
    arrow of multiplicity >= 2 was found; witness leads to it) or
    "class_exhausted" (the whole finite class contains no Dynkin
    orientation; no witness quiver in that case).
    """

    verdict: str
    dynkin: DynkinType | None = None
    witness: tuple[int, ...] | None = None
    witness_quiver: Quiver | None = None
    reason: str | None = None
    explored: int = 0


def classify(
    q: Quiver,
    max_quivers: int = DEFAULT_MAX_QUIVERS,
    early_exit: bool = True,
) -> ClassificationResult:
    """Decide finite type by walking the mutation class.

    A Dynkin orientation anywhere in the class settles "finite".  With
    ``early_exit`` (the default) a member containing an arrow of
    multiplicity >= 2 settles "infinite" immediately; that shortcut is
    an add-on criterion, so ``early_exit=False`` restores the pure
    walk-the-whole-class behavior, where "infinite" is only concluded
    once the class is exhausted without meeting a Dynkin orientation.
    """
    if not is_connected(q):
        raise ValueError("classification needs a connected quiver")
    if max_quivers < 1:
        raise ValueError("max_quivers must be positive")

    root_key = canonical_key(q)
    parents: dict[tuple[int, ...], tuple[tuple[int, ...] | None, int]] = {
        root_key: (None, 0)
    }
    representatives: dict[tuple[int, ...], Quiver] = {root_key: q}
    raw_seen: set[tuple[tuple[int, ...], ...]] = {q.b}

    def witness_for(key: tuple[int, ...]) -> tuple[int, ...]:
        steps: list[int] = []
        cursor: tuple[int, ...] | None = key
        while cursor is not None:
            parent, k = parents[cursor]
            if parent is not None:
                steps.append(k)
            cursor = parent
        return tuple(reversed(steps))

    def inspect(key: tuple[int, ...], rep: Quiver) -> ClassificationResult | None:
        t = dynkin_type(rep)
        if t is not None:
            return ClassificationResult(
                verdict="finite",
                dynkin=t,
                witness=witness_for(key),
                witness_quiver=rep,
                explored=len(representatives),
            )
        if early_exit and any(abs(x) >= 2 for row in rep.b for x in row):
            return ClassificationResult(
                verdict="infinite",
                reason="multiple_arrow",
                witness=witness_for(key),
                witness_quiver=rep,
                explored=len(representatives),
            )
        return None

    found = inspect(root_key, q)
    if found is not None:
        return found

    frontier = [(root_key, q)]
    while frontier:
        next_frontier: list[tuple[tuple[int, ...], Quiver]] = []
        expansions = _frontier_map(lambda item: _expand_quiver(item[1]), frontier)
        for (skey, _), neighbors in zip(frontier, expansions):
            for k, t in enumerate(neighbors, start=1):
                if t.b in raw_seen:
                    continue
                raw_seen.add(t.b)
                key = canonical_key(t)
                if key in representatives:
                    continue
                if len(representatives) >= max_quivers:
                    return ClassificationResult(
                        verdict="depth_exhausted", explored=len(representatives)
                    )
                representatives[key] = t
                parents[key] = (skey, k)
                found = inspect(key, t)
                if found is not None:
                    return found
                next_frontier.append((key, t))
        frontier = next_frontier
    return ClassificationResult(
        verdict="infinite",
        reason="class_exhausted",
        explored=len(representatives),
    )


# ----------------------------------------------------------------------
# root systems


def _dynkin_edges(t: DynkinType) -> list[tuple[int, int]]:
    n = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    chain = [(0, 2), (2, 3), (3, 4), (4, 5)]
    chain += [(i, i + 1) for i in range(5, n - 1)]
    chain.append((1, 3))
    return chain


def _positive_roots_closure(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, ...]]:
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        fresh: list[tuple[int, ...]] = []
        for v in frontier:
            for i in range(n):
                reflected = list(v)
                reflected[i] = -v[i] + sum(v[j] for j in adjacency[i])
                if reflected[i] < 0:
                    continue
                w = tuple(reflected)
                if w not in roots:
                    roots.add(w)
                    fresh.append(w)
        frontier = fresh
    return frozenset(roots)


def positive_roots(t: DynkinType) -> frozenset[tuple[int, ...]]:
    """Positive roots of the simply-laced type t, as simple-root coordinates.

    Computed as the closure of the simple roots under simple
    reflections, keeping only nonnegative vectors, with the standard
    vertex numbering (A: a path; D: fork at the third-to-last node;
    E: Bourbaki numbering, node 2 hanging off node 4).
    """
    return _positive_roots_closure(t.rank, _dynkin_edges(t))


def _underlying_edges(q: Quiver) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(q.n)
        for j in range(i + 1, q.n)
        if q.b[i][j] != 0
    ]


# ----------------------------------------------------------------------
# verification reports


@dataclass
class RootBijectionReport:
    """Denominator vectors of non-initial variables vs positive roots.

    Roots are taken in the input quiver's own vertex numbering, so the
    comparison is coordinate-by-coordinate, not up to relabeling.
    The initial variables (denominator vector zero) stay out of the
    correspondence.
    """

    ok: bool
    dynkin: DynkinType
    num_variables: int
    num_noninitial: int
    num_roots: int
    duplicate_vectors: list[tuple[int, ...]] = field(default_factory=list)
    missing_roots: list[tuple[int, ...]] = field(default_factory=list)
    extra_vectors: list[tuple[int, ...]] = field(default_factory=list)


def verify_root_bijection(
    q: Quiver, max_seeds: int = DEFAULT_MAX_SEEDS
) -> RootBijectionReport:
    t = dynkin_type(q)
    if t is None:
        raise ValueError("root comparison needs a Dynkin orientation as input")
    graph = exchange_graph(q, max_seeds)
    if graph.truncated:
        raise ValueError("seed limit too small to exhaust a finite exchange graph")
    collected = variables_of(graph)
    initial_texts = {
        LaurentPoly.variable(q.n, i).to_text() for i in range(1, q.n + 1)
    }
    noninitial = [
        p for p in collected.variables if p.to_text() not in initial_texts
    ]
    vectors = [p.denominator_vector() for p in noninitial]
    seen: set[tuple[int, ...]] = set()
    duplicates: list[tuple[int, ...]] = []
    for v in vectors:
        if v in seen:
            duplicates.append(v)
        seen.add(v)
    roots = _positive_roots_closure(q.n, _underlying_edges(q))
    missing = sorted(roots - seen)
    extra = sorted(seen - roots)
    ok = not duplicates and not missing and not extra
    return RootBijectionReport(
        ok=ok,
        dynkin=t,
        num_variables=len(collected.variables),
        num_noninitial=len(noninitial),
        num_roots=len(roots),
        duplicate_vectors=duplicates,
        missing_roots=missing,
        extra_vectors=extra,
    )


@dataclass
class EdgeCheckReport:
    """Exchange-relation and closure checks over a whole graph."""

    ok: bool
    seeds_checked: int
    mutations_checked: int
    violations: list[str] = field(default_factory=list)


def verify_exchange_edges(graph: ExchangeGraph) -> EdgeCheckReport:
    """Re-derive every mutation from every seed and check the product law.

    For each seed and vertex k the product of the old and new k-th
    variables must equal the sum of the in-arrow and out-arrow
    monomials, and (for untruncated graphs) the mutated seed must be a
    known graph vertex joined by a recorded edge.
    """
    violations: list[str] = []
    mutations = 0
    for skey, s in graph.seeds.items():
        n = s.quiver.n
        b = s.quiver.b
        for k in range(1, n + 1):
            mutations += 1
            t = mutate_seed(s, k)
            kk = k - 1
            into = product(n, (s.cluster[i] ** b[i][kk] for i in range(n) if b[i][kk] > 0))
            outof = product(n, (s.cluster[j] ** b[kk][j] for j in range(n) if b[kk][j] > 0))
            if s.cluster[kk] * t.cluster[kk] != into + outof:
                violations.append(f"product law fails at vertex {k} of seed {graph_id(graph, skey)}")
            if not graph.truncated:
                tkey = canonical_seed_key(t)
                if tkey not in graph.seeds:
                    violations.append(
                        f"mutation at {k} of seed {graph_id(graph, skey)} leaves the graph"
                    )
                else:
                    pair = (skey, tkey) if skey <= tkey else (tkey, skey)
                    if skey != tkey and pair not in graph.edges:
                        violations.append(
                            f"edge missing for mutation at {k} of seed {graph_id(graph, skey)}"
                        )
    return EdgeCheckReport(
        ok=not violations,
        seeds_checked=len(graph.seeds),
        mutations_checked=mutations,
        violations=violations,
    )


def graph_id(graph: ExchangeGraph, key: SeedKey) -> int:
    return _key_ids(graph)[key]
