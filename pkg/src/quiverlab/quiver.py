"""Finite quivers without loops or 2-cycles, and their mutations.

A quiver on n vertices is stored as the skew-symmetric integer matrix b
with b[i][j] = (number of arrows i -> j) - (number of arrows j -> i);
absence of loops and 2-cycles makes the matrix encoding lossless.
Vertices are 1-based in every public interface (arrows, mutation
indices, JSON); the matrix itself is indexed 0-based.

Besides Fomin-Zelevinsky mutation this module provides a canonical form
under vertex relabeling (lexicographically least matrix, found by an
ordered-partition search), recognition of simply-laced Dynkin
orientations, and the JSON / DOT external formats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DynkinType",
    "Quiver",
    "QuiverFormatError",
    "arrows",
    "canonical_form",
    "canonical_key",
    "dynkin_type",
    "is_acyclic",
    "is_connected",
    "mutate_quiver",
    "parse_quiver",
    "quiver_from_data",
    "quiver_to_data",
    "serialize_quiver",
    "to_dot",
]


class QuiverFormatError(ValueError):
    """Raised when external quiver data is malformed or inconsistent."""


@dataclass(frozen=True)
class DynkinType:
    """A simply-laced Dynkin type such as A3, D6, or E8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise ValueError("A_n needs n >= 1")
        if self.family == "D" and self.rank < 4:
            raise ValueError("D_n needs n >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Quiver:
    """Immutable quiver, encoded by its skew-symmetric exchange matrix."""

    b: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.b)
        if n < 1:
            raise ValueError("quiver needs at least one vertex")
        for i, row in enumerate(self.b):
            if len(row) != n:
                raise ValueError("exchange matrix is not square")
            if row[i] != 0:
                raise ValueError("nonzero diagonal entry (loop)")
            for j in range(i):
                if row[j] != -self.b[j][i]:
                    raise ValueError("exchange matrix is not skew-symmetric")

    @property
    def n(self) -> int:
        return len(self.b)

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable[int]]) -> "Quiver":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_arrows(cls, n: int, arrow_list: Iterable[Sequence[int]]) -> "Quiver":
        """Build from 1-based (source, target, multiplicity) triples.

        Each unordered vertex pair may appear at most once; a pair in
        both directions would be a 2-cycle, which the encoding forbids.
        """
        if n < 1:
            raise QuiverFormatError("vertex count must be at least 1")
        b = [[0] * n for _ in range(n)]
        seen: set[frozenset[int]] = set()
        for entry in arrow_list:
            if len(entry) != 3:
                raise QuiverFormatError(f"arrow entry {entry!r} is not a triple")
            s, t, m = (int(x) for x in entry)
            if not (1 <= s <= n and 1 <= t <= n):
                raise QuiverFormatError(f"arrow {entry!r} references a vertex outside 1..{n}")
            if s == t:
                raise QuiverFormatError(f"loop at vertex {s} is not allowed")
            if m < 1:
                raise QuiverFormatError(f"arrow multiplicity must be positive, got {m}")
            pair = frozenset((s, t))
            if pair in seen:
                raise QuiverFormatError(
                    f"vertex pair {s},{t} listed twice (possible 2-cycle)"
                )
            seen.add(pair)
            b[s - 1][t - 1] = m
            b[t - 1][s - 1] = -m
        return cls(tuple(tuple(row) for row in b))


def arrows(q: Quiver) -> list[tuple[int, int, int]]:
    """All arrows as 1-based (source, target, multiplicity), sorted."""
    out = []
    for i in range(q.n):
        for j in range(q.n):
            if q.b[i][j] > 0:
                out.append((i + 1, j + 1, q.b[i][j]))
    return out


def mutate_quiver(q: Quiver, k: int) -> Quiver:
    """Fomin-Zelevinsky mutation at the 1-based vertex k.

    Entries with i = k or j = k flip sign; every other entry picks up
    max(0, b[i][k]) * max(0, b[k][j]) - max(0, b[j][k]) * max(0, b[k][i]).
    Mutation at the same vertex twice is the identity.
    """
    if not 1 <= k <= q.n:
        raise IndexError(f"mutation vertex {k} out of range 1..{q.n}")
    kk = k - 1
    b = q.b
    n = q.n
    new_rows = []
    for i in range(n):
        if i == kk:
            new_rows.append(tuple(-x for x in b[i]))
            continue
        bik = b[i][kk]
        row = list(b[i])
        row[kk] = -bik
        for j in range(n):
            if j == kk or j == i:
                continue
            bkj = b[kk][j]
            row[j] += max(0, bik) * max(0, bkj) - max(0, -bkj) * max(0, -bik)
        new_rows.append(tuple(row))
    return Quiver(tuple(new_rows))


# ----------------------------------------------------------------------
# canonical form under vertex relabeling


def _twins(b: tuple[tuple[int, ...], ...], u: int, v: int) -> bool:
    # Vertices whose rows agree everywhere else and who share no arrow
    # are swapped by an automorphism, so only one needs exploring.
    if b[u][v] != 0:
        return False
    row_u, row_v = b[u], b[v]
    return all(row_u[w] == row_v[w] for w in range(len(b)) if w != u and w != v)


def _canonical_search(
    b: tuple[tuple[int, ...], ...]
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Find the lexicographically least relabeled matrix and a witness.

    Maintains a frontier of partial assignments (prefix of the new
    labeling plus an ordered partition of the unassigned vertices).
    Within a partial assignment the next canonical row depends only on
    the candidate vertex, so candidates are compared row-wise across the
    whole frontier and only global minimizers survive.  Unassigned
    positions of a row are determined up to ordering within each block,
    which is why blocks are refined by the candidate's values and the
    row segment for a block is its sorted value list.
    """
    n = len(b)
    states: list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = [
        ((), (tuple(range(n)),))
    ]
    for _depth in range(n):
        best_row: tuple[int, ...] | None = None
        survivors: list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = []
        for assigned, blocks in states:
            first = blocks[0]
            candidates: list[int] = []
            for u in first:
                if any(_twins(b, u, v) for v in candidates):
                    continue
                candidates.append(u)
            for u in candidates:
                row_u = b[u]
                row: list[int] = [row_u[a] for a in assigned]
                row.append(0)
                new_blocks: list[tuple[int, ...]] = []
                for bi, blk in enumerate(blocks):
                    members = [w for w in blk if w != u] if bi == 0 else list(blk)
                    if not members:
                        continue
                    groups: dict[int, list[int]] = {}
                    for w in members:
                        groups.setdefault(row_u[w], []).append(w)
                    for val in sorted(groups):
                        seg = groups[val]
                        row.extend([val] * len(seg))
                        new_blocks.append(tuple(seg))
                row_t = tuple(row)
                if best_row is None or row_t < best_row:
                    best_row = row_t
                    survivors = [(assigned + (u,), tuple(new_blocks))]
                elif row_t == best_row:
                    survivors.append((assigned + (u,), tuple(new_blocks)))
        states = survivors
    perm = states[0][0]
    canon = tuple(tuple(b[p][q] for q in perm) for p in perm)
    return canon, perm


def canonical_form(q: Quiver) -> tuple[Quiver, tuple[int, ...]]:
    """Canonical representative of q's relabeling class, with a witness.

    Returns (canonical quiver, perm) where perm maps new positions to
    original 0-based vertices: canonical.b[i][j] == q.b[perm[i]][perm[j]].
    Canonical means the row-major flattening of the matrix is
    lexicographically least over all vertex relabelings.
    """
    canon, perm = _canonical_search(q.b)
    return Quiver(canon), perm


def canonical_key(q: Quiver) -> tuple[int, ...]:
    """Flattened canonical matrix; equal keys iff quivers are isomorphic."""
    canon, _ = _canonical_search(q.b)
    return tuple(x for row in canon for x in row)


# ----------------------------------------------------------------------
# structural predicates


def _neighbors(q: Quiver) -> list[list[int]]:
    return [
        [j for j in range(q.n) if q.b[i][j] != 0]
        for i in range(q.n)
    ]


def is_connected(q: Quiver) -> bool:
    adj = _neighbors(q)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == q.n


def is_acyclic(q: Quiver) -> bool:
    """True iff the quiver has no oriented cycle."""
    n = q.n
    indegree = [0] * n
    for i in range(n):
        for j in range(n):
            if q.b[i][j] > 0:
                indegree[j] += 1
    queue = [i for i in range(n) if indegree[i] == 0]
    removed = 0
    while queue:
        i = queue.pop()
        removed += 1
        for j in range(n):
            if q.b[i][j] > 0:
                indegree[j] -= 1
                if indegree[j] == 0:
                    queue.append(j)
    return removed == n


def dynkin_type(q: Quiver) -> DynkinType | None:
    """The simply-laced Dynkin type of the underlying graph, if any.

    Returns a type exactly when the quiver is connected, all arrow
    multiplicities are 1, and the underlying unoriented graph is an
    A/D/E tree.  Orientation never matters.  None otherwise.
    """
    n = q.n
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(q.b[i][j]) > 1:
                return None
            if q.b[i][j] != 0:
                edges += 1
    if edges != n - 1 or not is_connected(q):
        return None
    adj = _neighbors(q)
    degrees = [len(a) for a in adj]
    if max(degrees) <= 2:
        return DynkinType("A", n)
    if max(degrees) > 3 or degrees.count(3) != 1:
        return None
    center = degrees.index(3)
    arm_lengths = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        arm_lengths.append(length)
    arm_lengths.sort()
    a, bb, c = arm_lengths
    if a == 1 and bb == 1:
        return DynkinType("D", n)
    if (a, bb) == (1, 2) and c in (2, 3, 4):
        return DynkinType("E", n)
    return None


# ----------------------------------------------------------------------
# external formats


def quiver_to_data(q: Quiver) -> dict:
    return {"n": q.n, "arrows": [list(a) for a in arrows(q)]}


def quiver_from_data(data: object) -> Quiver:
    if not isinstance(data, dict):
        raise QuiverFormatError("quiver data must be a JSON object")
    extra = set(data) - {"n", "arrows"}
    if extra:
        raise QuiverFormatError(f"unexpected keys {sorted(extra)} in quiver data")
    if "n" not in data or "arrows" not in data:
        raise QuiverFormatError('quiver data needs "n" and "arrows"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise QuiverFormatError('"n" must be an integer')
    arrow_list = data["arrows"]
    if not isinstance(arrow_list, list):
        raise QuiverFormatError('"arrows" must be a list')
    for entry in arrow_list:
        if not isinstance(entry, list) or len(entry) != 3 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in entry
        ):
            raise QuiverFormatError(f"arrow entry {entry!r} must be [source, target, multiplicity]")
    return Quiver.from_arrows(n, arrow_list)


def parse_quiver(text: str) -> Quiver:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverFormatError(f"invalid JSON: {exc}") from exc
    return quiver_from_data(data)


def serialize_quiver(q: Quiver) -> str:
    return json.dumps(quiver_to_data(q), separators=(", ", ": "))


def to_dot(q: Quiver, name: str = "quiver") -> str:
    """DOT digraph; an arrow of multiplicity m becomes m parallel edges."""
    lines = [f"digraph {name} {{"]
    for i in range(1, q.n + 1):
        lines.append(f"  {i};")
    for s, t, m in arrows(q):
        lines.extend([f"  {s} -> {t};"] * m)
    lines.append("}")
    return "\n".join(lines) + "\n"
