"""Simple undirected graphs, vertex deletion, connectivity and graph6 I/O."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "new_graph",
    "delete_vertices",
    "is_connected",
    "vertex_connectivity_at_least",
    "cut_vertices",
    "components",
    "parse_graph6",
    "to_graph6",
]


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Neighbourhoods are stored as integer bitmasks; ``adj(v)`` exposes them as
    frozensets.
    """

    __slots__ = ("_n", "_masks", "_hash")

    def __init__(self, n: int, masks: Iterable[int]):
        masks = tuple(masks)
        if n < 0 or len(masks) != n:
            raise GraphError(f"expected {n} neighbourhood masks, got {len(masks)}")
        self._n = n
        self._masks = masks
        self._hash: int | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def adj(self, v: int) -> frozenset[int]:
        m = self._masks[v]
        return frozenset(i for i in range(self._n) if m >> i & 1)

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u in range(self._n):
            m = self._masks[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def validate(self) -> None:
        """Raise :class:`GraphError` if loops or asymmetric adjacency exist."""
        full = (1 << self._n) - 1
        for v, m in enumerate(self._masks):
            if m & ~full:
                raise GraphError(f"vertex {v} has out-of-range neighbour", v)
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}", v)
            for u in range(self._n):
                if m >> u & 1 and not self._masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{u}", v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._masks))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    masks = [0] * n
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge #{i} ({u}, {v}) has a vertex out of range 0..{n - 1}", i)
        if u == v:
            raise GraphError(f"edge #{i} ({u}, {v}) is a self-loop", i)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks)


def _induced_by_mask(g: Graph, keep: int) -> Graph:
    # order-preserving relabel of the vertices set in `keep`
    kept = [v for v in range(g.n) if keep >> v & 1]
    pos = {v: i for i, v in enumerate(kept)}
    masks = []
    for v in kept:
        m = g.masks[v] & keep
        nm = 0
        while m:
            low = m & -m
            nm |= 1 << pos[low.bit_length() - 1]
            m ^= low
        masks.append(nm)
    return Graph(len(kept), masks)


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``s``, relabelled in order."""
    drop = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}", v)
        drop |= 1 << v
    if not drop:
        return g
    return _induced_by_mask(g, ((1 << g.n) - 1) & ~drop)


def _reach(masks: tuple[int, ...], alive: int, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected_within(g: Graph, alive: int) -> bool:
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    return _reach(g.masks, alive, start) == alive


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by lowest vertex."""
    alive = (1 << g.n) - 1
    out = []
    while alive:
        start = (alive & -alive).bit_length() - 1
        comp = _reach(g.masks, alive, start)
        out.append(comp)
        alive &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one component (n=0 counts as connected)."""
    return _connected_within(g, (1 << g.n) - 1)


def vertex_connectivity_at_least(g: Graph, c: int) -> bool:
    """Whether ``g`` is ``c``-connected.

    Requires ``n > c`` and that deleting any set of fewer than ``c`` vertices
    leaves a connected graph. Every subset of size ``< c`` is tried, so the
    cost is O(n^c) connectivity checks; fine for c <= 4 at the sizes used here.
    """
    if c < 0:
        raise ValueError("c must be non-negative")
    if g.n <= c:
        return False
    full = (1 << g.n) - 1
    for size in range(c):
        for removed in combinations(range(g.n), size):
            alive = full
            for v in removed:
                alive &= ~(1 << v)
            if not _connected_within(g, alive):
                return False
    return True


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose deletion increases the number of components."""
    base = len(components(g))
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        alive = full & ~(1 << v)
        count = 0
        while alive:
            start = (alive & -alive).bit_length() - 1
            alive &= ~_reach(g.masks, alive, start)
            count += 1
        # removing an isolated vertex lowers the count; not a cut vertex
        if count > base:
            out.append(v)
    return out


def to_graph6(g: Graph) -> str:
    """Short-form graph6 encoding (no trailing newline)."""
    n = g.n
    if n > 62:
        raise GraphError(f"graph6 short form supports n <= 62, got {n}")
    bits = []
    for j in range(1, n):
        mj = g.masks[j]
        for i in range(j):
            bits.append(mj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(line: str | bytes) -> Graph:
    """Parse one short-form graph6 line; a trailing newline is allowed.

    Padding bits in the last byte are ignored.
    """
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    s = line.rstrip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    if not s:
        raise Graph6Error("empty graph6 line", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}",
                          base + len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 data", base + 1 + need)
    masks = [0] * n
    k = 0
    i, j = 0, 1
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if val >> shift & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, masks)
