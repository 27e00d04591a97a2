"""Core graph and edge-coloring types.

Graphs are stored as one integer bit-row per vertex (bit j of ``rows[v]`` is
the edge v-j).  Edge colorings of K_n keep a flat upper-triangle array in
column-major pair order, the same order graph6 uses:
(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
"""

from __future__ import annotations

import itertools

_M64 = (1 << 64) - 1


def pair_index(u: int, v: int) -> int:
    """Index of the unordered pair {u, v} in column-major order."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_iter(n: int):
    """All vertex pairs of K_n in column-major order (matches pair_index)."""
    for v in range(n):
        for u in range(v):
            yield u, v


def bits_of(mask: int):
    """Vertices of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bit-row adjacency."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[int] | None = None):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        self.n = n
        self.rows = [0] * n if rows is None else rows

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def copy(self) -> "Graph":
        return Graph(self.n, list(self.rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("no loops")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def remove_edge(self, u: int, v: int) -> None:
        self.rows[u] &= ~(1 << v)
        self.rows[v] &= ~(1 << u)

    def toggle_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("no loops")
        self.rows[u] ^= 1 << v
        self.rows[v] ^= 1 << u

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        for u, v in pair_iter(self.n):
            if self.rows[u] >> v & 1:
                yield u, v

    def codegree(self, u: int, v: int) -> int:
        return (self.rows[u] & self.rows[v]).bit_count()

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [(full ^ r ^ (1 << v)) for v, r in enumerate(self.rows)])

    def relabel(self, perm) -> "Graph":
        """New graph with vertex v renamed perm[v]."""
        out = Graph(self.n)
        for u, v in self.edges():
            out.add_edge(perm[u], perm[v])
        return out

    def induced(self, vertices) -> "Graph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        out = Graph(len(vs)) if vs else Graph(1)
        for i, v in enumerate(vs):
            for w in bits_of(self.rows[v]):
                if w in pos and pos[w] > i:
                    out.add_edge(i, pos[w])
        return out

    def add_vertex(self, neighborhood: int) -> "Graph":
        """New graph with vertex n appended, adjacent to the bitmask given."""
        if neighborhood >> self.n:
            raise ValueError("neighborhood mask out of range")
        rows = [r | ((neighborhood >> v & 1) << self.n) for v, r in enumerate(self.rows)]
        rows.append(neighborhood)
        return Graph(self.n + 1, rows)

    def delete_vertex(self, x: int) -> "Graph":
        keep = [v for v in range(self.n) if v != x]
        return self.induced(keep)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, tuple(self.rows)))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


class MultiColoring:
    """An r-edge-coloring of K_n; colors run 1..r, pairs in column-major order."""

    __slots__ = ("n", "r", "colors")

    def __init__(self, n: int, r: int, colors: list[int] | None = None):
        if n < 1:
            raise ValueError("coloring needs at least one vertex")
        if not 1 <= r <= 8:
            raise ValueError("supported color counts are 1..8")
        m = n * (n - 1) // 2
        if colors is None:
            colors = [1] * m
        if len(colors) != m:
            raise ValueError("color array length must be n*(n-1)/2")
        if any(not 1 <= c <= r for c in colors):
            raise ValueError("edge colors must lie in 1..r")
        self.n = n
        self.r = r
        self.colors = colors

    def copy(self) -> "MultiColoring":
        return MultiColoring(self.n, self.r, list(self.colors))

    def get(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no self-pair colors")
        return self.colors[pair_index(u, v)]

    def set_color(self, u: int, v: int, c: int) -> None:
        if u == v:
            raise ValueError("no self-pair colors")
        if not 1 <= c <= self.r:
            raise ValueError("color out of range")
        self.colors[pair_index(u, v)] = c

    def color_class(self, c: int) -> Graph:
        return self.union_graph((c,))

    def union_graph(self, color_set) -> Graph:
        """Graph of all edges whose color lies in color_set."""
        want = set(color_set)
        g = Graph(self.n)
        idx = 0
        for v in range(self.n):
            for u in range(v):
                if self.colors[idx] in want:
                    g.rows[u] |= 1 << v
                    g.rows[v] |= 1 << u
                idx += 1
        return g

    def relabel(self, perm) -> "MultiColoring":
        out = MultiColoring(self.n, self.r)
        for u, v in pair_iter(self.n):
            out.colors[pair_index(perm[u], perm[v])] = self.colors[pair_index(u, v)]
        return out

    def permute_colors(self, mapping) -> "MultiColoring":
        """New coloring with color c renamed mapping[c] (mapping is 1-based)."""
        return MultiColoring(self.n, self.r, [mapping[c] for c in self.colors])

    def add_vertex(self, edge_colors) -> "MultiColoring":
        """New coloring with vertex n appended; edge_colors[v] colors edge (v, n)."""
        ec = list(edge_colors)
        if len(ec) != self.n:
            raise ValueError("need one color per existing vertex")
        return MultiColoring(self.n + 1, self.r, self.colors + ec)

    def delete_vertex(self, x: int) -> "MultiColoring":
        keep = [v for v in range(self.n) if v != x]
        out = MultiColoring(self.n - 1, self.r)
        for i, u in enumerate(keep):
            for j in range(i):
                out.colors[pair_index(j, i)] = self.get(keep[j], u)
        return out

    def color_counts(self) -> list[int]:
        """Number of edges per color, index 0 unused."""
        counts = [0] * (self.r + 1)
        for c in self.colors:
            counts[c] += 1
        return counts

    def __eq__(self, other):
        return (
            isinstance(other, MultiColoring)
            and (self.n, self.r) == (other.n, other.r)
            and self.colors == other.colors
        )

    def __hash__(self):
        return hash((self.n, self.r, tuple(self.colors)))

    def __repr__(self):
        return f"MultiColoring(n={self.n}, r={self.r})"


def complement(g: Graph) -> Graph:
    return g.complement()


def coloring_from_graph(g: Graph, r: int = 2) -> MultiColoring:
    """2-coloring view of a graph: its edges get color 1, non-edges color 2."""
    mc = MultiColoring(g.n, r)
    for i, (u, v) in enumerate(pair_iter(g.n)):
        mc.colors[i] = 1 if g.has_edge(u, v) else 2
    return mc


def _mix64(x: int) -> int:
    """splitmix64 finalizer; a fixed bijection on 64-bit words."""
    x = (x + 0x9E3779B97F4A7C15) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


def edge_color_hash(index: int, color: int) -> int:
    """Per-(pair, color) hash term; XOR of these terms forms the state hash."""
    return _mix64(((index + 1) << 4) | color)


def state_hash(mc: MultiColoring) -> int:
    """64-bit hash of the labeled coloring.

    XOR-combined per-edge terms, so recoloring one edge updates the hash by
    XORing out the old term and in the new one.  Not canonical: relabelings
    hash differently by design.
    """
    h = _mix64((mc.n << 20) ^ (mc.r << 8) ^ 0x5EED)
    for i, c in enumerate(mc.colors):
        h ^= edge_color_hash(i, c)
    return h


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    m = n * (n - 1) // 2
    pairs = list(pair_iter(n))
    for bits in range(1 << m):
        g = Graph(n)
        for i in range(m):
            if bits >> i & 1:
                g.add_edge(*pairs[i])
        yield g


def all_colorings(n: int, r: int):
    """Every labeled r-coloring of K_n (r^C(n,2) of them)."""
    m = n * (n - 1) // 2
    for combo in itertools.product(range(1, r + 1), repeat=m):
        yield MultiColoring(n, r, list(combo))
