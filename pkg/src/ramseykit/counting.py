"""Exact scoring functions: book, wheel, and clique counts plus the GR score.

Each counter comes in a full form and a single-edge-delta form.  Deltas
enumerate only the copies through the toggled edge, so a search step costs
far less than a recount.  Counts are plain Python ints (arbitrary
precision), so the overflow cases other implementations must guard against
cannot arise here.

Counting conventions: books are spine-labeled (one count per choice of
spine edge and page set) and wheels are hub-labeled (one count per hub and
rim cycle, directions quotiented out).  Either count is zero exactly when
the shape is absent, which is all the searches need.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import InputError
from .graphs import Graph, MultiColoring, bits_of
from .problems import Book, Clique, GeneralizedProblem, Shape, Wheel


class BinomialTable:
    """Dense C(m, k) lookup for 0 <= m, k <= limit; out-of-table falls back
    to math.comb, and k > m or k < 0 gives 0."""

    __slots__ = ("limit", "rows")

    def __init__(self, limit: int = 64):
        self.limit = limit
        self.rows = [[comb(m, k) for k in range(m + 1)] for m in range(limit + 1)]

    def __call__(self, m: int, k: int) -> int:
        if k < 0 or k > m:
            return 0
        if m <= self.limit:
            return self.rows[m][k]
        return comb(m, k)


_C = BinomialTable()


class CodegreeCache:
    """Matrix of |N(u) ∩ N(v)| kept current across edge toggles."""

    __slots__ = ("n", "cd")

    def __init__(self, g: Graph):
        self.n = g.n
        rows = g.rows
        self.cd = [[(rows[u] & rows[v]).bit_count() for v in range(g.n)] for u in range(g.n)]

    def entry(self, u: int, v: int) -> int:
        return self.cd[u][v]

    def apply_toggle(self, g: Graph, u: int, v: int) -> None:
        """Update after edge (u,v) was toggled in g (call with g already new)."""
        d = 1 if g.has_edge(u, v) else -1
        cd = self.cd
        cd[u][u] += d  # diagonal entries are degrees
        cd[v][v] += d
        for x in bits_of(g.rows[v] & ~(1 << u)):
            cd[u][x] += d
            cd[x][u] += d
        for x in bits_of(g.rows[u] & ~(1 << v)):
            cd[v][x] += d
            cd[x][v] += d

    def consistent_with(self, g: Graph) -> bool:
        rows = g.rows
        return all(
            self.cd[u][v] == (rows[u] & rows[v]).bit_count()
            for u in range(self.n)
            for v in range(self.n)
        )


def count_books(g: Graph, k: int) -> int:
    """Spine-labeled B_k count: sum over edges of C(codegree, k)."""
    if k < 1:
        raise InputError("book page count must be at least 1")
    rows = g.rows
    total = 0
    for u, v in g.edges():
        total += _C((rows[u] & rows[v]).bit_count(), k)
    return total


def book_toggle_delta(g: Graph, u: int, v: int, k: int, cache: CodegreeCache | None = None) -> int:
    """Change in count_books if edge (u,v) were toggled.  Pure; O(n)."""
    rows = g.rows
    if cache is None:
        def cd(a, b):
            return (rows[a] & rows[b]).bit_count()
    else:
        cd = cache.entry
    common = rows[u] & rows[v]
    if g.has_edge(u, v):
        total = _C(cd(u, v), k)
        for x in bits_of(common):
            total += _C(cd(u, x) - 1, k - 1) + _C(cd(v, x) - 1, k - 1)
        return -total
    total = _C(cd(u, v), k)
    for x in bits_of(common):
        total += _C(cd(u, x), k - 1) + _C(cd(v, x), k - 1)
    return total


def _check_toggle(g: Graph, edge, toggle: str) -> tuple[int, int]:
    u, v = edge
    if toggle not in ("add", "remove"):
        raise InputError(f"toggle must be 'add' or 'remove', got {toggle!r}")
    if g.has_edge(u, v) == (toggle == "add"):
        raise InputError(f"edge ({u},{v}) does not respect toggle {toggle!r}")
    return u, v


def book_delta(g: Graph, cache: CodegreeCache, edge, toggle: str, k: int) -> int:
    """Apply the toggle to g and cache; return the signed book-count change."""
    u, v = _check_toggle(g, edge, toggle)
    delta = book_toggle_delta(g, u, v, k, cache)
    g.toggle_edge(u, v)
    cache.apply_toggle(g, u, v)
    return delta


def _peel_2core(rows: list[int], mask: int) -> int:
    """Drop vertices with fewer than 2 neighbors inside mask, repeatedly.
    Cycles survive, so cycle counts are unchanged."""
    while True:
        drop = 0
        for x in bits_of(mask):
            if (rows[x] & mask).bit_count() < 2:
                drop |= 1 << x
        if not drop:
            return mask
        mask &= ~drop


def _count_paths(rows: list[int], inter: int, a: int, b: int, length: int) -> int:
    """Simple paths a -> b with exactly `length` edges, interior vertices
    drawn from the mask `inter` (which must exclude a and b)."""
    if length == 1:
        return rows[a] >> b & 1
    total = 0

    def dfs(x: int, avail: int, remaining: int) -> None:
        nonlocal total
        if remaining == 1:
            total += rows[x] >> b & 1
            return
        for w in bits_of(rows[x] & avail):
            dfs(w, avail & ~(1 << w), remaining - 1)

    dfs(a, inter, length)
    return total


def _count_cycles(rows: list[int], mask: int, length: int) -> int:
    """Cycles of the given length with all vertices inside mask."""
    if length < 3:
        raise InputError("cycles need length at least 3")
    mask = _peel_2core(rows, mask)
    if mask.bit_count() < length:
        return 0
    total = 0
    for s in bits_of(mask):
        higher = mask & ~((1 << (s + 1)) - 1)
        # cycles whose minimum vertex is s: paths back to s through larger vertices
        for w in bits_of(rows[s] & higher):
            total += _count_paths(rows, higher & ~(1 << w), w, s, length - 1)
    return total // 2


def _count_cycles_through(rows: list[int], mask: int, x: int, length: int) -> int:
    """Cycles of the given length inside mask that pass through vertex x."""
    total = 0
    for w in bits_of(rows[x] & mask & ~(1 << x)):
        total += _count_paths(rows, mask & ~(1 << x) & ~(1 << w), w, x, length - 1)
    return total // 2


def count_wheels(g: Graph, k: int) -> int:
    """Hub-labeled W_k count: rim cycles of length k-1 inside each
    neighborhood, each cycle counted once."""
    if k < 4:
        raise InputError("wheel order must be at least 4")
    return sum(_count_cycles(g.rows, g.rows[h], k - 1) for h in range(g.n))


def wheel_toggle_delta(g: Graph, u: int, v: int, k: int) -> int:
    """Change in count_wheels if edge (u,v) were toggled.  Pure.

    Wheels through the edge come in two kinds: it is a rim edge (hub in the
    common neighborhood; rim completions are u-v paths inside the hub's
    neighborhood) or a spoke (hub u with v on the rim, or vice versa; rim
    completions are cycles through the far endpoint).
    """
    rows = g.rows
    L = k - 1
    both = ~(1 << u) & ~(1 << v)
    total = 0
    for h in bits_of(rows[u] & rows[v]):
        total += _count_paths(rows, rows[h] & both, u, v, L - 1)
    total += _count_cycles_through(rows, (rows[u] | (1 << v)) & ~(1 << u), v, L)
    total += _count_cycles_through(rows, (rows[v] | (1 << u)) & ~(1 << v), u, L)
    return -total if g.has_edge(u, v) else total


def wheel_delta(g: Graph, edge, toggle: str, k: int) -> int:
    """Apply the toggle to g; return the signed wheel-count change."""
    u, v = _check_toggle(g, edge, toggle)
    delta = wheel_toggle_delta(g, u, v, k)
    g.toggle_edge(u, v)
    return delta


def count_cliques_in_mask(rows: list[int], mask: int, s: int) -> int:
    """Number of K_s with all vertices inside mask.

    Pivot recursion over a shrinking candidate set: the pivot branch defers
    its vertex, link branches commit theirs, and each clique surfaces at
    exactly one leaf as the links plus a subset of the deferred pivots.
    """
    if s < 0:
        return 0
    if s == 0:
        return 1
    if s == 1:
        return mask.bit_count()
    total = 0

    def rec(P: int, p: int, e: int) -> None:
        nonlocal total
        if e == s:
            total += 1
            return
        if not P:
            total += _C(p, s - e)
            return
        u, best = -1, -1
        for x in bits_of(P):
            c = (rows[x] & P).bit_count()
            if c > best:
                best, u = c, x
        rec(P & rows[u], p + 1, e)
        P &= ~(1 << u)
        for w in bits_of(P & ~rows[u]):
            rec(P & rows[w], p, e + 1)
            P &= ~(1 << w)

    rec(mask, 0, 0)
    return total


def count_cliques(g: Graph, s: int) -> int:
    if s < 2:
        raise InputError("clique order must be at least 2")
    return count_cliques_in_mask(g.rows, (1 << g.n) - 1, s)


def count_cliques_at_edge(g: Graph, edge, s: int) -> int:
    """Number of K_s containing the given edge; zero when the edge is absent."""
    if s < 2:
        raise InputError("clique order must be at least 2")
    u, v = edge
    if not g.has_edge(u, v):
        return 0
    return count_cliques_in_mask(g.rows, g.rows[u] & g.rows[v], s - 2)


def clique_toggle_delta(g: Graph, u: int, v: int, s: int) -> int:
    """Change in count_cliques if edge (u,v) were toggled.  Pure."""
    completions = count_cliques_in_mask(g.rows, g.rows[u] & g.rows[v], s - 2)
    return -completions if g.has_edge(u, v) else completions


def count_shape(g: Graph, shape: Shape) -> int:
    if isinstance(shape, Book):
        return count_books(g, shape.k)
    if isinstance(shape, Wheel):
        return count_wheels(g, shape.k)
    if isinstance(shape, Clique):
        return count_cliques(g, shape.k)
    raise InputError(f"unknown shape {shape!r}")


def shape_toggle_delta(g: Graph, u: int, v: int, shape: Shape) -> int:
    if isinstance(shape, Book):
        return book_toggle_delta(g, u, v, shape.k)
    if isinstance(shape, Wheel):
        return wheel_toggle_delta(g, u, v, shape.k)
    if isinstance(shape, Clique):
        return clique_toggle_delta(g, u, v, shape.k)
    raise InputError(f"unknown shape {shape!r}")


def _union_rows(mc: MultiColoring, color_set) -> list[int]:
    return mc.union_graph(color_set).rows


def gr_score(mc: MultiColoring, s: int, t: int) -> int:
    """Sum over t-subsets of colors of the K_s count in their union graph.

    A K_s spanning c <= t colors is counted once per covering t-subset;
    the multi-count is deliberate (worse violations score higher).  Zero
    exactly when every K_s uses more than t colors.
    """
    GeneralizedProblem(mc.r, s, t)  # range checks; needs mc.r > t
    full = (1 << mc.n) - 1
    total = 0
    for cset in combinations(range(1, mc.r + 1), t):
        total += count_cliques_in_mask(_union_rows(mc, cset), full, s)
    return total


def gr_recolor_delta(mc: MultiColoring, u: int, v: int, new_color: int, s: int, t: int) -> int:
    """Change in gr_score if edge (u,v) were recolored.  Pure.

    Only t-subsets containing exactly one of {old color, new color} change;
    each gains or loses the K_s through the edge in its union graph.
    """
    old = mc.get(u, v)
    if new_color == old:
        return 0
    if not 1 <= new_color <= mc.r:
        raise InputError("color out of range")
    others = [c for c in range(1, mc.r + 1) if c != old and c != new_color]
    delta = 0
    for rest in combinations(others, t - 1):
        rows = _union_rows(mc, rest + (new_color,))
        delta += count_cliques_in_mask(rows, rows[u] & rows[v], s - 2)
        rows = _union_rows(mc, rest + (old,))
        delta -= count_cliques_in_mask(rows, rows[u] & rows[v], s - 2)
    return delta


def gr_delta(mc: MultiColoring, edge, new_color: int, s: int, t: int) -> int:
    """Apply the recoloring; return the signed gr_score change."""
    u, v = edge
    if new_color == mc.get(u, v):
        raise InputError("new color must differ from the current color")
    delta = gr_recolor_delta(mc, u, v, new_color, s, t)
    mc.set_color(u, v, new_color)
    return delta
