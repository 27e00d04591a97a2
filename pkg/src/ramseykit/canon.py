"""Canonical forms for graphs and edge colorings.

Ordered-partition refinement with backtracking individualization.  The key
is the lexicographically smallest byte string of the upper-triangle color
matrix (column-major pair order) over all vertex orderings, and optionally
over color permutations for multicolorings.  Three prunings keep the tree
small: equitable refinement, comparison of the forced prefix against the
incumbent, and orbits of automorphisms discovered at equal-best leaves.

Exact canonicalization is capped at 32 vertices; larger inputs raise
CapabilityError rather than silently taking forever.
"""

from __future__ import annotations

import itertools

from .errors import CapabilityError
from .graphs import Graph, MultiColoring, pair_iter

N_CAP = 32


class _Search:
    """One backtracking canonical-labeling run over a fixed color matrix."""

    __slots__ = ("n", "val", "masks", "best", "best_order", "gens")

    def __init__(self, n: int, val: list[list[int]], masks: list[list[int]]):
        self.n = n
        self.val = val
        self.masks = masks
        self.best: bytes | None = None
        self.best_order: list[int] | None = None
        self.gens: list[tuple[int, ...]] = []

    def run(self) -> tuple[bytes, tuple[int, ...]]:
        cells = self._refine([list(range(self.n))])
        self._descend(cells, [])
        return self.best, tuple(self.best_order)

    def _refine(self, cells: list[list[int]]) -> list[list[int]]:
        masks = self.masks
        while True:
            cellmasks = [0] * len(cells)
            for i, cell in enumerate(cells):
                for v in cell:
                    cellmasks[i] |= 1 << v
            out = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[tuple[int, ...], list[int]] = {}
                for v in cell:
                    sig = tuple(
                        (m[v] & cm).bit_count() for m in masks for cm in cellmasks
                    )
                    groups.setdefault(sig, []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        out.append(groups[key])
            cells = out
            if not changed:
                return cells

    def _prefix(self, order: list[int], q: int) -> bytes:
        val = self.val
        return bytes(val[order[i]][order[j]] for j in range(q) for i in range(j))

    def _descend(self, cells: list[list[int]], path: list[int]) -> None:
        n = self.n
        q = 0
        while q < len(cells) and len(cells[q]) == 1:
            q += 1
        order = [cells[i][0] for i in range(q)]
        if self.best is not None:
            pre = self._prefix(order, q)
            if pre > self.best[: len(pre)]:
                return
        if q == len(cells):
            s = self._prefix(order, n)
            if self.best is None or s < self.best:
                self.best = s
                self.best_order = order
            elif s == self.best:
                g = [0] * n
                for i in range(n):
                    g[self.best_order[i]] = order[i]
                self.gens.append(tuple(g))
            return
        target = cells[q]
        tried: list[int] = []
        for v in target:
            if tried and self._same_orbit(v, tried, path):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            child = cells[:q] + [[v], rest] + cells[q + 1 :]
            self._descend(self._refine(child), path + [v])

    def _same_orbit(self, v: int, tried: list[int], path: list[int]) -> bool:
        """Is v equivalent to an already-branched vertex under automorphisms
        that fix the individualized path pointwise?"""
        gens = [g for g in self.gens if all(g[x] == x for x in path)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for a in range(self.n):
                ra, rb = find(a), find(g[a])
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(w) == rv for w in tried)


def _canon_vals(n: int, vals: list[int], colors: list[int]) -> tuple[bytes, tuple[int, ...]]:
    """Canonicalize a flat pair-indexed color array; colors lists the values
    used for refinement masks."""
    if n == 1:
        return b"", (0,)
    if len(set(vals)) == 1:
        return bytes(vals), tuple(range(n))
    val = [[0] * n for _ in range(n)]
    masks = {c: [0] * n for c in colors}
    for (u, v), c in zip(pair_iter(n), vals):
        val[u][v] = val[v][u] = c
        if c in masks:
            masks[c][u] |= 1 << v
            masks[c][v] |= 1 << u
    return _Search(n, val, [masks[c] for c in colors]).run()


def _check_cap(n: int) -> None:
    if n > N_CAP:
        raise CapabilityError(f"exact canonical form capped at {N_CAP} vertices, got {n}")


def canonical_form(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical key and one ordering that attains it (vertex at position i)."""
    _check_cap(g.n)
    vals = [g.rows[u] >> v & 1 for u, v in pair_iter(g.n)]
    key, order = _canon_vals(g.n, vals, [1])
    return b"G" + bytes([g.n]) + key, order


def canonical_key(g: Graph) -> bytes:
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative: g relabeled into its canonical order."""
    _, order = canonical_form(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def coloring_canonical_key(mc: MultiColoring, swap_colors: bool = True) -> bytes:
    """Canonical key of a coloring under vertex relabeling, and under color
    permutation too when swap_colors is set.

    All r! color permutations are tried; completeness over cleverness.
    """
    _check_cap(mc.n)
    color_range = range(1, mc.r + 1)
    if swap_colors:
        perms = itertools.permutations(color_range)
    else:
        perms = [tuple(color_range)]
    best = None
    for perm in perms:
        remap = {old: perm[old - 1] for old in color_range}
        vals = [remap[c] for c in mc.colors]
        key, _ = _canon_vals(mc.n, vals, list(color_range))
        if best is None or key < best:
            best = key
    return b"C" + bytes([mc.n, mc.r]) + best


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_key(a) == canonical_key(b)
