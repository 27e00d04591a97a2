"""Deliberately slow reference counters.

Everything here enumerates vertex subsets directly and re-checks adjacency
pair by pair.  The production counters in :mod:`ramseykit.counting` use
codegrees, DFS path extension and pivot recursion instead, so agreement
between the two families is meaningful evidence of correctness.  Only the
test suite should import this module.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb

from .graphs import Graph, MultiColoring


def count_books_naive(g: Graph, k: int) -> int:
    """Spine-labeled B_k count via (k+2)-subset enumeration."""
    total = 0
    for sub in combinations(range(g.n), k + 2):
        for u, v in combinations(sub, 2):
            if not g.has_edge(u, v):
                continue
            if all(g.has_edge(u, w) and g.has_edge(v, w) for w in sub if w not in (u, v)):
                total += 1
    return total


def count_wheels_naive(g: Graph, k: int) -> int:
    """Hub-labeled W_k count via rim permutations (each cycle seen 2 ways)."""
    total = 0
    for hub in range(g.n):
        nbrs = [v for v in range(g.n) if g.has_edge(hub, v)]
        for rim in combinations(nbrs, k - 1):
            anchor, rest = rim[0], rim[1:]
            for perm in permutations(rest):
                cyc = (anchor,) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
                    total += 1
    return total // 2


def count_cliques_naive(g: Graph, s: int) -> int:
    total = 0
    for sub in combinations(range(g.n), s):
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
            total += 1
    return total


def gr_score_naive(mc: MultiColoring, s: int, t: int) -> int:
    """Sum over K_s subsets of the number of t-color-subsets covering them.

    A subset using exactly c <= t distinct colors is covered by comb(r-c, t-c)
    of the t-subsets, matching the production score's multi-counting.
    """
    total = 0
    for sub in combinations(range(mc.n), s):
        used = {mc.get(u, v) for u, v in combinations(sub, 2)}
        c = len(used)
        if c <= t:
            total += comb(mc.r - c, t - c)
    return total
