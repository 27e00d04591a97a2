"""Tabu local search over edge recolorings.

One engine serves both problem kinds: two-color problems run as r=2
colorings (color 1 is the graph, color 2 the complement).  Each step
evaluates every single-edge recoloring, skips candidates whose state hash
was ever visited (the tabu set grows without bound), and applies a
minimum-score candidate with uniform random tie-breaking.  Runs never
restart; a neighborhood with every candidate tabu ends the run as stalled.

Scores are maintained incrementally through the counters' delta forms and
audited against a full recount every 2**14 steps.
"""

from __future__ import annotations

import multiprocessing
import random
import time
from dataclasses import dataclass
from itertools import combinations

from .counting import (
    CodegreeCache,
    book_toggle_delta,
    count_cliques_in_mask,
    count_shape,
    shape_toggle_delta,
)
from .errors import InputError
from .graphs import Graph, MultiColoring, edge_color_hash, pair_iter, state_hash
from .problems import Book, GeneralizedProblem, Problem, TwoColorProblem
from .verify import verify_witness

AUDIT_EVERY = 1 << 14
PROGRESS_EVERY = 10_000


class _TwoColorScorer:
    """Score = left-shape count in the color-1 graph plus right-shape count
    in the color-2 graph.  Books get a codegree cache; other shapes do not
    need one."""

    def __init__(self, problem: TwoColorProblem, mc: MultiColoring):
        self.shapes = (problem.left, problem.right)
        self.graphs = (mc.color_class(1), mc.color_class(2))
        self.caches = tuple(
            CodegreeCache(g) if isinstance(shape, Book) else None
            for shape, g in zip(self.shapes, self.graphs)
        )
        self.mc = mc

    def full_score(self) -> int:
        return sum(count_shape(g, s) for g, s in zip(self.graphs, self.shapes))

    def delta(self, u: int, v: int, new_color: int) -> int:
        # any recolor toggles the edge in both graphs; presence is auto-detected
        total = 0
        for shape, g, cache in zip(self.shapes, self.graphs, self.caches):
            if isinstance(shape, Book):
                total += book_toggle_delta(g, u, v, shape.k, cache)
            else:
                total += shape_toggle_delta(g, u, v, shape)
        return total

    def apply(self, u: int, v: int, new_color: int) -> None:
        self.mc.set_color(u, v, new_color)
        for g, cache in zip(self.graphs, self.caches):
            g.toggle_edge(u, v)
            if cache is not None:
                cache.apply_toggle(g, u, v)

    def witness(self) -> Graph:
        return self.graphs[0].copy()


class _GRScorer:
    """GR score over per-color adjacency rows; deltas touch only the union
    graphs holding exactly one of the two colors involved."""

    def __init__(self, problem: GeneralizedProblem, mc: MultiColoring):
        self.s, self.t, self.r = problem.s, problem.t, problem.r
        self.mc = mc
        self.rows = [mc.color_class(c).rows for c in range(1, mc.r + 1)]
        self.full = (1 << mc.n) - 1

    def _union(self, colors) -> list[int]:
        out = list(self.rows[colors[0] - 1])
        for c in colors[1:]:
            cr = self.rows[c - 1]
            out = [a | b for a, b in zip(out, cr)]
        return out

    def full_score(self) -> int:
        total = 0
        for cset in combinations(range(1, self.r + 1), self.t):
            total += count_cliques_in_mask(self._union(cset), self.full, self.s)
        return total

    def delta(self, u: int, v: int, new_color: int) -> int:
        old = self.mc.get(u, v)
        others = [c for c in range(1, self.r + 1) if c != old and c != new_color]
        total = 0
        for rest in combinations(others, self.t - 1):
            rows = self._union(rest + (new_color,))
            total += count_cliques_in_mask(rows, rows[u] & rows[v], self.s - 2)
            rows = self._union(rest + (old,))
            total -= count_cliques_in_mask(rows, rows[u] & rows[v], self.s - 2)
        return total

    def apply(self, u: int, v: int, new_color: int) -> None:
        old = self.mc.get(u, v)
        self.rows[old - 1][u] &= ~(1 << v)
        self.rows[old - 1][v] &= ~(1 << u)
        self.rows[new_color - 1][u] |= 1 << v
        self.rows[new_color - 1][v] |= 1 << u
        self.mc.set_color(u, v, new_color)

    def witness(self) -> MultiColoring:
        return self.mc.copy()


@dataclass
class SearchState:
    problem: Problem
    n: int
    coloring: MultiColoring
    scorer: object
    score: int
    hash: int
    tabu: set
    rng: random.Random
    steps: int = 0
    best_score: int | None = None

    def __post_init__(self):
        self.pairs = list(pair_iter(self.n))
        if self.best_score is None:
            self.best_score = self.score


def init_state(problem: Problem, n: int, seed: int) -> SearchState:
    """Uniform random start; the start state itself enters the tabu set."""
    if n < 2:
        raise InputError("search needs at least 2 vertices")
    r = problem.r
    rng = random.Random(seed)
    m = n * (n - 1) // 2
    mc = MultiColoring(n, r, [rng.randint(1, r) for _ in range(m)])
    if isinstance(problem, TwoColorProblem):
        scorer = _TwoColorScorer(problem, mc)
    else:
        scorer = _GRScorer(problem, mc)
    h = state_hash(mc)
    return SearchState(
        problem=problem,
        n=n,
        coloring=mc,
        scorer=scorer,
        score=scorer.full_score(),
        hash=h,
        tabu={h},
        rng=rng,
    )


def tabu_step(state: SearchState):
    """One steepest-descent move; returns the applied (u, v, new_color, delta)
    or None when every candidate is tabu."""
    if state.score <= 0:
        raise InputError("search is already at score 0")
    r = state.coloring.r
    colors = state.coloring.colors
    best_delta = None
    ties = []
    for i, (u, v) in enumerate(state.pairs):
        old = colors[i]
        base = state.hash ^ edge_color_hash(i, old)
        for new in range(1, r + 1):
            if new == old:
                continue
            cand_hash = base ^ edge_color_hash(i, new)
            if cand_hash in state.tabu:
                continue
            d = state.scorer.delta(u, v, new)
            if best_delta is None or d < best_delta:
                best_delta = d
                ties = [(u, v, new, cand_hash)]
            elif d == best_delta:
                ties.append((u, v, new, cand_hash))
    if best_delta is None:
        return None
    u, v, new, cand_hash = ties[state.rng.randrange(len(ties))] if len(ties) > 1 else ties[0]
    state.scorer.apply(u, v, new)
    state.score += best_delta
    state.hash = cand_hash
    state.tabu.add(cand_hash)
    state.steps += 1
    state.best_score = min(state.best_score, state.score)
    if state.steps % AUDIT_EVERY == 0:
        assert state.score == state.scorer.full_score(), "incremental score drifted"
        assert state.hash == state_hash(state.coloring), "incremental hash drifted"
    return u, v, new, best_delta


@dataclass
class SearchStats:
    steps: int
    elapsed: float
    tabu_size: int
    best_score: int


@dataclass
class SearchOutcome:
    witness: Graph | MultiColoring | None
    reason: str | None            # None on success; else stalled reason
    stats: SearchStats
    seed: int | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def run_search(
    problem: Problem,
    n: int,
    seed: int,
    max_steps: int | None = None,
    max_seconds: float | None = None,
    progress=None,
    worker_id: int = 0,
    stop=None,
) -> SearchOutcome:
    """Iterate tabu_step until score 0, a limit, or exhaustion.  Witnesses are
    re-verified before being returned; never restarts within a run."""
    state = init_state(problem, n, seed)
    start = time.perf_counter()

    def outcome(witness, reason):
        stats = SearchStats(
            steps=state.steps,
            elapsed=time.perf_counter() - start,
            tabu_size=len(state.tabu),
            best_score=state.best_score,
        )
        return SearchOutcome(witness=witness, reason=reason, stats=stats, seed=seed)

    while True:
        if state.score == 0:
            witness = state.scorer.witness()
            verdict = verify_witness(witness, problem)
            assert verdict.valid, "score-0 state failed verification"
            return outcome(witness, None)
        if stop is not None and stop.is_set():
            return outcome(None, "stopped")
        if max_steps is not None and state.steps >= max_steps:
            return outcome(None, "max_steps")
        if max_seconds is not None and time.perf_counter() - start >= max_seconds:
            return outcome(None, "max_seconds")
        if tabu_step(state) is None:
            return outcome(None, "exhausted")
        if progress is not None and state.steps % PROGRESS_EVERY == 0:
            progress(
                f"worker {worker_id}: steps={state.steps} score={state.score} "
                f"best={state.best_score} tabu={len(state.tabu)}"
            )


def _parallel_worker(problem, n, seed, max_steps, max_seconds, stop, queue, worker_id, progress):
    try:
        out = run_search(
            problem,
            n,
            seed,
            max_steps=max_steps,
            max_seconds=max_seconds,
            progress=progress,
            worker_id=worker_id,
            stop=stop,
        )
        if out.found:
            stop.set()
        queue.put((worker_id, out))
    except Exception as exc:  # surface worker crashes instead of hanging the parent
        stop.set()
        queue.put((worker_id, exc))


@dataclass
class ParallelOutcome:
    witness: Graph | MultiColoring | None
    winner_seed: int | None
    outcomes: list[SearchOutcome]
    elapsed: float

    @property
    def found(self) -> bool:
        return self.witness is not None


def run_parallel(
    problem: Problem,
    n: int,
    seeds: list[int],
    max_steps: int | None = None,
    max_seconds: float | None = None,
    progress=None,
) -> ParallelOutcome:
    """One independent run per seed; first witness stops the rest.

    Workers share only the stop flag and the result queue; no tabu set or
    rng crosses process boundaries.
    """
    if not seeds:
        raise InputError("need at least one seed")
    if len(set(seeds)) != len(seeds):
        raise InputError("seeds must be distinct")
    start = time.perf_counter()
    ctx = multiprocessing.get_context()
    stop = ctx.Event()
    queue = ctx.Queue()
    workers = [
        ctx.Process(
            target=_parallel_worker,
            args=(problem, n, seed, max_steps, max_seconds, stop, queue, wid, progress),
            daemon=True,
        )
        for wid, seed in enumerate(seeds)
    ]
    for w in workers:
        w.start()
    outcomes: list[SearchOutcome] = []
    witness = None
    winner_seed = None
    failure = None
    for _ in range(len(workers)):
        try:
            _, out = queue.get(timeout=3600 if max_seconds is None else max_seconds + 120)
        except Exception:
            break
        if isinstance(out, Exception):
            failure = out
            continue
        outcomes.append(out)
        if out.found and witness is None:
            witness = out.witness
            winner_seed = out.seed
    for w in workers:
        w.join(timeout=60)
        if w.is_alive():
            w.terminate()
    if witness is None and failure is not None:
        raise failure
    return ParallelOutcome(
        witness=witness,
        winner_seed=winner_seed,
        outcomes=outcomes,
        elapsed=time.perf_counter() - start,
    )
