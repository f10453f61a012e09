"""Exhaustive depth-first search for N-tilings over exact coordinates."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from ..numerics import TrigContext
from ..numtheory import Triple
from .frontier import (
    Frontier,
    PlacedTile,
    Region,
    apply_placement,
    placements_at_corner,
    region_to_frontier,
    tile_area2,
)

STATUS_FOUND = "found"
STATUS_EXHAUSTED = "exhausted"
STATUS_LIMIT = "limit_hit"


@dataclass(frozen=True)
class SearchConfig:
    allow_mirror: bool = True
    node_limit: int | None = None
    time_limit: float | None = None
    find_all: bool = False
    parallel_depth: int = 0
    threads: int = 0  # 0 = one worker per cpu when parallel_depth > 0

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be nonnegative")
        if self.time_limit is not None and self.time_limit < 0:
            raise ValueError("time_limit must be nonnegative")
        if self.parallel_depth < 0:
            raise ValueError("parallel_depth must be nonnegative")


@dataclass
class SearchResult:
    status: str
    tilings: list[list[PlacedTile]]
    nodes: int
    max_depth: int


class _LimitHit(Exception):
    pass


class _Driver:
    def __init__(self, triple: Triple, cfg: SearchConfig, deadline: float | None):
        self.triple = triple
        self.cfg = cfg
        self.ctx = TrigContext(triple)
        self.area2_tile = tile_area2(triple)
        self.deadline = deadline
        self.nodes = 0
        self.max_depth = 0
        self.tilings: list[list[PlacedTile]] = []

    def _tick(self):
        self.nodes += 1
        if self.cfg.node_limit is not None and self.nodes > self.cfg.node_limit:
            raise _LimitHit
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _LimitHit

    def run(self, stack: tuple[Frontier, ...], placed: list[PlacedTile]):
        self._tick()
        depth = len(placed)
        if depth > self.max_depth:
            self.max_depth = depth
        if not stack:
            self.tilings.append(list(placed))
            return
        front = stack[-1]
        idx = front.select_corner(self.ctx)
        for pl in placements_at_corner(
            front, idx, self.triple, self.ctx, self.cfg.allow_mirror
        ):
            children = apply_placement(front, pl, self.ctx, self.area2_tile)
            if children is None:
                continue
            placed.append(pl)
            self.run(stack[:-1] + tuple(children), placed)
            placed.pop()
            if self.tilings and not self.cfg.find_all:
                return

    def expand_to_depth(self, stack, placed, depth):
        """Deterministic frontier-of-subtrees at the given depth.

        Leaf states are not counted here; the subtree workers count them on
        entry, so node totals match the sequential run.
        """
        if not stack:
            self._tick()
            if len(placed) > self.max_depth:
                self.max_depth = len(placed)
            self.tilings.append(list(placed))
            return []
        if len(placed) >= depth:
            return [(stack, list(placed))]
        self._tick()
        if len(placed) > self.max_depth:
            self.max_depth = len(placed)
        leaves = []
        front = stack[-1]
        idx = front.select_corner(self.ctx)
        for pl in placements_at_corner(
            front, idx, self.triple, self.ctx, self.cfg.allow_mirror
        ):
            children = apply_placement(front, pl, self.ctx, self.area2_tile)
            if children is None:
                continue
            placed.append(pl)
            leaves.extend(self.expand_to_depth(stack[:-1] + tuple(children),
                                               placed, depth))
            placed.pop()
        return leaves


def search(
    region: Region, t: Triple, n: int, cfg: SearchConfig = SearchConfig()
) -> SearchResult:
    """Depth-first search for all-or-first N-tilings of the region.

    The exact area precondition (region area = n * tile area) is checked
    first; on mismatch the search is exhausted with zero nodes.  A node is
    one visited frontier state.  limit_hit is reported whenever a node or
    time budget stops the search; it is never conflated with exhaustion.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ctx = TrigContext(t)
    if region.area2() != tile_area2(t) * n:
        return SearchResult(STATUS_EXHAUSTED, [], 0, 0)
    root = region_to_frontier(region, n, ctx)
    deadline = (
        time.monotonic() + cfg.time_limit if cfg.time_limit is not None else None
    )
    driver = _Driver(t, cfg, deadline)
    status = STATUS_EXHAUSTED
    if cfg.parallel_depth > 0:
        return _parallel_search(driver, root, cfg)
    try:
        driver.run((root,), [])
    except _LimitHit:
        status = STATUS_LIMIT
    if driver.tilings:
        status = STATUS_FOUND
    return SearchResult(status, driver.tilings, driver.nodes, driver.max_depth)


def _parallel_search(driver: _Driver, root: Frontier, cfg: SearchConfig):
    """Explore subtrees below parallel_depth concurrently.

    The subtree list is generated sequentially (deterministic); results are
    merged in that order, so first-found tilings match the sequential run.
    All subtrees are explored even when find_all is false, trading work for
    reproducibility.
    """
    status = STATUS_EXHAUSTED
    try:
        leaves = driver.expand_to_depth((root,), [], cfg.parallel_depth)
    except _LimitHit:
        return SearchResult(STATUS_LIMIT, driver.tilings, driver.nodes,
                            driver.max_depth)
    workers = cfg.threads or (os.cpu_count() or 1)

    def run_leaf(leaf):
        stack, placed = leaf
        sub = _Driver(driver.triple, replace(cfg, parallel_depth=0),
                      driver.deadline)
        try:
            sub.run(stack, list(placed))
        except _LimitHit:
            return sub, True
        return sub, False

    tilings = list(driver.tilings)
    nodes = driver.nodes
    max_depth = driver.max_depth
    hit = False
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for sub, sub_hit in pool.map(run_leaf, leaves):
            nodes += sub.nodes
            max_depth = max(max_depth, sub.max_depth)
            tilings.extend(sub.tilings)
            hit = hit or sub_hit
    if not cfg.find_all and len(tilings) > 1:
        tilings = tilings[:1]
    if tilings:
        status = STATUS_FOUND
    elif hit:
        status = STATUS_LIMIT
    return SearchResult(status, tilings, nodes, max_depth)
