"""Ground-truth engines for small parameters.

``max_balanced_packing`` finds the true maximum size of a balanced
packing by exhausting every labeling split and running a deterministic
branch-and-bound maximum-clique search on the compatibility graph of
admissible blocks.  It is assumption-free: no bound from the counting
side is trusted, every split p+ in [ceil(v/2), v] is searched (the
flipped splits are mirror images).  Desk scale only -- the default
budget is sized for v <= 14.

``structured_random`` is the randomized interval baseline: one uniform
point per interval, greedy retention.  Its RNG is ``random.Random``
(Mersenne Twister), so runs reproduce across platforms for a fixed
seed.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, NamedTuple, Optional

from .core import (
    BalancedPacking,
    Block,
    Labeling,
    PackingError,
    PreconditionViolated,
)


class Indivisible(PackingError):
    """Interval construction needs the block size to divide v."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps on the exact search.

    Exceeding either cap stops the search and surfaces ``exact=False``
    on the result together with the best packing found so far; it is
    never a silent truncation and never an exception.
    """

    max_nodes: int = 10**8
    time_cap: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_cap <= 0:
            raise PreconditionViolated("budget caps must be positive")


class OracleResult(NamedTuple):
    size: int
    witness: BalancedPacking
    exact: bool
    nodes: int


def _bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class _CliqueSearch:
    """Tomita-style branch and bound with a greedy coloring bound.

    Candidates are expanded in reverse color order; a vertex whose
    color class index cannot lift the incumbent prunes the whole rest
    of the candidate list.  Vertex order (and hence the witness) is
    deterministic.
    """

    def __init__(self, adj, budget, t0, log, labeling_tag):
        self.adj = adj
        self.budget = budget
        self.t0 = t0
        self.log = log
        self.tag = labeling_tag
        self.nodes = 0
        self.complete = True
        self.best = []
        self.best_size = 0
        self.root_bound = 0
        self.stack = []

    def _out_of_budget(self) -> bool:
        return (
            self.nodes >= self.budget.max_nodes
            or time.monotonic() - self.t0 > self.budget.time_cap
        )

    def _color_order(self, cand: int):
        classes = []
        colored = []
        for u in _bits(cand):
            for ci, members in enumerate(classes):
                if not (members & self.adj[u]):
                    classes[ci] |= 1 << u
                    colored.append((ci + 1, u))
                    break
            else:
                classes.append(1 << u)
                colored.append((len(classes), u))
        colored.sort()
        return colored

    def _log_line(self):
        if self.log is not None:
            self.log.write(json.dumps({
                "labeling": self.tag,
                "nodes": self.nodes,
                "incumbent": self.best_size,
                "bound": self.root_bound,
            }) + "\n")

    def run(self, cand: int, seed_size: int, seed_best):
        self.best_size = seed_size
        self.best = list(seed_best)
        self.root_bound = len({c for c, _ in self._color_order(cand)})
        self._expand(0, cand)
        self._log_line()
        return self

    def _expand(self, depth: int, cand: int):
        self.nodes += 1
        if self._out_of_budget():
            self.complete = False
            return
        for color, u in reversed(self._color_order(cand)):
            if depth + color <= self.best_size:
                return
            self.stack.append(u)
            rest = cand & self.adj[u]
            if rest:
                self._expand(depth + 1, rest)
            elif depth + 1 > self.best_size:
                self.best_size = depth + 1
                self.best = list(self.stack)
                self._log_line()
            self.stack.pop()
            if not self.complete:
                return
            cand &= ~(1 << u)


def _admissible_blocks(v: int, k: int, p_plus: int):
    lo, hi = k // 2, (k + 1) // 2
    out = []
    for block in itertools.combinations(range(v), k):
        inside = sum(1 for x in block if x < p_plus)
        if lo <= inside <= hi:
            out.append(block)
    return out


def max_balanced_packing(
    t: int,
    k: int,
    v: int,
    budget: Optional[SearchBudget] = None,
    log: Optional[IO[str]] = None,
) -> OracleResult:
    """Exact maximum over every labeling and every block family.

    Blocks are admissible when their discrepancy under the split
    labeling lies in {-1, 0, +1}; two blocks conflict when they share
    t or more points.  The answer maximizes an independent family,
    found as a maximum clique in the complement.  ``exact`` is True
    only when every split's search ran to completion inside the
    budget.
    """
    if t < 1 or k < 1 or v < 1:
        raise PreconditionViolated("need t >= 1 and k, v >= 1")
    if budget is None:
        budget = SearchBudget()
    t0 = time.monotonic()
    total_nodes = 0
    exact = True
    best_size = 0
    best_blocks: tuple = ()
    best_p_plus = (v + 1) // 2
    for p_plus in range((v + 1) // 2, v + 1):
        vertices = _admissible_blocks(v, k, p_plus)
        n = len(vertices)
        masks = [sum(1 << x for x in b) for b in vertices]
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if (masks[i] & masks[j]).bit_count() < t:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        search = _CliqueSearch(adj, budget, t0, log, p_plus)
        search.run((1 << n) - 1, best_size, [])
        total_nodes += search.nodes
        if search.best_size > best_size and search.best:
            best_size = search.best_size
            best_blocks = tuple(sorted(vertices[i] for i in search.best))
            best_p_plus = p_plus
        if not search.complete:
            exact = False
            break
    signs = (1,) * best_p_plus + (-1,) * (v - best_p_plus)
    witness = BalancedPacking(v, t, k, Labeling(signs), best_blocks)
    return OracleResult(best_size, witness, exact, total_nodes)


def interval_labeling(v: int, k: int) -> Labeling:
    """+1 on the first ceil(k/2) intervals of size v/k, -1 on the rest."""
    if v % k:
        raise Indivisible(f"{k} does not divide {v}")
    width = v // k
    cut = ((k + 1) // 2) * width
    return Labeling(tuple(1 if x < cut else -1 for x in range(v)))


def structured_random(
    v: int, k: int, t: int, trials: int, rng_seed: int
) -> tuple[tuple[Block, ...], Labeling]:
    """Greedy retention of random one-point-per-interval sets.

    Each trial draws, with replacement, one uniform point from each of
    the k width-v/k intervals; the set is kept when it meets every
    previously kept set in at most t points.  Note the retention rule
    is <= t, one looser than the packing predicate.  Interval labeling
    makes each kept set's discrepancy 0 (k even) or +1 (k odd).
    """
    if v % k:
        raise Indivisible(f"{k} does not divide {v}")
    if trials < 0:
        raise PreconditionViolated("trials must be nonnegative")
    width = v // k
    rng = random.Random(rng_seed)
    kept: list[Block] = []
    kept_masks: list[int] = []
    for _ in range(trials):
        block = tuple(
            i * width + rng.randrange(width) for i in range(k)
        )
        mask = sum(1 << x for x in block)
        if all((mask & m).bit_count() <= t for m in kept_masks):
            kept.append(block)
            kept_masks.append(mask)
    return tuple(kept), interval_labeling(v, k)


def existence_reference(v: int, k: int, t: int) -> Fraction:
    """The (v*t/k^2)^t count the baseline is compared against."""
    return Fraction(v * t, k * k) ** t
