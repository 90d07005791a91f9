"""Matchings, large sets of triple systems, and product constructions.

Three ways of gluing small structured families into bigger balanced
packings live here:

* splitting the complete graph on an even point set into perfect
  matchings (round-robin "circle" schedule) and turning the matchings
  into triples through a shared third point;
* partition-aligned products: given two families whose blocks are
  partitioned into classes, pair up blocks class-by-class on a
  disjoint union of the ground sets;
* products over large sets of Steiner systems, where each class is
  itself a Steiner system and blocks are paired within a class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .core import (
    BalancedPacking,
    Labeling,
    PackingError,
    PreconditionViolated,
    is_packing,
    parse_document,
    to_json,
)


class OddOrder(PackingError):
    """Perfect matchings need an even number of vertices."""


class ClassCountMismatch(PackingError):
    pass


class ClassesNotDisjoint(PackingError):
    pass


class ClassesNotSteiner(PackingError):
    pass


class NotSupported(PackingError):
    pass


# ---------------------------------------------------------------------------
# one-factorizations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OneFactorization:
    """A partition of the complete graph K_n into n-1 perfect matchings."""

    n: int
    classes: tuple  # tuple of matchings; each matching a tuple of (a, b) pairs

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise OddOrder(f"n={self.n} must be even and >= 2")
        if len(self.classes) != self.n - 1:
            raise PreconditionViolated(
                f"expected {self.n - 1} matchings, got {len(self.classes)}"
            )
        seen = set()
        for matching in self.classes:
            touched = set()
            for a, b in matching:
                if not (0 <= a < b < self.n):
                    raise PreconditionViolated(f"bad edge ({a}, {b})")
                if a in touched or b in touched:
                    raise PreconditionViolated("matching reuses a vertex")
                touched.update((a, b))
            if len(matching) != self.n // 2:
                raise PreconditionViolated("matching is not perfect")
            seen.update(matching)
        if len(seen) != comb(self.n, 2):
            raise PreconditionViolated("classes do not cover every edge")


def one_factorization(n: int) -> OneFactorization:
    """Round-robin factorization of K_n: vertex n-1 sits at the hub and
    the rest rotate around a circle; deterministic.
    """
    if n < 2 or n % 2:
        raise OddOrder(f"n={n} must be even and >= 2")
    m = n - 1
    classes = []
    for r in range(m):
        edges = [tuple(sorted((m, r)))]
        for i in range(1, n // 2):
            edges.append(tuple(sorted(((r + i) % m, (r - i) % m))))
        classes.append(tuple(sorted(edges)))
    return OneFactorization(n, tuple(classes))


def triples_from_factorization(p_plus: int, p_minus: int) -> BalancedPacking:
    """Triples {a, b, j}: matching edge {a, b} joined to the negative
    point indexing its round.

    Positive points [0, p_plus) carry the matchings; negative points
    p_plus + j for j < p_minus each absorb one whole matching.  Gives
    p_plus * p_minus / 2 triples forming a (2, 3, p_plus + p_minus)
    balanced packing, every discrepancy +1.
    """
    if p_plus < 2 or p_plus % 2:
        raise PreconditionViolated(f"p_plus={p_plus} must be even and >= 2")
    if not 1 <= p_minus < p_plus:
        raise PreconditionViolated(f"need 1 <= p_minus < p_plus, got {p_minus}")
    factors = one_factorization(p_plus)
    blocks = []
    for j in range(p_minus):
        for a, b in factors.classes[j]:
            blocks.append((a, b, p_plus + j))
    signs = (1,) * p_plus + (-1,) * p_minus
    return BalancedPacking(
        p_plus + p_minus, 2, 3, Labeling(signs), tuple(sorted(blocks))
    )


# ---------------------------------------------------------------------------
# partitionable packings and their product
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionablePacking:
    """Blocks split into classes, each class a (t_prime, k, v) packing.

    Distinct classes never share a block; that is what makes the
    class-aligned product below a packing again.
    """

    t_prime: int
    k: int
    v: int
    classes: tuple  # tuple of block tuples

    def __post_init__(self):
        seen = set()
        for cls in self.classes:
            for b in cls:
                if len(b) != self.k or tuple(sorted(set(b))) != tuple(b):
                    raise PreconditionViolated(f"malformed block {b!r}")
                if not all(0 <= x < self.v for x in b):
                    raise PreconditionViolated(f"block {b!r} outside [0, {self.v})")
                if b in seen:
                    raise ClassesNotDisjoint(f"block {b!r} appears twice")
                seen.add(b)
            if not is_packing(self.t_prime, cls):
                raise PreconditionViolated(
                    f"a class is not a {self.t_prime}-packing"
                )

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def all_blocks(self) -> tuple:
        return tuple(sorted(b for cls in self.classes for b in cls))


def from_one_factorization(factors: OneFactorization) -> PartitionablePacking:
    """View the matchings as a 1-partitionable family of pairs."""
    return PartitionablePacking(1, 2, factors.n, factors.classes)


def singleton_classes(n: int) -> PartitionablePacking:
    """n classes, each holding the single block {i}."""
    if n < 1:
        raise PreconditionViolated("need at least one class")
    return PartitionablePacking(0, 1, n, tuple(((i,),) for i in range(n)))


def product(
    p1: PartitionablePacking,
    p2: PartitionablePacking,
    allow_prefix: bool = False,
) -> BalancedPacking:
    """Class-aligned product on the disjoint union of the ground sets.

    For every class index i, every block of p1's class i is joined to
    every block of p2's class i (p2's points shifted up by p1.v).  Two
    product blocks share at most max(k2 + t1, k1 + t2) - 1 points, so
    the result is a packing at that strength; points of p1 are labeled
    +1, points of p2 are labeled -1, giving every block discrepancy
    k1 - k2.
    """
    if len(p1.classes) != len(p2.classes) and not allow_prefix:
        raise ClassCountMismatch(
            f"{len(p1.classes)} classes vs {len(p2.classes)}; "
            "pass allow_prefix to zip the shorter prefix"
        )
    t_out = max(p2.k + p1.t_prime, p1.k + p2.t_prime)
    blocks = []
    for c1, c2 in zip(p1.classes, p2.classes):
        for b in c1:
            for d in c2:
                blocks.append(b + tuple(x + p1.v for x in d))
    assert len(set(blocks)) == len(blocks)
    signs = (1,) * p1.v + (-1,) * p2.v
    return BalancedPacking(
        p1.v + p2.v, t_out, p1.k + p2.k, Labeling(signs), tuple(sorted(blocks))
    )


# ---------------------------------------------------------------------------
# large sets of Steiner triple systems
# ---------------------------------------------------------------------------

_PAIRS9 = tuple(itertools.combinations(range(9), 2))


def _sts_completions(chosen, covered, pool):
    """Yield completions of ``chosen`` to a full STS(9) inside ``pool``.

    Deterministic: always branches on the lexicographically smallest
    uncovered pair, trying third points in ascending order.
    """
    if len(chosen) == 12:
        yield tuple(chosen)
        return
    target = next(p for p in _PAIRS9 if p not in covered)
    a, b = target
    for c in range(9):
        if c == a or c == b:
            continue
        tri = tuple(sorted((a, b, c)))
        if tri not in pool:
            continue
        pa, pb = tuple(sorted((a, c))), tuple(sorted((b, c)))
        if pa in covered or pb in covered:
            continue
        chosen.append(tri)
        covered.update((target, pa, pb))
        yield from _sts_completions(chosen, covered, pool)
        chosen.pop()
        covered.difference_update((target, pa, pb))


def _partition_into_sts(remaining, acc):
    if not remaining:
        return True
    seed = min(remaining)
    chosen = [seed]
    covered = {tuple(sorted(p)) for p in itertools.combinations(seed, 2)}
    for sts in _sts_completions(chosen, covered, remaining):
        acc.append(sts)
        if _partition_into_sts(remaining - set(sts), acc):
            return True
        acc.pop()
    return False


def large_set_sts(v: int = 9) -> PartitionablePacking:
    """Partition all C(9,3) triples into 7 pairwise disjoint STS(9).

    Lexicographic backtracking with a fixed point order, so the result
    is reproducible run to run.  Only v=9 is built in; larger sets can
    be imported from files via load_large_set.
    """
    if v != 9:
        raise NotSupported(f"no built-in large set for v={v}; import from a file")
    remaining = frozenset(itertools.combinations(range(9), 3))
    classes: list = []
    found = _partition_into_sts(remaining, classes)
    assert found  # classical existence; the search space is tiny
    return PartitionablePacking(2, 3, 9, tuple(tuple(sorted(c)) for c in classes))


# ---------------------------------------------------------------------------
# products over disjoint Steiner systems
# ---------------------------------------------------------------------------


def _check_steiner_classes(m: PartitionablePacking) -> None:
    per_class = comb(m.v, m.t_prime) // comb(m.k, m.t_prime)
    if comb(m.v, m.t_prime) % comb(m.k, m.t_prime):
        raise ClassesNotSteiner(
            f"no ({m.t_prime},{m.k},{m.v}) Steiner system can exist"
        )
    for cls in m.classes:
        if len(cls) != per_class or not is_packing(m.t_prime, cls):
            raise ClassesNotSteiner(
                f"class of size {len(cls)} is not a ({m.t_prime},{m.k},{m.v}) "
                "Steiner system"
            )
    # pairwise block-disjointness is already enforced by the type


def mds_product(m: PartitionablePacking) -> BalancedPacking:
    """Pair every two blocks (order matters, repeats allowed) of the same
    Steiner class across two copies of the ground set.

    Requires a full large set: C(v,k)*C(k,t)/C(v,t) pairwise disjoint
    (t,k,v) Steiner systems.  The result is a (t+k, 2k, 2v) balanced
    packing, discrepancy 0 on every block.
    """
    _check_steiner_classes(m)
    t, k, v = m.t_prime, m.k, m.v
    want_classes = comb(v, k) * comb(k, t) // comb(v, t)
    if len(m.classes) != want_classes:
        raise PreconditionViolated(
            f"need {want_classes} classes for a full large set, got {len(m.classes)}"
        )
    blocks = []
    for cls in m.classes:
        for b in cls:
            for d in cls:
                blocks.append(b + tuple(x + v for x in d))
    signs = (1,) * v + (-1,) * v
    return BalancedPacking(2 * v, t + k, 2 * k, Labeling(signs), tuple(sorted(blocks)))


def mds_45_product(m: PartitionablePacking, p_minus: int) -> BalancedPacking:
    """Triples from a large set of STS(p_plus) joined to matching edges.

    Class i of the large set pairs with round i of the round-robin
    factorization of K_{p_minus}, where p_minus = p_plus - 1 is even;
    both sides have p_plus - 2 classes.  Result: a (4, 5, p_plus+p_minus)
    balanced packing, every discrepancy +1.
    """
    if (m.t_prime, m.k) != (2, 3):
        raise PreconditionViolated("need classes of triples covering pairs")
    p_plus = m.v
    if p_minus != p_plus - 1 or p_minus % 2:
        raise PreconditionViolated(
            f"need p_minus = p_plus - 1 even, got p_plus={p_plus}, p_minus={p_minus}"
        )
    if len(m.classes) != p_plus - 2:
        raise PreconditionViolated(
            f"need {p_plus - 2} classes, got {len(m.classes)}"
        )
    _check_steiner_classes(m)
    factors = one_factorization(p_minus)
    blocks = []
    for cls, matching in zip(m.classes, factors.classes):
        for tri in cls:
            for a, b in matching:
                blocks.append(tri + (p_plus + a, p_plus + b))
    signs = (1,) * p_plus + (-1,) * p_minus
    return BalancedPacking(
        p_plus + p_minus, 4, 5, Labeling(signs), tuple(sorted(blocks))
    )


# ---------------------------------------------------------------------------
# large-set files
# ---------------------------------------------------------------------------


def save_large_set(m: PartitionablePacking, path) -> None:
    """Write a partitionable packing as a packing file with a "classes"
    field of block-index lists; labels are the canonical half split.
    """
    blocks = m.all_blocks
    index = {b: i for i, b in enumerate(blocks)}
    classes = tuple(tuple(index[b] for b in cls) for cls in m.classes)
    half = (m.v + 1) // 2
    signs = (1,) * half + (-1,) * (m.v - half)
    packing = BalancedPacking(m.v, m.t_prime, m.k, Labeling(signs), blocks)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_json(packing, classes=classes))


def load_large_set(path) -> PartitionablePacking:
    with open(path, encoding="ascii") as fh:
        packing, classes = parse_document(fh.read())
    if classes is None:
        raise PreconditionViolated(f"{path}: no classes field")
    grouped = tuple(
        tuple(packing.blocks[i] for i in cls) for cls in classes
    )
    return PartitionablePacking(packing.t, packing.k, packing.v, grouped)
