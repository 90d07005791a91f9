"""Core structures for labeled set families.

A *labeling* assigns +1/-1 to every point of the ground set [0, v).  A
family of blocks over a labeled ground set is *balanced* when every block's
discrepancy (signed label sum) lies in {-1, 0, +1}, and has *t-bounded
intersections* when distinct blocks share at most t-1 points.  The
``BalancedPacking`` container carries the claimed parameters (v, t, k)
together with the labeling and the block list; ``verify`` measures what
actually holds and reports it.

Files: packings are exchanged as a small JSON document with keys exactly
``version, v, t, k, labels, blocks`` (plus an optional ``classes`` list of
block-index groups for partitioned families).  The writer is deterministic;
the parser is strict and rejects unknown keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "PackingError",
    "OutOfRange",
    "TooFewBlocks",
    "LabelConstraint",
    "PreconditionViolated",
    "FormatError",
    "Block",
    "Labeling",
    "BalancedPacking",
    "VerificationReport",
    "make_packing",
    "discrepancy",
    "max_pairwise_intersection",
    "is_packing",
    "verify",
    "derive_subdesign",
    "to_json",
    "parse_document",
    "from_json",
    "save_packing",
    "load_packing",
]


class PackingError(Exception):
    """Base class for errors raised by this package's domain layer."""


class OutOfRange(PackingError):
    """A point index lies outside the ground set."""


class TooFewBlocks(PackingError):
    """An operation needing at least two blocks got fewer."""


class LabelConstraint(PackingError):
    """A labeling value or label-dependent precondition is violated."""


class PreconditionViolated(PackingError):
    """Generic precondition failure for construction/bound parameters."""


class FormatError(PackingError):
    """A packing document is malformed."""


Block = tuple  # tuple[int, ...]; strictly increasing point indices


@dataclass(frozen=True)
class Labeling:
    """A +1/-1 sign for each point of the ground set."""

    signs: tuple

    def __post_init__(self):
        if not all(s in (1, -1) for s in self.signs):
            raise LabelConstraint("labels must be +1 or -1")

    @property
    def v(self) -> int:
        return len(self.signs)

    @property
    def p_plus(self) -> int:
        return sum(1 for s in self.signs if s == 1)

    @property
    def p_minus(self) -> int:
        return self.v - self.p_plus

    def flipped(self) -> "Labeling":
        """The labeling with every sign negated."""
        return Labeling(tuple(-s for s in self.signs))


@dataclass(frozen=True)
class BalancedPacking:
    """A claimed (t, k, v) balanced packing.

    ``k == 0`` is the irregular sentinel (no common block size claimed);
    ``t == 0`` records that no intersection bound is claimed (as for
    sub-designs derived from t=2 families).  Structural invariants —
    sorted, duplicate-free blocks over [0, v) — are enforced here;
    the semantic booleans (regular / packing / balanced) are ``verify``'s
    job, so that failing families can still be represented and reported.
    """

    v: int
    t: int
    k: int
    labeling: Labeling
    blocks: tuple

    def __post_init__(self):
        if self.v < 1:
            raise PackingError(f"ground set size must be >= 1, got {self.v}")
        if self.t < 0 or self.k < 0:
            raise PackingError("parameters t and k must be >= 0")
        if self.labeling.v != self.v:
            raise LabelConstraint(
                f"labeling covers {self.labeling.v} points, ground set has {self.v}"
            )
        prev = None
        for b in self.blocks:
            if not isinstance(b, tuple) or not b:
                raise PackingError("blocks must be nonempty tuples")
            if any(not 0 <= x < self.v for x in b):
                raise OutOfRange(f"block {b} leaves the ground set [0, {self.v})")
            if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
                raise PackingError(f"block {b} is not strictly increasing")
            if prev is not None and b <= prev:
                raise PackingError("blocks must be sorted and duplicate-free")
            prev = b

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def with_labeling(self, labeling: Labeling) -> "BalancedPacking":
        return BalancedPacking(self.v, self.t, self.k, labeling, self.blocks)


def make_packing(v, t, k, signs, blocks) -> BalancedPacking:
    """Canonicalizing constructor: sorts points and blocks, drops duplicates."""
    canonical = set()
    for b in blocks:
        tb = tuple(sorted(b))
        if len(set(tb)) != len(tb):
            raise PackingError(f"block {b} repeats a point")
        canonical.add(tb)
    return BalancedPacking(v, t, k, Labeling(tuple(signs)), tuple(sorted(canonical)))


# ---------------------------------------------------------------------------
# measurements
# ---------------------------------------------------------------------------


def discrepancy(block, labeling: Labeling) -> int:
    """Signed sum of the labels over a block's points."""
    total = 0
    for x in block:
        if not 0 <= x < labeling.v:
            raise OutOfRange(f"point {x} outside ground set [0, {labeling.v})")
        total += labeling.signs[x]
    return total


def max_pairwise_intersection(blocks) -> int:
    """Largest |A ∩ B| over distinct blocks; needs at least two blocks."""
    if len(blocks) < 2:
        raise TooFewBlocks("need at least two blocks to compare")
    sets = [frozenset(b) for b in blocks]
    best = 0
    n = len(sets)
    for i in range(n):
        si = sets[i]
        for j in range(i + 1, n):
            m = len(si & sets[j])
            if m > best:
                best = m
    return best


def is_packing(t: int, blocks) -> bool:
    """True iff every t-subset of the ground set lies in at most one block.

    Counting t-subsets (rather than comparing pairs) makes the check correct
    for irregular families too.  t = 0 is accepted with the strict reading:
    the empty set lies in every block, so only families of at most one block
    qualify.
    """
    if t < 0:
        raise PreconditionViolated("t must be >= 0")
    if t == 0:
        return len(blocks) <= 1
    seen = set()
    for b in blocks:
        for sub in combinations(b, t):
            if sub in seen:
                return False
            seen.add(sub)
    return True


@dataclass(frozen=True)
class VerificationReport:
    """What a family actually satisfies, plus measured statistics.

    ``passed`` is the conjunction of the three booleans regular/packing/
    balanced.  ``bound``/``bound_ok`` carry the counting-bound cross-check
    (None when the bound's preconditions don't apply).
    """

    regular: bool
    packing: bool
    balanced: bool
    n_blocks: int
    max_intersection: int  # None when fewer than two blocks
    discrepancies: tuple
    p_plus: int
    p_minus: int
    mixed_signs: bool
    bound: int
    bound_ok: bool

    @property
    def passed(self) -> bool:
        return self.regular and self.packing and self.balanced

    def lines(self):
        disc_counts = {}
        for d in self.discrepancies:
            disc_counts[d] = disc_counts.get(d, 0) + 1
        disc = ", ".join(f"{d}: {c}" for d, c in sorted(disc_counts.items()))
        out = [
            f"blocks: {self.n_blocks}",
            f"regular: {self.regular}",
            f"packing: {self.packing}",
            f"balanced: {self.balanced}",
            f"max pairwise intersection: {self.max_intersection}",
            f"discrepancy multiset: {{{disc}}}",
            f"labels: {self.p_plus} positive, {self.p_minus} negative",
            f"mixed-sign discrepancies: {self.mixed_signs}",
        ]
        if self.bound is not None:
            status = "ok" if self.bound_ok else "EXCEEDED"
            out.append(f"counting bound: {self.bound} ({status})")
        out.append("result: " + ("PASS" if self.passed else "FAIL"))
        return out


def verify(p: BalancedPacking) -> VerificationReport:
    """Measure a family against its claimed parameters.

    The overall verdict is the conjunction of exactly three booleans:
    every block has the claimed size (vacuous for the k=0 sentinel), the
    t-subset packing condition holds (skipped for t=0), and every
    discrepancy lies in {-1, 0, +1}.  The counting bound is cross-checked
    on every call whenever its preconditions apply; a genuine balanced
    packing can never exceed it, so a False ``bound_ok`` flags an internal
    inconsistency to the caller without changing the three-boolean verdict.
    """
    regular = p.k == 0 or all(len(b) == p.k for b in p.blocks)
    packing = True if p.t == 0 else is_packing(p.t, p.blocks)
    discs = tuple(sorted(discrepancy(b, p.labeling) for b in p.blocks))
    balanced = all(-1 <= d <= 1 for d in discs)
    maxint = max_pairwise_intersection(p.blocks) if len(p.blocks) >= 2 else None
    mixed = any(d > 0 for d in discs) and any(d < 0 for d in discs)

    p_plus, p_minus = p.labeling.p_plus, p.labeling.p_minus
    bound = bound_ok = None
    if 1 <= p.t < p.k:
        hi, lo = max(p_plus, p_minus), min(p_plus, p_minus)
        if hi >= 2 * ((p.t + 2) // 2):
            from . import bounds  # local import; bounds depends on this module

            bound = bounds.lemma1_bound(p.t, p.k, hi, lo)
            bound_ok = p.n_blocks <= bound

    return VerificationReport(
        regular=regular,
        packing=packing,
        balanced=balanced,
        n_blocks=p.n_blocks,
        max_intersection=maxint,
        discrepancies=discs,
        p_plus=p_plus,
        p_minus=p_minus,
        mixed_signs=mixed,
        bound=bound,
        bound_ok=bound_ok,
    )


def derive_subdesign(p: BalancedPacking, e1: int, e2: int) -> BalancedPacking:
    """Restrict to the blocks through a positive point e1 and negative e2.

    Returns the family {B - {e1, e2} : e1, e2 in B} on the ground set
    relabeled to [0, v-2), with parameters (t-2, k-2).  Blocks that collapse
    to the same set are merged.
    """
    for e in (e1, e2):
        if not 0 <= e < p.v:
            raise OutOfRange(f"point {e} outside ground set [0, {p.v})")
    if p.labeling.signs[e1] != 1:
        raise LabelConstraint(f"point e1={e1} must be labeled +1")
    if p.labeling.signs[e2] != -1:
        raise LabelConstraint(f"point e2={e2} must be labeled -1")

    remaining = [x for x in range(p.v) if x != e1 and x != e2]
    renumber = {old: new for new, old in enumerate(remaining)}
    derived = []
    for b in p.blocks:
        if e1 in b and e2 in b:
            rest = tuple(renumber[x] for x in b if x != e1 and x != e2)
            if rest:  # pairs collapse to nothing; drop them
                derived.append(rest)
    new_t = max(p.t - 2, 0)
    new_k = max(p.k - 2, 0) if p.k else 0
    signs = tuple(p.labeling.signs[x] for x in remaining)
    return make_packing(p.v - 2, new_t, new_k, signs, derived)


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

_REQUIRED_KEYS = ("version", "v", "t", "k", "labels", "blocks")


def to_json(p: BalancedPacking, classes=None) -> str:
    """Serialize deterministically; one block (or class) per line."""
    labels = "".join("+" if s == 1 else "-" for s in p.labeling.signs)
    out = [
        "{",
        '  "version": 1,',
        f'  "v": {p.v},',
        f'  "t": {p.t},',
        f'  "k": {p.k},',
        f'  "labels": "{labels}",',
    ]
    trailing = "," if classes is not None else ""

    def array_lines(name, rows, tail):
        if not rows:
            out.append(f'  "{name}": []{tail}')
            return
        out.append(f'  "{name}": [')
        for i, row in enumerate(rows):
            comma = "," if i + 1 < len(rows) else ""
            out.append("    " + json.dumps(list(row)) + comma)
        out.append(f"  ]{tail}")

    array_lines("blocks", p.blocks, trailing)
    if classes is not None:
        array_lines("classes", classes, "")
    out.append("}")
    return "\n".join(out) + "\n"


def parse_document(text: str):
    """Strict parse of a packing document.

    Returns ``(packing, classes)`` where classes is None unless present.
    The stored labeling is normalized on load: when negatives outnumber
    positives the whole labeling is flipped, so in-memory families satisfy
    p_plus >= p_minus.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    allowed = set(_REQUIRED_KEYS) | {"classes"}
    unknown = set(doc) - allowed
    if unknown:
        raise FormatError(f"unknown keys: {sorted(unknown)}")
    missing = [key for key in _REQUIRED_KEYS if key not in doc]
    if missing:
        raise FormatError(f"missing keys: {missing}")
    if doc["version"] != 1:
        raise FormatError(f"unsupported version {doc['version']!r}")

    v, t, k = doc["v"], doc["t"], doc["k"]
    for name, val in (("v", v), ("t", t), ("k", k)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise FormatError(f"field {name} must be a nonnegative integer")

    labels = doc["labels"]
    if not isinstance(labels, str) or len(labels) != v or set(labels) - {"+", "-"}:
        raise FormatError("labels must be a +/- string covering the ground set")
    signs = tuple(1 if ch == "+" else -1 for ch in labels)

    raw_blocks = doc["blocks"]
    if not isinstance(raw_blocks, list):
        raise FormatError("blocks must be a list")
    blocks = []
    prev = None
    for row in raw_blocks:
        if not isinstance(row, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in row
        ):
            raise FormatError(f"block {row!r} must be a list of integers")
        b = tuple(row)
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            raise FormatError(f"block {row!r} is not strictly increasing")
        if prev is not None and b <= prev:
            raise FormatError("blocks must be sorted and duplicate-free")
        prev = b
        blocks.append(b)

    classes = None
    if "classes" in doc:
        classes = _parse_classes(doc["classes"], len(blocks))

    labeling = Labeling(signs)
    if labeling.p_minus > labeling.p_plus:
        labeling = labeling.flipped()
    packing = BalancedPacking(v, t, k, labeling, tuple(blocks))
    return packing, classes


def _parse_classes(raw, n_blocks: int):
    if not isinstance(raw, list):
        raise FormatError("classes must be a list of block-index lists")
    seen = set()
    classes = []
    for row in raw:
        if not isinstance(row, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in row
        ):
            raise FormatError("each class must be a list of integers")
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            raise FormatError("class indices must be strictly increasing")
        for x in row:
            if not 0 <= x < n_blocks:
                raise FormatError(f"class references block {x} of {n_blocks}")
            if x in seen:
                raise FormatError(f"block {x} appears in more than one class")
            seen.add(x)
        classes.append(tuple(row))
    if len(seen) != n_blocks:
        raise FormatError("classes must partition the block list")
    return tuple(classes)


def from_json(text: str) -> BalancedPacking:
    return parse_document(text)[0]


def save_packing(p: BalancedPacking, path, classes=None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_json(p, classes=classes))


def load_packing(path) -> BalancedPacking:
    with open(path, "r", encoding="ascii") as fh:
        return from_json(fh.read())
