"""Bicolored partitions, compositions and set partitions.

Every part or block carries a color in {1, 2}.  Set partitions are stored
canonically -- blocks sorted by their minimum element, elements ascending
inside a block -- so equality is structural and values can be shared freely.

The anchored families produced by :func:`anchored_set_partitions` are the
index sets of the r-Bell elements: for parameters ``(r, n, k)`` they contain
every set partition of ``{1, ..., n+r}`` whose r color-1 blocks are exactly
the blocks containing 1, ..., r (one anchor each) together with k color-2
blocks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class PartitionError(ValueError):
    """Invalid input for a bicolored combinatorial object."""


class EmptyBlockError(PartitionError):
    """A set partition block was empty."""


class OverlapError(PartitionError):
    """Two blocks share an element."""


class GroundSetError(PartitionError):
    """Block elements do not form an initial segment {1, ..., n}."""


def _check_color(color):
    if color not in (1, 2):
        raise PartitionError(f"color must be 1 or 2, got {color!r}")


class BicoloredPartition:
    """A multiset of (part, color) pairs, kept sorted by part then color.

    >>> BicoloredPartition([(2, 1), (1, 2), (1, 1)]).parts
    ((1, 1), (1, 2), (2, 1))
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts=()):
        norm = tuple(sorted((int(p), int(c)) for p, c in parts))
        for p, c in norm:
            if p < 1:
                raise PartitionError(f"parts must be positive, got {p}")
            _check_color(c)
        self.parts = norm
        self._hash = hash(norm)

    @classmethod
    def _unsafe(cls, parts: tuple) -> "BicoloredPartition":
        # `parts` must already be sorted and validated.
        obj = object.__new__(cls)
        obj.parts = parts
        obj._hash = hash(parts)
        return obj

    @property
    def weight(self) -> int:
        return sum(p for p, _ in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, BicoloredPartition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.weight, self.length, self.parts) < (other.weight, other.length, other.parts)

    def __repr__(self):
        return "{" + ",".join(f"({p},{c})" for p, c in self.parts) + "}"

    def to_json(self) -> dict:
        return {"parts": [[p, c] for p, c in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> "BicoloredPartition":
        return cls(tuple((p, c) for p, c in data["parts"]))


class BicoloredComposition:
    """An ordered sequence of (part, color) pairs."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts=()):
        norm = tuple((int(p), int(c)) for p, c in parts)
        for p, c in norm:
            if p < 1:
                raise PartitionError(f"parts must be positive, got {p}")
            _check_color(c)
        self.parts = norm
        self._hash = hash(norm)

    @classmethod
    def _unsafe(cls, parts: tuple) -> "BicoloredComposition":
        obj = object.__new__(cls)
        obj.parts = parts
        obj._hash = hash(parts)
        return obj

    @property
    def weight(self) -> int:
        return sum(p for p, _ in self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, BicoloredComposition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.weight, self.length, self.parts) < (other.weight, other.length, other.parts)

    def __repr__(self):
        return "[" + ",".join(f"({p},{c})" for p, c in self.parts) + "]"

    def to_json(self) -> dict:
        return {"parts": [[p, c] for p, c in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> "BicoloredComposition":
        return cls(tuple((p, c) for p, c in data["parts"]))


class BicoloredSetPartition:
    """A colored set partition of {1, ..., n} in canonical form.

    Blocks are (elements, color) pairs with elements ascending; the blocks
    themselves are sorted by minimum element.  The constructor canonicalizes
    and validates; it raises :class:`EmptyBlockError`, :class:`OverlapError`
    or :class:`GroundSetError` on bad input.

    >>> BicoloredSetPartition([({2}, 1), ({1, 3}, 2)])
    ({1,3},2)({2},1)
    """

    __slots__ = ("blocks", "n", "_hash")

    def __init__(self, blocks=()):
        cleaned = []
        seen: set = set()
        for elems, color in blocks:
            t = tuple(sorted({int(x) for x in elems}))
            if not t:
                raise EmptyBlockError("blocks must be nonempty")
            _check_color(color)
            for x in t:
                if x < 1:
                    raise GroundSetError(f"elements must be positive, got {x}")
                if x in seen:
                    raise OverlapError(f"element {x} appears in two blocks")
                seen.add(x)
            cleaned.append((t, color))
        n = len(seen)
        if seen and max(seen) != n:
            raise GroundSetError("elements must cover {1, ..., n} with no gap")
        cleaned.sort(key=lambda bc: bc[0][0])
        self.blocks = tuple(cleaned)
        self.n = n
        self._hash = hash(self.blocks)

    @classmethod
    def _unsafe(cls, blocks: tuple, n: int) -> "BicoloredSetPartition":
        # `blocks` must already be canonical for ground set {1..n}.
        obj = object.__new__(cls)
        obj.blocks = blocks
        obj.n = n
        obj._hash = hash(blocks)
        return obj

    @property
    def weight(self) -> int:
        return self.n

    @property
    def length(self) -> int:
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, BicoloredSetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.n, len(self.blocks), self.blocks) < (other.n, len(other.blocks), other.blocks)

    def __repr__(self):
        if not self.blocks:
            return "()"
        return "".join(
            "({" + ",".join(map(str, e)) + "}," + str(c) + ")" for e, c in self.blocks
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [{"elems": list(e), "color": c} for e, c in self.blocks],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BicoloredSetPartition":
        sp = cls((tuple(b["elems"]), b["color"]) for b in data["blocks"])
        if sp.n != data["n"]:
            raise GroundSetError(f"declared n={data['n']} but blocks cover {sp.n}")
        return sp


def canonical_set_partition(blocks) -> BicoloredSetPartition:
    """Canonicalize a raw collection of (element-set, color) blocks."""
    return BicoloredSetPartition(blocks)


def standardize(blocks) -> BicoloredSetPartition:
    """Relabel disjoint colored blocks order-isomorphically onto {1, ..., m}.

    Accepts any collection of (elements, color) pairs over arbitrary positive
    integers; the i-th smallest element overall becomes i.
    """
    if isinstance(blocks, BicoloredSetPartition):
        blocks = blocks.blocks
    pairs = []
    seen: set = set()
    for elems, color in blocks:
        t = tuple(sorted({int(x) for x in elems}))
        if not t:
            raise EmptyBlockError("blocks must be nonempty")
        _check_color(color)
        for x in t:
            if x in seen:
                raise OverlapError(f"element {x} appears in two blocks")
            seen.add(x)
        pairs.append((t, color))
    rank = {x: i + 1 for i, x in enumerate(sorted(seen))}
    relabeled = tuple((tuple(rank[x] for x in e), c) for e, c in pairs)
    return BicoloredSetPartition(relabeled)


def shifted_union(left: BicoloredSetPartition, right: BicoloredSetPartition) -> BicoloredSetPartition:
    """Concatenate two set partitions, shifting the right one above the left."""
    s = left.n
    if s == 0:
        return right
    if right.n == 0:
        return left
    shifted = tuple((tuple(x + s for x in e), c) for e, c in right.blocks)
    return BicoloredSetPartition._unsafe(left.blocks + shifted, s + right.n)


def composition_type(sp: BicoloredSetPartition) -> BicoloredComposition:
    """Block sizes and colors read off in min-of-block order."""
    return BicoloredComposition._unsafe(tuple((len(e), c) for e, c in sp.blocks))


def partition_type(sp: BicoloredSetPartition) -> BicoloredPartition:
    """The multiset of block sizes and colors."""
    return BicoloredPartition(tuple((len(e), c) for e, c in sp.blocks))


# ---------------------------------------------------------------------------
# anchored families
# ---------------------------------------------------------------------------

def _append_singleton(sp: BicoloredSetPartition, color: int) -> BicoloredSetPartition:
    m = sp.n + 1
    return BicoloredSetPartition._unsafe(sp.blocks + (((m,), color),), m)


def _insert_max(sp: BicoloredSetPartition, j: int) -> BicoloredSetPartition:
    m = sp.n + 1
    blocks = list(sp.blocks)
    elems, color = blocks[j]
    blocks[j] = (elems + (m,), color)
    return BicoloredSetPartition._unsafe(tuple(blocks), m)


def _check_rnk(r: int, n: int, k: int):
    if r < 0 or n < 0 or k < 0:
        raise PartitionError("r, n, k must be nonnegative")


@lru_cache(maxsize=None)
def anchored_set_partitions(r: int, n: int, k: int) -> tuple:
    """All anchored partitions for (r, n, k), each generated exactly once.

    The order is the deterministic recursion order: partitions whose largest
    element forms a new color-2 singleton come first, then those obtained by
    inserting the largest element into each block in canonical order.
    """
    _check_rnk(r, n, k)
    if k > n:
        return ()
    if n == 0:
        base = BicoloredSetPartition._unsafe(tuple(((i,), 1) for i in range(1, r + 1)), r)
        return (base,)
    out = []
    if k > 0:
        for sp in anchored_set_partitions(r, n - 1, k - 1):
            out.append(_append_singleton(sp, 2))
    for sp in anchored_set_partitions(r, n - 1, k):
        for j in range(len(sp.blocks)):
            out.append(_insert_max(sp, j))
    return tuple(out)


def iter_anchored_set_partitions(r: int, n: int, k: int):
    """Lazy single-consumer stream over the same family, in the same order."""
    _check_rnk(r, n, k)
    if k > n:
        return
    if n == 0:
        yield BicoloredSetPartition._unsafe(tuple(((i,), 1) for i in range(1, r + 1)), r)
        return
    if k > 0:
        for sp in iter_anchored_set_partitions(r, n - 1, k - 1):
            yield _append_singleton(sp, 2)
    for sp in iter_anchored_set_partitions(r, n - 1, k):
        for j in range(len(sp.blocks)):
            yield _insert_max(sp, j)


def is_anchored(sp: BicoloredSetPartition, r: int, n: int, k: int) -> bool:
    """Membership predicate for the (r, n, k) anchored family.

    Checks the definition directly, independently of the generator: ground
    set {1..n+r}, exactly r color-1 blocks each containing one anchor from
    {1..r}, and exactly k color-2 blocks.
    """
    if sp.n != n + r:
        return False
    color1 = [e for e, c in sp.blocks if c == 1]
    color2 = [e for e, c in sp.blocks if c == 2]
    if len(color1) != r or len(color2) != k:
        return False
    anchors_seen = set()
    for e in color1:
        hits = [x for x in e if x <= r]
        if len(hits) != 1:
            return False
        anchors_seen.add(hits[0])
    if anchors_seen != set(range(1, r + 1)):
        return False
    return all(x > r for e in color2 for x in e)


def count_by_composition_type(r: int, n: int, k: int, comp: BicoloredComposition) -> int:
    """Number of anchored partitions whose blocks, in min order, match ``comp``."""
    if comp.weight != n + r or comp.length != k + r:
        return 0
    return sum(1 for sp in anchored_set_partitions(r, n, k) if composition_type(sp) == comp)


def count_by_partition_type(r: int, n: int, k: int, lam: BicoloredPartition) -> int:
    """Number of anchored partitions whose block-size multiset matches ``lam``."""
    if lam.weight != n + r or lam.length != k + r:
        return 0
    return sum(1 for sp in anchored_set_partitions(r, n, k) if partition_type(sp) == lam)


# ---------------------------------------------------------------------------
# counting oracles
# ---------------------------------------------------------------------------

def r_stirling2(n: int, k: int, r: int = 0) -> int:
    """r-Stirling number of the second kind.

    Recurrence T(n+1, k) = k*T(n, k) + T(n, k-1) with T(r, r) = 1 and
    T(n, k) = 0 for k < r.  At r = 0 this is the usual Stirling number
    counting set partitions of n into k blocks.
    """
    if n < r or k < r or k > n:
        return 0
    row = {r: 1}
    for _ in range(n - r):
        row = {
            kk: kk * row.get(kk, 0) + row.get(kk - 1, 0)
            for kk in range(r, k + 1)
        }
    return row.get(k, 0)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (permutations by cycles)."""
    if k < 0 or k > n:
        return 0
    row = {0: 1}
    for m in range(n):
        row = {
            kk: m * row.get(kk, 0) + row.get(kk - 1, 0)
            for kk in range(0, k + 1)
        }
    return row.get(k, 0)


# ---------------------------------------------------------------------------
# exhaustive enumerators (basis keys, brute-force cross-checks)
# ---------------------------------------------------------------------------

def set_partitions(m: int):
    """All uncolored set partitions of {1..m} as canonical block tuples."""
    if m == 0:
        yield ()
        return
    for blocks in set_partitions(m - 1):
        yield blocks + ((m,),)
        for j in range(len(blocks)):
            updated = list(blocks)
            updated[j] = updated[j] + (m,)
            yield tuple(updated)


@lru_cache(maxsize=None)
def bicolored_set_partitions(m: int) -> tuple:
    """All bicolored set partitions of {1..m}, deterministically ordered."""
    out = []
    for blocks in set_partitions(m):
        for colors in itertools.product((1, 2), repeat=len(blocks)):
            out.append(
                BicoloredSetPartition._unsafe(
                    tuple((e, c) for e, c in zip(blocks, colors)), m
                )
            )
    out.sort()
    return tuple(out)


def _compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def bicolored_compositions(w: int) -> tuple:
    """All bicolored compositions of w, deterministically ordered."""
    out = []
    for comp in _compositions(w):
        for colors in itertools.product((1, 2), repeat=len(comp)):
            out.append(BicoloredComposition._unsafe(tuple(zip(comp, colors))))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def bicolored_partitions(w: int) -> tuple:
    """All bicolored partitions of w, deterministically ordered."""
    seen = {BicoloredPartition(tuple(zip(c, cols)))
            for c in _compositions(w)
            for cols in itertools.product((1, 2), repeat=len(c))}
    return tuple(sorted(seen))
