"""Non-crossing partitions, pair partitions, Catalan paths and inner/outer counts.

Enumeration is deliberately separate from counting: the counting functions
(`catalan`, `count_a`, `count_t`, `count_s`) use recursions with memoization,
while the enumerators serve as the independent brute-force oracle in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Hard caps: Catalan growth makes larger ground sets explode.
MAX_NC_N = 14
MAX_NC2_N = 24


class Partition:
    """A non-crossing partition of {1..n} in canonical form.

    Blocks are sorted by their minimal element and each block is ascending.
    The constructor validates disjointness, coverage and the non-crossing
    property; enumerators bypass validation for speed.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if any(len(b) == 0 for b in blocks):
            raise ValueError("empty block")
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        seen = [x for b in blocks for x in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError("blocks must partition {1..%d}" % n)
        self.n = n
        self.blocks = blocks
        self._check_noncrossing()

    @classmethod
    def _unsafe(cls, n: int, blocks) -> "Partition":
        # enumerators build canonical valid partitions by construction
        p = object.__new__(cls)
        p.n = n
        p.blocks = blocks
        return p

    def _check_noncrossing(self):
        # stack scan: a later element of a block must sit on top of the stack
        owner = {}
        first = {}
        last = {}
        for i, b in enumerate(self.blocks):
            first[i] = b[0]
            last[i] = b[-1]
            for x in b:
                owner[x] = i
        stack = []
        for x in range(1, self.n + 1):
            b = owner[x]
            if x == first[b]:
                stack.append(b)
            if stack[-1] != b:
                raise ValueError("crossing blocks: %r" % (self.blocks,))
            if x == last[b]:
                stack.pop()

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def is_pair_partition(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return "Partition(%d, %r)" % (self.n, self.blocks)


@dataclass(frozen=True)
class BlockClass:
    """Counts of outer and inner blocks of a non-crossing partition."""

    outer_count: int
    inner_count: int


class CatalanPath:
    """Monotone lattice path (0,0) -> (n,n) that never rises above the diagonal.

    Steps are "R" for (1,0) and "U" for (0,1).
    """

    __slots__ = ("n", "steps")

    def __init__(self, steps):
        steps = tuple(steps)
        if any(s not in ("R", "U") for s in steps):
            raise ValueError("steps must be 'R' or 'U'")
        if len(steps) % 2:
            raise ValueError("path length must be even")
        rights = ups = 0
        for s in steps:
            if s == "R":
                rights += 1
            else:
                ups += 1
            if ups > rights:
                raise ValueError("path rises above the diagonal")
        if ups != rights:
            raise ValueError("path must end on the diagonal")
        self.n = len(steps) // 2
        self.steps = steps

    def diagonal_touches(self) -> int:
        """Number of points (i,i), 1 <= i <= n, where the path meets the diagonal."""
        rights = ups = touches = 0
        for s in self.steps:
            if s == "R":
                rights += 1
            else:
                ups += 1
                if ups == rights:
                    touches += 1
        return touches

    def __eq__(self, other):
        return isinstance(other, CatalanPath) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return "CatalanPath(%r)" % ("".join(self.steps),)


def catalan(n: int) -> int:
    """n-th Catalan number, exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def _subsets_lex(lo, hi):
    # all ascending subsets of {lo..hi}, in lexicographic order, () first
    yield ()
    for x in range(lo, hi + 1):
        for tail in _subsets_lex(x + 1, hi):
            yield (x,) + tail


def _seg_product(segs, gen):
    if not segs:
        yield ()
        return
    (lo, hi) = segs[0]
    rest = segs[1:]
    for head in gen(lo, hi):
        for tail in _seg_product(rest, gen):
            yield head + tail


def _nc_blocks(lo, hi):
    # canonical non-crossing partitions of the interval {lo..hi}, lex order
    if lo > hi:
        yield ()
        return
    for extra in _subsets_lex(lo + 1, hi):
        first = (lo,) + extra
        segs = []
        prev = lo
        for x in extra:
            segs.append((prev + 1, x - 1))
            prev = x
        segs.append((prev + 1, hi))
        for rest in _seg_product(segs, _nc_blocks):
            yield (first,) + rest


def _nc2_blocks(lo, hi):
    # canonical non-crossing pair partitions of the interval {lo..hi}, lex order
    if lo > hi:
        yield ()
        return
    for mate in range(lo + 1, hi + 1, 2):
        for inside in _nc2_blocks(lo + 1, mate - 1):
            for outside in _nc2_blocks(mate + 1, hi):
                yield ((lo, mate),) + inside + outside


def enumerate_nc(n: int) -> list[Partition]:
    """All non-crossing partitions of {1..n}, canonical, lexicographic order."""
    if not 1 <= n <= MAX_NC_N:
        raise ValueError("n must be in 1..%d, got %d" % (MAX_NC_N, n))
    return [Partition._unsafe(n, blocks) for blocks in _nc_blocks(1, n)]


def enumerate_nc2(two_n: int) -> list[Partition]:
    """All non-crossing pair partitions of {1..2n}, canonical, lexicographic order."""
    if two_n % 2:
        raise ValueError("ground-set size must be even, got %d" % two_n)
    if not 2 <= two_n <= MAX_NC2_N:
        raise ValueError("ground-set size must be in 2..%d, got %d" % (MAX_NC2_N, two_n))
    return [Partition._unsafe(two_n, blocks) for blocks in _nc2_blocks(1, two_n)]


def classify(p: Partition) -> tuple[BlockClass, tuple[bool, ...]]:
    """Label the blocks of p as inner/outer.

    A block is inner iff some other block has elements a < v < b around it;
    for non-crossing partitions this does not depend on the chosen v.
    Returns (BlockClass, inner_flags) with flags aligned to p.blocks.
    """
    flags = []
    for i, blk in enumerate(p.blocks):
        v = blk[0]
        inner = any(
            j != i and other[0] < v < other[-1] for j, other in enumerate(p.blocks)
        )
        flags.append(inner)
    inner_count = sum(flags)
    return BlockClass(len(p.blocks) - inner_count, inner_count), tuple(flags)


def to_catalan_path(p: Partition) -> CatalanPath:
    """Catalan path of a non-crossing pair partition: R on first elements, U on second."""
    if not p.is_pair_partition():
        raise TypeError("partition must consist of two-element blocks")
    firsts = {b[0] for b in p.blocks}
    steps = tuple("R" if i in firsts else "U" for i in range(1, p.n + 1))
    return CatalanPath(steps)


def from_catalan_path(path: CatalanPath) -> Partition:
    """Inverse of to_catalan_path: pair each U with the most recent open R."""
    stack = []
    blocks = []
    for i, s in enumerate(path.steps, start=1):
        if s == "R":
            stack.append(i)
        else:
            blocks.append((stack.pop(), i))
    blocks.sort(key=lambda b: b[0])
    return Partition._unsafe(2 * path.n, tuple(blocks))


@lru_cache(maxsize=None)
def _a(n: int, k: int) -> int:
    if k == 0:
        return 1
    if k >= n:
        return 0
    # a_k^n = a_{k-1}^n + a_k^{n-1}
    return _a(n, k - 1) + _a(n - 1, k)


def count_a(n: int, k: int) -> int:
    """Number of non-crossing pair partitions of {1..2n} with exactly k inner blocks."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= k <= n:
        raise ValueError("k must be in 0..n")
    return _a(n, k)


@lru_cache(maxsize=None)
def _t(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    total = _t(n - 1, k - 1)
    for r in range(2, n + 1):
        for i in range(1, r):
            left = _t(r - 1, i)
            if left:
                total += left * _t(n - r, k - i)
    return total


def count_t(n: int, k: int) -> int:
    """Number of non-crossing partitions of {1..n} with exactly k blocks.

    Out-of-domain indices return 0; t(0,0) = 1 by convention.
    """
    if n < 0 or k < 0:
        return 0
    return _t(n, k)


def kreweras_t(n: int, k: int) -> int:
    """Closed form for count_t over exact integers (the division is exact)."""
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 1 or k > n:
        return 0
    num = math.factorial(n - 1) * math.factorial(n)
    den = (
        math.factorial(k - 1)
        * math.factorial(k)
        * math.factorial(n - k)
        * math.factorial(n - k + 1)
    )
    return num // den


@lru_cache(maxsize=None)
def _s(n: int, k: int, l: int) -> int:
    if k == 1:
        if n == 1:
            return 1 if l == 0 else 0
        # single outer block holds 1 and n; removing n leaves l+1 blocks
        return _t(n - 1, l + 1)
    total = 0
    for r in range(1, n + 1):
        for j in range(0, l + 1):
            left = count_s(r, 1, j)
            if left:
                total += left * count_s(n - r, k - 1, l - j)
    return total


def count_s(n: int, k: int, l: int) -> int:
    """Number of non-crossing partitions of {1..n} with k outer and l inner blocks.

    Zero outside the natural domain except s(0,0,0) = 1.
    """
    if n == 0:
        return 1 if (k == 0 and l == 0) else 0
    if n < 0 or k < 1 or l < 0 or k + l > n:
        return 0
    return _s(n, k, l)
