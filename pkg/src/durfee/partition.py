"""Integer partitions: the core value type, enumeration, and count tables."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import EmptyPartition


class Partition:
    """A weakly decreasing sequence of positive integer parts.

    Zero parts are never stored; reading past the last part yields 0
    (see :meth:`part`).  Instances are immutable and hashable.
    """

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        ps = tuple(int(x) for x in parts)
        prev = None
        for x in ps:
            if x < 1:
                raise ValueError(f"parts must be positive, got {x}")
            if prev is not None and x > prev:
                raise ValueError(f"parts must be weakly decreasing, got {ps}")
            prev = x
        object.__setattr__(self, "parts", ps)

    @classmethod
    def _fromparts(cls, parts: tuple[int, ...]) -> "Partition":
        # Fast path for internally produced, already-valid part tuples.
        self = object.__new__(cls)
        object.__setattr__(self, "parts", parts)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        """Sum of the parts; 0 for the empty partition."""
        return sum(self.parts)

    @property
    def largest(self) -> int:
        """The first (largest) part, 0 if empty."""
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        """The last (smallest non-zero) part."""
        if not self.parts:
            raise EmptyPartition("empty partition has no smallest part")
        return self.parts[-1]

    def part(self, j: int) -> int:
        """The j-th part (1-based); 0 beyond the last stored part."""
        if j < 1:
            raise ValueError(f"part index must be >= 1, got {j}")
        ps = self.parts
        return ps[j - 1] if j <= len(ps) else 0

    def conjugate(self) -> "Partition":
        """Reflect the Young diagram across its main diagonal."""
        ps = self.parts
        if not ps:
            return _EMPTY
        out = []
        n = len(ps)
        j = n - 1
        for c in range(1, ps[0] + 1):
            # number of parts >= c; parts are sorted, so scan from the tail
            while j >= 0 and ps[j] < c:
                j -= 1
            out.append(j + 1)
        return Partition._fromparts(tuple(out))

    def text(self) -> str:
        """Text form: comma-separated parts, '-' for the empty partition."""
        return ",".join(str(x) for x in self.parts) if self.parts else "-"

    @classmethod
    def from_text(cls, s: str) -> "Partition":
        s = s.strip()
        if s == "-" or s == "":
            return _EMPTY
        try:
            parts = [int(tok) for tok in s.split(",")]
        except ValueError:
            raise ValueError(f"bad partition text {s!r}") from None
        return cls(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


_EMPTY = Partition._fromparts(())


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    The order starts at (n) and ends at (1,...,1); it is fixed so golden
    files stay stable.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _partition_tuples(n):
        yield Partition._fromparts(parts)


def _iter_partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    r = (n,)
    yield r
    while True:
        # find rightmost part > 1, decrement it, redistribute the remainder
        i = len(r) - 1
        while i >= 0 and r[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(r) - i
        head = r[:i] + (r[i] - 1,)
        cap = head[-1]
        body = []
        while rem > 0:
            x = min(cap, rem)
            body.append(x)
            rem -= x
        r = head + tuple(body)
        yield r


@lru_cache(maxsize=None)
def _partition_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_iter_partition_tuples(n))


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n as a cached tuple (reverse-lexicographic)."""
    return tuple(Partition._fromparts(t) for t in _partition_tuples(n))


def p_table(N: int) -> list[int]:
    """Exact values p(0..N) via the pentagonal-number recurrence."""
    if N < 0:
        raise ValueError("N must be non-negative")
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 == 1 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p


def durfee_square_widths(lam: Partition) -> tuple[int, ...]:
    """Widths of the successive Durfee squares of ``lam``.

    Each square is the largest d with at least d remaining rows of length
    >= d; the next square is taken below it.  The empty partition has no
    squares.  This is the classical square-only rule, kept independent of
    the general rectangle decomposition so the two can cross-check.
    """
    ps = lam.parts
    widths = []
    off = 0
    n = len(ps)
    while off < n:
        d = 0
        while off + d < n and ps[off + d] >= d + 1:
            d += 1
        # any non-empty remainder admits at least a 1x1 square
        widths.append(d)
        off += d
    return tuple(widths)


def q_table(k: int, N: int) -> list[int]:
    """Counts q_k(0..N) of partitions with at most k Durfee squares."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if N < 0:
        raise ValueError("N must be non-negative")
    out = []
    for n in range(N + 1):
        count = 0
        for parts in _partition_tuples(n):
            if _square_count(parts) <= k:
                count += 1
        out.append(count)
    return out


def _square_count(ps: tuple[int, ...]) -> int:
    count = 0
    off = 0
    n = len(ps)
    while off < n:
        d = 0
        while off + d < n and ps[off + d] >= d + 1:
            d += 1
        count += 1
        off += d
    return count
