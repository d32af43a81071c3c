"""Selection of one part per partition in a bounded sequence, and insertion.

A sequence lambda^1..lambda^k comes with bounds p_2..p_k capping the largest
part of lambda^2..lambda^k.  Selection walks bottom-up: take the first part
of lambda^k, and from row j of lambda^i move to row j + p_i - lambda^i_j of
lambda^(i-1).  Selected rows may lie past the stored parts, in which case
they select a part of size 0 ("virtual" rows: no data is stored for them,
but the row arithmetic treats them like ordinary rows).

Insertion is the inverse: given a >= A (the current selection total), there
is exactly one way to add one part (possibly of size zero) to every
lambda^i so that the bounds still hold and the new selection total is a.
The inserted parts are precisely the parts selected afterwards, which is
why selection-plus-removal undoes insertion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InsertionUnderflow, InternalInvariantViolation
from .partition import Partition


@dataclass(frozen=True)
class PartitionSequence:
    """k partitions with bounds p_2..p_k; requires largest(lambda^i) <= p_i."""

    partitions: tuple[Partition, ...]
    bounds: tuple[int, ...]

    def __post_init__(self):
        k = len(self.partitions)
        if k < 1:
            raise ValueError("a sequence needs at least one partition")
        if len(self.bounds) != k - 1:
            raise ValueError(f"expected {k - 1} bounds for {k} partitions")
        for i, p in enumerate(self.bounds):
            if p < 0:
                raise ValueError("bounds must be non-negative")
            if self.partitions[i + 1].largest > p:
                raise ValueError(
                    f"partition {i + 2} has largest part "
                    f"{self.partitions[i + 1].largest} > bound {p}"
                )

    @property
    def k(self) -> int:
        return len(self.partitions)

    @property
    def total_size(self) -> int:
        return sum(p.size for p in self.partitions)

    def part_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.parts for p in self.partitions)


@dataclass(frozen=True)
class SelectionTrace:
    """Selected row index and part size per partition, and their total."""

    rows: tuple[int, ...]
    parts: tuple[int, ...]
    total: int

    def to_json_dict(self) -> dict:
        return {"rows": list(self.rows), "parts": list(self.parts), "total": self.total}


# ---------------------------------------------------------------------------
# Internal helpers on raw part tuples/lists.  seqs[i] holds lambda^(i+1);
# bounds[i-1] is p_(i+1), the cap for seqs[i] when i >= 1.
# ---------------------------------------------------------------------------


def _select_raw(seqs, bounds):
    """Selected (rows, parts) for a sequence of part lists/tuples."""
    k = len(seqs)
    rows = [0] * k
    parts = [0] * k
    j = 1
    for i in range(k - 1, -1, -1):
        s = seqs[i]
        v = s[j - 1] if j <= len(s) else 0
        rows[i] = j
        parts[i] = v
        if i > 0:
            j += bounds[i - 1] - v
    return rows, parts


def _remove_raw(seqs, rows):
    """Sequences with the selected rows deleted (virtual rows are no-ops)."""
    out = []
    for s, j in zip(seqs, rows):
        if j <= len(s):
            out.append(s[: j - 1] + s[j:])
        else:
            out.append(s)
    return out


def _base_insert_raw(seqs, rows, parts):
    """Duplicate each selected part directly above its selected row.

    Returns mutable lists; virtual (size-0) selections change nothing.
    """
    work = []
    for s, j, v in zip(seqs, rows, parts):
        w = list(s)
        if v > 0:
            w.insert(j - 1, v)
        work.append(w)
    return work


def _unit_step_raw(work, bounds):
    """Grow the inserted parts by one cell, preserving the insertion shape.

    If the selection of lambda^1 sits at row 1, its first part grows.
    Otherwise the first partition (smallest index) whose selected part is
    strictly below its ceiling grows: the ceiling is the part directly
    above, or p_i for a first-row selection with i >= 2.
    """
    rows, parts = _select_raw(work, bounds)
    if rows[0] == 1:
        if work[0]:
            work[0][0] += 1
        else:
            work[0].append(1)
        return
    for i in range(len(work)):
        j = rows[i]
        v = parts[i]
        if j == 1:
            # i == 0 was handled above, so bounds[i - 1] is in range
            if v < bounds[i - 1]:
                if work[i]:
                    work[i][0] += 1
                else:
                    work[i].append(1)
                return
        else:
            s = work[i]
            above = s[j - 2] if j - 1 <= len(s) else 0
            if v < above:
                if j <= len(s):
                    s[j - 1] += 1
                else:
                    if j != len(s) + 1:
                        raise InternalInvariantViolation(
                            "virtual selection grew past the first virtual row"
                        )
                    s.append(1)
                return
    raise InternalInvariantViolation("no partition can absorb another cell")


def _insert_raw(a, seqs, bounds):
    rows, parts = _select_raw(seqs, bounds)
    total = sum(parts)
    if a < total:
        raise InsertionUnderflow(f"cannot insert {a} < selection total {total}")
    work = _base_insert_raw(seqs, rows, parts)
    for _ in range(a - total):
        _unit_step_raw(work, bounds)
    return [tuple(w) for w in work]


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def select(seq: PartitionSequence) -> SelectionTrace:
    """Run the selection walk and return its trace."""
    rows, parts = _select_raw(seq.part_tuples(), seq.bounds)
    return SelectionTrace(tuple(rows), tuple(parts), sum(parts))


def remove_selected(seq: PartitionSequence) -> tuple[SelectionTrace, PartitionSequence]:
    """Delete the selected part from each partition.

    Returns the trace (whose total is the removed amount) and the reduced
    sequence, which still satisfies the bounds.
    """
    tuples = seq.part_tuples()
    rows, parts = _select_raw(tuples, seq.bounds)
    reduced = _remove_raw(tuples, rows)
    new_seq = PartitionSequence(
        tuple(Partition._fromparts(tuple(s)) for s in reduced), seq.bounds
    )
    return SelectionTrace(tuple(rows), tuple(parts), sum(parts)), new_seq


def insert(a: int, seq: PartitionSequence) -> PartitionSequence:
    """Insert a total of ``a`` cells, one new part per partition.

    Requires a >= select(seq).total.  Starts by duplicating every selected
    part directly above its row, then adds one cell at a time until the
    selection total reaches ``a``; the result is the unique sequence with
    that selection total obtainable by inserting one part into each
    partition within the bounds.
    """
    if a < 0:
        raise ValueError("insertion total must be non-negative")
    out = _insert_raw(a, seq.part_tuples(), seq.bounds)
    return PartitionSequence(
        tuple(Partition._fromparts(t) for t in out), seq.bounds
    )


def iterate_remove(
    seq: PartitionSequence, t: int
) -> tuple[tuple[int, ...], PartitionSequence]:
    """Apply remove_selected t times; returns the removed totals and residue.

    The totals are weakly decreasing: each removal only exposes rows at or
    below the previously selected ones.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    totals = []
    cur = seq
    for _ in range(t):
        trace, cur = remove_selected(cur)
        totals.append(trace.total)
    return tuple(totals), cur
