"""Set partitions of {1..n} into non-empty blocks."""
from __future__ import annotations

import threading
from typing import NamedTuple

from .polycat import ArityError, INT, select


class SetPartition(NamedTuple):
    """Blocks in canonical form: each block ascending, blocks ordered by minimum."""

    blocks: tuple

    @property
    def size(self):
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        if not self.blocks:
            return "{}"
        return "|".join("".join(str(i) for i in b) if all(i < 10 for i in b)
                         else ",".join(str(i) for i in b) for b in self.blocks)


PARTITION_CAP = 8


def _grow(n):
    # insert n into each block of every partition of [n-1], or open a new block
    if n == 0:
        yield ()
        return
    for blocks in _grow(n - 1):
        for i in range(len(blocks)):
            yield blocks[:i] + (blocks[i] + (n,),) + blocks[i + 1:]
        yield blocks + ((n,),)


_cache = {}
_lock = threading.Lock()


def enumerate_partitions(n, cap=None):
    """All partitions of ``{1..n}``; ``n = 0`` yields the single empty partition."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = PARTITION_CAP if cap is None else cap
    if cap is not False and n > cap:
        raise ValueError(f"partition enumeration capped at n={cap}")
    got = _cache.get(n)
    if got is None:
        with _lock:
            got = _cache.get(n)
            if got is None:
                got = tuple(SetPartition(b) for b in _grow(n))
                _cache[n] = got
    return list(got)


# public name mirrors the operation; the builtin is rarely needed in this module
enumerate = enumerate_partitions


_bell = [1]


def bell(n):
    """Bell numbers via the Bell triangle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    with _lock:
        if len(_bell) <= n:
            row = [1]
            # rebuild the triangle; cheap for the sizes used here
            rows = [[1]]
            while len(rows) <= n:
                prev = rows[-1]
                row = [prev[-1]]
                for v in prev:
                    row.append(row[-1] + v)
                rows.append(row)
            _bell[:] = [r[0] for r in rows]
        return _bell[n]


def block_projection(I, slots, width=1, base=0, ring=INT):
    """``π_I``: select the linear slots listed in ``I`` (1-based, ascending).

    The domain is ``base + slots*width`` variables: an optional base block of
    ``base`` variables followed by ``slots`` linear blocks of ``width`` each.
    With ``base > 0`` the result is ``<π0, π_I>``.
    """
    I = list(I)
    if not I:
        raise ArityError("index set must be non-empty")
    if I != sorted(set(I)):
        raise ArityError("index set must be sorted without repeats")
    if I[0] < 1 or I[-1] > slots:
        raise ArityError(f"index set {I} out of range 1..{slots}")
    idx = list(range(base))
    for i in I:
        start = base + (i - 1) * width
        idx.extend(range(start, start + width))
    return select(base + slots * width, idx, ring)
