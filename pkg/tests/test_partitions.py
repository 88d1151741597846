import pytest

from cdiffcat.partitions import SetPartition, bell, block_projection, enumerate_partitions
from cdiffcat.polycat import ArityError, identity, select


def oracle(n):
    """Restricted growth strings: element i joins any existing block or opens the next one."""
    out = []

    def go(i, labels, k):
        if i == n:
            blocks = [[] for _ in range(k)]
            for elem, lab in enumerate(labels, start=1):
                blocks[lab].append(elem)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for lab in range(k + 1):
            go(i + 1, labels + [lab], max(k, lab + 1))

    go(0, [], 0)
    return out


ORACLE_COUNTS = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_oracle_counts_frozen():
    assert [len(oracle(n)) for n in range(9)] == ORACLE_COUNTS


@pytest.mark.parametrize("n", range(9))
def test_enumeration_matches_oracle(n):
    parts = enumerate_partitions(n)
    assert len(parts) == len(oracle(n)) == bell(n)
    assert sorted(p.blocks for p in parts) == sorted(oracle(n))
    assert len(set(parts)) == len(parts)
    for p in parts:
        flat = sorted(i for b in p.blocks for i in b)
        assert flat == list(range(1, n + 1))
        assert all(b and list(b) == sorted(b) for b in p.blocks)
        mins = [b[0] for b in p.blocks]
        assert mins == sorted(mins)


def test_small_cases():
    assert enumerate_partitions(0) == [SetPartition(())]
    assert enumerate_partitions(1) == [SetPartition(((1,),))]
    assert bell(0) == 1 and bell(4) == 15 and bell(7) == 877


def test_deterministic_order():
    assert enumerate_partitions(4) == enumerate_partitions(4)
    assert [str(p) for p in enumerate_partitions(3)] == ["123", "12|3", "13|2", "1|23", "1|2|3"]


def test_cap():
    with pytest.raises(ValueError):
        enumerate_partitions(9)
    assert len(enumerate_partitions(9, cap=9)) == 21147
    assert bell(9) == 21147


def test_block_projection():
    assert block_projection([1, 2, 3], 3) == identity(3)
    assert block_projection([2], 3) == select(3, [1])
    assert block_projection([1, 3], 3) == select(3, [0, 2])
    # with a point block of arity 2 in front, slots of width 2
    assert block_projection([2], 2, width=2, base=2) == select(6, [0, 1, 4, 5])
    for bad in ([], [0], [4], [2, 1]):
        with pytest.raises(ArityError):
            block_projection(bad, 3)
