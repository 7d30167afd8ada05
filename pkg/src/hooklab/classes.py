"""The four restricted partition classes and their exhaustive enumerators.

A partition is a weakly decreasing tuple of positive integers.  The classes:

* ``R1`` -- consecutive parts differ by at least 2,
* ``R2`` -- every part is congruent to 1 or 4 mod 5,
* ``G1`` -- consecutive parts differ by at least 2, and by more than 2
  whenever the larger part is odd,
* ``G2`` -- every part is congruent to 1, 5 or 6 mod 8.

``R1``/``R2`` are equinumerous at every size by the first Rogers-Ramanujan
identity, ``G1``/``G2`` by the first little Gollnitz identity; those facts
are verified elsewhere (``qseries``), never assumed here.

Gap conditions constrain adjacent actual parts only: a final part of any
size is legal (so e.g. (4, 1) belongs to G1).  The empty partition belongs
to every class.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator

Partition = tuple  # weakly decreasing tuple of positive ints


class ClassId(enum.Enum):
    """Identifier for one of the four restriction classes."""

    R1 = "r1"
    R2 = "r2"
    G1 = "g1"
    G2 = "g2"


#: residue classes (set of residues, modulus) for the congruence-type classes
RESIDUE_CLASSES: dict[ClassId, tuple[frozenset, int]] = {
    ClassId.R2: (frozenset({1, 4}), 5),
    ClassId.G2: (frozenset({1, 5, 6}), 8),
}


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing sequence of positive ints."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def contains(class_id: ClassId, parts: Partition) -> bool:
    """Membership test for a valid partition; vacuous for the empty one."""
    if class_id is ClassId.R1:
        return all(parts[i] - parts[i + 1] >= 2 for i in range(len(parts) - 1))
    if class_id is ClassId.G1:
        for i in range(len(parts) - 1):
            gap = parts[i] - parts[i + 1]
            if gap < 2 or (gap == 2 and parts[i] % 2 == 1):
                return False
        return True
    residues, modulus = RESIDUE_CLASSES[class_id]
    return all(p % modulus in residues for p in parts)


@lru_cache(maxsize=None)
def _max_tail_r1(cap: int) -> int:
    # largest sum achievable with parts <= cap under gaps >= 2
    if cap <= 0:
        return 0
    return cap + _max_tail_r1(cap - 2)


@lru_cache(maxsize=None)
def _max_tail_g1(cap: int) -> int:
    # same, under the G1 gap rule (next part <= cap-2, or cap-3 below an odd part)
    if cap <= 0:
        return 0
    return cap + _max_tail_g1(cap - 2 if cap % 2 == 0 else cap - 3)


def _iter_gap_class(n: int, next_cap, max_tail) -> Iterator[Partition]:
    # recursive descent, largest part first -> descending lexicographic order
    prefix: list = []

    def rec(rem: int, cap: int) -> Iterator[Partition]:
        if rem == 0:
            yield tuple(prefix)
            return
        for p in range(min(rem, cap), 0, -1):
            lower = next_cap(p)
            if rem - p <= max_tail(lower):
                prefix.append(p)
                yield from rec(rem - p, lower)
                prefix.pop()

    return rec(n, n)


def _iter_residue_class(n: int, residues: frozenset, modulus: int) -> Iterator[Partition]:
    # residue 1 is allowed in both congruence classes, so every branch completes
    allowed = [v for v in range(n, 0, -1) if v % modulus in residues]
    prefix: list = []

    def rec(rem: int, idx: int) -> Iterator[Partition]:
        if rem == 0:
            yield tuple(prefix)
            return
        for j in range(idx, len(allowed)):
            v = allowed[j]
            if v > rem:
                continue
            prefix.append(v)
            yield from rec(rem - v, j)
            prefix.pop()

    return rec(n, 0)


def iter_class(class_id: ClassId, n: int) -> Iterator[Partition]:
    """Generate every partition of ``n`` in the class exactly once,
    in descending lexicographic order of part tuples."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if class_id is ClassId.R1:
        return _iter_gap_class(n, lambda p: p - 2, _max_tail_r1)
    if class_id is ClassId.G1:
        return _iter_gap_class(n, lambda p: p - 2 if p % 2 == 0 else p - 3, _max_tail_g1)
    residues, modulus = RESIDUE_CLASSES[class_id]
    return _iter_residue_class(n, residues, modulus)


def enumerate_class(class_id: ClassId, n: int) -> list:
    """Materialized :func:`iter_class`; ``[()]`` for n = 0."""
    return list(iter_class(class_id, n))


def count(class_id: ClassId, n: int) -> int:
    """Cardinality of ``enumerate_class(class_id, n)``."""
    return sum(1 for _ in iter_class(class_id, n))


def all_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All unrestricted partitions of ``n``, descending lexicographic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield ()
        return
    for p in range(cap, 0, -1):
        for rest in all_partitions(n - p, p):
            yield (p,) + rest
