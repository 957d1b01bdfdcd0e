"""Exhaustive permutation verdicts: bijectivity, completeness level, cycle type."""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import ParameterError
from .gf import lcm
from .poly import mix_table, value_table


def collision(table):
    """First colliding pair ``(i, j)``, ``i < j``, scanning ``j`` upward; ``None`` for a bijection.

    ``j`` is the smallest index whose image already occurred, and ``i`` is
    where that image first occurred.
    """
    table = np.asarray(table, dtype=np.int64)
    _, first = np.unique(table, return_index=True)
    if len(first) == len(table):
        return None
    seen_first = np.zeros(len(table), dtype=bool)
    seen_first[first] = True
    j = int(np.argmin(seen_first))
    i = int(np.flatnonzero(table == table[j])[0])
    return (i, j)


def is_permutation(table):
    """``(True, None)`` for a bijective table, else ``(False, (i, j))``."""
    w = collision(table)
    return w is None, w


@dataclass
class PermReport:
    """Verdict for a polynomial ``f`` over GF(p^m).

    ``level`` is the largest ``k <= p-1`` with ``f + i x`` a permutation for
    all ``i <= k``, or -1 when ``f`` itself is not a permutation.
    ``level_failure_witness`` is ``(k, (i, j))`` for the first failing
    multiple, absent when the level is maximal.
    """

    is_permutation: bool
    collision_witness: tuple = None
    level: int = None
    level_failure_witness: tuple = None
    characteristic: int = None

    @property
    def maximally_complete(self):
        return self.level == self.characteristic - 1

    def to_dict(self):
        return {
            "is_permutation": self.is_permutation,
            "level": self.level,
            "witnesses": {
                "collision": list(self.collision_witness) if self.collision_witness else None,
                "level_failure": (
                    {"k": self.level_failure_witness[0], "pair": list(self.level_failure_witness[1])}
                    if self.level_failure_witness
                    else None
                ),
            },
        }


def completeness_level_of_table(field, table, b=1):
    """Completeness report for the function whose table is given (scaled by ``b``)."""
    failure = None
    level = field.p - 1
    first_witness = None
    for k in range(field.p):
        w = collision(mix_table(field, table, b, k))
        if k == 0:
            first_witness = w
        if w is not None:
            level = k - 1
            failure = (k, w)
            break
    return PermReport(
        is_permutation=first_witness is None,
        collision_witness=first_witness,
        level=level,
        level_failure_witness=failure,
        characteristic=field.p,
    )


def completeness_level(f):
    """Exact completeness level of the sparse polynomial ``f``, with witnesses."""
    return completeness_level_of_table(f.field, value_table(f))


@dataclass
class CycleType:
    """Cycle lengths of a permutation of GF(Q) as ``{length: count}``."""

    counts: dict = dc_field(default_factory=dict)

    @property
    def order(self):
        return lcm(self.counts)

    @property
    def fixed_points(self):
        return self.counts.get(1, 0)

    @property
    def size(self):
        return sum(k * v for k, v in self.counts.items())

    def as_pairs(self):
        return [[k, self.counts[k]] for k in sorted(self.counts)]

    def __eq__(self, other):
        if isinstance(other, CycleType):
            return self.counts == other.counts
        if isinstance(other, dict):
            return self.counts == other
        return NotImplemented

    def __str__(self):
        return " ".join(f"{k}^{v}" for k, v in self.as_pairs())


def cycle_type(table):
    """Cycle decomposition of a permutation table."""
    table = np.asarray(table, dtype=np.int64)
    ok, w = is_permutation(table)
    if not ok:
        raise ParameterError(f"not a permutation: elements {w[0]} and {w[1]} share an image")
    images = table.tolist()
    seen = bytearray(len(images))
    counts = {}
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = 1
            i = images[i]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return CycleType(dict(sorted(counts.items())))


def permutation_order(table):
    return cycle_type(table).order


def report_dict(f_or_table, field=None):
    """Full JSON-ready report: level, witnesses, cycle type, order, fixed points."""
    if field is None:
        field = f_or_table.field
        table = value_table(f_or_table)
    else:
        table = np.asarray(f_or_table, dtype=np.int64)
    rep = completeness_level_of_table(field, table)
    out = rep.to_dict()
    if rep.is_permutation:
        ct = cycle_type(table)
        out.update(cycle_type=ct.as_pairs(), order=ct.order, fixed_points=ct.fixed_points)
    else:
        out.update(cycle_type=None, order=None, fixed_points=None)
    return out
