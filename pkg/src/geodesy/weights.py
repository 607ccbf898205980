"""Signed weight multiplicity tables and their enumeration.

A WeightData records the integer eigenvalues of the diagonalized weight
operator separately on the positive-signature block (plus) and the
negative-signature block (minus).  A table is representation-admissible
when the combined multiset m(w) = plus(w) + minus(w) is symmetric under
negation and satisfies m(w) >= m(w+2) for w >= 0, i.e. when it is the
weight multiset of a finite-dimensional sl(2) representation.
"""

from __future__ import annotations

import hashlib
import json
from typing import Dict, Iterator, List, Mapping, Tuple


def _clean(table: Mapping[int, int], name: str) -> Dict[int, int]:
    out = {}
    for w, m in sorted(table.items(), reverse=True):
        if not isinstance(w, int) or isinstance(w, bool):
            raise ValueError(f"{name} weight {w!r} is not an integer")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"{name} multiplicity for weight {w} must be a positive integer")
        out[w] = m
    return out


class WeightData:
    """Weight -> multiplicity tables for the two signature blocks."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus: Mapping[int, int], minus: Mapping[int, int]):
        object.__setattr__(self, "plus", _clean(plus, "plus"))
        object.__setattr__(self, "minus", _clean(minus, "minus"))

    def __setattr__(self, name, value):
        raise AttributeError("WeightData is immutable")

    def __reduce__(self):
        return (WeightData, (self.plus, self.minus))

    # -- basic queries ---------------------------------------------------

    @property
    def dim_plus(self) -> int:
        return sum(self.plus.values())

    @property
    def dim_minus(self) -> int:
        return sum(self.minus.values())

    def total(self, w: int) -> int:
        return self.plus.get(w, 0) + self.minus.get(w, 0)

    def all_weights(self) -> List[int]:
        return sorted(set(self.plus) | set(self.minus), reverse=True)

    def is_empty(self) -> bool:
        return not self.plus and not self.minus

    def is_admissible(self) -> bool:
        weights = self.all_weights()
        if not weights:
            return True
        top = max(abs(w) for w in weights)
        for w in range(0, top + 1):
            if self.total(w) != self.total(-w):
                return False
            if self.total(w) < self.total(w + 2):
                return False
        return True

    def sector(self, parity: int) -> "WeightData":
        """Restriction to the weights of the given parity (0 even, 1 odd)."""
        return WeightData(
            {w: m for w, m in self.plus.items() if w % 2 == parity},
            {w: m for w, m in self.minus.items() if w % 2 == parity},
        )

    def odd_sector(self) -> "WeightData":
        return self.sector(1)

    def even_sector(self) -> "WeightData":
        return self.sector(0)

    # -- canonical forms -------------------------------------------------

    def key(self) -> tuple:
        return (
            tuple(sorted(self.plus.items())),
            tuple(sorted(self.minus.items())),
        )

    def to_json_dict(self) -> dict:
        return {
            "plus": {str(w): m for w, m in sorted(self.plus.items())},
            "minus": {str(w): m for w, m in sorted(self.minus.items())},
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "WeightData":
        return cls(
            {int(w): int(m) for w, m in doc.get("plus", {}).items()},
            {int(w): int(m) for w, m in doc.get("minus", {}).items()},
        )

    def digest(self) -> str:
        """Canonical hash of the multiplicity tables; names certificate files."""
        blob = json.dumps(self.to_json_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def layout(self) -> "Layout":
        return Layout(self)

    def __eq__(self, other):
        if not isinstance(other, WeightData):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"WeightData(plus={self.plus}, minus={self.minus})"

    def describe(self) -> str:
        def side(table):
            return "{" + ", ".join(f"{w}:{m}" for w, m in sorted(table.items(), reverse=True)) + "}"

        return f"plus {side(self.plus)} minus {side(self.minus)}"


class Layout:
    """Fixed basis order for a WeightData: plus block first, weights descending.

    Exposes the half-open row range of each (side, weight) eigenspace inside
    the assembled matrices, so the exact and floating-point assemblers agree.
    """

    def __init__(self, wd: WeightData):
        self.weight_data = wd
        self.spans: Dict[Tuple[str, int], Tuple[int, int]] = {}
        pos = 0
        for w in sorted(wd.plus, reverse=True):
            self.spans[("plus", w)] = (pos, pos + wd.plus[w])
            pos += wd.plus[w]
        self.n_plus = pos
        for w in sorted(wd.minus, reverse=True):
            self.spans[("minus", w)] = (pos, pos + wd.minus[w])
            pos += wd.minus[w]
        self.size = pos
        self.n_minus = pos - self.n_plus

    def span(self, side: str, weight: int) -> Tuple[int, int]:
        return self.spans[(side, weight)]

    def weight_vector(self) -> List[int]:
        vec = [0] * self.size
        for (side, w), (a, b) in self.spans.items():
            for i in range(a, b):
                vec[i] = w
        return vec


# ----------------------------------------------------------------------
# Enumeration


def _partitions(total: int, max_part: int) -> Iterator[List[int]]:
    """Partitions of total into parts <= max_part, descending, largest first."""
    if total == 0:
        yield []
        return
    for part in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


def _total_spectrum(partition: List[int]) -> Dict[int, int]:
    """Each part d contributes the weight string d-1, d-3, ..., -(d-1)."""
    table: Dict[int, int] = {}
    for d in partition:
        for w in range(d - 1, -d, -2):
            table[w] = table.get(w, 0) + 1
    return table


def _splits(weights: List[int], totals: List[int], target: int) -> Iterator[List[int]]:
    """All ways to pick 0 <= a_i <= totals[i] with sum(a_i) = target."""
    if not weights:
        if target == 0:
            yield []
        return
    head = totals[0]
    tail_capacity = sum(totals[1:])
    lo = max(0, target - tail_capacity)
    hi = min(head, target)
    for a in range(lo, hi + 1):
        for rest in _splits(weights[1:], totals[1:], target - a):
            yield [a] + rest


def enumerate_weight_data(p: int, max_weight: int | None = None) -> Iterator[WeightData]:
    """Every admissible WeightData with both block dimensions equal to p.

    The default weight bound 2p - 1 is the largest weight of any irreducible
    representation that fits in dimension 2p; a smaller bound prunes, a larger
    one never adds anything.  Enumeration order is lexicographic on the
    combined multiplicity vectors, smallest first.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    if max_weight is None:
        max_weight = 2 * p - 1
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    found = []
    for partition in _partitions(2 * p, max_weight + 1):
        total = _total_spectrum(partition)
        weights = sorted(total, reverse=True)
        totals = [total[w] for w in weights]
        for pick in _splits(weights, totals, p):
            plus = {w: a for w, a in zip(weights, pick) if a > 0}
            minus = {w: t - a for w, t, a in zip(weights, totals, pick) if t - a > 0}
            found.append(WeightData(plus, minus))
    span = range(max_weight, -max_weight - 1, -1)

    def lex_key(wd: WeightData):
        return tuple(wd.plus.get(w, 0) for w in span) + tuple(wd.minus.get(w, 0) for w in span)

    found.sort(key=lex_key)
    seen = set()
    for wd in found:
        if wd.key() not in seen:
            seen.add(wd.key())
            yield wd
