"""Finite posets as idempotent semigroups, and completion by cuts.

A finite idempotent semigroup is an upper semilattice; we present it as a
partial order.  Antichains and other join-free posets are accepted as inputs
to the completion routines (the completion is what restores the joins), but
``has_all_joins`` reports whether the input is a genuine semilattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

COMPLETION_MAX_ELEMENTS = 12


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteIS:
    """A finite partial order: element labels plus a reflexive-transitive leq relation."""

    elements: Tuple[str, ...]
    relation: FrozenSet[Tuple[int, int]]

    @classmethod
    def from_pairs(cls, elements: Sequence[str],
                   pairs: Iterable[Tuple[str, str]]) -> "FiniteIS":
        """Build from (lower, upper) label pairs, taking the reflexive-transitive closure."""
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate element labels")
        index = {lab: i for i, lab in enumerate(elements)}
        n = len(elements)
        rel = {(i, i) for i in range(n)}
        for a, b in pairs:
            if a not in index or b not in index:
                raise PosetError(f"unknown element in relation {a!r} < {b!r}")
            rel.add((index[a], index[b]))
        changed = True
        while changed:
            changed = False
            for (i, j), (k, l) in itertools.product(list(rel), repeat=2):
                if j == k and (i, l) not in rel:
                    rel.add((i, l))
                    changed = True
        s = cls(elements, frozenset(rel))
        s.validate()
        return s

    @classmethod
    def chain(cls, labels: Sequence[str]) -> "FiniteIS":
        return cls.from_pairs(labels, [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)])

    @classmethod
    def antichain(cls, labels: Sequence[str]) -> "FiniteIS":
        return cls.from_pairs(labels, [])

    def validate(self) -> None:
        n = len(self.elements)
        for i in range(n):
            if (i, i) not in self.relation:
                raise PosetError("not a partial order: relation is not reflexive")
        for i, j in self.relation:
            if i != j and (j, i) in self.relation:
                raise PosetError("not a partial order: relation is not antisymmetric")
        for i, j in self.relation:
            for k in range(n):
                if (j, k) in self.relation and (i, k) not in self.relation:
                    raise PosetError("not a partial order: relation is not transitive")

    # --- basic order queries ---

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise PosetError(f"unknown element {label!r}") from None

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def upper_bounds(self, subset: Iterable[int]) -> FrozenSet[int]:
        subset = list(subset)
        return frozenset(j for j in range(len(self.elements))
                         if all(self.leq(i, j) for i in subset))

    def lower_bounds(self, subset: Iterable[int]) -> FrozenSet[int]:
        subset = list(subset)
        return frozenset(j for j in range(len(self.elements))
                         if all(self.leq(j, i) for i in subset))

    def join_index(self, subset: Iterable[int]) -> Optional[int]:
        """Index of the least upper bound of a subset, or None if it does not exist."""
        ub = self.upper_bounds(subset)
        for u in ub:
            if all(self.leq(u, v) for v in ub):
                return u
        return None

    def has_all_joins(self) -> bool:
        n = len(self.elements)
        return all(self.join_index({i, j}) is not None
                   for i in range(n) for j in range(n))

    def down_set(self, i: int) -> FrozenSet[int]:
        return frozenset(j for j in range(len(self.elements)) if self.leq(j, i))

    def top_index(self) -> Optional[int]:
        return self.join_index(range(len(self.elements))) if self.elements else None

    def bottom_index(self) -> Optional[int]:
        n = len(self.elements)
        for i in range(n):
            if all(self.leq(i, j) for j in range(n)):
                return i
        return None

    def is_complete_lattice(self) -> bool:
        n = len(self.elements)
        for mask in range(1 << n):
            subset = [i for i in range(n) if mask >> i & 1]
            if self.join_index(subset) is None:
                return False
            lb = self.lower_bounds(subset)
            if not any(all(self.leq(v, u) for v in lb) for u in lb):
                return False
        return True


def standard_order(s: FiniteIS, x: str, y: str) -> bool:
    """x <= y in the standard order (equivalently join(x, y) = y)."""
    return s.leq(s.index(x), s.index(y))


@dataclass(frozen=True)
class CompletionResult:
    completed: FiniteIS
    embedding: Dict[str, str]


def _enumerate_cuts(s: FiniteIS) -> List[FrozenSet[int]]:
    n = len(s.elements)
    cuts = []
    for mask in range(1 << n):
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if s.lower_bounds(s.upper_bounds(subset)) == subset:
            cuts.append(subset)
    cuts.sort(key=lambda c: (len(c), sorted(c)))
    return cuts


def dm_completion(s: FiniteIS) -> CompletionResult:
    """Normal (Dedekind-MacNeille) completion by cuts.

    Cuts are the subsets equal to the lower bounds of their upper bounds,
    ordered by inclusion; an element embeds as its principal cut.  The result
    is a complete lattice whose bottom is the empty supremum.
    """
    n = len(s.elements)
    if n > COMPLETION_MAX_ELEMENTS:
        raise PosetError(f"completion limited to {COMPLETION_MAX_ELEMENTS} elements, got {n}")
    s.validate()
    cuts = _enumerate_cuts(s)
    principal = {s.down_set(i): s.elements[i] for i in range(n)}
    full = frozenset(range(n))

    labels: List[str] = []
    synth = 0
    for cut in cuts:
        if cut in principal:
            labels.append(principal[cut])
        elif not cut:
            labels.append("_bot")
        elif cut == full:
            labels.append("_top")
        else:
            labels.append(f"_cut{synth}")
            synth += 1

    relation = frozenset((i, j) for i, cut_i in enumerate(cuts)
                         for j, cut_j in enumerate(cuts) if cut_i <= cut_j)
    completed = FiniteIS(tuple(labels), relation)
    completed.validate()
    if not completed.is_complete_lattice():
        raise PosetError("internal error: cut completion is not a complete lattice")
    embedding = {s.elements[i]: principal[s.down_set(i)] for i in range(n)}
    return CompletionResult(completed, embedding)


def b_completion(s: FiniteIS) -> CompletionResult:
    """Bounded completion.

    For a finite input every subset is bounded once the missing joins are
    adjoined, so the bounded completion coincides with the normal completion;
    the general relation (normal completion = bounded completion plus a top)
    is degenerate here because a finite nonempty semilattice already contains
    its own supremum.
    """
    result = dm_completion(s)
    top = result.completed.top_index()
    if top is None and result.completed.elements:
        raise PosetError("internal error: completion lacks a top element")
    return result


def order_isomorphic(s: FiniteIS, t: FiniteIS) -> bool:
    """Brute-force order isomorphism test for small posets."""
    n = len(s.elements)
    if n != len(t.elements):
        return False
    if n > 8:
        raise PosetError("order_isomorphic limited to 8 elements")

    def profile(u: FiniteIS, i: int):
        return (len(u.down_set(i)),
                sum(1 for j in range(n) if u.leq(i, j)))

    sp = [profile(s, i) for i in range(n)]
    tp = [profile(t, i) for i in range(n)]
    if sorted(sp) != sorted(tp):
        return False
    candidates = [[j for j in range(n) if tp[j] == sp[i]] for i in range(n)]

    def extend(assigned: List[int]) -> bool:
        i = len(assigned)
        if i == n:
            return True
        for j in candidates[i]:
            if j in assigned:
                continue
            ok = all((s.leq(k, i) == t.leq(assigned[k], j)) and
                     (s.leq(i, k) == t.leq(j, assigned[k]))
                     for k in range(i))
            if ok and extend(assigned + [j]):
                return True
        return False

    return extend([])
