"""Finite-dimensional semimodules over the extended max-plus scalars.

A vector is a function on a finite coordinate set (optionally labeled); all
module operations are coordinatewise and exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .report import CheckReport
from .scalars import (BOTTOM, TOP, ExtendedScalar, big_inf, big_sup, finite,
                      s_add, s_mul)


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class FinVector:
    coords: Tuple[ExtendedScalar, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.coords):
            raise DimensionMismatchError("label count does not match dimension")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_bottom() for c in self.coords)

    def is_all_top(self) -> bool:
        return all(c.is_top() for c in self.coords)

    def __repr__(self) -> str:
        from .scalars import format_scalar
        return "FinVector(" + " ".join(format_scalar(c) for c in self.coords) + ")"


def vector(values: Iterable, labels: Optional[Sequence[str]] = None) -> FinVector:
    """Build a vector from scalars, ints, Fractions, or mixed."""
    coords = tuple(v if isinstance(v, ExtendedScalar) else finite(v) for v in values)
    return FinVector(coords, tuple(labels) if labels is not None else None)


def zero_vector(dim: int, labels: Optional[Sequence[str]] = None) -> FinVector:
    return FinVector((BOTTOM,) * dim, tuple(labels) if labels is not None else None)


def top_vector(dim: int, labels: Optional[Sequence[str]] = None) -> FinVector:
    return FinVector((TOP,) * dim, tuple(labels) if labels is not None else None)


def unit_vector(i: int, dim: int) -> FinVector:
    from .scalars import ONE
    return FinVector(tuple(ONE if j == i else BOTTOM for j in range(dim)))


def _join_labels(x: FinVector, y: FinVector) -> Optional[Tuple[str, ...]]:
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if x.labels is not None and y.labels is not None and x.labels != y.labels:
        raise DimensionMismatchError("coordinate labels disagree")
    return x.labels if x.labels is not None else y.labels


def v_add(x: FinVector, y: FinVector) -> FinVector:
    labels = _join_labels(x, y)
    return FinVector(tuple(s_add(a, b) for a, b in zip(x.coords, y.coords)), labels)


def v_scale(k: ExtendedScalar, x: FinVector) -> FinVector:
    return FinVector(tuple(s_mul(k, c) for c in x.coords), x.labels)


def v_leq(x: FinVector, y: FinVector) -> bool:
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")
    return all(a <= b for a, b in zip(x.coords, y.coords))


def v_sup(xs: Iterable[FinVector], dim: Optional[int] = None) -> FinVector:
    xs = list(xs)
    if not xs:
        if dim is None:
            raise DimensionMismatchError("empty supremum needs an explicit dimension")
        return zero_vector(dim)
    acc = xs[0]
    for x in xs[1:]:
        acc = v_add(acc, x)
    return acc


def v_inf(xs: Iterable[FinVector], dim: Optional[int] = None) -> FinVector:
    xs = list(xs)
    if not xs:
        if dim is None:
            raise DimensionMismatchError("empty infimum needs an explicit dimension")
        return top_vector(dim)
    labels = xs[0].labels
    for x in xs[1:]:
        labels = _join_labels(xs[0], x)
    return FinVector(tuple(big_inf(x.coords[j] for x in xs) for j in range(xs[0].dim)),
                     labels)


@dataclass(frozen=True)
class SpanBasis:
    """Generators of a finitely generated subsemimodule; zero generators are dropped."""

    generators: Tuple[FinVector, ...]

    @classmethod
    def of(cls, generators: Iterable[FinVector]) -> "SpanBasis":
        gens = [g for g in generators if not g.is_zero()]
        dims = {g.dim for g in gens}
        if len(dims) > 1:
            raise DimensionMismatchError("generators have mixed dimensions")
        return cls(tuple(gens))

    @property
    def count(self) -> int:
        return len(self.generators)


def _residual(a: ExtendedScalar, b: ExtendedScalar) -> ExtendedScalar:
    """Greatest k with k*b <= a (residuation of the scalar multiplication)."""
    if b.is_bottom():
        return TOP                       # no constraint: k*(-inf) = -inf <= a always
    if b.is_top():
        return TOP if a.is_top() else BOTTOM   # only k = -inf keeps k*(+inf) below a
    if a.is_top():
        return TOP
    if a.is_bottom():
        return BOTTOM
    return finite(a.q - b.q)


def project_onto_span(y: FinVector, w: SpanBasis) -> Tuple[FinVector, bool]:
    """Residuated projection of y onto the span of w.

    For each generator the greatest admissible coefficient is the meet of the
    coordinatewise residuals; the projection is the supremum of the scaled
    generators and is always below y.  ``member`` reports whether y itself is
    in the span.
    """
    parts = []
    for g in w.generators:
        if g.dim != y.dim:
            raise DimensionMismatchError(f"dimension mismatch: {g.dim} vs {y.dim}")
        k = big_inf(_residual(a, b) for a, b in zip(y.coords, g.coords))
        parts.append(v_scale(k, g))
    projection = FinVector(v_sup(parts, dim=y.dim).coords, y.labels)
    return projection, projection.coords == y.coords


def check_b_space_axioms(samples: Sequence[FinVector],
                         scalars: Sequence[ExtendedScalar]) -> CheckReport:
    """Check the b-space meet law and both generalized distributive laws.

    The meet law (inf Q) * x = inf (Q * x) is checked over every nonempty
    subset Q of the scalars and every sample vector except the all-top one,
    which the law explicitly exempts.
    """
    samples = list(samples)
    scalars = list(scalars)
    if not samples:
        raise ValueError("need at least one sample vector")
    dim = samples[0].dim
    report = CheckReport()

    nonempty_qs = [list(c) for r in range(1, len(scalars) + 1)
                   for c in itertools.combinations(scalars, r)]
    all_qs = [[]] + nonempty_qs
    subsets_x = [list(c) for r in range(len(samples) + 1)
                 for c in itertools.combinations(samples, r)]

    witness = None
    for q in nonempty_qs:
        for x in samples:
            if x.is_all_top():
                continue
            lhs = v_scale(big_inf(q), x)
            rhs = v_inf([v_scale(k, x) for k in q])
            if lhs != rhs:
                witness = (q, x)
                break
        if witness:
            break
    report.record("meet-law", witness is None, witness)

    witness = None
    for q in all_qs:
        for x in samples:
            lhs = v_scale(big_sup(q), x)
            rhs = v_sup([v_scale(k, x) for k in q], dim=dim)
            if lhs != rhs:
                witness = (q, x)
                break
        if witness:
            break
    report.record("generalized-distributive-scalars", witness is None, witness)

    witness = None
    for k in scalars:
        for xs in subsets_x:
            lhs = v_scale(k, v_sup(xs, dim=dim))
            rhs = v_sup([v_scale(k, x) for x in xs], dim=dim)
            if lhs != rhs:
                witness = (k, xs)
                break
        if witness:
            break
    report.record("generalized-distributive-vectors", witness is None, witness)

    return report
