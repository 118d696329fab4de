"""Dual functionals by residuation: evaluation, representer recovery, extension,
separation, pointwise suprema, and sup-preservation checkers.

Every functional here is extensional: it is the residuation functional of a
representer vector, so functional equality is representer equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .report import CheckReport
from .scalars import (BOTTOM, TOP, ExtendedScalar, big_sup, finite, s_inv,
                      s_mul)
from .semimodules import (DimensionMismatchError, FinVector, unit_vector,
                          v_inf, v_scale, v_sup, zero_vector)


class ZeroFunctionalError(ValueError):
    pass


class EqualPointsError(ValueError):
    pass


class InconsistentValuesError(ValueError):
    def __init__(self, message: str, witness: int):
        super().__init__(message)
        self.witness = witness


def star_eval(x: FinVector, y: FinVector) -> ExtendedScalar:
    """Evaluate the residuation functional of x at y: the least k with y <= k*x.

    Closed form: the sup over coordinates of y_i / x_i, where a -inf target
    imposes no constraint, a -inf coordinate of x makes a nonzero target
    unreachable (+inf), and a +inf coordinate of x is satisfied by every
    nonzero k (contributing the bottom).
    """
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")
    best_q = None
    for xi, yi in zip(x.coords, y.coords):
        if yi.is_bottom():
            continue
        if xi.is_bottom():
            return TOP
        if xi.is_top():
            continue
        if yi.is_top():
            return TOP
        q = yi.q - xi.q
        if best_q is None or q > best_q:
            best_q = q
    return BOTTOM if best_q is None else finite(best_q)


@dataclass(frozen=True)
class FunctionalRep:
    """An a-linear functional given by its representer; calling it evaluates by residuation."""

    representer: FinVector

    @property
    def dim(self) -> int:
        return self.representer.dim

    def __call__(self, y: FinVector) -> ExtendedScalar:
        return star_eval(self.representer, y)


Oracle = Callable[[FinVector], ExtendedScalar]


def _pseudo_inv(a: ExtendedScalar) -> ExtendedScalar:
    """Inverse extended to the infinities, matching the residuation conventions."""
    if a.is_bottom():
        return TOP
    if a.is_top():
        return BOTTOM
    return s_inv(a)


def recover_representer(f: Union[Oracle, FunctionalRep], probe_dim: int) -> FinVector:
    """Recover the representer of a nonzero a-linear functional from evaluations.

    Probing on the unit vectors inverts the evaluation formula coordinatewise;
    the recovery is then verified against the oracle on those probes.
    """
    values = [f(unit_vector(i, probe_dim)) for i in range(probe_dim)]
    if all(v.is_bottom() for v in values):
        raise ZeroFunctionalError("zero functional has no representer")
    x = FinVector(tuple(_pseudo_inv(v) for v in values))
    for i, v in enumerate(values):
        if star_eval(x, unit_vector(i, probe_dim)) != v:
            raise ZeroFunctionalError(
                f"oracle is not a-linear: probe {i} disagrees with its recovery")
    return x


def extend_functional(w, values: Sequence[ExtendedScalar],
                      ambient_dim: int) -> FunctionalRep:
    """Extend a functional prescribed on span generators to the whole space.

    The candidate representer is the supremum of the generators scaled by the
    inverted prescribed values: the least representer compatible with the
    prescription.  If even this candidate fails to restrict to the prescribed
    values, no a-linear functional does, and the offending generator index is
    reported.
    """
    generators = list(w.generators)
    values = list(values)
    if len(values) != len(generators):
        raise ValueError("one prescribed value per generator is required")
    pieces = [v_scale(_pseudo_inv(v), g) for v, g in zip(values, generators)]
    x = v_sup(pieces, dim=ambient_dim)
    if x.dim != ambient_dim:
        raise DimensionMismatchError("generators do not live in the ambient dimension")
    for i, (g, v) in enumerate(zip(generators, values)):
        if star_eval(x, g) != v:
            raise InconsistentValuesError(
                f"values do not define an a-linear functional on the span "
                f"(generator {i} evaluates to {star_eval(x, g)!r}, prescribed {v!r})",
                witness=i)
    return FunctionalRep(x)


def separate_points(x: FinVector, y: FinVector) -> FunctionalRep:
    """A functional taking different values on two distinct points.

    The residuation functional of x works unless its values at x and y agree,
    in which case the one of y must separate: if both failed, the two mutual
    domination inequalities would force x = y.
    """
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if x.coords == y.coords:
        raise EqualPointsError("points are equal; no separating functional exists")
    fx = FunctionalRep(x)
    if fx(x) != fx(y):
        return fx
    return FunctionalRep(y)


def pointwise_sup(fs: Sequence[FunctionalRep]) -> FunctionalRep:
    """Pointwise supremum of functionals: the meet of their representers.

    Evaluation is order-reversing in the representer, so the infimum of the
    representers evaluates to the supremum of the individual evaluations.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("pointwise supremum needs at least one functional")
    return FunctionalRep(v_inf([f.representer for f in fs]))


VectorMap = Callable[[FinVector], Union[FinVector, ExtendedScalar]]


def check_a_linear(map_fn: VectorMap,
                   test_vectors: Sequence[FinVector],
                   scalars: Sequence[ExtendedScalar] = ()) -> CheckReport:
    """Check sup-preservation over every subset of the test vectors, plus homogeneity.

    Scalar homogeneity k * p(x) = p(k * x) is checked for the supplied scalars
    except +inf (the evaluation functionals are not +inf-homogeneous, matching
    the scalar-side caveat in the degenerate conventions).
    """
    test_vectors = list(test_vectors)
    if not test_vectors:
        raise ValueError("need at least one test vector")
    dim = test_vectors[0].dim
    report = CheckReport()

    def out_sup(outputs):
        if outputs and isinstance(outputs[0], ExtendedScalar):
            return big_sup(outputs)
        if not outputs:
            probe = map_fn(zero_vector(dim))
            if isinstance(probe, ExtendedScalar):
                return big_sup([])
            return v_sup([], dim=probe.dim)
        return v_sup(outputs, dim=outputs[0].dim)

    def out_scale(k, output):
        if isinstance(output, ExtendedScalar):
            return s_mul(k, output)
        return v_scale(k, output)

    witness = None
    for r in range(len(test_vectors) + 1):
        for subset in itertools.combinations(test_vectors, r):
            lhs = map_fn(v_sup(list(subset), dim=dim))
            rhs = out_sup([map_fn(v) for v in subset])
            if lhs != rhs:
                witness = subset
                break
        if witness is not None:
            break
    report.record("sup-preservation", witness is None, witness)

    witness = None
    for k in scalars:
        if k.is_top():
            continue
        for v in test_vectors:
            lhs = map_fn(v_scale(k, v))
            rhs = out_scale(k, map_fn(v))
            if lhs != rhs:
                witness = (k, v)
                break
        if witness is not None:
            break
    report.record("homogeneity", witness is None, witness)

    return report


@dataclass(frozen=True)
class LinearMapSample:
    """A sampled graph of a map: finitely many (input, output) pairs with distinct inputs."""

    pairs: Tuple[Tuple[FinVector, FinVector], ...]

    @classmethod
    def of(cls, pairs: Iterable[Tuple[FinVector, FinVector]]) -> "LinearMapSample":
        pairs = tuple(pairs)
        inputs = [p[0].coords for p in pairs]
        if len(set(inputs)) != len(inputs):
            raise ValueError("sample inputs must be pairwise distinct")
        return cls(pairs)


def graph_sup_closed(g: LinearMapSample) -> CheckReport:
    """Check that a sampled graph is closed under suprema of its subsets.

    For every nonempty subset the pair of coordinatewise suprema must itself
    be a sampled pair; the smallest violating subset is reported.
    """
    pairs = list(g.pairs)
    if not pairs:
        raise ValueError("empty graph sample")
    if len(pairs) > 16:
        raise ValueError("graph samples limited to 16 pairs")
    table = {p[0].coords: p[1].coords for p in pairs}
    witness = None
    for r in range(1, len(pairs) + 1):
        for subset in itertools.combinations(pairs, r):
            sup_in = v_sup([p[0] for p in subset])
            sup_out = v_sup([p[1] for p in subset])
            expected = table.get(sup_in.coords)
            if expected is None:
                witness = (subset, "supremum pair absent from the sample")
                break
            if expected != sup_out.coords:
                witness = (subset, "supremum of outputs disagrees with the sampled output")
                break
        if witness is not None:
            break
    report = CheckReport()
    report.record("graph-sup-closed", witness is None, witness)
    return report
