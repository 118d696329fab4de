"""Scalar arithmetic of the extended max-plus semiring and pluggable semiring descriptors.

The scalar carrier is {-inf} + Q + {+inf} with idempotent addition max and
multiplication +.  All finite values are exact rationals, so associativity and
distributivity are equalities, not float approximations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .report import CheckReport

_BOT = -1
_FIN = 0
_TOP = 1


class NotInvertibleError(ValueError):
    pass


@dataclass(frozen=True)
class ExtendedScalar:
    """An element of the extended max-plus carrier: -inf, a rational, or +inf."""

    kind: int
    q: Optional[Fraction] = None

    def is_bottom(self) -> bool:
        return self.kind == _BOT

    def is_top(self) -> bool:
        return self.kind == _TOP

    def is_finite(self) -> bool:
        return self.kind == _FIN

    def _key(self):
        # Finite values compare by their rational; the kind tag orders the infinities.
        return (self.kind, self.q) if self.kind == _FIN else (self.kind,)

    def __lt__(self, other: "ExtendedScalar") -> bool:
        if self.kind != other.kind:
            return self.kind < other.kind
        if self.kind == _FIN:
            return self.q < other.q
        return False

    def __le__(self, other: "ExtendedScalar") -> bool:
        return self == other or self < other

    def __gt__(self, other: "ExtendedScalar") -> bool:
        return other < self

    def __ge__(self, other: "ExtendedScalar") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return f"ExtendedScalar({format_scalar(self)!r})"


BOTTOM = ExtendedScalar(_BOT)
TOP = ExtendedScalar(_TOP)


def finite(value) -> ExtendedScalar:
    """Wrap an int, Fraction, or numeric string as a finite scalar."""
    return ExtendedScalar(_FIN, Fraction(value))


ZERO = BOTTOM          # the semiring zero, -inf
ONE = finite(0)        # the semiring one, 0


def leq(a: ExtendedScalar, b: ExtendedScalar) -> bool:
    """Standard order: a <= b iff a (+) b = b."""
    return a <= b


def s_add(a: ExtendedScalar, b: ExtendedScalar) -> ExtendedScalar:
    """Idempotent addition: max in the extended order."""
    return b if a <= b else a


def s_mul(a: ExtendedScalar, b: ExtendedScalar) -> ExtendedScalar:
    """Multiplication is rational addition; -inf absorbs everything, +inf absorbs nonzero."""
    if a.kind == _BOT or b.kind == _BOT:
        return BOTTOM
    if a.kind == _TOP or b.kind == _TOP:
        return TOP
    return ExtendedScalar(_FIN, a.q + b.q)


def s_inv(a: ExtendedScalar) -> ExtendedScalar:
    """Multiplicative inverse; only finite values are invertible."""
    if a.kind != _FIN:
        raise NotInvertibleError(f"{format_scalar(a)} is not invertible")
    return ExtendedScalar(_FIN, -a.q)


def big_sup(xs: Iterable[ExtendedScalar]) -> ExtendedScalar:
    """Supremum; the empty supremum is -inf (the zero)."""
    best = BOTTOM
    for x in xs:
        if best < x:
            best = x
    return best


def big_inf(xs: Iterable[ExtendedScalar]) -> ExtendedScalar:
    """Infimum; the empty infimum is +inf."""
    best = TOP
    for x in xs:
        if x < best:
            best = x
    return best


def parse_scalar(token: str) -> ExtendedScalar:
    """Parse the scalar text syntax: -inf, +inf, or an exact decimal/rational literal."""
    if token == "-inf":
        return BOTTOM
    if token == "+inf":
        return TOP
    try:
        return ExtendedScalar(_FIN, Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar token {token!r}") from exc


def format_scalar(a: ExtendedScalar) -> str:
    if a.kind == _BOT:
        return "-inf"
    if a.kind == _TOP:
        return "+inf"
    return str(a.q)


# --- pluggable semiring instances -------------------------------------------

@dataclass(frozen=True)
class SemiringDescriptor:
    """A concrete idempotent semiring: carrier (or marker), operations, and constants.

    ``elements`` is the full finite carrier, or None for the extended-real
    carrier (sampled rather than enumerated).  ``inverse`` is present exactly
    when the nonzero elements are invertible (semifield).
    """

    name: str
    elements: Optional[tuple]
    add: Callable
    mul: Callable
    zero: object
    one: object
    inverse: Optional[Callable] = None
    is_b_complete: bool = False
    is_a_complete: bool = False

    def __post_init__(self):
        if self.zero == self.one:
            raise ValueError("semiring zero and one must differ")

    def is_semifield(self) -> bool:
        return self.inverse is not None

    def fold_add(self, xs: Iterable) -> object:
        """Finite supremum under add, starting from the zero (sup of the empty set)."""
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc


def boolean_semifield() -> SemiringDescriptor:
    """The two-element semifield {0, 1} with or/and."""
    return SemiringDescriptor(
        name="boolean",
        elements=(False, True),
        add=lambda a, b: a or b,
        mul=lambda a, b: a and b,
        zero=False,
        one=True,
        inverse=lambda a: a,
        is_b_complete=True,
        is_a_complete=True,
    )


def extended_maxplus() -> SemiringDescriptor:
    """The extended max-plus carrier as a descriptor (not a semifield: +inf has no inverse)."""
    return SemiringDescriptor(
        name="extended-maxplus",
        elements=None,
        add=s_add,
        mul=s_mul,
        zero=BOTTOM,
        one=ONE,
        inverse=None,
        is_b_complete=True,
        is_a_complete=True,
    )


def maxplus_semifield() -> SemiringDescriptor:
    """Max-plus over {-inf} + Q: b-complete semifield (no +inf)."""
    return SemiringDescriptor(
        name="maxplus",
        elements=None,
        add=s_add,
        mul=s_mul,
        zero=BOTTOM,
        one=ONE,
        inverse=s_inv,
        is_b_complete=True,
        is_a_complete=False,
    )


def check_semiring_axioms(d: SemiringDescriptor,
                          sample: Optional[Sequence] = None) -> CheckReport:
    """Check every semiring axiom on a sample (the full carrier when finite).

    Failures are recorded with a witness tuple, not raised.
    """
    if sample is None:
        if d.elements is None:
            raise ValueError(f"semiring {d.name!r} has no finite carrier; a sample is required")
        sample = d.elements
    sample = list(sample)
    report = CheckReport()

    def check(name, pred, witnesses):
        for w in witnesses:
            if not pred(*w):
                report.record(name, False, w)
                return
        report.record(name, True)

    pairs = list(itertools.product(sample, repeat=2))
    triples = list(itertools.product(sample, repeat=3))

    check("add-idempotent", lambda a: d.add(a, a) == a, [(a,) for a in sample])
    check("add-commutative", lambda a, b: d.add(a, b) == d.add(b, a), pairs)
    check("add-associative",
          lambda a, b, c: d.add(a, d.add(b, c)) == d.add(d.add(a, b), c), triples)
    check("mul-associative",
          lambda a, b, c: d.mul(a, d.mul(b, c)) == d.mul(d.mul(a, b), c), triples)
    check("mul-identity",
          lambda a: d.mul(d.one, a) == a and d.mul(a, d.one) == a, [(a,) for a in sample])
    check("zero-neutral", lambda a: d.add(a, d.zero) == a, [(a,) for a in sample])
    check("zero-absorbing",
          lambda a: d.mul(a, d.zero) == d.zero and d.mul(d.zero, a) == d.zero,
          [(a,) for a in sample])
    check("distributive-left",
          lambda k, a, b: d.mul(k, d.add(a, b)) == d.add(d.mul(k, a), d.mul(k, b)), triples)
    check("distributive-right",
          lambda k, a, b: d.mul(d.add(a, b), k) == d.add(d.mul(a, k), d.mul(b, k)), triples)

    # Generalized distributivity over every subset of the sample, empty set included.
    subsets = [list(c) for r in range(len(sample) + 1)
               for c in itertools.combinations(sample, r)]
    check("generalized-distributive-left",
          lambda k, xs: d.mul(k, d.fold_add(xs)) == d.fold_add(d.mul(k, x) for x in xs),
          [(k, xs) for k in sample for xs in subsets])
    check("generalized-distributive-right",
          lambda k, xs: d.mul(d.fold_add(xs), k) == d.fold_add(d.mul(x, k) for x in xs),
          [(k, xs) for k in sample for xs in subsets])

    if d.inverse is not None:
        check("inverse",
              lambda a: d.mul(a, d.inverse(a)) == d.one,
              [(a,) for a in sample if a != d.zero])

    return report
