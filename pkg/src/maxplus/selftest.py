"""Randomized and exhaustive suites checking every theorem at desk scale.

Each suite returns a named pass/fail result; the CLI aggregates them into a
deterministic scoreboard.  All randomness flows through one seeded generator,
with integer coordinates in [-10, 10] plus -inf with probability 1/8 and +inf
with probability 1/16, so the degenerate conventions get exercised routinely.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import functionals, order, semialgebra, semimodules
from .functionals import (FunctionalRep, InconsistentValuesError,
                          LinearMapSample, check_a_linear, extend_functional,
                          graph_sup_closed, pointwise_sup, recover_representer,
                          separate_points, star_eval)
from .scalars import (BOTTOM, ONE, TOP, ExtendedScalar, big_sup,
                      boolean_semifield, check_semiring_axioms,
                      extended_maxplus, finite, s_mul)
from .semimodules import (FinVector, SpanBasis, check_b_space_axioms, v_inf,
                          v_scale, v_sup, vector, zero_vector)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.detail})"


def random_scalar(rng: random.Random, allow_top: bool = True) -> ExtendedScalar:
    r = rng.random()
    if r < 1 / 8:
        return BOTTOM
    if r < 1 / 8 + 1 / 16:
        return TOP if allow_top else finite(rng.randint(-10, 10))
    return finite(rng.randint(-10, 10))


def random_vector(rng: random.Random, dim: int, allow_top: bool = True) -> FinVector:
    return FinVector(tuple(random_scalar(rng, allow_top) for _ in range(dim)))


def random_nonzero_vector(rng: random.Random, dim: int,
                          allow_top: bool = True) -> FinVector:
    while True:
        v = random_vector(rng, dim, allow_top)
        if not v.is_zero():
            return v


def random_representer(rng: random.Random, dim: int) -> FinVector:
    """A representer of a nonzero functional: any vector except the all-top one."""
    while True:
        v = random_vector(rng, dim)
        if not v.is_all_top():
            return v


def random_finite_vector(rng: random.Random, dim: int) -> FinVector:
    return FinVector(tuple(finite(rng.randint(-10, 10)) for _ in range(dim)))


# --- suites -----------------------------------------------------------------

def suite_semiring_axioms() -> SuiteResult:
    boolean = check_semiring_axioms(boolean_semifield())
    sample = [BOTTOM, finite(-1), finite(0), finite(2), TOP]
    extended = check_semiring_axioms(extended_maxplus(), sample)
    ok = boolean.all_passed and extended.all_passed
    bad = boolean.failures() + extended.failures()
    detail = "boolean carrier exhaustive + 5-element extended sample"
    if bad:
        detail += f"; first failure {bad[0].line()}"
    return SuiteResult("semiring-axioms", ok, detail)


def suite_b_space_axioms(rng: random.Random) -> SuiteResult:
    scalars = [BOTTOM, finite(0), finite(1), finite(-2), TOP]
    samples = [random_vector(rng, 3) for _ in range(5)]
    samples.append(semimodules.top_vector(3))
    report = check_b_space_axioms(samples, scalars)
    detail = "all scalar subsets x 6 vectors"
    if not report.all_passed:
        detail += f"; first failure {report.failures()[0].line()}"
    return SuiteResult("b-space-axioms", report.all_passed, detail)


def suite_theorem1_roundtrip(rng: random.Random, instances: int,
                             max_dim: int, probes: int) -> SuiteResult:
    for trial in range(instances):
        dim = rng.randint(1, max_dim)
        x = random_representer(rng, dim)
        recovered = recover_representer(FunctionalRep(x), dim)
        if recovered.coords != x.coords:
            return SuiteResult("theorem-1-round-trip", False,
                               f"instance {trial}: recovered {recovered!r} from {x!r}")
        for _ in range(probes):
            p = random_vector(rng, dim)
            if star_eval(recovered, p) != star_eval(x, p):
                return SuiteResult("theorem-1-round-trip", False,
                                   f"instance {trial}: probe {p!r} disagrees")
    return SuiteResult("theorem-1-round-trip", True,
                       f"{instances} representers, {probes} probes each, exact")


def suite_theorem1_alinearity(rng: random.Random, instances: int,
                              vectors_per_set: int = 6,
                              scalar_count: int = 20) -> SuiteResult:
    for trial in range(instances):
        dim = rng.randint(1, 4)
        x = random_representer(rng, dim)
        tests = [random_vector(rng, dim) for _ in range(vectors_per_set)]
        scalars = [BOTTOM, ONE] + [random_scalar(rng) for _ in range(scalar_count - 2)]
        report = check_a_linear(FunctionalRep(x), tests, scalars)
        if not report.all_passed:
            return SuiteResult("theorem-1-a-linearity", False,
                               f"instance {trial}: {report.failures()[0].line()}")
    subsets = 2 ** vectors_per_set
    return SuiteResult("theorem-1-a-linearity", True,
                       f"{instances} functionals, all {subsets} subsets + homogeneity")


def _random_consistent_extension(rng: random.Random, max_dim: int):
    dim = rng.randint(2, max_dim)
    hidden = random_representer(rng, dim)
    gens = [random_nonzero_vector(rng, dim) for _ in range(rng.randint(1, 4))]
    basis = SpanBasis.of(gens)
    values = [star_eval(hidden, g) for g in basis.generators]
    return basis, values, dim


def suite_theorem2_extension(rng: random.Random, instances: int,
                             max_dim: int = 6) -> SuiteResult:
    for trial in range(instances):
        basis, values, dim = _random_consistent_extension(rng, max_dim)
        f = extend_functional(basis, values, dim)
        for g, v in zip(basis.generators, values):
            if f(g) != v:
                return SuiteResult("theorem-2-extension", False,
                                   f"instance {trial}: restriction mismatch on {g!r}")
    # a dependent prescription that no a-linear functional satisfies
    bad_basis = SpanBasis.of([vector([0, 0]), vector([1, 1])])
    try:
        extend_functional(bad_basis, [finite(0), finite(0)], 2)
        return SuiteResult("theorem-2-extension", False,
                           "inconsistent prescription was not rejected")
    except InconsistentValuesError:
        pass
    return SuiteResult("theorem-2-extension", True,
                       f"{instances} consistent instances restrict exactly; "
                       "inconsistent instance rejected")


def suite_theorem2_separation(rng: random.Random, pairs: int) -> SuiteResult:
    fallback_hits = 0
    for trial in range(pairs):
        dim = rng.randint(1, 5)
        x = random_vector(rng, dim)
        y = random_vector(rng, dim)
        if x.coords == y.coords:
            continue
        f = separate_points(x, y)
        if f(x) == f(y):
            return SuiteResult("theorem-2-separation", False,
                               f"instance {trial}: {x!r} and {y!r} not separated")
        if f.representer.coords == y.coords and f.representer.coords != x.coords:
            fallback_hits += 1
    return SuiteResult("theorem-2-separation", True,
                       f"{pairs} random pairs separated; fallback used {fallback_hits} times")


def suite_proposition2(rng: random.Random, instances: int,
                       probes: int = 50) -> SuiteResult:
    for trial in range(instances):
        dim = rng.randint(1, 5)
        family = [FunctionalRep(random_vector(rng, dim))
                  for _ in range(rng.randint(1, 5))]
        p = pointwise_sup(family)
        if p.representer.coords != v_inf([f.representer for f in family]).coords:
            return SuiteResult("proposition-2", False,
                               f"instance {trial}: representer is not the meet")
        for _ in range(probes):
            probe = random_vector(rng, dim)
            if p(probe) != big_sup(f(probe) for f in family):
                return SuiteResult("proposition-2", False,
                                   f"instance {trial}: probe {probe!r} disagrees")
    return SuiteResult("proposition-2", True,
                       f"{instances} families, {probes} probes each, exact")


def _sup_closure(vectors: Sequence[FinVector], cap: int = 8) -> List[FinVector]:
    seen = {v.coords: v for v in vectors}
    changed = True
    while changed and len(seen) < cap:
        changed = False
        for a in list(seen.values()):
            for b in list(seen.values()):
                s = semimodules.v_add(a, b)
                if s.coords not in seen:
                    seen[s.coords] = s
                    changed = True
                    if len(seen) >= cap:
                        break
            if len(seen) >= cap:
                break
    return list(seen.values())


def suite_proposition3(rng: random.Random, instances: int) -> SuiteResult:
    for trial in range(instances):
        dim = rng.randint(1, 4)
        x = random_representer(rng, dim)
        base = [random_vector(rng, dim) for _ in range(3)]
        closed = _sup_closure(base)
        if len(_sup_closure(closed)) != len(closed):
            continue  # closure hit the cap before stabilizing; skip
        f = FunctionalRep(x)
        pairs = [(v, FinVector((f(v),))) for v in closed]
        report = graph_sup_closed(LinearMapSample.of(pairs))
        if not report.all_passed:
            return SuiteResult("proposition-3", False,
                               f"instance {trial}: {report.failures()[0].line()}")
    bad = LinearMapSample.of([
        (vector([0, BOTTOM]), vector([0])),
        (vector([BOTTOM, 0]), vector([0])),
    ])
    if graph_sup_closed(bad).all_passed:
        return SuiteResult("proposition-3", False,
                           "non-sup-closed sample was not reported")
    return SuiteResult("proposition-3", True,
                       f"{instances} sampled graphs closed; broken sample reported")


def suite_proposition4(rng: random.Random, instances: int,
                       max_points: int = 8) -> SuiteResult:
    for trial in range(instances):
        n = rng.randint(1, max_points)
        labels = tuple(f"x{i}" for i in range(n))
        x = semialgebra.AlgebraElement(FinVector(random_finite_vector(rng, n).coords, labels))
        y = semialgebra.AlgebraElement(FinVector(random_vector(rng, n).coords, labels))
        report = semialgebra.check_prop4(x, y)
        if not report.all_passed:
            return SuiteResult("proposition-4", False,
                               f"instance {trial}: {report.failures()[0].line()}")
    return SuiteResult("proposition-4", True,
                       f"{instances} invertible elements, exact equality")


def suite_theorem3(rng: random.Random, instances: int,
                   max_points: int = 8, probes: int = 20) -> SuiteResult:
    for trial in range(instances):
        n = rng.randint(1, max_points)
        labels = tuple(f"x{i}" for i in range(n))
        hidden = semialgebra.AlgebraElement(
            FinVector(random_finite_vector(rng, n).coords, labels))
        f = lambda y: semialgebra.scalar_product(y, hidden)
        recovered = semialgebra.riesz_representer(f, labels)
        if recovered.vec.coords != hidden.vec.coords:
            return SuiteResult("theorem-3", False,
                               f"instance {trial}: recovered {recovered!r}")
        for _ in range(probes):
            probe = semialgebra.AlgebraElement(
                FinVector(random_vector(rng, n).coords, labels))
            if f(probe) != semialgebra.scalar_product(probe, recovered):
                return SuiteResult("theorem-3", False,
                                   f"instance {trial}: probe disagrees")
    return SuiteResult("theorem-3", True,
                       f"{instances} hidden elements recovered exactly")


def all_small_posets(max_n: int) -> List[order.FiniteIS]:
    """Every poset on up to max_n elements, one per isomorphism class at least.

    Enumerates order relations compatible with the index order; since every
    finite poset has a linear extension, this hits every isomorphism type.
    """
    import itertools
    posets = []
    for n in range(max_n + 1):
        above = [(i, j) for i in range(n) for j in range(i + 1, n)]
        labels = tuple(chr(ord("a") + i) for i in range(n))
        for mask in range(1 << len(above)):
            rel = {(i, i) for i in range(n)}
            rel.update(p for k, p in enumerate(above) if mask >> k & 1)
            transitive = all((i, l) in rel
                             for (i, j) in rel for (k, l) in rel if j == k)
            if not transitive:
                continue
            posets.append(order.FiniteIS(labels, frozenset(rel)))
    return posets


def suite_dm_completion(max_n: int = 4) -> SuiteResult:
    anti = order.FiniteIS.antichain(["a", "b"])
    result = order.dm_completion(anti)
    if len(result.completed.elements) != 4:
        return SuiteResult("dm-completion", False,
                           f"2-antichain completed to {len(result.completed.elements)} elements")
    checked = 0
    for s in all_small_posets(max_n):
        first = order.dm_completion(s)
        second = order.dm_completion(first.completed)
        # idempotence: the second completion is a bijective order embedding
        if len(second.completed.elements) != len(first.completed.elements):
            return SuiteResult("dm-completion", False,
                               f"completion not idempotent on {s.elements}")
        n = len(s.elements)
        emb = {lab: first.completed.index(first.embedding[lab]) for lab in s.elements}
        for mask in range(1 << n):
            subset = [i for i in range(n) if mask >> i & 1]
            j = s.join_index(subset)
            if j is None:
                continue
            image = [emb[s.elements[i]] for i in subset]
            jj = first.completed.join_index(image)
            if jj != emb[s.elements[j]]:
                return SuiteResult("dm-completion", False,
                                   f"join of {subset} not preserved on {s.elements}")
        checked += 1
    return SuiteResult("dm-completion", True,
                       f"antichain gives 4 elements; idempotence and join "
                       f"preservation on {checked} posets (n <= {max_n})")


def run_selftest(seed: int, dim: int = 5, samples: int = 200) -> Tuple[List[str], bool]:
    """Run every suite with one seeded generator; returns scoreboard lines and overall status."""
    rng = random.Random(seed)
    results = [
        suite_semiring_axioms(),
        suite_b_space_axioms(rng),
        suite_dm_completion(),
        suite_theorem1_roundtrip(rng, instances=samples, max_dim=dim, probes=20),
        suite_theorem1_alinearity(rng, instances=max(1, samples // 10)),
        suite_theorem2_extension(rng, instances=samples, max_dim=max(2, dim)),
        suite_theorem2_separation(rng, pairs=samples),
        suite_proposition2(rng, instances=max(1, samples // 4)),
        suite_proposition3(rng, instances=max(1, samples // 10)),
        suite_proposition4(rng, instances=samples),
        suite_theorem3(rng, instances=max(1, samples // 2)),
    ]
    lines = [r.line() for r in results]
    return lines, all(r.passed for r in results)
