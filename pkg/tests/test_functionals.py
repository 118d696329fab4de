import random

import pytest

import maxplus as mp
from maxplus.functionals import LinearMapSample
from _oracles import star_oracle

rng = random.Random(2024)


def rand_vec(dim, allow_top=False):
    coords = []
    for _ in range(dim):
        r = rng.random()
        if r < 0.15:
            coords.append(mp.BOTTOM)
        elif allow_top and r < 0.22:
            coords.append(mp.TOP)
        else:
            coords.append(mp.finite(rng.randint(-10, 10)))
    return mp.FinVector(tuple(coords))


# --- star evaluation ---------------------------------------------------------

def test_star_eval_basic():
    x = mp.vector([0, -1, 2])
    y = mp.vector([1, 1, 1])
    assert star_oracle(x, y) == mp.finite(2)
    assert mp.star_eval(x, y) == mp.finite(2)


def test_star_eval_zero_target():
    assert mp.star_eval(mp.vector([0, 0]), mp.zero_vector(2)) == mp.BOTTOM


def test_star_eval_unreachable():
    x = mp.vector([mp.BOTTOM, 0])
    y = mp.vector([1, 0])
    assert star_oracle(x, y) == mp.TOP
    assert mp.star_eval(x, y) == mp.TOP


def test_star_eval_against_scan_oracle():
    # random vectors without +inf representer coordinates, where the grid scan is exact
    for _ in range(300):
        dim = rng.randint(1, 4)
        x = rand_vec(dim)
        y = rand_vec(dim, allow_top=True)
        assert mp.star_eval(x, y) == star_oracle(x, y)


def test_star_eval_top_representer_coordinate():
    # a +inf coordinate of the representer satisfies every nonzero scaling,
    # so it contributes the empty constraint
    x = mp.vector([mp.TOP, 0])
    assert mp.star_eval(x, mp.vector([5, mp.BOTTOM])) == mp.BOTTOM
    assert mp.star_eval(x, mp.vector([5, 1])) == mp.finite(1)


def test_star_eval_order_reversing_in_representer():
    for _ in range(100):
        dim = rng.randint(1, 4)
        x = rand_vec(dim, allow_top=True)
        bigger = mp.v_add(x, rand_vec(dim, allow_top=True))
        y = rand_vec(dim, allow_top=True)
        assert mp.leq(mp.star_eval(bigger, y), mp.star_eval(x, y))


# --- representer recovery ----------------------------------------------------

def test_recover_round_trip():
    hidden = mp.vector([1, -2, 0])
    recovered = mp.recover_representer(mp.FunctionalRep(hidden), 3)
    assert recovered.coords == hidden.coords
    for _ in range(100):
        p = rand_vec(3, allow_top=True)
        assert mp.star_eval(recovered, p) == mp.star_eval(hidden, p)


def test_recover_sup_of_coordinates_functional():
    # the sup-of-values functional is represented by the all-one vector
    recovered = mp.recover_representer(lambda v: mp.big_sup(v.coords), 4)
    assert recovered == mp.vector([0, 0, 0, 0])


def test_recover_bottom_probe_gives_top_coordinate():
    hidden = mp.FinVector((mp.TOP, mp.finite(1)))
    recovered = mp.recover_representer(mp.FunctionalRep(hidden), 2)
    assert recovered.coords == hidden.coords


def test_recover_zero_functional_errors():
    with pytest.raises(mp.ZeroFunctionalError):
        mp.recover_representer(lambda v: mp.BOTTOM, 3)


def test_recover_random_round_trips():
    for _ in range(200):
        dim = rng.randint(1, 6)
        hidden = rand_vec(dim, allow_top=True)
        if hidden.is_all_top():
            continue
        recovered = mp.recover_representer(mp.FunctionalRep(hidden), dim)
        assert recovered.coords == hidden.coords


# --- extension ---------------------------------------------------------------

def test_extend_single_generator():
    basis = mp.SpanBasis.of([mp.vector([0, 0])])
    f = mp.extend_functional(basis, [mp.ONE], 2)
    assert f(mp.vector([3, 1])) == star_oracle(f.representer, mp.vector([3, 1]))
    assert f(mp.vector([3, 1])) == mp.finite(3)


def test_extend_generator_with_bottom_coordinate():
    basis = mp.SpanBasis.of([mp.vector([0, mp.BOTTOM])])
    f = mp.extend_functional(basis, [mp.finite(2)], 2)
    assert f(mp.vector([0, mp.BOTTOM])) == mp.finite(2)
    assert f.representer.coords[0] == mp.finite(-2)


def test_extend_inconsistent_values_rejected():
    # the second generator is a scaling of the first, forcing its value
    basis = mp.SpanBasis.of([mp.vector([0, 0]), mp.vector([1, 1])])
    with pytest.raises(mp.InconsistentValuesError) as err:
        mp.extend_functional(basis, [mp.finite(0), mp.finite(0)], 2)
    assert err.value.witness in (0, 1)


def test_extend_restricts_exactly_on_random_consistent_instances():
    for _ in range(200):
        dim = rng.randint(2, 6)
        hidden = rand_vec(dim, allow_top=True)
        if hidden.is_all_top():
            continue
        gens = []
        while len(gens) < rng.randint(1, 4):
            g = rand_vec(dim, allow_top=True)
            if not g.is_zero():
                gens.append(g)
        basis = mp.SpanBasis.of(gens)
        values = [mp.star_eval(hidden, g) for g in basis.generators]
        f = mp.extend_functional(basis, values, dim)
        for g, v in zip(basis.generators, values):
            assert f(g) == v


# --- separation --------------------------------------------------------------

def test_separate_direct_branch():
    x = mp.vector([0, 0])
    y = mp.vector([1, 0])
    f = mp.separate_points(x, y)
    assert f.representer == x
    assert f(x) == mp.finite(0)
    assert f(y) == mp.finite(1)


def test_separate_fallback_branch():
    x = mp.vector([1, 0])
    y = mp.vector([0, 0])
    f = mp.separate_points(x, y)
    # the dual of x values both points at one, so the dual of y must act
    assert mp.star_eval(x, x) == mp.star_eval(x, y) == mp.finite(0)
    assert f.representer == y
    assert f(x) == mp.finite(1)
    assert f(y) == mp.finite(0)


def test_separate_zero_vector():
    x = mp.zero_vector(2)
    y = mp.vector([0, mp.BOTTOM])
    f = mp.separate_points(x, y)
    assert f(x) != f(y)
    assert f(x) == mp.BOTTOM


def test_separate_equal_points_error():
    with pytest.raises(mp.EqualPointsError):
        mp.separate_points(mp.vector([1, 2]), mp.vector([1, 2]))


def test_separation_totality():
    for _ in range(500):
        dim = rng.randint(1, 5)
        x = rand_vec(dim, allow_top=True)
        y = rand_vec(dim, allow_top=True)
        if x.coords == y.coords:
            continue
        f = mp.separate_points(x, y)
        assert f(x) != f(y)


# --- pointwise suprema -------------------------------------------------------

def test_pointwise_sup_pair():
    f1 = mp.FunctionalRep(mp.vector([0, 5]))
    f2 = mp.FunctionalRep(mp.vector([5, 0]))
    p = mp.pointwise_sup([f1, f2])
    assert p.representer == mp.vector([0, 0])
    probe = mp.vector([1, 1])
    assert p(probe) == mp.big_sup([f1(probe), f2(probe)]) == mp.finite(1)


def test_pointwise_sup_singleton_and_idempotent():
    f = mp.FunctionalRep(mp.vector([2, -1]))
    assert mp.pointwise_sup([f]).representer == f.representer
    assert mp.pointwise_sup([f, f]).representer == f.representer


def test_pointwise_sup_agrees_on_probes():
    for _ in range(100):
        dim = rng.randint(1, 4)
        family = [mp.FunctionalRep(rand_vec(dim, allow_top=True))
                  for _ in range(rng.randint(1, 5))]
        p = mp.pointwise_sup(family)
        for _ in range(20):
            probe = rand_vec(dim, allow_top=True)
            assert p(probe) == mp.big_sup(f(probe) for f in family)


# --- a-linearity and graphs --------------------------------------------------

def test_star_functional_is_a_linear():
    x = rand_vec(3, allow_top=True)
    tests = [rand_vec(3, allow_top=True) for _ in range(6)]
    scalars = [mp.BOTTOM, mp.ONE, mp.finite(3), mp.finite(-7)]
    report = mp.check_a_linear(mp.FunctionalRep(x), tests, scalars)
    assert report.all_passed


def test_scaling_map_is_a_linear():
    tests = [rand_vec(2) for _ in range(5)]
    report = mp.check_a_linear(lambda v: mp.v_scale(mp.finite(3), v), tests,
                               [mp.finite(1), mp.BOTTOM])
    assert report.all_passed


def test_negation_map_fails_with_witness():
    def negate(v):
        out = []
        for c in v.coords:
            if c.is_bottom():
                out.append(mp.TOP)
            elif c.is_top():
                out.append(mp.BOTTOM)
            else:
                out.append(mp.finite(-c.q))
        return mp.FinVector(tuple(out))

    tests = [mp.vector([0, 1]), mp.vector([1, 0]), mp.vector([2, 2])]
    report = mp.check_a_linear(negate, tests, [])
    entry = report.entry("sup-preservation")
    assert not entry.passed
    assert entry.witness is not None


def test_graph_sup_closed_on_functional_sample():
    x = mp.vector([1, -1])
    f = mp.FunctionalRep(x)
    base = [mp.vector([0, 0]), mp.vector([2, -3]), mp.vector([-1, 4])]
    closed = {v.coords: v for v in base}
    for a in base:
        for b in base:
            s = mp.v_add(a, b)
            closed[s.coords] = s
    pairs = [(v, mp.FinVector((f(v),))) for v in closed.values()]
    assert mp.graph_sup_closed(LinearMapSample.of(pairs)).all_passed


def test_graph_missing_sup_pair_reported():
    pairs = [
        (mp.vector([0, mp.BOTTOM]), mp.vector([0])),
        (mp.vector([mp.BOTTOM, 0]), mp.vector([0])),
    ]
    report = mp.graph_sup_closed(LinearMapSample.of(pairs))
    entry = report.entry("graph-sup-closed")
    assert not entry.passed
    assert entry.witness is not None


def test_graph_singleton_closed():
    pairs = [(mp.vector([1, 2]), mp.vector([3]))]
    assert mp.graph_sup_closed(LinearMapSample.of(pairs)).all_passed


def test_graph_duplicate_inputs_rejected():
    with pytest.raises(ValueError):
        LinearMapSample.of([(mp.vector([1]), mp.vector([1])),
                            (mp.vector([1]), mp.vector([2]))])
