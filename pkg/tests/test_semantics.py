import random
from fractions import Fraction

import pytest

from cea.algebra import AtomSpace, material_implies
from cea.conditional import cond, embed
from cea.formulas import from_json
from cea.semantics import (
    PossibilityAssignment,
    ProbabilityMeasure,
    UndefinedConditionalError,
    cl_eval,
    cpl_eval,
    fl_eval,
    inclusion_exclusion,
    lewis_gap,
    measure_from_json,
    mf_independent_sample,
    pl_eval,
    random_measure,
)


@pytest.fixture
def s3():
    return AtomSpace(3)


def test_measure_validation(s3):
    with pytest.raises(ValueError):
        ProbabilityMeasure(s3, [Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(ValueError):
        ProbabilityMeasure(s3, [Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(ValueError):
        ProbabilityMeasure(s3, [1, 1, -1])
    p = ProbabilityMeasure.uniform(s3)
    assert p.exact
    assert p(s3.zero) == 0
    assert p(s3.one) == 1


def test_cl_eval(s3):
    e = s3.event([1, 2])
    assert cl_eval(1, e) == 1
    assert cl_eval(0, e) == 0


def test_cl_eval_is_two_valued_homomorphism():
    space = AtomSpace(4)
    for a in space.events():
        for b in space.events():
            for i in range(4):
                assert cl_eval(i, a | b) == max(cl_eval(i, a), cl_eval(i, b))
                assert cl_eval(i, a & b) == min(cl_eval(i, a), cl_eval(i, b))
                assert cl_eval(i, ~a) == 1 - cl_eval(i, a)
                assert cl_eval(i, material_implies(b, a)) == max(
                    1 - cl_eval(i, b), cl_eval(i, a))


def test_pl_eval_uniform(s3):
    p = ProbabilityMeasure.uniform(s3)
    assert pl_eval(p, s3.event([0, 1])) == Fraction(2, 3)


def test_pl_additivity_random():
    space = AtomSpace(4)
    rng = random.Random(7)
    for _ in range(200):
        p = random_measure(space, rng)
        a = space.event_from_mask(rng.randrange(16))
        b = space.event_from_mask(rng.randrange(16))
        lhs = float(p(a | b)) + float(p(a & b))
        assert abs(lhs - float(p(a)) - float(p(b))) <= 1e-12


def test_inclusion_exclusion_matches_direct():
    space = AtomSpace(4)
    rng = random.Random(3)
    for _ in range(100):
        p = random_measure(space, rng)
        events = [space.event_from_mask(rng.randrange(16)) for _ in range(3)]
        direct = p(events[0] | events[1] | events[2])
        assert abs(float(inclusion_exclusion(p, events)) - float(direct)) <= 1e-12


def test_implication_probability_decomposition():
    space = AtomSpace(4)
    rng = random.Random(9)
    for _ in range(200):
        p = random_measure(space, rng, exact=True)
        a = space.event_from_mask(rng.randrange(16))
        b = space.event_from_mask(rng.randrange(16))
        assert p(material_implies(b, a)) == p(~b) + p(a & b)


def test_cpl_eval(s3):
    p = ProbabilityMeasure.uniform(s3)
    assert cpl_eval(p, cond(s3.event([0]), s3.event([0, 1]))) == Fraction(1, 2)
    e = s3.event([0, 2])
    assert cpl_eval(p, embed(e)) == pl_eval(p, e)
    zero_on_2 = ProbabilityMeasure(s3, [Fraction(1, 2), Fraction(1, 2), 0])
    with pytest.raises(UndefinedConditionalError):
        cpl_eval(zero_on_2, cond(s3.event([2]), s3.event([2])))


def test_cpl_monotone(s3):
    from cea.conditional import conditionals

    rng = random.Random(21)
    comparable = [(a, c) for a in conditionals(s3) for c in conditionals(s3)
                  if a <= c and a.antecedent and c.antecedent]
    for _ in range(20):
        p = random_measure(s3, rng)
        for a, c in comparable:
            assert float(cpl_eval(p, a)) <= float(cpl_eval(p, c)) + 1e-12


def test_lewis_gap_examples():
    s10 = AtomSpace(10)
    p = ProbabilityMeasure.uniform(s10)
    p_imp, p_cond, gap = lewis_gap(p, s10.zero, s10.atom(0))
    assert p_imp == Fraction(9, 10)
    assert p_cond == 0
    assert gap == Fraction(9, 10)

    s3 = AtomSpace(3)
    p3 = ProbabilityMeasure.uniform(s3)
    # conditioning on everything closes the gap
    a = s3.event([0, 1])
    p_imp, p_cond, gap = lewis_gap(p3, a, s3.one)
    assert gap == 0
    # consequent covering the antecedent closes it too
    p_imp, p_cond, gap = lewis_gap(p3, s3.event([0, 1]), s3.event([0]))
    assert p_imp == 1 and p_cond == 1 and gap == 0


def test_lewis_identity_random_exact():
    space = AtomSpace(4)
    rng = random.Random(17)
    checked = 0
    while checked < 200:
        p = random_measure(space, rng, exact=True)
        a = space.event_from_mask(rng.randrange(16))
        b = space.event_from_mask(rng.randrange(16))
        if p(b) == 0:
            continue
        p_imp, p_cond, gap = lewis_gap(p, a, b)
        assert p_imp == p_cond + p(~b) * cpl_eval(p, cond(~a & b, b))
        assert gap >= 0
        checked += 1


def test_measure_free_independence(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    b = embed(s3.event([0, 1]))
    report = mf_independent_sample(a, b, 100, seed=2)
    assert report.independent
    assert report.max_violation <= 1e-9

    # chained factors are independent as well
    a1, a2, a3 = s3.event([0]), s3.event([0, 1]), s3.one
    report = mf_independent_sample(cond(a1, a2), cond(a2, a3), 100, seed=2)
    assert report.independent

    # generic overlapping pair is not
    x = cond(s3.event([0]), s3.event([0, 1]))
    y = cond(s3.event([0]), s3.event([0, 2]))
    report = mf_independent_sample(x, y, 100, seed=2)
    assert not report.independent
    assert report.max_violation > 1e-6


def test_possibility_validation():
    with pytest.raises(ValueError):
        PossibilityAssignment({("x", "a"): 1.5})
    poss = PossibilityAssignment.from_json(
        {"poss": {"x": {"a": 0.3}, "y": {"b": 0.8, "c": 0.1}}})
    assert poss.grade("y", "c") == 0.1


def test_fl_eval_examples():
    poss = PossibilityAssignment({("x", "a"): 0.3, ("y", "b"): 0.8, ("y", "c"): 0.2})
    ev = lambda node: fl_eval(poss, from_json(node))
    x = {"var": "x", "vals": ["a"]}
    yb = {"var": "y", "vals": ["b"]}
    yc = {"var": "y", "vals": ["c"]}
    assert ev({"op": "or", "args": [x, yb]}) == 0.8
    assert ev({"op": "implies", "args": [x, yc]}) == 0.7
    # excluded middle fails strictly inside the unit interval
    assert ev({"op": "or", "args": [x, {"op": "not", "args": [x]}]}) == 0.7
    # a multi-valued leaf reads as the disjunction of its values
    assert ev({"var": "y", "vals": ["b", "c"]}) == 0.8


def test_fl_value_level_laws():
    poss = PossibilityAssignment({("x", "a"): 0.3, ("y", "b"): 0.8, ("z", "c"): 0.5})
    x = {"var": "x", "vals": ["a"]}
    y = {"var": "y", "vals": ["b"]}
    ev = lambda node: fl_eval(poss, from_json(node))
    assert ev({"op": "and", "args": [x, x]}) == ev(x)
    assert ev({"op": "not", "args": [{"op": "and", "args": [x, y]}]}) == ev(
        {"op": "or", "args": [{"op": "not", "args": [x]}, {"op": "not", "args": [y]}]})
    assert ev({"op": "or", "args": [x, {"op": "and", "args": [x, y]}]}) == ev(x)


def test_fl_unbound_leaf_rejected():
    poss = PossibilityAssignment({("x", "a"): 0.3})
    with pytest.raises(Exception):
        fl_eval(poss, from_json({"var": "x"}))


def test_measure_file_atoms_form():
    space = AtomSpace(3, ["u", "v", "w"])
    p = measure_from_json(space, {"atoms": {"u": "1/2", "v": "1/4", "w": "1/4"}})
    assert p.exact
    assert p(space.event([0])) == Fraction(1, 2)
    # absent labels default to zero weight
    p2 = measure_from_json(space, {"atoms": {"u": 1}})
    assert p2(space.event([1, 2])) == 0
    with pytest.raises(ValueError):
        measure_from_json(space, {"atoms": {"nope": 1}})
    with pytest.raises(ValueError):
        measure_from_json(space, {"weights": [1]})


def test_measure_file_factors_form():
    space = AtomSpace(4, ["x=0,y=0", "x=0,y=1", "x=1,y=0", "x=1,y=1"])
    assignments = [
        {"x": "0", "y": "0"},
        {"x": "0", "y": "1"},
        {"x": "1", "y": "0"},
        {"x": "1", "y": "1"},
    ]
    data = {"factors": {"x": {"0": "1/2", "1": "1/2"}, "y": {"0": "1/4", "1": "3/4"}}}
    p = measure_from_json(space, data, assignments)
    assert p(space.event([0])) == Fraction(1, 8)
    assert p(space.event([3])) == Fraction(3, 8)
    with pytest.raises(ValueError):
        measure_from_json(space, data)  # needs the grounding table
    bad = {"factors": {"x": {"0": "1/2", "1": "1/3"}, "y": {"0": 1}}}
    with pytest.raises(ValueError):
        measure_from_json(space, bad, assignments)
