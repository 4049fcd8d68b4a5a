import pytest

from cea.algebra import AtomSpace, material_implies
from cea.conditional import (
    ConditionalObject,
    bayes_components,
    bounds,
    chain,
    cond,
    conditionals,
    conjoin_all,
    disjoin_all,
    embed,
    sum_all,
)
from cea.coset import classwise, classwise_unary, expand
from cea.verify import (
    conditional_law_suite,
    identity_suite,
    nary_consistency_suite,
    oracle_equivalence_suite,
    partial_order_suite,
    comparison_suite,
)


@pytest.fixture
def s3():
    return AtomSpace(3)


def test_canonical_form(s3):
    a = s3.event([0, 2])
    b = s3.event([0, 1])
    c = cond(a, b)
    assert c.consequent == s3.event([0])
    assert c.antecedent == b
    # different raw consequents agreeing on the antecedent are the same object
    assert cond(s3.event([0]), b) == cond(s3.event([0, 2]), b)


def test_embedding(s3):
    a = s3.event([1, 2])
    assert cond(a, s3.one) == embed(a)
    assert embed(a).is_embedded_event


def test_zero_antecedent_is_whole_algebra(s3):
    assert cond(s3.event([1]), s3.zero) == cond(s3.zero, s3.zero)
    assert len(expand(cond(s3.zero, s3.zero))) == 8


def test_invalid_canonical_pair_rejected(s3):
    with pytest.raises(ValueError):
        ConditionalObject(s3.event([0]), s3.event([1]))


def test_complement(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    assert ~a == cond(s3.event([1]), s3.event([0, 1]))
    assert ~~a == a
    z = cond(s3.zero, s3.event([0, 1]))
    assert ~z == cond(s3.event([0, 1]), s3.event([0, 1]))
    # classwise complement of the coset agrees
    assert classwise_unary(lambda x: ~x, expand(a)) == expand(~a).elements


def test_sum_example(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    c = cond(s3.event([1]), s3.event([1, 2]))
    out = a ^ c
    assert out == cond(s3.event([1]), s3.event([1]))
    assert classwise(lambda x, y: x ^ y, expand(a), expand(c)) == expand(out).elements
    # self-sum annihilates on the shared antecedent
    assert (a ^ a) == cond(s3.zero, a.antecedent)
    # embedded events add like plain events
    x, y = s3.event([0]), s3.event([0, 2])
    assert embed(x) ^ embed(y) == embed(x ^ y)


def test_meet_example(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    c = cond(s3.event([1]), s3.event([1, 2]))
    out = a & c
    assert out == cond(s3.zero, s3.event([1, 2]))
    assert classwise(lambda x, y: x & y, expand(a), expand(c)) == expand(out).elements
    # multiplying by the embedded antecedent recovers the consequent
    assert a & embed(a.antecedent) == embed(s3.event([0]))
    # shared antecedent: componentwise meet
    c2 = cond(s3.event([1]), s3.event([0, 1]))
    assert a & c2 == cond(s3.zero, s3.event([0, 1]))


def test_join_example(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    c = cond(s3.event([1]), s3.event([1, 2]))
    out = a | c
    assert out == cond(s3.event([0, 1]), s3.event([0, 1]))
    assert classwise(lambda x, y: x | y, expand(a), expand(c)) == expand(out).elements
    assert (a | ~a) == cond(a.antecedent, a.antecedent)
    c2 = cond(s3.event([1]), s3.event([0, 1]))
    assert a | c2 == cond(s3.event([0, 1]), s3.event([0, 1]))


def test_nary_ops(s3):
    items = [
        cond(s3.event([0]), s3.event([0, 1])),
        cond(s3.event([1]), s3.event([1, 2])),
        cond(s3.event([0, 2]), s3.event([0, 2])),
    ]
    assert conjoin_all(items) == (items[0] & items[1]) & items[2]
    assert disjoin_all(items) == items[0] | (items[1] | items[2])
    assert sum_all(items) == (items[0] ^ items[1]) ^ items[2]
    assert conjoin_all(items[:1]) == items[0]
    with pytest.raises(ValueError):
        conjoin_all([])


def test_order_examples(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    c = cond(s3.event([0, 1]), s3.one)
    # consequents grow but the counter-consequent check fails
    assert not a <= c
    assert a <= a
    for x in conditionals(s3):
        assert embed(x.consequent) <= x
        assert x <= embed(material_implies(x.antecedent, x.consequent))


def test_chain_examples(s3):
    a, b, c = s3.event([0]), s3.event([0, 1]), s3.one
    assert chain(cond(a, b & c), cond(b, c)) == cond(a & b, c)
    assert chain(cond(s3.event([0]), s3.event([0, 1])),
                 cond(s3.event([0, 1]), s3.one)) == cond(s3.event([0]), s3.one)
    assert chain(embed(a), embed(s3.one)) == embed(a)


def test_bayes_decomposition(s3):
    parts = [s3.atom(i) for i in range(3)]
    b = s3.event([0, 1])
    comps = bayes_components(b, parts)
    assert comps == [cond(b, p) for p in parts]
    # trivial partition
    assert bayes_components(b, [s3.one]) == [embed(b)]
    # zero event decomposes to zero components
    assert bayes_components(s3.zero, parts) == [cond(s3.zero, p) for p in parts]
    with pytest.raises(ValueError):
        bayes_components(b, [s3.event([0]), s3.event([0, 1])])
    with pytest.raises(ValueError):
        bayes_components(b, [s3.event([0]), s3.event([1])])


def test_bounds_examples(s3):
    a = cond(s3.event([0]), s3.event([0, 1]))
    assert bounds(a) == (s3.event([0]), s3.event([0, 2]))
    e = s3.event([1, 2])
    assert bounds(embed(e)) == (e, e)
    assert bounds(cond(s3.zero, s3.zero)) == (s3.zero, s3.one)


def test_conditionals_enumeration():
    for n in (1, 2, 3):
        space = AtomSpace(n)
        all_conds = list(conditionals(space))
        assert len(all_conds) == 3 ** n
        assert len(set(all_conds)) == 3 ** n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_equivalence_exhaustive(n):
    for result in oracle_equivalence_suite(AtomSpace(n)):
        assert result.passed, f"{result.name}: {result.detail}"


def test_oracle_equivalence_sampled_four_atoms():
    import random

    for result in oracle_equivalence_suite(AtomSpace(4), random.Random(11), samples=300):
        assert result.passed, f"{result.name}: {result.detail}"


@pytest.mark.parametrize("suite", [
    conditional_law_suite,
    nary_consistency_suite,
    partial_order_suite,
    identity_suite,
    comparison_suite,
])
def test_conditional_suites_two_atoms(suite):
    for result in suite(AtomSpace(2)):
        assert result.passed, f"{result.name}: {result.detail}"
