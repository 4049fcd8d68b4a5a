"""The four semantic evaluators over one event algebra.

Classical evaluation sends events to {0,1} at a chosen atom. Fuzzy
(possibilistic) evaluation works on formula syntax with MIN/MAX/1-x,
because a possibility assignment on primitive events does not factor
through the event extension. Probability evaluation sums atom weights,
and conditional-probability evaluation takes the ratio over a
conditional object's pair, extending the measure monotonically to the
conditional space.

Weights are exact Fractions when given as ints or "p/q" strings and
floats otherwise; float comparisons use a 1e-12 tolerance.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence, Union

from .algebra import AtomSpace, Event, material_implies
from .conditional import ConditionalObject
from .formulas import And, Formula, FormulaError, Implies, Leaf, Not, Or

TOLERANCE = 1e-12

Weight = Union[Fraction, float]


class UndefinedConditionalError(ArithmeticError):
    """Conditioning on an event of probability zero."""


def parse_weight(value) -> Weight:
    """Ints and "p/q" strings become exact Fractions; floats stay float."""
    if isinstance(value, bool):
        raise ValueError(f"not a weight: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise ValueError(f"not a weight: {value!r}")


def weights_close(x: Weight, y: Weight) -> bool:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    return abs(float(x) - float(y)) <= TOLERANCE


class ProbabilityMeasure:
    """Nonnegative atom weights summing to one."""

    __slots__ = ("space", "weights", "exact")

    def __init__(self, space: AtomSpace, weights: Sequence[Weight]):
        if len(weights) != space.atom_count:
            raise ValueError("one weight per atom required")
        weights = [parse_weight(w) for w in weights]
        if any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative")
        exact = all(isinstance(w, Fraction) for w in weights)
        total = sum(weights)
        if exact:
            if total != 1:
                raise ValueError(f"weights sum to {total}, expected 1")
        elif abs(float(total) - 1.0) > TOLERANCE:
            raise ValueError(f"weights sum to {total}, expected 1")
        self.space = space
        self.weights = list(weights)
        self.exact = exact

    @classmethod
    def uniform(cls, space: AtomSpace) -> "ProbabilityMeasure":
        n = space.atom_count
        return cls(space, [Fraction(1, n)] * n)

    def __call__(self, e: Event) -> Weight:
        if e.space != self.space:
            raise ValueError("event from a different space")
        total: Weight = Fraction(0) if self.exact else 0.0
        mask = e.mask
        for i, w in enumerate(self.weights):
            if mask >> i & 1:
                total += w
        return total

    def __repr__(self) -> str:
        return f"ProbabilityMeasure({self.weights!r})"


def random_measure(
    space: AtomSpace, rng: random.Random, exact: bool = False
) -> ProbabilityMeasure:
    """Strictly positive seeded measure; exact=True draws rational weights."""
    n = space.atom_count
    if exact:
        raw = [rng.randrange(1, 1000) for _ in range(n)]
        total = sum(raw)
        return ProbabilityMeasure(space, [Fraction(k, total) for k in raw])
    raw = [rng.random() + 1e-3 for _ in range(n)]
    total = sum(raw)
    weights = [w / total for w in raw]
    # nudge the last weight so the sum is exactly representable
    weights[-1] = 1.0 - sum(weights[:-1])
    return ProbabilityMeasure(space, weights)


def cl_eval(atom_index: int, e: Event) -> int:
    """Classical two-valued evaluation at one atom."""
    if not 0 <= atom_index < e.space.atom_count:
        raise ValueError(f"atom index {atom_index} out of range")
    return 1 if atom_index in e else 0


def pl_eval(p: ProbabilityMeasure, e: Event) -> Weight:
    """Probability of an event: the sum of its atom weights."""
    return p(e)


def inclusion_exclusion(p: ProbabilityMeasure, events: Sequence[Event]) -> Weight:
    """Alternating-sign expansion of the probability of a join,
    computed term by term over all nonempty index subsets."""
    if not events:
        raise ValueError("need at least one event")
    total: Weight = Fraction(0) if p.exact else 0.0
    indices = range(len(events))
    for k in range(1, len(events) + 1):
        sign = 1 if k % 2 == 1 else -1
        for subset in combinations(indices, k):
            inter = events[subset[0]]
            for i in subset[1:]:
                inter = inter & events[i]
            total += sign * p(inter)
    return total


def cpl_eval(p: ProbabilityMeasure, a: ConditionalObject) -> Weight:
    """Conditional probability of (a|b) as p(a&b)/p(b).

    Raises UndefinedConditionalError when the antecedent has measure
    zero; that case is an evaluation gap, not invalid input.
    """
    denom = p(a.antecedent)
    if denom == 0:
        raise UndefinedConditionalError("antecedent has probability zero")
    num = p(a.consequent)
    if isinstance(num, Fraction) and isinstance(denom, Fraction):
        return num / denom
    return float(num) / float(denom)


def lewis_gap(p: ProbabilityMeasure, a: Event, b: Event):
    """Compare the material implication's probability with conditioning.

    Returns (p(b=>a), p(a|b), gap). The excess factors exactly as
    p(b') * p(a'|b), and the implication never scores below the
    conditional; both facts are asserted on every call.
    """
    if p(b) == 0:
        raise UndefinedConditionalError("antecedent has probability zero")
    p_imp = p(material_implies(b, a))
    p_cond = cpl_eval(p, ConditionalObject(a & b, b))
    p_not_b = p(~b)
    p_cond_neg = cpl_eval(p, ConditionalObject(~a & b, b))
    if not weights_close(p_imp, p_cond + p_not_b * p_cond_neg):
        raise AssertionError("implication/conditioning decomposition violated")
    if float(p_imp) < float(p_cond) - TOLERANCE:
        raise AssertionError("implication scored below the conditional")
    gap = p_imp - p_cond
    return p_imp, p_cond, gap


class IndependenceReport:
    __slots__ = ("max_violation", "measures_tested", "independent")

    def __init__(self, max_violation: float, measures_tested: int):
        self.max_violation = max_violation
        self.measures_tested = measures_tested
        self.independent = max_violation <= 1e-9

    def __repr__(self) -> str:
        verdict = "independent" if self.independent else "dependent"
        return (
            f"IndependenceReport({verdict} over {self.measures_tested} measures, "
            f"max violation {self.max_violation:.3e})"
        )


def mf_independent_sample(
    a: ConditionalObject, b: ConditionalObject, n_measures: int, seed: int
) -> IndependenceReport:
    """Sampled test of measure-free independence: p(A&B) == p(A)p(B)
    under every probability measure. Sampling over strictly positive
    seeded measures only ever certifies "independent (sampled)"."""
    rng = random.Random(seed)
    prod = a & b
    worst = 0.0
    for _ in range(n_measures):
        p = random_measure(a.space, rng)
        try:
            lhs = float(cpl_eval(p, prod))
            rhs = float(cpl_eval(p, a)) * float(cpl_eval(p, b))
        except UndefinedConditionalError:
            continue
        worst = max(worst, abs(lhs - rhs))
    return IndependenceReport(worst, n_measures)


class PossibilityAssignment:
    """Per-primitive-event membership grades in [0, 1]."""

    __slots__ = ("grades",)

    def __init__(self, grades: Mapping[tuple[str, str], float]):
        for key, g in grades.items():
            if not 0.0 <= float(g) <= 1.0:
                raise ValueError(f"grade for {key} outside [0, 1]: {g}")
        self.grades = {k: float(v) for k, v in grades.items()}

    @classmethod
    def from_json(cls, data) -> "PossibilityAssignment":
        if not isinstance(data, dict) or "poss" not in data:
            raise ValueError('possibility file must look like {"poss": {...}}')
        grades = {}
        for var, vals in data["poss"].items():
            for val, g in vals.items():
                grades[(var, val)] = float(g)
        return cls(grades)

    def grade(self, var: str, value: str) -> float:
        try:
            return self.grades[(var, value)]
        except KeyError:
            raise FormulaError(f"no possibility grade for {var}[{value}]") from None


def fl_eval(poss: PossibilityAssignment, f: Formula) -> float:
    """Possibilistic evaluation: MIN for and, MAX for or, 1-x for not,
    MAX(1-antecedent, consequent) for implies. Leaves must carry
    explicit values; a multi-valued leaf reads as their disjunction."""
    if isinstance(f, Leaf):
        if f.vals is None:
            raise FormulaError(f"unbound leaf {f.var} in fuzzy evaluation")
        return max(poss.grade(f.var, v) for v in f.vals)
    if isinstance(f, Not):
        return 1.0 - fl_eval(poss, f.arg)
    if isinstance(f, And):
        return min(fl_eval(poss, a) for a in f.args)
    if isinstance(f, Or):
        return max(fl_eval(poss, a) for a in f.args)
    if isinstance(f, Implies):
        return max(1.0 - fl_eval(poss, f.antecedent), fl_eval(poss, f.consequent))
    raise FormulaError(f"unknown formula node {f!r}")


def measure_from_json(
    space: AtomSpace,
    data,
    atom_assignments: Sequence[Mapping[str, str]] | None = None,
) -> ProbabilityMeasure:
    """Build a measure from its file form.

    {"atoms": {label: weight}} assigns weights by atom label (absent
    labels get zero); {"factors": {var: {value: weight}}} builds the
    product measure over a variable-grounded space and requires the
    atom -> assignment table from that grounding.
    """
    if not isinstance(data, dict):
        raise ValueError("measure file must be a JSON object")
    if "atoms" in data:
        mapping = data["atoms"]
        weights: list[Weight] = []
        unknown = set(mapping) - set(space.atom_labels)
        if unknown:
            raise ValueError(f"unknown atom labels: {sorted(unknown)}")
        for label in space.atom_labels:
            weights.append(parse_weight(mapping.get(label, 0)))
        return ProbabilityMeasure(space, weights)
    if "factors" in data:
        if atom_assignments is None:
            raise ValueError("factor measures need a variable-grounded space")
        factors = {
            var: {val: parse_weight(w) for val, w in vals.items()}
            for var, vals in data["factors"].items()
        }
        for var, vals in factors.items():
            total = sum(vals.values())
            if all(isinstance(w, Fraction) for w in vals.values()):
                if total != 1:
                    raise ValueError(f"factor for {var} sums to {total}")
            elif abs(float(total) - 1.0) > TOLERANCE:
                raise ValueError(f"factor for {var} sums to {total}")
        weights = []
        for assignment in atom_assignments:
            w: Weight = Fraction(1)
            for var, val in assignment.items():
                if var not in factors:
                    raise ValueError(f"measure file missing factor for {var}")
                if val not in factors[var]:
                    raise ValueError(f"factor for {var} missing value {val!r}")
                w = w * factors[var][val]
            weights.append(w)
        return ProbabilityMeasure(space, weights)
    raise ValueError('measure file needs an "atoms" or "factors" section')
