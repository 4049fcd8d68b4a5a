"""Combination-of-evidence pipeline over a typed knowledge base.

A knowledge base declares event variables with finite value domains and
implication-form rules connecting them. The pipeline grounds everything
in the product space whose atoms are joint assignments, conjoins the
observation with the rules that mention it, disjoins that conjunction
over all assignments of the unobserved non-query variables, and hands
the result to whichever evaluator the chosen logic dictates:

  cl  - classical, at one atom          pl  - probability of the event
  fl  - possibilistic, on the syntax    cpl - conditional probability of
                                              the conditional object

For cl and pl the rule arrow is material implication; for cpl each rule
becomes the conditional object (consequent | antecedent) and the
conjunction/disjunction happen in the conditional calculus.
"""

from __future__ import annotations

import itertools
import json
from functools import reduce
from typing import Mapping, Optional, Sequence, Union

from .algebra import AtomSpace, Event, material_implies
from .conditional import ConditionalObject, conjoin_all, disjoin_all, embed
from .formulas import And, Formula, Implies, Leaf, Or, bind_leaves, from_json, ground
from .semantics import (
    UndefinedConditionalError,
    cl_eval,
    cpl_eval,
    fl_eval,
    pl_eval,
)

ALDP_TAGS = ("cl", "fl", "pl", "cpl")
VARIABLE_KINDS = ("data-attribute", "auxiliary-attribute", "diagnosis")
MAX_SPACE_ATOMS = 1 << 20


class KnowledgeBaseError(ValueError):
    pass


class VariableDecl:
    __slots__ = ("name", "kind", "domain")

    def __init__(self, name: str, kind: str, domain: Sequence[str]):
        if kind not in VARIABLE_KINDS:
            raise KnowledgeBaseError(f"unknown variable kind {kind!r} for {name}")
        if not domain:
            raise KnowledgeBaseError(f"variable {name} has an empty domain")
        if len(set(domain)) != len(domain):
            raise KnowledgeBaseError(f"variable {name} has duplicate domain values")
        self.name = name
        self.kind = kind
        self.domain = list(domain)

    def __repr__(self) -> str:
        return f"VariableDecl({self.name}, {self.kind}, {self.domain})"


class Rule:
    __slots__ = ("id", "antecedent", "consequent")

    def __init__(self, rule_id: str, antecedent: Formula, consequent: Formula):
        self.id = rule_id
        self.antecedent = antecedent
        self.consequent = consequent

    def variables(self) -> set[str]:
        return self.antecedent.variables() | self.consequent.variables()

    def __repr__(self) -> str:
        return f"Rule({self.id}: {self.antecedent!r} => {self.consequent!r})"


class KnowledgeBase:
    def __init__(self, variables: Sequence[VariableDecl], rules: Sequence[Rule]):
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise KnowledgeBaseError("duplicate variable names")
        rule_ids = [r.id for r in rules]
        if len(set(rule_ids)) != len(rule_ids):
            raise KnowledgeBaseError("duplicate rule ids")
        self.variables = list(variables)
        self.rules = list(rules)
        self._by_name = {v.name: v for v in variables}
        for rule in rules:
            missing = rule.variables() - set(names)
            if missing:
                raise KnowledgeBaseError(
                    f"rule {rule.id} references undeclared variables {sorted(missing)}"
                )

    def variable(self, name: str) -> VariableDecl:
        try:
            return self._by_name[name]
        except KeyError:
            raise KnowledgeBaseError(f"undeclared variable {name!r}") from None

    def diagnosis_variables(self) -> list[VariableDecl]:
        return [v for v in self.variables if v.kind == "diagnosis"]


class Observation:
    """Observed value subsets per variable."""

    def __init__(self, kb: KnowledgeBase, observed: Mapping[str, Sequence[str]]):
        self.observed: dict[str, list[str]] = {}
        for var, vals in observed.items():
            decl = kb.variable(var)
            if not vals:
                raise KnowledgeBaseError(f"observation of {var} is empty")
            bad = set(vals) - set(decl.domain)
            if bad:
                raise KnowledgeBaseError(
                    f"observation of {var} has out-of-domain values {sorted(bad)}"
                )
            self.observed[var] = list(vals)
        if not self.observed:
            raise KnowledgeBaseError("observation is empty")

    def __contains__(self, var: str) -> bool:
        return var in self.observed


class Grounding:
    """The product space of all variable domains.

    Atoms are joint assignments, ordered by itertools.product over the
    declaration order, so atom indices are reproducible. Grounds
    primitive events and whole formulas to events.
    """

    def __init__(self, kb: KnowledgeBase):
        sizes = 1
        for v in kb.variables:
            sizes *= len(v.domain)
            if sizes > MAX_SPACE_ATOMS:
                raise KnowledgeBaseError("joint domain product exceeds the space bound")
        self.kb = kb
        self.atom_assignments: list[dict[str, str]] = []
        labels = []
        names = [v.name for v in kb.variables]
        for combo in itertools.product(*(v.domain for v in kb.variables)):
            assignment = dict(zip(names, combo))
            self.atom_assignments.append(assignment)
            labels.append(",".join(f"{n}={v}" for n, v in assignment.items()))
        self.space = AtomSpace(len(labels), labels)
        self._primitive: dict[tuple[str, str], Event] = {}
        for var in kb.variables:
            for val in var.domain:
                mask = 0
                for idx, assignment in enumerate(self.atom_assignments):
                    if assignment[var.name] == val:
                        mask |= 1 << idx
                self._primitive[(var.name, val)] = self.space.event_from_mask(mask)

    def primitive(self, var: str, value: str) -> Event:
        try:
            return self._primitive[(var, value)]
        except KeyError:
            raise KnowledgeBaseError(f"unknown primitive event {var}[{value}]") from None

    def values_event(self, var: str, values: Sequence[str]) -> Event:
        return reduce(lambda x, y: x | y, (self.primitive(var, v) for v in values))

    def atom_of_assignment(self, assignment: Mapping[str, str]) -> int:
        names = [v.name for v in self.kb.variables]
        if set(assignment) != set(names):
            raise KnowledgeBaseError("assignment must cover every variable exactly")
        for idx, full in enumerate(self.atom_assignments):
            if all(full[n] == assignment[n] for n in names):
                return idx
        raise KnowledgeBaseError("assignment names an undeclared value")

    def ground_formula(
        self,
        f: Formula,
        observation: Optional[Observation] = None,
        assignment: Optional[Mapping[str, str]] = None,
    ) -> Event:
        """Ground a formula; free leaves resolve through the observation
        first, then the domain-variable assignment."""

        def resolve(var: str, vals):
            if vals is not None:
                return self.values_event(var, vals)
            if observation is not None and var in observation:
                return self.values_event(var, observation.observed[var])
            if assignment is not None and var in assignment:
                return self.primitive(var, assignment[var])
            raise KnowledgeBaseError(f"no binding for variable {var}")

        return ground(f, resolve)


def build_space(kb: KnowledgeBase) -> Grounding:
    return Grounding(kb)


def relevant_rules(kb: KnowledgeBase, obs: Observation) -> list[Rule]:
    """The potential firing class, in declaration order: rules whose
    antecedent or consequent mentions an observed variable, closed under
    variable sharing so that rules chained through auxiliary variables
    participate in the conjunction as well."""
    reachable = set(obs.observed)
    chosen: set[str] = set()
    changed = True
    while changed:
        changed = False
        for rule in kb.rules:
            if rule.id in chosen:
                continue
            if rule.variables() & reachable:
                chosen.add(rule.id)
                reachable |= rule.variables()
                changed = True
    return [r for r in kb.rules if r.id in chosen]


def _bound_vals(obs: Observation, assignment: Mapping[str, str]):
    def resolve(var: str, vals):
        if vals is not None:
            return vals
        if var in obs:
            return tuple(obs.observed[var])
        if var in assignment:
            return (assignment[var],)
        raise KnowledgeBaseError(f"no binding for variable {var}")

    return resolve


ConjoinedForm = Union[Event, ConditionalObject, Formula]


def conjoin_f(
    grounding: Grounding,
    obs: Observation,
    rules: Sequence[Rule],
    aldp: str,
    assignment: Mapping[str, str],
) -> ConjoinedForm:
    """The conjunction of the observed data with the relevant rules,
    at one assignment of the domain variables.

    cl/pl: event meet with material implications. cpl: conditional-space
    meet with each rule as (consequent | antecedent). fl: the untouched
    syntax tree, for MIN/MAX evaluation.
    """
    if aldp not in ALDP_TAGS:
        raise KnowledgeBaseError(f"unknown logic tag {aldp!r}")
    if aldp == "fl":
        resolve = _bound_vals(obs, assignment)
        parts: list[Formula] = [
            Leaf(var, tuple(vals)) for var, vals in obs.observed.items()
        ]
        for rule in rules:
            parts.append(
                Implies(
                    bind_leaves(rule.antecedent, resolve),
                    bind_leaves(rule.consequent, resolve),
                )
            )
        return And(parts)

    y = reduce(
        lambda x, z: x & z,
        (grounding.values_event(var, vals) for var, vals in obs.observed.items()),
    )
    if aldp == "cpl":
        factors = [embed(y)]
        for rule in rules:
            ant = grounding.ground_formula(rule.antecedent, obs, assignment)
            cons = grounding.ground_formula(rule.consequent, obs, assignment)
            factors.append(ConditionalObject(cons & ant, ant))
        return conjoin_all(factors)

    event = y
    for rule in rules:
        ant = grounding.ground_formula(rule.antecedent, obs, assignment)
        cons = grounding.ground_formula(rule.consequent, obs, assignment)
        event = event & material_implies(ant, cons)
    return event


def sweep_variables(
    kb: KnowledgeBase, rules: Sequence[Rule], obs: Observation, query_var: str
) -> list[VariableDecl]:
    """The unobserved, non-query variables the rules mention: the ones
    integrated out."""
    mentioned: set[str] = set()
    for r in rules:
        mentioned |= r.variables()
    out = []
    for v in kb.variables:
        if v.name in mentioned and v.name not in obs and v.name != query_var:
            out.append(v)
    return out


def integrate_out(
    grounding: Grounding,
    obs: Observation,
    aldp: str,
    query_var: str,
    query_value: str,
) -> ConjoinedForm:
    """Disjoin the conjunction form over every assignment of the swept
    variables, with the query variable pinned to one value."""
    kb = grounding.kb
    decl = kb.variable(query_var)
    if decl.kind != "diagnosis":
        raise KnowledgeBaseError(f"query variable {query_var} is not a diagnosis")
    if query_value not in decl.domain:
        raise KnowledgeBaseError(f"{query_value!r} not in the domain of {query_var}")
    rules = relevant_rules(kb, obs)
    sweep = sweep_variables(kb, rules, obs, query_var)

    forms = []
    for combo in itertools.product(*(v.domain for v in sweep)):
        assignment = dict(zip((v.name for v in sweep), combo))
        assignment[query_var] = query_value
        forms.append(conjoin_f(grounding, obs, rules, aldp, assignment))

    if aldp == "fl":
        return Or(forms)
    if aldp == "cpl":
        return disjoin_all(forms)
    return reduce(lambda x, y: x | y, forms)


class EvalRow:
    __slots__ = ("value", "grade", "error")

    def __init__(self, value: str, grade=None, error: Optional[str] = None):
        self.value = value
        self.grade = grade
        self.error = error

    def __repr__(self) -> str:
        if self.error:
            return f"EvalRow({self.value}: {self.error})"
        return f"EvalRow({self.value}: {self.grade})"


def evaluate(
    grounding: Grounding,
    obs: Observation,
    aldp: str,
    query_var: str,
    semantics_input,
) -> list[EvalRow]:
    """One grade per query value under the chosen logic.

    semantics_input is an atom index for cl, a PossibilityAssignment
    for fl, and a ProbabilityMeasure for pl/cpl. A zero-probability
    antecedent under cpl yields a per-value error row, not a failure.
    """
    kb = grounding.kb
    decl = kb.variable(query_var)
    rows = []
    for value in decl.domain:
        form = integrate_out(grounding, obs, aldp, query_var, value)
        if aldp == "cl":
            rows.append(EvalRow(value, cl_eval(semantics_input, form)))
        elif aldp == "pl":
            rows.append(EvalRow(value, pl_eval(semantics_input, form)))
        elif aldp == "cpl":
            try:
                rows.append(EvalRow(value, cpl_eval(semantics_input, form)))
            except UndefinedConditionalError:
                rows.append(EvalRow(value, error="undefined"))
        else:
            rows.append(EvalRow(value, fl_eval(semantics_input, form)))
    return rows


def kb_from_json(data) -> KnowledgeBase:
    if not isinstance(data, dict):
        raise KnowledgeBaseError("knowledge base file must be a JSON object")
    try:
        variables = [
            VariableDecl(v["name"], v["kind"], v["domain"])
            for v in data.get("variables", [])
        ]
        rules = [
            Rule(r["id"], from_json(r["if"]), from_json(r["then"]))
            for r in data.get("rules", [])
        ]
    except KeyError as exc:
        raise KnowledgeBaseError(f"missing field {exc} in knowledge base file") from None
    if not variables:
        raise KnowledgeBaseError("knowledge base declares no variables")
    return KnowledgeBase(variables, rules)


def observation_from_json(kb: KnowledgeBase, data) -> Observation:
    if not isinstance(data, dict) or "observe" not in data:
        raise KnowledgeBaseError('observation file must look like {"observe": {...}}')
    return Observation(kb, data["observe"])


def load_kb(path: str) -> KnowledgeBase:
    with open(path, "r", encoding="utf-8") as fh:
        return kb_from_json(json.load(fh))


def load_observation(kb: KnowledgeBase, path: str) -> Observation:
    with open(path, "r", encoding="utf-8") as fh:
        return observation_from_json(kb, json.load(fh))
