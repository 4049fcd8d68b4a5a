import pytest

from cea.algebra import AtomSpace
from cea.formulas import (
    And,
    FormulaError,
    Implies,
    Leaf,
    Not,
    Or,
    bind_leaves,
    from_json,
    ground,
    to_json,
)


def test_parse_round_trip():
    node = {
        "op": "implies",
        "args": [
            {"op": "or", "args": [{"var": "b1"}, {"var": "b2", "vals": ["1"]}]},
            {"op": "not", "args": [{"var": "a1", "vals": ["2", "3"]}]},
        ],
    }
    f = from_json(node)
    assert to_json(f) == node
    assert f.variables() == {"b1", "b2", "a1"}


@pytest.mark.parametrize("bad", [
    42,
    {"op": "xor", "args": []},
    {"op": "not", "args": [{"var": "x"}, {"var": "y"}]},
    {"op": "implies", "args": [{"var": "x"}]},
    {"op": "and", "args": []},
    {"var": "x", "vals": [1]},
])
def test_parse_rejects_malformed(bad):
    with pytest.raises(FormulaError):
        from_json(bad)


def test_ground_commutes_with_connectives():
    space = AtomSpace(3)
    table = {"x": space.event([0, 1]), "y": space.event([1, 2])}

    def resolve(var, vals):
        return table[var]

    x, y = Leaf("x"), Leaf("y")
    assert ground(Or([x, y]), resolve) == table["x"] | table["y"]
    assert ground(And([x, y]), resolve) == table["x"] & table["y"]
    assert ground(Not(x), resolve) == ~table["x"]
    assert ground(Implies(x, y), resolve) == ~table["x"] | table["y"]
    nested = And([Or([x, y]), Not(y)])
    assert ground(nested, resolve) == (table["x"] | table["y"]) & ~table["y"]


def test_bind_leaves():
    f = Implies(Leaf("x"), Or([Leaf("y"), Leaf("z", ["5"])]))
    bound = bind_leaves(f, lambda var, vals: vals if vals else (var + "0",))
    assert to_json(bound) == {
        "op": "implies",
        "args": [
            {"var": "x", "vals": ["x0"]},
            {"op": "or", "args": [
                {"var": "y", "vals": ["y0"]},
                {"var": "z", "vals": ["5"]},
            ]},
        ],
    }
