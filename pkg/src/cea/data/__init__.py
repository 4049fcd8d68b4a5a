"""Bundled example inputs: a small medical-diagnosis knowledge base,
an observation for it, and the recorded golden facts."""

import json
from importlib import resources


def _load(name: str):
    ref = resources.files(__package__).joinpath(name)
    with ref.open("r", encoding="utf-8") as fh:
        return json.load(fh)


def load_bundled_kb():
    from ..engine import kb_from_json

    return kb_from_json(_load("medical_kb.json"))


def load_bundled_observation(kb):
    from ..engine import observation_from_json

    return observation_from_json(kb, _load("observation_fever.json"))


def bundled_kb_path() -> str:
    return str(resources.files(__package__).joinpath("medical_kb.json"))


def bundled_observation_path() -> str:
    return str(resources.files(__package__).joinpath("observation_fever.json"))


def bundled_golden_dir() -> str:
    return str(resources.files(__package__).joinpath("golden"))
