"""JSON Schemas for every document the CLI emits."""

import json
from importlib import resources

NAMES = (
    "group_info",
    "sindex",
    "stable_subset",
    "stability_report",
    "scan",
    "delta",
    "witness",
    "greedy_state",
    "verify_lemmas",
    "cross_validate",
    "extremal_report",
    "graph",
)

COMMAND_SCHEMA = {
    "group-info": "group_info",
    "sindex": "sindex",
    "stable-subset": "stable_subset",
    "stable-group": "stability_report",
    "scan": "scan",
    "delta": "delta",
    "witness": "witness",
    "construct": "greedy_state",
    "verify-lemmas": "verify_lemmas",
    "cross-validate": "cross_validate",
}


def load(name: str) -> dict:
    return json.loads(resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8"))
