"""Exact computations for set-theoretic Yang-Baxter solutions, their
structure groups, Promislow subgroups, and finite skew braces."""
from __future__ import annotations

import json
from importlib import resources

from .solutions import Solution, solution_from_json

__version__ = "0.1.0"

FIXTURE_NAMES = (
    "prop-4-13", "prop-4-19", "prop-GI", "exa-15579", "mp-example", "lyubashenko",
    *(f"table-4-13-{i}" for i in range(1, 5)),
    *(f"table-4-19-{i}" for i in range(1, 5)),
)
TABLE_FIXTURES = FIXTURE_NAMES[6:]


def load_fixture(name: str) -> Solution:
    """One of the bundled solutions by name (see ``FIXTURE_NAMES``)."""
    text = resources.files(__package__).joinpath("fixtures", f"{name}.json").read_text()
    return solution_from_json(json.loads(text))
