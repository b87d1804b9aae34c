import json
import pathlib

import pytest

from allroots import FactoredSpec, PrecisionContext, SolveConfig, solve

PROBLEM_DIR = pathlib.Path(__file__).resolve().parent.parent / "problems"


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)


def problem_path(name: str) -> pathlib.Path:
    return PROBLEM_DIR / f"{name}.json"


def load_problem_dict(name: str) -> dict:
    return json.loads(problem_path(name).read_text())


def build_spec(example: dict, ctx: PrecisionContext) -> FactoredSpec:
    return FactoredSpec(
        family=example["family"],
        roots=tuple(ctx.mpf(r) for r in example["roots"]),
        multiplicities=example["multiplicities"],
    )


def solve_example(example: dict, ctx: PrecisionContext, **config_overrides):
    spec = build_spec(example, ctx)
    config = SolveConfig(precision=ctx, **config_overrides)
    initial = tuple(ctx.mpf(x) for x in example["initial"])
    return solve(example["family"], spec, example["multiplicities"], initial, config)
