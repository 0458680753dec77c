import json

import pytest
from click.testing import CliRunner

from borderedsuture.cli.main import cli


class BsfRunner:
    """Invoke the bsf group in-process and read back its reports."""

    def __init__(self):
        self.runner = CliRunner()

    def call(self, args: list[str], env: dict | None = None):
        return self.runner.invoke(cli, [str(a) for a in args], obj={}, env=env)

    def report(self, args: list[str], out, env: dict | None = None) -> dict:
        result = self.call([*args, "--out", out], env=env)
        assert result.exit_code == 0, result.output
        with open(out) as f:
            return json.load(f)


@pytest.fixture
def bsf():
    return BsfRunner()
