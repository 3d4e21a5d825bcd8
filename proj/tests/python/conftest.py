import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture
def fixtures_dir():
    return pathlib.Path(os.environ.get("LEIBNIZ_FIXTURES", ROOT / "fixtures"))


@pytest.fixture
def cli_path():
    path = os.environ.get("LEIBNIZ_CLI")
    if not path:
        pytest.skip("LEIBNIZ_CLI not set")
    return path
