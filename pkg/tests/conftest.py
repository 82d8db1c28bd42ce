import importlib.util
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def oracle():
    """The standalone extent table from scripts/, loaded as a module."""
    path = REPO_ROOT / "scripts" / "extents_oracle.py"
    spec = importlib.util.spec_from_file_location("extents_oracle", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module
