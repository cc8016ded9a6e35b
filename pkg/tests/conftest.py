from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def demo_lexicon_path() -> Path:
    return FIXTURES / "demo.lex"


@pytest.fixture(scope="session")
def figure3_tree_path() -> Path:
    return FIXTURES / "figure3.tree"
