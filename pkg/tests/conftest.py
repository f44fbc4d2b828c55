import os
from pathlib import Path

import pytest

from segdisc import load_corpus

FIXTURES = Path(__file__).parent / "fixtures"

# The 9790-utterance phonemic corpus is not redistributable with this
# repository.  Point SEGDISC_CORPUS at a copy (or drop it at data/br-phono.txt
# under the repo root) to enable the corpus-conditional tests.
_CORPUS_CANDIDATES = [
    os.environ.get("SEGDISC_CORPUS"),
    str(Path(__file__).resolve().parent.parent / "data" / "br-phono.txt"),
]


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def full_corpus_path():
    for candidate in _CORPUS_CANDIDATES:
        if candidate and Path(candidate).is_file():
            return candidate
    return None


@pytest.fixture
def sample_path():
    return fixture_path("sample20.txt")


@pytest.fixture
def sample_corpus(sample_path):
    return load_corpus(sample_path)


@pytest.fixture
def full_corpus():
    path = full_corpus_path()
    if path is None:
        pytest.skip("phonemic corpus not supplied (set SEGDISC_CORPUS)")
    corpus = load_corpus(path)
    if len(corpus) != 9790:
        pytest.skip(f"supplied corpus has {len(corpus)} utterances, expected 9790")
    return corpus
