import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from piextract.conllu import load_conllu
from piextract.lexicon import load_lexicon
from piextract.morphology import Morphology

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def morph():
    return Morphology()


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(FIXTURES / "lexicon_small.tsv", "fixture")


@pytest.fixture(scope="session")
def corpus():
    return load_conllu(FIXTURES / "corpus_small.conllu")


@pytest.fixture(scope="session")
def pie_parses():
    parses = load_conllu(FIXTURES / "pie_parses.conllu")
    return {p.meta["entry_id"]: p for p in parses}


def get_sentence(corpus, doc, sent):
    for s in corpus:
        if s.document_id == doc and s.sentence_id == sent:
            return s
    raise KeyError((doc, sent))
