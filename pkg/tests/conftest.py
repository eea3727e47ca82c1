import pytest

from grl.corpus import default_manifest, generate_corpus


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(default_manifest())
