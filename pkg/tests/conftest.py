import pytest

from levelbars import verify


@pytest.fixture(scope="session")
def named_cases():
    """The four hand-checked spaces with their barcodes cached."""
    return verify.fixture_cases()


@pytest.fixture(scope="session")
def corpus():
    """100 seeded random spaces over fields 2/3/5: 90 at the default size
    plus 10 pushed to the 12-vertex cap."""
    return (verify.corpus_cases(count=90)
            + verify.corpus_cases(count=10, start_seed=90, max_vertices=12))


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return corpus[:12]
