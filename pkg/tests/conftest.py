import pytest

from qwalg import ClassId, all_examples, check_class, models_up_to


@pytest.fixture(scope="session")
def examples():
    return all_examples()


@pytest.fixture(scope="session")
def models4():
    """Every involutive BE algebra of size <= 4, one per isomorphism class."""
    return models_up_to(4)


@pytest.fixture(scope="session")
def models5():
    return models_up_to(5)


@pytest.fixture(scope="session")
def iom5(models5):
    return [a for a in models5 if check_class(a, ClassId.IOM).passed]
