import pytest

from csmcheck.data_access.fixture_repository import FixtureRepository
from csmcheck.models.ring import RingModel
from csmcheck.services import ingest_service


@pytest.fixture
def p2():
    return RingModel.projective(2)


@pytest.fixture
def gr24():
    return RingModel.grassmannian(2, 4)


@pytest.fixture
def gr25():
    return RingModel.grassmannian(2, 5)


@pytest.fixture
def fixture_repo():
    return FixtureRepository()


@pytest.fixture
def gr25_table(fixture_repo):
    """SSM table of the Schubert cells of Gr(2,5), read from the embedded fixture."""
    table, _ = ingest_service.table_from_fixture(fixture_repo.get_fixture("paper"))
    return table


@pytest.fixture
def sample_space(fixture_repo):
    """Load an embedded sample poset by name, with its named functions."""
    def _load(name):
        document = fixture_repo.get_sample_poset(name)
        space = ingest_service.space_from_file(document)
        return space, ingest_service.functions_from_file(document, space)

    return _load
