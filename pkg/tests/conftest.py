import pytest

from gssfcheck.errata import errata_report


@pytest.fixture(scope="session")
def errata_entries():
    return errata_report()


@pytest.fixture(scope="session")
def errata_locations(errata_entries):
    return {e.location for e in errata_entries}
