import pytest

from trilec.catalog import _default_set, catalog_graph


@pytest.fixture(scope="session")
def tri_sets():
    """Enumerated triangulation sets, memoised for the whole session."""
    return _default_set


@pytest.fixture(scope="session")
def catalog(tri_sets):
    names = ("G4", "G4P", "G11", "G15", "G15P", "G16", "G16P", "G17", "G18", "ICOSA")
    return {name: catalog_graph(name, tri_sets) for name in names}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES):
        terminalreporter.write_line(line)
