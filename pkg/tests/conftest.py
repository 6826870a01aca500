import pytest

_RESULTS: list[tuple[str, bool, str]] = []


class AcceptanceRecorder:
    def __init__(self, name):
        self.name = name

    def check(self, ok: bool, detail: str) -> None:
        _RESULTS.append((self.name, bool(ok), detail))
        assert ok, f"{self.name}: {detail}"


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    return AcceptanceRecorder(marker.args[0] if marker else request.node.name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
