import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    import acceptance_registry

    if acceptance_registry.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(acceptance_registry.RESULTS):
            terminalreporter.write_line(acceptance_registry.RESULTS[num])
