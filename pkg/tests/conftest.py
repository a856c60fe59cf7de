import sys


def pytest_terminal_summary(terminalreporter):
    """Echo one pass/fail line per acceptance criterion."""
    for name, module in sys.modules.items():
        if name.rpartition(".")[2] == "test_acceptance":
            verdicts = getattr(module, "VERDICTS", [])
            if verdicts:
                terminalreporter.section("acceptance criteria")
                for line in verdicts:
                    terminalreporter.write_line(line)
            break
