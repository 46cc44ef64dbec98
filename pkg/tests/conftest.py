from hypothesis import settings

# first calls fill Farey-tree and ball caches, so per-example timing is meaningless
settings.register_profile("twobridge", deadline=None, max_examples=100)
settings.load_profile("twobridge")

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed or report.skipped:
        if report.passed and report.when != "call":
            return
        status = "PASS" if report.passed else "FAIL"
        # a failure in any phase sticks
        if _acceptance.get(name) != "FAIL":
            _acceptance[name] = status


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _acceptance.items():
        terminalreporter.write_line(f"{status} {name}")
