import re

ACCEPTANCE = {}

_DOC = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = re.match(r"test_criterion_(\d+)_", item.name)
        if m and item.module.__name__.endswith("test_acceptance"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _DOC[item.nodeid] = (int(m.group(1)), doc)


def pytest_runtest_logreport(report):
    if report.nodeid not in _DOC:
        return
    num, doc = _DOC[report.nodeid]
    if report.when == "call" or report.failed:
        previous = ACCEPTANCE.get(num, (doc, True))[1]
        ACCEPTANCE[num] = (doc, previous and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        doc, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {doc}")
