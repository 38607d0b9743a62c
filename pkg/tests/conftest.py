import pytest

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion is None:
        return
    number = criterion.args[0]
    failed = report.failed
    if report.when == "call" or failed:
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        notes = "; ".join(f"{k}={v}" for k, v in item.user_properties)
        prev = _ACCEPTANCE.get(number)
        ok = not failed and report.when == "call" and (prev is None or prev[0])
        _ACCEPTANCE[number] = (ok, doc, notes)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, doc, notes = _ACCEPTANCE[number]
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {doc}"
        if notes:
            line += f"  [{notes}]"
        terminalreporter.write_line(line)
