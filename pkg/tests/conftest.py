import pytest

ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_record(request):
    """Collects ``(cid, title, ok, seconds, budget, detail)`` rows for the summary."""
    rows = request.config.stash.setdefault(ACCEPTANCE_KEY, [])
    return rows.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(ACCEPTANCE_KEY, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, ok, seconds, budget, detail in sorted(rows, key=lambda r: _order(r[0])):
        verdict = "PASS" if ok and seconds < budget else "FAIL"
        line = f"{verdict} [{cid:>3}] {title}: {seconds:.3f} s (budget {budget:g} s)"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
    passed = sum(1 for r in rows if r[2] and r[3] < r[4])
    terminalreporter.write_line(f"{passed}/{len(rows)} acceptance criteria passed")


def _order(cid):
    digits = "".join(ch for ch in cid if ch.isdigit())
    return int(digits), cid
