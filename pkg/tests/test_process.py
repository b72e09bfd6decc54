import time

import pytest

from core.errors import ParameterError, RegcheckError
from utils.process import BudgetMonitor, CheckRunner
from utils.ui import Colors, Table, format_duration


def failing():
    raise ParameterError("sin datos")


CHECKS = [
    ("b.equal", lambda: (3, 1 + 2)),
    ("a.differs", lambda: ([1], [2])),
    ("c.raises", failing),
]


@pytest.mark.parametrize("jobs", [1, 3])
def test_runner_sorts_and_isolates_errors(jobs):
    seen = []
    results, exceeded = CheckRunner(jobs, seen.append).run(CHECKS, "demo")
    assert [r.name for r in results] == ["a.differs", "b.equal", "c.raises"]
    assert [r.passed for r in results] == [False, True, False]
    assert results[2].error == "sin datos"
    assert not exceeded
    assert len(seen) == 3


def test_duplicate_names_are_rejected():
    with pytest.raises(RegcheckError):
        CheckRunner().run([("x", lambda: (1, 1)), ("x", lambda: (2, 2))])


def test_budget_overrun_is_flagged():
    monitor = BudgetMonitor("demo", 0.01, check_interval=0.01)
    monitor.start()
    time.sleep(0.05)
    monitor.stop()
    assert monitor.exceeded


def test_table_and_duration():
    table = Table(["suite", "estado"])
    table.add_row(["ex21", f"{Colors.GREEN}ok{Colors.RESET}"])
    lines = table.render().splitlines()
    assert len(lines) == 5
    assert len({len(Colors.strip(line)) for line in lines}) == 1
    assert format_duration(4.2) == "4.2s"
    assert format_duration(150) == "2m 30s"
    assert format_duration(9000) == "2h 30m"
