"""Acceptance gate: every published figure and bound at its stated tolerance.

Each check returns a row list; a test fails with the offending rows printed.
The context is shared so the expensive solves run once for the whole gate.
"""

import pytest

from dispbound.checks import ALL_CHECKS, CheckContext


@pytest.fixture(scope="module")
def context():
    return CheckContext(seed=0)


def _explain(rows):
    lines = []
    for row in rows:
        if row["ok"]:
            continue
        lines.append(
            f"  {row['name']}: expected {row['expected']!r}, "
            f"got {row['got']!r}, tol {row['tol']!r}"
        )
    return "\n".join(lines)


@pytest.mark.parametrize(
    "check,suite",
    ALL_CHECKS,
    ids=[fn.__name__.removeprefix("check_") for fn, _ in ALL_CHECKS],
)
def test_acceptance(check, suite, context):
    result = check(context)
    assert result["passed"], f"{result['name']} failed:\n{_explain(result['rows'])}"
    assert result["suite"] == suite
    assert all(row["ok"] for row in result["rows"])
