"""Acceptance gate: every criterion runs at full stated scale and must
pass exactly.  One line of output per criterion."""

import pytest

from tautrings.acceptance import ALL_CRITERIA


@pytest.mark.parametrize("criterion", ALL_CRITERIA,
                         ids=[c.__name__ for c in ALL_CRITERIA])
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print(result.line())
    assert result.passed, result.detail
