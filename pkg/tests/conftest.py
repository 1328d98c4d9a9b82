import pytest

from intcayley.group import iter_abelian_presentations, make_group

SMALL_SHAPES = [[n] for n in range(2, 13)] + [[2, 2], [2, 4], [2, 6], [3, 3], [2, 2, 2], [2, 3]]


@pytest.fixture(params=SMALL_SHAPES, ids=lambda f: ",".join(map(str, f)))
def small_group(request):
    return make_group(request.param)


def groups_up_to(max_order):
    return [make_group(f) for f in iter_abelian_presentations(max_order)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
