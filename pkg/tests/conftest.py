import pytest

from lspace_obstruct import kernels

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption(
        "--kernel-backend",
        choices=("compiled", "python"),
        help="run the whole suite on one kernel backend (default: whatever imported)",
    )


def pytest_configure(config):
    name = config.getoption("--kernel-backend")
    if name:
        kernels.set_backend(name)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def pytest_report_header(config):
    return f"lspace_obstruct kernel backend: {kernels.BACKEND} (available: {', '.join(kernels.available_backends())})"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section(f"acceptance criteria ({kernels.BACKEND} kernels)")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
