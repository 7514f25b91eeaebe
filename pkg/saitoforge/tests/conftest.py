import pytest


def pytest_addoption(parser):
    parser.addoption("--profile", action="store", default="quick")


@pytest.fixture
def get_profile(request):
    return request.config.getoption("--profile")
