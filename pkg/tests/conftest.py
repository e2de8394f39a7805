import os

import pytest

from pinn_bench.pinn_bench_consts import Consts


def pytest_configure(config):
    config.addinivalue_line("markers", f"slow: long-running benchmark checks, run when {Consts.slow_tests_env_var}=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get(Consts.slow_tests_env_var):
        return
    skip_slow = pytest.mark.skip(reason=f"set {Consts.slow_tests_env_var}=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="module", autouse=True)
def change_path_to_script_location(request):
    test_dir = os.path.dirname(request.module.__file__)
    os.chdir(test_dir)


@pytest.fixture(scope="session", autouse=True)
def reset_path(request):
    initial_dir = os.getcwd()
    yield
    os.chdir(initial_dir)
