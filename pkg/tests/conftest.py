import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose the call-phase outcome to fixtures (the acceptance report lines)
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
