import pytest

from config import config

# Wall-clock budget per Gröbner computation, in milliseconds
FAST_BUDGET_MS = 120_000
SLOW_BUDGET_MS = 900_000


@pytest.fixture(autouse=True)
def groebner_budget(request, monkeypatch):
    """Bounds every Gröbner computation so an overrun fails with ResourceCapExceeded instead of hanging."""
    slow = request.node.get_closest_marker("slow") is not None
    monkeypatch.setattr(config, "GB_BUDGET_MS", SLOW_BUDGET_MS if slow else FAST_BUDGET_MS)
