import pytest

from app.systems.enums import SystemId
from app.verification.context import CaseContext, case_context
from app.verification.models import RunConfig


@pytest.fixture(scope="session")
def perlick_i_context() -> CaseContext:
    return case_context(SystemId.PERLICK_I, RunConfig())
