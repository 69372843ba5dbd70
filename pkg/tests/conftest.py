import pytest

from hopfsub import zoo
from hopfsub.tee import build_tee

# acceptance lines collected by test_acceptance.py, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def hopf():
    return {"L": zoo.hopf_L(), "E": zoo.hopf_E(), "G": zoo.hopf_G(), "Pos": zoo.hopf_Poset()}


@pytest.fixture(scope="session")
def plus():
    return {"L+": zoo.comonoid_L_plus(), "E+": zoo.comonoid_E_plus(),
            "G+": zoo.comonoid_G_plus(), "Pos+": zoo.comonoid_Poset_plus()}


@pytest.fixture(scope="session")
def tees(hopf, plus):
    return {
        "T[L](G+)": build_tee(hopf["L"], plus["G+"]),
        "T[G](L+)": build_tee(hopf["G"], plus["L+"]),
        "T[E](E+)": build_tee(hopf["E"], plus["E+"]),
        "T[Pos](E+)": build_tee(hopf["Pos"], plus["E+"]),
    }
