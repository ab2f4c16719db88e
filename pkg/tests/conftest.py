import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from nichols_bichar.bichar import BraidingSpec  # noqa: E402
from nichols_bichar.free_algebra import FreeElement  # noqa: E402
from nichols_bichar.scalars import Cyclotomic, root_of_unity  # noqa: E402

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

CONDUCTORS = (1, 2, 3, 4, 5, 6, 8, 10, 12, 24)


@st.composite
def cyclotomics(draw, conductors=CONDUCTORS, max_num=6, max_den=4):
    N = draw(st.sampled_from(conductors))
    a = Cyclotomic(0, N)
    for k in range(draw(st.integers(0, 3))):
        e = draw(st.integers(0, N - 1))
        c = draw(st.integers(-max_num, max_num))
        d = draw(st.integers(1, max_den))
        a = a + root_of_unity(N, e) * Cyclotomic(c) / d
    return a


@st.composite
def roots_of_unity(draw, conductors=CONDUCTORS):
    N = draw(st.sampled_from(conductors))
    return root_of_unity(N, draw(st.integers(0, N - 1)))


@st.composite
def braidings(draw, n_max=3, conductors=(2, 3, 4, 6, 8, 12), cap=8):
    n = draw(st.integers(1, n_max))
    N = draw(st.sampled_from(conductors))
    K = [[draw(st.integers(0, N - 1)) for _ in range(n)] for _ in range(n)]
    return BraidingSpec.from_matrix(N, K, cap)


@st.composite
def words_st(draw, n, min_len=0, max_len=4):
    return tuple(draw(st.lists(st.integers(1, n), min_size=min_len, max_size=max_len)))


@st.composite
def elements(draw, spec, min_len=0, max_len=4, max_terms=4):
    out = FreeElement.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        w = draw(words_st(spec.n, min_len, max_len))
        c = root_of_unity(spec.conductor, draw(st.integers(0, spec.conductor - 1))) * draw(st.integers(-2, 2))
        out = out + FreeElement.word(w, c)
    return out


@st.composite
def homogeneous_elements(draw, spec, content=None, max_terms=3):
    """Combination of permutations of one letter multiset."""
    if content is None:
        content = tuple(sorted(draw(words_st(spec.n, 1, 3))))
    out = FreeElement.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        w = tuple(draw(st.permutations(content)))
        c = root_of_unity(spec.conductor, draw(st.integers(0, spec.conductor - 1))) * draw(st.integers(-2, 2))
        out = out + FreeElement.word(w, c)
    return out


def spec_of(N, K, cap=8):
    return BraidingSpec.from_matrix(N, K, cap)


@pytest.fixture
def m2_spec():
    """p_11 = p_22 = -1, p_12 = p_21 = i."""
    return spec_of(8, [[4, 2], [2, 4]])


@pytest.fixture
def m3_spec():
    return spec_of(6, [[3, 1], [1, 3]], 8)


@pytest.fixture
def wild_spec():
    """Connected with p_11 = 1 and p_12 a cube root of unity: infinite dimensional."""
    return spec_of(6, [[0, 2], [0, 3]])


# one summary line per acceptance criterion

_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance" in report.nodeid and name.startswith("test_criterion_"):
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        num = int(name.split("_")[2])
        label = " ".join(name.split("_")[3:])
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {label}")
