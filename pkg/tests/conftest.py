import random

import pytest
from hypothesis import strategies as st

from nilgt import AlgebraElement, TriMatrix

ENTRY_VALUES = (-2, -1, 0, 1, 2)

ACCEPTANCE_LINES = []


def random_trimatrix(rng, n, values=ENTRY_VALUES):
    return TriMatrix(tuple(tuple(rng.choice(values) if j < k else 0 for j in range(n)) for k in range(n)))


def random_element(rng, t, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randrange(1 << t.n)] = rng.randint(-3, 3)
    return AlgebraElement(t, terms)


@st.composite
def trimatrices(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    rows = [[draw(st.sampled_from(ENTRY_VALUES)) if j < k else 0 for j in range(n)] for k in range(n)]
    return TriMatrix(tuple(tuple(r) for r in rows))


@st.composite
def elements(draw, t, max_terms=4):
    terms = draw(
        st.dictionaries(
            st.integers(0, (1 << t.n) - 1),
            st.fractions(min_value=-3, max_value=3, max_denominator=4),
            max_size=max_terms,
        )
    )
    return AlgebraElement(t, terms)


@st.composite
def type_a_words(draw, min_m=2, max_m=7, max_len=8):
    m = draw(st.integers(min_m, max_m))
    u = draw(st.lists(st.integers(0, m - 1), max_size=max_len))
    return m, tuple(u)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
