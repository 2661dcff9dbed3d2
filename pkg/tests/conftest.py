import random

import pytest
from hypothesis import strategies as st

from scg.words import CompressedWord, cyclic_normalize

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


syllable = st.tuples(st.sampled_from("ab"), st.integers(-6, 6).filter(bool))
words = st.lists(syllable, max_size=8).map(CompressedWord)
big_words = st.lists(
    st.tuples(st.sampled_from("ab"),
              st.one_of(st.integers(-6, 6), st.integers(-(2**80), 2**80)).filter(bool)),
    max_size=8,
).map(CompressedWord)


def random_word(rng, max_letters, alphabet="ab"):
    letters = [(rng.choice(alphabet), rng.choice((1, -1))) for _ in range(rng.randint(0, max_letters))]
    return CompressedWord(letters)


def random_cyclic(rng, max_letters):
    while True:
        cw = cyclic_normalize(random_word(rng, max_letters))
        if cw.syllables:
            return cw


@pytest.fixture
def rng():
    return random.Random(20261019)
