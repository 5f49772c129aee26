import random

import pytest

from rcomp import LfIntervalGraph, bwt_naive, rcomp_build, reference_rlbwt, sentinelize

A, B = ord("a") + 1, ord("b") + 1
# Divided BWT of "abbabbabba$": a | bb | b | $ | bbb | aa | a
SAMPLE_DBWT = [(A, 1), (B, 2), (B, 1), (0, 1), (B, 3), (A, 2), (A, 1)]

CORPUS_SIZE = 1000
ALPHABETS = (1, 2, 4, 16, 256)


def show(symbols):
    """Render internal symbols as text with '$' for the sentinel."""
    return "".join("$" if s == 0 else chr(s - 1) for s in symbols)


def sym(text):
    return [0 if ch == "$" else ord(ch) + 1 for ch in text]


def random_corpus(count=CORPUS_SIZE, max_len=512, seed=20240601):
    rng = random.Random(seed)
    corpus = []
    for i in range(count):
        sigma = ALPHABETS[i % len(ALPHABETS)]
        length = rng.randint(1, max_len)
        corpus.append(bytes(rng.randrange(sigma) for _ in range(length)))
    return corpus


def heavy_fixture(alpha):
    """A divided BWT with one long piece holding exactly ``alpha`` in-edges."""
    bwt = bwt_naive(sentinelize(b"ab" * 60))
    for cut in range(1, len(bwt)):
        start = max(range(len(bwt)), key=lambda i: _run_len(bwt, i))
        pieces = [(c, 1) for c in bwt[:start]]
        pieces.append((bwt[start], cut))
        pieces += [(c, 1) for c in bwt[start + cut:]]
        if cut > _run_len(bwt, start):
            break
        g = LfIntervalGraph.from_dbwt(pieces, alpha=alpha)
        long_node = list(g.U)[start]
        if len(g.U.in_edges(long_node)) == alpha:
            return g, long_node
    raise AssertionError("no fixture found")


def _run_len(bwt, i):
    j = i
    while j < len(bwt) and bwt[j] == bwt[i]:
        j += 1
    return j - i


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture(scope="session")
def plain_builds(corpus):
    return [rcomp_build(text) for text in corpus]


@pytest.fixture(scope="session")
def oracle_rlbwts(corpus):
    return [reference_rlbwt(text) for text in corpus]


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
