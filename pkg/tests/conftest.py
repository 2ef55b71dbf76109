from __future__ import annotations

import random

import pytest

from smallcover.document import FIXTURES, load_fixture

THREE_DIM = ("simplex3", "cube", "prism", "vc2", "vc3", "pentagonal-prism")


@pytest.fixture(scope="session")
def docs():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture
def rng():
    return random.Random(20261016)


def tits_matrix(P, word):
    """Image of a Coxeter word under the Tits representation of ``W_P``.

    With ``B(e_i, e_j) = 0`` for adjacent facets and ``-1`` otherwise, the
    reflections ``x -> x - 2 B(e_i, x) e_i`` generate a faithful integer
    representation of the right-angled Coxeter group, which makes it an
    oracle for the word problem independent of any rewriting.
    """
    m = P.m
    B = [[1 if i == j else (0 if P.adjacent(i, j) else -1) for j in range(m)] for i in range(m)]
    M = [[int(i == j) for j in range(m)] for i in range(m)]
    for s in word:
        # M <- M · S_s, where column j of S_s is e_j - 2 B(s, j) e_s
        for r in range(m):
            row = M[r]
            row_s = row[s]
            for j in range(m):
                if B[s][j]:
                    row[j] -= 2 * B[s][j] * row_s
    return tuple(tuple(r) for r in M)



_criteria: dict[int, list] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rpartition("::")[2]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        number = int(name.split("_")[2])
        _criteria.setdefault(number, []).append((name.split("[")[0], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        results = _criteria[number]
        ok = all(outcome == "passed" for _, outcome in results)
        label = results[0][0].split("_", 3)[3].replace("_", " ")
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {label}")
