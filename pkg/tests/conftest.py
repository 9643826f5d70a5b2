from itertools import combinations

import pytest

from circcap import Code, CyclicCodeSpec, PowerParams, appendix_code, cyclic_code


def brute_tor(a, b, n):
    return min((a - b) % n, (b - a) % n)


def brute_dist(u, v, n):
    return max(brute_tor(a, b, n) for a, b in zip(u, v))


def brute_independent(words, n, k):
    return all(brute_dist(u, v, n) >= k for u, v in combinations(words, 2))


def brute_alpha(num_vertices, edges):
    """Largest independent set by trying all 2^V subsets."""
    adj = [0] * num_vertices
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = 0
    for mask in range(1 << num_vertices):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(not (adj[i] & mask) for i in range(num_vertices) if mask >> i & 1):
            best = size
    return best


@pytest.fixture(scope="session")
def c7_5():
    return PowerParams(2, 7, 5)


@pytest.fixture(scope="session")
def appendix():
    return appendix_code()


@pytest.fixture(scope="session")
def prop1_code():
    return cyclic_code(CyclicCodeSpec(382, 5, 7))


@pytest.fixture
def c5_square_code():
    return Code(5, 2, [(0, 0), (1, 2), (2, 4), (3, 1), (4, 3)])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
