import itertools

import numpy as np
import pytest

from pgro.corpus import corpus_group, load_corpus
from pgro.groups import close_group

SMALL = [e.label for e in load_corpus() if e.order <= 16]
ALL = [e.label for e in load_corpus()]


@pytest.fixture(params=ALL)
def corpus(request):
    return request.param, corpus_group(request.param)


@pytest.fixture(params=SMALL)
def small(request):
    return request.param, corpus_group(request.param)


@pytest.fixture
def c4():
    return close_group([[2, 3, 4, 1]], one_based=True)


@pytest.fixture
def v4():
    return close_group([[2, 1, 4, 3], [3, 4, 1, 2]], one_based=True)


def table_element(G, t):
    """Element of a group loaded from a table file that corresponds to table entry t (0-based)."""
    return int(np.flatnonzero(G.perms[:, 0] == t)[0])


def brute_subgroups(G, max_gens=3):
    """Every subgroup generated by at most ``max_gens`` elements, as frozensets."""
    t = G.table
    found = set()
    for k in range(max_gens + 1):
        for gens in itertools.combinations(range(G.order), k):
            S = {0}
            frontier = [0]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = int(t[x, g])
                        if y not in S:
                            S.add(y)
                            nxt.append(y)
                frontier = nxt
            found.add(frozenset(S))
    return found
