"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's refinement machinery:
isomorphism classes come from marking permutation orbits over all labeled
graphs, and automorphisms are counted by looping over every permutation.
That keeps the expected values independent of the code paths they check.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from asymindex.graph import Graph
from asymindex.enumeration import all_pairs, graph_from_mask


def perm_edge_action(n: int) -> np.ndarray:
    """(n!, P) table: row g maps pair index i to the index of its image."""
    pairs = all_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    rows = []
    for perm in itertools.permutations(range(n)):
        rows.append([index[tuple(sorted((perm[u], perm[v])))] for (u, v) in pairs])
    return np.array(rows, dtype=np.int64)


def labeled_orbit_classes(n: int):
    """Representative masks and orbit sizes via exhaustive orbit marking.

    Scans every labeled graph on n vertices in mask order; each unseen
    mask starts a new class and its whole permutation orbit is marked.
    The orbit size also gives |Aut| = n! / orbit.
    """
    table = perm_edge_action(n)
    npairs = table.shape[1]
    pow2 = np.left_shift(np.ones(npairs, dtype=np.int64),
                         np.arange(npairs, dtype=np.int64))
    seen = np.zeros(1 << npairs, dtype=bool)
    reps = []
    for mask in range(1 << npairs):
        if seen[mask]:
            continue
        bits = np.array([(mask >> i) & 1 for i in range(npairs)], dtype=np.int64)
        images = (bits[table] * pow2).sum(axis=1)
        orbit = np.unique(images)
        seen[orbit] = True
        reps.append((mask, len(orbit)))
    return reps


def brute_automorphism_count(g: Graph) -> int:
    count = 0
    n = g.n
    rows = g.rows
    for perm in itertools.permutations(range(n)):
        ok = True
        for u in range(n):
            pu = perm[u]
            row = rows[u]
            while row:
                b = row & -row
                v = b.bit_length() - 1
                row ^= b
                if not (rows[pu] >> perm[v]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def brute_is_asymmetric(g: Graph) -> bool:
    return brute_automorphism_count(g) == 1


@pytest.fixture(scope="session")
def orbit_classes6():
    """All 156 class representatives on 6 vertices with orbit sizes,
    derived purely from the S_6 action on labeled graphs."""
    return labeled_orbit_classes(6)


@pytest.fixture(scope="session")
def classes6(orbit_classes6):
    pairs = all_pairs(6)
    return [graph_from_mask(6, mask, pairs) for mask, _ in orbit_classes6]
