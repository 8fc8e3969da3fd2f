"""Exact asymmetric-index computation by iterative-deepening edge-flip
search with automorphism-orbit pruning.

The togglable universe is the set of all vertex pairs: a pair currently
present is a removal candidate, an absent one an addition candidate, and
the mode masks the universe down to removals or additions only.  Layer k
enumerates one representative per orbit of k-subsets under Aut(G) by
extending the layer-(k-1) representatives and canonicalizing with a
min-image over the group's element closure (a subgroup closure when the
full group is too large to enumerate; coarser orbits only cost time).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .graph import Graph
from .automorphism import (automorphism_group, canonical_form, group_elements,
                           is_asymmetric, subgroup_elements,
                           transposable_clique_lower_bound, MAX_CLOSURE)

MODES = ("mixed", "add-only", "remove-only")
DEFAULT_WITNESS_CAP = 4
THREADS_ENV_VAR = "ASYMINDEX_THREADS"


class NoAsymmetrizationError(Exception):
    """No edit sequence can work: every graph on 2..5 vertices keeps a
    nontrivial automorphism."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(
            f"graphs on {n} vertices cannot be made asymmetric "
            "(possible only for n = 1 or n >= 6)")


class BudgetExceededError(Exception):
    """Search exhausted its layer budget; carries the proven lower bound."""

    def __init__(self, lower_bound: int, stats: "SearchStats",
                 universe_exhausted: bool = False):
        self.lower_bound = lower_bound
        self.stats = stats
        self.universe_exhausted = universe_exhausted
        extra = " (entire universe searched)" if universe_exhausted else ""
        super().__init__(f"no asymmetrization within budget; value > "
                         f"{lower_bound - 1}{extra}")


def _norm_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FlipSet:
    """A set of removed existing edges plus added non-edges."""

    removed: frozenset[tuple[int, int]] = frozenset()
    added: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "removed", frozenset(_norm_pair(*e) for e in self.removed))
        object.__setattr__(self, "added", frozenset(_norm_pair(*e) for e in self.added))
        if self.removed & self.added:
            raise ValueError("removed and added sets overlap")

    @property
    def size(self) -> int:
        return len(self.removed) + len(self.added)

    def inverse(self) -> "FlipSet":
        return FlipSet(removed=self.added, added=self.removed)

    def sort_key(self):
        return (tuple(sorted(self.removed)), tuple(sorted(self.added)))

    def as_dict(self) -> dict:
        return {"removed": [list(e) for e in sorted(self.removed)],
                "added": [list(e) for e in sorted(self.added)]}

    def __repr__(self) -> str:
        rem = ",".join(f"{u}-{v}" for u, v in sorted(self.removed)) or "-"
        add = ",".join(f"{u}-{v}" for u, v in sorted(self.added)) or "-"
        return f"FlipSet(removed=[{rem}] added=[{add}])"


@dataclass
class SearchStats:
    nodes: int = 0        # candidate flip sets generated (before dedup)
    tested: int = 0       # asymmetry oracle calls
    dedup_hits: int = 0   # candidates skipped as orbit duplicates

    def as_dict(self) -> dict:
        return {"nodes": self.nodes, "tested": self.tested,
                "dedup_hits": self.dedup_hits}


@dataclass
class AiResult:
    """Computed index with witnesses and search statistics."""

    value: int
    witnesses: list[FlipSet] = field(default_factory=list)
    mode: str = "mixed"
    stats: SearchStats = field(default_factory=SearchStats)


def apply_flips(g: Graph, flips: FlipSet) -> Graph:
    """Delete ``flips.removed`` and insert ``flips.added``."""
    rows = list(g.rows)
    n = g.n
    for u, v in flips.removed:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"flip pair ({u},{v}) out of range")
        if not (rows[u] >> v) & 1:
            raise ValueError(f"cannot remove absent edge ({u},{v})")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    for u, v in flips.added:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"flip pair ({u},{v}) out of range")
        if u == v:
            raise ValueError(f"cannot add self-loop at {u}")
        if (rows[u] >> v) & 1:
            raise ValueError(f"cannot add existing edge ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, _trusted=True)


# -- orbit machinery ----------------------------------------------------


class _FlipOrbits:
    """Canonicalizes pair-index subsets under a permutation group."""

    def __init__(self, g: Graph):
        n = g.n
        self.n = n
        self.pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.index = {p: i for i, p in enumerate(self.pairs)}
        report = automorphism_group(g)
        self.group_order = report.order
        elems = group_elements(report.generators, n, MAX_CLOSURE)
        if elems is None:
            elems = subgroup_elements(report.generators, n, MAX_CLOSURE)
        perms = np.array(elems, dtype=np.int32)           # (W, n)
        pair_id = np.zeros((n, n), dtype=np.int32)
        for i, (u, v) in enumerate(self.pairs):
            pair_id[u, v] = pair_id[v, u] = i
        us = np.array([u for u, _ in self.pairs])
        vs = np.array([v for _, v in self.pairs])
        pu, pv = perms[:, us], perms[:, vs]
        self.table = pair_id[np.minimum(pu, pv), np.maximum(pu, pv)]  # (W, P)
        self.trivial = self.table.shape[0] == 1

    def canonical(self, subset: tuple[int, ...]) -> tuple[int, ...]:
        if self.trivial:
            return tuple(sorted(subset))
        images = np.sort(self.table[:, subset], axis=1)
        order = np.lexsort(images.T[::-1])
        return tuple(int(x) for x in images[order[0]])

    def canonical_many(self, cands: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
        """Min-image forms of equal-size subsets, chunked for memory.

        Each subset image is packed into one integer so the canonical
        choice is a plain numeric minimum over the group axis: a 62-bit
        universe bitmask when the pair count allows it, otherwise the
        sorted index tuple packed into bit fields.
        """
        if not cands:
            return set()
        if self.trivial:
            return {tuple(sorted(c)) for c in cands}
        k = len(cands[0])
        npairs = len(self.pairs)
        nelems = self.table.shape[0]
        arr = np.array(sorted(set(cands)), dtype=np.intp)     # (C, k)
        chunk = max(1, 8_000_000 // (nelems * k))
        out: set[tuple[int, ...]] = set()
        if npairs <= 62:
            pow2 = np.left_shift(np.ones(npairs, dtype=np.int64),
                                 np.arange(npairs, dtype=np.int64))
            for start in range(0, len(arr), chunk):
                sub = arr[start:start + chunk]
                packed = pow2[self.table[:, sub[:, 0]]]       # (W, c)
                for i in range(1, k):
                    packed |= pow2[self.table[:, sub[:, i]]]
                for key in packed.min(axis=0):
                    key = int(key)
                    out.add(tuple(i for i in range(npairs) if (key >> i) & 1))
            return out
        width = max(1, (npairs - 1).bit_length())
        if k * width > 62:
            return {self.canonical(c) for c in cands}
        shifts = np.arange(k - 1, -1, -1, dtype=np.int64) * width
        mask = (1 << width) - 1
        for start in range(0, len(arr), chunk):
            sub = arr[start:start + chunk]                    # (c, k)
            imgs = np.sort(self.table[:, sub], axis=-1)       # (W, c, k)
            packed = imgs[..., 0].astype(np.int64)
            for i in range(1, k):
                packed = (packed << width) | imgs[..., i]
            for key in packed.min(axis=0):
                key = int(key)
                out.add(tuple(int((key >> int(sh)) & mask) for sh in shifts))
        return out


def _universe_indices(g: Graph, mode: str, orbits: _FlipOrbits) -> list[int]:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    out = []
    for i, (u, v) in enumerate(orbits.pairs):
        present = bool((g.rows[u] >> v) & 1)
        if mode == "mixed" or (mode == "remove-only" and present) \
                or (mode == "add-only" and not present):
            out.append(i)
    return out


def _flipset_from_indices(g: Graph, subset, pairs) -> FlipSet:
    removed, added = [], []
    for i in subset:
        u, v = pairs[i]
        (removed if (g.rows[u] >> v) & 1 else added).append((u, v))
    return FlipSet(removed=frozenset(removed), added=frozenset(added))


def flip_orbit_layers(g: Graph, max_k: int, mode: str = "mixed"):
    """Yield (k, representatives) for k = 1..max_k.

    Representatives are canonical min-image forms, one per orbit of
    k-subsets of the mode's universe under Aut(g); sorted, so iteration
    order is deterministic.  Also yields the running stats object first.
    """
    orbits = _FlipOrbits(g)
    universe = _universe_indices(g, mode, orbits)
    stats = SearchStats()
    yield orbits, universe, stats
    reps: list[tuple[int, ...]] = [()]
    for k in range(1, max_k + 1):
        cands: list[tuple[int, ...]] = []
        for base in reps:
            inbase = set(base)
            for e in universe:
                if e not in inbase:
                    stats.nodes += 1
                    cands.append(tuple(sorted(inbase | {e})))
        seen = orbits.canonical_many(cands)
        stats.dedup_hits += len(cands) - len(seen)
        reps = sorted(seen)
        yield k, reps


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV_VAR, "1")))
    except ValueError:
        return 1


def asymmetric_index(g: Graph, mode: str = "mixed", max_k: int | None = None,
                     witness_cap: int = DEFAULT_WITNESS_CAP) -> AiResult:
    """Minimum number of edge flips making ``g`` asymmetric.

    Iterative deepening over flip-set size; within a layer only one
    representative per Aut(g)-orbit is tested (equivalent flip sets give
    isomorphic results).  Raises NoAsymmetrizationError for 2 <= n <= 5
    and BudgetExceededError (with the proven lower bound) when the layer
    budget runs out.
    """
    n = g.n
    if 2 <= n <= 5:
        raise NoAsymmetrizationError(n)
    stats = SearchStats()
    stats.tested += 1
    if is_asymmetric(g):
        return AiResult(0, [FlipSet()], mode, stats)
    if max_k is None:
        max_k = 8 if n <= 12 else 3
    gen = flip_orbit_layers(g, max_k, mode)
    orbits, universe, layer_stats = next(gen)
    threads = _threads()
    hit_layer: list[FlipSet] = []
    last_k = 0
    for k, reps in gen:
        last_k = k
        hits = _evaluate_layer(g, reps, orbits.pairs, stats, witness_cap, threads)
        if hits:
            hit_layer = hits
            break
    stats.nodes += layer_stats.nodes
    stats.dedup_hits += layer_stats.dedup_hits
    if not hit_layer:
        exhausted = last_k >= len(universe)
        raise BudgetExceededError(min(max_k, len(universe)) + 1, stats,
                                  universe_exhausted=exhausted)
    witnesses = sorted(hit_layer, key=FlipSet.sort_key)[:witness_cap]
    return AiResult(witnesses[0].size, witnesses, mode, stats)


def _evaluate_layer(g, reps, pairs, stats: SearchStats, witness_cap: int,
                    threads: int) -> list[FlipSet]:
    flip_sets = [_flipset_from_indices(g, r, pairs) for r in reps]

    def test(fs: FlipSet) -> bool:
        return is_asymmetric(apply_flips(g, fs))

    hits: list[FlipSet] = []
    if threads > 1 and len(flip_sets) > 1:
        chunk = max(16, len(flip_sets) // (threads * 4))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for start in range(0, len(flip_sets), chunk):
                batch = flip_sets[start:start + chunk]
                for fs, ok in zip(batch, pool.map(test, batch)):
                    stats.tested += 1
                    if ok:
                        hits.append(fs)
                if len(hits) >= witness_cap:
                    break
    else:
        for fs in flip_sets:
            stats.tested += 1
            if test(fs):
                hits.append(fs)
                if len(hits) >= witness_cap:
                    break
    return hits


def lower_bound(g: Graph) -> int:
    """Transposable-clique bound floor((t-1)/2); informational."""
    return transposable_clique_lower_bound(g)


def count_nonisomorphic_asymmetrizations(g: Graph, r: int, s: int) -> int:
    """Isomorphism classes of asymmetric graphs reachable by removing
    exactly r edges and adding exactly s, deduplicated by canonical form
    of the result (not by flip-set orbit)."""
    edges = list(g.edges())
    non_edges = list(g.non_edges())
    if r > len(edges):
        raise ValueError(f"cannot remove {r} of {len(edges)} edges")
    if s > len(non_edges):
        raise ValueError(f"cannot add {s} of {len(non_edges)} non-edges")
    seen: set[bytes] = set()
    for rem in combinations(edges, r):
        for add in combinations(non_edges, s):
            h = apply_flips(g, FlipSet(removed=frozenset(rem), added=frozenset(add)))
            if is_asymmetric(h):
                seen.add(canonical_form(h))
    return len(seen)
