"""Executable claim catalog: every numbered statement the toolkit tracks
is encoded as a check over concrete instances and scored confirmed,
refuted, budget-exceeded, or not-applicable.

Claims are treated as hypotheses, never as fixtures: the catalog exists
to evaluate them against the search and automorphism engines, and any
refutation must carry machine-checkable evidence (an explicit
automorphism, or an explicit smaller edit witness).  Known textual
defects ship in a default allowlist so the ``verify`` command can keep a
clean exit code while still printing them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, disjoint_union, join, to_graph6
from .automorphism import (automorphism_group, cycles_str,
                           find_nontrivial_automorphism, is_asymmetric,
                           is_automorphism, transposable_clique_lower_bound)
from .enumeration import (asymmetric_forest_edges, asymmetric_graphs,
                          asymmetric_trees, nonisomorphic_graphs)
from .families import (FamilySpec, cycle, cycle_with_pendant_paths, generate,
                       path, pendant_extension, star, torus, wheel, witness)
from .search import (AiResult, BudgetExceededError, FlipSet,
                     NoAsymmetrizationError, apply_flips, asymmetric_index,
                     count_nonisomorphic_asymmetrizations, flip_orbit_layers,
                     _flipset_from_indices)

CONFIRMED = "confirmed"
REFUTED = "refuted"
BUDGET_EXCEEDED = "budget-exceeded"
NOT_APPLICABLE = "not-applicable"

#: Known text defects tolerated by default; ``verify`` prints each use.
DEFAULT_ALLOWLIST = (
    "Thm2.6-printed-lower",    # printed K_n lower bound exceeds the upper bound
    "Rem2.1-remark-variant",   # remark's chord-count summand disagrees with enumeration
    "Sec2.2-count-text",       # in-text chord-count summand undercounts for n >= 7
    "Thm2.8-boundary",         # r = s = 2 grid cannot be asymmetrized at all
    "Thm2.8-corner-witness-r2",  # corner removal keeps a row swap when r = 2
    "Thm2.9-witness-cube",     # stated two-removal witness fails on P_2 x C_4
    "Sec2.2-cycle-aut",        # cycle automorphism group is dihedral, not symmetric
    "Lem1.4-overreach",        # transposable-set bound exceeds ai on cycles (C_8)
    "Thm2.10-nonsquare",       # two flips already asymmetrize C_r x C_s for r != s
)


@dataclass
class ClaimReport:
    """Outcome of one claim instance."""

    claim_id: str
    params: dict
    expected: str
    computed: object
    status: str
    evidence: dict = field(default_factory=dict)
    allowlist_key: str | None = None

    def to_dict(self) -> dict:
        return {"claim": self.claim_id, "params": self.params,
                "expected": self.expected, "computed": self.computed,
                "status": self.status, "evidence": self.evidence,
                "allowlist_key": self.allowlist_key}


# -- closed-form expressions ---------------------------------------------


def partition_count(i: int) -> int:
    """Partitions of i into two distinct parts, both at least 3."""
    if i < 6:
        raise ValueError("partition count defined for i >= 6")
    return (i - 5) // 2


def cycle_augmentation_formula(n: int, variant: str = "text") -> int:
    """Claimed number of asymmetrizing chord pairs on an n-cycle.

    ``text`` uses the summand floor((n-i+3)/2); ``remark`` uses the
    printed floor((n+i-3)/2).
    """
    if n < 6:
        raise ValueError("cycle augmentation formula defined for n >= 6")
    if variant == "text":
        return sum(((i - 5) // 2) * ((n - i + 3) // 2) for i in range(7, n + 2))
    if variant == "remark":
        return sum(((i - 5) // 2) * ((n + i - 3) // 2) for i in range(7, n + 2))
    raise ValueError(f"unknown variant {variant!r}; expected 'text' or 'remark'")


def kn_bound_formulas(n: int) -> dict:
    """The three printed complete-graph bound expressions, verbatim."""
    if n < 8:
        raise ValueError("complete-graph bound formulas stated for n >= 8")
    return {"upper": n - 2,
            "lower_printed": n - (n - 1) // 7 + 4,
            "lower_asymptotic": 6 * (n // 7)}


def general_upper_bound(n: int) -> int:
    """n(n-1)/2 - (n-2), the universal index upper bound."""
    return n * (n - 1) // 2 - (n - 2)


# -- evidence helpers ------------------------------------------------------


def _ai_evidence(res: AiResult, cap: int = 2) -> dict:
    return {"value": res.value,
            "witnesses": [w.as_dict() for w in res.witnesses[:cap]],
            "stats": res.stats.as_dict()}


def _aut_evidence(g: Graph) -> dict:
    sigma = find_nontrivial_automorphism(g)
    return {"automorphism": cycles_str(sigma) if sigma else None}


def _exact_ai(g: Graph, budget: int | None = None) -> AiResult:
    return asymmetric_index(g, max_k=budget)


def _norm_range(value, default: tuple[int, int]) -> list[int]:
    if value is None:
        lo, hi = default
        return list(range(lo, hi + 1))
    if isinstance(value, int):
        return [value]
    if isinstance(value, tuple) and len(value) == 2:
        return list(range(value[0], value[1] + 1))
    return list(value)


def _out_of_range(claim_id: str, params: dict, expected: str, minimum: int) -> ClaimReport:
    return ClaimReport(claim_id, params, expected, None, NOT_APPLICABLE,
                       {"note": f"instance below the claim's domain "
                                f"(needs at least {minimum})"})


# -- claim handlers --------------------------------------------------------
# Each handler returns a list of ClaimReport rows; parameters select the
# instances and default to desk-scale ranges.


def _prop_1_1(n: int | None = None, **_) -> list[ClaimReport]:
    """Aut(G) equals Aut(complement(G)), checked on all classes of order n."""
    rows = []
    for g in nonisomorphic_graphs(6 if n is None else n):
        gc = g.complement()
        rep, repc = automorphism_group(g), automorphism_group(gc)
        cross_ok = all(is_automorphism(gc, p) for p in rep.generators) and \
            all(is_automorphism(g, p) for p in repc.generators)
        same = rep.order == repc.order and rep.orbits == repc.orbits and cross_ok
        rows.append(ClaimReport(
            "Prop1.1", {"graph6": to_graph6(g).decode()},
            "Aut(G) = Aut(complement(G))",
            {"order": rep.order, "complement_order": repc.order},
            CONFIRMED if same else REFUTED,
            {} if same else {"generators_cross_check": cross_ok}))
    return rows


def _prop_1_2(n: int | None = None, budget: int | None = None, **_) -> list[ClaimReport]:
    """ai(G) = ai(complement(G)); witnesses map by swapping removed/added."""
    rows = []
    for g in nonisomorphic_graphs(6 if n is None else n):
        gc = g.complement()
        res, resc = _exact_ai(g, budget), _exact_ai(gc, budget)
        mapped_ok = all(is_asymmetric(apply_flips(gc, w.inverse()))
                        for w in res.witnesses)
        ok = res.value == resc.value and mapped_ok
        rows.append(ClaimReport(
            "Prop1.2", {"graph6": to_graph6(g).decode()},
            "ai(G) = ai(complement(G))",
            {"ai": res.value, "complement_ai": resc.value,
             "witness_map_ok": mapped_ok},
            CONFIRMED if ok else REFUTED,
            {} if ok else {"witness": _ai_evidence(res)}))
    return rows


def _pair_preservation(claim_id: str, combine, text: str, n: int | None = None,
                       **_) -> list[ClaimReport]:
    rows = []
    asym = asymmetric_graphs(6 if n is None else n)
    for i, g in enumerate(asym):
        for j, h in enumerate(asym):
            if i == j:
                continue
            combined = combine(g, h)
            ok = is_asymmetric(combined)
            rows.append(ClaimReport(
                claim_id, {"g": to_graph6(g).decode(), "h": to_graph6(h).decode()},
                text, {"asymmetric": ok},
                CONFIRMED if ok else REFUTED,
                {} if ok else _aut_evidence(combined)))
    return rows


def _prop_1_3(**kw) -> list[ClaimReport]:
    return _pair_preservation("Prop1.3", join,
                              "join of non-isomorphic asymmetric graphs is asymmetric", **kw)


def _prop_1_4(**kw) -> list[ClaimReport]:
    return _pair_preservation("Prop1.4", disjoint_union,
                              "union of non-isomorphic asymmetric graphs is asymmetric", **kw)


def _lem_1_1(n=None, **_) -> list[ClaimReport]:
    """Single-vertex pendant extension preserves asymmetry."""
    rows = []
    for order in _norm_range(n, (6, 7)):
        if order < 6:
            rows.append(_out_of_range(
                "Lem1.1", {"n": order},
                "pendant extension of an asymmetric graph is asymmetric", 6))
            continue
        for g in asymmetric_graphs(order):
            extended = pendant_extension(g)
            ok = is_asymmetric(extended)
            rows.append(ClaimReport(
                "Lem1.1", {"n": order, "graph6": to_graph6(g).decode()},
                "pendant extension of an asymmetric graph is asymmetric",
                {"asymmetric": ok},
                CONFIRMED if ok else REFUTED,
                {} if ok else _aut_evidence(extended)))
    return rows


def _lem_1_4(budget: int | None = None, **_) -> list[ClaimReport]:
    """floor((t-1)/2) lower bound from a pairwise-transposable t-set."""
    instances = [("K_1,5", star(6), None), ("K_6", Graph.complete(6), None),
                 ("C_8", cycle(8), "Lem1.4-overreach")]
    rows = []
    for label, g, key in instances:
        bound = transposable_clique_lower_bound(g)
        res = _exact_ai(g, budget)
        ok = bound <= res.value
        rows.append(ClaimReport(
            "Lem1.4", {"graph": label},
            "ai(G) >= floor((t-1)/2) for a pairwise-transposable t-set",
            {"bound": bound, "ai": res.value},
            CONFIRMED if ok else REFUTED,
            {} if ok else {"witness": _ai_evidence(res),
                           "note": "bound exceeds the exact index"},
            allowlist_key=None if ok else key))
    return rows


def _lem_2_1(i=None, **_) -> list[ClaimReport]:
    """Closed form for two-part partitions with distinct parts >= 3."""
    rows = []
    for value in _norm_range(i, (6, 60)):
        if value < 6:
            rows.append(_out_of_range("Lem2.1", {"i": value},
                                      "floor((i-5)/2) distinct partitions", 6))
            continue
        oracle = sum(1 for a in range(3, value)
                     for b in range(a + 1, value) if a + b == value)
        formula = partition_count(value)
        ok = oracle == formula
        rows.append(ClaimReport(
            "Lem2.1", {"i": value}, "floor((i-5)/2) distinct partitions",
            {"formula": formula, "enumeration": oracle},
            CONFIRMED if ok else REFUTED))
    return rows


def _thm_1_2(budget: int | None = None, **_) -> list[ClaimReport]:
    """0 <= ai(G) <= n(n-1)/2 - (n-2) on a spread of named graphs."""
    instances = [("P_8", path(8)), ("C_9", cycle(9)), ("W_8", wheel(8)),
                 ("K_6", Graph.complete(6)), ("K_1,6", star(7)),
                 ("empty_6", Graph.empty(6))]
    rows = []
    for label, g in instances:
        res = _exact_ai(g, budget)
        cap = general_upper_bound(g.n)
        ok = 0 <= res.value <= cap
        rows.append(ClaimReport(
            "Thm1.2", {"graph": label},
            "0 <= ai(G) <= n(n-1)/2 - (n-2)",
            {"ai": res.value, "upper": cap},
            CONFIRMED if ok else REFUTED,
            {} if ok else {"witness": _ai_evidence(res)}))
    return rows


def _witness_row(claim_id: str, name: str, args: tuple, expected: str,
                 allowlist_key: str | None = None) -> ClaimReport:
    spec, flips = witness(name, *args)
    edited = apply_flips(generate(spec), flips)
    ok = is_asymmetric(edited)
    return ClaimReport(
        claim_id, {"witness": name, "args": list(args)}, expected,
        {"asymmetric": ok, "size": flips.size},
        CONFIRMED if ok else REFUTED,
        {"flips": flips.as_dict(), **({} if ok else _aut_evidence(edited))},
        allowlist_key=None if ok else allowlist_key)


def _value_row(claim_id: str, params: dict, g: Graph, expected_value: int,
               expected_text: str, budget: int | None = None,
               allowlist_key: str | None = None,
               boundary_key: str | None = None) -> ClaimReport:
    try:
        res = _exact_ai(g, budget)
    except NoAsymmetrizationError:
        return ClaimReport(claim_id, params, expected_text, "no-asymmetrization",
                           REFUTED, {"note": "graphs on 2..5 vertices cannot be "
                                             "made asymmetric"},
                           allowlist_key=boundary_key)
    except BudgetExceededError as exc:
        return ClaimReport(claim_id, params, expected_text,
                           f"> {exc.lower_bound - 1}", BUDGET_EXCEEDED,
                           {"proven_lower_bound": exc.lower_bound})
    ok = res.value == expected_value
    return ClaimReport(claim_id, params, expected_text, res.value,
                       CONFIRMED if ok else REFUTED, _ai_evidence(res),
                       allowlist_key=None if ok else allowlist_key)


def _thm_2_1(n=None, budget=None, **_) -> list[ClaimReport]:
    rows = []
    for order in _norm_range(n, (6, 12)):
        if order < 6:
            rows.append(_out_of_range("Thm2.1", {"n": order}, "ai(P_n) = 1", 6))
            continue
        rows.append(_value_row("Thm2.1", {"n": order}, path(order), 1,
                               "ai(P_n) = 1", budget))
        rows.append(_witness_row("Thm2.1-witness", "path-add-chord", (order,),
                                 "adding the chord (1,3) asymmetrizes P_n"))
    return rows


def _thm_2_2(n=None, budget=None, **_) -> list[ClaimReport]:
    rows = []
    for order in _norm_range(n, (6, 12)):
        if order < 6:
            rows.append(_out_of_range("Thm2.2", {"n": order}, "ai(C_n) = 2", 6))
            continue
        rows.append(_value_row("Thm2.2", {"n": order}, cycle(order), 2,
                               "ai(C_n) = 2", budget))
        rows.append(_witness_row("Thm2.2-witness", "cycle-remove-add", (order,),
                                 "remove one cycle edge, add the path chord"))
        try:
            asymmetric_index(cycle(order), mode="remove-only", max_k=order)
            status, computed = REFUTED, "found pure-removal asymmetrization"
        except BudgetExceededError as exc:
            status = CONFIRMED if exc.universe_exhausted else BUDGET_EXCEEDED
            computed = "impossible (universe exhausted)" if exc.universe_exhausted \
                else f"> {exc.lower_bound - 1}"
        rows.append(ClaimReport(
            "Thm2.2-remove-only", {"n": order},
            "no pure edge removal asymmetrizes a cycle", computed, status))
    return rows


def _sec_2_2_cycle_aut(n=None, **_) -> list[ClaimReport]:
    rows = []
    for order in _norm_range(n, (6, 10)):
        rep = automorphism_group(cycle(order))
        claimed = 1
        for i in range(2, order + 1):
            claimed *= i
        ok = rep.order == claimed
        rows.append(ClaimReport(
            "Sec2.2-cycle-aut", {"n": order},
            "Aut(C_n) is the full symmetric group S_n",
            {"computed_order": rep.order, "claimed_order": claimed},
            CONFIRMED if ok else REFUTED,
            {"note": "computed group is dihedral of order 2n"},
            allowlist_key=None if ok else "Sec2.2-cycle-aut"))
    return rows


def _chord_count_rows(claim_id: str, variant: str, key: str, n, **_) -> list[ClaimReport]:
    rows = []
    for order in _norm_range(n, (6, 12)):
        if order < 6:
            rows.append(_out_of_range(claim_id, {"n": order},
                                      "chord-count formula matches enumeration", 6))
            continue
        oracle = count_nonisomorphic_asymmetrizations(cycle(order), 0, 2)
        value = cycle_augmentation_formula(order, variant)
        ok = oracle == value
        rows.append(ClaimReport(
            claim_id, {"n": order},
            f"{variant} chord-count formula matches enumeration",
            {"formula": value, "enumeration": oracle},
            CONFIRMED if ok else REFUTED,
            {} if ok else {"note": "formula disagrees with brute-force count"},
            allowlist_key=None if ok else key))
    return rows


def _rem_2_1(n=None, **_) -> list[ClaimReport]:
    return _chord_count_rows("Rem2.1", "remark", "Rem2.1-remark-variant", n)


def _sec_2_2_count(n=None, **_) -> list[ClaimReport]:
    return _chord_count_rows("Sec2.2-count", "text", "Sec2.2-count-text", n)


def _thm_2_3(n=None, budget=None, **_) -> list[ClaimReport]:
    rows = []
    for order in _norm_range(n, (6, 10)):
        if order < 6:
            rows.append(_out_of_range("Thm2.3", {"n": order}, "ai(W_n) = 2", 6))
            continue
        rows.append(_value_row("Thm2.3", {"n": order, "convention": "hub degree n-1"},
                               wheel(order), 2, "ai(W_n) = 2", budget))
        rows.append(_witness_row("Thm2.3-witness", "wheel-two-removals", (order,),
                                 "removing a rim edge then an adjacent spoke"))
    for order in _norm_range(None if n is None else n, (6, 9)):
        if order < 6:
            rows.append(_out_of_range("Thm2.3-alt", {"n": order},
                                      "ai = 2 under the (n+1)-vertex reading", 6))
            continue
        rows.append(_value_row("Thm2.3-alt", {"n": order, "convention": "hub degree n"},
                               wheel(order + 1), 2,
                               "ai = 2 under the (n+1)-vertex reading", budget))
    return rows


def _thm_2_4(n: int = 4, budget=None, **_) -> list[ClaimReport]:
    rows = []
    if isinstance(n, tuple):
        n = n[0]
    if n < 4:
        return [_out_of_range("Thm2.4", {"n": n},
                              "ai(C_{n^2 +/- 1}(1, n)) = 2", 4)]
    for sign in ("+", "-"):
        m = n * n + 1 if sign == "+" else n * n - 1
        spec = FamilySpec("circulant", (m, (1, n)))
        rows.append(_value_row("Thm2.4", {"n": n, "sign": sign},
                               generate(spec), 2, "ai(C_{n^2 +/- 1}(1, n)) = 2",
                               budget if budget is not None else 3))
        for name in ("circulant-remove2", "circulant-add2", "circulant-mixed"):
            rows.append(_witness_row("Thm2.4-witness", name, (n, sign),
                                     f"{name} asymmetrizes the circulant"))
    return rows


def _thm_2_5(n=None, budget=None, **_) -> list[ClaimReport]:
    rows = []
    for order in _norm_range(n, (6, 9)):
        if order < 6:
            rows.append(_out_of_range(
                "Thm2.5", {"n": order},
                "floor((n-1)/2) <= ai(K_{1,n-1}) <= n-1", 6))
            continue
        lower = (order - 1) // 2
        upper = order - 1
        res = _exact_ai(star(order), budget)
        ok = lower <= res.value <= upper
        rows.append(ClaimReport(
            "Thm2.5", {"n": order},
            "floor((n-1)/2) <= ai(K_{1,n-1}) <= n-1",
            {"lower": lower, "ai": res.value, "upper": upper},
            CONFIRMED if ok else REFUTED, _ai_evidence(res, cap=1)))
    return rows


def _thm_2_6(budget=None, **_) -> list[ClaimReport]:
    rows = []
    for order in (6, 7):
        rows.append(_value_row("Thm2.6-exact", {"n": order},
                               Graph.complete(order), 6, "ai(K_n) = 6", budget))
    formulas = kn_bound_formulas(8)
    consistent = formulas["lower_printed"] <= formulas["upper"]
    rows.append(ClaimReport(
        "Thm2.6-printed-lower", {"n": 8},
        "printed lower bound n - floor((n-1)/7) + 4 <= upper bound n - 2",
        formulas, CONFIRMED if consistent else REFUTED,
        {"note": "printed lower bound exceeds the upper bound"},
        allowlist_key=None if consistent else "Thm2.6-printed-lower"))
    res8 = _exact_ai(Graph.complete(8), budget if budget is not None else 6)
    asym_ok = formulas["lower_asymptotic"] <= res8.value <= formulas["upper"]
    rows.append(ClaimReport(
        "Thm2.6-asymptotic", {"n": 8},
        "6*floor(n/7) <= ai(K_n) <= n - 2",
        {"lower": formulas["lower_asymptotic"], "ai": res8.value,
         "upper": formulas["upper"]},
        CONFIRMED if asym_ok else REFUTED, _ai_evidence(res8, cap=1)))
    for order in (8, 9, 10):
        removed = asymmetric_forest_edges(order)
        edited = apply_flips(Graph.complete(order),
                             FlipSet(removed=frozenset(removed)))
        ok = is_asymmetric(edited)
        rows.append(ClaimReport(
            "Thm2.6-upper", {"n": order},
            "removing an asymmetric forest leaves K_n asymmetric (ai <= n-2)",
            {"edits": len(removed), "asymmetric": ok},
            CONFIRMED if ok else REFUTED,
            {} if ok else _aut_evidence(edited)))
    trees = asymmetric_trees(9)
    edges = []
    base = 1
    for t in trees:
        edges += [(base + u, base + v) for (u, v) in t.edges()]
        base += 9
    edited = apply_flips(Graph.complete(28), FlipSet(removed=frozenset(edges)))
    ok = is_asymmetric(edited)
    rows.append(ClaimReport(
        "Sec2.5-k28", {"n": 28},
        "K_28 minus three distinct asymmetric 9-trees is asymmetric (ai <= 25)",
        {"edits": len(edges), "asymmetric": ok},
        CONFIRMED if ok else REFUTED, {} if ok else _aut_evidence(edited)))
    return rows


def _thm_2_8(budget=None, **_) -> list[ClaimReport]:
    rows = []
    for (r, s) in ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)):
        rows.append(_value_row(
            "Thm2.8", {"r": r, "s": s}, generate(FamilySpec("grid", (r, s))),
            1, "ai(P_r x P_s) = 1", budget,
            boundary_key="Thm2.8-boundary" if (r, s) == (2, 2) else None))
        if (r, s) != (2, 2):
            rows.append(_witness_row(
                "Thm2.8-witness", "grid-corner", (r, s),
                "removing the corner edge (0,0)-(1,0) asymmetrizes the grid",
                allowlist_key="Thm2.8-corner-witness-r2" if r == 2 else None))
    return rows


def _thm_2_9(budget=None, **_) -> list[ClaimReport]:
    rows = []
    for (r, s) in ((2, 3), (2, 4)):
        rows.append(_value_row("Thm2.9", {"r": r, "s": s},
                               generate(FamilySpec("pxc", (r, s))), 2,
                               "ai(P_r x C_s) = 2", budget))
    for (r, s) in ((2, 3), (2, 4), (3, 5)):
        rows.append(_witness_row(
            "Thm2.9-witness", "pxc-two-removals", (r, s),
            "removing two edges at the corner vertex asymmetrizes P_r x C_s",
            allowlist_key="Thm2.9-witness-cube" if (r, s) == (2, 4) else None))
    return rows


def _torus_scan(r: int, s: int, full: bool) -> ClaimReport:
    """Torus instance check.

    Full mode runs the exhaustive 1-flip scan, the orbit-deduped 2-flip
    scan, and a 3-removal witness search, which pins the exact value
    whenever the first non-empty layer is at most 3.  The cheap mode only
    tests the shared-vertex cross-direction 2-removal witness, enough to
    beat the claimed value on non-square tori.
    """
    g = torus(r, s)
    evidence: dict = {}
    exact = None
    if full:
        one_hits = []
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
        for (u, v) in pairs:
            edited = g.remove_edge(u, v) if g.has_edge(u, v) else g.add_edge(u, v)
            if is_asymmetric(edited):
                one_hits.append((u, v))
        evidence["one_flip_candidates"] = len(pairs)
        evidence["one_flip_hits"] = len(one_hits)
        gen = flip_orbit_layers(g, 2, "mixed")
        orbits, _, _ = next(gen)
        next(gen)
        _, reps2 = next(gen)
        two_hits = []
        for rep in reps2:
            fs = _flipset_from_indices(g, rep, orbits.pairs)
            if is_asymmetric(apply_flips(g, fs)):
                two_hits.append(fs)
        evidence["two_flip_orbit_reps"] = len(reps2)
        evidence["two_flip_hits"] = len(two_hits)
        if two_hits:
            evidence["two_flip_witness"] = two_hits[0].as_dict()
            removals = [fs for fs in two_hits if not fs.added]
            if removals:
                evidence["two_removal_witness"] = removals[0].as_dict()
        gen = flip_orbit_layers(g, 3, "remove-only")
        orbits_r, _, _ = next(gen)
        three_witness = None
        for k, reps in gen:
            if k < 3:
                continue
            for rep in reps:
                fs = _flipset_from_indices(g, rep, orbits_r.pairs)
                if is_asymmetric(apply_flips(g, fs)):
                    three_witness = fs
                    break
            break
        evidence["three_removal_witness"] = (three_witness.as_dict()
                                             if three_witness else None)
        if one_hits:
            exact = 1
        elif two_hits:
            exact = 2
        elif three_witness is not None:
            exact = 3
        computed = exact if exact is not None else ">= 3"
    else:
        fs = FlipSet(removed=frozenset([(0, 1), (0, s)]))
        edited = apply_flips(g, fs)
        ok = is_asymmetric(edited)
        evidence["cross_direction_two_removal"] = fs.as_dict()
        evidence["asymmetric"] = ok
        exact = None
        computed = "<= 2" if ok else "witness failed"
        if ok:
            exact = 2  # upper bound only, but already below the claim
    in_range = r >= 10 and s >= 10
    if not in_range:
        status = NOT_APPLICABLE
        evidence["note"] = "exploratory: below the claimed range r, s >= 10"
        key = None
    elif exact is not None and exact < 3:
        status = REFUTED
        evidence["note"] = "explicit witness beats the claimed value 3"
        key = "Thm2.10-nonsquare"
    elif exact == 3:
        status, key = CONFIRMED, None
    else:
        status, key = BUDGET_EXCEEDED, None
    return ClaimReport("Thm2.10", {"r": r, "s": s}, "ai(C_r x C_s) = 3",
                       computed, status, evidence, allowlist_key=key)


def _thm_2_10(full: bool = True, **_) -> list[ClaimReport]:
    return [_torus_scan(6, 7, full=full), _torus_scan(10, 11, full=False)]


def _thm_3_1(budget=None, **_) -> list[ClaimReport]:
    rows = []
    instances = [("P6+C6", [path(6), cycle(6)]), ("P6+P7", [path(6), path(7)])]
    for label, comps in instances:
        g = comps[0]
        for c in comps[1:]:
            g = disjoint_union(g, c)
        parts = []
        for c in comps:
            parts.append(_exact_ai(c, budget).value)
        res = _exact_ai(g, budget)
        lower, upper = min(parts), sum(parts)
        ok = lower <= res.value <= upper
        rows.append(ClaimReport(
            "Thm3.1", {"components": label},
            "min_i ai(G_i) <= ai(G) <= sum_i ai(G_i)",
            {"component_ai": parts, "ai": res.value},
            CONFIRMED if ok else REFUTED, _ai_evidence(res, cap=1)))
    rows.append(ClaimReport(
        "Thm3.1", {"components": "P6+P6"},
        "min_i ai(G_i) <= ai(G) <= sum_i ai(G_i)", None, NOT_APPLICABLE,
        {"note": "isomorphic components; the one-line proof does not cover them"}))
    return rows


def _ex_3_1(l=None, **_) -> list[ClaimReport]:
    rows = []
    for value in _norm_range(l, (3, 4)):
        if value < 3:
            rows.append(_out_of_range(
                "Ex3.1", {"l": value},
                "cycle with pendant paths is asymmetric", 3))
            continue
        g = cycle_with_pendant_paths(value)
        ok = is_asymmetric(g)
        rows.append(ClaimReport(
            "Ex3.1", {"l": value},
            "joining each pendant path to its own cycle vertex gives an "
            "asymmetric graph (ai <= l)",
            {"vertices": g.n, "edges": g.edge_count, "asymmetric": ok},
            CONFIRMED if ok else REFUTED, {} if ok else _aut_evidence(g)))
    return rows


def _thm_3_2(instances=((8, 1), (8, 2), (9, 3)), **_) -> list[ClaimReport]:
    rows = []
    for (s, t) in instances:
        spec, flips = witness("split-construction", s, t)
        edited = apply_flips(generate(spec), flips)
        ok = is_asymmetric(edited) and flips.size == s - 2 + t - 1
        rows.append(ClaimReport(
            "Thm3.2", {"s": s, "t": t},
            "ai(K_s + t*K_1) <= s - 2 + t - 1",
            {"edits": flips.size, "asymmetric": is_asymmetric(edited)},
            CONFIRMED if ok else REFUTED,
            {"flips": flips.as_dict(),
             **({} if ok else _aut_evidence(edited))}))
    return rows


# -- catalog ----------------------------------------------------------------


_HANDLERS: dict[str, Callable[..., list[ClaimReport]]] = {
    "Prop1.1": _prop_1_1,
    "Prop1.2": _prop_1_2,
    "Prop1.3": _prop_1_3,
    "Prop1.4": _prop_1_4,
    "Lem1.1": _lem_1_1,
    "Lem1.4": _lem_1_4,
    "Lem2.1": _lem_2_1,
    "Thm1.2": _thm_1_2,
    "Thm2.1": _thm_2_1,
    "Thm2.2": _thm_2_2,
    "Sec2.2-cycle-aut": _sec_2_2_cycle_aut,
    "Rem2.1": _rem_2_1,
    "Sec2.2-count": _sec_2_2_count,
    "Thm2.3": _thm_2_3,
    "Thm2.4": _thm_2_4,
    "Thm2.5": _thm_2_5,
    "Thm2.6": _thm_2_6,
    "Thm2.8": _thm_2_8,
    "Thm2.9": _thm_2_9,
    "Thm2.10": _thm_2_10,
    "Thm3.1": _thm_3_1,
    "Ex3.1": _ex_3_1,
    "Thm3.2": _thm_3_2,
}

#: Granular row ids produced by each catalog entry (for id resolution).
_PART_IDS = {
    "Thm2.1": ("Thm2.1", "Thm2.1-witness"),
    "Thm2.2": ("Thm2.2", "Thm2.2-witness", "Thm2.2-remove-only"),
    "Thm2.3": ("Thm2.3", "Thm2.3-witness", "Thm2.3-alt"),
    "Thm2.4": ("Thm2.4", "Thm2.4-witness"),
    "Thm2.6": ("Thm2.6-exact", "Thm2.6-printed-lower", "Thm2.6-asymptotic",
               "Thm2.6-upper", "Sec2.5-k28"),
    "Thm2.8": ("Thm2.8", "Thm2.8-witness"),
    "Thm2.9": ("Thm2.9", "Thm2.9-witness"),
}

_ALIASES = {"Thm2.7": "Thm1.2"}

CLAIM_IDS = tuple(_HANDLERS)


def _resolve(claim_id: str) -> tuple[str, str | None]:
    """Return (handler id, row filter id or None)."""
    if claim_id in _ALIASES:
        return _ALIASES[claim_id], None
    if claim_id in _HANDLERS:
        return claim_id, None
    for handler_id, parts in _PART_IDS.items():
        if claim_id in parts:
            return handler_id, claim_id
    raise ValueError(f"unknown claim {claim_id!r}")


def verify(claim_id: str, budget: int | None = None, **params) -> list[ClaimReport]:
    """Evaluate one catalog claim; one report per instance.

    ``claim_id`` may be a catalog entry (``Thm2.2``) or a granular row id
    (``Thm2.6-printed-lower``); extra keyword parameters narrow ranges.
    """
    handler_id, row_filter = _resolve(claim_id)
    rows = _HANDLERS[handler_id](budget=budget, **params)
    if row_filter is not None:
        rows = [r for r in rows if r.claim_id == row_filter]
    return _sorted_rows(rows)


def _param_key(value) -> tuple:
    if isinstance(value, bool):
        return (2, str(value))
    if isinstance(value, int):
        return (0, value)
    return (1, str(value))


def _sorted_rows(rows: list[ClaimReport]) -> list[ClaimReport]:
    def key(r: ClaimReport):
        return (r.claim_id,
                tuple((k, _param_key(v)) for k, v in sorted(r.params.items())))
    return sorted(rows, key=key)


def verify_suite(budget: int | None = None, claims=None) -> list[ClaimReport]:
    """Run the whole catalog (or a subset) at default desk-scale ranges.

    Appends one sweep row checking the universal upper bound against
    every index value computed by the suite itself.
    """
    rows: list[ClaimReport] = []
    for claim_id in (claims or CLAIM_IDS):
        handler_id, _ = _resolve(claim_id)
        rows.extend(_HANDLERS[handler_id](budget=budget))
    checked = 0
    violations = []
    for row in rows:
        value, n = _extract_ai(row)
        if value is None:
            continue
        checked += 1
        if not 0 <= value <= general_upper_bound(n):
            violations.append(row.claim_id)
    rows.append(ClaimReport(
        "Thm1.2-sweep", {"values_checked": checked},
        "every index computed by the suite obeys the universal bounds",
        {"violations": violations}, CONFIRMED if not violations else REFUTED))
    return _sorted_rows(rows)


def _extract_ai(row: ClaimReport) -> tuple[int | None, int]:
    evid = row.evidence if isinstance(row.evidence, dict) else {}
    value = evid.get("value")
    if value is None and isinstance(row.computed, dict):
        value = row.computed.get("ai")
    if not isinstance(value, int):
        return None, 0
    n = _instance_order(row)
    return (value, n) if n else (None, 0)


def _instance_order(row: ClaimReport) -> int:
    params = row.params
    if "graph6" in params:
        from .graph import from_graph6
        return from_graph6(params["graph6"]).n
    if "n" in params and isinstance(params["n"], int):
        claim = row.claim_id
        n = params["n"]
        if claim.startswith("Thm2.3") and params.get("convention") == "hub degree n":
            return n + 1
        return n
    if "r" in params and "s" in params:
        return params["r"] * params["s"]
    if "graph" in params or "components" in params:
        sizes = {"P_8": 8, "C_9": 9, "W_8": 8, "K_6": 6, "K_1,6": 7,
                 "empty_6": 6, "K_1,5": 6, "C_8": 8, "P6+C6": 12, "P6+P7": 13}
        label = params.get("graph", params.get("components"))
        return sizes.get(label, 0)
    return 0
