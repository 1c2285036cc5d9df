"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Everything here is exact (tolerance zero).  The default corpus fixture is
shared with the rest of the suite, so analyses are computed once per session.
"""

import random
from contextlib import contextmanager

from agmod import aggraph, theorems
from agmod.finmod import Module
from agmod.finring import Ring
from agmod.localization import check_product_decomposition
from agmod.theorems import FAIL, PASS, get_analysis, instance_id, run_suite

from helpers import encset, zmod
from oracles import (
    brute_chromatic_number,
    brute_clique_number,
    brute_ideal_product,
    is_squarefree,
    omega,
)


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number} ({description}): FAIL")
        raise
    print(f"[acceptance] criterion {number} ({description}): PASS")


def test_criterion_1_trees_are_stars_or_p4(corpus_analyses):
    with criterion(1, "tree graphs are stars or P4; FxS gives exactly the P4 vertices"):
        trees = 0
        for a in corpus_analyses:
            if not a.inv.is_tree:
                continue
            trees += 1
            result = theorems.run_predicate("thm_2_7", a.module)
            assert result.status == PASS, (instance_id(a.module), result.witness)
        assert trees > 0

        fxs_instances = [a for a in corpus_analyses if a.fxs is not None]
        assert fxs_instances
        for a in fxs_instances:
            assert a.inv.is_path4, instance_id(a.module)
            ok, detail = theorems._p4_fxs_structure(a, a.fxs)
            assert ok and a.ag.n == 4, (instance_id(a.module), detail)

        # the two pinned shapes: Z2 x Z4 over Z2 x Z4 and Z12 over Z12
        m24 = Module(Ring([2, 4]), [(2, 0), (4, 1)])
        assert {v.elements for v in aggraph.build_AG(m24).vertices} == {
            frozenset({(0, b) for b in range(4)}),
            frozenset({(0, 0), (1, 0)}),
            frozenset({(0, 0), (0, 2)}),
            frozenset({(a, b) for a in range(2) for b in (0, 2)}),
        }
        m12 = zmod(12)
        assert {v.elements for v in aggraph.build_AG(m12).vertices} == {
            encset(m12, [0, 3, 6, 9]),
            encset(m12, [0, 4, 8]),
            encset(m12, [0, 6]),
            encset(m12, [0, 2, 4, 6, 8, 10]),
        }


def test_criterion_2_clique_bound_and_witnesses(corpus_analyses):
    with criterion(2, "clique >= |Min| for cyclic instances; explicit witnesses verify"):
        applicable = 0
        for a in corpus_analyses:
            if a.cyclic_gen is None:
                continue
            witnesses, _ = a.module.min_prime_clique_witness()  # self-verifying
            assert len(witnesses) == len(a.mins)
            if a.simple:
                continue  # empty graph: one minimal prime but no vertices
            applicable += 1
            assert a.inv.clique_number >= len(a.mins), instance_id(a.module)
            if len(a.mins) >= 3:
                assert a.inv.girth == 3, instance_id(a.module)
        assert applicable > 0

        w30, _ = zmod(30).min_prime_clique_witness()
        assert {w.elements for w in w30} == {
            encset(zmod(30), range(0, 30, 15)),
            encset(zmod(30), range(0, 30, 10)),
            encset(zmod(30), range(0, 30, 6)),
        }
        m60 = zmod(60)
        w60, _ = m60.min_prime_clique_witness()
        assert {w.elements for w in w60} == {
            encset(m60, range(0, 60, 15)),
            encset(m60, range(0, 60, 20)),
            encset(m60, range(0, 60, 12)),
        }
        zero = m60.zero_submodule()
        for i in range(len(w60)):
            for j in range(i + 1, len(w60)):
                assert m60.product(w60[i], w60[j]) == zero


def test_criterion_3_squarefree_sweep():
    with criterion(3, "squarefree n <= 210: chi = clique = number of prime factors"):
        checked = {}
        for n in range(2, 211):
            if not is_squarefree(n) or omega(n) < 2:
                continue
            inv = get_analysis(zmod(n)).inv
            assert inv.chromatic_number == inv.clique_number == omega(n), n
            checked[n] = inv.clique_number
        assert checked[6] == 2 and checked[30] == 3
        assert len(checked) > 60
        # prime n: the graph is empty, chi = clique = 0 by convention
        for n in (2, 3, 211 - 12):  # 199 is prime
            inv = get_analysis(zmod(n)).inv
            assert inv.clique_number == inv.chromatic_number == 0


def test_criterion_4_clique_two_iff_chromatic_two(corpus_analyses):
    with criterion(4, "clique = 2 iff chromatic = 2 over the full default corpus"):
        for a in corpus_analyses:
            cl, ch = a.inv.clique_number, a.inv.chromatic_number
            assert (cl == 2) == (ch == 2), instance_id(a.module)
        report = run_suite([a.module for a in corpus_analyses], ["thm_2_21"])
        assert not report.violations
        assert report.counts["thm_2_21"][PASS] == len(corpus_analyses)


def test_criterion_5_localization_monotone(corpus_analyses):
    with criterion(5, "localizing at the minimal-prime complement never raises cl/chi"):
        applicable = 0
        for a in corpus_analyses:
            s, avoids_zdiv, loc, img = a.loc_min
            if not avoids_zdiv:
                continue
            applicable += 1
            assert img.inv.clique_number <= a.inv.clique_number
            assert img.inv.chromatic_number <= a.inv.chromatic_number
            if a.semiprime:
                assert img.inv.clique_number == a.inv.clique_number
                assert img.inv.chromatic_number == a.inv.chromatic_number
        assert applicable > 0
        report = run_suite(
            [a.module for a in corpus_analyses], ["thm_2_13", "cor_2_15"]
        )
        assert not report.violations


def test_criterion_6_product_decomposition(corpus_analyses):
    with criterion(6, "cyclic instances split into orthogonal idempotent components"):
        cyclic = 0
        for a in corpus_analyses:
            if a.cyclic_gen is None:
                continue
            cyclic += 1
            check_product_decomposition(a.module)  # raises on any failed check
        assert cyclic > 0
        rep = check_product_decomposition(zmod(12))
        assert set(rep.component_idempotents) == {(9,), (4,)}
        assert (9 + 4) % 12 == 1
        assert rep.idem == (1,)


def test_criterion_7_structural_oracles(corpus_analyses):
    with criterion(7, "exact solvers and divisor arithmetic match brute force"):
        pool = []
        for a in corpus_analyses:
            for g in (a.ag, a.ag_star):
                if g.n <= 12:
                    pool.append(g)
        assert len(pool) >= 200
        rng = random.Random(20260810)
        for g in rng.sample(pool, 200):
            cl, _ = aggraph.max_clique(g.adj, g.n)
            assert cl == brute_clique_number(g.adj, g.n)
            assert aggraph.chromatic_number(g.adj, g.n) == brute_chromatic_number(
                g.adj, g.n
            )

        rings = [Ring([n]) for n in range(2, 201)]
        rings += [Ring([4, 9]), Ring([2, 3, 5]), Ring([8, 5, 3])]
        rings += sorted(
            {a.module.ring for a in corpus_analyses if len(a.module.ring.moduli) > 1},
            key=lambda r: r.moduli,
        )
        for ring in rings:
            assert ring.cardinality <= 200
            ideals = ring.ideals()
            for i in ideals:
                for j in ideals:
                    assert i.product(j).element_set == brute_ideal_product(ring, i, j)


def test_criterion_8_connectivity_and_diameter(corpus_analyses):
    with criterion(8, "every graph with >= 2 vertices is connected with diameter <= 3"):
        checked = 0
        for a in corpus_analyses:
            if a.ag.n < 2:
                continue
            checked += 1
            assert a.inv.connected, instance_id(a.module)
            assert a.inv.diameter is not None and a.inv.diameter <= 3, instance_id(
                a.module
            )
        assert checked > 0


_CRITERION_9_IDS = (
    "lemma_2_4",
    "prop_2_5",
    "thm_2_22",
    "cor_2_23",
    "prop_2_9a",
    "prop_2_9b",
    "thm_2_11",
    "thm_2_12",
)


def test_criterion_9_predicate_battery(corpus_analyses):
    with criterion(9, "structural predicates: no failures, every hypothesis exercised"):
        report = run_suite([a.module for a in corpus_analyses], _CRITERION_9_IDS)
        counts = report.counts
        for tid in _CRITERION_9_IDS:
            assert counts[tid][FAIL] == 0, (tid, counts[tid])
            assert counts[tid][PASS] > 0, (tid, counts[tid])
        assert not report.skips
