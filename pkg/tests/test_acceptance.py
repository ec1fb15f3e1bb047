"""Acceptance checks 1-8.  Each prints a single PASS/FAIL line with its timing."""

import time
from contextlib import contextmanager

import numpy as np
import pytest

from pgro.basis import build_context, evaluate_word, oracle_nontips, radical_layers
from pgro.corpus import corpus_group, load_corpus
from pgro.experiment import compare_orderings, run_experiment
from pgro.fplinalg import span_dimension, unit_vector
from pgro.groups import subgroup_closure
from pgro.jennings import jennings_pc_generators, jennings_series, layer_polynomial
from pgro.orderings import Ordering, subwords_proper
from pgro.pipeline import present, run

from conftest import table_element

CORPUS = load_corpus()


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and elapsed > limit:
            ok = False
            title += f" (over the {limit:g} s limit)"
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {title} "
                  f"[{elapsed:.2f} s]")
    assert elapsed <= limit, f"took {elapsed:.2f} s, limit {limit} s"


def test_criterion_1_c4_jennings(capsys, c4):
    with criterion(capsys, 1, "C4 Jennings basis is exact", 1.0):
        g = c4.gens[0]
        jg = jennings_pc_generators(c4, None)
        assert jg.elements == [g, c4.power(g, 2)] or jg.elements == [c4.inv(g), c4.power(g, 2)]
        pres = present(c4, "jennings", [g, c4.power(g, 2)], [1, 2])
        assert set(pres.basis.tips) == {(0, 0), (0, 1), (1, 1)}
        assert pres.spec.sorted(pres.tree.words) == [(1, 0), (1,), (0,), ()]
        assert pres.basis.nu((0, 0)) == {(1,): 1}
        assert pres.basis.nu((0, 1)) == {(1, 0): 1}
        assert pres.basis.nu((1, 1)) == {}


def test_criterion_2_jennings_tips(capsys):
    with criterion(capsys, 2, "Jennings tips are a_i^p and a_j a_k (j < k)", 10.0):
        for e in CORPUS:
            G = e.group()
            n, p = G.n, G.p
            expected = {(i,) * p for i in range(n)} | \
                {(j, k) for j in range(n) for k in range(j + 1, n)}
            for seed in range(5):
                pres = run(G, "jennings", seed=seed)
                assert len(pres.basis) == n * (n + 1) // 2, e.label
                assert set(pres.basis.tips) == expected, e.label


def test_criterion_3_invariants(capsys):
    with criterion(capsys, 3, "nontip count, subword closure, rank, basis vanishes", 30.0):
        for e in CORPUS:
            G = e.group()
            for ordering in Ordering:
                pres = run(G, ordering, seed=0)
                words = set(pres.tree.words)
                assert len(words) == G.order
                assert all(s in words for w in words for s in subwords_proper(w))
                assert span_dimension(pres.tree.images(pres.ctx), G.p) == G.order
                for i in range(len(pres.basis)):
                    total = sum((c * evaluate_word(pres.ctx, w)
                                 for w, c in pres.basis.element(i).items()),
                                np.zeros(G.order, dtype=np.int64))
                    assert not (total % G.p).any(), (e.label, ordering)


def test_criterion_4_rll_profile(capsys):
    with criterion(capsys, 4, "RLL length profile equals the layer polynomial", 30.0):
        for e in CORPUS:
            G = e.group()
            d = jennings_series(G).layer_counts(G.p)
            poly = layer_polynomial(d, G.p)
            for seed in range(3):
                pres = run(G, "rll", seed=seed)
                assert pres.tree.length_profile() == poly, e.label
                assert radical_layers(pres.ctx) == poly


def test_criterion_5_oracle(capsys):
    with criterion(capsys, 5, "LL and RLL nontips match brute force for |G| <= 16", 60.0):
        for e in CORPUS:
            if e.order > 16:
                continue
            G = e.group()
            for ordering in ("ll", "rll"):
                for selection in ("smallest", "arbitrary"):
                    for seed in range(3):
                        pres = run(G, ordering, selection, seed=seed)
                        assert pres.spec.sorted(pres.tree.words) == \
                            oracle_nontips(pres.ctx, pres.spec), (e.label, ordering)
        C4 = corpus_group("C4")
        g = C4.gens[0]
        for ordering in ("ll", "rll"):
            pres = present(C4, ordering, [g, C4.power(g, 3)])
            assert pres.spec.sorted(pres.tree.words) == oracle_nontips(pres.ctx, pres.spec)


def test_criterion_6_g32ex(capsys):
    with criterion(capsys, 6, "G32ex Jennings series and basis size", 10.0):
        G = corpus_group("G32ex")
        s = jennings_series(G)
        ab, ac, phi2 = (table_element(G, t) for t in (3, 5, 16))
        assert s[2].order == 8 and s[2] == subgroup_closure(G, [ab, ac, phi2])
        assert s[3].order == 2 and s[3] == subgroup_closure(G, [ac])
        for seed in range(5):
            jg = jennings_pc_generators(G, seed, series=s)
            assert jg.dims == [1, 1, 2, 2, 3]
            assert len(run(G, "jennings", seed=seed).basis) == 15


def test_criterion_7_ll_vs_rll(capsys):
    with criterion(capsys, 7, "d = eLL - eRLL >= 0 on the order-32 groups", 300.0):
        groups = [e for e in CORPUS if e.order == 32]
        assert groups
        reports = []
        for e in groups:
            G = e.group()
            for ordering in ("ll", "rll"):
                for selection in ("smallest", "arbitrary"):
                    reports.append(run_experiment(G, e.label, ordering, selection, 20, seed=0))
        comps = compare_orderings(reports, {e.label: e.order for e in groups})
        assert len(comps) == len(groups)
        bad = [(c.group, c.d) for c in comps if c.d < 0]
        assert not bad, bad


def test_criterion_8_dimension_subgroups(capsys):
    with criterion(capsys, 8, "F_r = {g : g - 1 in J^r} for |G| <= 64", 60.0):
        for e in CORPUS:
            if e.order > 64:
                continue
            G = e.group()
            ctx = build_context(G, G.gens)
            s = jennings_series(G)
            one = unit_vector(G.order, 0)
            for r in range(1, ctx.nilpotency + 1):
                members = [g for g in range(G.order)
                           if ctx.radical_contains(r, unit_vector(G.order, g) - one)]
                assert sorted(members) == sorted(int(x) for x in s[r].elements), (e.label, r)
