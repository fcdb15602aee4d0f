import random

from pdef import (
    abelian_invariants,
    low_index_normal,
    low_index_subgroups,
    parse_word,
    reidemeister_schreier,
    schreier_transversal,
    subgroup_presentation,
    tietze_simplify,
    todd_coxeter,
    trace,
    word_power,
)
from oracles import random_spanning_transversal


def test_dinf_transversal(dinf):
    T = todd_coxeter(dinf, [parse_word("x1*x2", dinf.generator_names)])
    reps = schreier_transversal(T)
    assert [r.letters for r in reps] == [(), (1,)]


def test_transversal_is_prefix_closed_and_correct(finite_corpus):
    for P in finite_corpus:
        for rec in low_index_subgroups(P, 4):
            reps = schreier_transversal(rec.table)
            words = {r.letters for r in reps}
            for r in reps:
                for cut in range(len(r.letters)):
                    assert r.letters[:cut] in words
            for i, r in enumerate(reps, start=1):
                assert trace(rec.table, 1, r) == i


def test_s3_trivial_subgroup_transversal(s3_pres):
    T = todd_coxeter(s3_pres, [])
    reps = schreier_transversal(T)
    assert len(reps) == 6
    assert reps[0].letters == ()


def test_dinf_rewriting(dinf):
    T = todd_coxeter(dinf, [parse_word("x1*x2", dinf.generator_names)])
    H = reidemeister_schreier(dinf, T)
    assert H.n_generators == 3 and len(H.relators) == 4
    S = tietze_simplify(H)
    assert S.n_generators == 1 and S.relators == ()


def test_triangle_power_subgroup_rewriting(triangle_power_pres):
    P = triangle_power_pres
    ranks = []
    for rec in low_index_normal(P, 3):
        if rec.index != 3:
            continue
        H = reidemeister_schreier(P, rec.table)
        assert H.n_generators == 7  # N(n-1)+1
        assert len(H.relators) == 18  # N*m
        ranks.append(abelian_invariants(H).free_rank)
    assert 4 in ranks  # some index-3 subgroup abelianizes to Z^4
    assert all(0 <= r <= 4 for r in ranks)


def test_rank4_subgroup_matches_direct_presentation(triangle_power_pres, rank4_pres):
    want = abelian_invariants(rank4_pres)
    assert want.free_rank == 4 and want.torsion == ()
    found = []
    for rec in low_index_normal(triangle_power_pres, 3):
        if rec.index != 3:
            continue
        inv = abelian_invariants(subgroup_presentation(triangle_power_pres, rec))
        if inv == want:
            found.append(rec)
    assert found


def test_index_one_record(triangle_power_pres):
    rec = low_index_subgroups(triangle_power_pres, 1)[0]
    H = reidemeister_schreier(triangle_power_pres, rec.table)
    assert H.n_generators == 3 and len(H.relators) == 6
    assert abelian_invariants(H) == abelian_invariants(triangle_power_pres)


def test_counts_over_corpus(finite_corpus):
    for P in finite_corpus:
        n, m = P.n_generators, len(P.relators)
        for rec in low_index_subgroups(P, 6):
            H = reidemeister_schreier(P, rec.table)
            N = rec.index
            assert H.n_generators == N * (n - 1) + 1
            assert len(H.relators) == N * m


def test_invariants_independent_of_transversal(finite_corpus):
    rng = random.Random(31)
    for P in finite_corpus[:5]:
        for rec in low_index_subgroups(P, 4):
            base = abelian_invariants(reidemeister_schreier(P, rec.table))
            for _ in range(2):
                reps = random_spanning_transversal(rng, rec.table)
                alt = reidemeister_schreier(P, rec.table, transversal=reps)
                assert abelian_invariants(alt) == base


def test_dinf_translation_family_rank_one(dinf):
    # the subgroup generated by (x1 x2)^k has index 2k and abelianizes to Z
    t = parse_word("x1*x2", dinf.generator_names)
    for k in (1, 2, 3):
        T = todd_coxeter(dinf, [word_power(t, k)])
        assert T.n_cosets == 2 * k
        H = reidemeister_schreier(dinf, T)
        inv = abelian_invariants(H)
        assert inv.free_rank == 1 and inv.torsion == ()
