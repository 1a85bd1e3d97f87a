"""Exit criteria. Every check is an exact integer comparison; runtimes use the stated budgets."""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from pacecode import gf3, verifier
from pacecode.design_code import build_design_code, c11_invariance_check, equivalence_map_prop5
from pacecode.perm import M12_GENERATORS, PermGroup, compose, information_set_stabilizer, m12
from pacecode.witt import (
    PRINTED_INTERSECTION_NUMBERS,
    classify_six_sets,
    intersection_table,
    table_from_recurrence,
    witt_design,
)
from pacecode.zmodule import (
    induced_matrix,
    pace_generator_m12,
    projective_point_stabilizer_orders,
    verify_monomial_invariance,
)

criterion = pytest.mark.criterion


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


@criterion(1, "M12 order 95040, sharply 5-transitive; <h1..h4> order 120 fixing {1..6}")
def test_group():
    m12.cache_clear()
    with budget(10):
        g = PermGroup(list(M12_GENERATORS.values()))
        assert g.order == 95040
        assert g.is_sharply_k_transitive(5)
        h = information_set_stabilizer()
        assert h.order == 120
        assert h.set_stabilizer_order(range(1, 7)) == 120


@criterion(2, "132 blocks + 792 information sets, Steiner 5-design, complements are blocks")
def test_design():
    with budget(1):
        blocks, info = classify_six_sets()
    assert len(blocks) == 132 and len(info) == 792
    assert len(blocks) + len(info) == math.comb(12, 6)
    d = witt_design()
    assert d.steiner_violations() == []
    assert all(c in d for c in d.complement.values())


@criterion(3, "intersection table i(a,b): printed values, placement-independent, recurrence oracle")
def test_intersection_table():
    table = intersection_table(witt_design())
    for key, value in PRINTED_INTERSECTION_NUMBERS.items():
        assert table[key] == value
        assert table[key[::-1]] == value
    assert table_from_recurrence({a: table[(a, 0)] for a in range(6)}) == table


@criterion(4, "stabilizers: block 720, information set 120, 2-set 1440, projective point 1440")
def test_stabilizers():
    g = m12()
    d = witt_design()
    for s, order in [(d.blocks[0], 720), ((1, 2, 3, 4, 5, 6), 120), ((1, 2), 1440)]:
        stab = g.set_stabilizer_order(s)
        assert stab == order
        assert stab * len(g.orbit_of_set(s)) == 95040
    pts = projective_point_stabilizer_orders(g)
    assert pts == [1440] * 66
    assert len(pts) * 1440 == 95040


@pytest.mark.parametrize("form", ["m12", "design"])
@criterion(5, "Pace code n=66, k=10, d=36 by full enumeration, self-orthogonal, weights = 0 mod 3")
def test_pace_code(form):
    with budget(1):
        if form == "m12":
            pace_generator_m12.cache_clear()
            matrix = pace_generator_m12().matrix
        else:
            matrix = build_design_code(witt_design(), {12}, {11}).matrix
        code = gf3.LinearCode(matrix)
        dist = code.weight_distribution()
    assert code.n == 66
    assert code.k == 10
    assert sum(dist.values()) == 3**10
    assert min(w for w, c in dist.items() if w and c) == 36
    assert code.is_self_orthogonal()
    assert all(w % 3 == 0 for w, c in dist.items() if c)


@criterion(6, "monomial map equals C_{11},{12} exactly; equal enumerators; all 132 singleton pairs agree")
def test_equivalence():
    with budget(20):
        pg = pace_generator_m12()
        target = build_design_code(witt_design(), {11}, {12}).matrix
        assert np.array_equal(equivalence_map_prop5(pg.matrix, pg.manifest), target)
        a = gf3.LinearCode(pg.matrix).weight_distribution()
        b = gf3.LinearCode(build_design_code(witt_design(), {12}, {11}).matrix).weight_distribution()
        assert a == b
        assert c11_invariance_check(witt_design())


@criterion(7, "nullity sweep: max 30 over 59048 nonempty (U,V); all = 0 mod 3; nullity + weight = 66")
def test_nullity_sweep():
    verifier.nullity_sweep.cache_clear()
    with budget(5):
        sw = verifier.nullity_sweep()
    assert sw.nullities.size == 3**10
    assert sw.nullities[0] == 66
    assert int(sw.nullities[1:].max()) == 30
    assert not np.any(sw.nullities % 3)
    assert np.all(sw.nullities + sw.weights == 66)


@criterion(8, "case analysis: exact k_c maxima within every stated bound")
def test_case_bounds():
    reports = verifier.verify_case_bounds()
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.check}: {r.actual}")
    assert len(reports) == 12
    assert all(r.passed for r in reports)
    for sizes, bounds in verifier.CASE_BOUNDS.items():
        ext = verifier.kc_extrema(sizes)
        assert all(ext[c][1] <= bound for c, bound in bounds.items())


@criterion(9, "lemmas: five triples (15504 families, tight at 4), 20/30 over 462 sets, k2(4,4,3) <= 18")
def test_lemmas():
    assert verifier.families_without_two_point_pair(5) == []
    assert math.comb(20, 5) == 15504
    assert verifier.families_without_two_point_pair(4)
    counts = verifier.lemma_20_30_counts()
    blocks = set(verifier.pace_blocks())
    assert len(counts) == 462
    assert all(n == (20 if U in blocks else 30) for U, n in counts.items())
    k = verifier.k2443_counts()
    assert k.size == 138600
    assert int(k.max()) <= 18


@criterion(10, "monomial invariance under h1..h4, g; induced matrices form a homomorphism")
def test_invariance():
    gens = list(M12_GENERATORS.values())
    assert all(verify_monomial_invariance(p=p) for p in gens)
    for a in gens:
        for b in gens:
            assert np.array_equal(induced_matrix(compose(a, b)), gf3.matmul(induced_matrix(a), induced_matrix(b)))
