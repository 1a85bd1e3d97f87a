"""
Exhaustive checks of the combinatorial lemmas and the [66,10,36] theorem.

Throughout, the block family is the 66 blocks of S(5,6,12) avoiding the
point 12, and codewords of the Pace code are written sum_{i in U} r_i -
sum_{j in V} r_j for disjoint U, V in {1..10}. The nullity of (U, V) is the
number of zero coordinates of that codeword.

Every check produces a :class:`VerificationReport`; suites return lists of
them in a fixed order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from pacecode import design_code as dc
from pacecode import gf3, perm, witt, zmodule
from pacecode.errors import PreconditionError

LEFT_OUT = 12  # columns are the blocks avoiding this point
DELETED = 11  # row removed from the design-code generator
NULLITY_BOUND = 30
PACE_N, PACE_K, PACE_D = 66, 10, 36

# (u, v, w) -> {c: claimed upper bound on k_c}
CASE_BOUNDS: dict[tuple[int, int, int], dict[int, int]] = {
    (5, 5, 1): {1: 10, 0: 20},
    (5, 4, 2): {2: 12, 1: 12, 0: 8},
    (5, 3, 3): {2: 18, 1: 9, 0: 5},
    (4, 4, 3): {0: 6, 1: 6, 2: 18},
}


@dataclass(frozen=True)
class VerificationReport:
    check: str
    expected: str
    actual: str
    passed: bool

    def to_dict(self) -> dict:
        return {"check": self.check, "expected": self.expected, "actual": self.actual, "pass": self.passed}


def _eq(check: str, expected, actual) -> VerificationReport:
    return VerificationReport(check, str(expected), str(actual), expected == actual)


def _bool(check: str, actual: bool, detail: str = "") -> VerificationReport:
    return VerificationReport(check, "true", f"{str(bool(actual)).lower()}{detail}", bool(actual))


# --- the block family and its incidence ---------------------------------------


@lru_cache(maxsize=None)
def pace_blocks() -> tuple[witt.Block, ...]:
    return tuple(witt.witt_design().blocks_avoiding(LEFT_OUT))


@lru_cache(maxsize=None)
def _incidence11() -> np.ndarray:
    """66 x 11 incidence of the family on points 1..11."""
    m = np.zeros((len(pace_blocks()), 11), dtype=np.int64)
    for r, X in enumerate(pace_blocks()):
        m[r, [x - 1 for x in X]] = 1
    return m


@lru_cache(maxsize=None)
def pace_design_matrix() -> np.ndarray:
    """Design-code generator with A = {12}, B = {11}: rows r_1..r_10."""
    return dc.build_design_code(witt.witt_design(), {LEFT_OUT}, {DELETED}).matrix


def _check_uv(U: Iterable[int], V: Iterable[int]) -> tuple[set[int], set[int]]:
    U, V = set(U), set(V)
    if U & V:
        raise PreconditionError(f"U and V must be disjoint: {sorted(U & V)} in both")
    if not (U | V) <= set(range(1, 11)):
        raise PreconditionError("U and V must be subsets of 1..10")
    return U, V


def nullity(U: Iterable[int], V: Iterable[int]) -> int:
    """Blocks X in the family with |X & U| = |X & V| (mod 3)."""
    U, V = _check_uv(U, V)
    return sum(1 for X in pace_blocks() if (len(U.intersection(X)) - len(V.intersection(X))) % 3 == 0)


def codeword(U: Iterable[int], V: Iterable[int]) -> np.ndarray:
    U, V = _check_uv(U, V)
    x = np.zeros(10, dtype=np.int64)
    x[[i - 1 for i in U]] = 1
    x[[j - 1 for j in V]] = -1
    return gf3.matmul(x[None, :], pace_design_matrix())[0]


def kc_count(U: Iterable[int], V: Iterable[int], W: Iterable[int], c: int) -> int:
    """Blocks X in the family meeting each of U, V, W in a size congruent to c mod 3."""
    parts = [set(U), set(V), set(W)]
    if sum(map(len, parts)) != 11 or set().union(*parts) != set(range(1, 12)):
        raise PreconditionError("U, V, W must partition 1..11")
    if c not in (0, 1, 2):
        raise PreconditionError(f"congruence class must be 0, 1 or 2, got {c}")
    return sum(1 for X in pace_blocks() if all(len(P.intersection(X)) % 3 == c for P in parts))


# --- nullity sweep ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class NullitySweep:
    """All 3**10 (U, V) assignments in counter order: digit 1 = in U, 2 = in V."""

    assignments: np.ndarray
    nullities: np.ndarray
    weights: np.ndarray


@lru_cache(maxsize=None)
def nullity_sweep() -> NullitySweep:
    x = gf3.information_vectors(10)
    inc = _incidence11()[:, :10]
    # Set-counting route: intersection sizes with U and V for every block.
    in_u = (x == 1).astype(np.int64) @ inc.T
    in_v = (x == 2).astype(np.int64) @ inc.T
    nul = np.count_nonzero((in_u - in_v) % 3 == 0, axis=1)
    # Linear-algebra route: weight of x . G over the design-code generator.
    words = (x.astype(np.int64) @ pace_design_matrix().astype(np.int64)) % 3
    wts = np.count_nonzero(words, axis=1)
    return NullitySweep(x, nul, wts)


def verify_nullity_bound() -> list[VerificationReport]:
    sw = nullity_sweep()
    nonempty = sw.nullities[1:]  # index 0 is U = V = {}
    return [
        _eq("nullity of (U,V) = ({}, {})", PACE_N, int(sw.nullities[0])),
        VerificationReport(
            "max nullity over nonempty (U,V)",
            f"== {NULLITY_BOUND}",
            f"{int(nonempty.max())} over {nonempty.size} assignments",
            int(nonempty.max()) == NULLITY_BOUND,
        ),
        _bool("all nullities divisible by 3", not np.any(sw.nullities % 3)),
        _bool("nullity + codeword weight = 66 for every (U,V)", np.all(sw.nullities + sw.weights == PACE_N)),
        _eq("minimum distance from nullity sweep", PACE_D, PACE_N - int(nonempty.max())),
    ]


# --- case analysis ---------------------------------------------------------------


def ordered_partitions(sizes: Sequence[int], points: Sequence[int]) -> np.ndarray:
    """Label arrays (one row per ordered partition) assigning part 0, 1, 2, ... to each point."""
    points = list(points)
    if sum(sizes) != len(points):
        raise PreconditionError("part sizes must add up to the number of points")
    rows: list[list[int]] = [[-1] * len(points)]
    for part, size in enumerate(sizes[:-1]):
        nxt = []
        for row in rows:
            free = [i for i, lab in enumerate(row) if lab < 0]
            for chosen in combinations(free, size):
                r = list(row)
                for i in chosen:
                    r[i] = part
                nxt.append(r)
        rows = nxt
    out = np.array(rows, dtype=np.int8)
    out[out < 0] = len(sizes) - 1
    return out


def kc_extrema(sizes: tuple[int, int, int]) -> dict[int, tuple[int, int]]:
    """{c: (min, max)} of k_c over every partition of 1..11 with the given part sizes."""
    labels = ordered_partitions(sizes, range(1, 12))
    inc = _incidence11()
    res = [((labels == t).astype(np.int64) @ inc.T) % 3 for t in range(3)]
    out = {}
    for c in range(3):
        k = np.count_nonzero((res[0] == c) & (res[1] == c) & (res[2] == c), axis=1)
        out[c] = (int(k.min()), int(k.max()))
    return out


def verify_case_bounds() -> list[VerificationReport]:
    reports = []
    for sizes, bounds in CASE_BOUNDS.items():
        ext = kc_extrema(sizes)
        for c, bound in bounds.items():
            lo, hi = ext[c]
            u, v, w = sizes
            varies = "set-dependent" if lo != hi else "constant"
            reports.append(
                VerificationReport(
                    f"k_{c}({u},{v},{w}) <= {bound}",
                    f"max <= {bound}",
                    f"max={hi} min={lo} ({varies})",
                    hi <= bound,
                )
            )
    lo, hi = kc_extrema((10, 0, 1))[0]
    reports.append(_eq("k_0(10,0,1) = i(0,2)", (30, 30), (lo, hi)))
    return reports


# --- lemmas -----------------------------------------------------------------------


def _triples() -> list[frozenset[int]]:
    return [frozenset(t) for t in combinations(range(1, 7), 3)]


def families_without_two_point_pair(size: int) -> list[tuple[frozenset[int], ...]]:
    """Families of ``size`` distinct 3-subsets of {1..6} with no two meeting in exactly 2 points."""
    trip = _triples()
    n = len(trip)
    meets2 = [[len(trip[i] & trip[j]) == 2 for j in range(n)] for i in range(n)]
    out = []
    for fam in combinations(range(n), size):
        if not any(meets2[i][j] for i, j in combinations(fam, 2)):
            out.append(tuple(trip[i] for i in fam))
    return out


def verify_lemma_five_triples() -> list[VerificationReport]:
    # The 6-set is fixed as {1..6}; any other 6-set is a relabeling.
    total = math.comb(20, 5)
    bad = families_without_two_point_pair(5)
    four = families_without_two_point_pair(4)
    example = "" if not four else " e.g. " + " ".join("".join(map(str, sorted(t))) for t in four[0])
    return [
        VerificationReport(
            "five 3-subsets of a 6-set: some pair meets in 2 points",
            f"0 exceptions among {total} families",
            f"{len(bad)} exceptions among {total} families",
            not bad,
        ),
        VerificationReport(
            "four 3-subsets pairwise avoiding 2-point intersection exist",
            "at least 1",
            f"{len(four)} of {math.comb(20, 4)}{example}",
            bool(four),
        ),
    ]


def lemma_20_30_counts() -> dict[tuple[int, ...], int]:
    """For each 6-subset U of 1..11, the number of family blocks meeting U in 3 points."""
    inc = _incidence11()
    out = {}
    for U in combinations(range(1, 12), 6):
        meet = inc[:, [u - 1 for u in U]].sum(axis=1)
        out[U] = int(np.count_nonzero(meet == 3))
    return out


def verify_lemma_20_30() -> list[VerificationReport]:
    blocks = set(pace_blocks())
    counts = lemma_20_30_counts()
    wrong = [U for U, n in counts.items() if n != (20 if U in blocks else 30)]
    n_blocks = sum(1 for U in counts if U in blocks)
    return [
        VerificationReport(
            "6-subsets U of 1..11 meet 20 blocks in 3 points if U is a block, else 30",
            f"0 exceptions among {len(counts)}",
            f"{len(wrong)} exceptions among {len(counts)}",
            not wrong,
        ),
        _eq("6-subsets of 1..11 that are blocks", 66, n_blocks),
    ]


def k2443_counts() -> np.ndarray:
    """Counts for every ordered partition (A,B,C) of 1..12 into 4-sets and P in C.

    Returns an array of shape (34650, 4): entry [p, j] is the number of blocks
    meeting each of A, B, C in 2 points and avoiding the j-th point of C.
    """
    labels = ordered_partitions((4, 4, 4), range(1, 13))
    inc = witt.witt_design().incidence.astype(np.int64)
    meets = [(labels == t).astype(np.int64) @ inc.T for t in range(3)]
    good = (meets[0] == 2) & (meets[1] == 2) & (meets[2] == 2)
    total = good.sum(axis=1)
    through = good.astype(np.int64) @ inc  # qualifying blocks through each point
    c_points = np.sort(np.argwhere(labels == 2)[:, 1].reshape(-1, 4), axis=1)
    return total[:, None] - np.take_along_axis(through, c_points, axis=1)


def verify_lemma_k2443() -> list[VerificationReport]:
    counts = k2443_counts()
    hi = int(counts.max())
    return [
        VerificationReport(
            "blocks meeting A,B,C (4+4+4) in 2 points each and avoiding P in C",
            "max <= 18",
            f"max={hi} min={int(counts.min())} over {counts.size} (partition, P) choices",
            hi <= 18,
        )
    ]


def verify_intersection_table() -> list[VerificationReport]:
    table = witt.intersection_table(witt.witt_design())
    reports = [_eq(f"i({a},{b})", v, table[(a, b)]) for (a, b), v in witt.PRINTED_INTERSECTION_NUMBERS.items()]
    # intersection_table raises on placement dependence or asymmetry
    reports.append(_bool("i(a,b) = i(b,a) and independent of placement", True))
    oracle = witt.table_from_recurrence({a: table[(a, 0)] for a in range(6)})
    reports.append(_bool("i(a,b) = i(a,b-1) - i(a+1,b-1) across the table", oracle == table))
    reports.append(_eq("i(0,0)", 132, table[(0, 0)]))
    return reports


# --- group, design, theorem ------------------------------------------------------


def verify_group() -> list[VerificationReport]:
    g = perm.m12()
    h = perm.information_set_stabilizer()
    design = witt.witt_design()
    block = design.blocks[0]
    info = (1, 2, 3, 4, 5, 6)
    reports = [
        _eq("order of <h1,h2,h3,h4,g>", 12 * 11 * 10 * 9 * 8, g.order),
        _bool("sharply 5-transitive", g.is_sharply_k_transitive(5)),
        _eq("order of <h1,h2,h3,h4>", 120, h.order),
        _eq("elements of <h1..h4> stabilizing {1..6}", 120, h.set_stabilizer_order(info)),
    ]
    for name, s, stab, orb in [
        (f"block {block}", block, 720, 132),
        ("information set {1..6}", info, 120, 792),
        ("2-set {1,2}", (1, 2), 1440, 66),
    ]:
        st = g.set_stabilizer_order(s)
        ob = len(g.orbit_of_set(s))
        reports.append(_eq(f"stabilizer order of {name}", stab, st))
        reports.append(_eq(f"orbit length of {name}", orb, ob))
        reports.append(_eq(f"orbit x stabilizer for {name}", g.order, st * ob))
    pts = zmodule.projective_point_stabilizer_orders(g)
    reports.append(_eq("stabilizer order of each projective orbit point", {1440}, set(pts)))
    reports.append(_eq("projective points x stabilizer", g.order, len(pts) * pts[0]))
    return reports


def verify_design() -> list[VerificationReport]:
    blocks, info_sets = witt.classify_six_sets()
    design = witt.witt_design()
    g = perm.m12()
    permuted = all(p.image_set(b) in design for p in perm.M12_GENERATORS.values() for b in design.blocks)
    golay = witt.golay_code()
    dist = golay.weight_distribution()
    return [
        _eq("six-sets of rank 5 (blocks)", 132, len(blocks)),
        _eq("six-sets of rank 6 (information sets)", 792, len(info_sets)),
        _eq("six-sets of rank <= 4", 0, math.comb(12, 6) - len(blocks) - len(info_sets)),
        _eq("five-sets not in exactly one block", 0, len(design.steiner_violations())),
        _bool("complement of every block is a block", all(c in design for c in design.complement.values())),
        _bool("M12 generators permute the blocks", permuted),
        _bool("orbit of one block is the whole design", g.orbit_of_set(design.blocks[0]) == list(design.blocks)),
        _eq("Golay code [n,k,d]", (12, 6, 6), (golay.n, golay.k, golay.min_distance())),
        _bool("Golay code self-orthogonal", golay.is_self_orthogonal()),
        _eq("Golay nonzero weights", [0, 6, 9, 12], gf3.nonzero_weights(dist)),
    ]


def _code_reports(label: str, matrix: np.ndarray, workers: int) -> tuple[list[VerificationReport], dict]:
    code = gf3.LinearCode(matrix)
    dist = code.weight_distribution(workers)
    nz = [w for w in gf3.nonzero_weights(dist) if w]
    return [
        _eq(f"{label}: length", PACE_N, code.n),
        _eq(f"{label}: rank", PACE_K, code.k),
        _eq(f"{label}: minimum distance by enumeration", PACE_D, min(nz)),
        _bool(f"{label}: self-orthogonal", code.is_self_orthogonal()),
        _bool(f"{label}: all weights divisible by 3", all(w % 3 == 0 for w in nz)),
    ], dist


def verify_theorem(workers: int = 1) -> list[VerificationReport]:
    design = witt.witt_design()
    pg = zmodule.pace_generator_m12()
    forms = {
        "M12 form": pg.matrix,
        "design form A={12},B={11}": pace_design_matrix(),
        "design form A={11},B={12}": dc.build_design_code(design, {11}, {12}).matrix,
    }
    reports, dists = [], []
    for label, m in forms.items():
        r, d = _code_reports(label, m, workers)
        reports += r
        dists.append(d)
    reports.append(_bool("weight enumerators of all three forms agree", all(d == dists[0] for d in dists)))
    mapped = dc.equivalence_map_prop5(pg.matrix, pg.manifest)
    reports.append(
        _bool("monomial map of M12 form equals design form A={11},B={12}", np.array_equal(mapped, forms["design form A={11},B={12}"]))
    )
    rows = pace_design_matrix()
    reports.append(_eq("row weights of r_1..r_10", {36}, {int(w) for w in np.count_nonzero(rows, axis=1)}))
    reports += verify_nullity_bound()
    reports += verify_invariance()
    return reports


def verify_invariance() -> list[VerificationReport]:
    gens = perm.M12_GENERATORS
    reports = [_bool(f"monomial invariance under {name}", zmodule.verify_monomial_invariance(p=p)) for name, p in gens.items()]
    hom = all(
        np.array_equal(
            zmodule.induced_matrix(perm.compose(a, b)),
            gf3.matmul(zmodule.induced_matrix(a), zmodule.induced_matrix(b)),
        )
        for a in gens.values()
        for b in gens.values()
    )
    reports.append(_bool("induced matrices respect composition on generator pairs", hom))
    return reports


def verify_c11_invariance(workers: int = 1) -> list[VerificationReport]:
    enums = dc.c11_weight_enumerators(witt.witt_design(), workers)
    dists = {min(w for w, _ in key if w) for key in enums}
    return [
        _eq("distinct weight enumerators over 132 ordered singleton pairs (A,B)", 1, len(enums)),
        _eq("minimum distance of every C_{a},{b}", {PACE_D}, dists),
    ]


# --- suites ---------------------------------------------------------------------

SUITES: dict[str, list[Callable[..., list[VerificationReport]]]] = {
    "group": [verify_group],
    "design": [verify_design],
    "lemmas": [verify_intersection_table, verify_lemma_five_triples, verify_lemma_20_30, verify_lemma_k2443],
    "cases": [verify_case_bounds],
    "theorem": [verify_theorem, verify_c11_invariance],
}

_TAKES_WORKERS = {verify_theorem, verify_c11_invariance}


def run_suites(names: Iterable[str], workers: int = 1) -> list[VerificationReport]:
    """Run the named suites in order. An exception becomes a failed report."""
    out: list[VerificationReport] = []
    for name in names:
        for fn in SUITES[name]:
            try:
                out += fn(workers) if fn in _TAKES_WORKERS else fn()
            except Exception as exc:  # noqa: BLE001 - every failure must surface as a report
                out.append(VerificationReport(fn.__name__, "completes", f"{type(exc).__name__}: {exc}", False))
    return out


def run_all(workers: int = 1) -> list[VerificationReport]:
    return run_suites(SUITES, workers)
