import random
from fractions import Fraction as F

import pytest

from isobound import (ConstraintSystem, LinearRow, WeightVector,
                      build_constraints, check_feasible, solve_min_omega)

KNOWN_DELTA4 = WeightVector(F(13, 41), F(5, 82), F(5, 41), F(6, 41), F(7, 41))
KNOWN_TF = WeightVector(F(3, 10), F(1, 15), F(1, 10), F(1, 8), F(3, 20))

GOLDEN = {
    (4, "general"): F(13, 41),
    (5, "general"): F(23, 78),
    (4, "triangle-free"): F(3, 10),
    (5, "triangle-free"): F(9, 31),
    (3, "girth5"): F(11, 34),
    (3, "general"): F(5, 14),
}


def tag_prefix_census(cs: ConstraintSystem) -> dict[str, int]:
    counts: dict[str, int] = {}
    for row in cs.rows:
        prefix = row.tag.split("-")[0]
        counts[prefix] = counts.get(prefix, 0) + 1
    return counts


@pytest.mark.parametrize("delta", [3, 4, 5, 7])
def test_row_counts(delta):
    assert len(build_constraints(delta, "general").rows) == 22
    assert len(build_constraints(delta, "triangle-free").rows) == 20
    assert len(build_constraints(delta, "girth5").rows) == 19


def test_row_census_delta4_general():
    cs = build_constraints(4, "general")
    assert tag_prefix_census(cs) == {
        "r1": 2, "r2": 1, "r3": 1, "r4": 1, "r5": 1, "r6": 3, "r7": 5,
        "chain": 5, "step": 3,
    }
    tags = [r.tag for r in cs.rows]
    assert tags[10] == "r7-k2-min-beta2"
    assert tags[13] == "r7-c5-min-beta3"
    assert tags.index("r1-white-degree-ge5") == 0


def test_rows_scale_with_delta():
    cs5 = build_constraints(5, "general")
    r3 = next(r for r in cs5.rows if r.tag == "r3-white-degree-3")
    assert r3.coeffs == tuple(F(x) for x in (4, 0, -3, -8, 8))
    r5 = next(r for r in cs5.rows if r.tag == "r5-component-per-vertex")
    assert r5.coeffs == tuple(F(x) for x in (1, 0, -3, 3, 0))
    assert r5.rhs == F(1, 3)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError, match="minimum degree"):
        build_constraints(2)
    with pytest.raises(ValueError, match="variant"):
        build_constraints(4, "chordal")


@pytest.mark.parametrize("key,expected", sorted(GOLDEN.items(), key=str))
def test_golden_optima(key, expected):
    delta, variant = key
    sol = solve_min_omega(build_constraints(delta, variant))
    assert sol.status == "optimal"
    assert sol.optimal_omega == expected
    assert sol.witness is not None and sol.witness.omega == expected
    ok, bad = check_feasible(build_constraints(delta, variant), sol.witness)
    assert ok and not bad
    assert sol.witness.beta1 > 0
    assert sol.tight_rows, "an optimal vertex has tight rows"


def test_delta4_witness_is_known_vector():
    sol = solve_min_omega(build_constraints(4, "general"))
    assert sol.witness == KNOWN_DELTA4


def test_delta3_general_exceeds_one_third():
    assert GOLDEN[(3, "general")] > F(1, 3)
    sol = solve_min_omega(build_constraints(3, "general"))
    assert sol.optimal_omega > F(1, 3)


def test_known_vectors_feasible():
    ok, bad = check_feasible(build_constraints(4, "general"), KNOWN_DELTA4)
    assert ok and bad == ()
    ok, bad = check_feasible(build_constraints(4, "triangle-free"), KNOWN_TF)
    assert ok and bad == ()


def test_tf_vector_in_general_system_fails_two_rows():
    cs = build_constraints(4, "general")
    ok, bad = check_feasible(cs, KNOWN_TF)
    assert not ok
    assert [v.index for v in bad] == [10, 13]
    by_tag = {v.row.tag: v.slack for v in bad}
    assert by_tag == {
        "r7-k2-min-beta2": F(-1, 10),
        "r7-c5-min-beta3": F(-1, 12),
    }


def test_omega_cannot_be_undercut():
    for (delta, variant), omega in GOLDEN.items():
        cs = build_constraints(delta, variant)
        wv = solve_min_omega(cs).witness
        for shave in (F(1, 10**6), F(1, 100)):
            worse = WeightVector(wv.omega - shave, wv.beta1, wv.beta2,
                                 wv.beta3, wv.beta4)
            ok, bad = check_feasible(cs, worse)
            assert not ok and len(bad) >= 1, (delta, variant, shave)


def test_min_term_expansion_matches_direct_minimum():
    # the pair of k2 rows is equivalent to 2w + 2(d-1)*min(b1, b2/2) >= 1,
    # the c5 triple to 5w + 5(d-2)*min(b1, b2/2, b3/3) >= 2
    rng = random.Random(99)
    for delta in (4, 5):
        cs = build_constraints(delta, "general")
        rows = {r.tag: r for r in cs.rows}
        for _ in range(200):
            p = tuple(F(rng.randrange(0, 40), rng.randrange(1, 60)) for _ in range(5))
            w, b1, b2, b3, _ = p
            k2_direct = 2 * w + 2 * (delta - 1) * min(b1, b2 / 2) >= 1
            k2_rows = (rows["r7-k2-min-beta1"].satisfied(p)
                       and rows["r7-k2-min-beta2"].satisfied(p))
            assert k2_direct == k2_rows
            c5_direct = 5 * w + 5 * (delta - 2) * min(b1, b2 / 2, b3 / 3) >= 2
            c5_rows = all(rows[t].satisfied(p) for t in
                          ("r7-c5-min-beta1", "r7-c5-min-beta2", "r7-c5-min-beta3"))
            assert c5_direct == c5_rows


def test_general_feasible_implies_relaxed_variants():
    # the triangle-free and girth5 endgame rows are subsets of the
    # general ones, so feasibility can only get easier
    wv = solve_min_omega(build_constraints(4, "general")).witness
    assert check_feasible(build_constraints(4, "triangle-free"), wv)[0]
    assert check_feasible(build_constraints(4, "girth5"), wv)[0]
    wv_tf = solve_min_omega(build_constraints(4, "triangle-free")).witness
    assert check_feasible(build_constraints(4, "girth5"), wv_tf)[0]


def test_tight_rows_have_zero_slack():
    cs = build_constraints(4, "general")
    sol = solve_min_omega(cs)
    assert len(sol.tight_rows) >= 5
    pt = sol.witness.as_tuple()
    for i in sol.tight_rows:
        assert cs.rows[i].slack(pt) == 0
    for i in range(len(cs.rows)):
        if i not in sol.tight_rows:
            assert cs.rows[i].slack(pt) > 0


def test_row_evaluate_and_str():
    row = LinearRow(tuple(F(x) for x in (2, 3, 0, 0, 0)), F(1), "r7-k2-min-beta1")
    assert row.evaluate((F(1, 2), F(1, 3), F(0), F(0), F(0))) == 2
    assert row.slack((F(1, 2), F(0), F(0), F(0), F(0))) == 0
    assert "2*omega" in str(row) and "beta2" not in str(row)


def test_solution_and_system_json():
    cs = build_constraints(4, "general")
    sol = solve_min_omega(cs)
    d = sol.to_json_dict()
    assert d["status"] == "optimal"
    assert d["optimal_omega"] == "13/41"
    assert WeightVector.from_json_dict(d["witness"]) == sol.witness
    assert d["tight_rows"] == list(sol.tight_rows)
    sys_d = cs.to_json_dict()
    assert sys_d["delta"] == 4 and sys_d["variant"] == "general"
    assert len(sys_d["rows"]) == 22
    assert sys_d["rows"][5]["rhs"] == "1/3"
