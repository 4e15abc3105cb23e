import math

import numpy as np
import pytest

from lrcdec.errors import ParameterError
from lrcdec.poly import UniPoly, interpolate
from lrcdec.prob import (
    FailureReason,
    MiscorrectionModel,
    estimate_model,
    p_f,
    p_suc_bound,
    unique_decode,
    unique_decode_report,
)
from conftest import random_error


def test_p_f_zero_error_rate_is_certain():
    for g, s in [(3, 1), (3, 3), (7, 2), (10, 0)]:
        assert p_f(0.0, g, s) == pytest.approx(1.0)


def test_p_f_certain_miscorrection_is_uniform_choice():
    for g, s in [(3, 1), (5, 2), (7, 3)]:
        assert p_f(1.0, g, s) == pytest.approx(1 / math.comb(g, s))


def test_p_f_decreases_with_error_rate():
    # decreasing through the operating range; near p_e = 1 the uniform
    # choice among miscorrected sets turns the curve mildly back up
    grid = [i / 20 for i in range(17)]
    vals = [p_f(p, 3, 1) for p in grid]
    for a, b in zip(vals, vals[1:]):
        assert b <= a + 1e-12
    full = [p_f(i / 20, 3, 1) for i in range(21)]
    assert all(0.0 < v <= 1.0 for v in full)


def test_p_f_validates_inputs():
    with pytest.raises(ParameterError):
        p_f(-0.1, 3, 1)
    with pytest.raises(ParameterError):
        p_f(1.1, 3, 1)
    with pytest.raises(ParameterError):
        p_f(0.5, 3, 4)
    with pytest.raises(ParameterError):
        p_f(0.5, 3, -1)


def test_model_validates_probabilities():
    with pytest.raises(ParameterError):
        MiscorrectionModel(p_e=1.5, p_local_unique=1.0, p_global_unique=1.0)
    with pytest.raises(ParameterError):
        MiscorrectionModel(p_e=0.1, p_local_unique=-0.2, p_global_unique=1.0)
    m = MiscorrectionModel(p_e=0.1, p_local_unique=0.9, p_global_unique=0.8)
    assert m.to_dict()["provenance"] == "supplied"


def test_p_suc_bound_composition(code15):
    params = code15.params
    m = MiscorrectionModel(p_e=0.0, p_local_unique=0.9, p_global_unique=0.8)
    # with no miscorrection the bound is a pure product of uniques
    assert p_suc_bound(m, params, 0) == pytest.approx(0.8)
    assert p_suc_bound(m, params, 1) == pytest.approx(0.9 * 0.8)
    assert p_suc_bound(m, params, 2) == pytest.approx(0.9**2 * 0.8)
    worse = MiscorrectionModel(p_e=0.3, p_local_unique=0.9, p_global_unique=0.8)
    assert p_suc_bound(worse, params, 1) < p_suc_bound(m, params, 1)


def local_codewords(code):
    local = code.local_code_view(0)
    F = code.field
    q = F.q
    words = np.empty((q**3, 5), dtype=np.uint16)
    idx = 0
    for a in range(q):
        for b in range(q):
            for c in range(q):
                f = UniPoly(F, (a, b, c))
                words[idx] = f.eval_many(
                    np.asarray(local.eval_set, dtype=np.uint16)
                )
                idx += 1
    return words


def test_estimated_miscorrection_matches_exhaustive_rate(code15):
    # exact probability that a weight-2 pattern decodes to a nonempty
    # local list, by scanning every pattern against every local codeword
    cws = local_codewords(code15)
    hits = 0
    total = 0
    for i in range(5):
        for j in range(i + 1, 5):
            for vi in range(1, 16):
                for vj in range(1, 16):
                    w = np.zeros(5, dtype=np.uint16)
                    w[i], w[j] = vi, vj
                    total += 1
                    dists = np.count_nonzero(cws != w, axis=1)
                    if dists.min() <= 1:
                        hits += 1
    exact = hits / total
    model = estimate_model(code15, trials=1500, seed=4)
    est = model.p_e_by_weight[2]
    tol = 4 * math.sqrt(exact * (1 - exact) / 1500)
    assert abs(est - exact) <= tol


def test_estimated_model_shape_and_determinism(code15):
    a = estimate_model(code15, trials=60, seed=9)
    b = estimate_model(code15, trials=60, seed=9)
    assert a.provenance == "estimated"
    assert set(a.p_e_by_weight) == {2, 3, 4, 5}
    assert set(a.local_unique_by_weight) == {0, 1}
    assert set(a.global_unique_by_weight) == set(range(5))
    for d in (a.p_e_by_weight, a.local_unique_by_weight, a.global_unique_by_weight):
        assert all(0.0 <= v <= 1.0 for v in d.values())
    assert a.p_e == max(a.p_e_by_weight.values())
    assert a.p_e_by_weight == b.p_e_by_weight
    assert a.global_unique_by_weight == b.global_unique_by_weight
    c = estimate_model(code15, trials=60, seed=10)
    assert c.p_e_by_weight != a.p_e_by_weight


def test_unique_decode_recovers_few_errors(code15, report15):
    rng = np.random.default_rng(20)
    successes = 0
    for _ in range(60):
        cw = code15.encode(rng.integers(0, 16, 6))
        w = cw ^ random_error(rng, 15, 16, 3)
        out = unique_decode_report(code15, w, report=report15)
        if out.ok:
            successes += 1
            # three errors is below half distance, so a unique answer
            # can only be the transmitted word
            assert np.array_equal(out.codeword, cw)
            assert out.distance == 3
            assert len(out.chosen_sets) == 1
    assert successes >= 50


def test_unique_decode_wrapper(code15, report15):
    rng = np.random.default_rng(21)
    cw = code15.encode(rng.integers(0, 16, 6))
    got = unique_decode(code15, cw.copy(), report=report15)
    assert np.array_equal(got, cw)


def test_unique_decode_prefers_cleanest_singletons(code15, report15):
    rng = np.random.default_rng(22)
    for bad_set, expect in [(0, (1,)), (1, (0,)), (2, (0,))]:
        cw = code15.encode(rng.integers(0, 16, 6))
        w = cw.copy()
        p = 5 * bad_set + int(rng.integers(0, 5))
        w[p] ^= int(rng.integers(1, 16))
        out = unique_decode_report(code15, w, report=report15)
        assert out.ok and np.array_equal(out.codeword, cw)
        assert out.chosen_sets == expect


def test_unique_decode_reports_insufficient_singletons(code15, report15):
    rng = np.random.default_rng(0)
    w = rng.integers(0, 16, 15).astype(np.uint16)
    out = unique_decode_report(code15, w, report=report15)
    assert not out.ok
    assert out.reason is FailureReason.INSUFFICIENT_SINGLETONS
    assert out.codeword is None and out.chosen_sets == ()


def test_unique_decode_reports_empty_global_list(code15, report15):
    rng = np.random.default_rng(0)
    cw = code15.encode(rng.integers(0, 16, 6))
    w = cw.copy()
    for j, cnt in enumerate((3, 3, 0)):
        pos = rng.choice(5, cnt, replace=False) + 5 * j
        for p in pos:
            w[p] ^= int(rng.integers(1, 16))
    out = unique_decode_report(code15, w, report=report15)
    assert not out.ok
    assert out.reason is FailureReason.GLOBAL_EMPTY


def test_unique_decode_reports_ambiguity(code15, report15):
    # two codewords that agree on one repair set and differ in weight 8
    # across the other two; a word halfway between them decodes to an
    # ambiguous pair
    F = code15.field
    pts = [int(v) for v in code15.eval_set]
    gammas = {F.pow(pts[i], 5) for i in code15.partition[2]}
    assert len(gammas) == 1          # the map x^5 is constant per set
    gam = gammas.pop()
    r0, r1 = pts[0], pts[5]
    quad = UniPoly(F, (F.mul(r0, r1), r0 ^ r1, 1))
    fc = quad * UniPoly(F, (gam, 0, 0, 0, 0, 1))
    assert code15.is_member(fc)
    cwc = fc.eval_many(code15._xs)
    assert int(np.count_nonzero(cwc)) == 8
    assert [int(np.count_nonzero(cwc[5 * j:5 * j + 5])) for j in range(3)] \
        == [4, 4, 0]
    w = np.zeros(15, dtype=np.uint16)
    take = [i for i in range(5) if cwc[i]][:2] \
        + [i for i in range(5, 10) if cwc[i]][:2]
    for i in take:
        w[i] = cwc[i]
    out = unique_decode_report(code15, w, report=report15)
    assert not out.ok
    assert out.reason is FailureReason.GLOBAL_AMBIGUOUS
    assert out.chosen_sets == (2,)


def test_unique_decode_validates_radius(code15, report15):
    w = np.zeros(15, dtype=np.uint16)
    with pytest.raises(ParameterError):
        unique_decode_report(code15, w, radius=-2, report=report15)
    with pytest.raises(ParameterError):
        unique_decode_report(code15, np.zeros(14, dtype=np.uint16),
                             report=report15)


def test_local_view_represents_every_set(code63):
    # the miscorrection estimate samples set 0 only; every repair set
    # must carry the same code, as a set of length-21 vectors
    F = code63.field
    rng = np.random.default_rng(23)
    views = [code63.local_code_view(j) for j in range(3)]
    pts0 = views[0].eval_set
    for j in (1, 2):
        xs = np.asarray(views[j].eval_set, dtype=np.uint16)
        for _ in range(50):
            f = UniPoly(F, tuple(int(x) for x in rng.integers(0, 64, 8)))
            w = f.eval_many(xs)
            back = interpolate(F, list(zip(pts0, w)))
            assert back.degree < 8
