import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from helpers import extra_specs, roundtrip_specs
from rankcodes import linalg
from rankcodes.channel import error_rank, random_rank_error
from rankcodes.codes import (codeword_from_coeffs, encode, expand_message, make_code_spec,
                             random_message)
from rankcodes.decoder import (DecodingFailure, compute_beta, decode, extend_recurrence,
                               known_window, skew_bm, skew_bm_gaussian)
from rankcodes.linearized import LinearizedPoly, dickson

RT = roundtrip_specs()
SPECS = list(RT.values()) + extra_specs()
IDS = [f"{s.family.value}-p{s.ctx.p}s{s.ctx.s}n{s.n}d{s.d}" for s in SPECS]


def planted_error_poly(spec, t, seed):
    """Error polynomial of a rank-t error: the interpolation of the error vector."""
    e = random_rank_error(spec, t, seed)
    return e, compute_beta(spec, e)


def window_of(spec, g):
    start, length = known_window(spec)
    return [g[(start + i) % spec.n] for i in range(length)]


def test_beta_of_clean_codeword_is_layout():
    rng = random.Random(1)
    for spec in SPECS:
        f = random_message(spec, rng)
        assert compute_beta(spec, encode(spec, f)) == expand_message(spec, f)


def test_beta_is_linear():
    rng = random.Random(2)
    for spec in SPECS:
        ctx = spec.ctx
        a = [ctx.random_element(rng) for _ in range(spec.n)]
        b = [ctx.random_element(rng) for _ in range(spec.n)]
        word = [ctx.add(x, y) for x, y in zip(codeword_from_coeffs(spec, a),
                                               codeword_from_coeffs(spec, b))]
        assert compute_beta(spec, word) == [ctx.add(x, y) for x, y in zip(a, b)]


def test_known_windows():
    assert known_window(make_code_spec("sym", 2, 1, 7, 5)) == (2, 4)
    assert known_window(make_code_spec("alt", 2, 1, 9, 6)) == (7, 5)
    assert known_window(make_code_spec("herm-odd", 2, 1, 7, 5)) == (6, 4)
    assert known_window(make_code_spec("herm-mixed", 2, 1, 6, 3)) == (2, 2)


def test_skew_bm_trivial():
    ctx = RT["sym"].ctx
    assert skew_bm(ctx, [0, 0, 0, 0]) == (0, [])
    assert skew_bm_gaussian(ctx, [0, 0, 0, 0]) == (0, [])


def test_skew_bm_rank_one_formula():
    spec = RT["sym"]
    ctx = spec.ctx
    for seed in range(30):
        e, g = planted_error_poly(spec, 1, seed)
        s = window_of(spec, g)
        if s[0] == 0:
            continue
        t, lam = skew_bm(ctx, s, 1)
        assert t == 1
        assert lam == [ctx.div(s[1], ctx.frobenius(s[0], 1))]


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_bm_agrees_with_gaussian(spec):
    ctx, u = spec.ctx, spec.u
    for seed in range(60):
        t = seed % (spec.radius + 1)
        _, g = planted_error_poly(spec, t, f"bm-{seed}")
        s = window_of(spec, g)
        got = skew_bm(ctx, s, u, max_len=spec.radius)
        ref = skew_bm_gaussian(ctx, s, u, t_max=spec.radius)
        assert got == ref
        assert got[0] == t
        # the recurrence reproduces the window
        T, lam = got
        for i in range(T, len(s)):
            acc = 0
            for m in range(1, T + 1):
                acc = ctx.add(acc, ctx.mul(lam[m - 1], ctx.frobenius(s[i - m], u * m)))
            assert acc == s[i]


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_plant_and_recover_error_poly(spec):
    ctx, u = spec.ctx, spec.u
    for seed in range(40):
        t = seed % (spec.radius + 1)
        _, g = planted_error_poly(spec, t, f"plant-{seed}")
        start, length = known_window(spec)
        s = window_of(spec, g)
        T, lam = skew_bm(ctx, s, u, max_len=spec.radius)
        assert extend_recurrence(spec, s, lam, start) == g
        # recurrence from any other d-1 window of g gives g as well
        for shift in range(spec.n):
            s2 = [g[(shift + i) % spec.n] for i in range(length)]
            if any(s2):
                T2, lam2 = skew_bm(ctx, s2, u, max_len=spec.radius)
                assert T2 == T and lam2 == lam
                assert extend_recurrence(spec, s2, lam2, shift) == g


def test_dickson_column_relation_for_recovered_lambda():
    spec = RT["alt"]
    ctx = spec.ctx
    for seed in range(20):
        _, g = planted_error_poly(spec, 2, seed)
        t, lam = skew_bm(ctx, window_of(spec, g), 1, max_len=2)
        G = dickson(LinearizedPoly(ctx, tuple(g), 1))
        assert linalg.rank(ctx, G) == 2
        for i in range(spec.n):
            acc = ctx.sum(ctx.mul(lam[m - 1], G[i][m]) for m in range(1, t + 1))
            assert acc == G[i][0]


def test_over_radius_window_fails():
    spec = RT["sym"]
    ctx = spec.ctx
    fails = 0
    for seed in range(50):
        _, g = planted_error_poly(spec, 3, f"over-{seed}")
        s = window_of(spec, g)
        try:
            skew_bm(ctx, s, 1, max_len=2)
        except DecodingFailure:
            fails += 1
            with pytest.raises(DecodingFailure):
                skew_bm_gaussian(ctx, s, 1, t_max=2)
    assert fails > 0


def test_bm_counter_counts():
    spec = RT["sym"]
    _, g = planted_error_poly(spec, 2, 0)
    c = Counter()
    skew_bm(spec.ctx, window_of(spec, g), 1, counter=c)
    assert c["mul"] > 0 and c["frob"] > 0 and c["inv"] > 0


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_decode_roundtrip(spec):
    rng = random.Random(3)
    ctx = spec.ctx
    for trial in range(30):
        t = trial % (spec.radius + 1)
        f = random_message(spec, rng)
        e = random_rank_error(spec, t, f"dec-{trial}")
        r = [ctx.add(a, b) for a, b in zip(encode(spec, f), e)]
        res = decode(spec, r)
        assert res.ok, res.reason
        assert (res.message, res.error, res.rank) == (f, e, t)
        assert list(res.error_poly.coeffs) == compute_beta(spec, e)


def test_decode_clean_codeword():
    spec = RT["herm-odd"]
    rng = random.Random(4)
    f = random_message(spec, rng)
    res = decode(spec, encode(spec, f))
    assert res.ok and res.message == f and res.rank == 0 and res.error == [0] * spec.n


def test_decode_wrong_length():
    with pytest.raises(ValueError):
        decode(RT["sym"], [0] * 6)


@pytest.mark.parametrize("spec", SPECS, ids=IDS)
def test_decode_over_radius_is_fail_safe(spec):
    rng = random.Random(5)
    ctx = spec.ctx
    t = spec.radius + 1
    if t > spec.n:
        pytest.skip("no error of that rank")
    for trial in range(30):
        f = random_message(spec, rng)
        r = [ctx.add(a, b) for a, b in zip(encode(spec, f), random_rank_error(spec, t, trial))]
        res = decode(spec, r)
        if res.ok:
            assert [ctx.add(a, b) for a, b in zip(encode(spec, res.message), res.error)] == r
            assert error_rank(spec, res.error) == res.rank <= spec.radius
        else:
            assert res.reason


@settings(max_examples=60, deadline=None)
@given(family=st.sampled_from(sorted(RT)), seed=st.integers(0, 10 ** 9), data=st.data())
def test_decode_property(family, seed, data):
    spec = RT[family]
    ctx = spec.ctx
    t = data.draw(st.integers(0, spec.radius))
    f = random_message(spec, random.Random(seed))
    e = random_rank_error(spec, t, seed)
    r = [ctx.add(a, b) for a, b in zip(encode(spec, f), e)]
    res = decode(spec, r)
    assert res.ok and res.message == f and res.error == e and res.rank == t
