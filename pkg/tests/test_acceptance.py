"""Exit criteria, one test each. A PASS/FAIL line per criterion is printed
in the pytest terminal summary."""
import io
import math
import random
import time
from contextlib import contextmanager

import pytest

from coprime_rns import (
    are_coprime,
    channel_op,
    estimate,
    exact_range,
    from_rns,
    generate,
    make_context,
    optimal_set,
    segmented_bits,
    to_rns,
)
from coprime_rns.cli import main
from coprime_rns.report import parse_report
from reference import ACCEPTANCE_LINES, PUBLISHED_BITS, PUBLISHED_NARROW_BITS, PUBLISHED_SETS, pairwise_coprime, prime_pi

OPS = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b, "mul": lambda a, b: a * b}
FIXTURE_RANGES = [(2, 32), (2, 64), (2, 128), (2, 256), (33, 128), (65, 128), (129, 256)]


@contextmanager
def criterion(name):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {name}  ({time.perf_counter() - t0:.2f}s)")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {name}  ({time.perf_counter() - t0:.2f}s)")


def timed(fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - t0


def test_exact_fixture_match_full_ranges():
    with criterion("fixture sets [2,32] [2,64] [2,128] [2,256]: exact, <1s each"):
        for key, size in zip(PUBLISHED_SETS, (11, 18, 31, 54)):
            m, secs = timed(generate, *key)
            assert list(m.moduli) == PUBLISHED_SETS[key]
            assert len(m) == size
            assert exact_range(m.moduli).bits == PUBLISHED_BITS[key]
            assert secs < 1.0, (key, secs)


def test_narrow_range_quality_floor():
    with criterion("narrow ranges [33,128] [65,128] [129,256]: bits >= 157/113/205, <1s each"):
        for (X, Y), floor_bits in PUBLISHED_NARROW_BITS.items():
            m, secs = timed(generate, X, Y)
            assert pairwise_coprime(m.moduli)
            assert all(X <= v <= Y for v in m.moduli)
            assert exact_range(m.moduli).bits >= floor_bits
            assert secs < 1.0, ((X, Y), secs)


def test_prime_counting_law():
    with criterion("|generate(2,Y)| = pi(Y) for Y in 32..2048 (512 checked vs sieve), 2048 < 60s"):
        expected = {32: 11, 64: 18, 128: 31, 256: 54, 1024: 172, 2048: 309}
        for Y, k in expected.items():
            m, secs = timed(generate, 2, Y)
            assert prime_pi(Y) == k
            assert len(m) == k
            if Y == 2048:
                assert secs < 60.0
        assert len(generate(2, 512)) == prime_pi(512) == 97


def test_complexity_table():
    with criterion("complexity estimate reproduces the eight consistent table rows"):
        rows = [
            ((2, 32, 11), 73_344),
            ((2, 64, 18), 627_264),
            ((2, 128, 31), 5_877_760),
            ((2, 256, 54), 56_957_184),
            ((17, 31, 7), 17_608),
            ((33, 64, 11), 150_720),
            ((65, 128, 17), 1_153_152),
            ((129, 256, 27), 9_233_152),
        ]
        for args, T in rows:
            assert estimate(*args).operations == T


def test_rns_round_trip_and_homomorphism():
    with criterion("RNS round trip (exhaustive P=1001, P=30; 10000 random on 48-bit P) + homomorphism"):
        rng = random.Random(20240101)
        full = generate(2, 32).moduli
        sub = [m for m in full if m in (7, 11, 13)]
        contexts = [make_context(sub), make_context([2, 3, 5]), make_context(full)]
        assert contexts[0].big_P == 1001
        assert contexts[2].big_P.bit_length() == 48
        for ctx in contexts[:2]:
            for s in range(ctx.big_P):
                assert from_rns(ctx, to_rns(ctx, s)) == s
        big = contexts[2]
        for _ in range(10_000):
            s = rng.randrange(big.big_P)
            assert from_rns(big, to_rns(big, s)) == s
        for ctx in contexts:
            for _ in range(1000):
                a, b = rng.randrange(ctx.big_P), rng.randrange(ctx.big_P)
                op = rng.choice(sorted(OPS))
                got = from_rns(ctx, channel_op(ctx, to_rns(ctx, a), to_rns(ctx, b), op))
                assert got == OPS[op](a, b) % ctx.big_P


def test_crt_constants():
    with criterion("CRT constants: q_i*(P/p_i) mod p_i = 1 and sum C_i mod P = 1 on generated sets"):
        ranges = FIXTURE_RANGES + [(17, 31), (33, 64), (2, 512), (2, 1024), (2, 2048)]
        for X, Y in ranges:
            ctx = make_context(generate(X, Y).moduli)
            for q, part, p in zip(ctx.inverses, ctx.partials, ctx.moduli):
                assert q * part % p == 1
            assert sum(ctx.constants) % ctx.big_P == 1


def test_oracle_equivalence():
    with criterion("oracle >= greedy on all 2<=X<Y<=40, equality on [2,Y], < 5 min"):
        t0 = time.perf_counter()
        for Y in range(3, 41):
            for X in range(2, Y):
                best = optimal_set(X, Y).best_product
                greedy = generate(X, Y).product
                assert best >= greedy, (X, Y)
                if X == 2:
                    assert best == greedy, Y
        assert time.perf_counter() - t0 < 300


def test_coprimality_against_gcd():
    with criterion("are_coprime == (gcd == 1) on all pairs in [2,4096]^2, < 60s"):
        t0 = time.perf_counter()
        values = range(2, 4097)
        for a in values:
            row = [are_coprime(a, b) for b in values]
            assert row == [math.gcd(a, b) == 1 for b in values], a
        assert time.perf_counter() - t0 < 60


def test_segmented_consistency():
    with criterion("segmented_bits == exact bits for Y in 32..2048, limits 64/128/1000"):
        for Y in (32, 64, 128, 256, 512, 1024, 2048):
            moduli = generate(2, Y).moduli
            bits = exact_range(moduli).bits
            for limit in (64, 128, 1000):
                assert segmented_bits(moduli, limit) == bits


def test_report_round_trip(tmp_path, monkeypatch):
    with criterion("generate -> verify on its own report reproduces k and bits for all fixture ranges"):
        monkeypatch.chdir(tmp_path)
        for X, Y in FIXTURE_RANGES:
            assert main(["generate", str(X), str(Y), "--quiet"], out=io.StringIO()) == 0
            path = tmp_path / f"coprimes_result_{X}_{Y}.txt"
            moduli, declared = parse_report(path.read_text())
            m = generate(X, Y)
            assert declared["count"] == len(m) and declared["bits"] == exact_range(m.moduli).bits
            out = io.StringIO()
            assert main(["verify", "--file", str(path)], out=out) == 0
            text = out.getvalue()
            assert f"k={declared['count']}" in text
            assert f"The dynamic range is {declared['bits']} bits" in text
