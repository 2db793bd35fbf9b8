"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Criterion 2 asserts the documented Hartmann-Tzeng value
of 6 for the (2; 65, 41) code; the search produces an independently
verified witness of value 7 (template {1 + 48*i1 + i2}), so that single
assertion fails by design rather than weakening the implementation; the
README carries the analysis.
"""

import math
import random
import time

import pytest

from cycbound import cyclic, decoder, nzl
from cycbound.gf import build_field, min_extension_degree, nth_root_of_unity


def _report(num, name, ok, elapsed, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[acceptance] criterion {num} ({name}): {status} ({elapsed:.2f}s)"
    if detail:
        line += f" {detail}"
    print(line, flush=True)


def test_criterion_1_example21_reproduction(example21, spc5):
    t0 = time.monotonic()
    checks = []
    checks.append(
        example21.defining_set == (1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18)
    )
    checks.append(cyclic.bch_bound(example21).value == 5)
    ht = cyclic.ht_bound(example21)
    checks.append((ht.value, ht.b1, ht.m1, ht.m2, ht.d0, ht.nu) == (6, 1, 5, 1, 5, 1))
    cert = nzl.mu_search(example21.defining_set, 21, spc5)
    checks.append(cert.mu - 1 == 13 and cert.d_star == 7)
    checks.append(cyclic.min_distance_oracle(example21).d == 8)
    elapsed = time.monotonic() - t0
    checks.append(elapsed < 5.0)
    _report(1, "example-21 reproduction", all(checks), elapsed)
    assert all(checks)


def test_criterion_2_code65_example(code65, spc3):
    t0 = time.monotonic()
    k_ok = code65.k == 41
    cert = nzl.mu_search(code65.defining_set, 65, spc3)
    nzl_ok = cert.d_star == 7 and spc3.u == 2
    ht = cyclic.ht_bound(code65)
    ht_is_six = ht.value == 6
    elapsed = time.monotonic() - t0
    time_ok = elapsed < 5.0
    ok = k_ok and nzl_ok and ht_is_six and time_ok
    detail = "" if ok else (
        f"[k_ok={k_ok} nzl_ok={nzl_ok} ht={ht.value} (expected 6; the searched "
        f"witness b1={ht.b1}, m1={ht.m1}, m2={ht.m2}, d0={ht.d0}, nu={ht.nu} "
        f"verifies against the defining set, so the stated value is a defect)]"
    )
    _report(2, "length-65 example", ok, elapsed, detail)
    assert k_ok and nzl_ok and time_ok
    assert cyclic.verify_ht_witness(code65, ht)
    assert ht_is_six, (
        "documented value 6, but the independently verified template "
        f"(b1={ht.b1}, m1={ht.m1}, m2={ht.m2}, d0={ht.d0}, nu={ht.nu}) "
        "certifies 7; see README"
    )


def test_criterion_3_closed_form_equivalence():
    t0 = time.monotonic()
    ok = True
    for nu in range(0, 7):
        for d0 in range(2, 21):
            for m in range(nu + 2, nu + 7):
                n = m * (d0 + 1) + 1
                D = sorted(
                    {(1 + i1 * m + i2) % n for i1 in range(d0 - 1) for i2 in range(nu + 1)}
                )
                if m == nu + 2:
                    loc = nzl.LocatorSpec("spc", 1, m, (0,), 2, (0, 1), (1, 1))
                else:
                    loc = nzl.LocatorSpec(
                        "rs", 1, m, tuple(range(m - nu - 1)), m - nu, tuple(range(m - nu)), None
                    )
                cert = nzl.mu_search(D, n, loc, search_w=False)
                expect = nzl.rs_closed_form(d0, nu, m)
                if m == nu + 2:
                    expect_spc = nzl.spc_closed_form(d0, nu)
                    ok = ok and expect_spc == expect
                ok = ok and cert.d_star == expect
                ok = ok and nzl.ht_improvement_predicate(d0, nu, m) == (expect > d0 + nu)
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 30.0
    _report(3, "closed-form equivalence grid", ok, elapsed)
    assert ok


def test_criterion_4_families():
    t0 = time.monotonic()
    n1, D1 = 49, sorted({x % 49 for x in (1, 2, 4, 5, 7, 8, 10, -1, -2, -4, -5, -7, -8, -10)})
    c1 = nzl.mu_search(D1, n1, nzl.spc_locator(3, 2))
    c2 = nzl.mu_search((1, 2, 4, 7, 8, 9, 11, 14, 15, 16, 18), 23, nzl.hamming_locator())
    n3, D3 = 37, sorted({x % 37 for x in (3, 5, 11, 13, -3, -5, -11, -13)})
    c3 = nzl.mu_search(D3, n3, nzl.rs_locator(4, 2, 5))
    got = ((c1.mu, c1.d_star), (c2.mu, c2.d_star), (c3.mu, c3.d_star))
    ok = got == ((22, 11), (21, 7), (19, 7))
    elapsed = time.monotonic() - t0
    _report(4, "family fixtures", ok, elapsed, "" if ok else str(got))
    assert ok


def test_criterion_5_lowest_rate_constructions():
    t0 = time.monotonic()
    code = cyclic.lowest_rate_d3_code(17, 3, 1)
    ok = (code.n, code.k) == (119, 68)
    ok = ok and math.gcd(code.k, code.n) * 4 == 68 and math.gcd(code.k, code.n) * 7 == 119
    wit = cyclic.distance_three_witness(119, code.coset_reps, 3, 1)
    # the vanishing check inside distance_three_witness runs over GF(2^3)
    # through the exponent-reduction identity: exact, not sampled;
    # enumerating 2^68 codewords is out of reach, so d = 3 rests on the
    # gcd test (no weight-2 words) plus this weight-3 witness
    ok = ok and wit.d == 3 and sum(wit.codeword) == 3
    ok = ok and not cyclic.has_distance_two(119, code.coset_reps)
    elapsed = time.monotonic() - t0
    _report(5, "lowest-rate distance-3 construction", ok, elapsed)
    assert ok


def test_criterion_6_soundness_sweep():
    t0 = time.monotonic()
    lengths = (7, 9, 15, 17, 21, 23, 25, 31, 33, 35)
    violations = []
    count = 0
    for code, bch, ht, cert, d in nzl.sweep_soundness(lengths, max_k=16, limit=5000):
        count += 1
        if not (bch <= d and ht <= d and cert.d_star <= d):
            violations.append((code, bch, ht, cert.d_star, d))
        if not nzl.verify_certificate(code.defining_set, code.n, cert):
            violations.append((code, "certificate failed re-verification"))
    elapsed = time.monotonic() - t0
    ok = not violations and count >= 200 and elapsed < 600.0
    _report(
        6,
        "soundness sweep",
        ok,
        elapsed,
        f"[{count} codes, {len(violations)} violations]",
    )
    assert ok, violations[:5]


def test_criterion_7_decoder_roundtrip(example21, code65, spc5, spc3):
    t0 = time.monotonic()
    rng = random.Random(0xC0DE)
    failures = 0
    for code, loc in ((example21, spc5), (code65, spc3)):
        cert = nzl.mu_search(code.defining_set, code.n, loc)
        assert cert.d_star == 7
        ctx = decoder.build_context(code, loc, cert)
        for t in (1, 2, 3):
            for _ in range(200):
                cw = cyclic.random_codeword(code, rng)
                word = list(cw)
                for p in rng.sample(range(code.n), t):
                    word[p] ^= 1
                res = decoder.decode(ctx, word)
                if res.status != "success" or res.corrected != cw:
                    failures += 1
    # classical reduction: trivial locator against a textbook BCH decoder
    from test_decoder import _bch_textbook_decode

    loc = nzl.trivial_locator()
    cert = nzl.mu_search(example21.defining_set, 21, loc, search_w=False)
    ctx = decoder.build_context(example21, loc, cert)
    classical_ok = True
    for _ in range(100):
        t = rng.choice((1, 2))
        cw = cyclic.random_codeword(example21, rng)
        word = list(cw)
        for p in rng.sample(range(21), t):
            word[p] ^= 1
        res = decoder.decode(ctx, word)
        ref = _bch_textbook_decode(
            ctx.field, ctx.alpha, 21, cert.e, cert.mu, [ctx.to_elt[d] for d in word]
        )
        if res.status != "success" or ref is None:
            classical_ok = False
            continue
        if sorted(res.positions) != sorted(p for p, _ in ref) or res.corrected != cw:
            classical_ok = False
    elapsed = time.monotonic() - t0
    ok = failures == 0 and classical_ok and elapsed < 60.0
    _report(7, "decoder round trip", ok, elapsed, f"[{failures} failures]")
    assert ok


def test_criterion_8_factor_set_property():
    t0 = time.monotonic()
    rng = random.Random(0xFACE)
    pool = [
        (n, n_l)
        for n in (7, 9, 15, 17, 21, 31, 33, 63, 73, 85, 89, 93, 127)
        for n_l in (3, 5, 7, 9, 11, 13, 15, 17, 31, 33)
        if math.gcd(n, n_l) == 1
        and math.lcm(min_extension_degree(2, n), min_extension_degree(2, n_l)) <= 18
    ]
    shared = [
        (n, n_l)
        for n in (9, 15, 21, 33, 63, 93, 105)
        for n_l in (3, 5, 7, 9, 15, 21, 33)
        if math.gcd(n, n_l) > 1
        and n != n_l
        and math.lcm(min_extension_degree(2, n), min_extension_degree(2, n_l)) <= 18
    ]

    def field_for(n, n_l):
        r = math.lcm(min_extension_degree(2, n), min_extension_degree(2, n_l))
        ctx = build_field(2, r)
        return ctx, nth_root_of_unity(ctx, n), nth_root_of_unity(ctx, n_l)

    violations = 0
    for _ in range(1000):
        n, n_l = rng.choice(pool)
        ctx, alpha, beta = field_for(n, n_l)
        Z = rng.sample(range(n_l), rng.randint(1, min(5, n_l)))
        i, j = rng.sample(range(n), 2)
        si = {ctx.mul(ctx.pow(alpha, i), ctx.pow(beta, m)) for m in Z}
        sj = {ctx.mul(ctx.pow(alpha, j), ctx.pow(beta, m)) for m in Z}
        if si & sj:
            violations += 1
    for _ in range(100):
        n, n_l = rng.choice(shared)
        ctx, alpha, beta = field_for(n, n_l)
        d = math.gcd(n, n_l)
        Z = {0, n_l // d}
        while len(Z) < min(4, n_l):
            Z.add(rng.randrange(n_l))
        sets = [
            frozenset(ctx.mul(ctx.pow(alpha, i), ctx.pow(beta, m)) for m in Z)
            for i in range(n)
        ]
        if not any(sets[i] & sets[j] for i in range(n) for j in range(i + 1, n)):
            violations += 1
    elapsed = time.monotonic() - t0
    ok = violations == 0
    _report(8, "factor-set coprimality property", ok, elapsed, f"[{violations} violations]")
    assert ok


def test_criterion_9_figure_data_regression():
    t0 = time.monotonic()
    rows = list(nzl.ratio_grid(range(1, 7), range(2, 21), lambda nu: [nu + 2]))
    ok = len(rows) == 6 * 19 and all((r[5] > 1) == (r[1] > 3) for r in rows)
    for d0 in range(2, 21):
        ratios = [
            r[5] for r in nzl.ratio_grid([6], [d0], lambda nu: range(nu + 2, nu + 7))
        ]
        ok = ok and all(a >= b for a, b in zip(ratios, ratios[1:]))
    elapsed = time.monotonic() - t0
    _report(9, "figure-data regression", ok, elapsed)
    assert ok
