"""The non-zero-locator bound engine.

A non-zero-locator code is a small auxiliary cyclic code L of length n_l
coprime to n whose defining set fills the gaps of the defining set of the
code under study: whenever, for j = 0..mu-2, each index is covered either
by D_C (shifted by e, stepped by a unit w) or by D_L (shifted by t_l), the
minimum distance satisfies d >= ceil(mu / d_l).  This module searches for
the best such certificate, knows the closed forms for single-parity-check
and Reed-Solomon locators, generates candidate locator codes, and emits
the bound-to-HT ratio grids as CSV.

The search itself is pure modular-index combinatorics; fields only enter
when locator codewords are realized (see `min_weight_codeword` and the
decoder module).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import product

from . import cyclic
from .gf import (
    DigitField,
    NotCoprime,
    Poly,
    build_field,
    min_extension_degree,
    nth_root_of_unity,
    prime_power,
    subfield_digit_maps,
)
from .cyclic import SearchCapExceeded, PreconditionViolated

LOCATOR_KINDS = (
    "trivial",
    "spc",
    "rs",
    "hamming",
    "lowest-rate-d2",
    "lowest-rate-d3",
    "custom",
)


class DegenerateCover(ValueError):
    """Every index is covered: the joint zero set leaves no gap to certify."""


@dataclass(frozen=True)
class LocatorSpec:
    """A non-zero-locator code over GF(q^u).

    support/coeffs describe a verified minimum-weight codeword in the
    locator's canonical splitting field (coeffs as base-q_l digits; None
    for Reed-Solomon locators, whose codeword is the generator polynomial
    and is re-expanded from the defining set in whatever field is in use).
    meta carries construction parameters for kinds that need them.
    """

    kind: str
    u: int
    n_l: int
    defining_set: tuple[int, ...]
    d_l: int
    support: tuple[int, ...]
    coeffs: tuple[int, ...] | None
    meta: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in LOCATOR_KINDS:
            raise ValueError(f"unknown locator kind {self.kind!r}")
        if self.u < 1 or self.n_l < 1 or self.d_l < 1:
            raise ValueError("locator parameters must be positive")


@dataclass(frozen=True)
class NzlCertificate:
    """Witness that d >= d_star = ceil(mu / d_l).

    For every j in [0, mu-2]: (e + w*j) mod n is in D_C or (j + t_l) mod n_l
    is in D_L; the condition fails at j = mu-1.
    """

    e: int
    w: int
    t_l: int
    mu: int
    d_star: int
    locator: LocatorSpec


def nzl_bound(mu: int, d_l: int) -> int:
    """ceil(mu / d_l)."""
    if mu < 1 or d_l < 1:
        raise ValueError("need mu >= 1 and d_l >= 1")
    return -(-mu // d_l)


def mu_search(
    defining_set,
    n: int,
    locator: LocatorSpec,
    *,
    search_w: bool = True,
    w_values=None,
) -> NzlCertificate:
    """Best certificate for the given locator: maximal mu over offsets e,
    locator shifts t_l, and (optionally) unit steps w, ties broken by
    smaller (e, t_l, w).

    For fixed w the pairs ((e + w*j) mod n, (j + t_l) mod n_l) walk a single
    cycle of length n*n_l, so the run maximization is one circular scan of
    that cycle per w.
    """
    n_l = locator.n_l
    if math.gcd(n, n_l) != 1:
        raise NotCoprime(f"gcd({n}, {n_l}) != 1")
    in_c = bytearray(n)
    for i in defining_set:
        in_c[i % n] = 1
    in_l = bytearray(n_l)
    for i in locator.defining_set:
        in_l[i % n_l] = 1
    if w_values is not None:
        ws = sorted(set(w % n for w in w_values))
        if any(math.gcd(w, n) != 1 for w in ws):
            raise ValueError("w must be a unit mod n")
    elif search_w and n > 1:
        ws = [w for w in range(1, n) if math.gcd(w, n) == 1]
    else:
        ws = [1 % n] if n > 1 else [0]
    total = n * n_l
    best = None  # (-mu, e, t_l, w)
    for w in ws:
        good = bytearray(total)
        for j in range(total):
            if in_c[w * j % n] or in_l[j % n_l]:
                good[j] = 1
        if all(good):
            raise DegenerateCover("the code and locator zero sets cover every index")
        if not any(good):
            continue
        # maximal circular runs of good positions
        j = 0
        while good[j - 1]:  # rewind to a run boundary; some zero exists
            j -= 1
        start = j % total
        j = start
        scanned = 0
        while scanned < total:
            if not good[j]:
                j = (j + 1) % total
                scanned += 1
                continue
            run = 0
            first = j
            while good[j]:
                run += 1
                j = (j + 1) % total
                scanned += 1
            cand = (-(run + 1), w * first % n, first % n_l, w)
            if best is None or cand < best:
                best = cand
    if best is None:
        return NzlCertificate(0, 1 % n if n > 1 else 0, 0, 1, nzl_bound(1, locator.d_l), locator)
    neg_mu, e, t_l, w = best
    mu = -neg_mu
    return NzlCertificate(e, w, t_l, mu, nzl_bound(mu, locator.d_l), locator)


def verify_certificate(defining_set, n: int, cert: NzlCertificate) -> bool:
    """Re-check a certificate by direct scan, independently of the searcher."""
    loc = cert.locator
    if math.gcd(n, loc.n_l) != 1 or math.gcd(cert.w, n) != 1:
        return False
    if cert.d_star != nzl_bound(max(cert.mu, 1), loc.d_l):
        return False
    D = {i % n for i in defining_set}
    DL = {i % loc.n_l for i in loc.defining_set}

    def covered(j):
        return (cert.e + cert.w * j) % n in D or (j + cert.t_l) % loc.n_l in DL

    if any(not covered(j) for j in range(cert.mu - 1)):
        return False
    return not covered(cert.mu - 1)


def spc_closed_form(d0: int, nu: int) -> int:
    """ceil(d0 + nu*(d0-1)/2): the bound from a single-parity-check locator
    aligned with a normalized HT template of stride m = nu + 2."""
    if d0 < 2 or nu < 0:
        raise ValueError("need d0 >= 2 and nu >= 0")
    return -(-(2 * d0 + nu * (d0 - 1)) // 2)


class InvalidGeometry(ValueError):
    """Reed-Solomon locator shape needs m > nu + 1."""


def rs_closed_form(d0: int, nu: int, m: int) -> int:
    """ceil((m*d0 - nu)/(m - nu)): the bound from a cyclic Reed-Solomon
    locator of length m and distance m - nu on a normalized HT template."""
    if m <= nu + 1:
        raise InvalidGeometry(f"need m > nu + 1, got m={m}, nu={nu}")
    if d0 < 2:
        raise ValueError("need d0 >= 2")
    return -(-(m * d0 - nu) // (m - nu))


def ht_improvement_predicate(d0: int, nu: int, m: int) -> bool:
    """True exactly when the Reed-Solomon closed form beats d0 + nu.

    For nu >= 1 this is d0 > m - nu + 1; at nu = 0 the closed form always
    collapses to d0 (the BCH case), so no improvement is possible there
    whatever d0 is.
    """
    if m <= nu + 1:
        raise InvalidGeometry(f"need m > nu + 1, got m={m}, nu={nu}")
    return nu > 0 and d0 > m - nu + 1


def trivial_locator() -> LocatorSpec:
    """Length-1 full-space locator (codeword 1): degenerates to the BCH run."""
    return LocatorSpec("trivial", 1, 1, (), 1, (0,), (1,))


def spc_locator(n_l: int, q: int) -> LocatorSpec:
    """Single parity check code of length n_l over the splitting field
    GF(q^u), u the order of q mod n_l, so its root beta lives in the
    locator's own field; codeword 1 - x."""
    if n_l < 2:
        raise ValueError("need n_l >= 2")
    u = min_extension_degree(q, n_l)  # raises NotCoprime for bad q
    q_l = q**u
    df = DigitField(q_l) if q_l > 2 else None
    neg_one = df.neg(1) if df else 1
    return LocatorSpec("spc", u, n_l, (0,), 2, (0, 1), (1, neg_one))


def rs_locator(n_l: int, k_l: int, q: int) -> LocatorSpec:
    """Cyclic Reed-Solomon locator of length n_l and dimension k_l over
    GF(q^u) (u minimal with n_l | q^u - 1), zeros at exponents 0..n_l-k_l-1;
    the minimum-weight codeword is the generator polynomial itself."""
    if not 1 <= k_l < n_l:
        raise ValueError("need 1 <= k_l < n_l")
    u = min_extension_degree(q, n_l)
    d_l = n_l - k_l + 1
    spec = LocatorSpec("rs", u, n_l, tuple(range(n_l - k_l)), d_l, tuple(range(d_l)), None)
    # MDS minimum weight: assert every generator coefficient is nonzero
    _, coeffs = min_weight_codeword(q, spec)
    assert all(coeffs), "Reed-Solomon generator polynomial has a zero coefficient"
    return spec


def hamming_locator(q: int = 2) -> LocatorSpec:
    """The binary (7, 4, 3) Hamming code with defining set {3, 5, 6}."""
    if q != 2:
        raise ValueError("the (7,4,3) Hamming locator is binary")
    spec = LocatorSpec("hamming", 1, 7, (3, 5, 6), 3, (), None)
    support, coeffs = min_weight_codeword(q, spec)
    return replace(spec, support=support, coeffs=coeffs)


def d3_locator(a: int, g: int, r: int = 1) -> LocatorSpec:
    """Lowest-rate distance-three binary locator of length a*(2^g - 1)."""
    code = cyclic.lowest_rate_d3_code(a, g, r)
    spec = LocatorSpec(
        "lowest-rate-d3", 1, code.n, code.defining_set, 3, (), None, meta=(a, g, r)
    )
    support, coeffs = min_weight_codeword(2, spec)
    return replace(spec, support=support, coeffs=coeffs)


def custom_locator(q: int, u: int, n_l: int, defining_set, cap: int = 1 << 20) -> LocatorSpec:
    """Locator from an explicit defining set; its minimum distance and a
    minimum-weight codeword are established by brute force, never trusted."""
    q_l = q**u
    code = cyclic.build_code(q_l, n_l, _reps_of(defining_set, n_l, q_l))
    if set(code.defining_set) != {i % n_l for i in defining_set}:
        raise PreconditionViolated("defining set is not closed under multiplication by q_l")
    wit = cyclic.min_distance_oracle(code, cap=cap)
    support = tuple(i for i, c in enumerate(wit.codeword) if c)
    coeffs = tuple(wit.codeword[i] for i in support)
    return LocatorSpec("custom", u, n_l, code.defining_set, wit.d, support, coeffs)


def _reps_of(defining_set, n: int, q: int):
    reps = set()
    seen = set()
    for i in defining_set:
        i %= n
        if i not in seen:
            c = cyclic.cyclotomic_coset(n, q, i)
            seen |= c
            reps.add(min(c))
    return tuple(sorted(reps))


def min_weight_codeword(q: int, locator: LocatorSpec, cap: int = 1 << 20):
    """(support, digit coefficients) of a minimum-weight locator codeword,
    realized in the locator's canonical splitting field.

    single parity check -> 1 - x; Reed-Solomon -> the generator polynomial
    (all d_l coefficients nonzero by the MDS property); lowest-rate
    distance-three -> the ternomial construction; anything else by brute
    force over q_l^k_l messages (capped)."""
    q_l = q**locator.u
    if locator.kind == "trivial":
        return (0,), (1,)
    if locator.kind == "spc":
        df = DigitField(q_l)
        return (0, 1), (1, df.neg(1))
    p, a = prime_power(q_l)
    s_l = min_extension_degree(q_l, locator.n_l)
    ctx = build_field(p, a * s_l)
    beta = nth_root_of_unity(ctx, locator.n_l)
    _, to_digit = subfield_digit_maps(ctx, q_l)
    support, elts = _locator_codeword_elements(ctx, beta, locator, q, cap=cap)
    return support, tuple(to_digit[e] for e in elts)


def _locator_codeword_elements(ctx, beta, locator: LocatorSpec, q: int, cap: int = 1 << 20):
    """Minimum-weight locator codeword (support, field elements) for the
    concrete order-n_l root beta of ctx.  The codeword of a binary kind
    depends on which root is in play, so it is re-derived per context."""
    kind = locator.kind
    if kind == "trivial":
        return (0,), (1,)
    if kind == "spc":
        return (0, 1), (1, ctx.neg(1))
    if kind == "rs":
        g = Poly.one(ctx)
        for i in locator.defining_set:
            g = g * Poly(ctx, (ctx.neg(ctx.pow(beta, i)), 1))
        if not all(g.coeffs):
            raise AssertionError("Reed-Solomon generator with zero coefficient")
        return tuple(range(len(g.coeffs))), g.coeffs
    if kind == "lowest-rate-d3":
        a_, g_, r_ = locator.meta
        G = (1 << g_) - 1
        u_loc = locator.n_l // G
        beta_inner = ctx.pow(beta, u_loc)
        target = ctx.add(1, beta_inner)
        b = next(k for k in range(1, G) if ctx.pow(beta_inner, k) == target)
        rinv = pow(r_, -1, G)
        support = tuple(sorted({0, u_loc * rinv, u_loc * (b * rinv % G)}))
        return support, (1,) * 3
    # hamming / custom / lowest-rate-d2: brute force against this beta
    q_l = q**locator.u
    k_l = locator.n_l - len(locator.defining_set)
    if q_l**k_l > cap:
        raise SearchCapExceeded(f"{q_l}^{k_l} messages exceed the cap {cap}")
    g = Poly.one(ctx)
    for i in locator.defining_set:
        g = g * Poly(ctx, (ctx.neg(ctx.pow(beta, i)), 1))
    to_elt, _ = subfield_digit_maps(ctx, q_l)
    best = None
    best_cw = None
    for msg in product(range(q_l), repeat=k_l):
        if not any(msg):
            continue
        m = Poly(ctx, tuple(to_elt[d] for d in msg))
        cw = (m * g).coeffs
        w = sum(1 for c in cw if c)
        if best is None or w < best:
            best = w
            best_cw = cw
            if best == locator.d_l:
                break
    if best != locator.d_l:
        raise AssertionError("no codeword of the declared minimum weight found")
    support = tuple(i for i, c in enumerate(best_cw) if c)
    return support, tuple(best_cw[i] for i in support)


def candidate_locators(
    n: int,
    q: int,
    *,
    max_n_l: int = 12,
    max_u: int = 4,
    kinds=("trivial", "spc", "rs", "hamming", "lowest-rate-d3"),
):
    """Deterministic, deduplicated list of locator candidates for length n:
    the trivial locator, single parity checks, cyclic Reed-Solomon codes of
    length dividing q^u - 1, the binary Hamming (7,4,3), and lowest-rate
    distance-three codes, all with length coprime to n."""
    out: list[LocatorSpec] = []
    seen: set[tuple[int, tuple[int, ...]]] = set()

    def emit(loc: LocatorSpec):
        key = (loc.n_l, loc.defining_set)
        if key not in seen:
            seen.add(key)
            out.append(loc)

    if "trivial" in kinds:
        emit(trivial_locator())
    if "spc" in kinds:
        for n_l in range(2, max_n_l + 1):
            if math.gcd(n_l, n) == 1 and math.gcd(n_l, q) == 1:
                emit(spc_locator(n_l, q))
    if "rs" in kinds:
        for n_l in range(2, max_n_l + 1):
            if math.gcd(n_l, n) != 1 or math.gcd(n_l, q) != 1:
                continue
            if min_extension_degree(q, n_l) > max_u:
                continue
            for k_l in range(1, n_l):
                emit(rs_locator(n_l, k_l, q))
    if "hamming" in kinds and q == 2 and 7 <= max_n_l and math.gcd(n, 7) == 1:
        emit(hamming_locator())
    if "lowest-rate-d3" in kinds and q == 2:
        for g in range(2, max_n_l.bit_length() + 1):
            G = (1 << g) - 1
            for a in range(2, max_n_l // G + 1):
                n_l = a * G
                if n_l <= max_n_l and n_l % 2 and math.gcd(n_l, n) == 1:
                    emit(d3_locator(a, g, 1))
    return out


def best_bound(
    code: cyclic.CyclicCodeSpec,
    *,
    max_n_l: int = 12,
    max_u: int = 4,
    kinds=("trivial", "spc", "rs", "hamming", "lowest-rate-d3"),
    search_w: bool | None = None,
):
    """Best certificate over the candidate locators, with the BCH and HT
    values for comparison.  Returns (certificate, {"bch", "ht", "d_star"}).

    Ties between equal d_star are broken by smaller
    (d_l, n_l, e, t_l, w).  CYCLIC_BOUND_THREADS > 1 evaluates candidates
    concurrently; the deterministic tie-break makes the result
    schedule-independent.
    """
    if search_w is None:
        search_w = code.n <= 255
    bch = cyclic.bch_bound(code)
    ht = cyclic.ht_bound(code)
    if not code.defining_set:
        cert = NzlCertificate(0, 1 % code.n if code.n > 1 else 0, 0, 1, 1, trivial_locator())
        return cert, {"bch": bch.value, "ht": ht.value, "d_star": 1}
    cands = candidate_locators(code.n, code.q, max_n_l=max_n_l, max_u=max_u, kinds=kinds)

    def run(loc):
        return mu_search(code.defining_set, code.n, loc, search_w=search_w)

    threads = int(os.environ.get("CYCLIC_BOUND_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            certs = list(pool.map(run, cands))
    else:
        certs = [run(loc) for loc in cands]
    best = min(
        certs,
        key=lambda c: (-c.d_star, c.locator.d_l, c.locator.n_l, c.e, c.t_l, c.w),
    )
    return best, {"bch": bch.value, "ht": ht.value, "d_star": best.d_star}


def ratio_grid(nu_range, d0_range, m_rule):
    """Rows (nu, d0, m, d_star, ht, ratio) over the grid; m_rule maps nu to
    an iterable of locator lengths m (each must exceed nu + 1)."""
    for nu in nu_range:
        for d0 in d0_range:
            for m in m_rule(nu):
                d_star = rs_closed_form(d0, nu, m)
                ht = d0 + nu
                yield (nu, d0, m, d_star, ht, d_star / ht)


def ratio_grid_csv(nu_range, d0_range, m_rule, out):
    """Write the ratio grid as CSV (header nu,d0,m,d_star,ht,ratio)."""
    out.write("nu,d0,m,d_star,ht,ratio\n")
    for nu, d0, m, d_star, ht, ratio in ratio_grid(nu_range, d0_range, m_rule):
        out.write(f"{nu},{d0},{m},{d_star},{ht},{ratio!r}\n")


def sweep_soundness(
    lengths,
    max_k: int = 16,
    limit: int = 5000,
    oracle_cap: int = 1 << 24,
    **bound_kwargs,
):
    """Yield (code, bch, ht, certificate, oracle_distance) over all small
    binary cyclic codes; consumers assert every bound <= oracle distance."""
    for code in cyclic.enumerate_small_codes(lengths, max_k, limit):
        cert, comparison = best_bound(code, **bound_kwargs)
        oracle = cyclic.min_distance_oracle(code, cap=oracle_cap)
        yield code, comparison["bch"], comparison["ht"], cert, oracle.d
