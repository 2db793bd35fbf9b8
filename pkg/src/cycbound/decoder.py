"""Syndrome decoding up to half the certified locator bound.

Given a code, a locator and a certificate (e, w, t_l, mu), the decoder
works in the combined field GF(q^r) that houses both an order-n root alpha
and an order-n_l root beta.  Syndromes are S_j = r(alpha^(w*j+e)) *
a(beta^(j+t_l)); the Key Equation S = Omega / Lambda mod x^(mu-1) is
solved with the extended Euclidean algorithm; error positions come from a
root scan of Lambda and error values from a generalized Forney formula.
Up to floor((d_star - 1) / 2) errors are corrected, and every decode ends
with a re-encoding check so a miscorrection outside the code is reported
as a failure instead of returned silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import cyclic
from .gf import (
    DigitField,
    FieldCtx,
    Poly,
    build_field,
    combined_degree,
    extended_euclid_step_sequence,
    horner,
    min_extension_degree,
    nth_root_of_unity,
    prime_power,
    subfield_digit_maps,
)
from .nzl import LocatorSpec, NzlCertificate, _locator_codeword_elements, verify_certificate
from .cyclic import PreconditionViolated


class LengthMismatch(ValueError):
    """Received word has the wrong length."""


class DecoderError(Exception):
    """Base of the failures reported inside DecodeResult."""


class ZeroSyndrome(DecoderError):
    """All syndromes vanish; nothing to solve."""


class InconsistentLocator(DecoderError):
    """The locator polynomial does not describe a correctable pattern."""


class EvaluatorSingular(DecoderError):
    """A Forney denominator vanished."""


class ValueOutsideBaseField(DecoderError):
    """A computed error value is not a base-field element."""


@dataclass(frozen=True, eq=False)
class DecoderContext:
    """Everything precomputed for decoding one (code, locator, certificate).

    Immutable and shareable; decode() is a pure function of (context, word).
    """

    code: cyclic.CyclicCodeSpec
    locator: LocatorSpec
    cert: NzlCertificate
    field: FieldCtx
    alpha: int
    beta: int
    alpha_w: int
    kappa: int
    support: tuple[int, ...]
    coeffs: tuple[int, ...]
    f: Poly
    h: Poly
    a_evals: tuple[int, ...]
    to_elt: tuple[int, ...]
    to_digit: dict[int, int]


@dataclass
class DecodeResult:
    status: str  # "success" | "failure"
    reason: str | None
    positions: tuple[int, ...]
    values: dict[int, int]
    corrected: tuple[int, ...] | None


def _aligned_code_root(field: FieldCtx, code: cyclic.CyclicCodeSpec, to_elt) -> int:
    # The generator polynomial pins the code to a specific order-n root; an
    # independently built field has its own tables, so locate the power of
    # the canonical root that the generator actually vanishes on.
    zeta = nth_root_of_unity(field, code.n)
    g_elts = [to_elt[d] for d in cyclic.generator_polynomial(code)]
    for t in range(1, code.n + 1):
        if math.gcd(t, code.n) != 1:
            continue
        cand = field.pow(zeta, t)
        if all(horner(field, g_elts, field.pow(cand, rep)) == 0 for rep in code.coset_reps):
            return cand
    raise AssertionError("no aligned order-n root found")  # unreachable


def build_context(
    code: cyclic.CyclicCodeSpec, locator: LocatorSpec, cert: NzlCertificate
) -> DecoderContext:
    """Combined-field context for (code, locator, certificate)."""
    if cert.locator != locator:
        raise PreconditionViolated("certificate was issued for a different locator")
    if cert.mu < 2:
        raise PreconditionViolated("certificate must have mu >= 2")
    if not verify_certificate(code.defining_set, code.n, cert):
        raise PreconditionViolated("certificate does not verify against the code")
    q = code.q
    p, a = prime_power(q)
    s = min_extension_degree(q, code.n)
    q_l = q**locator.u
    s_l = min_extension_degree(q_l, locator.n_l)
    r = combined_degree(s, locator.u, s_l)
    field = build_field(p, a * r)
    to_elt, to_digit = subfield_digit_maps(field, q)
    alpha = _aligned_code_root(field, code, to_elt)
    beta = nth_root_of_unity(field, locator.n_l)
    support, base_coeffs = _locator_codeword_elements(field, beta, locator, q)
    # The certificate shift twists the codeword: coefficients pick up
    # beta^(z * t_l) so that the twisted word evaluated at beta^j equals
    # a(beta^(j + t_l)).
    coeffs = tuple(
        field.mul(cz, field.pow(beta, z * cert.t_l)) for z, cz in zip(support, base_coeffs)
    )
    kappa = min(support)
    f = Poly.one(field)
    for z in support:
        f = f * Poly(field, (1, field.neg(field.pow(beta, z))))
    h = Poly.zero(field)
    for z, cz in zip(support, coeffs):
        term = Poly(field, (cz,))
        for other in support:
            if other != z:
                term = term * Poly(field, (1, field.neg(field.pow(beta, other))))
        h = h + term
    a_evals = tuple(
        _eval_support(field, support, coeffs, beta, j) for j in range(locator.n_l)
    )
    if f(field.pow(beta, -kappa)) != 0:
        raise AssertionError("f must vanish at beta^-kappa")
    if f.degree != locator.d_l or not h.degree <= locator.d_l - 1:
        raise AssertionError("locator polynomial degrees out of contract")
    for i in locator.defining_set:
        if a_evals[(i - cert.t_l) % locator.n_l] != 0:
            raise AssertionError("locator codeword does not vanish on its defining set")
    return DecoderContext(
        code=code,
        locator=locator,
        cert=cert,
        field=field,
        alpha=alpha,
        beta=beta,
        alpha_w=field.pow(alpha, cert.w),
        kappa=kappa,
        support=support,
        coeffs=coeffs,
        f=f,
        h=h,
        a_evals=a_evals,
        to_elt=to_elt,
        to_digit=to_digit,
    )


def _eval_support(field, support, coeffs, beta, j):
    acc = 0
    for z, cz in zip(support, coeffs):
        acc = field.add(acc, field.mul(cz, field.pow(beta, j * z)))
    return acc


def syndromes(ctx: DecoderContext, received) -> Poly:
    """S_j = r(alpha^(w*j+e)) * a(beta^(j+t_l)) for j = 0..mu-2."""
    received = tuple(received)
    n = ctx.code.n
    if len(received) != n:
        raise LengthMismatch(f"expected {n} digits, got {len(received)}")
    field = ctx.field
    try:
        relts = [ctx.to_elt[d] for d in received]
    except (IndexError, TypeError):
        raise ValueError(f"digits must be integers in [0, {ctx.code.q})")
    cert = ctx.cert
    n_l = ctx.locator.n_l
    out = []
    for j in range(cert.mu - 1):
        aj = ctx.a_evals[j % n_l]
        if aj == 0:
            out.append(0)
            continue
        x = field.pow(ctx.alpha, (cert.w * j + cert.e) % n)
        out.append(field.mul(horner(field, relts, x), aj))
    return Poly(field, tuple(out))


def solve_key_equation(S: Poly, mu: int) -> tuple[Poly, Poly]:
    """(Lambda, Omega) with S*Lambda = Omega mod x^(mu-1), Lambda(0) = 1.

    Decoding t <= floor((d_star - 1)/2) errors needs deg Lambda = t*d_l and
    deg Omega <= t*d_l - 1, and d_star = ceil(mu/d_l) forces
    (d_star - 1)*d_l < mu, hence 2*t*d_l <= (d_star - 1)*d_l <= mu - 1.
    So the locator degree stays <= floor((mu-1)/2) and the evaluator degree
    strictly below ceil((mu-1)/2): the Euclidean remainder sequence on
    (x^(mu-1), S) crosses that split exactly once, at the sought pair.
    ceil((mu-1)/2) == mu // 2 for both parities.
    """
    if S.is_zero():
        raise ZeroSyndrome("syndrome polynomial is zero")
    field = S.field
    omega_raw, lam_raw = extended_euclid_step_sequence(Poly.monomial(field, mu - 1), S, mu // 2)
    c = lam_raw(0)
    if c == 0:
        raise InconsistentLocator("locator polynomial vanishes at zero")
    cinv = field.inv(c)
    return lam_raw.scale(cinv), omega_raw.scale(cinv)


def find_error_positions(ctx: DecoderContext, lam: Poly) -> tuple[int, ...]:
    """Positions p with Lambda(beta^-kappa * alpha^(-w*p)) = 0; the count
    must tile deg Lambda into d_l-sized blocks."""
    field = ctx.field
    if lam.is_zero() or lam(0) != 1:
        raise InconsistentLocator("locator polynomial must satisfy Lambda(0) = 1")
    positions = []
    cur = field.pow(ctx.beta, -ctx.kappa)
    step = field.inv(ctx.alpha_w)
    for p in range(ctx.code.n):
        if lam(cur) == 0:
            positions.append(p)
        cur = field.mul(cur, step)
    if len(positions) * ctx.locator.d_l != lam.degree:
        raise InconsistentLocator(
            f"{len(positions)} roots cannot account for degree {lam.degree}"
        )
    return tuple(positions)


def error_values(ctx: DecoderContext, lam: Poly, omega: Poly, positions) -> dict[int, int]:
    """Generalized Forney formula.

    e_p = Omega(gamma_p) * alpha^(w*p) * f'(beta^-kappa) /
          (Lambda'(gamma_p) * alpha^(p*e) * h(beta^-kappa)),
    gamma_p = beta^-kappa * alpha^(-w*p).  The factor alpha^(w*p) is the
    inner derivative of f(x * alpha^(w*p)) inside Lambda'; since
    gamma_p * alpha^(w*p) is the constant beta^-kappa, f' and h are
    evaluated once.  Every value must land in the base field.
    """
    field = ctx.field
    lam_d = lam.derivative()
    ref = field.pow(ctx.beta, -ctx.kappa)
    f_ref = ctx.f.derivative()(ref)
    h_ref = ctx.h(ref)
    if h_ref == 0 or f_ref == 0:
        raise EvaluatorSingular("locator-derived polynomials vanish at the reference root")
    out = {}
    for p in positions:
        gamma = field.mul(ref, field.pow(ctx.alpha_w, -p))
        den = lam_d(gamma)
        if den == 0:
            raise EvaluatorSingular(f"Lambda' vanishes at the root for position {p}")
        num = field.mul(omega(gamma), field.mul(field.pow(ctx.alpha_w, p), f_ref))
        den = field.mul(den, field.mul(field.pow(ctx.alpha, p * ctx.cert.e), h_ref))
        val = field.div(num, den)
        digit = ctx.to_digit.get(val)
        if digit is None:
            raise ValueOutsideBaseField(f"error value at position {p} is not in GF({ctx.code.q})")
        if digit == 0:
            raise InconsistentLocator(f"zero error value at claimed position {p}")
        out[p] = digit
    return out


def decode(ctx: DecoderContext, received) -> DecodeResult:
    """Bounded-distance decode; failures are reported in the result, never
    raised (length/digit misuse excepted)."""
    received = tuple(received)
    S = syndromes(ctx, received)
    if S.is_zero():
        return DecodeResult("success", None, (), {}, received)
    try:
        lam, omega = solve_key_equation(S, ctx.cert.mu)
        if not omega.degree < lam.degree:
            raise InconsistentLocator("evaluator degree not below locator degree")
        positions = find_error_positions(ctx, lam)
        if not positions:
            raise InconsistentLocator("nonzero syndrome but no error positions")
        values = error_values(ctx, lam, omega, positions)
        df = DigitField(ctx.code.q)
        corrected = list(received)
        for p, v in values.items():
            corrected[p] = df.sub(corrected[p], v)
        relts = [ctx.to_elt[d] for d in corrected]
        for i in ctx.code.defining_set:
            if horner(ctx.field, relts, ctx.field.pow(ctx.alpha, i)) != 0:
                raise InconsistentLocator("corrected word fails the defining-set recheck")
    except DecoderError as err:
        return DecodeResult("failure", f"{type(err).__name__}: {err}", (), {}, None)
    return DecodeResult("success", None, positions, values, tuple(corrected))
