"""Shared test utilities: independent oracles and random generators.

The oracles here deliberately avoid the library code paths they check:
dict-based convolution for products, repeated complex multiplication for
the saddle family, and an interval-Descartes bisection isolator for real
root counts.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from hesstop.polyalg import HomoPoly


def random_homopoly(
    rng: random.Random,
    degree: int,
    max_abs: int = 9,
    denominators=(1, 1, 1, 2, 3),
) -> HomoPoly:
    """Random nonzero homogeneous polynomial with small rational coefficients."""
    while True:
        coeffs = [
            Fraction(rng.randint(-max_abs, max_abs), rng.choice(denominators))
            for _ in range(degree + 1)
        ]
        if any(c != 0 for c in coeffs):
            return HomoPoly(degree, tuple(coeffs))


def dict_multiply(p: HomoPoly, q: HomoPoly) -> dict[tuple[int, int], Fraction]:
    """Independent convolution: exponent-dict product of two polynomials."""
    out: dict[tuple[int, int], Fraction] = {}
    dp, dq = p.degree, q.degree
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            if a == 0 or b == 0:
                continue
            key = (dp - i + dq - j, i + j)
            out[key] = out.get(key, Fraction(0)) + a * b
    return {k: v for k, v in out.items() if v != 0}


def poly_as_dict(p: HomoPoly) -> dict[tuple[int, int], Fraction]:
    d = p.degree
    return {(d - j, j): c for j, c in enumerate(p.coeffs) if c != 0}


def complex_power_oracle(m: int) -> tuple[dict, dict]:
    """(Re, Im) of (x+iy)^m as exponent dicts, by repeated multiplication of
    coefficient dicts (no HomoPoly arithmetic involved)."""
    re: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    im: dict[tuple[int, int], Fraction] = {}

    def mul(d1, d2):
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in d1.items():
            for (a2, b2), c2 in d2.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return {k: v for k, v in out.items() if v != 0}

    def add(d1, d2):
        out = dict(d1)
        for k, v in d2.items():
            out[k] = out.get(k, Fraction(0)) + v
        return {k: v for k, v in out.items() if v != 0}

    def neg(d):
        return {k: -v for k, v in d.items()}

    x = {(1, 0): Fraction(1)}
    y = {(0, 1): Fraction(1)}
    for _ in range(m):
        re, im = add(mul(re, x), neg(mul(im, y))), add(mul(re, y), mul(im, x))
    return re, im


# --- interval-Descartes bisection root isolator (independent of Sturm) ----


def _uni_eval(u: list[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(u):
        acc = acc * t + c
    return acc


def _taylor_shift(u: list[Fraction], c: Fraction) -> list[Fraction]:
    """Coefficients of u(t + c)."""
    out = list(u)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out


def _descartes_bound_on_interval(u: list[Fraction], a: Fraction, b: Fraction) -> int:
    """Descartes sign-variation bound for roots of u in (a, b)."""
    v = _taylor_shift(u, a)
    scale = b - a
    v = [c * scale**i for i, c in enumerate(v)]
    w = list(reversed(v))
    w = _taylor_shift(w, Fraction(1))
    signs = [c for c in w if c != 0]
    changes = 0
    for s1, s2 in zip(signs, signs[1:]):
        if (s1 > 0) != (s2 > 0):
            changes += 1
    return changes


def descartes_count_roots(u: list[Fraction], a: Fraction, b: Fraction) -> int:
    """Exact count of distinct real roots of squarefree u in (a, b)."""
    if _uni_eval(u, a) == 0 or _uni_eval(u, b) == 0:
        raise ValueError("endpoints must not be roots")
    bound = _descartes_bound_on_interval(u, a, b)
    if bound == 0:
        return 0
    if bound == 1:
        return 1
    # pick a split point that is not a root (finitely many roots, so some
    # ratio from this list works)
    for num, den in ((1, 2), (17, 37), (19, 41), (23, 47), (29, 61), (31, 67)):
        mid = a + (b - a) * Fraction(num, den)
        if _uni_eval(u, mid) != 0:
            return descartes_count_roots(u, a, mid) + descartes_count_roots(u, mid, b)
    raise AssertionError("could not find a non-root split point")


def cauchy_radius(u: list[Fraction]) -> Fraction:
    lead = abs(u[-1])
    if len(u) == 1:
        return Fraction(1)
    return 1 + max(abs(c) for c in u[:-1]) / lead


def squarefree_with_known_roots(
    rng: random.Random, n_real: int, n_complex_pairs: int
) -> tuple[list[Fraction], int]:
    """Random squarefree polynomial with exactly n_real known rational roots."""
    roots: set[Fraction] = set()
    while len(roots) < n_real:
        roots.add(Fraction(rng.randint(-8, 8), rng.choice((1, 2, 3))))
    u = [Fraction(rng.choice((1, 2, -1, 3)))]

    def mul_lin(poly, r):
        out = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            out[i] += -r * c
            out[i + 1] += c
        return out

    for r in roots:
        u = mul_lin(u, r)
    for _ in range(n_complex_pairs):
        p = Fraction(rng.randint(-4, 4))
        q = p * p / 4 + Fraction(rng.randint(1, 9))  # forces no real root
        quad = [q, p, Fraction(1)]
        out = [Fraction(0)] * (len(u) + 2)
        for i, c in enumerate(u):
            for j, d in enumerate(quad):
                out[i + j] += c * d
        u = out
    return u, n_real


def circle_samples(p: HomoPoly, n: int = 401) -> list[float]:
    """Float values of p along the unit circle."""
    out = []
    for i in range(n):
        phi = 2 * math.pi * i / n
        out.append(float(p.evaluate(math.cos(phi), math.sin(phi))))
    return out
