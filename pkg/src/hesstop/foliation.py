"""Asymptotic-curve tracing, separatrix counting, and figure output.

A ray through the origin is invariant for the foliation of a homogeneous
hyperbolic form exactly when one of the two asymptotic lines at a circle
point is radial, i.e. when the alignment function

    h(phi) = A(p) cos^2 phi + 2 B(p) cos phi sin phi + C(p) sin^2 phi,
    p = (cos phi, sin phi)

vanishes.  Zeros come in antipodal pairs, so the separatrix count reported
here is the number of invariant LINES (ray pairs); for the saddle family of
degree m that count is m, with each of the two branch foliations owning m
of the 2m rays.  The angles list carries all rays in [0, 2pi).

Curve tracing is fixed-step RK4 on one branch of the line field, with
direction flips across samples resolved by inner-product continuity.
Quality is qualitative by design: sector counting never depends on the
integrator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .lineindex import _directions_from_values, _eval_vec, _float_coeffs, line_distance
from .polyalg import HomoPoly, complex_power_parts, swap_xy
from .quadform import QuadForm

_ALIGN_TOL = 1e-8


@dataclass
class CurveSet:
    """Traced polylines plus the invariant-ray data of the same form."""

    curves: list[list[tuple[float, float]]]
    separatrix_angles: list[float]
    sector_count: int


def _alignment(va, vb, vc, phi: float) -> float:
    c, s = math.cos(phi), math.sin(phi)
    A = _eval_vec(va, c, s)
    B = _eval_vec(vb, c, s)
    C = _eval_vec(vc, c, s)
    return A * c * c + 2.0 * B * c * s + C * s * s


def count_separatrices(
    w: QuadForm, samples: int = 4096, tol: float = _ALIGN_TOL
) -> tuple[int, list[float]]:
    """Invariant lines of the foliation and the ray angles carrying them.

    Scans the alignment function on an offset grid (so that zeros at round
    angles never land exactly on grid nodes), bisects each sign change to
    ``tol``, and merges duplicates.  Returns (number of distinct lines,
    sorted ray angles in [0, 2pi)).  Tangential zeros without sign change
    are invisible to this scan; the supported form families only have
    transversal alignment zeros.
    """
    _, va, vb, vc = _float_coeffs(w)
    two_pi = 2.0 * math.pi
    offset = 1e-3
    grid = [offset + two_pi * i / samples for i in range(samples + 1)]
    values = [_alignment(va, vb, vc, phi) for phi in grid]
    roots: list[float] = []
    for i in range(samples):
        h0, h1 = values[i], values[i + 1]
        if h0 == 0.0:
            roots.append(grid[i])
            continue
        if h0 * h1 < 0.0:
            lo, hi = grid[i], grid[i + 1]
            flo = h0
            while hi - lo > tol:
                mid = (lo + hi) / 2.0
                fmid = _alignment(va, vb, vc, mid)
                if fmid == 0.0:
                    lo = hi = mid
                    break
                if flo * fmid < 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fmid
            root = ((lo + hi) / 2.0) % two_pi
            if two_pi - root < 1e-6:
                root = 0.0
            roots.append(root)
    roots.sort()
    merged: list[float] = []
    for r in roots:
        if merged and abs(r - merged[-1]) < 1e-6:
            continue
        merged.append(r)
    if len(merged) > 1 and abs((merged[0] + two_pi) - merged[-1]) < 1e-6:
        merged.pop()
    lines: list[float] = []
    for r in merged:
        rm = r % math.pi
        if not any(abs(rm - q) < 1e-6 or abs(abs(rm - q) - math.pi) < 1e-6 for q in lines):
            lines.append(rm)
    return len(lines), merged


def _oriented_direction(va, vb, vc, x: float, y: float, vref) -> tuple[float, float]:
    """Unit vector along the branch line nearest to vref, oriented with it."""
    A = _eval_vec(va, x, y)
    B = _eval_vec(vb, x, y)
    C = _eval_vec(vc, x, y)
    pair = _directions_from_values(A, B, C, x, y)
    ref_angle = math.atan2(vref[1], vref[0]) % math.pi
    d0 = line_distance(pair[0], ref_angle)
    d1 = line_distance(pair[1], ref_angle)
    theta = pair[0] if d0 <= d1 else pair[1]
    ux, uy = math.cos(theta), math.sin(theta)
    if ux * vref[0] + uy * vref[1] < 0.0:
        ux, uy = -ux, -uy
    return ux, uy


def _trace_leaf(
    va, vb, vc, start, v0, step, r_min, r_max, max_steps
) -> list[tuple[float, float]]:
    pts = [start]
    x, y = start
    v = v0
    for _ in range(max_steps):
        k1 = _oriented_direction(va, vb, vc, x, y, v)
        k2 = _oriented_direction(va, vb, vc, x + 0.5 * step * k1[0], y + 0.5 * step * k1[1], k1)
        k3 = _oriented_direction(va, vb, vc, x + 0.5 * step * k2[0], y + 0.5 * step * k2[1], k2)
        k4 = _oriented_direction(va, vb, vc, x + step * k3[0], y + step * k3[1], k3)
        dx = (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]) / 6.0
        dy = (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]) / 6.0
        norm = math.hypot(dx, dy)
        dx, dy = dx / norm, dy / norm
        nx, ny = x + step * dx, y + step * dy
        r = math.hypot(nx, ny)
        if r < r_min or r > r_max:
            break
        x, y = nx, ny
        v = (dx, dy)
        pts.append((x, y))
    return pts


def trace_foliation(
    w: QuadForm,
    branch: int = 0,
    seeds: int = 12,
    step: float = 1e-3,
    r_min: float = 0.05,
    r_max: float = 2.0,
    max_steps: int = 20000,
) -> CurveSet:
    """Integrate the chosen asymptotic branch from seed points on the unit
    circle, both directions, clipped to the annulus [r_min, r_max]."""
    if branch not in (0, 1):
        raise DomainError("branch selector must be 0 or 1")
    if seeds < 1:
        raise DomainError("need at least one seed")
    _, va, vb, vc = _float_coeffs(w)
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    curves: list[list[tuple[float, float]]] = []
    for i in range(seeds):
        phi = 2.0 * math.pi * ((i + golden * 0.5) / seeds)
        x, y = math.cos(phi), math.sin(phi)
        A = _eval_vec(va, x, y)
        B = _eval_vec(vb, x, y)
        C = _eval_vec(vc, x, y)
        theta = _directions_from_values(A, B, C, x, y)[branch]
        v0 = (math.cos(theta), math.sin(theta))
        for sign in (1.0, -1.0):
            vdir = (sign * v0[0], sign * v0[1])
            curves.append(
                _trace_leaf(va, vb, vc, (x, y), vdir, step, r_min, r_max, max_steps)
            )
    count, angles = count_separatrices(w)
    return CurveSet(curves, angles, count)


def hopf_model_form(m: int) -> QuadForm:
    """The reference form Im((dx + i dy)^2 (x + i y)^(m-2)).

    With U + iV = (x + i y)^(m-2) the coefficients are (V, U, -V).  Its
    alignment function on the unit circle is sin(m phi), so its separatrix
    count is m: the model the saddle family is isotopic to.
    """
    if m < 2:
        raise DomainError(f"model form needs m >= 2, got {m}")
    re, im = complex_power_parts(m - 2)
    return QuadForm(im, re, -im)


def reflected_form(w: QuadForm) -> QuadForm:
    """Pullback under the reflection (x, y) -> (y, x): swaps dx and dy and
    composes each coefficient with the swap."""
    return QuadForm(swap_xy(w.c), swap_xy(w.b), swap_xy(w.a))


def reflection_identity_holds(m: int) -> bool:
    """For odd m, the reflected second fundamental form of saddle_family(m)
    equals (-1)^((m-1)/2) * m(m-1) times the degree-m model form, exactly.

    The sign alternates with m mod 4 because composing the saddle with the
    swap gives (-1)^((m-1)/2) Im((x+iy)^m); both signs define the same
    foliation.
    """
    if m < 3 or m % 2 == 0:
        raise DomainError(f"reflection identity needs odd m >= 3, got {m}")
    from .polyalg import saddle_family
    from .quadform import second_fundamental_form

    lhs = reflected_form(second_fundamental_form(saddle_family(m)))
    sign = (-1) ** ((m - 1) // 2)
    rhs = hopf_model_form(m).scale(Fraction(sign * m * (m - 1)))
    return lhs == rhs


def curves_to_svg(cs: CurveSet, path: str, size: int = 640, r_max: float = 2.0) -> None:
    """One path element per curve; separatrix rays highlighted."""
    margin = 1.1
    scale = size / (2.0 * r_max * margin)

    def sx(x: float) -> float:
        return size / 2.0 + x * scale

    def sy(y: float) -> float:
        return size / 2.0 - y * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for curve in cs.curves:
        if len(curve) < 2:
            continue
        points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in curve)
        lines.append(
            f'<polyline points="{points}" fill="none" stroke="#336699" '
            f'stroke-width="1"/>'
        )
    for phi in cs.separatrix_angles:
        x0, y0 = 0.05 * math.cos(phi), 0.05 * math.sin(phi)
        x1, y1 = r_max * math.cos(phi), r_max * math.sin(phi)
        lines.append(
            f'<line x1="{sx(x0):.2f}" y1="{sy(y0):.2f}" x2="{sx(x1):.2f}" '
            f'y2="{sy(y1):.2f}" stroke="#cc3333" stroke-width="2"/>'
        )
    lines.append("</svg>")
    with open(path, "w") as handle:
        handle.write("\n".join(lines) + "\n")


def curves_to_csv(cs: CurveSet, path: str) -> None:
    """curve_id, x, y rows."""
    import csv

    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["curve_id", "x", "y"])
        for cid, curve in enumerate(cs.curves):
            for x, y in curve:
                writer.writerow([cid, f"{x:.9g}", f"{y:.9g}"])
