"""Exact facet enumeration for small rational polytopes.

Given a finite set of rational points, computes the facets of their convex
hull relative to its affine hull, via the polar dual: the dual polytope's
extreme rays are found with an incremental double description sweep, kept
exact with fractions.Fraction throughout.  Intended for the small
polytopes of admissible deterministic behaviours, not for bulk geometry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def _dot(a, b) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def _scaled(vec, factor):
    return tuple(v * factor for v in vec)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _primitive(vec):
    """Scale a rational vector to coprime integers, preserving direction."""
    denom_lcm = 1
    for v in vec:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(Fraction(0) for _ in vec)
    return tuple(Fraction(v, g) for v in ints)


def _solve_square(matrix, rhs):
    """Solve an n x n rational system by Gaussian elimination; None if singular."""
    n = len(matrix)
    m = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != ZERO), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != ZERO:
                factor = m[r][col]
                m[r] = [v - factor * p for v, p in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def _affine_coordinates(points):
    """Coordinates of the points relative to a basis of their affine hull.

    Returns (coords, to_original) where to_original maps a linear
    functional u over the reduced space to (coeffs, offset) with
    u . coords(p) = coeffs . p + offset for every original point p.
    """
    origin = points[0]
    dim = len(origin)
    basis = []
    echelon = []
    for p in points[1:]:
        d = list(_sub(p, origin))
        vec = list(d)
        for piv_col, row in echelon:
            if vec[piv_col] != ZERO:
                factor = vec[piv_col]
                vec = [v - factor * w for v, w in zip(vec, row)]
        piv = next((c for c in range(dim) if vec[c] != ZERO), None)
        if piv is not None:
            echelon.append((piv, [v / vec[piv] for v in vec]))
            basis.append(tuple(d))
    r = len(basis)
    if r == 0:
        return [tuple()] * len(points), None

    # Left inverse G of the basis matrix M (columns = basis vectors):
    # coords(p) = G (p - origin), with G = (M^T M)^(-1) M^T.
    gram = [[_dot(bi, bj) for bj in basis] for bi in basis]
    g_rows = []
    for k in range(r):
        unit = [ONE if i == k else ZERO for i in range(r)]
        col = _solve_square(gram, unit)
        g_rows.append(col)
    # G[i] = sum_k g_rows[i][k] * basis[k]  (an r x dim matrix)
    G = [
        tuple(sum(g_rows[i][k] * basis[k][c] for k in range(r)) for c in range(dim))
        for i in range(r)
    ]

    coords = [tuple(_dot(G[i], _sub(p, origin)) for i in range(r)) for p in points]

    def to_original(u):
        coeffs = tuple(sum(u[i] * G[i][c] for i in range(r)) for c in range(dim))
        offset = -_dot(coeffs, origin)
        return coeffs, offset

    return coords, to_original


def _extreme_rays(halfspaces, dim):
    """Extreme rays of the cone {x : a . x >= 0 for all a}, assumed pointed
    and full-dimensional once all halfspaces are processed."""
    # Exhaust the lineality first: pick a spanning subset of constraint
    # normals and process them before the rest, so ray splitting only ever
    # happens on a pointed cone where the combinatorial adjacency test is
    # sound.
    order = []
    rest = []
    echelon = []
    for a in halfspaces:
        vec = list(a)
        for piv_col, row in echelon:
            if vec[piv_col] != ZERO:
                factor = vec[piv_col]
                vec = [v - factor * w for v, w in zip(vec, row)]
        piv = next((c for c in range(dim) if vec[c] != ZERO), None)
        if piv is not None and len(echelon) < dim:
            echelon.append((piv, [v / vec[piv] for v in vec]))
            order.append(a)
        else:
            rest.append(a)
    if len(echelon) < dim:
        raise ValueError("cone is not pointed: constraint normals do not span")
    order += rest

    lineality = [tuple(ONE if i == k else ZERO for i in range(dim)) for k in range(dim)]
    rays: list[tuple[Fraction, ...]] = []
    processed: list[tuple[Fraction, ...]] = []

    for a in order:
        piv_idx = next(
            (k for k, l in enumerate(lineality) if _dot(a, l) != ZERO), None
        )
        if piv_idx is not None:
            piv = lineality.pop(piv_idx)
            if _dot(a, piv) < ZERO:
                piv = _scaled(piv, -ONE)
            da = _dot(a, piv)
            lineality = [
                _primitive(_sub(l, _scaled(piv, _dot(a, l) / da))) for l in lineality
            ]
            lineality = [l for l in lineality if any(v != ZERO for v in l)]
            rays = [
                _primitive(_sub(r, _scaled(piv, _dot(a, r) / da))) for r in rays
            ]
            rays = [r for r in rays if any(v != ZERO for v in r)]
            rays.append(_primitive(piv))
            rays = list(dict.fromkeys(rays))
        else:
            vals = [_dot(a, r) for r in rays]
            if all(v >= ZERO for v in vals):
                processed.append(a)
                continue
            zero_sets = [
                frozenset(k for k, c in enumerate(processed) if _dot(c, r) == ZERO)
                for r in rays
            ]
            keep = [r for r, v in zip(rays, vals) if v >= ZERO]
            new = []
            for ip, rp in enumerate(rays):
                if vals[ip] <= ZERO:
                    continue
                for ineg, rn in enumerate(rays):
                    if vals[ineg] >= ZERO:
                        continue
                    common = zero_sets[ip] & zero_sets[ineg]
                    adjacent = True
                    for io, ro in enumerate(rays):
                        if io in (ip, ineg):
                            continue
                        if common <= zero_sets[io]:
                            adjacent = False
                            break
                    if adjacent:
                        combo = _sub(
                            _scaled(rn, vals[ip]), _scaled(rp, vals[ineg])
                        )
                        new.append(_primitive(combo))
            rays = list(dict.fromkeys(keep + new))
        processed.append(a)

    if lineality:
        raise ValueError("cone has nontrivial lineality; polytope input was degenerate")
    return rays


def facet_inequalities(points):
    """Facets of conv(points) relative to its affine hull.

    Points are equal-length tuples of Fractions.  Returns a list of
    (coefficients, bound) pairs, each meaning coefficients . x >= bound for
    every point of the hull, tight on a facet.  A single point has no
    facets and yields [].
    """
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if not pts:
        raise ValueError("no points given")
    if len(pts) == 1:
        return []

    coords, to_original = _affine_coordinates(pts)
    r = len(coords[0])
    n = len(pts)
    centroid = tuple(sum(c[i] for c in coords) / n for i in range(r))
    shifted = [tuple(c[i] - centroid[i] for i in range(r)) for c in coords]

    # Polar dual: vertices of {y : q . y <= 1 for all shifted q} are the
    # facets of the original hull.  Homogenize with a slack coordinate s.
    halfspaces = [tuple(-qi for qi in q) + (ONE,) for q in shifted]
    halfspaces.append((ZERO,) * r + (ONE,))
    rays = _extreme_rays(halfspaces, r + 1)

    facets = []
    seen = set()
    for ray in rays:
        y, s = ray[:-1], ray[-1]
        if s <= ZERO:
            raise ValueError("unbounded polar dual; centroid was not interior")
        u = tuple(v / s for v in y)
        # u . (coords(p) - centroid) <= 1  becomes  coeffs . p >= bound.
        lin, offset = to_original(u)
        bound_shift = ONE + _dot(u, centroid) - offset
        coeffs = tuple(-c for c in lin)
        bound = -bound_shift
        key = _primitive(coeffs + (bound,))
        if key not in seen:
            seen.add(key)
            facets.append((coeffs, bound))
    return facets
