from fractions import Fraction
from itertools import combinations, product

from causal_transfer.hull import facet_inequalities

F = Fraction


def pts(raw):
    return [tuple(F(v) for v in p) for p in raw]


def satisfied(points, facets):
    return all(
        sum(c * x for c, x in zip(coeffs, p)) >= bound
        for p in points
        for coeffs, bound in facets
    )


def tight_count(point, facets):
    return sum(
        1
        for coeffs, bound in facets
        if sum(c * x for c, x in zip(coeffs, point)) == bound
    )


def brute_force_facets(points, dim):
    """Independent oracle: hyperplanes through affinely independent point
    subsets with all points on one side."""
    found = set()
    n = len(points[0])
    for subset in combinations(points, dim):
        # hyperplane coeffs via null space of the difference matrix
        base = subset[0]
        diffs = [tuple(a - b for a, b in zip(p, base)) for p in subset[1:]]
        # solve diffs . normal = 0 with one free scale; use Gaussian elimination
        cols = n
        m = [list(d) for d in diffs]
        pivots = []
        r = 0
        for c in range(cols):
            piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            m[r] = [v / m[r][c] for v in m[r]]
            for k in range(len(m)):
                if k != r and m[k][c] != 0:
                    f = m[k][c]
                    m[k] = [v - f * w for v, w in zip(m[k], m[r])]
            pivots.append(c)
            r += 1
        free = [c for c in range(cols) if c not in pivots]
        for fc in free:
            normal = [F(0)] * cols
            normal[fc] = F(1)
            for row, pc in zip(m, pivots):
                normal[pc] = -row[fc]
            bound = sum(c * x for c, x in zip(normal, base))
            vals = [sum(c * x for c, x in zip(normal, p)) for p in points]
            if all(v >= bound for v in vals) and any(v > bound for v in vals):
                # normalize
                from math import gcd

                den = 1
                for v in normal + [bound]:
                    den = den * v.denominator // gcd(den, v.denominator)
                ints = [int(v * den) for v in normal + [bound]]
                g = 0
                for v in ints:
                    g = gcd(g, abs(v))
                ints = [v // g for v in ints]
                found.add(tuple(ints))
            elif all(v <= bound for v in vals) and any(v < bound for v in vals):
                from math import gcd

                den = 1
                for v in normal + [bound]:
                    den = den * v.denominator // gcd(den, v.denominator)
                ints = [int(-v * den) for v in normal + [bound]]
                g = 0
                for v in ints:
                    g = gcd(g, abs(v))
                ints = [v // g for v in ints]
                found.add(tuple(ints))
    return found


def normalize(facets):
    from math import gcd

    out = set()
    for coeffs, bound in facets:
        den = 1
        for v in list(coeffs) + [bound]:
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(v * den) for v in list(coeffs) + [bound]]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        out.add(tuple(v // g for v in ints))
    return out


def test_unit_square():
    square = pts([(0, 0), (1, 0), (0, 1), (1, 1)])
    facets = facet_inequalities(square)
    assert len(facets) == 4
    assert satisfied(square, facets)
    # every corner lies on exactly two facets
    assert all(tight_count(p, facets) == 2 for p in square)


def test_triangle_with_interior_point():
    tri = pts([(0, 0), (4, 0), (0, 4), (1, 1)])
    facets = facet_inequalities(tri)
    assert len(facets) == 3
    assert satisfied(tri, facets)
    assert tight_count(pts([(1, 1)])[0], facets) == 0


def test_segment_embedded_in_3d():
    seg = pts([(0, 0, 0), (2, 2, 0)])
    facets = facet_inequalities(seg)
    assert len(facets) == 2
    assert satisfied(seg, facets)


def test_single_point_has_no_facets():
    assert facet_inequalities(pts([(3, 1)])) == []


def test_cube_matches_brute_force():
    cube = pts(list(product((0, 1), repeat=3)))
    facets = facet_inequalities(cube)
    assert len(facets) == 6
    assert normalize(facets) == brute_force_facets(cube, 3)


def test_octahedron():
    octa = pts(
        [
            (1, 0, 0),
            (-1, 0, 0),
            (0, 1, 0),
            (0, -1, 0),
            (0, 0, 1),
            (0, 0, -1),
        ]
    )
    facets = facet_inequalities(octa)
    assert len(facets) == 8
    assert normalize(facets) == brute_force_facets(octa, 3)


def test_duplicate_points_ignored():
    square = pts([(0, 0), (1, 0), (0, 1), (1, 1), (1, 1), (0, 0)])
    assert len(facet_inequalities(square)) == 4


def test_random_point_sets_match_brute_force():
    import random

    rng = random.Random(base := 2024)
    for trial in range(20):
        dim = rng.choice((2, 3))
        n = rng.randrange(dim + 1, dim + 6)
        points = [
            tuple(F(rng.randrange(-4, 5), rng.randrange(1, 3)) for _ in range(dim))
            for _ in range(n)
        ]
        # force full dimension by including a simplex
        points += [tuple(F(3 if k == m else 0) for k in range(dim)) for m in range(dim)]
        points.append(tuple(F(-3) for _ in range(dim)))
        facets = facet_inequalities(points)
        assert satisfied(points, facets)
        assert normalize(facets) == brute_force_facets(
            list(dict.fromkeys(points)), dim
        )


def test_lower_dimensional_random_sets():
    # polytopes embedded in a hyperplane: facets are relative to the
    # affine hull and must still be valid and tight somewhere
    import random

    rng = random.Random(7)
    for trial in range(10):
        raw = [
            (F(rng.randrange(-3, 4)), F(rng.randrange(-3, 4)))
            for _ in range(5)
        ]
        # lift into 4d on an affine plane
        points = [(x, y, x + 2 * y + 1, x - y) for x, y in raw]
        facets = facet_inequalities(points)
        assert satisfied(points, facets)
        for coeffs, bound in facets:
            assert any(
                sum(c * v for c, v in zip(coeffs, p)) == bound for p in points
            )
