"""Shared generators and property drivers for the randomized suites."""
import random

from exactpoly.constructions import suspension_facet_map
from exactpoly.polytopes import (
    VPolytope,
    certify_vertices,
    dual_graph,
    extreme_indices,
    facet_enumeration,
    facet_enumeration_bruteforce,
)
from exactpoly.prismatoids import make_prismatoid
from exactpoly.rationals import Rat


def random_full_dim_points(rng, dim, n_points, spread=6):
    """Distinct integer points spanning the full dimension."""
    while True:
        pts = set()
        while len(pts) < n_points:
            pts.add(tuple(Rat(rng.randint(-spread, spread)) for _ in range(dim)))
        pts = tuple(sorted(pts, key=lambda p: tuple(int(c) for c in p)))
        try:
            hull = facet_enumeration(VPolytope(pts))
        except ValueError:
            continue
        if hull.dim == dim:
            return pts, hull


def random_polytope(rng, dim, max_points):
    """A certified random polytope: the extreme points of a random set."""
    pts, hull = random_full_dim_points(rng, dim, rng.randint(dim + 1, max_points))
    raw = VPolytope(pts)
    keep = extreme_indices(raw, hull)
    poly = VPolytope(tuple(pts[i] for i in keep))
    hull = facet_enumeration(poly)
    certify_vertices(poly, hull)
    return poly, hull


def random_prismatoid(rng, dim, max_base_points):
    """A prismatoid with full-dimensional bases at heights +1 and -1."""
    while True:
        top, _ = random_polytope(rng, dim - 1, max_base_points)
        bot, _ = random_polytope(rng, dim - 1, max_base_points)
        verts = tuple(p + (Rat(1),) for p in top.vertices) + tuple(
            p + (Rat(-1),) for p in bot.vertices
        )
        poly = VPolytope(verts)
        hull = facet_enumeration(poly)
        keys = [q.key for q in hull.hrep.inequalities]
        plus_key = (0,) * (dim - 1) + (1, 1)
        minus_key = (0,) * (dim - 1) + (-1, 1)
        try:
            pr = make_prismatoid(poly, hull, keys.index(plus_key), keys.index(minus_key))
        except ValueError:
            continue
        return pr, top, bot


def check_hull_against_oracle(poly):
    hull = facet_enumeration(poly)
    oracle = facet_enumeration_bruteforce(poly)
    got = tuple(q.key for q in hull.hrep.inequalities)
    want = tuple(q.key for q in oracle)
    assert got == want, f"hull/oracle mismatch: {got} vs {want}"


def check_suspension_distances(poly, hull, v):
    """Lifted dual distances dominate the originals, for every facet pair and
    both pyramid lifts."""
    S, hull_S, expected, idx_map, u_idx, w_idx = suspension_facet_map(poly, hull, v)
    by_kind = {}
    mask_to_new = {m: i for i, m in enumerate(hull_S.incidence.facet_masks)}
    for mask, (f, kind) in expected.items():
        by_kind[(f, kind)] = mask_to_new[mask]

    def lifts(f):
        if (f, "s") in by_kind:
            return (by_kind[(f, "s")],)
        return (by_kind[(f, "u")], by_kind[(f, "w")])

    g_old = dual_graph(poly, hull)
    g_new = dual_graph(S, hull_S)
    dist_new = [g_new.bfs_distances(i) for i in range(g_new.n)]
    m = hull.incidence.n_facets
    for f1 in range(m):
        dist_old = g_old.bfs_distances(f1)
        for f2 in range(f1, m):
            for a in lifts(f1):
                for b in lifts(f2):
                    assert dist_new[a][b] >= dist_old[f2]
