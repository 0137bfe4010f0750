"""The 5-dimensional prismatoid of width 6 on 48 vertices.

This module embeds the vertex coordinates, the 22 representative facet
inequality families (expanded by sign patterns to all 322 facets), the
symmetry groups of order 32 and 64, and the verification suite showing that
the polytope is a prismatoid of width 6 — i.e. without the d-step property —
whose polar is a 5-spindle of length 6.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .geometry import Inequality, OrthMap, affine_rank, smul, vadd, vsub
from .graphs import Graph
from .polytopes import (
    Hull,
    VPolytope,
    dual_graph,
    facet_enumeration,
    iter_bits,
)
from .prismatoids import Prismatoid, make_prismatoid
from .rationals import Rat, format_rat
from .report import Report

# vertex coordinates: (x1..x4) at height x5 = +1 and x5 = -1
_PLUS = (
    (18, 0, 0, 0), (-18, 0, 0, 0), (0, 18, 0, 0), (0, -18, 0, 0),
    (0, 0, 45, 0), (0, 0, -45, 0), (0, 0, 0, 45), (0, 0, 0, -45),
    (15, 15, 0, 0), (-15, 15, 0, 0), (15, -15, 0, 0), (-15, -15, 0, 0),
    (0, 0, 30, 30), (0, 0, -30, 30), (0, 0, 30, -30), (0, 0, -30, -30),
    (0, 10, 40, 0), (0, -10, 40, 0), (0, 10, -40, 0), (0, -10, -40, 0),
    (10, 0, 0, 40), (-10, 0, 0, 40), (10, 0, 0, -40), (-10, 0, 0, -40),
)
_MINUS = (
    (0, 0, 0, 18), (0, 0, 0, -18), (0, 0, 18, 0), (0, 0, -18, 0),
    (45, 0, 0, 0), (-45, 0, 0, 0), (0, 45, 0, 0), (0, -45, 0, 0),
    (0, 0, 15, 15), (0, 0, 15, -15), (0, 0, -15, 15), (0, 0, -15, -15),
    (30, 30, 0, 0), (-30, 30, 0, 0), (30, -30, 0, 0), (-30, -30, 0, 0),
    (40, 0, 10, 0), (40, 0, -10, 0), (-40, 0, 10, 0), (-40, 0, -10, 0),
    (0, 40, 0, 10), (0, 40, 0, -10), (0, -40, 0, 10), (0, -40, 0, -10),
)

EXPECTED_FACET_COUNT = 322

# facet families: (letter, primed, ((coef, axis), ...) in sign-slot order,
# x5 coefficient, right-hand side).  The sign subscript e = (e1..e4) of a
# family member multiplies the listed terms in order.
_Q = Rat
_FAMILIES = (
    ("B", False, ((_Q(5), 0), (_Q(1), 1), (_Q(2), 2), (_Q(1), 3)), _Q(135, 2), _Q(315, 2)),
    ("B", True, ((_Q(5), 1), (_Q(1), 0), (_Q(2), 3), (_Q(1), 2)), _Q(135, 2), _Q(315, 2)),
    ("C", False, ((_Q(4), 0), (_Q(2), 1), (_Q(7, 4), 2), (_Q(5, 4), 3)), _Q(45), _Q(135)),
    ("C", True, ((_Q(4), 1), (_Q(2), 0), (_Q(7, 4), 3), (_Q(5, 4), 2)), _Q(45), _Q(135)),
    ("D", False, ((_Q(4), 0), (_Q(1), 1), (_Q(2), 2), (_Q(1), 3)), _Q(45), _Q(135)),
    ("D", True, ((_Q(4), 1), (_Q(1), 0), (_Q(2), 3), (_Q(1), 2)), _Q(45), _Q(135)),
    ("E", False, ((_Q(3), 0), (_Q(3, 2), 1), (_Q(3, 2), 2), (_Q(1), 3)), _Q(30), _Q(105)),
    ("E", True, ((_Q(3), 1), (_Q(3, 2), 0), (_Q(3, 2), 3), (_Q(1), 2)), _Q(30), _Q(105)),
    ("F", False, ((_Q(2), 0), (_Q(1), 1), (_Q(1), 2), (_Q(1), 3)), _Q(15), _Q(75)),
    ("F", True, ((_Q(2), 1), (_Q(1), 0), (_Q(1), 3), (_Q(1), 2)), _Q(15), _Q(75)),
    ("G", False, ((_Q(2), 2), (_Q(1), 3), (_Q(1), 1), (_Q(1), 0)), _Q(-15), _Q(75)),
    ("G", True, ((_Q(2), 3), (_Q(1), 2), (_Q(1), 0), (_Q(1), 1)), _Q(-15), _Q(75)),
    ("H", False, ((_Q(3), 2), (_Q(3, 2), 3), (_Q(3, 2), 1), (_Q(1), 0)), _Q(-30), _Q(105)),
    ("H", True, ((_Q(3), 3), (_Q(3, 2), 2), (_Q(3, 2), 0), (_Q(1), 1)), _Q(-30), _Q(105)),
    ("I", False, ((_Q(4), 2), (_Q(1), 3), (_Q(2), 1), (_Q(1), 0)), _Q(-45), _Q(135)),
    ("I", True, ((_Q(4), 3), (_Q(1), 2), (_Q(2), 0), (_Q(1), 1)), _Q(-45), _Q(135)),
    ("J", False, ((_Q(4), 2), (_Q(2), 3), (_Q(7, 4), 1), (_Q(5, 4), 0)), _Q(-45), _Q(135)),
    ("J", True, ((_Q(4), 3), (_Q(2), 2), (_Q(7, 4), 0), (_Q(5, 4), 1)), _Q(-45), _Q(135)),
    ("K", False, ((_Q(5), 2), (_Q(1), 3), (_Q(2), 1), (_Q(1), 0)), _Q(-135, 2), _Q(315, 2)),
    ("K", True, ((_Q(5), 3), (_Q(1), 2), (_Q(2), 0), (_Q(1), 1)), _Q(-135, 2), _Q(315, 2)),
)

_SIGNS = tuple(
    (s0, s1, s2, s3)
    for s0 in (1, -1)
    for s1 in (1, -1)
    for s2 in (1, -1)
    for s3 in (1, -1)
)

# Table-of-incidences data for the five representative facets: label ->
# (tight vertex labels, expected inequality as canonical integer key)
REPRESENTATIVE_FACETS = {
    "B++++": (("1+", "5+", "9+", "13+", "17+", "21+", "5-"), (10, 2, 4, 2, 135, 315)),
    "C++++": (("9+", "13+", "17+", "21+", "5-", "13-"), (16, 8, 7, 5, 180, 540)),
    "D++++": (("5+", "13+", "17+", "5-", "17-"), (4, 1, 2, 1, 45, 135)),
    "E++++": (("13+", "17+", "5-", "13-", "17-"), (6, 3, 3, 2, 60, 210)),
    "F++++": (("13+", "21+", "5-", "13-", "17-"), (2, 1, 1, 1, 15, 75)),
}

# neighbor lists of the representative facets in the dual graph
REPRESENTATIVE_NEIGHBORS = {
    "B++++": ("A", "B+-++", "B++-+", "B+++-", "C++++", "D++++"),
    "C++++": ("B++++", "C++-+", "C+++-", "C'++++", "E++++", "F++++"),
    "D++++": ("B++++", "D+-++", "D+++-", "E++++", "G++++"),
    "E++++": ("C++++", "D++++", "E+++-", "F++++", "G++++"),
    "F++++": ("C++++", "E++++", "F+-++", "H'++++", "I'++++"),
}

# bi-dimension (dim F ∩ Q+, dim F ∩ Q-) of each non-base facet family
FAMILY_BIDIMENSION = {
    "B": (3, 0), "C": (2, 1), "D": (2, 1), "E": (1, 2), "F": (1, 2),
    "G": (2, 1), "H": (2, 1), "I": (1, 2), "J": (1, 2), "K": (0, 3),
}

# quotient letter adjacency implied by the five lists plus the base swap
SIGMA_ORBIT_PAIRS = (("A", "L"), ("B", "K"), ("C", "J"), ("D", "I"), ("E", "H"), ("F", "G"))


def vertex_labels():
    return tuple(f"{i + 1}+" for i in range(24)) + tuple(f"{i + 1}-" for i in range(24))


def vertices48(mutate: Optional[dict] = None) -> VPolytope:
    """The 48 labeled vertices; `mutate` maps (vertex, coord) -> added int."""
    rows = [tuple(Rat(c) for c in p) + (Rat(1),) for p in _PLUS]
    rows += [tuple(Rat(c) for c in p) + (Rat(-1),) for p in _MINUS]
    if mutate:
        for (i, j), delta in mutate.items():
            r = list(rows[i])
            r[j] += delta
            rows[i] = tuple(r)
    return VPolytope(tuple(rows), vertex_labels())


def base_plus() -> VPolytope:
    """The top base as a 4-polytope (last coordinate dropped)."""
    return VPolytope(
        tuple(tuple(Rat(c) for c in p) for p in _PLUS),
        tuple(f"{i + 1}+" for i in range(24)),
    )


def base_minus() -> VPolytope:
    return VPolytope(
        tuple(tuple(Rat(c) for c in p) for p in _MINUS),
        tuple(f"{i + 1}-" for i in range(24)),
    )


@dataclass(frozen=True)
class FacetLabel:
    letter: str
    primed: bool = False
    signs: Optional[tuple] = None

    def __str__(self):
        if self.signs is None:
            return self.letter
        marks = "".join("+" if s > 0 else "-" for s in self.signs)
        return f"{self.letter}{chr(39) if self.primed else ''}{marks}"


def parse_facet_label(text: str) -> FacetLabel:
    if text in ("A", "L"):
        return FacetLabel(text)
    letter = text[0]
    rest = text[1:]
    primed = rest.startswith("'")
    if primed:
        rest = rest[1:]
    signs = tuple(1 if ch == "+" else -1 for ch in rest)
    return FacetLabel(letter, primed, signs)


def _family_inequality(terms, x5, rhs, signs) -> Inequality:
    coeffs = [Rat(0)] * 5
    for (coef, axis), s in zip(terms, signs):
        coeffs[axis] = coef * s
    coeffs[4] = x5
    return Inequality(tuple(coeffs), rhs).canonical()


def expected_facets():
    """All 322 facets as {canonical integer key: FacetLabel}."""
    out = {
        (0, 0, 0, 0, 1, 1): FacetLabel("A"),
        (0, 0, 0, 0, -1, 1): FacetLabel("L"),
    }
    for letter, primed, terms, x5, rhs in _FAMILIES:
        for signs in _SIGNS:
            q = _family_inequality(terms, x5, rhs, signs)
            key = q.key
            if key in out:
                raise AssertionError(f"duplicate expanded facet {key}")
            out[key] = FacetLabel(letter, primed, signs)
    if len(out) != EXPECTED_FACET_COUNT:
        raise AssertionError(f"expanded {len(out)} facets, expected {EXPECTED_FACET_COUNT}")
    return out


_PRISMATOID_CACHE = {}


def width6_prismatoid(refresh: bool = False) -> Prismatoid:
    """The verified width-6 prismatoid (hull cached per process)."""
    if refresh or "pr" not in _PRISMATOID_CACHE:
        poly = vertices48()
        hull = facet_enumeration(poly)
        keys = [q.key for q in hull.hrep.inequalities]
        bp = keys.index((0, 0, 0, 0, 1, 1))
        bm = keys.index((0, 0, 0, 0, -1, 1))
        _PRISMATOID_CACHE["pr"] = make_prismatoid(poly, hull, bp, bm)
    return _PRISMATOID_CACHE["pr"]


# ---------------------------------------------------------------------------
# symmetry groups


@dataclass(frozen=True)
class SymmetryGroup:
    maps: tuple
    vertex_perms: tuple

    @property
    def order(self) -> int:
        return len(self.maps)


def _vertex_permutation(m: OrthMap, poly: VPolytope):
    index = {p: i for i, p in enumerate(poly.vertices)}
    perm = []
    for p in poly.vertices:
        q = m.apply_point(p)
        if q not in index:
            raise ValueError("map does not permute the vertex set")
        perm.append(index[q])
    return tuple(perm)


def _close_group(generators, poly: VPolytope) -> SymmetryGroup:
    seen = {}
    frontier = [OrthMap.identity(poly.ambient_dim)]
    seen[frontier[0].key] = frontier[0]
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                prod = h.compose(g)
                if prod.key not in seen:
                    seen[prod.key] = prod
                    nxt.append(prod)
        frontier = nxt
    maps = tuple(sorted(seen.values(), key=lambda m: m.key))
    return SymmetryGroup(maps, tuple(_vertex_permutation(m, poly) for m in maps))


def base_swap_map() -> OrthMap:
    """The symmetry exchanging the bases, sending vertex i+ to i-."""
    return OrthMap.from_rows(
        (
            (0, 0, 1, 0, 0),
            (0, 0, 0, 1, 0),
            (0, 1, 0, 0, 0),
            (1, 0, 0, 0, 0),
            (0, 0, 0, 0, -1),
        )
    )


def symmetry_groups(poly: Optional[VPolytope] = None):
    """(full group of order 64, base-preserving subgroup of order 32)."""
    if poly is None:
        poly = vertices48()
    gens_plus = []
    for axis in range(4):
        rows = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
        rows[axis][axis] = -1
        gens_plus.append(OrthMap.from_rows(rows))
    gens_plus.append(
        OrthMap.from_rows(
            (
                (0, 1, 0, 0, 0),
                (1, 0, 0, 0, 0),
                (0, 0, 0, 1, 0),
                (0, 0, 1, 0, 0),
                (0, 0, 0, 0, 1),
            )
        )
    )
    sigma_plus = _close_group(gens_plus, poly)
    sigma = _close_group(list(gens_plus) + [base_swap_map()], poly)
    return sigma, sigma_plus


# ---------------------------------------------------------------------------
# labeling and orbits


def facet_labels(hull: Hull):
    """Index -> FacetLabel for the enumerated facets; fails on any mismatch."""
    table = expected_facets()
    labels = []
    for q in hull.hrep.inequalities:
        lbl = table.get(q.key)
        if lbl is None:
            raise ValueError(f"facet {q.key} matches no expected family")
        labels.append(lbl)
    if len(labels) != len(table):
        raise ValueError("facet count differs from the expected 322")
    return tuple(labels)


def facet_permutation(m: OrthMap, hull: Hull):
    """The permutation a symmetry induces on the facet list."""
    index = {q.key: i for i, q in enumerate(hull.hrep.inequalities)}
    perm = []
    for q in hull.hrep.inequalities:
        img = m.apply_ineq(q)
        if img.key not in index:
            raise ValueError("map does not permute the facet set")
        perm.append(index[img.key])
    return tuple(perm)


def facet_orbits(group: SymmetryGroup, hull: Hull):
    """Partition of facet indices under the group, sorted by smallest member."""
    perms = [facet_permutation(m, hull) for m in group.maps]
    n = hull.incidence.n_facets
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            f = frontier.pop()
            for perm in perms:
                g = perm[f]
                if g not in orbit:
                    orbit.add(g)
                    frontier.append(g)
        for f in orbit:
            seen[f] = True
        orbits.append(tuple(sorted(orbit)))
    return tuple(sorted(orbits))


def orbit_adjacency_graph(hull: Hull, graph: Graph, orbits):
    """Quotient of the dual graph by a facet-orbit partition.

    Returns (Graph over orbit indices, orbit index per facet).
    """
    which = {}
    for oi, orbit in enumerate(orbits):
        for f in orbit:
            which[f] = oi
    edges = set()
    for a, b in graph.edges:
        oa, ob = which[a], which[b]
        if oa != ob:
            edges.add((min(oa, ob), max(oa, ob)))
    return Graph(len(orbits), sorted(edges)), which


# ---------------------------------------------------------------------------
# verification checks


def _label_index(hull: Hull, labels) -> dict:
    return {str(lbl): i for i, lbl in enumerate(labels)}


def check_facet_census(hull: Hull) -> Report:
    rep = Report("facet census")
    got = {q.key for q in hull.hrep.inequalities}
    want = set(expected_facets())
    rep.add("facet count", len(got) == EXPECTED_FACET_COUNT, f"{len(got)}")
    rep.add(
        "facet set equals expanded table",
        got == want,
        f"missing={len(want - got)} extra={len(got - want)}",
    )
    return rep


def check_representative_facets(poly: VPolytope, hull: Hull, labels) -> Report:
    """Tight vertex sets of the five representative facets, their ranks, and
    the facet shapes (three simplices, one 6-vertex, one 7-vertex facet)."""
    rep = Report("representative facets")
    by_label = _label_index(hull, labels)
    lbl_of_vertex = poly.labels
    for name, (tight_labels, key) in REPRESENTATIVE_FACETS.items():
        f = by_label[name]
        rep.add(f"{name} inequality", hull.hrep.inequalities[f].key == key, str(key))
        got = tuple(sorted(lbl_of_vertex[v] for v in iter_bits(hull.incidence.facet_masks[f])))
        want = tuple(sorted(tight_labels))
        rep.add(f"{name} tight set", got == want, " ".join(got))
        pts = [poly.vertices[v] for v in iter_bits(hull.incidence.facet_masks[f])]
        rep.add(f"{name} affine rank", affine_rank(pts) == 4, str(affine_rank(pts)))
    for name, count in (("B++++", 7), ("C++++", 6), ("D++++", 5), ("E++++", 5), ("F++++", 5)):
        f = by_label[name]
        rep.add(
            f"{name} vertex count",
            hull.incidence.facet_masks[f].bit_count() == count,
            str(count),
        )
    return rep


def check_prism_collinearities(poly: Optional[VPolytope] = None) -> Report:
    """The three rays of the representative prism collide at o, and the
    quadrilateral identity 2 v9+ + 4 v13+ = 3 v17+ + 3 v21+ holds."""
    if poly is None:
        poly = vertices48()
    rep = Report("prism structure")
    idx = {lbl: i for i, lbl in enumerate(poly.labels)}

    def v(lbl):
        return poly.vertices[idx[lbl]]

    def fmt(p):
        return "(" + ",".join(format_rat(c) for c in p) + ")"

    o = tuple(Rat(c) for c in (-30, 0, 120, 0, 1))
    e1 = vsub(smul(Rat(8, 3), v("5+")), smul(Rat(5, 3), v("1+")))
    e2 = vsub(smul(Rat(3), v("17+")), smul(Rat(2), v("9+")))
    e3 = vsub(smul(Rat(4), v("13+")), smul(Rat(3), v("21+")))
    rep.add("ray 1+5+ hits o", e1 == o, fmt(e1))
    rep.add("ray 9+17+ hits o", e2 == o, fmt(e2))
    rep.add("ray 21+13+ hits o", e3 == o, fmt(e3))
    quad_l = vadd(smul(Rat(2), v("9+")), smul(Rat(4), v("13+")))
    quad_r = vadd(smul(Rat(3), v("17+")), smul(Rat(3), v("21+")))
    rep.add("quadrilateral identity", quad_l == quad_r, fmt(quad_l))
    return rep


def check_symmetries(poly: VPolytope, hull: Hull) -> Report:
    rep = Report("symmetry groups")
    sigma, sigma_plus = symmetry_groups(poly)
    rep.add("order of full group", sigma.order == 64, str(sigma.order))
    rep.add("order of base-preserving subgroup", sigma_plus.order == 32, str(sigma_plus.order))
    swap = base_swap_map()
    perm = _vertex_permutation(swap, poly)
    ok = all(perm[i] == i + 24 for i in range(24))
    rep.add("base swap sends i+ to i-", ok, "")
    sq = swap.compose(swap)
    rep.add(
        "base swap is not an involution",
        sq.key != OrthMap.identity(5).key and sq.key in {m.key for m in sigma_plus.maps},
        "square is a nontrivial base-preserving element",
    )
    try:
        for m in sigma.maps:
            facet_permutation(m, hull)
        rep.add("every element permutes the facet set", True, "64 maps")
    except ValueError as exc:
        rep.add("every element permutes the facet set", False, str(exc))
    return rep


def check_orbits(poly: VPolytope, hull: Hull, labels) -> Report:
    rep = Report("facet orbits")
    sigma, sigma_plus = symmetry_groups(poly)
    orb_plus = facet_orbits(sigma_plus, hull)
    sizes = sorted(len(o) for o in orb_plus)
    rep.add(
        "orbit sizes under the base-preserving group",
        sizes == [1, 1] + [32] * 10,
        str(sizes),
    )
    letter_of = [lbl.letter for lbl in labels]
    for orbit in orb_plus:
        letters = {letter_of[f] for f in orbit}
        rep.add(
            f"orbit of {labels[orbit[0]]} has one letter",
            len(letters) == 1,
            "".join(sorted(letters)),
        )
    orb_full = facet_orbits(sigma, hull)
    pairing = sorted("".join(sorted({letter_of[f] for f in o})) for o in orb_full)
    want = sorted("".join(sorted(pair)) for pair in SIGMA_ORBIT_PAIRS)
    rep.add("six full-group orbits pair the letters", pairing == want, " ".join(pairing))
    return rep


def check_neighbor_lists(poly: VPolytope, hull: Hull, labels, graph: Graph) -> Report:
    rep = Report("representative neighbor lists")
    by_label = _label_index(hull, labels)
    for name, wanted in REPRESENTATIVE_NEIGHBORS.items():
        f = by_label[name]
        got = tuple(sorted(str(labels[g]) for g in graph.adj[f]))
        rep.add(f"neighbors of {name}", got == tuple(sorted(wanted)), " ".join(got))
    return rep


def check_width(pr: Prismatoid, graph: Graph) -> Report:
    rep = Report("width")
    dist = graph.distance(pr.base_plus, pr.base_minus)
    rep.add("dual distance between bases", dist == 6, str(dist))
    path = graph.shortest_path(pr.base_plus, pr.base_minus)
    rep.add("a six-step path exists", len(path) == 7, "->".join(str(i) for i in path))
    rep.add("no five-step path exists", dist > 5, f"BFS minimum is {dist}")
    rep.add("d-step property fails", dist > pr.dim, f"width {dist} > dim {pr.dim}")
    return rep


def check_orbit_quotient(poly: VPolytope, hull: Hull, labels, graph: Graph) -> Report:
    """Quotient adjacency by base-preserving orbits, its A-to-L distance, and
    the bi-dimension bands."""
    rep = Report("orbit quotient")
    _, sigma_plus = symmetry_groups(poly)
    orbits = facet_orbits(sigma_plus, hull)
    q, which = orbit_adjacency_graph(hull, graph, orbits)
    name_of = {oi: str(labels[orbit[0]].letter) for oi, orbit in enumerate(orbits)}
    by_label = _label_index(hull, labels)
    a_node = which[by_label["A"]]
    l_node = which[by_label["L"]]
    rep.add("quotient distance A to L", q.distance(a_node, l_node) == 6, str(q.distance(a_node, l_node)))
    # bi-dimension bands per letter
    plus_mask = hull.incidence.facet_masks[by_label["A"]]
    minus_mask = hull.incidence.facet_masks[by_label["L"]]
    bands_ok = True
    detail = []
    for f, lbl in enumerate(labels):
        if lbl.letter in ("A", "L"):
            continue
        m = hull.incidence.facet_masks[f]
        dp = affine_rank([poly.vertices[v] for v in iter_bits(m & plus_mask)])
        dm = affine_rank([poly.vertices[v] for v in iter_bits(m & minus_mask)])
        if (dp, dm) != FAMILY_BIDIMENSION[lbl.letter]:
            bands_ok = False
            detail.append(f"{lbl}:{(dp, dm)}")
    rep.add("bi-dimension bands match the families", bands_ok, " ".join(detail) or "all 320")
    return rep


def verify_counterexample(full: bool = True, poly: Optional[VPolytope] = None) -> Report:
    """The complete verification suite; `full` adds the normal-fan sections."""
    from . import normalfans

    rep = Report("width-6 prismatoid")
    if poly is None:
        poly = vertices48()
    hull = facet_enumeration(poly)
    rep.merge(check_facet_census(hull))
    if not rep.passed:
        return rep
    labels = facet_labels(hull)
    keys = [q.key for q in hull.hrep.inequalities]
    pr = make_prismatoid(
        poly, hull, keys.index((0, 0, 0, 0, 1, 1)), keys.index((0, 0, 0, 0, -1, 1))
    )
    graph = dual_graph(poly, hull)
    rep.merge(check_representative_facets(poly, hull, labels))
    rep.merge(check_prism_collinearities(poly))
    rep.merge(check_symmetries(poly, hull))
    rep.merge(check_orbits(poly, hull, labels))
    rep.merge(check_neighbor_lists(poly, hull, labels, graph))
    rep.merge(check_width(pr, graph))
    rep.merge(check_orbit_quotient(poly, hull, labels, graph))
    rep.merge(normalfans.check_spindle_polar(poly, hull))
    if full:
        rep.merge(normalfans.check_base_structure())
        rep.merge(normalfans.check_minkowski_section(pr, graph, labels))
    return rep


def verify_quick(poly: VPolytope) -> Report:
    """Cheap subset used by mutation tests: census only."""
    rep = Report("width-6 prismatoid (quick)")
    try:
        hull = facet_enumeration(poly)
    except ValueError as exc:
        rep.add("facet enumeration", False, str(exc))
        return rep
    rep.merge(check_facet_census(hull))
    if rep.passed:
        rep.merge(check_prism_collinearities(poly))
    return rep
