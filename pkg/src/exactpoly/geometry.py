"""Points, linear inequalities, and orthogonal maps, all in exact rationals.

Points are plain tuples of rationals; the ambient dimension is the tuple
length.  An inequality `coeffs . x <= offset` is canonicalized to coprime
integer entries by a positive scaling, so that facet identity is plain
equality of canonical forms.
"""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import echelon, identity, mat_mul, mat_vec, matrix_rank, nullspace, transpose
from .rationals import Rat, ZERO, primitive_ints


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class DegenerateInput(GeometryError):
    pass


def dot(a, b):
    s = a[0] * b[0]
    for i in range(1, len(a)):
        s += a[i] * b[i]
    return s


def vsub(a, b):
    return tuple(a[i] - b[i] for i in range(len(a)))


def vadd(a, b):
    return tuple(a[i] + b[i] for i in range(len(a)))


def smul(c, a):
    return tuple(c * x for x in a)


def as_point(values):
    return tuple(Rat(v) for v in values)


def check_same_dim(points):
    if not points:
        raise DegenerateInput("empty point list")
    d = len(points[0])
    for p in points:
        if len(p) != d:
            raise DimensionMismatch(f"mixed ambient dimensions {d} and {len(p)}")
    return d


@dataclass(frozen=True)
class Inequality:
    """coeffs . x <= offset; also used as an equality carrier by hyperplane_through."""

    coeffs: tuple
    offset: object

    def __post_init__(self):
        if all(c == 0 for c in self.coeffs):
            raise DegenerateInput("all-zero coefficient vector")

    @property
    def ambient_dim(self) -> int:
        return len(self.coeffs)

    def slack(self, point):
        return self.offset - dot(self.coeffs, point)

    def canonical(self) -> "Inequality":
        """Positive rescaling to coprime integers (direction preserved)."""
        ints = primitive_ints(list(self.coeffs) + [self.offset])
        return Inequality(tuple(Rat(v) for v in ints[:-1]), Rat(ints[-1]))

    @property
    def key(self):
        """Canonical integer tuple, usable for sorting and set membership."""
        c = self.canonical()
        return tuple(int(v.numerator) for v in c.coeffs) + (int(c.offset.numerator),)

    def negated(self) -> "Inequality":
        return Inequality(tuple(-c for c in self.coeffs), -self.offset)


def canonical_hyperplane(ineq: Inequality) -> Inequality:
    """Sign-normalized canonical form: first nonzero coefficient positive."""
    c = ineq.canonical()
    for v in c.coeffs:
        if v != 0:
            return c if v > 0 else c.negated()
    raise DegenerateInput("all-zero coefficient vector")


def evaluate(ineq: Inequality, point):
    """Sign of (offset - coeffs.point) in {-1, 0, +1}, plus the exact slack."""
    if len(point) != ineq.ambient_dim:
        raise DimensionMismatch("point/inequality dimension mismatch")
    s = ineq.slack(point)
    return (-1 if s < 0 else (1 if s > 0 else 0)), s


def affine_rank(points) -> int:
    """Dimension of the affine hull (0 for a single point)."""
    check_same_dim(points)
    base = points[0]
    rows = [list(vsub(p, base)) for p in points[1:]]
    if not rows:
        return 0
    return len(echelon(rows))


def hyperplane_through(points) -> Inequality:
    """The unique hyperplane containing `points` (affine rank = dim - 1).

    Returned as a sign-normalized canonical Inequality; orientation is the
    caller's business.
    """
    d = check_same_dim(points)
    rows = [list(p) + [Rat(-1)] for p in points]
    basis = nullspace(rows)
    if len(basis) != 1:
        raise DegenerateInput(
            f"points span affine rank {affine_rank(points)}, need {d - 1}"
        )
    vec = basis[0]
    return canonical_hyperplane(Inequality(tuple(vec[:d]), vec[d]))


@dataclass(frozen=True)
class OrthMap:
    """An exact orthogonal map, stored row-wise (y = M x)."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise DimensionMismatch("orthogonal map must be square")
        if mat_mul(self.rows, transpose(self.rows)) != identity(n):
            raise GeometryError("matrix is not orthogonal")

    @classmethod
    def from_rows(cls, rows) -> "OrthMap":
        return cls(tuple(tuple(Rat(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n) -> "OrthMap":
        return cls(identity(n))

    @property
    def ambient_dim(self) -> int:
        return len(self.rows)

    def apply_point(self, p):
        if len(p) != self.ambient_dim:
            raise DimensionMismatch("point/map dimension mismatch")
        return mat_vec(self.rows, p)

    def apply_ineq(self, ineq: Inequality) -> Inequality:
        # a.x <= b with x = M^T y (M orthogonal) becomes (M a).y <= b
        if ineq.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("inequality/map dimension mismatch")
        return Inequality(mat_vec(self.rows, ineq.coeffs), ineq.offset).canonical()

    def compose(self, other: "OrthMap") -> "OrthMap":
        """self o other (apply `other` first)."""
        return OrthMap(mat_mul(self.rows, other.rows))

    @property
    def key(self):
        return tuple(tuple((int(v.numerator), int(v.denominator)) for v in row) for row in self.rows)
