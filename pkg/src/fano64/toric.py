"""Fans in Z^3 and their anticanonical polytopes, in exact arithmetic.

A fan is a list of primitive ray vectors plus maximal cones given as
index sets.  The toolkit computes lattice indices of simplicial cones,
Gorenstein support vectors, the classification of index-2 canonical
cone singularities, and the polar polytope

    Delta = { m : <m, v> >= -1 for every ray v },

whose normalized volume 6 vol(Delta) is the anticanonical degree of the
toric variety.  validate_fan performs structural sanity checks and
returns findings instead of raising, so defective input data can be
examined rather than rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .lattice import QVec, Vec3, det3, pairing, solve3


@dataclass(frozen=True)
class Fan:
    """Rays plus maximal cones (tuples of 0-based ray indices)."""

    rays: tuple[Vec3, ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rays:
            raise ValueError("fan needs at least one ray")
        cones = []
        for cone in self.max_cones:
            if len(set(cone)) != len(cone):
                raise ValueError(f"cone {cone} repeats a ray index")
            for i in cone:
                if not 0 <= i < len(self.rays):
                    raise ValueError(f"cone {cone} references missing ray {i}")
            if len(cone) < 3:
                raise ValueError(f"maximal cone {cone} has fewer than 3 rays")
            cones.append(tuple(sorted(cone)))
        object.__setattr__(self, "max_cones", tuple(cones))

    def cone_rays(self, cone_index: int) -> tuple[Vec3, ...]:
        return tuple(self.rays[i] for i in self.max_cones[cone_index])


@dataclass(frozen=True)
class RationalPolytope:
    """Vertex representation; vertices are triples of Fractions."""

    vertices: tuple[QVec, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("polytope needs vertices")
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))


class ConeSingularityKind(Enum):
    SMOOTH = "smooth"
    ISOLATED_HALF_POINT = "isolated-half-point"
    TRANSVERSE_A1 = "transverse-A1"


@dataclass(frozen=True)
class ConeSingularity:
    """Classification of a lattice-index <= 2 simplicial cone.

    For index 2 the witness is the lattice point which is a half-integer
    combination of the three rays; it sits on a proper face exactly in
    the transverse-A1 case.
    """

    kind: ConeSingularityKind
    witness: Vec3 | None = None


def cone_lattice_index(rays: tuple[Vec3, Vec3, Vec3]) -> int:
    """Index of the sublattice spanned by a simplicial cone's rays."""
    d = det3(*rays)
    if d == 0:
        raise ValueError(f"degenerate cone: rays {rays} are linearly dependent")
    return abs(d)


def gorenstein_support(rays: tuple[Vec3, ...]) -> Vec3 | None:
    """The integral m with <m, v> = -1 for all rays of the cone, if any.

    For a full-dimensional cone such an m is unique if it exists; its
    existence for every cone of a complete fan is the Gorenstein
    condition on the toric variety.  Returns None when the solution is
    non-integral, inconsistent, or not unique (degenerate cone).
    """
    for triple in combinations(rays, 3):
        if det3(*triple) != 0:
            m = solve3(triple, (Fraction(-1), Fraction(-1), Fraction(-1)))
            assert m is not None
            if any(c.denominator != 1 for c in m):
                return None
            point = Vec3(int(m[0]), int(m[1]), int(m[2]))
            if all(pairing(m, v) == -1 for v in rays):
                return point
            return None
    return None


def classify_index2_cone(rays: tuple[Vec3, Vec3, Vec3]) -> ConeSingularity:
    """Sort an index-1 or index-2 simplicial cone by singularity type.

    Index 1 is smooth.  For index 2 exactly one nonzero combination
    (e1 v1 + e2 v2 + e3 v3)/2 with e_i in {0, 1} is a lattice point:
    on a proper face (some e_i = 0) it is a transverse A1 curve germ,
    in the interior (all e_i = 1) an isolated half-point.
    """
    index = cone_lattice_index(rays)
    if index == 1:
        return ConeSingularity(ConeSingularityKind.SMOOTH)
    if index > 2:
        raise ValueError(f"cone has lattice index {index}; only 1 and 2 are classified")
    face_witness = None
    interior_witness = None
    for eps in ((0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)):
        s = Vec3(0, 0, 0)
        for e, v in zip(eps, rays):
            if e:
                s = s + v
        if s.x % 2 == 0 and s.y % 2 == 0 and s.z % 2 == 0 and s != Vec3(0, 0, 0):
            point = Vec3(s.x // 2, s.y // 2, s.z // 2)
            if 0 in eps:
                face_witness = face_witness or point
            else:
                interior_witness = point
    if face_witness is not None:
        return ConeSingularity(ConeSingularityKind.TRANSVERSE_A1, face_witness)
    if interior_witness is not None:
        return ConeSingularity(ConeSingularityKind.ISOLATED_HALF_POINT, interior_witness)
    raise ValueError(f"index-2 cone {rays} has no half-integer lattice point")


def _rays_have_full_rank(rays: tuple[Vec3, ...]) -> bool:
    return any(det3(*t) != 0 for t in combinations(rays, 3))


def _positive_span_fails(rays: tuple[Vec3, ...]) -> Vec3 | None:
    """A nonzero direction m with <m, v> >= 0 for all rays, if one exists.

    Such an m is an unbounded direction of the polar polytope.  When the
    rays have full rank the set of such m is a pointed cone, so if it is
    nonzero it has an extremal direction lying on two of the hyperplanes
    <., v> = 0, hence proportional to a cross product of two rays.
    """
    if not _rays_have_full_rank(rays):
        # rank <= 2: some nonzero m is orthogonal to every ray
        for a, b in combinations(rays, 2):
            m = a.cross(b)
            if m != Vec3(0, 0, 0):
                return m
        for v in rays:
            if v != Vec3(0, 0, 0):
                m = v.cross(Vec3(1, 0, 0))
                return m if m != Vec3(0, 0, 0) else v.cross(Vec3(0, 1, 0))
        return Vec3(1, 0, 0)
    for a, b in combinations(rays, 2):
        m = a.cross(b)
        if m == Vec3(0, 0, 0):
            continue
        for cand in (m, -m):
            if all(v.dot(cand) >= 0 for v in rays):
                return cand
    return None


def anticanonical_polytope(f: Fan) -> RationalPolytope:
    """Polar polytope Delta of the fan's rays.

    Vertices are found by intersecting all triples of the bounding
    hyperplanes <m, v> = -1 and keeping the feasible intersections.
    Raises when Delta is unbounded, i.e. the rays fail to positively
    span the space.
    """
    rays = f.rays
    direction = _positive_span_fails(rays)
    if direction is not None:
        raise ValueError(
            f"polytope is unbounded: rays do not positively span (direction {direction})"
        )
    rhs = (Fraction(-1), Fraction(-1), Fraction(-1))
    vertices = set()
    for triple in combinations(rays, 3):
        m = solve3(triple, rhs)
        if m is None:
            continue
        if all(pairing(m, v) >= -1 for v in rays):
            vertices.add(m)
    return RationalPolytope(tuple(vertices))


def _facets(p: RationalPolytope) -> list[tuple[tuple[Fraction, ...], Fraction, tuple[QVec, ...]]]:
    """Supporting planes (outward normal n, offset d) with their vertex sets.

    A plane through three vertices is a facet plane when every vertex
    satisfies <n, x> <= d.  Normals are canonicalized to primitive
    integer vectors so coincident planes deduplicate.
    """
    verts = p.vertices
    found: dict[tuple, tuple] = {}
    for a, b, c in combinations(verts, 3):
        u = tuple(bi - ai for ai, bi in zip(a, b))
        w = tuple(ci - ai for ai, ci in zip(a, c))
        n = (
            u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0],
        )
        if not any(n):
            continue
        # clear denominators and divide by the gcd to get a canonical normal
        denom = lcm(*(x.denominator for x in n))
        ni = tuple(int(x * denom) for x in n)
        g = gcd(*ni)
        ni = tuple(x // g for x in ni)
        for cand in (ni, tuple(-x for x in ni)):
            d = sum(cc * aa for cc, aa in zip(cand, a))
            if all(sum(cc * vv for cc, vv in zip(cand, v)) <= d for v in verts):
                on_plane = tuple(
                    v for v in verts if sum(cc * vv for cc, vv in zip(cand, v)) == d
                )
                found[(cand, d)] = (tuple(Fraction(x) for x in cand), d, on_plane)
    return list(found.values())


def _hull_order(points: tuple[QVec, ...], normal: tuple[Fraction, ...]) -> list[QVec]:
    """Cyclic boundary order of coplanar points via a 2D monotone chain."""
    drop = max(range(3), key=lambda i: abs(normal[i]))
    flat = sorted((tuple(x for i, x in enumerate(pt) if i != drop), pt) for pt in points)

    def cross(o, a, b):
        return (a[0][0] - o[0][0]) * (b[0][1] - o[0][1]) - (a[0][1] - o[0][1]) * (
            b[0][0] - o[0][0]
        )

    lower: list = []
    for item in flat:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], item) <= 0:
            lower.pop()
        lower.append(item)
    upper: list = []
    for item in reversed(flat):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], item) <= 0:
            upper.pop()
        upper.append(item)
    return [pt for _, pt in lower[:-1] + upper[:-1]]


def polytope_degree(p: RationalPolytope) -> Fraction:
    """6 times the Euclidean volume of the polytope, exact.

    The volume is assembled as a fan of tetrahedra: apex at the vertex
    centroid (interior for a full-dimensional polytope), one tetrahedron
    per triangle of each triangulated facet.
    """
    verts = p.vertices
    full_dim = any(
        _tet_vol(a, b, c, d) != 0 for a, b, c, d in combinations(verts, 4)
    )
    if not full_dim:
        raise ValueError("polytope is not full-dimensional")
    k = len(verts)
    centroid = tuple(sum(v[i] for v in verts) / k for i in range(3))
    vol = Fraction(0)
    for normal, _, on_plane in _facets(p):
        ring = _hull_order(on_plane, normal)
        if len(ring) < 3:
            continue
        for i in range(1, len(ring) - 1):
            vol += _tet_vol(centroid, ring[0], ring[i], ring[i + 1])
    return 6 * vol


def _tet_vol(q, a, b, c) -> Fraction:
    u = tuple(x - y for x, y in zip(a, q))
    v = tuple(x - y for x, y in zip(b, q))
    w = tuple(x - y for x, y in zip(c, q))
    det = (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )
    return abs(Fraction(det)) / 6


def _positive_dependence(vectors: tuple[Vec3, ...]) -> bool:
    """Whether 0 is a nontrivial non-negative combination of the vectors.

    Equivalent to the generated cone containing a line.  A minimal such
    dependence is supported on at most 4 vectors in rank 3, so checking
    subsets of size 2 to 4 is exhaustive.
    """
    for a, b in combinations(vectors, 2):
        if a.cross(b) == Vec3(0, 0, 0) and a.dot(b) < 0:
            return True
    for triple in combinations(vectors, 3):
        if det3(*triple) != 0:
            continue
        lam = _dependence_coeffs_3(triple)
        if lam is not None and _same_sign(lam):
            return True
    for quad in combinations(vectors, 4):
        lam = tuple(
            (-1) ** i * det3(*(quad[:i] + quad[i + 1 :])) for i in range(4)
        )
        if any(lam) and _same_sign(lam):
            return True
    return False


def _dependence_coeffs_3(t: tuple[Vec3, Vec3, Vec3]) -> tuple[int, int, int] | None:
    """Nonzero (l1,l2,l3) with sum l_i v_i = 0 for a rank-2 triple, else None."""
    cols = [v.as_tuple() for v in t]
    for r, s in combinations(range(3), 2):
        m = [(cols[j][r], cols[j][s]) for j in range(3)]
        lam = (
            m[1][0] * m[2][1] - m[1][1] * m[2][0],
            -(m[0][0] * m[2][1] - m[0][1] * m[2][0]),
            m[0][0] * m[1][1] - m[0][1] * m[1][0],
        )
        if any(lam):
            if all(
                sum(lam[j] * cols[j][k] for j in range(3)) == 0 for k in range(3)
            ):
                return lam
            return None
    return None


def _same_sign(lam: tuple[int, ...]) -> bool:
    nonzero = [x for x in lam if x != 0]
    return bool(nonzero) and (all(x > 0 for x in nonzero) or all(x < 0 for x in nonzero))


@dataclass(frozen=True)
class FanReport:
    """Findings from validate_fan; empty tuples everywhere means clean."""

    non_primitive_rays: tuple[int, ...]
    degenerate_cones: tuple[int, ...]
    non_convex_cones: tuple[int, ...]
    unpaired_walls: tuple[str, ...]
    cones_without_gorenstein_support: tuple[int, ...]

    @property
    def is_clean(self) -> bool:
        return not (
            self.non_primitive_rays
            or self.degenerate_cones
            or self.non_convex_cones
            or self.unpaired_walls
            or self.cones_without_gorenstein_support
        )

    def findings(self) -> tuple[str, ...]:
        out = []
        for i in self.non_primitive_rays:
            out.append(f"ray {i} is not primitive")
        for i in self.degenerate_cones:
            out.append(f"cone {i} is degenerate (rays do not span)")
        for i in self.non_convex_cones:
            out.append(f"cone {i} is not strongly convex (contains a line)")
        for w in self.unpaired_walls:
            out.append(f"wall {w} is not shared by exactly two maximal cones")
        for i in self.cones_without_gorenstein_support:
            out.append(f"cone {i} has no integral Gorenstein support vector")
        return tuple(out)


def _cone_walls(rays: tuple[Vec3, ...], indices: tuple[int, ...]):
    """Walls (2-faces) of a strongly convex full-rank cone.

    A pair of rays spans a wall when some plane through them has all the
    cone's other rays strictly on one side; rays lying on the plane are
    absorbed into the wall.  Keys are (ray index set, unsigned primitive
    normal) so the same wall hashes equally from both adjacent cones.
    """
    walls = set()
    vecs = {i: rays[i] for i in indices}
    for i, j in combinations(indices, 2):
        n = vecs[i].cross(vecs[j])
        if n == Vec3(0, 0, 0):
            continue
        g = gcd(n.x, n.y, n.z)
        n = Vec3(n.x // g, n.y // g, n.z // g)
        sides = {k: n.dot(vecs[k]) for k in indices}
        on_plane = tuple(sorted(k for k, s in sides.items() if s == 0))
        off = [s for s in sides.values() if s != 0]
        if off and (all(s > 0 for s in off) or all(s < 0 for s in off)):
            key_normal = max(n.as_tuple(), (-n).as_tuple())
            walls.add((on_plane, key_normal))
    return walls


def validate_fan(f: Fan) -> FanReport:
    """Structural checks: primitivity, convexity, wall pairing, supports."""
    non_primitive = tuple(
        i for i, v in enumerate(f.rays) if not v.is_primitive()
    )
    degenerate = []
    non_convex = []
    wall_count: dict = {}
    no_support = []
    for ci in range(len(f.max_cones)):
        rays = f.cone_rays(ci)
        if not _rays_have_full_rank(rays):
            degenerate.append(ci)
            continue
        if _positive_dependence(rays):
            non_convex.append(ci)
        else:
            for wall in _cone_walls(f.rays, f.max_cones[ci]):
                wall_count[wall] = wall_count.get(wall, 0) + 1
        if gorenstein_support(rays) is None:
            no_support.append(ci)
    unpaired = tuple(
        f"rays{list(key[0])}" for key, n in sorted(wall_count.items()) if n != 2
    )
    return FanReport(
        non_primitive_rays=non_primitive,
        degenerate_cones=tuple(degenerate),
        non_convex_cones=tuple(non_convex),
        unpaired_walls=unpaired,
        cones_without_gorenstein_support=tuple(no_support),
    )


def fan_from_json(text: str) -> Fan:
    """Parse the fan file format: {"rays": [[x,y,z]...], "cones": [[i...]...]}.

    Integers only; floats and booleans anywhere are rejected.  Cone
    entries are 0-based ray indices.
    """

    def reject_float(s: str):
        raise ValueError(f"fan files must contain only integers, got {s}")

    data = json.loads(text, parse_float=reject_float)
    if not isinstance(data, dict) or set(data.keys()) != {"rays", "cones"}:
        raise ValueError('fan file must be an object with exactly "rays" and "cones"')
    rays_raw, cones_raw = data["rays"], data["cones"]
    if not isinstance(rays_raw, list) or not isinstance(cones_raw, list):
        raise ValueError('"rays" and "cones" must be arrays')
    rays = []
    for entry in rays_raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or any(type(x) is not int for x in entry)
        ):
            raise ValueError(f"ray {entry!r} is not a triple of integers")
        rays.append(Vec3(*entry))
    cones = []
    for entry in cones_raw:
        if not isinstance(entry, list) or any(type(x) is not int for x in entry):
            raise ValueError(f"cone {entry!r} is not an array of integer indices")
        cones.append(tuple(entry))
    return Fan(tuple(rays), tuple(cones))
