"""Exhaustive census of small rooted maps: the oracle everything is tested against.

All counts are exact.  Rooted maps are enumerated exactly once by the gluing
kernel; unrooted objects (plain, pointed, or mark-carrying) are counted as
equivalence classes of canonical codes, re-rooting along the outer contour
for plane maps and at every dart for sphere maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from mapquot.kernel import run_census
from mapquot.maps import (
    DissectionSpec,
    MapError,
    PlaneMap,
    PointedMap,
    SymmetricMap,
    distances_from,
    find_rotation_automorphisms,
    fixed_vertex,
    is_irreducible,
    is_quasi_simple,
    is_simple,
    radial_distance,
    unrooted_code,
)


class SizeCapExceeded(MapError):
    pass


#: family caps keep runtimes at desk scale; pass force=True to go beyond
DEFAULT_CAPS = {
    "quad_faces": 7,
    "tri_faces": 10,
    "sphere_quad_faces": 6,
    "sphere_tri_faces": 8,
    "quad_2d_inner": 8,
    "tri_1d_inner": 9,
    "symmetric_inner": 9,
}

#: hard edge-count guard, independent of the family caps
MAX_EDGES = 24


def _guard_edges(outer_deg: int, inner_deg: int, n_inner: int) -> None:
    darts = outer_deg + inner_deg * n_inner
    if darts % 2 == 0 and darts // 2 > MAX_EDGES:
        raise SizeCapExceeded(
            f"{darts // 2} edges exceeds the hard cap of {MAX_EDGES}"
        )


def _guard(value: int, cap_key: str, force: bool) -> None:
    if not force and value > DEFAULT_CAPS[cap_key]:
        raise SizeCapExceeded(
            f"{cap_key}={value} exceeds the default cap "
            f"{DEFAULT_CAPS[cap_key]}; pass force=True to override"
        )


@lru_cache(maxsize=None)
def rooted_family(
    outer_deg: int,
    inner_deg: int,
    n_inner: int,
    simple: bool = False,
    loopless: bool = False,
    outer_simple: bool = False,
) -> tuple[PlaneMap, ...]:
    """All rooted maps with the given face-degree profile, one per class."""
    _guard_edges(outer_deg, inner_deg, n_inner)
    sigmas = run_census(
        outer_deg,
        inner_deg,
        n_inner,
        require_simple=simple,
        require_loopless=loopless,
        require_outer_simple=outer_simple,
    )
    return tuple(PlaneMap(s, 0) for s in sigmas)


# -- plain rooted families -------------------------------------------------


def rooted_quadrangulations(n_faces: int, simple: bool = True, force: bool = False):
    """Rooted quadrangulations (outer face a simple 4-cycle), n_faces total."""
    _guard(n_faces, "quad_faces", force)
    return rooted_family(4, 4, n_faces - 1, simple=simple, outer_simple=True)


def rooted_triangulations(n_faces: int, simple: bool = True, force: bool = False):
    """Rooted triangulations (outer face a simple 3-cycle), n_faces total."""
    _guard(n_faces, "tri_faces", force)
    return rooted_family(3, 3, n_faces - 1, simple=simple, outer_simple=True)


def rooted_sphere_quads(n_faces: int, force: bool = False):
    """Rooted sphere maps with n_faces quadrangular faces (marked-dart count)."""
    _guard(n_faces, "sphere_quad_faces", force)
    return rooted_family(4, 4, n_faces - 1)


def rooted_sphere_tris(n_faces: int, force: bool = False):
    """Rooted sphere maps with n_faces triangular faces (marked-dart count)."""
    _guard(n_faces, "sphere_tri_faces", force)
    return rooted_family(3, 3, n_faces - 1)


def simply_rooted_sphere_tris(n_faces: int, force: bool = False):
    """Sphere triangulations rooted at a non-loop dart."""
    return tuple(
        m for m in rooted_sphere_tris(n_faces, force) if not m.is_loop_edge(0)
    )


def rooted_quad_2_dissections(n_inner: int, force: bool = False):
    """Rooted quadrangular 2-dissections with n_inner inner faces."""
    _guard(n_inner, "quad_2d_inner", force)
    return rooted_family(2, 4, n_inner, outer_simple=True)


def rooted_tri_1_dissections(n_inner: int, force: bool = False):
    """Rooted triangular 1-dissections with n_inner inner faces."""
    _guard(n_inner, "tri_1d_inner", force)
    return rooted_family(1, 3, n_inner)


# -- unrooted / marked counts ------------------------------------------------


def unrooted_classes(maps) -> list[PlaneMap]:
    """One representative per unrooted plane-map class (outer face fixed)."""
    seen = {}
    for m in maps:
        code = unrooted_code(m)
        if code not in seen:
            seen[code] = m
    return list(seen.values())


def marked_edge_count(maps) -> int:
    """Number of (map, marked edge) classes, maps taken up to outer-fixing iso."""
    codes = set()
    for m in maps:
        for e in range(m.n_edges):
            codes.add(unrooted_code(m, marked_edge=e))
    return len(codes)


def count_two_point_quad(n: int, i: int, force: bool = False) -> int:
    """Sphere quadrangulations with n faces, a marked edge and a marked vertex
    whose closest extremity of the edge is at distance i."""
    if i <= 0:
        return 0
    if i > 2 * n:
        return 0
    codes = set()
    for m in rooted_sphere_quads(n, force):
        dist = [distances_from(m, v) for v in range(m.n_vertices)]
        for e in range(m.n_edges):
            a, b = m.edge_endpoints(e)
            for v in range(m.n_vertices):
                if min(dist[v][a], dist[v][b]) == i:
                    codes.add(unrooted_code(m, pointed=v, marked_edge=e, sphere=True))
    return len(codes)


def two_point_quad_table(n: int, force: bool = False) -> dict[int, int]:
    """count_two_point_quad for every distance, plus the unbucketed total."""
    table: dict[int, int] = {}
    total = set()
    for m in rooted_sphere_quads(n, force):
        dist = [distances_from(m, v) for v in range(m.n_vertices)]
        for e in range(m.n_edges):
            a, b = m.edge_endpoints(e)
            for v in range(m.n_vertices):
                i = min(dist[v][a], dist[v][b])
                if i >= 1:
                    code = unrooted_code(m, pointed=v, marked_edge=e, sphere=True)
                    table.setdefault(i, set()).add(code)
                    total.add(code)
    out = {i: len(c) for i, c in table.items()}
    out[0] = len(total)  # slot 0 carries the distance >= 1 total
    return out


def pointed_dissection_classes(
    inner_deg: int,
    n_inner: int,
    distance: Optional[int] = None,
    quasi_simple: bool = False,
    force: bool = False,
) -> list[PointedMap]:
    """Pointed quadrangular 2-dissections (inner_deg=4) or triangular
    1-dissections (inner_deg=3), one per unrooted pointed class."""
    if inner_deg == 4:
        fam = rooted_quad_2_dissections(n_inner, force)
    elif inner_deg == 3:
        fam = rooted_tri_1_dissections(n_inner, force)
    else:
        raise MapError("inner degree must be 3 or 4")
    seen = set()
    out = []
    for m in fam:
        for v in m.inner_vertices():
            p = PointedMap(m, v)
            if distance is not None and radial_distance(p) != distance:
                continue
            if quasi_simple and not is_quasi_simple(p):
                continue
            code = unrooted_code(m, pointed=v)
            if code not in seen:
                seen.add(code)
                out.append(p)
    return out


def count_pointed_dissections(
    inner_deg: int,
    n_inner: int,
    distance: Optional[int] = None,
    quasi_simple: bool = False,
    force: bool = False,
) -> int:
    return len(
        pointed_dissection_classes(inner_deg, n_inner, distance, quasi_simple, force)
    )


# -- symmetric families ------------------------------------------------------


def symmetric_members(
    inner_deg: int,
    outer_deg: int,
    k: int,
    n_inner: int,
    simple: bool = False,
    distance: Optional[int] = None,
    force: bool = False,
) -> list[SymmetricMap]:
    """k-symmetric dissections found by full-size generation plus rotation
    detection (independent of the quotient machinery)."""
    _guard(n_inner, "symmetric_inner", force)
    fam = rooted_family(
        outer_deg, inner_deg, n_inner, simple=simple, outer_simple=True
    )
    out = []
    for m in unrooted_classes(fam):
        rots = [(kk, rho) for kk, rho in find_rotation_automorphisms(m) if kk == k]
        if not rots:
            continue
        _, rho = min(rots, key=lambda t: t[1])
        center = fixed_vertex(m, rho)
        p = PointedMap(m, center)
        if distance is not None and radial_distance(p) != distance:
            continue
        out.append(SymmetricMap(p, k, rho))
    return out


def count_symmetric(
    inner_deg: int,
    outer_deg: int,
    k: int,
    n_inner: int,
    simple: bool = False,
    distance: Optional[int] = None,
    force: bool = False,
) -> int:
    return len(
        symmetric_members(inner_deg, outer_deg, k, n_inner, simple, distance, force)
    )


def symmetric_simple_quadrangulations(
    n: int, distance: Optional[int] = None, force: bool = False
) -> list[SymmetricMap]:
    """Symmetric (order-2) simple quadrangulations with 2n inner faces."""
    return symmetric_members(4, 4, 2, 2 * n, simple=True, distance=distance, force=force)


def symmetric_simple_triangulations(
    n: int, distance: Optional[int] = None, force: bool = False
) -> list[SymmetricMap]:
    """Symmetric (order-3) simple triangulations with 3n inner faces."""
    return symmetric_members(3, 3, 3, 3 * n, simple=True, distance=distance, force=force)


# -- rooted marked counts (both sides of the marked-object identities) -------


def rooted_marked_face_quads(n_inner: int, force: bool = False) -> int:
    """Rooted simple quadrangulations with n_inner inner faces and a marked face."""
    fam = rooted_quadrangulations(n_inner + 1, simple=True, force=force)
    return sum(m.n_faces for m in fam)


def rooted_quasi_simple_pointed_2d(n_inner: int, force: bool = False) -> int:
    """Rooted quasi-simple pointed quadrangular 2-dissections, n_inner inner faces."""
    total = 0
    for m in rooted_quad_2_dissections(n_inner, force):
        for v in m.inner_vertices():
            if is_quasi_simple(PointedMap(m, v)):
                total += 1
    return total


# -- declarative queries ------------------------------------------------------


@dataclass(frozen=True)
class CensusQuery:
    """Family plus size (and optional radial-distance filter).

    Size conventions: symmetric quadrangular families use kn inner faces and
    triangular ones (2n+1)k inner faces; plain quadrangulations and
    triangulations are sized by total faces; 2- and 1-dissections by inner
    faces.
    """

    spec: DissectionSpec
    size: int
    distance: Optional[int] = None
    force: bool = False


@dataclass(frozen=True)
class CensusResult:
    count: int
    witnesses: tuple = field(default_factory=tuple)


WITNESS_CAP = 64


def generate(q: CensusQuery) -> Iterator[PlaneMap]:
    """Rooted census members for plain queries (symmetric/pointed queries
    yield the underlying plane maps of their witnesses)."""
    s = q.spec
    if s.symmetry_k:
        k = s.symmetry_k
        if s.inner_face_degree == 4:
            n_inner = k * q.size
        else:
            n_inner = (2 * q.size + 1) * k
        members = symmetric_members(
            s.inner_face_degree,
            s.outer_degree,
            k,
            n_inner,
            simple=s.simple,
            distance=q.distance,
            force=q.force,
        )
        for sm in members:
            yield sm.plane_map
        return
    if s.pointed:
        for p in pointed_dissection_classes(
            s.inner_face_degree,
            q.size,
            distance=q.distance,
            quasi_simple=s.quasi_simple,
            force=q.force,
        ):
            yield p.base
        return
    if s.inner_face_degree == 4 and s.outer_degree == 4:
        fam = rooted_quadrangulations(q.size, simple=s.simple, force=q.force)
    elif s.inner_face_degree == 3 and s.outer_degree == 3:
        fam = rooted_triangulations(q.size, simple=s.simple, force=q.force)
    else:
        _guard_edges(s.outer_degree, s.inner_face_degree, q.size)
        fam = rooted_family(
            s.outer_degree,
            s.inner_face_degree,
            q.size,
            simple=s.simple,
            outer_simple=True,
        )
    if s.irreducible:
        fam = [m for m in fam if is_irreducible(m, s.inner_face_degree)]
    yield from fam


def count(q: CensusQuery) -> CensusResult:
    members = list(generate(q))
    return CensusResult(len(members), tuple(members[:WITNESS_CAP]))
