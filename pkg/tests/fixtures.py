"""Hand-built rotation systems used across the test suite."""

from __future__ import annotations

from mapquot.maps import PlaneMap, PointedMap, from_face_lists


def square_map() -> PlaneMap:
    # sigma = (0 7)(1 2)(3 4)(5 6): the 4-cycle with edges {0,1},{2,3},{4,5},{6,7}
    return PlaneMap([7, 2, 1, 4, 3, 6, 5, 0], root_dart=0)


def tetrahedron() -> PlaneMap:
    return from_face_lists(
        [[0, 1, 2], [0, 2, 3], [2, 1, 3], [1, 0, 3]], outer=0
    )


def ring_quadrangulation(levels: int) -> PlaneMap:
    """Nested squares joined by spokes; levels=2 is the cube."""
    faces = [[0, 1, 2, 3]]
    for lv in range(levels - 1):
        a = 4 * lv
        b = 4 * (lv + 1)
        for i in range(4):
            j = (i + 1) % 4
            faces.append([a + i, b + i, b + j, a + j])
    last = 4 * (levels - 1)
    faces.append([last, last + 3, last + 2, last + 1])
    return from_face_lists(faces, outer=0)


def cube() -> PlaneMap:
    return ring_quadrangulation(2)


def path_sphere_quad() -> PlaneMap:
    # two-edge path: the unique quadrangulation of the sphere with one face
    return PlaneMap([0, 2, 1, 3], root_dart=0)


def w_fan() -> PlaneMap:
    """Quadrangular 2-dissection: double edge u-v with a pendant w inside."""
    # darts: e1 = (0,1), e2 = (2,3) both u-v; e3 = (4,5) u-w
    return PlaneMap([4, 3, 0, 1, 2, 5], root_dart=0)


def w_fan_pointed() -> PointedMap:
    m = w_fan()
    return PointedMap(m, m.vertex_of[5])


def hexagon_wheel() -> PlaneMap:
    """3-symmetric quadrangular 6-dissection: hexagon plus center joined to
    alternate rim vertices."""
    return from_face_lists(
        [
            [0, 1, 2, 3, 4, 5],
            [0, 6, 2, 1],
            [2, 6, 4, 3],
            [4, 6, 0, 5],
        ],
        outer=0,
    )


def torus_sigma() -> list[int]:
    # one vertex, two crossing loops: genus 1
    return [2, 3, 1, 0]
