"""Plane maps as dart rotation systems.

A map is stored as a permutation ``sigma`` over an even number of darts
0..n-1 plus a root dart.  The edge pairing is implicit: ``alpha(d) = d ^ 1``,
so edge ``j`` consists of darts ``2j`` and ``2j + 1``.  Faces are the orbits
of ``d -> sigma[d ^ 1]``; the orbit of the root dart is the outer face, which
lies on the left of the root dart.  Genus 0 is enforced at construction.

Instances are immutable after validation and safe to share between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence


class MapError(ValueError):
    pass


class NotAPermutation(MapError):
    pass


class Disconnected(MapError):
    pass


class NonPlanar(MapError):
    pass


def _orbits(perm: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


class PlaneMap:
    """Rooted combinatorial map of genus 0."""

    __slots__ = (
        "n_darts",
        "sigma",
        "root_dart",
        "faces",
        "face_of",
        "vertices",
        "vertex_of",
        "outer_face",
    )

    def __init__(self, sigma: Sequence[int], root_dart: int = 0):
        sigma = tuple(sigma)
        n = len(sigma)
        if n == 0 or n % 2 != 0:
            raise NotAPermutation("dart count must be even and positive")
        if sorted(sigma) != list(range(n)):
            raise NotAPermutation("sigma is not a permutation of the darts")
        if not 0 <= root_dart < n:
            raise MapError("root dart out of range")

        self.n_darts = n
        self.sigma = sigma
        self.root_dart = root_dart

        # connectivity: darts must form one orbit under <sigma, alpha>
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for e in (sigma[d], d ^ 1):
                if not seen[e]:
                    seen[e] = True
                    count += 1
                    stack.append(e)
        if count != n:
            raise Disconnected("map is not connected")

        phi = tuple(sigma[d ^ 1] for d in range(n))
        faces = _orbits(phi)
        vertices = _orbits(sigma)
        face_of = [0] * n
        for i, f in enumerate(faces):
            for d in f:
                face_of[d] = i
        vertex_of = [0] * n
        for i, v in enumerate(vertices):
            for d in v:
                vertex_of[d] = i

        # Euler relation pins genus 0
        if len(vertices) - n // 2 + len(faces) != 2:
            raise NonPlanar("Euler count v - e + f != 2")

        self.faces = tuple(faces)
        self.vertices = tuple(vertices)
        self.face_of = tuple(face_of)
        self.vertex_of = tuple(vertex_of)
        self.outer_face = face_of[root_dart]

    # -- basic accessors -------------------------------------------------

    @property
    def n_edges(self) -> int:
        return self.n_darts // 2

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def alpha(self, d: int) -> int:
        return d ^ 1

    def phi(self, d: int) -> int:
        """Next dart of the face on the left of d."""
        return self.sigma[d ^ 1]

    def edge_of(self, d: int) -> int:
        return d >> 1

    def edge_endpoints(self, edge: int) -> tuple[int, int]:
        return self.vertex_of[2 * edge], self.vertex_of[2 * edge + 1]

    def is_loop_edge(self, edge: int) -> bool:
        u, v = self.edge_endpoints(edge)
        return u == v

    def degree(self, vertex: int) -> int:
        return len(self.vertices[vertex])

    def face_degree(self, face: int) -> int:
        return len(self.faces[face])

    def outer_degree(self) -> int:
        return len(self.faces[self.outer_face])

    def outer_vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_of[d] for d in self.faces[self.outer_face])

    def outer_edges(self) -> frozenset[int]:
        return frozenset(d >> 1 for d in self.faces[self.outer_face])

    def inner_edges(self) -> list[int]:
        outer = self.outer_edges()
        return [e for e in range(self.n_edges) if e not in outer]

    def inner_vertices(self) -> list[int]:
        outer = self.outer_vertices()
        return [v for v in range(self.n_vertices) if v not in outer]

    def edge_faces(self, edge: int) -> tuple[int, int]:
        return self.face_of[2 * edge], self.face_of[2 * edge + 1]

    def neighbors(self, vertex: int) -> list[int]:
        """Vertices adjacent to `vertex`, with multiplicity."""
        return [self.vertex_of[d ^ 1] for d in self.vertices[vertex]]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlaneMap)
            and self.sigma == other.sigma
            and self.root_dart == other.root_dart
        )

    def __hash__(self) -> int:
        return hash((self.sigma, self.root_dart))

    def __repr__(self) -> str:
        return f"PlaneMap(n_darts={self.n_darts}, root={self.root_dart})"


def build_map(sigma: Sequence[int], root_dart: int = 0) -> PlaneMap:
    """Validate a rotation system and return the plane map it encodes."""
    return PlaneMap(sigma, root_dart)


@dataclass(frozen=True)
class PointedMap:
    """Plane map with a marked inner vertex."""

    base: PlaneMap
    pointed_vertex: int

    def __post_init__(self):
        if not 0 <= self.pointed_vertex < self.base.n_vertices:
            raise MapError("pointed vertex out of range")
        if self.pointed_vertex in self.base.outer_vertices():
            raise MapError("pointed vertex must be an inner vertex")


@dataclass(frozen=True)
class SymmetricMap:
    """Pointed map invariant under a rotation of order k about the point."""

    base: PointedMap
    order_k: int
    rho: tuple[int, ...]

    def __post_init__(self):
        m = self.base.base
        k = self.order_k
        rho = self.rho
        n = m.n_darts
        if k < 2:
            raise MapError("symmetry order must be at least 2")
        if sorted(rho) != list(range(n)):
            raise MapError("rho is not a dart permutation")
        for d in range(n):
            if rho[m.sigma[d]] != m.sigma[rho[d]]:
                raise MapError("rho does not commute with sigma")
            if rho[d ^ 1] != rho[d] ^ 1:
                raise MapError("rho does not commute with alpha")
        # rho^k = id, and no smaller positive power is the identity
        power = list(range(n))
        order = 0
        for step in range(1, k + 1):
            power = [rho[d] for d in power]
            if all(power[d] == d for d in range(n)):
                order = step
                break
        if order != k:
            raise MapError("rho does not have order exactly k")
        center = self.base.pointed_vertex
        center_darts = set(m.vertices[center])
        if any(rho[d] not in center_darts for d in center_darts):
            raise MapError("rho does not fix the center vertex")
        outer = set(m.faces[m.outer_face])
        if any(rho[d] not in outer for d in outer):
            raise MapError("rho does not fix the outer face")

    @property
    def center(self) -> int:
        return self.base.pointed_vertex

    @property
    def plane_map(self) -> PlaneMap:
        return self.base.base


@dataclass(frozen=True)
class DissectionSpec:
    """Family description: d-angular dissections of a polygon."""

    inner_face_degree: int
    outer_degree: int
    simple: bool = False
    quasi_simple: bool = False
    irreducible: bool = False
    pointed: bool = False
    symmetry_k: Optional[int] = None

    def __post_init__(self):
        if self.inner_face_degree not in (3, 4):
            raise MapError("inner faces must have degree 3 or 4")
        if self.outer_degree < 1:
            raise MapError("outer degree must be positive")
        if self.inner_face_degree == 4 and self.outer_degree % 2 != 0:
            raise MapError("quadrangular dissections need an even outer degree")
        if self.symmetry_k is not None and self.symmetry_k < 2:
            raise MapError("symmetry order must be at least 2")


# -- metrics -------------------------------------------------------------


def face_degrees(m: PlaneMap) -> dict:
    """Degrees of all faces, with the outer face flagged separately."""
    inner = sorted(
        len(f) for i, f in enumerate(m.faces) if i != m.outer_face
    )
    return {"outer": m.outer_degree(), "inner": inner}


def distances_from(m: PlaneMap, vertex: int) -> list[int]:
    """Breadth-first graph distances from `vertex` (unreachable = -1)."""
    dist = [-1] * m.n_vertices
    dist[vertex] = 0
    queue = deque([vertex])
    while queue:
        v = queue.popleft()
        for w in m.neighbors(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def radial_distance(p: PointedMap) -> int:
    """Distance between the pointed vertex and the outer face boundary."""
    dist = distances_from(p.base, p.pointed_vertex)
    return min(dist[v] for v in p.base.outer_vertices())


# -- cycles and enclosure ------------------------------------------------


def simple_cycles(m: PlaneMap, max_length: Optional[int] = None) -> list[tuple[int, ...]]:
    """All vertex-simple cycles, each as a dart tuple (one orientation each).

    Loops are length-1 cycles and parallel edge pairs length-2 cycles.  The
    two traversal directions of a cycle are identified; the representative
    starts at its smallest dart.
    """
    n = m.n_darts
    limit = max_length if max_length is not None else m.n_edges
    found: dict[frozenset[int], tuple[int, ...]] = {}

    # loops
    for e in range(m.n_edges):
        if m.is_loop_edge(e):
            found[frozenset([e])] = (2 * e,)

    def extend(path: list[int], visited: set[int], start_v: int):
        last = path[-1]
        v = m.vertex_of[last ^ 1]
        for d in m.vertices[v]:
            e = d >> 1
            if e == last >> 1:
                continue
            w = m.vertex_of[d ^ 1]
            if w == start_v and len(path) + 1 >= 2:
                cyc = tuple(path) + (d,)
                key = frozenset(x >> 1 for x in cyc)
                if len(key) == len(cyc) and key not in found:
                    found[key] = cyc
                continue
            if w == v:
                continue  # loop edge, not part of longer simple cycles here
            if w in visited or w == start_v:
                continue
            if len(path) + 1 >= limit:
                continue
            visited.add(w)
            path.append(d)
            extend(path, visited, start_v)
            path.pop()
            visited.remove(w)

    if limit >= 2:
        for d0 in range(n):
            v0 = m.vertex_of[d0]
            w0 = m.vertex_of[d0 ^ 1]
            if w0 == v0:
                continue
            extend([d0], {v0, w0}, v0)

    return sorted(found.values(), key=lambda c: (len(c), c))


def cycle_interior(m: PlaneMap, cycle_darts: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Faces and strictly-inside vertices of a simple cycle.

    The interior is the set of faces not reachable from the outer face in the
    dual graph once the cycle's edges are removed.  Strictly-inside vertices
    are the vertices incident to interior faces only (never on the cycle).
    """
    blocked = {d >> 1 for d in cycle_darts}
    reach = [False] * m.n_faces
    reach[m.outer_face] = True
    queue = deque([m.outer_face])
    while queue:
        f = queue.popleft()
        for d in m.faces[f]:
            if d >> 1 in blocked:
                continue
            g = m.face_of[d ^ 1]
            if not reach[g]:
                reach[g] = True
                queue.append(g)
    interior_faces = frozenset(i for i in range(m.n_faces) if not reach[i])
    on_cycle = {m.vertex_of[d] for d in cycle_darts} | {
        m.vertex_of[d ^ 1] for d in cycle_darts
    }
    inside_vertices = set()
    for f in interior_faces:
        for d in m.faces[f]:
            v = m.vertex_of[d]
            if v not in on_cycle:
                inside_vertices.add(v)
    return interior_faces, frozenset(inside_vertices)


def enclosing_girth(p: PointedMap) -> int:
    """Length of the shortest cycle strictly enclosing the pointed vertex."""
    m = p.base
    best = None
    for cyc in simple_cycles(m):
        if best is not None and len(cyc) >= best:
            break
        _, inside = cycle_interior(m, cyc)
        if p.pointed_vertex in inside:
            best = len(cyc)
    if best is None:
        raise MapError("no cycle encloses the pointed vertex")
    return best


# -- family predicates ---------------------------------------------------


def is_simple(m: PlaneMap) -> bool:
    """True when the map has no loops and no multiple edges."""
    seen = set()
    for e in range(m.n_edges):
        u, v = m.edge_endpoints(e)
        if u == v:
            return False
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return False
        seen.add(key)
    return True


def is_quasi_simple(p: PointedMap) -> bool:
    """True when the pointed vertex lies strictly inside every 1- or 2-cycle.

    Two nested loops at one vertex count as a 2-cycle whose interior is the
    annulus between them; once every loop must enclose the point, that rules
    out a second loop on the same vertex.
    """
    m = p.base
    loops_at: dict[int, int] = {}
    for e in range(m.n_edges):
        if m.is_loop_edge(e):
            v = m.vertex_of[2 * e]
            loops_at[v] = loops_at.get(v, 0) + 1
    if any(c > 1 for c in loops_at.values()):
        return False
    for cyc in simple_cycles(m, max_length=2):
        _, inside = cycle_interior(m, cyc)
        if p.pointed_vertex not in inside:
            return False
    return True


def is_irreducible(m: PlaneMap, d: int) -> bool:
    """True when the interior of every cycle of length at most d is a face."""
    for cyc in simple_cycles(m, max_length=d):
        faces, _ = cycle_interior(m, cyc)
        if len(faces) != 1:
            return False
    return True


def is_dissection(m: PlaneMap, spec: DissectionSpec) -> bool:
    """Structural membership check (degrees, outer contour, simplicity flags)."""
    if m.outer_degree() != spec.outer_degree:
        return False
    for i, f in enumerate(m.faces):
        if i != m.outer_face and len(f) != spec.inner_face_degree:
            return False
    # outer contour must be a simple cycle: pairwise distinct vertices
    contour = [m.vertex_of[d] for d in m.faces[m.outer_face]]
    if len(set(contour)) != len(contour):
        return False
    if spec.simple and not is_simple(m):
        return False
    if spec.irreducible and not is_irreducible(m, spec.inner_face_degree):
        return False
    return True


# -- canonical codes and automorphisms ------------------------------------


def canonical_code(
    m: PlaneMap,
    root: Optional[int] = None,
    pointed: Optional[int] = None,
    marked_edge: Optional[int] = None,
    marked_face: Optional[int] = None,
) -> bytes:
    """Breadth-first code of the rooted map, optionally with marks.

    Two rooted maps have equal codes iff they are isomorphic by a
    root-preserving dart bijection; marks are appended canonically.
    """
    if root is None:
        root = m.root_dart
    sigma = m.sigma
    n = m.n_darts
    label = [-1] * n
    label[root] = 0
    order = [root]
    out = bytearray()
    nxt = 1
    for d in order:
        for e in (sigma[d], d ^ 1):
            if label[e] < 0:
                label[e] = nxt
                nxt += 1
                order.append(e)
            out.append(label[e] & 0xFF)
            out.append(label[e] >> 8)
    marks = bytearray([0xFE])
    for value in (
        None if pointed is None else min(label[d] for d in m.vertices[pointed]),
        None if marked_edge is None else min(label[2 * marked_edge], label[2 * marked_edge + 1]),
        None if marked_face is None else min(label[d] for d in m.faces[marked_face]),
    ):
        if value is None:
            marks.extend(b"\xff\xff")
        else:
            marks.append(value & 0xFF)
            marks.append(value >> 8)
    return bytes(out) + bytes(marks)


def unrooted_code(
    m: PlaneMap,
    pointed: Optional[int] = None,
    marked_edge: Optional[int] = None,
    sphere: bool = False,
) -> bytes:
    """Minimum code over admissible re-rootings.

    Plane maps re-root along the outer contour only; sphere objects re-root
    at every dart (the left face of the new root becomes the outer face).
    """
    roots = range(m.n_darts) if sphere else m.faces[m.outer_face]
    return min(
        canonical_code(m, root=r, pointed=pointed, marked_edge=marked_edge)
        for r in roots
    )


def automorphism_from(m: PlaneMap, image_of_root: int) -> Optional[tuple[int, ...]]:
    """Dart bijection commuting with sigma and alpha sending root to the image.

    Returns None when no such map automorphism exists.  Rooted maps are rigid,
    so the image of one dart determines everything.
    """
    sigma = m.sigma
    n = m.n_darts
    rho = [-1] * n
    rho[m.root_dart] = image_of_root
    stack = [m.root_dart]
    while stack:
        d = stack.pop()
        for src, dst in ((sigma[d], sigma[rho[d]]), (d ^ 1, rho[d] ^ 1)):
            if rho[src] < 0:
                rho[src] = dst
                stack.append(src)
            elif rho[src] != dst:
                return None
    if sorted(rho) != list(range(n)):
        return None
    return tuple(rho)


def _perm_order(perm: Sequence[int]) -> int:
    order = 1
    for cyc in _orbits(perm):
        order = order * len(cyc) // _gcd(order, len(cyc))
    return order


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def fixed_vertex(m: PlaneMap, rho: Sequence[int]) -> Optional[int]:
    """The vertex fixed setwise by rho, if any."""
    for i, v in enumerate(m.vertices):
        darts = set(v)
        if all(rho[d] in darts for d in darts):
            return i
    return None


def find_rotation_automorphisms(
    m: PlaneMap, center: Optional[int] = None
) -> list[tuple[int, tuple[int, ...]]]:
    """Nontrivial automorphisms fixing the outer face, grouped by order.

    When `center` is given, only rotations fixing that vertex are reported;
    otherwise any rotation fixing some inner vertex qualifies.  Returns
    (order, rho) pairs sorted by order then by rho.
    """
    out = []
    outer_set = m.outer_vertices()
    for r in m.faces[m.outer_face]:
        if r == m.root_dart:
            continue
        rho = automorphism_from(m, r)
        if rho is None:
            continue
        fv = fixed_vertex(m, rho)
        if fv is None or fv in outer_set:
            continue
        if center is not None and fv != center:
            continue
        out.append((_perm_order(rho), rho))
    out.sort()
    return out


# -- construction helpers --------------------------------------------------


def from_face_lists(faces: Sequence[Sequence[int]], outer: int = 0) -> PlaneMap:
    """Build a map from its face contours (simple graphs only).

    Each face is a vertex list read so that the face lies on the left of
    every directed contour edge.  Every undirected edge must appear exactly
    once in each direction.  The root is the first contour edge of `outer`.
    """
    darts = []  # (face index, position) -> directed edge (u, v)
    for fi, f in enumerate(faces):
        k = len(f)
        for p in range(k):
            darts.append((fi, p, f[p], f[(p + 1) % k]))
    by_dir = {}
    for idx, (_, _, u, v) in enumerate(darts):
        if (u, v) in by_dir:
            raise MapError(f"directed edge {(u, v)} listed twice")
        by_dir[(u, v)] = idx
    pair = {}
    for (u, v), idx in by_dir.items():
        if (v, u) not in by_dir:
            raise MapError(f"edge {(u, v)} lacks its reverse")
        pair[idx] = by_dir[(v, u)]

    # relabel so alpha(d) = d ^ 1
    new_id = {}
    edges = 0
    for idx in range(len(darts)):
        if idx in new_id:
            continue
        new_id[idx] = 2 * edges
        new_id[pair[idx]] = 2 * edges + 1
        edges += 1

    # phi within each face block, then sigma = phi o alpha
    phi = {}
    pos = 0
    for fi, f in enumerate(faces):
        k = len(f)
        for p in range(k):
            phi[pos + p] = pos + (p + 1) % k
        pos += k
    sigma = [0] * len(darts)
    for idx in range(len(darts)):
        sigma[new_id[pair[idx]]] = new_id[phi[idx]]

    root_old = sum(len(f) for f in faces[:outer])
    return PlaneMap(sigma, new_id[root_old])


def relabel(m: PlaneMap, dart_perm: Sequence[int]) -> PlaneMap:
    """Conjugate the rotation system by a dart permutation respecting alpha."""
    n = m.n_darts
    if sorted(dart_perm) != list(range(n)):
        raise NotAPermutation("relabeling is not a permutation")
    for d in range(n):
        if dart_perm[d ^ 1] != dart_perm[d] ^ 1:
            raise MapError("relabeling must respect the dart pairing")
    sigma = [0] * n
    for d in range(n):
        sigma[dart_perm[d]] = dart_perm[m.sigma[d]]
    return PlaneMap(sigma, dart_perm[m.root_dart])
