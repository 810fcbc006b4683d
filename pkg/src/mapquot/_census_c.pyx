# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; mirrors _census_py.run_census line for line.

Hot path: the recursive gluing search.  State lives in C arrays; the
union-find uses union by size without path compression so that undo is O(1).
"""

from libc.stdlib cimport malloc, free


cdef struct State:
    int total
    int n_blocks
    int outer_deg
    int inner_deg
    int* phi_next
    int* offsets
    int* partner
    int* parent
    int* size
    int* uf_trail
    int uf_top
    int* edges        # flat pairs
    int n_edge_slots  # 2 * number of glued edges
    bint require_simple
    bint require_loopless
    bint require_outer_simple


cdef int find(State* st, int x) nogil:
    while st.parent[x] != x:
        x = st.parent[x]
    return x


cdef void union_(State* st, int x, int y) nogil:
    cdef int rx = find(st, x)
    cdef int ry = find(st, y)
    if rx == ry:
        st.uf_trail[st.uf_top] = -1
        st.uf_top += 1
        return
    if st.size[rx] < st.size[ry]:
        rx, ry = ry, rx
    st.parent[ry] = rx
    st.size[rx] += st.size[ry]
    st.uf_trail[st.uf_top] = ry
    st.uf_top += 1


cdef void undo_union(State* st) nogil:
    st.uf_top -= 1
    cdef int ry = st.uf_trail[st.uf_top]
    if ry >= 0:
        st.size[find(st, ry)] -= st.size[ry]
        st.parent[ry] = ry


cdef bint family_ok(State* st) nogil:
    cdef int i, j, ra, rb, qa, qb
    if st.require_outer_simple:
        for i in range(st.outer_deg):
            ra = find(st, i)
            for j in range(i + 1, st.outer_deg):
                if find(st, j) == ra:
                    return False
    if st.require_simple or st.require_loopless:
        for i in range(0, st.n_edge_slots, 2):
            ra = find(st, st.edges[i])
            rb = find(st, st.edges[i + 1])
            if ra == rb:
                return False
            if st.require_simple:
                if ra > rb:
                    ra, rb = rb, ra
                for j in range(i + 2, st.n_edge_slots, 2):
                    qa = find(st, st.edges[j])
                    qb = find(st, st.edges[j + 1])
                    if qa > qb:
                        qa, qb = qb, qa
                    if qa == ra and qb == rb:
                        return False
    return True


cdef int bnext(State* st, int s) nogil:
    cdef int t = st.phi_next[s]
    while st.partner[t] >= 0:
        t = st.phi_next[st.partner[t]]
    return t


cdef void glue(State* st, int d, int b) nogil:
    st.partner[d] = b
    st.partner[b] = d
    st.edges[st.n_edge_slots] = d
    st.edges[st.n_edge_slots + 1] = b
    st.n_edge_slots += 2
    union_(st, d, st.phi_next[b])
    union_(st, b, st.phi_next[d])


cdef void unglue(State* st, int d, int b) nogil:
    undo_union(st)
    undo_union(st)
    st.n_edge_slots -= 2
    st.partner[d] = -1
    st.partner[b] = -1


cdef void emit(State* st, list results):
    cdef int j, t
    new = [0] * st.total
    for j in range(0, st.n_edge_slots, 2):
        new[st.edges[j]] = j
        new[st.edges[j + 1]] = j + 1
    sigma = [0] * st.total
    for t in range(st.total):
        sigma[new[t]] = new[st.phi_next[st.partner[t]]]
    results.append(sigma)


cdef void rec(State* st, int scan_from, int opened, list results):
    cdef int opened_end = st.offsets[opened]
    cdef int d = scan_from
    cdef int c, b, i, n_cands
    while d < opened_end and st.partner[d] >= 0:
        d += 1
    if d == opened_end:
        if opened == st.n_blocks:
            emit(st, results)
        return
    # candidates on the boundary cycle through d
    cdef int* cands = <int*> malloc(st.total * sizeof(int))
    n_cands = 0
    c = bnext(st, d)
    while c != d:
        cands[n_cands] = c
        n_cands += 1
        c = bnext(st, c)
    if opened == st.n_blocks and n_cands % 2 == 0:
        free(cands)
        return  # odd cycle cannot close without fresh faces
    for i in range(n_cands):
        b = cands[i]
        glue(st, d, b)
        if family_ok(st):
            rec(st, d + 1, opened, results)
        unglue(st, d, b)
    free(cands)
    if opened < st.n_blocks:
        b = opened_end
        glue(st, d, b)
        if family_ok(st):
            rec(st, d + 1, opened + 1, results)
        unglue(st, d, b)


def run_census(
    int outer_deg,
    int inner_deg,
    int n_inner,
    bint require_simple=False,
    bint require_loopless=False,
    bint require_outer_simple=False,
):
    """All rooted maps of the family, as sigma lists (alpha = xor 1, root 0)."""
    cdef int n_blocks = 1 + n_inner
    cdef int total = outer_deg + n_inner * inner_deg
    results: list = []
    if total % 2 != 0:
        return results

    cdef State st
    st.total = total
    st.n_blocks = n_blocks
    st.outer_deg = outer_deg
    st.inner_deg = inner_deg
    st.require_simple = require_simple
    st.require_loopless = require_loopless
    st.require_outer_simple = require_outer_simple
    st.uf_top = 0
    st.n_edge_slots = 0

    st.phi_next = <int*> malloc(total * sizeof(int))
    st.offsets = <int*> malloc((n_blocks + 1) * sizeof(int))
    st.partner = <int*> malloc(total * sizeof(int))
    st.parent = <int*> malloc(total * sizeof(int))
    st.size = <int*> malloc(total * sizeof(int))
    st.uf_trail = <int*> malloc(2 * total * sizeof(int))
    st.edges = <int*> malloc(2 * total * sizeof(int))

    cdef int b, i, start, deg
    st.offsets[0] = 0
    for b in range(1, n_blocks + 1):
        st.offsets[b] = outer_deg + (b - 1) * inner_deg
    for b in range(n_blocks):
        start = st.offsets[b]
        deg = outer_deg if b == 0 else inner_deg
        for i in range(deg):
            st.phi_next[start + i] = start + (i + 1) % deg
    for i in range(total):
        st.partner[i] = -1
        st.parent[i] = i
        st.size[i] = 1

    try:
        rec(&st, 0, 1, results)
    finally:
        free(st.phi_next)
        free(st.offsets)
        free(st.partner)
        free(st.parent)
        free(st.size)
        free(st.uf_trail)
        free(st.edges)
    return results
