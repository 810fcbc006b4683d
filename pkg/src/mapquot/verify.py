"""Acceptance checks: every headline statement the package makes, runnable as
one suite.  Each check returns (ok, detail); run_suite gathers them with
timings.  The CLI `verify` subcommand and the acceptance tests both call
into this module so there is a single source of truth.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from typing import Callable, Iterable

from mapquot import census
from mapquot import series as S
from mapquot.maps import (
    PlaneMap,
    PointedMap,
    is_quasi_simple,
    is_simple,
    unrooted_code,
)
from mapquot.orientations import (
    OrientationInfeasible,
    check_symmetric_minimal,
    directed_simple_cycles,
    find_d_orientation,
    has_d_orientation,
    is_minimal,
    leftmost_path,
    minimize,
)
from mapquot.quotient import (
    classical_quotient,
    phi,
    phi_inverse,
    phi_tri,
    phi_tri_inverse,
    unroll,
    verify_quotient_lemmas,
)

GOLDEN_Q = [0, 0, 1, 2, 6, 22, 91, 408, 1938]
GOLDEN_T = [0, 1, 1, 3, 13, 68, 399, 2530, 16965]


def check_series_golden(small: bool = False) -> tuple[bool, str]:
    """q and t reproduce their printed developments; order 30 within 1s."""
    t0 = time.perf_counter()
    q = S.named("q", 30)
    t = S.named("t", 30)
    elapsed = time.perf_counter() - t0
    ok = (
        [int(c) for c in q.coeffs[:9]] == GOLDEN_Q
        and [int(c) for c in t.coeffs[:9]] == GOLDEN_T
        and elapsed < 1.0
    )
    return ok, f"q,t to order 30 in {elapsed:.3f}s"


def check_closed_forms(small: bool = False) -> tuple[bool, str]:
    """Ternary/quaternary-tree closed forms to order 50 and the factorial
    formulas (q indexed by total faces, formula argument = inner faces)."""
    order = 25 if small else 50
    x = S.TruncSeries.x(order)
    q = S.named("q", order)
    t = S.named("t", order)
    a3 = S.named("alpha_ternary", order)
    a4 = S.named("alpha_quaternary", order)
    ok = (q - x * (a3 - 2) * (1 - a3)).is_zero()
    # cleared form of t = (a-2)(1-a)/a^2 avoids a costly series division
    ok &= (t * a4 * a4 - (a4 - 2) * (1 - a4)).is_zero()
    for n in range(1, 21):
        tn = 2 * math.factorial(4 * n - 3) // (
            math.factorial(n) * math.factorial(3 * n - 1)
        )
        ok &= t[n] == tn
    for m in range(2, 21):
        n = m - 1  # the factorial formula counts by inner faces
        qm = 4 * math.factorial(3 * n) // (
            math.factorial(n) * math.factorial(2 * n + 2)
        )
        ok &= q[m] == qm
    return ok, f"closed forms to order {order}, factorial formulas to 20"


def check_cross_series(small: bool = False) -> tuple[bool, str]:
    """Derived-series identities and the direct-solution equations."""
    y = S.TruncSeries.x(20)
    q = S.named("q", 21)
    g_quad = S.named("g_quad", 20)
    ok = (y * g_quad - q.truncate(20)).is_zero()
    ok &= (S.named("g_tri", 20) - S.named("t", 20)).is_zero()
    ok &= (S.named("d3_tri", 15) - S.d3_closed_form(15)).is_zero()
    # the rooted pointed 2-dissection series coincides with q'
    d = S.named("d_quad", 15)
    qp = S.named("q", 16).derivative()
    ok &= (d - qp).is_zero()
    # direct-solution identities
    r = S.named("q", 22).derivative()  # order 21
    x = S.TruncSeries.x(20)
    ok &= ((r + 1) * (r * (r + 2) + 2 * x * r.derivative() * (r - 1))).truncate(20).is_zero()
    # conserved quantity of the derivative equation: 4q - 2xr + xr^2 = 0
    ok &= (4 * S.named("q", 20) - 2 * x * r + x * r * r).is_zero()
    rt = S.named("t", 21).derivative()  # order 20
    ok &= ((x * rt * rt + 1) ** 2 - rt).is_zero()
    # tree-substitution identities from the direct proofs
    a3 = S.named("alpha_ternary", 20)
    ok &= (x - (a3 - 1) / a3**3).is_zero()
    ok &= (r - (2 * a3 - 2)).is_zero()
    a4 = S.named("alpha_quaternary", 20)
    ok &= (rt - a4 * a4).is_zero()
    return ok, "g/q/t, d3, and direct-solution identities"


def check_census_series(small: bool = False) -> tuple[bool, str]:
    """Exhaustive counts match series coefficients."""
    q = S.named("q", 10)
    t = S.named("t", 10)
    qmax = 5 if small else 6
    details = []
    ok = True
    for n in range(2, qmax + 1):
        c = len(census.rooted_quadrangulations(n, simple=True))
        ok &= c == q[n]
        details.append(c)
    tmax = 3 if small else 4
    for n in range(1, tmax + 1):
        c = len(census.rooted_triangulations(2 * n, simple=True))
        ok &= c == t[n]
    # sphere families against f
    f_quad = S.named("f_quad", 6)
    for n in range(1, 4 if small else 7):
        ok &= len(census.rooted_sphere_quads(n)) == f_quad[n]
    f_tri = S.named("f_tri", 4)
    for n in range(1, 4):
        ok &= len(census.simply_rooted_sphere_tris(2 * n)) == f_tri[n]
    return ok, f"q counts {details}, t and sphere families match"


def check_bijections(small: bool = False) -> tuple[bool, str]:
    """Edge-marking quotients: cardinalities, injectivity and round trips."""
    ok = True
    qmax = 3 if small else 4
    for n in range(1, qmax + 1):
        members = census.symmetric_simple_quadrangulations(n)
        expect = census.marked_edge_count(census.rooted_quadrangulations(n + 1, simple=True))
        images = set()
        for sym in members:
            mm = phi(sym)
            images.add(mm.code())
            back = phi_inverse(mm.map, mm.marked_edge)
            ok &= unrooted_code(back.plane_map, pointed=back.center) == unrooted_code(
                sym.plane_map, pointed=sym.center
            )
        ok &= len(images) == len(members) == expect
    # even sizes have no symmetric triangulations
    ok &= census.count_symmetric(3, 3, 3, 6, simple=True) == 0
    for n in (1, 3):
        members = census.symmetric_simple_triangulations(n)
        expect = census.marked_edge_count(census.rooted_triangulations(n + 1, simple=True))
        images = set()
        for sym in members:
            mm = phi_tri(sym)
            images.add(mm.code())
            back = phi_tri_inverse(mm.map, mm.marked_edge)
            ok &= unrooted_code(back.plane_map, pointed=back.center) == unrooted_code(
                sym.plane_map, pointed=sym.center
            )
        ok &= len(images) == len(members) == expect
    # rooted corollaries: marked face <-> rooted quasi-simple pointed
    for n in range(1, 4):
        ok &= census.rooted_marked_face_quads(n) == census.rooted_quasi_simple_pointed_2d(n)
    # triangular corollary: marked edge <-> quasi-simple pointed 1-dissections
    for n in (1, 2, 3):
        lhs = census.marked_edge_count(census.rooted_triangulations(2 * n, simple=True))
        rhs = len(
            census.pointed_dissection_classes(3, 2 * n - 1, quasi_simple=True)
        )
        ok &= lhs == rhs
    return ok, f"theorem cardinalities and round trips to n={qmax}"


def _symmetric_suite(small: bool):
    sizes = [
        (4, 4, 2, (2, 4, 6) if small else (2, 4, 6, 8), True),
        (4, 4, 2, (2, 4), False),
        (4, 6, 3, (3, 6), False),
        (3, 3, 3, (3,) if small else (3, 9), True),
        (3, 6, 2, (2, 4), False),
    ]
    for inner, outer, k, n_inners, simple in sizes:
        for n_inner in n_inners:
            yield from census.symmetric_members(inner, outer, k, n_inner, simple=simple)


def check_quotient_lemmas(small: bool = False) -> tuple[bool, str]:
    """Count/distance/quasi-simplicity relations for every symmetric census
    member and every unroll output."""
    ok = True
    count = 0
    for sym in _symmetric_suite(small):
        rep = verify_quotient_lemmas(sym)
        ok &= all(rep.values())
        count += 1
    # unroll outputs round-trip and satisfy the lemmas
    for deg, sizes in ((4, (1, 2, 3)), (3, (1, 3))):
        for n in sizes:
            for p in census.pointed_dissection_classes(deg, n):
                for k in (2, 3):
                    sym = unroll(p, k)
                    rep = verify_quotient_lemmas(sym)
                    ok &= all(rep.values())
                    q = classical_quotient(sym)
                    ok &= unrooted_code(q.base, pointed=q.pointed_vertex) == unrooted_code(
                        p.base, pointed=p.pointed_vertex
                    )
                    count += 1
    return ok, f"{count} symmetric maps checked"


def check_orientations(small: bool = False) -> tuple[bool, str]:
    """d-orientation suite over every quadrangulation/triangulation under cap."""
    ok = True
    paths = 0
    fams = [(4, 2, range(2, 6 if small else 8)), (3, 3, range(2, 7 if small else 11, 2))]
    for deg, d, sizes in fams:
        for n in sizes:
            fam = (
                census.rooted_quadrangulations(n, simple=False)
                if deg == 4
                else census.rooted_triangulations(n, simple=False)
            )
            for m in fam:
                feasible = has_d_orientation(m, d)
                ok &= feasible == is_simple(m)
                if not feasible:
                    continue
                o = find_d_orientation(m, d)
                mo = minimize(o)
                ok &= is_minimal(mo)
                ok &= len(m.inner_edges()) == d * len(m.inner_vertices())
                cycles = directed_simple_cycles(o)
                if cycles:
                    o2 = o.reversed_cycle(cycles[0])
                    ok &= minimize(o2).along == mo.along
                for e, dart in enumerate(mo.along):
                    if dart is None:
                        continue
                    leftmost_path(mo, dart)  # raises unless simple + ends outside
                    paths += 1
    # minimal orientations of symmetric members are rotation invariant
    for n in (1, 2) if small else (1, 2, 3):
        for sym in census.symmetric_simple_quadrangulations(n):
            mo = minimize(find_d_orientation(sym.plane_map, 2))
            ok &= check_symmetric_minimal(sym, mo)
    for sym in census.symmetric_simple_triangulations(1):
        mo = minimize(find_d_orientation(sym.plane_map, 3))
        ok &= check_symmetric_minimal(sym, mo)
    return ok, f"{paths} leftmost paths traced"


def check_two_point_census(small: bool = False) -> tuple[bool, str]:
    """Distance-refined series coefficients equal census counts."""
    ok = True
    nmax = 3 if small else 4
    for i in (1, 2, 3):
        F = S.two_point("quad", i, nmax)
        for n in range(1, nmax + 1):
            ok &= F[n] == census.count_two_point_quad(n, i)
    imax = 2
    ntri = 3 if small else 4
    for i in range(1, imax + 1):
        F = S.two_point("tri", i, ntri)
        for n in range(0, ntri + 1):
            ok &= F[n] == census.count_pointed_dissections(3, 2 * n + 1, distance=i)
    for i in (1, 2):
        G = S.two_point("quad_simple", i, 3)
        for n in range(1, 4):
            ok &= G[n] == census.count_symmetric(4, 4, 2, 2 * n, simple=True, distance=i)
    return ok, f"two-point tables to size {nmax} (quad), {2*ntri+1} inner (tri)"


def check_residuals_substitutions(small: bool = False) -> tuple[bool, str]:
    """Defining-equation residuals and all substitution identities."""
    order = 15 if small else 30
    res = S.check_residuals(order)
    ok = all(res.values())
    sub = 12 if small else 15
    for lemma in ("xy_quad", "yz_quad", "xy_triang", "yz_triang"):
        ok &= S.check_change_of_variables(lemma, sub)
    # F from G by edge substitution; G from H by face substitution
    y_of_x = S.substitution_y_of_x(sub)
    f = S.named("f_quad", sub)
    for i in (1, 2):
        F = S.two_point("quad", i, sub)
        G = S.two_point("quad_simple", i, sub)
        ok &= (F - (1 + f) * G.compose(y_of_x)).is_zero()
        H = S.two_point("quad_irred", i, sub)
        g = S.named("g_quad", sub)
        ok &= (G - H.compose(g)).is_zero()
    y3 = S.substitution_y_of_x_tri(sub)
    f3 = S.named("f_tri", sub)
    for i in (1, 2):
        F = S.two_point("tri", i, sub)
        G = S.two_point("tri_simple", i, sub)
        ok &= (F - (1 + f3) ** 2 * G.compose(y3)).is_zero()
        H = S.two_point("tri_irred", i, sub)
        g3 = S.named("g_tri", sub)
        yv = S.TruncSeries.x(sub)
        z_of_y = (g3 * g3).divide(yv)
        ok &= (G - (g3.divide(yv)) * H.compose(z_of_y)).is_zero()
    return ok, f"residuals to {order}, substitutions to {sub}"


def check_positivity(small: bool = False) -> tuple[bool, str]:
    """Counting coefficients are non-negative integers; telescoped two-point
    sums match bucketed census totals."""
    ok = True
    order = 12 if small else 20
    for name in (
        "q", "t", "f_quad", "f_tri", "g_quad", "g_tri",
        "a_vertex", "a_edge", "d_quad", "s_tri", "t_vertex", "t_edge",
        "t_rootedge", "u_tri", "v_tri", "d3_tri",
    ):
        try:
            S.named(name, order).integer_coefficients()
        except S.SeriesError:
            ok = False
    for family in S.TWO_POINT_FAMILIES:
        for i in (1, 2, 3):
            try:
                S.two_point(family, i, 10).integer_coefficients()
            except S.SeriesError:
                ok = False
    # telescoping: sum of F_i equals the level difference and the census total
    nmax = 3 if small else 4
    big = 2 * nmax + 1
    total = S.TruncSeries.zero(nmax)
    for i in range(1, big + 1):
        total = total + S.two_point("quad", i, nmax)
    levels = S.two_point_level("quad", big + 1, nmax) - S.two_point_level("quad", 1, nmax)
    ok &= (total - levels).is_zero()
    for n in range(1, nmax + 1):
        table = census.two_point_quad_table(n)
        ok &= total[n] == table[0]
        # coefficients vanish beyond the maximal distance
        ok &= all(S.two_point("quad", i, nmax)[n] == 0 for i in range(2 * n + 1, 2 * n + 3))
    return ok, f"integrality to order {order}; telescoping to size {nmax}"


CHECKS: dict[str, Callable[[bool], tuple[bool, str]]] = {
    "series_golden": check_series_golden,
    "closed_forms": check_closed_forms,
    "cross_series": check_cross_series,
    "census_series": check_census_series,
    "bijections": check_bijections,
    "quotient_lemmas": check_quotient_lemmas,
    "orientations": check_orientations,
    "two_point_census": check_two_point_census,
    "residuals_substitutions": check_residuals_substitutions,
    "positivity": check_positivity,
}


def run_suite(
    names: Iterable[str] | None = None, small: bool = False
) -> list[dict]:
    results = []
    for name in names or CHECKS:
        fn = CHECKS[name]
        t0 = time.perf_counter()
        try:
            ok, detail = fn(small)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(
            {
                "check": name,
                "ok": bool(ok),
                "detail": detail,
                "seconds": round(time.perf_counter() - t0, 3),
            }
        )
    return results
