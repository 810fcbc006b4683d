"""Truncated formal power series with exact rational coefficients, and the
catalogue of counting series for planar dissections.

Everything is computed by contractive fixpoint iteration or order-by-order
extraction; every algebraic series carries a residual check of its defining
equation.  Counting series are verified to have non-negative integer
coefficients before being exposed as counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence


class SeriesError(ValueError):
    pass


class DivisorNotUnit(SeriesError):
    pass


class OrderMismatch(SeriesError):
    pass


class InnerNotNilpotent(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class NonContractive(SeriesError):
    pass


class UnknownName(SeriesError):
    pass


class BadDistance(SeriesError):
    pass


class TruncSeries:
    """Power series truncated at an explicit order, exact Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise SeriesError("empty coefficient list")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise OrderMismatch(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(order: int) -> "TruncSeries":
        return TruncSeries([0] * (order + 1))

    @staticmethod
    def const(c, order: int) -> "TruncSeries":
        return TruncSeries([c] + [0] * order)

    @staticmethod
    def x(order: int) -> "TruncSeries":
        return TruncSeries([0, 1] + [0] * (order - 1))

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.const(other, self.order)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.order, o.order)
        return TruncSeries([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * Fraction(other) for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(min(len(b) - 1, n - i) + 1):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            inv = 1 / Fraction(other)
            return TruncSeries([c * inv for c in self.coeffs])
        return self.divide(other)

    def __rtruediv__(self, other):
        return TruncSeries.const(other, self.order).divide(self)

    def __pow__(self, k: int):
        if k < 0:
            return TruncSeries.const(1, self.order).divide(self) ** (-k)
        result = TruncSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[: min(8, len(self.coeffs))])
        return f"TruncSeries([{head}{', ...' if self.order > 7 else ''}])"

    # -- structural operations -------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise OrderMismatch("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return self.order + 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by x**k; negative k requires valuation >= -k (exact division)."""
        if k >= 0:
            return TruncSeries(((Fraction(0),) * k + self.coeffs)[: self.order + 1])
        if any(self.coeffs[i] != 0 for i in range(min(-k, len(self.coeffs)))):
            raise DivisorNotUnit(f"valuation below {-k}, cannot shift down")
        return TruncSeries(self.coeffs[-k:])

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries.zero(0)
        return TruncSeries([i * self.coeffs[i] for i in range(1, self.order + 1)])

    def integrate(self) -> "TruncSeries":
        """Antiderivative with zero constant term, one order higher."""
        return TruncSeries(
            [Fraction(0)] + [self.coeffs[i] / (i + 1) for i in range(self.order + 1)]
        )

    def divide(self, other: "TruncSeries") -> "TruncSeries":
        """Exact division; the divisor must be a unit after cancelling the
        common valuation (explicit valuation-shift division)."""
        n = min(self.order, other.order)
        v = other.valuation()
        if v > n:
            raise DivisorNotUnit("division by zero series")
        if v > 0:
            return self.shift(-v).divide(other.shift(-v))
        a = self.coeffs
        b = other.coeffs
        inv0 = 1 / b[0]
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            acc = a[i] if i < len(a) else Fraction(0)
            for j in range(1, i + 1):
                if j < len(b) and b[j]:
                    acc -= b[j] * out[i - j]
            out[i] = acc * inv0
        return TruncSeries(out)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(x)); the inner series must vanish at 0."""
        if inner.coeffs[0] != 0:
            raise InnerNotNilpotent("inner series has a nonzero constant term")
        n = min(self.order, inner.order)
        result = TruncSeries.const(self.coeffs[min(n, self.order)], n)
        # Horner from the top coefficient down
        for i in range(min(n, self.order) - 1, -1, -1):
            result = result * inner.truncate(n) + self.coeffs[i]
        return result

    def sqrt(self) -> "TruncSeries":
        """Square root of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("sqrt requires constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for i in range(1, n + 1):
            acc = self.coeffs[i]
            for j in range(1, i):
                acc -= out[j] * out[i - j]
            out[i] = acc / 2
        return TruncSeries(out)

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any is not a non-negative integer."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1 or c < 0:
                raise SeriesError(f"coefficient {i} = {c} is not a non-negative integer")
            out.append(int(c))
        return out


def ts_arith(a: TruncSeries, b, op: str) -> TruncSeries:
    """Named dispatch over the basic arithmetic (convenience for the CLI)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "derivative":
        return a.derivative()
    if op == "integrate":
        return a.integrate()
    if op == "shift":
        return a.shift(int(b))
    raise UnknownName(f"unknown series operation {op!r}")


def ts_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    return outer.compose(inner)


def ts_sqrt(a: TruncSeries) -> TruncSeries:
    return a.sqrt()


@dataclass(frozen=True)
class Laurent:
    """Minimal Laurent wrapper: x**offset * series.  Only what the finite-order
    reciprocal checks need."""

    offset: int
    series: TruncSeries

    @staticmethod
    def from_series(s: TruncSeries) -> "Laurent":
        return Laurent(0, s)

    def __mul__(self, other: "Laurent") -> "Laurent":
        return Laurent(self.offset + other.offset, self.series * other.series)

    def __add__(self, other: "Laurent") -> "Laurent":
        off = min(self.offset, other.offset)
        a = self.series.shift(self.offset - off)
        b = other.series.shift(other.offset - off)
        return Laurent(off, a + b)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + Laurent(other.offset, -other.series)

    def is_zero(self) -> bool:
        return self.series.is_zero()


def laurent_reciprocal(s: TruncSeries) -> Laurent:
    """1/s for a series of positive valuation, as a Laurent element."""
    v = s.valuation()
    unit = s.shift(-v)
    return Laurent(-v, TruncSeries.const(1, unit.order).divide(unit))


def fixpoint_solve(
    step: Callable[[TruncSeries], TruncSeries],
    order: int,
    start=None,
    name: str = "",
) -> TruncSeries:
    """Solve s = step(s) by contractive iteration (one new coefficient per
    step), working at progressively growing truncation orders.  Raises
    NonContractive when the final full-order pass still moves."""
    s = TruncSeries.zero(0) if start is None else start.truncate(0)
    for m in range(order + 1):
        if s.order < m:
            s = TruncSeries(s.coeffs + (Fraction(0),) * (m - s.order))
        s = step(s).truncate(m)
    if step(s).truncate(order) != s:
        raise NonContractive(name or "fixpoint iteration did not stabilise")
    return s


@dataclass(frozen=True)
class AlgebraicSeries:
    """A named series together with its defining (cleared) equation."""

    name: str
    series: TruncSeries
    residual: Callable[[TruncSeries], TruncSeries]

    def residual_series(self) -> TruncSeries:
        return self.residual(self.series)

    def check(self) -> bool:
        return self.residual_series().is_zero()


# -- the catalogue -----------------------------------------------------------

#: size conventions for the named series (emitted as CLI metadata)
SERIES_INFO = {
    "q": ("x", "total faces of rooted simple quadrangulations"),
    "t": ("x", "half the faces of rooted simple triangulations"),
    "alpha_ternary": ("x", "nodes of rooted ternary trees"),
    "alpha_quaternary": ("x", "nodes of rooted quaternary trees"),
    "P_quad": ("x", "auxiliary algebraic series, quadrangular two-point kernel"),
    "X_quad": ("x", "distance variable, quadrangular two-point kernel"),
    "f_quad": ("x", "faces of rooted sphere quadrangulations"),
    "Q_quad": ("y", "auxiliary algebraic series, simple quadrangular kernel"),
    "Y_quad": ("y", "distance variable, simple quadrangular kernel"),
    "g_quad": ("y", "inner faces of rooted simple quadrangulations"),
    "R_quad": ("z", "auxiliary algebraic series, irreducible quadrangular kernel"),
    "Z_quad": ("z", "distance variable, irreducible quadrangular kernel"),
    "P_tri": ("x", "auxiliary algebraic series, triangular two-point kernel"),
    "X_tri": ("x", "distance variable, triangular two-point kernel"),
    "f_tri": ("x", "half the faces of simply-rooted sphere triangulations"),
    "Q_tri": ("y", "auxiliary algebraic series, simple triangular kernel"),
    "Qt_tri": ("y", "square-root companion of Q_tri"),
    "Y_tri": ("y", "distance variable, simple triangular kernel"),
    "g_tri": ("y", "half the faces of rooted simple triangulations"),
    "R_tri": ("z", "auxiliary algebraic series, irreducible triangular kernel"),
    "Rt_tri": ("z", "square-root companion of R_tri"),
    "Z_tri": ("z", "distance variable, irreducible triangular kernel"),
    "a_vertex": ("x", "quadrangular 2-dissections, marked inner vertex, outer 2-cycle unique"),
    "a_edge": ("x", "quadrangular 2-dissections, marked inner edge, outer 2-cycle unique"),
    "d_quad": ("x", "rooted quasi-simple pointed quadrangular 2-dissections, inner faces"),
    "s_tri": ("x", "simple triangulations with a marked edge, half faces"),
    "t_vertex": ("x", "rooted simple triangulations, marked inner vertex, half faces"),
    "t_edge": ("x", "rooted simple triangulations, marked inner edge, half faces"),
    "t_rootedge": ("x", "rooted simple triangulations, marked inner edge at root vertex, half faces"),
    "u_tri": ("x", "quasi-simple rooted triangular 2-dissections, no loop at root, half faces"),
    "v_tri": ("x", "quasi-simple rooted triangular 2-dissections, half faces"),
    "d3_tri": ("x", "quasi-simple pointed triangular 1-dissections, half faces"),
}


@lru_cache(maxsize=None)
def named(name: str, order: int) -> TruncSeries:
    """The catalogue entry `name` truncated at `order`."""
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownName(f"no series named {name!r}")
    return builder(order)


@lru_cache(maxsize=None)
def algebraic(name: str, order: int) -> AlgebraicSeries:
    builder = _ALGEBRAIC.get(name)
    if builder is None:
        raise UnknownName(f"no algebraic series named {name!r}")
    return builder(order)


def _one(order: int) -> TruncSeries:
    return TruncSeries.const(1, order)


def _x(order: int) -> TruncSeries:
    return TruncSeries.x(order)


# fixpoint definitions: each returns (series, residual) pairs via AlgebraicSeries


def _alg_P_quad(order):
    x = _x(order)
    s = fixpoint_solve(lambda P: 1 + 3 * x * P * P, order, start=_one(order), name="P_quad")
    return AlgebraicSeries("P_quad", s, lambda P: P - 1 - 3 * x * P * P)


def _alg_alpha_ternary(order):
    x = _x(order)
    s = fixpoint_solve(lambda a: 1 + x * a**3, order, start=_one(order), name="alpha_ternary")
    return AlgebraicSeries("alpha_ternary", s, lambda a: a - 1 - x * a**3)


def _alg_alpha_quaternary(order):
    x = _x(order)
    s = fixpoint_solve(lambda a: 1 + x * a**4, order, start=_one(order), name="alpha_quaternary")
    return AlgebraicSeries("alpha_quaternary", s, lambda a: a - 1 - x * a**4)


def _alg_X_quad(order):
    P = named("P_quad", order)
    coef = (P - 1) / 3
    s = fixpoint_solve(lambda X: coef * (X * X + X + 1), order, name="X_quad")
    # cleared form of X + 1/X + 1 = 3/(P-1)
    return AlgebraicSeries("X_quad", s, lambda X: (P - 1) * (X * X + X + 1) - 3 * X)


def _alg_Q_quad(order):
    y = _x(order)
    s = fixpoint_solve(lambda Q: 1 + y * Q**3, order, start=_one(order), name="Q_quad")
    return AlgebraicSeries("Q_quad", s, lambda Q: Q - 1 - y * Q**3)


def _alg_Y_quad(order):
    Q = named("Q_quad", order)
    s = fixpoint_solve(lambda Y: (Q - 1) * (Y * Y + 1), order, name="Y_quad")
    return AlgebraicSeries("Y_quad", s, lambda Y: (Q - 1) * (Y * Y + 1) - Y)


def _alg_R_quad(order):
    z = _x(order)
    s = fixpoint_solve(lambda R: z + R * R, order, name="R_quad")
    return AlgebraicSeries("R_quad", s, lambda R: R - z - R * R)


def _alg_Z_quad(order):
    R = named("R_quad", order)
    s = fixpoint_solve(lambda Z: R * (Z * Z + 1), order, name="Z_quad")
    return AlgebraicSeries("Z_quad", s, lambda Z: R * (Z * Z + 1) - Z)


def _alg_P_tri(order):
    x = _x(order)
    s = fixpoint_solve(
        lambda P: (1 + 8 * x * P**3).sqrt(), order, start=_one(order), name="P_tri"
    )
    return AlgebraicSeries("P_tri", s, lambda P: P * P - 1 - 8 * x * P**3)


def _alg_X_tri(order):
    P = named("P_tri", order)
    coef = (P * P - 1) / 8
    s = fixpoint_solve(lambda X: coef * (X + 1) ** 2, order, name="X_tri")
    # cleared form of X + 1/X + 2 = 8/(P^2-1)
    return AlgebraicSeries("X_tri", s, lambda X: (P * P - 1) * (X + 1) ** 2 - 8 * X)


def _alg_Q_tri(order):
    y = _x(order)
    s = fixpoint_solve(lambda Q: y / (1 - Q) ** 3, order, name="Q_tri")
    return AlgebraicSeries("Q_tri", s, lambda Q: Q * (1 - Q) ** 3 - y)


def _alg_Y_tri(order):
    Q = named("Q_tri", order)
    s = fixpoint_solve(lambda Y: Q * (Y + 1) ** 2, order, name="Y_tri")
    # cleared form of Y + 1/Y + 2 = 1/Q
    return AlgebraicSeries("Y_tri", s, lambda Y: Q * (Y + 1) ** 2 - Y)


def _alg_R_tri(order):
    z = _x(order)
    s = fixpoint_solve(lambda R: z / (1 - R) ** 2, order, name="R_tri")
    return AlgebraicSeries("R_tri", s, lambda R: R * (1 - R) ** 2 - z)


def _alg_Z_tri(order):
    R = named("R_tri", order)
    s = fixpoint_solve(lambda Z: R * (Z * Z + Z + 1), order, name="Z_tri")
    # cleared form of Z + 1/Z + 1 = 1/R
    return AlgebraicSeries("Z_tri", s, lambda Z: R * (Z * Z + Z + 1) - Z)


_ALGEBRAIC = {
    "P_quad": _alg_P_quad,
    "alpha_ternary": _alg_alpha_ternary,
    "alpha_quaternary": _alg_alpha_quaternary,
    "X_quad": _alg_X_quad,
    "Q_quad": _alg_Q_quad,
    "Y_quad": _alg_Y_quad,
    "R_quad": _alg_R_quad,
    "Z_quad": _alg_Z_quad,
    "P_tri": _alg_P_tri,
    "X_tri": _alg_X_tri,
    "Q_tri": _alg_Q_tri,
    "Y_tri": _alg_Y_tri,
    "R_tri": _alg_R_tri,
    "Z_tri": _alg_Z_tri,
}


def solve_q(order: int) -> TruncSeries:
    """Rooted simple quadrangulations by total faces, from the quadratic
    first-order equation x(2q'^2 + 3q' + 2) = q'(1 + q), solved as the
    contraction q' = x(2 + 2q'^2 + 3q')/(1 + q)."""
    x = _x(order)

    def step(r):
        q = r.integrate()
        return (x * (2 + 2 * r * r + 3 * r)).divide(1 + q)

    r = fixpoint_solve(step, order, name="q")
    return r.integrate().truncate(order)


def solve_t(order: int) -> TruncSeries:
    """Rooted simple triangulations by half the face count, from
    3x t'^2 + 1 = (t + 1) t', solved as t' = (3x t'^2 + 1)/(1 + t)."""
    x = _x(order)

    def step(r):
        t = r.integrate()
        return (3 * x * r * r + 1).divide(1 + t)

    r = fixpoint_solve(step, order, name="t")
    return r.integrate().truncate(order)


def _build_q(order):
    return solve_q(order)


def _build_t(order):
    return solve_t(order)


def _build_f_quad(order):
    P = named("P_quad", order)
    return P * (4 - P) / 3 - 1


def _build_g_quad(order):
    Q = named("Q_quad", order)
    return 3 * Q - Q * Q - 2


def _build_f_tri(order):
    P = named("P_tri", order)
    return -P * (P * P - 9) / 8 - 1


def _build_g_tri(order):
    Q = named("Q_tri", order)
    return Q - 2 * Q * Q


def _build_Qt_tri(order):
    Q = named("Q_tri", order)
    return (1 + 8 * Q).sqrt()


def _build_Rt_tri(order):
    R = named("R_tri", order)
    return (1 + 9 * R).sqrt().divide((1 + R).sqrt())


def _build_a_vertex(order):
    q = named("q", order + 1)
    x = _x(order)
    return 2 * x + x * q.derivative()


def _build_a_edge(order):
    q = named("q", order + 1)
    x = _x(order)
    return 2 * x + 2 * x * q.derivative() - q.truncate(order)


def _build_d_quad(order):
    return named("a_vertex", order).divide(1 - named("a_edge", order))


def _build_s_tri(order):
    t = named("t", order + 1)
    return _x(order) * t.derivative()


def _build_t_vertex(order):
    return _build_s_tri(order)


def _build_t_edge(order):
    t = named("t", order)
    return 3 * _build_s_tri(order) - t


def _build_t_rootedge(order):
    # the valuation-cancelling division costs one order of precision
    t = named("t", order + 1)
    return (t - _x(order + 1)).divide(t)


def _uv_system(order):
    """The two-unknown linear system for quasi-simple triangular objects."""
    x = _x(order)
    tv = named("t_vertex", order)
    te = named("t_edge", order)
    tr = named("t_rootedge", order)
    one = _one(order)
    # u = tv + x(1+u) + tr*u + (te - tr)*v
    # v = tv + 2x(1+u) + te*v
    # eliminate v, then solve the unit-coefficient linear equation for u
    inv = one.divide(1 - te)
    coef_u = 1 - x - tr - (te - tr) * 2 * x * inv
    rhs = tv + x + (te - tr) * (tv + 2 * x) * inv
    u = rhs.divide(coef_u)
    v = (tv + 2 * x * (1 + u)).divide(1 - te)
    return u, v


def _build_u_tri(order):
    return _uv_system(order)[0]


def _build_v_tri(order):
    return _uv_system(order)[1]


def _build_d3_tri(order):
    return _x(order) * (1 + named("u_tri", order))


def d3_closed_form(order: int) -> TruncSeries:
    """Quasi-simple pointed triangular 1-dissections, direct rational form."""
    t = named("t", order + 1)
    x = _x(order)
    tp = t.derivative()
    t = t.truncate(order)
    num = x * (1 + t - 2 * x * tp)
    den = 1 - 2 * x + 2 * t - 3 * x * tp + t * t - 3 * x * tp * t
    return num.divide(den)


_BUILDERS: dict[str, Callable[[int], TruncSeries]] = {
    "q": _build_q,
    "t": _build_t,
    "f_quad": _build_f_quad,
    "g_quad": _build_g_quad,
    "f_tri": _build_f_tri,
    "g_tri": _build_g_tri,
    "Qt_tri": _build_Qt_tri,
    "Rt_tri": _build_Rt_tri,
    "a_vertex": _build_a_vertex,
    "a_edge": _build_a_edge,
    "d_quad": _build_d_quad,
    "s_tri": _build_s_tri,
    "t_vertex": _build_t_vertex,
    "t_edge": _build_t_edge,
    "t_rootedge": _build_t_rootedge,
    "u_tri": _build_u_tri,
    "v_tri": _build_v_tri,
    "d3_tri": _build_d3_tri,
}
for _name in _ALGEBRAIC:
    _BUILDERS[_name] = lambda order, _n=_name: algebraic(_n, order).series


def derived_series(name: str, order: int) -> TruncSeries:
    """Catalogue lookup by name (raises UnknownName)."""
    return named(name, order)


#: level-variable series per two-point family
_X_BY_FAMILY = {
    "quad": "X_quad",
    "quad_simple": "Y_quad",
    "quad_irred": "Z_quad",
    "tri": "X_tri",
    "tri_simple": "Y_tri",
    "tri_irred": "Z_tri",
}


def solve_X(family: str, order: int) -> AlgebraicSeries:
    """The distance variable of a two-point family, with its residual check."""
    name = _X_BY_FAMILY.get(family)
    if name is None:
        raise UnknownName(f"no level variable for family {family!r}")
    return algebraic(name, order)


# -- two-point families -------------------------------------------------------

TWO_POINT_FAMILIES = ("quad", "quad_simple", "quad_irred", "tri", "tri_simple", "tri_irred")


def _ratio_kernel(X: TruncSeries, i: int, j: int) -> TruncSeries:
    """(1 - X^i)(1 - X^j) expanded; used inside unit-denominator ratios."""
    return (1 - X**i) * (1 - X**j)


@lru_cache(maxsize=None)
def _quad_level(family: str, i: int, order: int) -> TruncSeries:
    """X_i-style level series for the three quadrangular kernels."""
    if family == "quad":
        X, Xinf = named("X_quad", order), named("P_quad", order)
    elif family == "quad_simple":
        X, Xinf = named("Y_quad", order), named("Q_quad", order)
    else:
        X, Xinf = named("Z_quad", order), named("R_quad", order) + 1
    if i == 0:
        return TruncSeries.zero(order)
    num = _ratio_kernel(X, i, i + 3)
    den = _ratio_kernel(X, i + 1, i + 2)
    return Xinf * num.divide(den)


@lru_cache(maxsize=None)
def _tri_level(family: str, i: int, order: int) -> tuple[TruncSeries, TruncSeries]:
    """(X_i, A_i^2)-style pair for the three triangular kernels.  Only the
    squared companion is a power series, so it is never unsquared."""
    if family == "tri":
        X = named("X_tri", order)
        P = named("P_tri", order)
        Xinf = P
        Ainf2 = (2 * P * (P - 1)).divide(1 + P)
        w = P
    elif family == "tri_simple":
        X = named("Y_tri", order)
        Q = named("Q_tri", order)
        Qt = named("Qt_tri", order)
        Xinf = _one(order).divide(Qt * (1 - Q) ** 2)
        Ainf2 = (16 * Q).divide(Qt * (1 + Qt) ** 2 * (1 - Q) ** 2)
        w = Qt
    else:
        X = named("Z_tri", order)
        R = named("R_tri", order)
        Rt = named("Rt_tri", order)
        Xinf = _one(order).divide(Rt * (1 - R))
        Ainf2 = (16 * R).divide((Rt + 1) ** 2 * Rt * (1 - R * R))
        w = Rt
    if i < 0:
        raise BadDistance("negative level")
    if i == 0:
        Xi = TruncSeries.zero(order)
    else:
        Xi = Xinf * _ratio_kernel(X, i, i + 2).divide((1 - X ** (i + 1)) ** 2)
    correction = ((w + 1) / 4) * (X**i) * _ratio_kernel(X, 1, 2).divide(
        _ratio_kernel(X, i + 1, i + 2)
    )
    Ai2 = Ainf2 * (1 - correction) ** 2
    return Xi, Ai2


def two_point(family: str, i: int, order: int) -> TruncSeries:
    """Generating series of symmetric dissections whose center sits at
    distance i from the outer boundary (independent of the symmetry order).

    quad families count by (inner faces)/k; triangular ones by n with
    (2n+1)k inner faces.  The irreducible variants require symmetry order
    at least 3 (quadrangular) or 4 (triangular); the series themselves do
    not depend on the order.
    """
    if family not in TWO_POINT_FAMILIES:
        raise UnknownName(f"unknown two-point family {family!r}")
    if i <= 0:
        raise BadDistance("distance must be at least 1")
    if family.startswith("quad"):
        return _quad_level(family, i + 1, order) - _quad_level(family, i, order)
    Xi1, Ai2 = _tri_level(family, i + 1, order)
    Xim, Aim2 = _tri_level(family, i - 1, order)
    _, Ai2_i = _tri_level(family, i, order)
    return Xi1 - Xim + Ai2_i - Aim2


def two_point_level(family: str, i: int, order: int) -> TruncSeries:
    """The raw level series (X_i / Y_i / Z_i analogue) for telescoping checks."""
    if family.startswith("quad"):
        return _quad_level(family, i, order)
    return _tri_level(family, i, order)[0]


# -- identity checks -----------------------------------------------------------


def check_residuals(order: int = 30) -> dict[str, bool]:
    return {name: algebraic(name, order).check() for name in _ALGEBRAIC}


def substitution_y_of_x(order: int) -> TruncSeries:
    """y = x(1+f)^2 for quadrangulations."""
    f = named("f_quad", order)
    return _x(order) * (1 + f) ** 2


def substitution_y_of_x_tri(order: int) -> TruncSeries:
    """y = x(1+f)^3 for triangulations."""
    f = named("f_tri", order)
    return _x(order) * (1 + f) ** 3


def check_change_of_variables(lemma: str, order: int = 15) -> bool:
    """Coefficientwise verification of the four substitution lemmas."""
    if lemma == "xy_quad":
        y = substitution_y_of_x(order)
        P = named("P_quad", order)
        Qy = named("Q_quad", order).compose(y)
        return (P - (4 - TruncSeries.const(3, order).divide(Qy))).is_zero()
    if lemma == "yz_quad":
        g = named("g_quad", order)
        Q = named("Q_quad", order)
        Rg = named("R_quad", order).compose(g)
        return (Q - (Rg + 1)).is_zero()
    if lemma == "xy_triang":
        y = substitution_y_of_x_tri(order)
        P = named("P_tri", order)
        Qy = named("Q_tri", order).compose(y)
        ok1 = (Qy - (P * P - 1) / 8).is_zero()
        Qty = named("Qt_tri", order).compose(y)
        return ok1 and (Qty - P).is_zero()
    if lemma == "yz_triang":
        g = named("g_tri", order)
        y = _x(order)
        z = (g * g).divide(y)
        Q = named("Q_tri", order)
        Rz = named("R_tri", order).compose(z)
        ok1 = (Rz - Q.divide(1 - Q)).is_zero()
        Rtz = named("Rt_tri", order).compose(z)
        return ok1 and (Rtz - named("Qt_tri", order)).is_zero()
    raise UnknownName(f"unknown change-of-variables lemma {lemma!r}")
