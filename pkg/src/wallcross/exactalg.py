"""Exact arithmetic substrate: polynomials, truncated series, partitions, linear solve.

Scalars are `fractions.Fraction` throughout; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# ---------------------------------------------------------------------------
# univariate polynomials (dense, immutable)

class PolyX:
    """Polynomial in one formal variable x with Fraction coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, v):
        return cls((v,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    def degree(self):
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.c

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def constant(self):
        return self.coeff(0)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, PolyX):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == (() if other == 0 else (frac(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyX((other,))
        if not isinstance(other, PolyX):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyX(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyX(tuple(-v for v in self.c))

    def __sub__(self, other):
        return self + (-other if isinstance(other, PolyX) else PolyX((-frac(other),)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PolyX()
            return PolyX(tuple(v * other for v in self.c))
        if not isinstance(other, PolyX):
            return NotImplemented
        if not self.c or not other.c:
            return PolyX()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return PolyX(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = frac(scalar)
        return PolyX(tuple(v / s for v in self.c))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = PolyX((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x0):
        acc = Fraction(0)
        for v in reversed(self.c):
            acc = acc * x0 + v
        return acc

    def __repr__(self):
        return f"PolyX({list(self.c)!r})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            v = self.c[k]
            if v == 0:
                continue
            if k == 0:
                term = str(v)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                if v == 1:
                    term = xk
                elif v == -1:
                    term = "-" + xk
                else:
                    term = f"{v}*{xk}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)


def as_polyx(v) -> PolyX:
    return v if isinstance(v, PolyX) else PolyX((v,))


# ---------------------------------------------------------------------------
# sparse polynomials in several variables (used for the fitted coefficients)

class PolyN:
    """Polynomial in named variables, sparse exponent-tuple representation."""

    __slots__ = ("vars", "c")

    def __init__(self, var_names, coeffs=None):
        self.vars = tuple(var_names)
        c = {}
        for e, v in (coeffs or {}).items():
            v = frac(v)
            if v:
                c[tuple(e)] = v
        self.c = c

    @classmethod
    def const(cls, var_names, v):
        return cls(var_names, {(0,) * len(var_names): v})

    @classmethod
    def var(cls, var_names, name):
        e = [0] * len(var_names)
        e[list(var_names).index(name)] = 1
        return cls(var_names, {tuple(e): 1})

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable mismatch")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.c == ({} if other == 0 else {(0,) * len(self.vars): frac(other)})
        if not isinstance(other, PolyN):
            return NotImplemented
        return self.vars == other.vars and self.c == other.c

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.c.items()))))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyN.const(self.vars, other)
        self._check(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, Fraction(0)) + v
        return PolyN(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyN(self.vars, {e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyN.const(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyN(self.vars, {e: v * other for e, v in self.c.items()})
        self._check(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + v1 * v2
        return PolyN(self.vars, out)

    __rmul__ = __mul__

    def __call__(self, *values):
        acc = Fraction(0)
        for e, v in self.c.items():
            term = v
            for x, k in zip(values, e):
                term *= frac(x) ** k
            acc += term
        return acc

    def total_degree(self):
        return max((sum(e) for e in self.c), default=-1)

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, key=lambda e: (-sum(e), tuple(-k for k in e))):
            v = self.c[e]
            factors = [f"{n}^{k}" if k > 1 else n for n, k in zip(self.vars, e) if k]
            body = "*".join(factors)
            if body:
                if v == 1:
                    term = body
                elif v == -1:
                    term = "-" + body
                else:
                    term = f"{v}*{body}"
            else:
                term = str(v)
            parts.append(("+" + term) if (parts and not term.startswith("-")) else term)
        return "".join(parts)

    __repr__ = __str__


def binom_poly(z: PolyN, i: int) -> PolyN:
    """Binomial coefficient C(z, i) for a polynomial argument z; zero for i < 0."""
    if i < 0:
        return PolyN(z.vars)
    out = PolyN.const(z.vars, 1)
    for t in range(i):
        out = out * (z - t)
    return out * Fraction(1, factorial(i))


# ---------------------------------------------------------------------------
# truncated power series in a nilpotent variable z

class NonInvertibleSeries(ValueError):
    pass


class TruncatedSeries:
    """Polynomial in z truncated at z^order (inclusive); coefficients Fraction or PolyX."""

    __slots__ = ("order", "c")

    def __init__(self, order, coeffs):
        self.order = order
        c = list(coeffs)[: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.c = c

    @classmethod
    def one(cls, order):
        return cls(order, [Fraction(1)])

    @classmethod
    def constant(cls, order, v):
        return cls(order, [v])

    def coeff(self, k):
        return self.c[k] if 0 <= k <= self.order else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and all(
                a == b for a, b in zip(self.c, other.c))
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            assert self.order == other.order
            return TruncatedSeries(self.order, [a + b for a, b in zip(self.c, other.c)])
        out = list(self.c)
        out[0] = out[0] + other
        return TruncatedSeries(self.order, out)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            assert self.order == other.order
            n = self.order
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.c):
                if isinstance(a, PolyX) and a.is_zero():
                    continue
                if not isinstance(a, PolyX) and a == 0:
                    continue
                for j in range(0, n - i + 1):
                    b = other.c[j]
                    out[i + j] = out[i + j] + a * b
            return TruncatedSeries(n, out)
        return TruncatedSeries(self.order, [v * other for v in self.c])

    __rmul__ = __mul__

    def mul_linear(self, c0, c1):
        """Multiply by (c0 + c1*z) in place-free fashion; cheap hot-path helper."""
        n = self.order
        out = [self.c[k] * c0 for k in range(n + 1)]
        for k in range(1, n + 1):
            out[k] = out[k] + self.c[k - 1] * c1
        return TruncatedSeries(n, out)

    def invert(self):
        """Multiplicative inverse; requires a nonzero scalar constant term."""
        a0 = self.c[0]
        if isinstance(a0, PolyX):
            if a0.degree() > 0 or a0.is_zero():
                raise NonInvertibleSeries("non-invertible series")
            a0 = a0.constant()
        if a0 == 0:
            raise NonInvertibleSeries("non-invertible series")
        inv0 = Fraction(1) / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            s = Fraction(0)
            for k in range(1, n + 1):
                s = s + self.c[k] * out[n - k]
            out.append(-s * inv0)
        return TruncatedSeries(self.order, out)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, {self.c!r})"


def linear_power_series(order, c0, c1, n):
    """(c0 + c1*z)^n truncated at z^order, by the binomial theorem."""
    top = min(n, order)
    coeffs = []
    for k in range(top + 1):
        term = comb(n, k)
        p0 = c0 ** (n - k) if isinstance(c0, PolyX) else frac(c0) ** (n - k)
        p1 = c1 ** k if isinstance(c1, PolyX) else frac(c1) ** k
        coeffs.append(term * p0 * p1)
    return TruncatedSeries(order, coeffs)


def point_power_series(order, b, r):
    """(-1/4 + b*z^2)^r truncated at z^order."""
    coeffs = [Fraction(0)] * (order + 1)
    for t in range(min(r, order // 2) + 1):
        v = comb(r, t) * Fraction(-1, 4) ** (r - t)
        bt = b ** t if isinstance(b, PolyX) else frac(b) ** t
        coeffs[2 * t] = v * bt
    return TruncatedSeries(order, coeffs)


# ---------------------------------------------------------------------------
# partitions

@lru_cache(maxsize=None)
def partitions(n: int):
    """All partitions of n as weakly decreasing tuples, reverse-lexicographic order.

    partitions(4) = ((4,), (3,1), (2,2), (2,1,1), (1,1,1,1)).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n if n else 1, [])
    if n == 0:
        out = [()]
    return tuple(out)


def partition_count(n: int) -> int:
    return len(partitions(n))


# ---------------------------------------------------------------------------
# exact linear algebra

class RankDeficientError(ValueError):
    pass


class InconsistentSystemError(ValueError):
    def __init__(self, row_index):
        super().__init__(f"inconsistent system: equation {row_index} violated")
        self.row_index = row_index


def _pivot_size(v: Fraction) -> int:
    return abs(v.numerator) * v.denominator


def solve_linear_system(A, b):
    """Solve A x = b exactly over Fraction; A may be overdetermined.

    Full pivoting, choosing the nonzero entry with the smallest
    |numerator|*denominator to keep intermediate fractions small.
    Raises InconsistentSystemError (carrying the first violated original
    equation index) or RankDeficientError.
    """
    rows = [[frac(v) for v in row] + [frac(bi)] for row, bi in zip(A, b)]
    if not rows:
        raise RankDeficientError("rank deficient")
    ncols = len(rows[0]) - 1
    origin = list(range(len(rows)))
    colperm = list(range(ncols))
    rank = 0
    for step in range(ncols):
        best = None
        for i in range(step, len(rows)):
            for j in range(step, ncols):
                v = rows[i][j]
                if v != 0:
                    size = _pivot_size(v)
                    if best is None or size < best[0]:
                        best = (size, i, j)
        if best is None:
            break
        _, pi, pj = best
        rows[step], rows[pi] = rows[pi], rows[step]
        origin[step], origin[pi] = origin[pi], origin[step]
        if pj != step:
            for r in rows:
                r[step], r[pj] = r[pj], r[step]
            colperm[step], colperm[pj] = colperm[pj], colperm[step]
        piv = rows[step][step]
        for i in range(step + 1, len(rows)):
            f = rows[i][step] / piv
            if f:
                for j in range(step, ncols + 1):
                    rows[i][j] -= f * rows[step][j]
        rank += 1
    if rank < ncols:
        raise RankDeficientError("rank deficient")
    for i in range(rank, len(rows)):
        if rows[i][ncols] != 0:
            raise InconsistentSystemError(origin[i])
    x = [Fraction(0)] * ncols
    for i in range(rank - 1, -1, -1):
        s = rows[i][ncols]
        for j in range(i + 1, ncols):
            s -= rows[i][j] * x[j]
        x[i] = s / rows[i][i]
    out = [Fraction(0)] * ncols
    for pos, col in enumerate(colperm):
        out[col] = x[pos]
    return out
