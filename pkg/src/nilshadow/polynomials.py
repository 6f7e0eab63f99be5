"""Exact univariate polynomials over Q or Q(sqrt(d)).

Coefficients are stored low degree first; the zero polynomial has no
coefficients.  Division, gcd and the square-free part are exact.  For
spectrum work a polynomial of degree <= 4 over Q can be split into
linear factors and irreducible quadratics, whose roots are carried
around exactly as `RootValue` objects r + c*sqrt(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence, Union

from .scalars import ONE, ZERO, Q, Scalar, square_free_decomposition

__all__ = [
    "Polynomial",
    "UnfactorablePolynomialError",
    "LinearRoot",
    "QuadPair",
    "RootValue",
    "squarefree_part",
    "factor_into_atoms",
    "roots_of_atoms",
]


class UnfactorablePolynomialError(ValueError):
    """Polynomial has an irreducible factor of degree > 2 over the field."""


class Polynomial:
    """Univariate polynomial sum(c[i] * t^i) with exact Scalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[Scalar, int, str]] = ()):
        cs = [Scalar.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def x() -> Polynomial:
        return Polynomial([0, 1])

    @staticmethod
    def constant(c) -> Polynomial:
        return Polynomial([Scalar.of(c)])

    @staticmethod
    def from_roots(roots: Sequence[Union[Scalar, int, str]]) -> Polynomial:
        p = Polynomial([1])
        for r in roots:
            p = p * Polynomial([-Scalar.of(r), 1])
        return p

    # -- basics ----------------------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading() == ONE

    def monic(self) -> Polynomial:
        lead = self.leading()
        if lead == ONE:
            return self
        inv = lead.inverse()
        return Polynomial([c * inv for c in self.coeffs])

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring arithmetic ---------------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (Scalar, int)):
            s = Scalar.of(other)
            return Polynomial([c * s for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quo = [ZERO] * (dq + 1)
        inv_lead = other.leading().inverse()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] * inv_lead
            quo[k] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def divides(self, other: Polynomial) -> bool:
        return (other % self).is_zero()

    def derivative(self) -> Polynomial:
        return Polynomial([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, value: Scalar) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: Polynomial) -> Polynomial:
        """self(inner(t))."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def shift(self, c: Scalar) -> Polynomial:
        """self(t + c)."""
        return self.compose(Polynomial([c, 1]))

    # -- display ----------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self[i]
            if c.is_zero():
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                parts.append(t if c == ONE else f"({c})*{t}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial<{self}>"


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(g, u, v) with u*p + v*q = g, g the monic gcd."""
    r0, r1 = p, q
    u0, u1 = Polynomial([1]), Polynomial()
    v0, v1 = Polynomial(), Polynomial([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
        v0, v1 = v1, v0 - quo * v1
    if r0.is_zero():
        return r0, u0, v0
    lead_inv = r0.leading().inverse()
    return r0 * lead_inv, u0 * lead_inv, v0 * lead_inv


def squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), made monic."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree() <= 0:
        return p.monic()
    return (p // g).monic()


# -- root atoms (degree <= 4, rational coefficients) ----------------------------


@dataclass(frozen=True)
class LinearRoot:
    """A root lying in the working field."""

    value: Scalar


@dataclass(frozen=True)
class QuadPair:
    """Conjugate root pair of an irreducible monic t^2 - s*t + q."""

    s: Scalar  # sum of the pair
    q: Scalar  # product of the pair


Atom = Union[LinearRoot, QuadPair]


@dataclass(frozen=True)
class RootValue:
    """Exact root r + c*sqrt(m); m is square-free, possibly negative.

    Only the linear operations needed for eigenvalue-pattern matching are
    provided; adding values from incompatible extensions returns None.
    """

    r: object  # rational
    c: object  # rational
    m: int

    @staticmethod
    def rational(x) -> RootValue:
        return RootValue(Q(x), Q(0), 1)

    def is_real(self) -> bool:
        return self.m >= 0 or self.c == 0

    def __add__(self, other: RootValue) -> RootValue | None:
        if self.c == 0:
            m = other.m
        elif other.c == 0 or other.m == self.m:
            m = self.m
        else:
            return None
        c = self.c + other.c
        return RootValue(self.r + other.r, c, m if c != 0 else 1)

    def scale(self, k: int) -> RootValue:
        c = self.c * k
        return RootValue(self.r * k, c, self.m if c != 0 else 1)

    def __str__(self) -> str:
        if self.c == 0:
            return str(self.r)
        return f"{self.r}+{self.c}*sqrt({self.m})"


def _rational_roots(p: Polynomial) -> list[Scalar]:
    """All rational roots of p (with multiplicity), p over Q."""
    roots: list[Scalar] = []
    t = Polynomial.x()
    while not p.is_zero() and p[0].is_zero() and p.degree() >= 1:
        roots.append(ZERO)
        p = p // t
    if p.degree() < 1:
        return roots
    # clear denominators to an integer polynomial
    den = 1
    for c in p.coeffs:
        den = den * int(Q(c.a).denominator) // _gcd(den, int(Q(c.a).denominator))
    ints = [int(Q(c.a) * den) for c in p.coeffs]
    lead, const = abs(ints[-1]), abs(ints[0])
    for num in _divisors(const):
        for dd in _divisors(lead):
            for sign in (1, -1):
                cand = Scalar(Q(sign * num, dd))
                while p.degree() >= 1 and p(cand).is_zero():
                    roots.append(cand)
                    p = p // Polynomial([-cand, 1])
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [1]
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def _rational_sqrt(x) -> object | None:
    """Exact square root of a nonnegative rational, or None."""
    x = Q(x)
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Q(rn, rd)
    return None


def _split_quadratic(b: Scalar, c: Scalar) -> list[Atom]:
    """Atoms of monic t^2 + b*t + c over Q."""
    disc = b * b - Scalar(4) * c
    root = _rational_sqrt(disc.a)
    if root is not None:
        half = Q(1, 2)
        return [
            LinearRoot(Scalar((-b.a + root) * half)),
            LinearRoot(Scalar((-b.a - root) * half)),
        ]
    return [QuadPair(-b, c)]


def _split_quartic(p: Polynomial) -> list[Atom] | None:
    """Factor a monic rational quartic with no rational roots into two
    quadratics over Q, or None if it is irreducible that way."""
    p3 = p[3]
    shift = Scalar(-p3.a / 4)
    dep = p.shift(shift)  # y^4 + P y^2 + Q y + R
    P, Qc, R = dep[2], dep[1], dep[0]
    # z = a^2 satisfies z^3 + 2P z^2 + (P^2 - 4R) z - Q^2 = 0 for a factor
    # split (y^2 + a y + b)(y^2 - a y + c)
    resolvent = Polynomial([-(Qc * Qc), P * P - Scalar(4) * R, Scalar(2) * P, ONE])
    for z in _rational_roots(resolvent):
        a_rat = _rational_sqrt(z.a)
        if a_rat is None:
            continue
        a = Scalar(a_rat)
        if a.is_zero():
            if not Qc.is_zero():
                continue
            # biquadratic: y^4 + P y^2 + R = (y^2 + u)(y^2 + w)
            disc = P * P - Scalar(4) * R
            root = _rational_sqrt(disc.a)
            if root is None:
                continue
            u = (P + Scalar(root)) / 2
            w = (P - Scalar(root)) / 2
            f1 = Polynomial([u, ZERO, ONE])
            f2 = Polynomial([w, ZERO, ONE])
        else:
            csum = P + a * a
            cdif = Qc / a
            b = (csum - cdif) / 2
            cc = (csum + cdif) / 2
            if b * cc != R:
                continue
            f1 = Polynomial([b, a, ONE])
            f2 = Polynomial([cc, -a, ONE])
        atoms: list[Atom] = []
        for f in (f1, f2):
            g = f.shift(-shift)  # undo the depression
            atoms.extend(_split_quadratic(g[1], g[0]))
        return atoms
    return None


def factor_into_atoms(p: Polynomial) -> list[Atom]:
    """Split a monic polynomial of degree <= 4 over Q into linear roots and
    irreducible quadratic pairs.

    Raises UnfactorablePolynomialError for coefficients outside Q or an
    irreducible factor of degree > 2.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if any(not c.is_rational() for c in p.coeffs):
        raise UnfactorablePolynomialError("coefficients outside Q")
    p = p.monic()
    atoms: list[Atom] = [LinearRoot(r) for r in _rational_roots(p)]
    for r in atoms:
        p = p // Polynomial([-r.value, 1])
    deg = p.degree()
    if deg == 0:
        return atoms
    if deg == 2:
        return atoms + _split_quadratic(p[1], p[0])
    if deg == 4:
        quads = _split_quartic(p)
        if quads is not None:
            return atoms + quads
    raise UnfactorablePolynomialError(f"irreducible factor of degree {deg}: {p}")


def roots_of_atoms(atoms: Iterable[Atom]) -> list[RootValue]:
    """Exact roots of the atoms, conjugate pairs expanded."""
    out: list[RootValue] = []
    for atom in atoms:
        if isinstance(atom, LinearRoot):
            v = atom.value
            if v.is_rational():
                out.append(RootValue.rational(v.a))
            else:
                out.append(RootValue(Q(v.a), Q(v.b), v.d))
        else:
            disc = atom.s * atom.s - Scalar(4) * atom.q
            num, den = int(Q(disc.a).numerator), int(Q(disc.a).denominator)
            k, m = square_free_decomposition(num * den)
            half_r = Q(atom.s.a) / 2
            half_c = Q(k, 2 * den)
            out.append(RootValue(half_r, half_c, m))
            out.append(RootValue(half_r, -half_c, m))
    return out
