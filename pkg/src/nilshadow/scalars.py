"""Exact scalars: rationals and real quadratic extensions Q(sqrt(d)).

Every quantity in this package is a `Scalar`, i.e. a + b*sqrt(d) with
rational a, b and a square-free positive integer d.  d == 1 is the plain
rational field (b is forced to zero there).  Arithmetic stays inside one
extension: combining two scalars from Q(sqrt(d)) and Q(sqrt(d')) with
d != d' raises MixedFieldError unless one of them is rational, in which
case it is promoted.

String form is "p/q" or "p/q+r/s*sqrt(d)" and round-trips exactly
through :meth:`Scalar.__str__` / :func:`parse_scalar`.
"""

from __future__ import annotations

import re
from math import isqrt
from typing import Iterator, Mapping, Union

try:  # gmpy2 rationals are a drop-in, faster Fraction
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

__all__ = [
    "Q",
    "Scalar",
    "MixedFieldError",
    "parse_scalar",
    "square_free_decomposition",
    "ZERO",
    "ONE",
]


class MixedFieldError(ValueError):
    """Two scalars from different quadratic extensions were combined."""


def square_free_decomposition(n: int) -> tuple[int, int]:
    """Write n = k^2 * m with m square-free (sign goes into m)."""
    if n == 0:
        return 1, 0
    sign = 1 if n > 0 else -1
    n = abs(n)
    k = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        p += 1 if p == 2 else 2
    return k, sign * n


def _is_square_free(d: int) -> bool:
    return d >= 1 and square_free_decomposition(d) == (1, d)


RatLike = Union[int, str, "Q"]


class Scalar:
    """An element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d))."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RatLike = 0, b: RatLike = 0, d: int = 1):
        a = Q(a)
        b = Q(b)
        if b == 0:
            d = 1
        elif d == 1:
            raise ValueError("sqrt part requires a discriminant d > 1")
        elif not _is_square_free(d):
            raise ValueError(f"discriminant {d} is not square-free")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):  # immutable value type
        raise AttributeError("Scalar is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def of(x: Union["Scalar", RatLike]) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, str):
            return parse_scalar(x)
        return Scalar(Q(x))

    @staticmethod
    def sqrt(n: int) -> Scalar:
        """sqrt(n) for a positive integer n, reduced to k*sqrt(m)."""
        if n <= 0:
            raise ValueError("only square roots of positive integers exist here")
        k, m = square_free_decomposition(n)
        if m == 1:
            return Scalar(k)
        return Scalar(0, k, m)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and Q(self.a).denominator == 1

    # -- field arithmetic ----------------------------------------------------

    def _join(self, other: Scalar) -> int:
        """Common discriminant, or raise when the extensions really differ."""
        if self.d == other.d:
            return self.d
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        raise MixedFieldError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")

    def __add__(self, other) -> Scalar:
        other = Scalar.of(other)
        d = self._join(other)
        return Scalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other) -> Scalar:
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> Scalar:
        return Scalar.of(other) - self

    def __mul__(self, other) -> Scalar:
        other = Scalar.of(other)
        d = self._join(other)
        if self.b == 0 and other.b == 0:
            return Scalar(self.a * other.a)
        return Scalar(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("scalar is zero")
        if self.b == 0:
            return Scalar(1 / Q(self.a))
        norm = self.a * self.a - self.b * self.b * self.d
        return Scalar(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other) -> Scalar:
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other) -> Scalar:
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> Scalar:
        """Galois conjugate a - b*sqrt(d)."""
        return Scalar(self.a, -self.b, self.d)

    # -- order (real embedding, sqrt(d) > 0) ----------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d exactly
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:  # would mean sqrt(d) rational
            raise ArithmeticError("square-free d produced a rational sqrt")
        big_is_a = lhs > rhs
        return (1 if a > 0 else -1) if big_is_a else (1 if b > 0 else -1)

    def __lt__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - Scalar.of(other)).sign() >= 0

    # -- equality / hashing / display -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, str)) or type(other) is type(Q(0)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return not self.is_zero()

    @staticmethod
    def _rat_str(q) -> str:
        q = Q(q)
        return f"{q.numerator}/{q.denominator}"

    def __str__(self) -> str:
        if self.b == 0:
            return self._rat_str(self.a)
        head = self._rat_str(self.a)
        tail = f"{self._rat_str(abs(self.b))}*sqrt({self.d})"
        return f"{head}+{tail}" if self.b > 0 else f"{head}-{tail}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)


# -- expression parser ---------------------------------------------------------
#
# Grammar (also used for catalog entries with named parameters):
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := '-' factor | INT | NAME | 'sqrt' '(' expr ')' | '(' expr ')'

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|[-+*/()])")


def _tokenize(text: str) -> Iterator[str]:
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad scalar syntax at {text[pos:]!r}")
        pos = m.end()
        yield m.group(1)
    yield ""  # sentinel


class _Parser:
    def __init__(self, text: str, env: Mapping[str, Scalar]):
        self.tokens = list(_tokenize(text))
        self.pos = 0
        self.env = env
        self.text = text

    def peek(self) -> str:
        return self.tokens[self.pos]

    def take(self) -> str:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r} in {self.text!r}")

    def expr(self) -> Scalar:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> Scalar:
        tok = self.take()
        if tok == "-":
            return -self.factor()
        if tok == "+":
            return self.factor()
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.isdigit():
            return Scalar(int(tok))
        if tok == "sqrt":
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            if not arg.is_rational() or arg.sign() <= 0:
                raise ValueError("sqrt argument must be a positive rational")
            num, den = Q(arg.a).numerator, Q(arg.a).denominator
            return Scalar.sqrt(int(num) * int(den)) / Scalar(den)
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            if tok not in self.env:
                raise ValueError(f"unknown name {tok!r} in scalar expression")
            return self.env[tok]
        raise ValueError(f"unexpected token {tok!r} in {self.text!r}")


def parse_scalar(text: str, env: Mapping[str, Scalar] | None = None) -> Scalar:
    """Parse "p/q", "p/q+r/s*sqrt(d)" or any rational expression over `env`."""
    parser = _Parser(text, env or {})
    value = parser.expr()
    if parser.peek() != "":
        raise ValueError(f"trailing input in scalar {text!r}")
    return value
