"""Dense univariate polynomials over a :class:`~frobdeg.field.Field`.

Coefficients are stored ascending (raw field values) with no trailing zeros; the
zero polynomial has degree ``NEG_INF``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegreeOverflow,
    DivisionByZero,
    FieldMismatch,
    InvalidInput,
    ParseError,
    UndefinedGcd,
    VerificationFailed,
)
from .field import ExtensionField, Field, FieldElement, PrimeField, Rationals, embed_raw

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field.convert(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _from_raw(cls, field: Field, coeffs) -> "Poly":
        """Build from raw values without conversion (trailing zeros are trimmed)."""
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._from_raw(field, ())

    @classmethod
    def constant(cls, field: Field, c=1) -> "Poly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, k: int, c=1) -> "Poly":
        return cls(field, [0] * k + [c])

    @classmethod
    def t(cls, field: Field) -> "Poly":
        return cls.monomial(field, 1)

    # -- basic properties -------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        """Raw leading coefficient (field zero for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def lc(self) -> FieldElement:
        return FieldElement(self.field, self.leading)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def in_nonneg_cone(self) -> bool:
        return self.is_zero() or self.is_monic()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int) -> FieldElement:
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero
        return FieldElement(self.field, raw)

    @property
    def coefficients(self) -> tuple:
        return tuple(FieldElement(self.field, c) for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            return Poly(self.field, [other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly._from_raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._from_raw(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly._from_raw(F, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        F = self.field
        c = F.convert(c)
        return Poly._from_raw(F, [F.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return Poly._from_raw(self.field, (self.field.zero,) * k + self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidInput("negative polynomial power")
        result = Poly.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lc = F.inv(other.leading)
        q = [F.zero] * max(len(r) - db, 0)
        for deg in range(len(r) - 1, db - 1, -1):
            c = r[deg]
            if F.is_zero(c):
                continue
            c = F.mul(c, inv_lc)
            shift = deg - db
            q[shift] = c
            for i, bc in enumerate(other.coeffs):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, bc))
        return Poly._from_raw(F, q), Poly._from_raw(F, r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InvalidInput(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def evaluate(self, x) -> FieldElement:
        F = self.field
        x = F.convert(x)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return FieldElement(F, acc)

    __call__ = evaluate

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            lifted = self._lift(other)
        except (FieldMismatch, InvalidInput):
            return False
        if lifted is None:
            return NotImplemented
        return self.coeffs == lifted.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# -- gcd machinery -------------------------------------------------------------

def ext_gcd(f: Poly, g: Poly) -> tuple:
    """Return ``(d, u, v)`` with ``u*f + v*g = d`` and ``d`` the monic gcd."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    F = f.field
    zero, one = Poly.zero(F), Poly.constant(F, 1)
    # Euclid is run on (g, f) so that equal inputs give the coefficient on f
    old_r, old_u, old_v = g, zero, one
    r, u, v = f, one, zero
    while not r.is_zero():
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    inv_lc = F.inv(old_r.leading)
    return old_r.scale(inv_lc), old_u.scale(inv_lc), old_v.scale(inv_lc)


def gcd(f: Poly, g: Poly) -> Poly:
    return ext_gcd(f, g)[0]


def gcd_all(polys: Sequence[Poly]) -> Poly:
    polys = list(polys)
    if not polys or all(p.is_zero() for p in polys):
        raise UndefinedGcd("gcd of zero polynomials is undefined")
    d = Poly.zero(polys[0].field)
    for p in polys:
        if not p.is_zero():
            d = gcd(d, p)
    return d


def bezout(polys: Sequence[Poly]) -> tuple:
    """Iterated extended Euclid: ``(D, G)`` with ``sum(G[i]*A[i]) == D``, ``D`` monic."""
    polys = list(polys)
    if len(polys) < 2:
        raise InvalidInput("bezout needs at least two polynomials")
    zero = Poly.zero(polys[0].field)
    D, G = zero, []
    for A in polys:
        if D.is_zero() and A.is_zero():
            G.append(zero)
            continue
        D, u, v = ext_gcd(D, A)
        G = [u * g for g in G] + [v]
    if D.is_zero():
        raise UndefinedGcd("gcd of zero polynomials is undefined")
    total = Poly.zero(D.field)
    for g, A in zip(G, polys):
        total = total + g * A
    if total != D:
        raise VerificationFailed("Bezout identity does not hold")
    return D, G


# -- coordinate vectors -----------------------------------------------------------

def to_vector(f: Poly, d: int) -> tuple:
    """Coefficients of ``f`` as a length-(d+1) vector, highest power first.

    A degree-e polynomial sum(c_i t^i) becomes (0, ..., 0, c_e, ..., c_0) with
    d - e leading zeros.  Entries are raw field values.
    """
    if f.degree > d:
        raise DegreeOverflow(f"degree {f.degree} exceeds {d}")
    F = f.field
    padded = f.coeffs + (F.zero,) * (d + 1 - len(f.coeffs))
    return tuple(reversed(padded))


def from_vector(vec: Sequence, field: Field) -> Poly:
    return Poly._from_raw(field, [field.convert(c) for c in reversed(vec)])


def embed_poly(f: Poly, target: Field) -> Poly:
    return Poly._from_raw(target, [embed_raw(f.field, target, c) for c in f.coeffs])


# -- text format --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        start = m.start(1) if num else m.start(2) if name else m.start(3)
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif op in "+-*/^()":
            tokens.append((op, op, start))
        else:
            raise ParseError(f"unexpected character {op!r}", text, start)
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: Field, var: str):
        self.text = text
        self.field = field
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", self.text, 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return result

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "/":
                tok = self.take()
                den = self.factor()
                if not den.is_constant() or den.is_zero():
                    raise ParseError("division by a non-constant or zero", self.text, tok[2])
                acc = acc.scale(self.field.inv(den.leading))
            elif kind in ("num", "name", "("):
                acc = acc * self.factor()  # implicit multiplication
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            base = base ** tok[1]
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.take()
        F = self.field
        if kind == "num":
            return Poly._from_raw(F, [F.from_int(value)])
        if kind == "name":
            if value == self.var:
                return Poly.t(F)
            if value == "u" and isinstance(F, ExtensionField):
                return Poly._from_raw(F, [F.generator])
            raise ParseError(f"unknown symbol {value!r}", self.text, pos)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "-":
            return -self.factor()
        raise ParseError(f"unexpected {value!r}", self.text, pos)


def parse_poly(text: str, field: Field, var: str = "t") -> Poly:
    """Parse ``t^2 - 2*t + 1``, ``1/2*t + 1/3``, ``(u+1)*t + u``, ``(t-1)^7``..."""
    try:
        return _Parser(text, field, var).parse()
    except DivisionByZero:
        raise ParseError("coefficient is not in the field", text) from None


def parse_poly_list(text: str, field: Field, var: str = "t") -> list:
    parts = [p for p in text.split(",")]
    if any(not p.strip() for p in parts):
        raise ParseError("empty entry in polynomial list", text)
    return [parse_poly(p, field, var) for p in parts]


def _coeff_text(F: Field, c) -> str:
    s = F.format(c)
    if isinstance(F, ExtensionField) and "+" in s:
        return f"({s})"
    return s


def format_poly(f: Poly, var: str = "t") -> str:
    F = f.field
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if F.is_zero(c):
            continue
        negative = isinstance(F, Rationals) and c < 0
        if negative:
            c = -c
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            body = _coeff_text(F, c)
        elif c == F.one:
            body = mono
        else:
            body = f"{_coeff_text(F, c)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)
