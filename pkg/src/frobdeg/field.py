"""Exact coefficient fields: the rationals, prime fields and their extensions.

A field object (``Rationals()``, ``PrimeField(p)``, ``ExtensionField(p, k, modulus)``)
acts as the descriptor and also carries the arithmetic on *raw* values:

* ``Rationals``       -> :class:`fractions.Fraction` in lowest terms
* ``PrimeField``      -> ``int`` in ``[0, p)``
* ``ExtensionField``  -> ``tuple`` of ``k`` ints, ascending powers of the generator ``u``

Polynomials and matrices store raw values next to their field, which keeps the
elimination loops cheap.  :class:`FieldElement` wraps a raw value for callers that
want operator syntax.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch, InvalidInput, ParseError

INFINITE = math.inf

# numpy's integer sampler is limited to int64
_MAX_RATIONAL_BOUND = 2**62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Field:
    """Common interface; concrete fields are frozen dataclasses below."""

    characteristic: int = 0

    @property
    def cardinality(self):
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.cardinality != INFINITE

    # -- raw arithmetic ---------------------------------------------------
    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def convert(self, value):
        """Canonical raw value for ``value`` (int, raw value or FieldElement)."""
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.convert(value))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # -- finite-field enumeration -----------------------------------------
    def elements(self) -> Iterator:
        """All raw values in index order (finite fields only)."""
        return (self.from_index(i) for i in range(self._require_finite()))

    def from_index(self, i: int):
        raise NotImplementedError

    def index(self, a) -> int:
        raise NotImplementedError

    def _require_finite(self) -> int:
        if not self.is_finite:
            raise InvalidInput(f"{self} is infinite")
        return self.cardinality


@dataclass(frozen=True)
class Rationals(Field):
    characteristic: int = dc_field(default=0, init=False)

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def cardinality(self):
        return INFINITE

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        return a / b

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        return Fraction(n)

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        raise InvalidInput(f"cannot interpret {value!r} as a rational")

    def format(self, a):
        return str(a)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")

    @property
    def characteristic(self):
        return self.p

    @property
    def cardinality(self):
        return self.p

    zero = 0
    one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InvalidInput(f"{value} has no image in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        raise InvalidInput(f"cannot interpret {value!r} in {self}")

    def format(self, a):
        return str(a)

    def from_index(self, i):
        return i

    def index(self, a):
        return a

    def __str__(self):
        return f"F{self.p}"


@dataclass(frozen=True)
class ExtensionField(Field):
    """GF(p^k) as F_p[u] / (modulus); ``modulus`` is ascending and monic."""

    p: int
    k: int
    modulus: tuple = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.k < 1:
            raise InvalidInput("extension degree must be positive")
        if self.modulus is None:
            object.__setattr__(self, "modulus", find_irreducible(self.p, self.k))
        mod = tuple(int(c) % self.p for c in self.modulus)
        while mod and mod[-1] == 0:
            mod = mod[:-1]
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise InvalidInput(f"modulus must be monic of degree {self.k}")
        if not is_irreducible(mod, self.p):
            raise InvalidInput(f"modulus {_format_u(mod)} is reducible over F{self.p}")
        object.__setattr__(self, "modulus", mod)

    @property
    def characteristic(self):
        return self.p

    @property
    def cardinality(self):
        return self.p**self.k

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    @property
    def generator(self):
        if self.k == 1:
            return (-self.modulus[0] % self.p,)
        return (0, 1) + (0,) * (self.k - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg] % p
            if c:
                shift = deg - k
                for i in range(k):
                    prod[shift + i] -= c * mod[i]
            prod[deg] = 0
        return tuple(c % p for c in prod[:k])

    def inv(self, a):
        if not any(a):
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.cardinality - 2)

    def is_zero(self, a):
        return not any(a)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.value
            if value.field == PrimeField(self.p):
                return self.from_int(value.value)
            raise FieldMismatch(f"{value.field} element used in {self}")
        if isinstance(value, int) and not isinstance(value, bool):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_int(PrimeField(self.p).convert(value))
        if isinstance(value, (tuple, list)) and len(value) == self.k:
            return tuple(int(c) % self.p for c in value)
        raise InvalidInput(f"cannot interpret {value!r} in {self}")

    def format(self, a):
        return _format_u(a)

    def from_index(self, i):
        digits = []
        for _ in range(self.k):
            i, r = divmod(i, self.p)
            digits.append(r)
        return tuple(digits)

    def index(self, a):
        return sum(c * self.p**i for i, c in enumerate(a))

    def __str__(self):
        return f"F{self.p}^{self.k}"


def _format_u(coeffs: Sequence[int]) -> str:
    """Ascending F_p coefficients as a polynomial in ``u`` (e.g. ``2*u+1``)."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "u" if i == 1 else f"u^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


class FieldElement:
    """An element of one of the fields above, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = field.convert(value) if not _is_raw(field, value) else value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.convert(other)
        return NotImplemented

    def _wrap(self, raw):
        return FieldElement(self.field, raw)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"

    def __str__(self):
        return self.field.format(self.value)


def _is_raw(field, value) -> bool:
    if isinstance(field, Rationals):
        return type(value) is Fraction
    if isinstance(field, PrimeField):
        return type(value) is int and 0 <= value < field.p
    if isinstance(field, ExtensionField):
        return type(value) is tuple and len(value) == field.k
    return False


def zero(field: Field) -> FieldElement:
    return FieldElement(field, field.zero)


def one(field: Field) -> FieldElement:
    return FieldElement(field, field.one)


# -- irreducible polynomials over F_p (int tuples, ascending) ---------------

def _rem_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list:
    """Remainder of a by the monic polynomial b over F_p."""
    r = [c % p for c in a]
    db = len(b) - 1
    for deg in range(len(r) - 1, db - 1, -1):
        c = r[deg]
        if c:
            shift = deg - db
            for i, bc in enumerate(b):
                r[shift + i] = (r[shift + i] - c * bc) % p
    while r and r[-1] == 0:
        r.pop()
    return r


def _monic_of_degree(p: int, e: int) -> Iterator[tuple]:
    """Monic degree-e polynomials, lexicographic in the descending coefficients."""
    for lower in itertools.product(range(p), repeat=e):
        # lower is (c_{e-1}, ..., c_0)
        yield tuple(reversed(lower)) + (1,)


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= k/2."""
    k = len(coeffs) - 1
    if k < 1:
        return False
    for e in range(1, k // 2 + 1):
        for cand in _monic_of_degree(p, e):
            if not _rem_mod_p(coeffs, cand, p):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    The result is the ascending coefficient tuple, e.g. ``(2, 0, 1)`` for
    ``u^2 + 2`` when ``p = 5, k = 2``.
    """
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if k < 1:
        raise InvalidInput("degree must be positive")
    for cand in _monic_of_degree(p, k):
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


def embed(x: FieldElement, target: Field) -> FieldElement:
    """Image of an F_p element in a field of the same characteristic."""
    src = x.field
    if not isinstance(src, PrimeField) or src.characteristic != target.characteristic:
        raise FieldMismatch(f"cannot embed {src} into {target}")
    return FieldElement(target, target.from_int(x.value))


def embed_raw(src: Field, target: Field, raw):
    if src == target:
        return raw
    if not isinstance(src, PrimeField) or src.characteristic != target.characteristic:
        raise FieldMismatch(f"cannot embed {src} into {target}")
    return target.from_int(raw)


# -- randomness ---------------------------------------------------------------

def make_rng(seed: int = 0) -> np.random.Generator:
    """PCG64 generator; use ``rng.spawn(n)`` for independent child streams."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def random_raw(field: Field, rng: np.random.Generator, bound: int = 1):
    if field.is_finite:
        return field.from_index(int(rng.integers(0, field.cardinality)))
    bound = min(max(int(bound), 1), _MAX_RATIONAL_BOUND)
    return Fraction(int(rng.integers(-bound, bound, endpoint=True)))


def random_element(field: Field, rng: np.random.Generator, bound: int = 1) -> FieldElement:
    """Uniform over a finite field; over Q a uniform integer in [-bound, bound]."""
    return FieldElement(field, random_raw(field, rng, bound))


# -- field spec strings -------------------------------------------------------

def parse_field(spec: str, modulus: Sequence[int] | None = None) -> Field:
    """``Q``, ``F<p>`` or ``F<p>^<k>``; ``modulus`` overrides the default irreducible."""
    s = spec.strip().replace(" ", "")
    if s in ("Q", "QQ"):
        if modulus is not None:
            raise ParseError("a modulus only applies to extension fields", spec)
        return Rationals()
    if not s or s[0] not in "F" or len(s) < 2:
        raise ParseError("unknown field", spec)
    body = s[1:]
    try:
        if "^" in body:
            p_text, k_text = body.split("^", 1)
            p, k = int(p_text), int(k_text)
        else:
            p, k = int(body), 1
    except ValueError:
        raise ParseError("malformed field spec", spec) from None
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if k == 1 and modulus is None:
        return PrimeField(p)
    return ExtensionField(p, k, tuple(modulus) if modulus is not None else None)
