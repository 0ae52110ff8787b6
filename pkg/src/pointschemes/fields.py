"""Exact scalar arithmetic over prime fields F_p and the rationals.

Scalar values are plain Python objects: residues are ints in [0, p) and
rationals are `fractions.Fraction`.  A field object supplies the
arithmetic but never wraps the values, so tight loops may use native
`+` / `*` on raw values and call :meth:`Field.reduce` once at the end.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Field", "PrimeField", "Rationals", "field_from_label", "parse_scalar"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of :class:`PrimeField` and :class:`Rationals`."""

    is_prime = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def arith(self, a, b, op: str):
        """Dispatch one of ``add``, ``sub``, ``mul``, ``div`` by name."""
        if op not in ("add", "sub", "mul", "div"):
            raise ValueError(f"unknown operation {op!r}")
        return getattr(self, op)(a, b)

    def reduce(self, x):
        """Normalize a raw value produced by native `+` / `*` arithmetic."""
        raise NotImplementedError

    def validate(self, x) -> bool:
        """True iff ``x`` is a canonical scalar of this field."""
        raise NotImplementedError

    def elements(self):
        """All field elements in canonical order (finite fields only)."""
        raise NotImplementedError

    def label(self) -> str:
        """Field name as used in algebra files: ``Q`` or the prime."""
        raise NotImplementedError

    def format_scalar(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        """Parse a scalar literal (integer or fraction) into this field."""
        raise NotImplementedError


class PrimeField(Field):
    """The field F_p for a prime 2 <= p < 2**31; values are residues."""

    is_prime = True
    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("p must be an integer")
        if not (2 <= p < 2**31):
            raise ValueError(f"p must satisfy 2 <= p < 2**31, got {p}")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return (a * pow(b, -1, self.p)) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def neg(self, a):
        return (-a) % self.p

    def reduce(self, x):
        return x % self.p

    def validate(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.p

    def elements(self):
        return list(range(self.p))

    def label(self) -> str:
        return str(self.p)

    def format_scalar(self, x) -> str:
        return f"{self.p}:{x % self.p}"

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p


class Rationals(Field):
    """The rationals; values are `Fraction` in lowest terms."""

    __slots__ = ()

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return Fraction(a + b)

    def sub(self, a, b):
        return Fraction(a - b)

    def mul(self, a, b):
        return Fraction(a * b)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / Fraction(b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(a)

    def neg(self, a):
        return Fraction(-a)

    def reduce(self, x):
        return Fraction(x)

    def validate(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def elements(self):
        raise ValueError("cannot enumerate an infinite field")

    def label(self) -> str:
        return "Q"

    def format_scalar(self, x) -> str:
        return str(Fraction(x))

    def parse(self, text: str):
        return Fraction(text.strip())


def field_from_label(label: str) -> Field:
    """Build a field from its algebra-file name: ``Q`` or a prime."""
    label = label.strip()
    if label == "Q":
        return Rationals()
    return PrimeField(int(label))


def parse_scalar(text: str):
    """Parse a context-free scalar literal.

    ``<p>:<residue>`` denotes a prime-field residue and carries its own
    field; anything else is read as a rational.  Returns ``(field, value)``
    and round-trips exactly with ``field.format_scalar``.
    """
    text = text.strip()
    if ":" in text:
        p_text, r_text = text.split(":", 1)
        field = PrimeField(int(p_text))
        r = int(r_text)
        if not 0 <= r < field.p:
            raise ValueError(f"residue {r} out of range for F_{field.p}")
        return field, r
    return Rationals(), Fraction(text)
