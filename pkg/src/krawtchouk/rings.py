"""Exact scalar rings that matrix entries live in.

Every scalar here is an immutable value supporting ``+``, ``-``, ``*`` and
exact equality (the complex-float ring compares with a tolerance instead).
Python ``int`` plays the role of the arbitrary-precision integer and
``fractions.Fraction`` the exact rational; the remaining rings are small
custom types:

* :class:`Gaussian`    -- a + b*i with rational components, i**2 = -1
* :class:`RootTwo`     -- a + b*sqrt(2) with rational components
* :class:`Poly2`       -- integer polynomials in two commuting symbols a, b
* ``complex``          -- double-precision complex, tolerance equality

A :class:`Ring` descriptor bundles the zero/one constants, checked equality,
string formatting and parsing for each of them, keyed by a short name that is
also used in the JSON serialization of matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

COMPLEX_TOL = 1e-9  # per-component tolerance for the float ring


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class Gaussian:
    """Gaussian number re + im*i with exact rational components."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __add__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return Gaussian(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return Gaussian(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gaussian(other).__sub__(self)

    def __mul__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return Gaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Gaussian(other)
        if not isinstance(other, Gaussian):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conj(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def __str__(self):
        return fmt_gaussian(self)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"


I = Gaussian(0, 1)


def _as_gaussian(x):
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, (int, Fraction)):
        return Gaussian(x)
    return NotImplemented


@dataclass(frozen=True)
class RootTwo:
    """Element a + b*sqrt(2) of the quadratic ring Q[sqrt(2)]."""

    a: Fraction
    b: Fraction

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __add__(self, other):
        other = _as_root2(other)
        if other is NotImplemented:
            return NotImplemented
        return RootTwo(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_root2(other)
        if other is NotImplemented:
            return NotImplemented
        return RootTwo(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _as_root2(other).__sub__(self)

    def __mul__(self, other):
        other = _as_root2(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + b√2)(c + d√2) = ac + 2bd + (ad + bc)√2
        return RootTwo(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return RootTwo(-self.a, -self.b)

    def __truediv__(self, other):
        other = _as_root2(other)
        if other is NotImplemented:
            return NotImplemented
        # conjugate trick: 1/(c + d√2) = (c - d√2)/(c² - 2d²)
        norm = other.a * other.a - 2 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt(2)]")
        inv = RootTwo(other.a / norm, -other.b / norm)
        return self * inv

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RootTwo(other)
        if not isinstance(other, RootTwo):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def conj(self) -> "RootTwo":
        return RootTwo(self.a, -self.b)

    def __str__(self):
        return fmt_root2(self)

    def __repr__(self):
        return f"RootTwo({self.a}, {self.b})"


SQRT2 = RootTwo(0, 1)


def _as_root2(x):
    if isinstance(x, RootTwo):
        return x
    if isinstance(x, (int, Fraction)):
        return RootTwo(x)
    return NotImplemented


def sqrt2_power(m: int) -> RootTwo:
    """2**(m/2) as an exact element of Q[sqrt(2)], for integer m >= 0."""
    if m < 0:
        raise ValueError("negative half-power of two")
    if m % 2 == 0:
        return RootTwo(2 ** (m // 2), 0)
    return RootTwo(0, 2 ** (m // 2))


class Poly2:
    """Integer polynomial in two commuting symbols ``a`` and ``b``.

    Stored as a mapping (i, j) -> coefficient of a^i b^j; zero coefficients
    are never kept.  Values are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for monom, coeff in terms.items():
                if coeff:
                    clean[monom] = coeff
        self.terms = clean

    @staticmethod
    def const(c: int) -> "Poly2":
        return Poly2({(0, 0): c})

    @staticmethod
    def gen_a() -> "Poly2":
        return Poly2({(1, 0): 1})

    @staticmethod
    def gen_b() -> "Poly2":
        return Poly2({(0, 1): 1})

    def __add__(self, other):
        other = _as_poly2(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for monom, coeff in other.terms.items():
            new = terms.get(monom, 0) + coeff
            if new:
                terms[monom] = new
            else:
                terms.pop(monom, None)
        return Poly2(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly2(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly2(other).__sub__(self)

    def __mul__(self, other):
        other = _as_poly2(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                monom = (i1 + i2, j1 + j2)
                terms[monom] = terms.get(monom, 0) + c1 * c2
        return Poly2(terms)

    __rmul__ = __mul__

    def __neg__(self):
        return Poly2({m: -c for m, c in self.terms.items()})

    def __eq__(self, other):
        other = _as_poly2(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, a_val, b_val):
        """Substitute values for the symbols; works over any ring."""
        total = None
        for (i, j), coeff in self.terms.items():
            term = coeff
            for _ in range(i):
                term = term * a_val
            for _ in range(j):
                term = term * b_val
            total = term if total is None else total + term
        if total is None:
            return 0 * a_val  # zero of the target ring
        return total

    def __str__(self):
        return fmt_poly2(self)

    def __repr__(self):
        return f"Poly2({self.terms!r})"


ALPHA = Poly2.gen_a()
BETA = Poly2.gen_b()


def _as_poly2(x):
    if isinstance(x, Poly2):
        return x
    if isinstance(x, int):
        return Poly2.const(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# formatting / parsing
# ---------------------------------------------------------------------------

def _fmt_frac(x: Fraction) -> str:
    return str(x)


def fmt_gaussian(z: Gaussian) -> str:
    if z.im == 0:
        return _fmt_frac(z.re)
    if z.im == 1:
        im = "i"
    elif z.im == -1:
        im = "-i"
    else:
        im = f"{_fmt_frac(z.im)}i"
    if z.re == 0:
        return im
    sign = "+" if z.im > 0 else ""
    return f"{_fmt_frac(z.re)}{sign}{im}"


_GAUSS_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)?(?P<im>[+-](?:\d+(?:/\d+)?)?)?i$"
)


def parse_gaussian(s: str) -> Gaussian:
    s = s.strip().replace(" ", "")
    if not s.endswith("i"):
        return Gaussian(Fraction(s))
    if s in ("i", "+i"):
        return Gaussian(0, 1)
    if s == "-i":
        return Gaussian(0, -1)
    m = _GAUSS_RE.match(s)
    if m is None:
        raise ValueError(f"bad gaussian literal {s!r}")
    re_part = m.group("re")
    im_part = m.group("im")
    if im_part is None:
        # pure imaginary like "3i" or "-2/3i": re group captured the magnitude
        return Gaussian(0, Fraction(re_part))
    if im_part in ("+", "-"):
        im_part += "1"
    return Gaussian(Fraction(re_part or "0"), Fraction(im_part))


def fmt_root2(x: RootTwo) -> str:
    if x.b == 0:
        return _fmt_frac(x.a)
    if x.b == 1:
        rad = "√2"
    elif x.b == -1:
        rad = "-√2"
    else:
        rad = f"{_fmt_frac(x.b)}√2"
    if x.a == 0:
        return rad
    sign = "+" if x.b > 0 else ""
    return f"{_fmt_frac(x.a)}{sign}{rad}"


def parse_root2(s: str) -> RootTwo:
    s = s.strip().replace(" ", "").replace("sqrt(2)", "√2").replace("sqrt2", "√2")
    if "√2" not in s:
        return RootTwo(Fraction(s))
    head, _, _ = s.partition("√2")
    # split head into rational part and sqrt2 coefficient
    m = re.match(r"^(?P<a>[+-]?\d+(?:/\d+)?)?(?P<b>[+-](?:\d+(?:/\d+)?)?)?$", head)
    if m is None:
        raise ValueError(f"bad sqrt-2 literal {s!r}")
    a_part, b_part = m.group("a"), m.group("b")
    if b_part is None:
        # no separate rational part: "√2", "3√2", "-1/2√2"
        if a_part is None:
            return RootTwo(0, 1)
        return RootTwo(0, Fraction(a_part))
    if b_part in ("+", "-"):
        b_part += "1"
    return RootTwo(Fraction(a_part or "0"), Fraction(b_part))


def fmt_poly2(p: Poly2) -> str:
    if not p.terms:
        return "0"
    parts = []
    for (i, j) in sorted(p.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
        coeff = p.terms[(i, j)]
        mono = ""
        if i:
            mono += "a" if i == 1 else f"a^{i}"
        if j:
            mono += "b" if j == 1 else f"b^{j}"
        if not mono:
            text = str(abs(coeff))
        elif abs(coeff) == 1:
            text = mono
        else:
            text = f"{abs(coeff)}{mono}"
        parts.append(("-" if coeff < 0 else "+", text))
    sign0, text0 = parts[0]
    out = ("-" if sign0 == "-" else "") + text0
    for sign, text in parts[1:]:
        out += sign + text
    return out


_TERM_RE = re.compile(r"^(?P<coeff>\d+)?(?P<mono>(?:a(?:\^\d+)?)?(?:b(?:\^\d+)?)?)$")


def parse_poly2(s: str) -> Poly2:
    s = s.strip().replace(" ", "").replace("*", "")
    if s in ("0", "+0", "-0"):
        return Poly2()
    terms: dict = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM_RE.match(body)
        if m is None or (m.group("coeff") is None and not m.group("mono")):
            raise ValueError(f"bad polynomial term {body!r} in {s!r}")
        coeff = int(m.group("coeff") or "1")
        if sign == "-":
            coeff = -coeff
        i = j = 0
        mono = m.group("mono")
        ma = re.search(r"a(?:\^(\d+))?", mono)
        mb = re.search(r"b(?:\^(\d+))?", mono)
        if ma:
            i = int(ma.group(1) or "1")
        if mb:
            j = int(mb.group(1) or "1")
        terms[(i, j)] = terms.get((i, j), 0) + coeff
    return Poly2(terms)


def fmt_complex(z: complex) -> str:
    return f"{z.real!r}{'+' if z.imag >= 0 else ''}{z.imag!r}i"


def parse_complex(s: str) -> complex:
    s = s.strip().replace(" ", "")
    if s.endswith("i"):
        body = s[:-1]
        m = re.match(r"^(?P<re>[+-]?[\d.eE+-]*?)(?P<im>[+-][\d.eE]*)$", body)
        if m and m.group("re"):
            return complex(float(m.group("re")), float(m.group("im")))
        return complex(0.0, float(body))
    return complex(float(s), 0.0)


# ---------------------------------------------------------------------------
# ring descriptors
# ---------------------------------------------------------------------------

class Ring:
    """Descriptor tying together the constants and codecs of one scalar ring."""

    def __init__(self, name, zero, one, coerce, fmt, parse, eq=None):
        self.name = name
        self.zero = zero
        self.one = one
        self.coerce = coerce  # int -> ring element
        self.fmt = fmt
        self.parse = parse
        self.eq = eq if eq is not None else (lambda x, y: x == y)

    def __repr__(self):
        return f"Ring({self.name})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


def _complex_eq(x, y) -> bool:
    x, y = complex(x), complex(y)
    return abs(x.real - y.real) <= COMPLEX_TOL and abs(x.imag - y.imag) <= COMPLEX_TOL


ZZ = Ring("integer", 0, 1, int, str, lambda s: int(s.strip()))
QQ = Ring("rational", Fraction(0), Fraction(1), Fraction,
          str, lambda s: Fraction(s.strip()))
GAUSS = Ring("gaussian", Gaussian(0), Gaussian(1), Gaussian,
             fmt_gaussian, parse_gaussian)
ROOT2 = Ring("root2", RootTwo(0), RootTwo(1), RootTwo, fmt_root2, parse_root2)
POLY2 = Ring("poly2", Poly2(), Poly2.const(1), Poly2.const, fmt_poly2, parse_poly2)
CC = Ring("complex", 0j, 1 + 0j, complex, fmt_complex, parse_complex, eq=_complex_eq)

RINGS = {r.name: r for r in (ZZ, QQ, GAUSS, ROOT2, POLY2, CC)}


def ring_of(value) -> Ring:
    """Best-guess ring descriptor for a scalar value."""
    if isinstance(value, bool):
        raise TypeError("bool is not a ring scalar")
    if isinstance(value, int):
        return ZZ
    if isinstance(value, Fraction):
        return QQ
    if isinstance(value, Gaussian):
        return GAUSS
    if isinstance(value, RootTwo):
        return ROOT2
    if isinstance(value, Poly2):
        return POLY2
    if isinstance(value, complex):
        return CC
    raise TypeError(f"no ring registered for {type(value).__name__}")
