"""Exact polynomials in the two relationship weights ``x`` (marriage) and ``y`` (affair).

A :class:`WeightPoly` is a sparse map ``(i, j) -> c`` standing for ``c * x^i * y^j``.
Coefficients are exact: integral values are kept as ``int`` and everything
else as :class:`fractions.Fraction`, so the common integer case never pays
for rational arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Coeff = Union[int, Fraction]
Exponent = Tuple[int, int]

__all__ = [
    "WeightPoly",
    "PolyParseError",
    "wp_add",
    "wp_mul",
    "wp_scale",
    "wp_format",
    "wp_parse",
    "ZERO",
    "ONE",
    "X",
    "Y",
]


class PolyParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _normalize_coeff(c) -> Coeff:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class WeightPoly:
    """Immutable sparse polynomial in ``x`` and ``y`` with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Coeff] | Iterable[Tuple[Exponent, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exponent, Coeff] = {}
        for (i, j), c in items:
            if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {(i, j)}")
            acc[(i, j)] = acc.get((i, j), 0) + _normalize_coeff(c)
        self._terms = {e: _normalize_coeff(c) for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: Dict[Exponent, Coeff]) -> "WeightPoly":
        # caller guarantees: no zero coefficients, exponents valid, ints normalized
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Coeff) -> "WeightPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Coeff = 1) -> "WeightPoly":
        return cls({(i, j): c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, Coeff]:
        """A copy of the term map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Coeff]]:
        """Terms by ascending total degree, higher ``x``-degree first within a degree."""
        return iter(sorted(self._terms.items(), key=_display_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, i: int, j: int = 0) -> Coeff:
        return self._terms.get((i, j), 0)

    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == WeightPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"WeightPoly({wp_format(self)!r})"

    def __str__(self) -> str:
        return wp_format(self)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "WeightPoly") -> "WeightPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _normalize_coeff(v)
            else:
                out.pop(e, None)
        return WeightPoly._trusted(out)

    __radd__ = __add__

    def __neg__(self) -> "WeightPoly":
        return WeightPoly._trusted({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "WeightPoly") -> "WeightPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "WeightPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "WeightPoly") -> "WeightPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, WeightPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exponent, Coeff] = {}
        get = out.get
        for (i2, j2), c2 in b.items():
            for (i1, j1), c1 in a.items():
                e = (i1 + i2, j1 + j2)
                out[e] = get(e, 0) + c1 * c2
        return WeightPoly._trusted(
            {e: _normalize_coeff(c) for e, c in out.items() if c}
        )

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "WeightPoly":
        c = _normalize_coeff(c)
        if c == 0 or not self._terms:
            return ZERO
        if c == 1:
            return self
        return WeightPoly._trusted(
            {e: _normalize_coeff(v * c) for e, v in self._terms.items()}
        )

    def __pow__(self, k: int) -> "WeightPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitutions ------------------------------------------------------

    def swap_xy(self) -> "WeightPoly":
        """Exchange the roles of ``x`` and ``y``."""
        return WeightPoly._trusted({(j, i): c for (i, j), c in self._terms.items()})

    def specialize(self, x: Coeff | None = None, y: Coeff | None = None) -> "WeightPoly":
        """Substitute numbers for ``x`` and/or ``y``; unsubstituted variables stay symbolic."""
        out: Dict[Exponent, Coeff] = {}
        for (i, j), c in self._terms.items():
            if x is not None:
                c = c * x**i
                i = 0
            if y is not None:
                c = c * y**j
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return WeightPoly(out)

    def evaluate(self, x: Coeff, y: Coeff) -> Coeff:
        return _normalize_coeff(sum((c * x**i * y**j for (i, j), c in self._terms.items()), 0))


def _display_key(item) -> Tuple[int, int]:
    (i, j), _ = item
    return (i + j, -i)


def _coerce(p) -> WeightPoly:
    if isinstance(p, WeightPoly):
        return p
    if isinstance(p, (int, Fraction)) and not isinstance(p, bool):
        return WeightPoly.constant(p)
    return NotImplemented


ZERO = WeightPoly()
ONE = WeightPoly.constant(1)
X = WeightPoly.monomial(1, 0)
Y = WeightPoly.monomial(0, 1)


def wp_add(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return a + b


def wp_mul(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return a * b


def wp_scale(a: WeightPoly, c: Coeff) -> WeightPoly:
    return a.scale(c)


# -- text form --------------------------------------------------------------


def _format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _format_term(i: int, j: int, c: Coeff) -> str:
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    if not factors:
        return _format_coeff(c)
    if c == 1:
        return "*".join(factors)
    return "*".join([_format_coeff(c)] + factors)


def wp_format(a: WeightPoly) -> str:
    """Render as e.g. ``"1 + 4*x + 2*x^2"``; negative terms print as ``"- 3*x"``."""
    if not a._terms:
        return "0"
    parts = []
    for (i, j), c in a.items():
        body = _format_term(i, j, -c if c < 0 else c)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xy])|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PolyParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise PolyParseError(message, self.text, tok[2])

    def expect(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            self.fail(f"expected {want!r}, found {tok[1] or 'end of input'!r}")
        return self.take()

    def parse(self) -> WeightPoly:
        terms: Dict[Exponent, Coeff] = {}
        sign = self.leading_sign()
        while True:
            e, c = self.term()
            terms[e] = terms.get(e, 0) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = -1 if tok[1] == "-" else 1
                sign *= self.leading_sign()
            else:
                self.fail(f"expected '+', '-' or end of input, found {tok[1]!r}")
        return WeightPoly(terms)

    def leading_sign(self) -> int:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            return -1 if tok[1] == "-" else 1
        return 1

    def term(self) -> Tuple[Exponent, Coeff]:
        exps = {"x": 0, "y": 0}
        seen = set()
        tok = self.peek()
        coeff: Coeff = 1
        if tok[0] == "num":
            coeff = self.coefficient()
        elif tok[0] == "var":
            self.factor(exps, seen)
        else:
            self.fail(f"expected coefficient or variable, found {tok[1] or 'end of input'!r}")
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            self.factor(exps, seen)
        return (exps["x"], exps["y"]), coeff

    def coefficient(self) -> Coeff:
        num = int(self.take()[1])
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "/":
            self.take()
            den_tok = self.expect("num")
            den = int(den_tok[1])
            if den == 0:
                self.fail("zero denominator", den_tok)
            return _normalize_coeff(Fraction(num, den))
        return num

    def factor(self, exps: Dict[str, int], seen: set) -> None:
        tok = self.peek()
        if tok[0] != "var":
            self.fail(f"expected variable 'x' or 'y', found {tok[1] or 'end of input'!r}")
        self.take()
        if tok[1] in seen:
            self.fail(f"variable {tok[1]!r} repeated in one term", tok)
        seen.add(tok[1])
        exp = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] in "+-":
                self.fail("exponent must be a nonnegative integer", nxt)
            exp = int(self.expect("num")[1])
        exps[tok[1]] = exp


def wp_parse(text: str) -> WeightPoly:
    """Parse the text produced by :func:`wp_format` (whitespace insignificant)."""
    if not text.strip():
        raise PolyParseError("empty polynomial", text, 0)
    return _Parser(text).parse()
